#pragma once

// Arithmetic on the elementary abelian group Z_2^n.
//
// Group elements are n-bit labels with XOR as the group law. Binary strings
// are written most significant bit first, so "100" with n = 3 is label 4 and
// the i-th standard basis vector e_i (1-based) is 1 << (n - i).

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cubewalk {

using Label = std::uint32_t;

inline constexpr int kMaxDimension = 24;

/// Raised for malformed or out-of-range user input (CLI exit code 2).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void check_dimension(int n);

constexpr std::size_t group_order(int n) { return std::size_t{1} << n; }

constexpr int parity(Label x) { return __builtin_parity(x); }

class GroupElement {
 public:
  GroupElement(Label bits, int n);

  static GroupElement zero(int n) { return {0, n}; }
  static GroupElement all_ones(int n);
  /// e_i for 1 <= i <= n, leftmost coordinate first.
  static GroupElement basis(int n, int i);

  Label bits() const { return bits_; }
  int dim() const { return n_; }
  bool is_zero() const { return bits_ == 0; }
  int weight() const { return __builtin_popcount(bits_); }

  GroupElement operator^(const GroupElement& other) const;
  bool operator==(const GroupElement&) const = default;

 private:
  Label bits_;
  int n_;
};

/// popcount(a AND b) mod 2.
int dot_parity(const GroupElement& a, const GroupElement& b);

/// A loopless Cayley set in Z_2^n: distinct nonzero labels kept in ascending
/// order, together with d = |set| and u = XOR of all elements.
class ConnectionSet {
 public:
  /// Accepts labels in any order; rejects zero, duplicates and labels >= 2^n.
  ConnectionSet(int n, std::vector<Label> elements);

  static ConnectionSet empty(int n) { return ConnectionSet(n, {}); }
  /// Subset of the nonzero elements selected by `mask` (bit j <-> label j+1).
  static ConnectionSet from_mask(int n, std::uint64_t mask);
  /// Indicator of Q_n: the standard basis.
  static ConnectionSet hypercube(int n);

  int dim() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  int degree() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  std::span<const Label> elements() const { return elements_; }
  GroupElement u() const { return {u_, n_}; }
  bool contains(Label x) const;

  ConnectionSet without(Label x) const;
  ConnectionSet with(Label x) const;

  bool operator==(const ConnectionSet&) const = default;

 private:
  int n_;
  std::vector<Label> elements_;
  Label u_ = 0;
};

GroupElement xor_sum(const ConnectionSet& set);

GroupElement parse_element(std::string_view token, int n);
std::string format_element(Label bits, int n);
inline std::string format_element(const GroupElement& e) {
  return format_element(e.bits(), e.dim());
}

/// Comma-separated n-character binary strings or 0x-prefixed hex labels.
ConnectionSet parse_set(std::string_view text, int n);
/// Canonical form: ascending binary strings joined by commas.
std::string format_set(const ConnectionSet& set);

}  // namespace cubewalk
