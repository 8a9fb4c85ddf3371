#pragma once

// Fourier analysis on Z_2^n. The eigenvalue of a cubelike graph at character
// v is lambda_v = sum_{w in set} (-1)^{w.v}, i.e. the unnormalized
// Walsh-Hadamard transform of the set's indicator vector, in natural binary
// order.

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubewalk/bitspace.hpp"

namespace cubewalk {

bool is_power_of_two(std::size_t len);

/// In-place unnormalized butterfly. Works for any ring-like T (integers,
/// complex). Throws InvalidInput unless the length is a power of two.
template <typename T>
void wht_inplace(std::span<T> data) {
  if (!is_power_of_two(data.size())) {
    throw InvalidInput("Walsh-Hadamard length must be a power of two");
  }
  for (std::size_t half = 1; half < data.size(); half <<= 1) {
    for (std::size_t block = 0; block < data.size(); block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const T x = data[i];
        const T y = data[i + half];
        data[i] = x + y;
        data[i + half] = x - y;
      }
    }
  }
}

std::vector<std::int64_t> wht(std::span<const std::int64_t> data);

class Spectrum {
 public:
  Spectrum(int n, int d, std::vector<std::int64_t> values);

  int dim() const { return n_; }
  int degree() const { return d_; }
  std::span<const std::int64_t> values() const { return values_; }
  std::int64_t operator[](Label v) const { return values_[v]; }
  std::size_t size() const { return values_.size(); }

 private:
  int n_;
  int d_;
  std::vector<std::int64_t> values_;
};

Spectrum spectrum(const ConnectionSet& set);

/// Which eigenvalue congruence law applies to a set.
enum class CongruenceCase {
  kZeroSum,       // u = 0: lambda = d - 4k
  kSumOutside,    // u != 0, u not in set: d - 4k, or d - 4k + 2 when u.v odd
  kSumInside,     // u in set: d - 4k, or d - 4k - 2 when u.v odd
};

std::string to_string(CongruenceCase c);

struct CongruenceEntry {
  Label v = 0;
  std::int64_t lambda = 0;
  std::int64_t k = 0;
  /// Offset c in lambda = d - 4k + c; one of 0, +2, -2.
  int offset = 0;
  bool pass = false;
};

struct CongruenceReport {
  CongruenceCase kind = CongruenceCase::kZeroSum;
  std::int64_t k_max = 0;
  std::vector<CongruenceEntry> entries;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Label for the congruence class column: "d", "d+2" or "d-2".
std::string congruence_class_label(int offset);

CongruenceReport classify_congruences(const Spectrum& spec, const GroupElement& u,
                                      bool u_in_set);
CongruenceReport classify_congruences(const ConnectionSet& set);

}  // namespace cubewalk
