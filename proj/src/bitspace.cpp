#include "cubewalk/bitspace.hpp"

#include <algorithm>
#include <charconv>

namespace cubewalk {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw InvalidInput("dimension n must lie in [1, " +
                       std::to_string(kMaxDimension) + "], got " +
                       std::to_string(n));
  }
}

GroupElement::GroupElement(Label bits, int n) : bits_(bits), n_(n) {
  check_dimension(n);
  if (bits >= group_order(n)) {
    throw InvalidInput("label " + std::to_string(bits) + " does not fit in " +
                       std::to_string(n) + " bits");
  }
}

GroupElement GroupElement::all_ones(int n) {
  check_dimension(n);
  return {static_cast<Label>(group_order(n) - 1), n};
}

GroupElement GroupElement::basis(int n, int i) {
  check_dimension(n);
  if (i < 1 || i > n) {
    throw InvalidInput("basis index out of range");
  }
  return {Label{1} << (n - i), n};
}

GroupElement GroupElement::operator^(const GroupElement& other) const {
  if (n_ != other.n_) {
    throw InvalidInput("dimension mismatch in group operation");
  }
  return {bits_ ^ other.bits_, n_};
}

int dot_parity(const GroupElement& a, const GroupElement& b) {
  if (a.dim() != b.dim()) {
    throw InvalidInput("dimension mismatch in dot_parity");
  }
  return parity(a.bits() & b.bits());
}

ConnectionSet::ConnectionSet(int n, std::vector<Label> elements)
    : n_(n), elements_(std::move(elements)) {
  check_dimension(n);
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Label x = elements_[i];
    if (x == 0) {
      throw InvalidInput("connection set may not contain the zero element");
    }
    if (x >= group_order(n)) {
      throw InvalidInput("element " + std::to_string(x) + " exceeds 2^" +
                         std::to_string(n) + " - 1");
    }
    if (i > 0 && elements_[i - 1] == x) {
      throw InvalidInput("duplicate element " + format_element(x, n));
    }
    u_ ^= x;
  }
}

ConnectionSet ConnectionSet::from_mask(int n, std::uint64_t mask) {
  check_dimension(n);
  std::vector<Label> elems;
  while (mask != 0) {
    const int j = __builtin_ctzll(mask);
    elems.push_back(static_cast<Label>(j + 1));
    mask &= mask - 1;
  }
  return ConnectionSet(n, std::move(elems));
}

ConnectionSet ConnectionSet::hypercube(int n) {
  check_dimension(n);
  std::vector<Label> elems;
  for (int i = 0; i < n; ++i) elems.push_back(Label{1} << i);
  return ConnectionSet(n, std::move(elems));
}

bool ConnectionSet::contains(Label x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

ConnectionSet ConnectionSet::without(Label x) const {
  std::vector<Label> elems;
  elems.reserve(elements_.size());
  for (Label e : elements_) {
    if (e != x) elems.push_back(e);
  }
  return ConnectionSet(n_, std::move(elems));
}

ConnectionSet ConnectionSet::with(Label x) const {
  if (contains(x)) return *this;
  std::vector<Label> elems(elements_.begin(), elements_.end());
  elems.push_back(x);
  return ConnectionSet(n_, std::move(elems));
}

GroupElement xor_sum(const ConnectionSet& set) { return set.u(); }

GroupElement parse_element(std::string_view token, int n) {
  check_dimension(n);
  const auto first = token.find_first_not_of(" \t");
  const auto last = token.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw InvalidInput("empty element token");
  }
  token = token.substr(first, last - first + 1);

  Label value = 0;
  if (token.size() > 2 && token[0] == '0' && (token[1] == 'x' || token[1] == 'X')) {
    const auto digits = token.substr(2);
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw InvalidInput("malformed hex label '" + std::string(token) + "'");
    }
  } else {
    if (token.size() != static_cast<std::size_t>(n)) {
      throw InvalidInput("binary label '" + std::string(token) + "' must have " +
                         std::to_string(n) + " characters");
    }
    for (char c : token) {
      if (c != '0' && c != '1') {
        throw InvalidInput("malformed binary label '" + std::string(token) + "'");
      }
      value = (value << 1) | static_cast<Label>(c - '0');
    }
  }
  if (value >= group_order(n)) {
    throw InvalidInput("label '" + std::string(token) + "' exceeds 2^" +
                       std::to_string(n) + " - 1");
  }
  return {value, n};
}

std::string format_element(Label bits, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((bits >> (n - 1 - i)) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

ConnectionSet parse_set(std::string_view text, int n) {
  std::vector<Label> elems;
  const auto blank = text.find_first_not_of(" \t");
  if (blank == std::string_view::npos) return ConnectionSet::empty(n);
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = text.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start);
    const auto e = parse_element(token, n);
    if (e.is_zero()) {
      throw InvalidInput("connection set may not contain the zero element");
    }
    elems.push_back(e.bits());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ConnectionSet(n, std::move(elems));
}

std::string format_set(const ConnectionSet& set) {
  std::string out;
  for (Label x : set.elements()) {
    if (!out.empty()) out += ',';
    out += format_element(x, set.dim());
  }
  return out;
}

}  // namespace cubewalk
