#include "cubewalk/rational.hpp"

#include <charconv>
#include <numbers>
#include <numeric>

#include "cubewalk/bitspace.hpp"

namespace cubewalk {

RationalAngle::RationalAngle(std::int64_t p, std::int64_t q) {
  if (q < 1) throw InvalidInput("angle denominator must be positive");
  if (p < 0) throw InvalidInput("angle numerator must be nonnegative");
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("malformed integer '" + std::string(s) + "' in angle");
  }
  return value;
}

}  // namespace

RationalAngle RationalAngle::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_int(text), 1};
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

double RationalAngle::radians() const {
  return std::numbers::pi * static_cast<double>(p_) / static_cast<double>(q_);
}

std::string RationalAngle::to_string() const {
  if (p_ == 0) return "0";
  std::string out = p_ == 1 ? "pi" : std::to_string(p_) + "*pi";
  if (q_ != 1) out += "/" + std::to_string(q_);
  return out;
}

bool RationalAngle::operator<(const RationalAngle& other) const {
  return static_cast<__int128>(p_) * other.q_ < static_cast<__int128>(other.p_) * q_;
}

GaussianInteger GaussianInteger::unit_power_minus_i(std::int64_t k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, -1};
    case 2:
      return {-1, 0};
    default:
      return {0, 1};
  }
}

std::string to_string(const GaussianInteger& z) {
  std::string out = std::to_string(z.re);
  out += z.im < 0 ? "-" : "+";
  out += std::to_string(z.im < 0 ? -z.im : z.im);
  out += "i";
  return out;
}

}  // namespace cubewalk
