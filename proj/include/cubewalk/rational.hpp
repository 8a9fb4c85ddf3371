#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace cubewalk {

/// An evolution time t = (p/q)*pi with p >= 0, q >= 1, gcd(p, q) = 1.
class RationalAngle {
 public:
  RationalAngle() = default;
  /// Reduces to lowest terms; throws InvalidInput if p < 0 or q < 1.
  RationalAngle(std::int64_t p, std::int64_t q);

  static RationalAngle pi() { return {1, 1}; }
  static RationalAngle half_pi() { return {1, 2}; }
  /// Parses "p/q" or "p", both in units of pi.
  static RationalAngle parse(std::string_view text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_zero() const { return p_ == 0; }
  double radians() const;

  /// "0", "pi", "pi/2", "3*pi/4", "2*pi".
  std::string to_string() const;

  bool operator==(const RationalAngle&) const = default;
  /// Ordering by value.
  bool operator<(const RationalAngle& other) const;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

/// Exact re + im*i over 64-bit integers.
struct GaussianInteger {
  std::int64_t re = 0;
  std::int64_t im = 0;

  /// (-i)^k for any integer k.
  static GaussianInteger unit_power_minus_i(std::int64_t k);

  std::int64_t norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  GaussianInteger& operator+=(const GaussianInteger& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInteger& operator-=(const GaussianInteger& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianInteger operator+(GaussianInteger a, const GaussianInteger& b) { return a += b; }
  friend GaussianInteger operator-(GaussianInteger a, const GaussianInteger& b) { return a -= b; }
  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInteger operator*(std::int64_t s, const GaussianInteger& a) {
    return {s * a.re, s * a.im};
  }
  bool operator==(const GaussianInteger&) const = default;
};

std::string to_string(const GaussianInteger& z);

}  // namespace cubewalk
