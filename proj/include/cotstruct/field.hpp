#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cotstruct {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: F_p for a prime p, or the rationals (characteristic 0).
class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  std::string str() const;
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// Exact field element. Immutable value; no floating point anywhere.
/// For F_p the representative is always reduced to [0, p).
class Scalar {
 public:
  Scalar() : p_(0), v_(0) {}  // rational zero

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long n);
  static Scalar of_rational(Rational q);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text form: F_p as a decimal in [0,p); rationals as "n" or "n/d".
  std::string str() const;
  static Scalar parse(const Field& f, const std::string& text);

 private:
  Scalar(std::uint32_t p, std::uint32_t v) : p_(p), v_(v) {}
  void require_same_field(const Scalar& o) const;

  std::uint32_t p_;  // 0 = rational
  std::uint32_t v_;  // payload when p_ > 0
  Rational q_;       // payload when p_ == 0
};

}  // namespace cotstruct
