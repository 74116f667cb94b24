#include "cotstruct/field.hpp"

namespace cotstruct {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// modular inverse via extended Euclid; v in (0, p)
std::uint32_t mod_inverse(std::uint32_t v, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = v;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p));
  if (p >= (1u << 31)) throw std::invalid_argument("prime too large");
  return Field(p);
}

std::string Field::str() const { return is_rational() ? "rational" : std::to_string(p_); }

Field Field::parse(const std::string& text) {
  if (text == "rational" || text == "Q" || text == "0") return rationals();
  std::size_t pos = 0;
  unsigned long p = std::stoul(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("bad field spec: " + text);
  return prime(static_cast<std::uint32_t>(p));
}

Scalar Scalar::zero(const Field& f) { return f.is_rational() ? Scalar() : Scalar(f.characteristic(), 0); }

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long n) {
  if (f.is_rational()) return of_rational(Rational(n));
  std::int64_t p = f.characteristic();
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return Scalar(f.characteristic(), static_cast<std::uint32_t>(r));
}

Scalar Scalar::of_rational(Rational q) {
  Scalar s;
  s.q_ = std::move(q);
  return s;
}

Field Scalar::field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

bool Scalar::is_zero() const { return p_ ? v_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return p_ ? v_ == 1 : q_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (p_) {
    std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
    if (s >= p_) s -= p_;
    return Scalar(p_, static_cast<std::uint32_t>(s));
  }
  return of_rational(q_ + o.q_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (p_) {
    std::uint64_t s = static_cast<std::uint64_t>(v_) + p_ - o.v_;
    if (s >= p_) s -= p_;
    return Scalar(p_, static_cast<std::uint32_t>(s));
  }
  return of_rational(q_ - o.q_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (p_) return Scalar(p_, static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_));
  return of_rational(q_ * o.q_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_) return Scalar(p_, v_ ? p_ - v_ : 0);
  return of_rational(-q_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) return Scalar(p_, mod_inverse(v_, p_));
  return of_rational(Rational(1) / q_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ ? a.v_ == b.v_ : a.q_ == b.q_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(v_);
  return q_.str();
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (f.is_rational()) return of_rational(Rational(text));
  // integer, possibly negative, reduced mod p
  std::size_t pos = 0;
  long long n = std::stoll(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("bad scalar: " + text);
  return of_int(f, n);
}

}  // namespace cotstruct
