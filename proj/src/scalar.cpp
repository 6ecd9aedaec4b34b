#include "acgb/scalar.hpp"

namespace acgb {

namespace {

unsigned long mod_reduce(long v, unsigned long p) {
  long r = v % (long)p;
  if (r < 0) r += (long)p;
  return (unsigned long)r;
}

unsigned long mod_mul(unsigned long a, unsigned long b, unsigned long p) {
  return (unsigned long)(((unsigned __int128)a * b) % p);
}

unsigned long mod_inv(unsigned long a, unsigned long p) {
  if (a == 0) throw std::domain_error("division by zero in GF(p)");
  // extended Euclid, signed intermediates
  long t = 0, new_t = 1;
  long r = (long)p, new_r = (long)a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("non-invertible residue (modulus not prime?)");
  if (t < 0) t += (long)p;
  return (unsigned long)t;
}

}  // namespace

std::string Field::str() const {
  if (is_rational()) return "QQ";
  return "GF " + std::to_string(p);
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

Scalar Scalar::of(const Field& f, long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    unsigned long n = mod_reduce(num, f.p);
    unsigned long d = mod_reduce(den, f.p);
    s.r_ = mod_mul(n, mod_inv(d, f.p), f.p);
  }
  return s;
}

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  s.q_ = std::move(q);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::zero(const Field& f) { return of(f, 0); }
Scalar Scalar::one(const Field& f) { return of(f, 1); }

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::logic_error("mixed coefficient fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = q_ + o.q_;
  } else {
    unsigned long v = r_ + o.r_;
    if (v >= field_.p) v -= field_.p;
    s.r_ = v;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mod_mul(r_, o.r_, field_.p);
  return s;
}

Scalar Scalar::inv() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    if (sgn(q_) == 0) throw std::domain_error("division by zero");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inv(r_, field_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inv();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace acgb
