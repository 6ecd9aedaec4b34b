#ifndef ACGB_SCALAR_HPP
#define ACGB_SCALAR_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace acgb {

// Coefficient field: the rationals by default, or Z/p for an odd-ball run.
// p == 0 means QQ.
struct Field {
  unsigned long p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string str() const;
};

// Exact field element. Rational values are canonical (gcd(|num|,den)=1,
// den>0, which mpq maintains after canonicalize); prime-field values live
// in [0, p). Division by zero throws, it is never a value.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar of(const Field& f, long num, long den = 1);
  static Scalar from_mpq(mpq_class q);
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // payload access; rat() is only meaningful over QQ, residue() over GF(p)
  const mpq_class& rat() const { return q_; }
  unsigned long residue() const { return r_; }

  std::string str() const;

 private:
  Field field_;
  mpq_class q_;
  unsigned long r_ = 0;

  void check_same_field(const Scalar& o) const;
};

bool is_prime(unsigned long p);

}  // namespace acgb

#endif
