#ifndef ACGB_CPOLY_HPP
#define ACGB_CPOLY_HPP

#include <map>
#include <vector>

#include "acgb/detail/terms.hpp"
#include "acgb/monomial.hpp"
#include "acgb/order.hpp"

namespace acgb {

// Sparse commutative polynomial. Terms are stored under the container order
// of ExpVec; ordering-sensitive queries take the OrderSpec at the call site.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(int nvars) : nvars_(nvars) {}

  static CPoly term(int nvars, const ExpVec& m, const Scalar& c) {
    CPoly p(nvars);
    p.add_term(m, c);
    return p;
  }
  static CPoly constant(int nvars, const Scalar& c) { return term(nvars, ExpVec(nvars), c); }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return (int)terms_.size(); }
  const std::map<ExpVec, Scalar>& terms() const { return terms_; }

  void add_term(const ExpVec& m, const Scalar& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
    detail::add_term(terms_, m, c);
  }

  int deg() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.deg();
    for (const auto& [m, c] : terms_)
      if (m.deg() != d) return false;
    return true;
  }

  const std::pair<const ExpVec, Scalar>& leading_term(const OrderSpec& o) const;
  const ExpVec& leading_monomial(const OrderSpec& o) const { return leading_term(o).first; }
  const Scalar& leading_coeff(const OrderSpec& o) const { return leading_term(o).second; }
  CPoly monic(const OrderSpec& o) const;

  CPoly operator-() const;
  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator*(const Scalar& s) const;
  CPoly mul_mono(const ExpVec& m, const Scalar& c) const;

  bool operator==(const CPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_ = 0;
  std::map<ExpVec, Scalar> terms_;
};

}  // namespace acgb

#endif
