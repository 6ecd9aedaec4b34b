#include "acgb/cpoly.hpp"

namespace acgb {

const std::pair<const ExpVec, Scalar>& CPoly::leading_term(const OrderSpec& o) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  const std::pair<const ExpVec, Scalar>* best = nullptr;
  for (const auto& t : terms_)
    if (!best || cmp_c(o, t.first, best->first) > 0) best = &t;
  return *best;
}

CPoly CPoly::monic(const OrderSpec& o) const {
  const Scalar& lc = leading_coeff(o);
  return *this * lc.inv();
}

CPoly CPoly::operator-() const {
  CPoly r(nvars_);
  r.terms_ = detail::negate(terms_);
  return r;
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r = *this;
  detail::add_all(r.terms_, o.terms_);
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const { return *this + (-o); }

CPoly CPoly::operator*(const Scalar& s) const {
  CPoly r(nvars_);
  r.terms_ = detail::scale(terms_, s);
  return r;
}

CPoly CPoly::mul_mono(const ExpVec& m, const Scalar& c) const {
  CPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k * m, v * c);
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly r(nvars_);
  for (const auto& [m, c] : o.terms_) detail::add_all(r.terms_, mul_mono(m, c).terms_);
  return r;
}

}  // namespace acgb
