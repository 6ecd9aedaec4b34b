#include "acgb/ncpoly.hpp"

namespace acgb {

const std::pair<const Word, Scalar>& NcPoly::leading_term(const OrderSpec& o) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  const std::pair<const Word, Scalar>* best = nullptr;
  for (const auto& t : terms_)
    if (!best || cmp_w(o, t.first, best->first) > 0) best = &t;
  return *best;
}

NcPoly NcPoly::monic(const OrderSpec& o) const { return *this * leading_coeff(o).inv(); }

NcPoly NcPoly::operator-() const {
  NcPoly r(nvars_);
  r.terms_ = detail::negate(terms_);
  return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  detail::add_all(r.terms_, o.terms_);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::operator*(const Scalar& s) const {
  NcPoly r(nvars_);
  r.terms_ = detail::scale(terms_, s);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  NcPoly r(nvars_);
  for (const auto& [u, c] : terms_)
    for (const auto& [v, d] : o.terms_) detail::add_term(r.terms_, u * v, c * d);
  return r;
}

NcPoly NcPoly::sandwich(const Word& u, const Word& v) const {
  NcPoly r(nvars_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(u * w * v, c);
  return r;
}

NcPoly lh(const NcPoly& f) {
  if (f.is_zero()) throw std::domain_error("leading homogeneous part of zero");
  const int d = f.deg();
  NcPoly r(f.nvars());
  for (const auto& [w, c] : f.terms())
    if (w.deg() == d) r.add_term(w, c);
  return r;
}

}  // namespace acgb
