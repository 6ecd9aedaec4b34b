#ifndef ACGB_NCPOLY_HPP
#define ACGB_NCPOLY_HPP

#include <map>

#include "acgb/detail/terms.hpp"
#include "acgb/monomial.hpp"
#include "acgb/order.hpp"

namespace acgb {

// Sparse polynomial in the free associative algebra: words over a fixed
// alphabet with nonzero coefficients.
class NcPoly {
 public:
  NcPoly() = default;
  explicit NcPoly(int nvars) : nvars_(nvars) {}

  static NcPoly term(int nvars, const Word& w, const Scalar& c) {
    NcPoly p(nvars);
    p.add_term(w, c);
    return p;
  }
  static NcPoly constant(int nvars, const Scalar& c) { return term(nvars, Word(), c); }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int nterms() const { return (int)terms_.size(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  void add_term(const Word& w, const Scalar& c) {
    for (int i : w.l)
      if (i < 0 || i >= nvars_) throw std::out_of_range("letter index out of range");
    detail::add_term(terms_, w, c);
  }

  int deg() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, w.deg());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.deg();
    for (const auto& [w, c] : terms_)
      if (w.deg() != d) return false;
    return true;
  }

  const std::pair<const Word, Scalar>& leading_term(const OrderSpec& o) const;
  const Word& leading_word(const OrderSpec& o) const { return leading_term(o).first; }
  const Scalar& leading_coeff(const OrderSpec& o) const { return leading_term(o).second; }
  NcPoly monic(const OrderSpec& o) const;

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;  // free (concatenation) product
  NcPoly operator*(const Scalar& s) const;
  NcPoly sandwich(const Word& u, const Word& v) const;  // u * this * v

  bool operator==(const NcPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_ = 0;
  std::map<Word, Scalar> terms_;
};

// Top-degree homogeneous component. Throws std::domain_error on zero input.
NcPoly lh(const NcPoly& f);

}  // namespace acgb

#endif
