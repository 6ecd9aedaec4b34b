#ifndef ACGB_PBW_HPP
#define ACGB_PBW_HPP

#include <map>
#include <vector>

#include "acgb/cpoly.hpp"
#include "acgb/detail/terms.hpp"
#include "acgb/free_groebner.hpp"
#include "acgb/lie.hpp"
#include "acgb/monomial.hpp"
#include "acgb/ncpoly.hpp"
#include "acgb/order.hpp"

namespace acgb {

// Element of an enveloping algebra written on the PBW basis: the exponent
// vector a stands for the ordered monomial X_1^{a_1}...X_n^{a_n}. The
// filtration degree is the total degree.
class PbwPoly {
 public:
  PbwPoly() = default;
  explicit PbwPoly(int nvars) : nvars_(nvars) {}

  static PbwPoly term(int nvars, const ExpVec& m, const Scalar& c) {
    PbwPoly p(nvars);
    p.add_term(m, c);
    return p;
  }
  static PbwPoly constant(int nvars, const Scalar& c) { return term(nvars, ExpVec(nvars), c); }
  static PbwPoly generator(int nvars, int i, const Scalar& c) {
    return term(nvars, ExpVec::var(nvars, i), c);
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
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

  const std::pair<const ExpVec, Scalar>& leading_term(const OrderSpec& o) const;
  const ExpVec& leading_monomial(const OrderSpec& o) const { return leading_term(o).first; }
  const Scalar& leading_coeff(const OrderSpec& o) const { return leading_term(o).second; }
  PbwPoly monic(const OrderSpec& o) const;

  PbwPoly operator-() const;
  PbwPoly operator+(const PbwPoly& o) const;
  PbwPoly operator-(const PbwPoly& o) const;
  PbwPoly operator*(const Scalar& s) const;

  bool operator==(const PbwPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

 private:
  int nvars_ = 0;
  std::map<ExpVec, Scalar> terms_;
};

// Associative product in U(g): straightens X_jX_i into X_iX_j + [X_j,X_i]
// until PBW-ordered. Monomial-times-generator products are memoized on the
// LieStructure; concurrent calls over the same structure are safe.
PbwPoly pbw_mul(const LieStructure& L, const PbwPoly& p, const PbwPoly& q);

// Left division remainder: no term divisible (as exponent tuples) by any
// leading monomial of the basis. Requires a graded order.
PbwPoly left_normal_form(const PbwPoly& f, const std::vector<PbwPoly>& basis,
                         const LieStructure& L, const OrderSpec& order);

// Two-sided Groebner basis of <gens>: left completion alternating with a
// right-multiplication closure sweep until stable; output reduced and monic.
std::vector<PbwPoly> two_sided_groebner(const LieStructure& L, std::vector<PbwPoly> gens,
                                        const OrderSpec& order,
                                        size_t term_cap = kDefaultTermCap);

std::vector<PbwPoly> pbw_reduce_basis(std::vector<PbwPoly> basis, const LieStructure& L,
                                      const OrderSpec& order);

// Principal symbol: the top filtration-degree part, X_i -> x_i. Throws on zero.
CPoly sigma(const PbwPoly& g);

// Canonical projection K<X> -> U(g): evaluate each word by multiplying its
// letters.
PbwPoly free_to_pbw(const LieStructure& L, const NcPoly& f);

// The ordered-word section X^a -> X_1...X_1X_2...X_n; a right inverse of
// free_to_pbw, every output word nondecreasing.
NcPoly pbw_section(const PbwPoly& p);

// Transport to a new generating set Y_r = sum_s m[r][s] X_s: returns the new
// structure constants and rewrites the given elements on the new PBW basis.
std::pair<LieStructure, std::vector<PbwPoly>> lie_change_basis(
    const LieStructure& L, const std::vector<PbwPoly>& elems,
    const std::vector<std::vector<Scalar>>& m);

}  // namespace acgb

#endif
