#ifndef ACGB_MONOMIAL_IDEAL_HPP
#define ACGB_MONOMIAL_IDEAL_HPP

#include <vector>

#include "acgb/monomial.hpp"

namespace acgb {

// Monomial ideal kept by its minimal generating set (no generator divides
// another).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int nvars) : nvars_(nvars) {}
  MonomialIdeal(int nvars, std::vector<ExpVec> gens);

  int nvars() const { return nvars_; }
  const std::vector<ExpVec>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  bool member(const ExpVec& m) const;

  // (L : m) = < g / gcd(g, m) >
  MonomialIdeal colon(const ExpVec& m) const;

 private:
  int nvars_ = 0;
  std::vector<ExpVec> gens_;
};

// Result of the U_L(m) computation: either the full finite set, or an
// "infinite" verdict with the variable that admits no pure power in the
// restricted colon ideal plus a cap-bounded sample of the infinite family.
struct USet {
  bool finite = true;
  std::vector<ExpVec> monomials;
  int infinite_var = -1;
};

// For m in L, m = x_{i1}...x_{ir} with i1 <= ... <= ir, the monomials u over
// the strictly in-between variables such that neither u*m/x_{i1} nor
// u*m/x_{ir} lies in L. Finiteness is decided exactly via the colon ideal
// (L : m/x_{i1}) + (L : m/x_{ir}) restricted to the in-between variables;
// degree_cap only bounds the sample reported for the infinite verdict.
// Throws std::invalid_argument when m is constant or m is not in L.
USet u_set(const MonomialIdeal& L, const ExpVec& m, int degree_cap = 24);

}  // namespace acgb

#endif
