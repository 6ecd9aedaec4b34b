#ifndef ACGB_LIFT_HPP
#define ACGB_LIFT_HPP

#include <vector>

#include "acgb/cpoly.hpp"
#include "acgb/monomial_ideal.hpp"
#include "acgb/ncpoly.hpp"
#include "acgb/pbw.hpp"

namespace acgb {

// Abelianization K<X> -> K[x], X_i -> x_i.
CPoly gamma(const NcPoly& f);

// Lexicographic splitting of gamma: each monomial goes to its letter-sorted
// word, extended linearly. gamma(delta(f)) == f.
NcPoly delta(const CPoly& f);

struct uset_infinite_error : std::runtime_error {
  uset_infinite_error(std::string msg, ExpVec m, int var)
      : std::runtime_error(std::move(msg)), monomial(std::move(m)), variable(var) {}
  ExpVec monomial;
  int variable;
};

struct symbol_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eisenbud-Peeva-Sturmfels lift of a reduced commutative basis: all
// commutators X_jX_i - X_iX_j together with delta(u * g) for g in the basis
// and u in U_L(LM(g)), L = <LM(basis)>. Throws uset_infinite_error when some
// U-set is infinite. For a homogeneous reduced Groebner basis the output is
// a Groebner basis of the gamma-preimage under the et order.
std::vector<NcPoly> eps_lift(const std::vector<CPoly>& reduced_basis, const OrderSpec& order,
                             const Field& field, int uset_degree_cap = 24);

// A reduced commutative symbol paired with a preimage in U(g); sigma of the
// preimage equals the symbol.
struct SymbolPair {
  CPoly symbol;
  PbwPoly preimage;
};

// Monic + minimalize + tail-reduce the symbols of a two-sided basis,
// mirroring every reduction step on the U(g) preimages so the pairing
// survives. For a reduced input basis this is a pass-through.
std::vector<SymbolPair> reduce_symbols_with_preimages(const LieStructure& L,
                                                      const std::vector<PbwPoly>& basis,
                                                      const OrderSpec& order);

// Attach the lower-order tails: each commutator picks up the bracket linear
// form, and each delta(u*g) entry becomes pbw_section(u * preimage). The
// leading homogeneous part of each output element is exactly the matching
// eps_lift element, and the output is a Groebner basis of the full ideal.
std::vector<NcPoly> filtered_lift(const LieStructure& L, const std::vector<SymbolPair>& pairs,
                                  const OrderSpec& order, int uset_degree_cap = 24);

}  // namespace acgb

#endif
