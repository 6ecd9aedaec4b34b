#include "acgb/lift.hpp"

#include <algorithm>

namespace acgb {

CPoly gamma(const NcPoly& f) {
  CPoly r(f.nvars());
  for (const auto& [w, c] : f.terms()) r.add_term(w.abelianization(f.nvars()), c);
  return r;
}

NcPoly delta(const CPoly& f) {
  NcPoly r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> letters;
    for (int v = 0; v < f.nvars(); ++v)
      for (int k = 0; k < m[v]; ++k) letters.push_back(v);
    r.add_term(Word(std::move(letters)), c);
  }
  return r;
}

namespace {

void require_identity_ranks(const OrderSpec& order) {
  if (!order.identity_ranks())
    throw std::invalid_argument(
        "the lift machinery needs the declared variable order to be the rank order");
}

std::vector<NcPoly> commutator_words(int n, const Field& field) {
  std::vector<NcPoly> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NcPoly c = NcPoly::term(n, Word::letter(j) * Word::letter(i), Scalar::one(field)) -
                 NcPoly::term(n, Word::letter(i) * Word::letter(j), Scalar::one(field));
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace

std::vector<NcPoly> eps_lift(const std::vector<CPoly>& reduced_basis, const OrderSpec& order,
                             const Field& field, int uset_degree_cap) {
  require_identity_ranks(order);
  const int n = order.nvars();

  std::vector<ExpVec> lms;
  for (const CPoly& g : reduced_basis) lms.push_back(g.leading_monomial(order));
  for (const ExpVec& lm : lms)
    if (lm.is_unit())  // unit ideal: the preimage is everything
      return {NcPoly::constant(n, Scalar::one(field))};
  const MonomialIdeal L(n, lms);

  std::vector<NcPoly> out = commutator_words(n, field);
  for (size_t k = 0; k < reduced_basis.size(); ++k) {
    const CPoly& g = reduced_basis[k];
    USet u = u_set(L, g.leading_monomial(order), uset_degree_cap);
    if (!u.finite)
      throw uset_infinite_error("U-set of generator " + std::to_string(k + 1) + " is infinite",
                                g.leading_monomial(order), u.infinite_var);
    std::sort(u.monomials.begin(), u.monomials.end(), [&](const ExpVec& a, const ExpVec& b) {
      if (a.deg() != b.deg()) return a.deg() < b.deg();
      return cmp_c(order, a, b) < 0;
    });
    for (const ExpVec& m : u.monomials)
      out.push_back(delta(g.mul_mono(m, Scalar::one(field))));
  }
  return out;
}

std::vector<SymbolPair> reduce_symbols_with_preimages(const LieStructure& L,
                                                      const std::vector<PbwPoly>& basis,
                                                      const OrderSpec& order) {
  std::vector<SymbolPair> pairs;
  for (const PbwPoly& g : basis) {
    if (g.is_zero()) continue;
    const Scalar inv = g.leading_coeff(order).inv();
    pairs.push_back({sigma(g) * inv, g * inv});
  }

  // minimalize on the commutative leading monomials
  std::vector<ExpVec> lms;
  for (const SymbolPair& p : pairs) lms.push_back(p.symbol.leading_monomial(order));
  std::vector<SymbolPair> minimal;
  for (size_t i = 0; i < pairs.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < pairs.size() && !drop; ++j) {
      if (i == j) continue;
      if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(std::move(pairs[i]));
  }

  // tail-reduce the symbols, mirroring each step on the preimages
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      const ExpVec& lmi = minimal[i].symbol.leading_monomial(order);
      for (size_t j = 0; j < minimal.size(); ++j) {
        if (i == j) continue;
        const ExpVec& lmj = minimal[j].symbol.leading_monomial(order);
        const ExpVec* hit = nullptr;
        for (const auto& [m, c] : minimal[i].symbol.terms())
          if (!(m == lmi) && lmj.divides(m)) {
            hit = &m;
            break;
          }
        if (!hit) continue;
        const Scalar c = minimal[i].symbol.terms().at(*hit);
        const ExpVec q = *hit / lmj;
        minimal[i].symbol = minimal[i].symbol - minimal[j].symbol.mul_mono(q, c);
        PbwPoly mono = PbwPoly::term(L.dim(), q, c);
        minimal[i].preimage = minimal[i].preimage - pbw_mul(L, mono, minimal[j].preimage);
        changed = true;
        break;  // the term table moved; rescan from fresh references
      }
      if (changed) break;
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const SymbolPair& a, const SymbolPair& b) {
    return cmp_c(order, a.symbol.leading_monomial(order), b.symbol.leading_monomial(order)) < 0;
  });
  return minimal;
}

std::vector<NcPoly> filtered_lift(const LieStructure& L, const std::vector<SymbolPair>& pairs,
                                  const OrderSpec& order, int uset_degree_cap) {
  require_identity_ranks(order);
  if (!order.graded()) throw std::invalid_argument("filtered lift needs a graded order");
  const int n = L.dim();
  const Field& field = L.field();

  for (size_t k = 0; k < pairs.size(); ++k)
    if (!(sigma(pairs[k].preimage) == pairs[k].symbol))
      throw symbol_mismatch_error("symbol of preimage " + std::to_string(k + 1) +
                                  " does not match its paired basis element");

  for (const SymbolPair& p : pairs)
    if (p.symbol.leading_monomial(order).is_unit())
      return {NcPoly::constant(n, Scalar::one(field))};

  std::vector<NcPoly> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NcPoly c = NcPoly::term(n, Word::letter(j) * Word::letter(i), Scalar::one(field)) -
                 NcPoly::term(n, Word::letter(i) * Word::letter(j), Scalar::one(field));
      const auto form = L.bracket(j, i);
      for (int t = 0; t < n; ++t)
        if (!form[t].is_zero()) c.add_term(Word::letter(t), -form[t]);
      out.push_back(std::move(c));
    }

  std::vector<ExpVec> lms;
  for (const SymbolPair& p : pairs) lms.push_back(p.symbol.leading_monomial(order));
  const MonomialIdeal ideal(n, lms);

  for (size_t k = 0; k < pairs.size(); ++k) {
    USet u = u_set(ideal, pairs[k].symbol.leading_monomial(order), uset_degree_cap);
    if (!u.finite)
      throw uset_infinite_error("U-set of generator " + std::to_string(k + 1) + " is infinite",
                                pairs[k].symbol.leading_monomial(order), u.infinite_var);
    std::sort(u.monomials.begin(), u.monomials.end(), [&](const ExpVec& a, const ExpVec& b) {
      if (a.deg() != b.deg()) return a.deg() < b.deg();
      return cmp_c(order, a, b) < 0;
    });
    for (const ExpVec& m : u.monomials) {
      PbwPoly mono = PbwPoly::term(n, m, Scalar::one(field));
      out.push_back(pbw_section(pbw_mul(L, mono, pairs[k].preimage)));
    }
  }
  return out;
}

}  // namespace acgb
