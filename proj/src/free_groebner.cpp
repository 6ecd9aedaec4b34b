#include "acgb/free_groebner.hpp"

#include <algorithm>

namespace acgb {

namespace {

bool occurs_at(const Word& w, const Word& sub, int off) {
  if (off < 0 || off + sub.deg() > w.deg()) return false;
  for (int k = 0; k < sub.deg(); ++k)
    if (w[off + k] != sub[k]) return false;
  return true;
}

void check_basis(const std::vector<NcPoly>& basis, const OrderSpec& order) {
  if (!order.graded()) throw std::invalid_argument("free-algebra rewriting needs a graded order");
  for (const NcPoly& g : basis)
    if (g.is_zero()) throw std::invalid_argument("zero basis polynomial");
}

}  // namespace

NcPoly nc_normal_form(const NcPoly& f, const std::vector<NcPoly>& basis, const OrderSpec& order,
                      size_t term_cap) {
  check_basis(basis, order);
  std::vector<NcPoly> monic;
  std::vector<Word> lead;
  monic.reserve(basis.size());
  for (const NcPoly& g : basis) {
    monic.push_back(g.monic(order));
    lead.push_back(monic.back().leading_word(order));
  }

  // a unit in the basis collapses everything
  for (const Word& lw : lead)
    if (lw.empty()) return NcPoly(f.nvars());

  NcPoly rem = f;
  for (;;) {
    // largest reducible term; within it the leftmost offset, smallest rule
    const Word* best = nullptr;
    Scalar coeff;
    size_t rule = 0;
    int off = 0;
    for (const auto& [word, c] : rem.terms()) {
      if (best && cmp_w(order, word, *best) <= 0) continue;
      int o_found = -1;
      size_t r_found = 0;
      for (int o = 0; o <= word.deg() && o_found < 0; ++o)
        for (size_t r = 0; r < lead.size(); ++r)
          if (occurs_at(word, lead[r], o)) {
            o_found = o;
            r_found = r;
            break;
          }
      if (o_found >= 0) {
        best = &word;
        coeff = c;
        rule = r_found;
        off = o_found;
      }
    }
    if (!best) break;
    const Word pre = best->sub(0, off);
    const Word suf = best->sub(off + lead[rule].deg(), best->deg() - off - lead[rule].deg());
    rem = rem - monic[rule].sandwich(pre, suf) * coeff;
    if (rem.terms().size() > term_cap) throw resource_error("term cap exceeded in normal form");
  }
  return rem;
}

std::vector<Ambiguity> ambiguities(const std::vector<NcPoly>& basis, const OrderSpec& order) {
  check_basis(basis, order);
  std::vector<Word> lead;
  lead.reserve(basis.size());
  for (const NcPoly& g : basis) lead.push_back(g.leading_word(order));

  std::vector<Ambiguity> out;
  for (size_t i = 0; i < lead.size(); ++i) {
    for (size_t j = 0; j < lead.size(); ++j) {
      const Word& wi = lead[i];
      const Word& wj = lead[j];
      if (wi.empty() || wj.empty()) continue;
      if (i != j && wj.deg() <= wi.deg()) {
        // inclusions of w_j inside w_i; equal words only once (i < j)
        if (wj.deg() < wi.deg() || i < j)
          for (int o = 0; o + wj.deg() <= wi.deg(); ++o)
            if (occurs_at(wi, wj, o))
              out.push_back({i, j, Ambiguity::Kind::inclusion, wi, 0, o});
      }
      // proper overlaps: suffix of w_i of length k = prefix of w_j
      for (int k = 1; k < std::min(wi.deg(), wj.deg()); ++k) {
        bool match = true;
        for (int t = 0; t < k && match; ++t)
          if (wi[wi.deg() - k + t] != wj[t]) match = false;
        if (!match) continue;
        Word sup = wi * wj.sub(k, wj.deg() - k);
        out.push_back({i, j, Ambiguity::Kind::overlap, std::move(sup), 0, wi.deg() - k});
      }
    }
  }
  return out;
}

namespace {

// one-step reduct of the superposition word by rule r at offset o
NcPoly reduct(const Ambiguity& a, size_t r, int off, const std::vector<NcPoly>& monic,
              const OrderSpec& order) {
  const Word& lw = monic[r].leading_word(order);
  const Word pre = a.word.sub(0, off);
  const Word suf = a.word.sub(off + lw.deg(), a.word.deg() - off - lw.deg());
  NcPoly head = NcPoly::term(monic[r].nvars(), lw, monic[r].leading_coeff(order));
  return (head - monic[r]).sandwich(pre, suf);
}

}  // namespace

GroebnerCheck nc_is_groebner(const std::vector<NcPoly>& basis, const OrderSpec& order,
                             size_t term_cap) {
  check_basis(basis, order);
  std::vector<NcPoly> monic;
  monic.reserve(basis.size());
  for (const NcPoly& g : basis) monic.push_back(g.monic(order));

  GroebnerCheck res;
  for (const Ambiguity& a : ambiguities(basis, order)) {
    NcPoly left = nc_normal_form(reduct(a, a.i, a.off_i, monic, order), basis, order, term_cap);
    NcPoly right = nc_normal_form(reduct(a, a.j, a.off_j, monic, order), basis, order, term_cap);
    NcPoly diff = left - right;
    if (!diff.is_zero()) {
      res.ok = false;
      res.witness = a;
      res.left_nf = std::move(left);
      res.right_nf = std::move(right);
      res.difference = std::move(diff);
      return res;
    }
  }
  return res;
}

std::vector<NcPoly> nc_reduce_basis(std::vector<NcPoly> basis, const OrderSpec& order) {
  std::erase_if(basis, [](const NcPoly& p) { return p.is_zero(); });
  for (NcPoly& g : basis) g = g.monic(order);

  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(basis.begin(), basis.end(), [&](const NcPoly& a, const NcPoly& b) {
      return cmp_w(order, a.leading_word(order), b.leading_word(order)) < 0;
    });
    for (size_t i = 0; i < basis.size() && !changed; ++i) {
      std::vector<NcPoly> others;
      others.reserve(basis.size() - 1);
      for (size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      NcPoly r = others.empty() ? basis[i] : nc_normal_form(basis[i], others, order);
      if (r == basis[i]) continue;
      changed = true;
      if (r.is_zero())
        basis.erase(basis.begin() + i);
      else
        basis[i] = r.monic(order);
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const NcPoly& a, const NcPoly& b) {
    return cmp_w(order, a.leading_word(order), b.leading_word(order)) < 0;
  });
  return basis;
}

std::vector<NcPoly> nc_tail_reduce(std::vector<NcPoly> basis, const OrderSpec& order) {
  std::erase_if(basis, [](const NcPoly& p) { return p.is_zero(); });
  for (NcPoly& g : basis) g = g.monic(order);
  std::sort(basis.begin(), basis.end(), [&](const NcPoly& a, const NcPoly& b) {
    return cmp_w(order, a.leading_word(order), b.leading_word(order)) < 0;
  });
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      const auto& [lw, lc] = basis[i].leading_term(order);
      NcPoly head = NcPoly::term(basis[i].nvars(), lw, lc);
      // tail terms sit strictly below the head, so the head never rewrites
      NcPoly reduced = head + nc_normal_form(basis[i] - head, basis, order);
      if (!(reduced == basis[i])) {
        basis[i] = std::move(reduced);
        changed = true;
      }
    }
  }
  return basis;
}

CompletionResult nc_complete_bounded(std::vector<NcPoly> gens, const OrderSpec& order,
                                     int max_degree, size_t term_cap) {
  if (!order.graded()) throw std::invalid_argument("completion needs a graded order");
  for (const NcPoly& g : gens)
    if (!g.is_zero() && g.deg() > max_degree)
      throw std::invalid_argument("max_degree below an input degree");

  CompletionResult res;
  res.basis = nc_reduce_basis(std::move(gens), order);

  for (;;) {
    std::vector<NcPoly> monic = res.basis;  // already monic
    auto ambs = ambiguities(res.basis, order);
    std::sort(ambs.begin(), ambs.end(), [](const Ambiguity& a, const Ambiguity& b) {
      if (a.word.deg() != b.word.deg()) return a.word.deg() < b.word.deg();
      if (a.word != b.word) return a.word < b.word;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    NcPoly addition;
    for (const Ambiguity& a : ambs) {
      if (a.word.deg() > max_degree) continue;
      NcPoly left = nc_normal_form(reduct(a, a.i, a.off_i, monic, order), res.basis, order, term_cap);
      NcPoly right = nc_normal_form(reduct(a, a.j, a.off_j, monic, order), res.basis, order, term_cap);
      NcPoly diff = left - right;
      if (!diff.is_zero()) {
        addition = std::move(diff);
        break;
      }
    }
    if (addition.is_zero()) break;
    res.basis.push_back(addition.monic(order));
    res.basis = nc_reduce_basis(std::move(res.basis), order);
  }

  // anything unresolved beyond the bound makes the basis incomplete
  for (const Ambiguity& a : ambiguities(res.basis, order)) {
    if (a.word.deg() <= max_degree) continue;
    NcPoly left = nc_normal_form(reduct(a, a.i, a.off_i, res.basis, order), res.basis, order, term_cap);
    NcPoly right = nc_normal_form(reduct(a, a.j, a.off_j, res.basis, order), res.basis, order, term_cap);
    if (!(left - right).is_zero()) {
      res.complete = false;
      break;
    }
  }
  return res;
}

bool graded_quotient_is_commutative(const std::vector<NcPoly>& lh_basis, const OrderSpec& order) {
  if (lh_basis.empty()) return order.nvars() <= 1;
  const int n = lh_basis.front().nvars();
  const Field f = lh_basis.front().terms().begin()->second.field();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NcPoly comm = NcPoly::term(n, Word::letter(j) * Word::letter(i), Scalar::one(f)) -
                    NcPoly::term(n, Word::letter(i) * Word::letter(j), Scalar::one(f));
      if (!nc_normal_form(comm, lh_basis, order).is_zero()) return false;
    }
  return true;
}

}  // namespace acgb
