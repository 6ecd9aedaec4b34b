#include "acgb/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace acgb {

MonomialIdeal::MonomialIdeal(int nvars, std::vector<ExpVec> gens) : nvars_(nvars) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].nvars() != nvars_) throw std::invalid_argument("generator arity mismatch");
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) gens_.push_back(gens[i]);
  }
}

bool MonomialIdeal::member(const ExpVec& m) const {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  for (const ExpVec& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::colon(const ExpVec& m) const {
  std::vector<ExpVec> out;
  out.reserve(gens_.size());
  for (const ExpVec& g : gens_) {
    ExpVec q(nvars_);
    for (int i = 0; i < nvars_; ++i) q.e[i] = std::max(g[i] - m[i], 0);
    out.push_back(q);
  }
  return MonomialIdeal(nvars_, std::move(out));
}

namespace {

// enumerate monomials over the support vars with exponent bounds, collecting
// those outside J
void enumerate_standard(const MonomialIdeal& J, const std::vector<int>& vars,
                        const std::vector<int>& bound, size_t pos, ExpVec& cur,
                        std::vector<ExpVec>& out) {
  if (pos == vars.size()) {
    if (!J.member(cur)) out.push_back(cur);
    return;
  }
  for (int k = 0; k <= bound[pos]; ++k) {
    cur.e[vars[pos]] = k;
    enumerate_standard(J, vars, bound, pos + 1, cur, out);
  }
  cur.e[vars[pos]] = 0;
}

void sort_by_degree(std::vector<ExpVec>& v) {
  std::sort(v.begin(), v.end(), [](const ExpVec& a, const ExpVec& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    return a < b;
  });
}

}  // namespace

USet u_set(const MonomialIdeal& L, const ExpVec& m, int degree_cap) {
  const int n = L.nvars();
  if (m.nvars() != n) throw std::invalid_argument("monomial arity mismatch");
  if (m.is_unit()) throw std::invalid_argument("u_set: m must be a nonconstant monomial");
  if (!L.member(m)) throw std::invalid_argument("u_set: m does not lie in L");

  int lo = 0, hi = n - 1;
  while (m[lo] == 0) ++lo;
  while (m[hi] == 0) --hi;

  std::vector<int> between;
  for (int v = lo + 1; v < hi; ++v) between.push_back(v);

  const MonomialIdeal ca = L.colon(m / ExpVec::var(n, lo));
  const MonomialIdeal cb = L.colon(m / ExpVec::var(n, hi));

  // J restricted to the in-between variables: only generators supported there
  // can divide a monomial over them
  std::vector<ExpVec> jb;
  for (const MonomialIdeal* c : {&ca, &cb})
    for (const ExpVec& g : c->gens()) {
      bool supported = true;
      for (int v = 0; v < n && supported; ++v)
        if (g[v] > 0 && (v <= lo || v >= hi)) supported = false;
      if (supported) jb.push_back(g);
    }
  const MonomialIdeal J(n, std::move(jb));

  USet res;
  if (J.member(ExpVec(n))) return res;  // 1 in J: U is empty (and finite)

  // finite iff J contains a pure power of every in-between variable
  std::vector<int> bound(between.size(), 0);
  for (size_t k = 0; k < between.size(); ++k) {
    int best = -1;
    for (const ExpVec& g : J.gens()) {
      bool pure = g[between[k]] > 0;
      for (int v = 0; v < n && pure; ++v)
        if (v != between[k] && g[v] > 0) pure = false;
      if (pure && (best < 0 || g[between[k]] < best)) best = g[between[k]];
    }
    if (best < 0) {
      res.finite = false;
      res.infinite_var = between[k];
    } else {
      bound[k] = best - 1;
    }
  }

  if (!res.finite)
    for (auto& b : bound) b = degree_cap;  // cap-bounded witness sample

  ExpVec cur(n);
  enumerate_standard(J, between, bound, 0, cur, res.monomials);
  if (!res.finite) {
    std::erase_if(res.monomials, [&](const ExpVec& u) { return u.deg() > degree_cap; });
  }
  sort_by_degree(res.monomials);
  return res;
}

}  // namespace acgb
