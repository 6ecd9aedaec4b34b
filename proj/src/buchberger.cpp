#include "acgb/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace acgb {

CPoly c_normal_form(const CPoly& f, const std::vector<CPoly>& basis, const OrderSpec& order) {
  for (const CPoly& g : basis)
    if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial");

  CPoly rem = f;
  while (!rem.is_zero()) {
    // largest reducible term, smallest matching basis index
    const ExpVec* mono = nullptr;
    const CPoly* div = nullptr;
    for (const auto& [m, c] : rem.terms()) {
      if (mono && cmp_c(order, m, *mono) <= 0) continue;
      for (const CPoly& g : basis) {
        if (g.leading_monomial(order).divides(m)) {
          mono = &m;
          div = &g;
          break;
        }
      }
    }
    if (!mono) break;
    const Scalar c = rem.terms().at(*mono);
    const ExpVec q = *mono / div->leading_monomial(order);
    rem = rem - div->mul_mono(q, c / div->leading_coeff(order));
  }
  return rem;
}

CPoly c_spoly(const CPoly& f, const CPoly& g, const OrderSpec& order) {
  const ExpVec l = lcm(f.leading_monomial(order), g.leading_monomial(order));
  CPoly a = f.mul_mono(l / f.leading_monomial(order), f.leading_coeff(order).inv());
  CPoly b = g.mul_mono(l / g.leading_monomial(order), g.leading_coeff(order).inv());
  return a - b;
}

namespace {

struct Pair {
  size_t i, j;
  ExpVec l;
};

bool pair_before(const OrderSpec& order, const Pair& a, const Pair& b) {
  int da = a.l.deg(), db = b.l.deg();
  if (da != db) return da < db;
  auto c = cmp_c(order, a.l, b.l);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

void push_pairs(std::deque<Pair>& queue, const std::vector<CPoly>& basis, size_t j,
                const OrderSpec& order) {
  const ExpVec& lmj = basis[j].leading_monomial(order);
  for (size_t i = 0; i < j; ++i) {
    const ExpVec& lmi = basis[i].leading_monomial(order);
    if (lcm(lmi, lmj) == lmi * lmj) continue;  // coprimality criterion
    queue.push_back({i, j, lcm(lmi, lmj)});
  }
}

}  // namespace

std::vector<CPoly> c_buchberger(std::vector<CPoly> gens, const OrderSpec& order, bool reduce) {
  std::vector<CPoly> basis;
  for (CPoly& g : gens) {
    if (g.is_zero()) throw std::invalid_argument("zero generator");
    basis.push_back(g.monic(order));
  }

  std::deque<Pair> queue;
  for (size_t j = 0; j < basis.size(); ++j) push_pairs(queue, basis, j, order);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(),
                               [&](const Pair& a, const Pair& b) { return pair_before(order, a, b); });
    Pair p = *it;
    queue.erase(it);
    CPoly r = c_normal_form(c_spoly(basis[p.i], basis[p.j], order), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    push_pairs(queue, basis, basis.size() - 1, order);
  }

  if (reduce) return c_reduce_basis(std::move(basis), order);
  return basis;
}

std::vector<CPoly> c_reduce_basis(std::vector<CPoly> basis, const OrderSpec& order) {
  std::erase_if(basis, [](const CPoly& p) { return p.is_zero(); });
  // minimalize: drop anything whose LM another LM divides
  std::vector<CPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    const ExpVec& lm = basis[i].leading_monomial(order);
    bool drop = false;
    for (size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j) continue;
      const ExpVec& lmj = basis[j].leading_monomial(order);
      if (lmj.divides(lm) && (lmj != lm || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(basis[i].monic(order));
  }
  // tail-reduce until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<CPoly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) continue;
      CPoly r = c_normal_form(minimal[i], others, order);
      if (!(r == minimal[i])) {
        minimal[i] = r.monic(order);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const CPoly& a, const CPoly& b) {
    return cmp_c(order, a.leading_monomial(order), b.leading_monomial(order)) < 0;
  });
  return minimal;
}

namespace {

// Gaussian elimination; returns rank
size_t eliminate(std::vector<std::vector<Scalar>>& a, std::vector<std::vector<Scalar>>* aug) {
  const size_t n = a.size();
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t piv = rank;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    if (aug) std::swap((*aug)[piv], (*aug)[rank]);
    const Scalar inv = a[rank][col].inv();
    for (size_t c = 0; c < n; ++c) a[rank][c] = a[rank][c] * inv;
    if (aug)
      for (size_t c = 0; c < n; ++c) (*aug)[rank][c] = (*aug)[rank][c] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (size_t c = 0; c < n; ++c) a[r][c] = a[r][c] - f * a[rank][c];
      if (aug)
        for (size_t c = 0; c < n; ++c) (*aug)[r][c] = (*aug)[r][c] - f * (*aug)[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool matrix_invertible(const std::vector<std::vector<Scalar>>& m) {
  auto a = m;
  return eliminate(a, nullptr) == m.size();
}

std::vector<std::vector<Scalar>> matrix_inverse(const std::vector<std::vector<Scalar>>& m) {
  const size_t n = m.size();
  if (n == 0) return {};
  const Field f = m[0][0].field();
  auto a = m;
  std::vector<std::vector<Scalar>> id(n, std::vector<Scalar>(n, Scalar::zero(f)));
  for (size_t i = 0; i < n; ++i) id[i][i] = Scalar::one(f);
  if (eliminate(a, &id) != n) throw std::domain_error("singular matrix");
  // rows may end unsorted when zero columns were skipped; eliminate() with
  // full rank leaves a as a permutation-free identity
  return id;
}

std::vector<CPoly> apply_linear_change(const std::vector<CPoly>& polys,
                                       const std::vector<std::vector<Scalar>>& m) {
  if (!matrix_invertible(m)) throw std::domain_error("singular matrix");
  const int n = (int)m.size();
  std::vector<CPoly> out;
  out.reserve(polys.size());
  for (const CPoly& p : polys) {
    if (p.nvars() != n) throw std::invalid_argument("matrix size does not match variable count");
    CPoly img(n);
    for (const auto& [mono, c] : p.terms()) {
      CPoly t = CPoly::constant(n, c);
      for (int v = 0; v < n; ++v) {
        if (mono[v] == 0) continue;
        CPoly lin(n);
        for (int w = 0; w < n; ++w) lin.add_term(ExpVec::var(n, w), m[v][w]);
        for (int k = 0; k < mono[v]; ++k) t = t * lin;
      }
      img = img + t;
    }
    out.push_back(img);
  }
  return out;
}

}  // namespace acgb
