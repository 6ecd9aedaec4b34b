#include "acgb/pbw.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "acgb/buchberger.hpp"

namespace acgb {

struct PbwCache {
  std::mutex mu;
  std::map<std::pair<ExpVec, int>, PbwPoly> mono_gen;
};

namespace {
std::mutex g_cache_init_mu;
}

PbwCache& LieStructure::cache() const {
  std::lock_guard<std::mutex> lock(g_cache_init_mu);
  if (!cache_) cache_ = std::make_shared<PbwCache>();
  return *cache_;
}

const std::pair<const ExpVec, Scalar>& PbwPoly::leading_term(const OrderSpec& o) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  const std::pair<const ExpVec, Scalar>* best = nullptr;
  for (const auto& t : terms_)
    if (!best || cmp_c(o, t.first, best->first) > 0) best = &t;
  return *best;
}

PbwPoly PbwPoly::monic(const OrderSpec& o) const { return *this * leading_coeff(o).inv(); }

PbwPoly PbwPoly::operator-() const {
  PbwPoly r(nvars_);
  r.terms_ = detail::negate(terms_);
  return r;
}

PbwPoly PbwPoly::operator+(const PbwPoly& o) const {
  PbwPoly r = *this;
  detail::add_all(r.terms_, o.terms_);
  return r;
}

PbwPoly PbwPoly::operator-(const PbwPoly& o) const { return *this + (-o); }

PbwPoly PbwPoly::operator*(const Scalar& s) const {
  PbwPoly r(nvars_);
  r.terms_ = detail::scale(terms_, s);
  return r;
}

namespace {

PbwPoly poly_times_gen(const LieStructure& L, const PbwPoly& p, int gen);

// X^c * X_gen straightened onto the PBW basis
PbwPoly mono_times_gen(const LieStructure& L, const ExpVec& c, int gen) {
  PbwCache& cache = L.cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.mono_gen.find({c, gen});
    if (it != cache.mono_gen.end()) return it->second;
  }

  const int n = L.dim();
  int j = -1;
  for (int v = n - 1; v > gen; --v)
    if (c[v] > 0) {
      j = v;
      break;
    }

  PbwPoly result(n);
  if (j < 0) {
    result.add_term(c * ExpVec::var(n, gen), Scalar::one(L.field()));
  } else {
    // X^c X_i = X^{c'} X_j X_i = (X^{c'} X_i) X_j + X^{c'} [X_j, X_i]
    ExpVec rest = c / ExpVec::var(n, j);
    result = poly_times_gen(L, mono_times_gen(L, rest, gen), j);
    const auto form = L.bracket(j, gen);
    for (int k = 0; k < n; ++k) {
      if (form[k].is_zero()) continue;
      result = result + mono_times_gen(L, rest, k) * form[k];
    }
  }

  std::lock_guard<std::mutex> lock(cache.mu);
  cache.mono_gen.emplace(std::make_pair(c, gen), result);
  return result;
}

PbwPoly poly_times_gen(const LieStructure& L, const PbwPoly& p, int gen) {
  PbwPoly r(L.dim());
  for (const auto& [m, c] : p.terms()) r = r + mono_times_gen(L, m, gen) * c;
  return r;
}

PbwPoly poly_times_mono(const LieStructure& L, const PbwPoly& p, const ExpVec& b) {
  PbwPoly acc = p;
  for (int v = 0; v < L.dim(); ++v)
    for (int k = 0; k < b[v]; ++k) acc = poly_times_gen(L, acc, v);
  return acc;
}

}  // namespace

PbwPoly pbw_mul(const LieStructure& L, const PbwPoly& p, const PbwPoly& q) {
  if (p.nvars() != L.dim() || q.nvars() != L.dim())
    throw std::invalid_argument("operand arity does not match the Lie structure");
  PbwPoly r(L.dim());
  for (const auto& [b, cb] : q.terms()) {
    PbwPoly pb = poly_times_mono(L, p, b);
    r = r + pb * cb;
  }
  return r;
}

PbwPoly left_normal_form(const PbwPoly& f, const std::vector<PbwPoly>& basis,
                         const LieStructure& L, const OrderSpec& order) {
  if (!order.graded()) throw std::invalid_argument("solvable-type division needs a graded order");
  for (const PbwPoly& g : basis)
    if (g.is_zero()) throw std::invalid_argument("zero divisor polynomial");

  PbwPoly rem = f;
  for (;;) {
    const ExpVec* mono = nullptr;
    const PbwPoly* div = nullptr;
    for (const auto& [m, c] : rem.terms()) {
      if (mono && cmp_c(order, m, *mono) <= 0) continue;
      for (const PbwPoly& g : basis)
        if (g.leading_monomial(order).divides(m)) {
          mono = &m;
          div = &g;
          break;
        }
    }
    if (!mono) break;
    const Scalar c = rem.terms().at(*mono);
    const ExpVec q = *mono / div->leading_monomial(order);
    PbwPoly prod = pbw_mul(L, PbwPoly::term(L.dim(), q, Scalar::one(L.field())), *div);
    rem = rem - prod * (c / div->leading_coeff(order));
  }
  return rem;
}

std::vector<PbwPoly> pbw_reduce_basis(std::vector<PbwPoly> basis, const LieStructure& L,
                                      const OrderSpec& order) {
  std::erase_if(basis, [](const PbwPoly& p) { return p.is_zero(); });
  std::vector<PbwPoly> minimal;
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
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<PbwPoly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) continue;
      PbwPoly r = left_normal_form(minimal[i], others, L, order);
      if (!(r == minimal[i])) {
        minimal[i] = r.monic(order);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const PbwPoly& a, const PbwPoly& b) {
    return cmp_c(order, a.leading_monomial(order), b.leading_monomial(order)) < 0;
  });
  return minimal;
}

namespace {

struct Pair {
  size_t i, j;
  ExpVec l;
};

void push_pairs(std::deque<Pair>& queue, const std::vector<PbwPoly>& basis, size_t j,
                const OrderSpec& order) {
  // no coprimality shortcut here: in an enveloping algebra the S-polynomial
  // of coprime heads reduces to the commutator of the pair, not to zero
  for (size_t i = 0; i < j; ++i)
    queue.push_back({i, j, lcm(basis[i].leading_monomial(order), basis[j].leading_monomial(order))});
}

void left_complete(const LieStructure& L, std::vector<PbwPoly>& basis, std::deque<Pair>& queue,
                   const OrderSpec& order, size_t term_cap) {
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.l.deg() != b.l.deg()) return a.l.deg() < b.l.deg();
      auto c = cmp_c(order, a.l, b.l);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });
    Pair p = *it;
    queue.erase(it);

    auto lift = [&](const PbwPoly& g) {
      const ExpVec u = p.l / g.leading_monomial(order);
      PbwPoly m = PbwPoly::term(L.dim(), u, Scalar::one(L.field()));
      return pbw_mul(L, m, g) * g.leading_coeff(order).inv();
    };
    PbwPoly s = lift(basis[p.i]) - lift(basis[p.j]);
    PbwPoly r = left_normal_form(s, basis, L, order);
    if (r.is_zero()) continue;
    if (r.terms().size() > term_cap) throw resource_error("term cap exceeded in twostd");
    basis.push_back(r.monic(order));
    push_pairs(queue, basis, basis.size() - 1, order);
  }
}

}  // namespace

std::vector<PbwPoly> two_sided_groebner(const LieStructure& L, std::vector<PbwPoly> gens,
                                        const OrderSpec& order, size_t term_cap) {
  if (!order.graded()) throw std::invalid_argument("twostd needs a graded order");
  if (auto w = L.validate())
    throw std::domain_error("Jacobi identity fails on generators (" + std::to_string(w->i) +
                            "," + std::to_string(w->j) + "," + std::to_string(w->k) + ")");

  std::vector<PbwPoly> basis;
  std::deque<Pair> queue;
  for (PbwPoly& g : gens) {
    if (g.is_zero()) continue;
    basis.push_back(g.monic(order));
    push_pairs(queue, basis, basis.size() - 1, order);
  }

  for (;;) {
    left_complete(L, basis, queue, order, term_cap);
    bool added = false;
    const size_t snapshot = basis.size();
    for (size_t i = 0; i < snapshot; ++i)
      for (int v = 0; v < L.dim(); ++v) {
        PbwPoly prod = pbw_mul(L, basis[i], PbwPoly::generator(L.dim(), v, Scalar::one(L.field())));
        PbwPoly r = left_normal_form(prod, basis, L, order);
        if (r.is_zero()) continue;
        if (r.terms().size() > term_cap) throw resource_error("term cap exceeded in twostd");
        basis.push_back(r.monic(order));
        push_pairs(queue, basis, basis.size() - 1, order);
        added = true;
      }
    if (!added && queue.empty()) break;
  }
  return pbw_reduce_basis(std::move(basis), L, order);
}

CPoly sigma(const PbwPoly& g) {
  if (g.is_zero()) throw std::domain_error("symbol of zero");
  const int d = g.deg();
  CPoly r(g.nvars());
  for (const auto& [m, c] : g.terms())
    if (m.deg() == d) r.add_term(m, c);
  return r;
}

PbwPoly free_to_pbw(const LieStructure& L, const NcPoly& f) {
  if (f.nvars() != L.dim()) throw std::invalid_argument("alphabet size does not match the Lie structure");
  PbwPoly r(L.dim());
  for (const auto& [w, c] : f.terms()) {
    PbwPoly acc = PbwPoly::constant(L.dim(), Scalar::one(L.field()));
    for (int v : w.l) acc = poly_times_gen(L, acc, v);
    r = r + acc * c;
  }
  return r;
}

NcPoly pbw_section(const PbwPoly& p) {
  NcPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> letters;
    for (int v = 0; v < p.nvars(); ++v)
      for (int k = 0; k < m[v]; ++k) letters.push_back(v);
    r.add_term(Word(std::move(letters)), c);
  }
  return r;
}

std::pair<LieStructure, std::vector<PbwPoly>> lie_change_basis(
    const LieStructure& L, const std::vector<PbwPoly>& elems,
    const std::vector<std::vector<Scalar>>& m) {
  const int n = L.dim();
  if ((int)m.size() != n) throw std::invalid_argument("matrix size does not match dimension");
  const auto minv = matrix_inverse(m);  // throws on singular

  LieStructure out(L.field(), n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      // [Y_b, Y_a] in the X basis, then rewritten over Y
      std::vector<Scalar> form_x(n, Scalar::zero(L.field()));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (m[b][i].is_zero() || m[a][j].is_zero()) continue;
          const auto br = L.bracket(i, j);
          for (int t = 0; t < n; ++t) form_x[t] = form_x[t] + m[b][i] * m[a][j] * br[t];
        }
      std::vector<Scalar> form_y(n, Scalar::zero(L.field()));
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) form_y[t] = form_y[t] + form_x[s] * minv[s][t];
      out.set_bracket(b, a, std::move(form_y));
    }

  std::vector<PbwPoly> images;
  images.reserve(elems.size());
  for (const PbwPoly& p : elems) {
    PbwPoly img(n);
    for (const auto& [mono, c] : p.terms()) {
      PbwPoly acc = PbwPoly::constant(n, c);
      for (int s = 0; s < n; ++s) {
        if (mono[s] == 0) continue;
        PbwPoly lin(n);
        for (int t = 0; t < n; ++t) lin.add_term(ExpVec::var(n, t), minv[s][t]);
        for (int k = 0; k < mono[s]; ++k) acc = pbw_mul(out, acc, lin);
      }
      img = img + acc;
    }
    images.push_back(img);
  }
  return {std::move(out), std::move(images)};
}

}  // namespace acgb
