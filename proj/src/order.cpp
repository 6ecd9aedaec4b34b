#include "acgb/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acgb {

std::string cmp_kind_name(CmpKind k) {
  switch (k) {
    case CmpKind::lex: return "lex";
    case CmpKind::grlex: return "grlex";
    case CmpKind::grevlex: return "grevlex";
  }
  return "?";
}

OrderSpec OrderSpec::make(CmpKind k, int nvars) {
  OrderSpec o;
  o.kind = k;
  o.rank.resize(nvars);
  std::iota(o.rank.begin(), o.rank.end(), 0);
  return o;
}

bool OrderSpec::identity_ranks() const {
  for (int i = 0; i < (int)rank.size(); ++i)
    if (rank[i] != i) return false;
  return true;
}

OrderSpec OrderSpec::with_ranks(std::vector<int> r) const {
  if ((int)r.size() != nvars()) throw std::invalid_argument("rank vector size mismatch");
  std::vector<char> seen(r.size(), 0);
  for (int v : r) {
    if (v < 0 || v >= (int)r.size() || seen[v]) throw std::invalid_argument("ranks must be a permutation");
    seen[v] = 1;
  }
  OrderSpec o = *this;
  o.rank = std::move(r);
  return o;
}

OrderSpec OrderSpec::with_word(WordKind w) const {
  OrderSpec o = *this;
  o.word_kind = w;
  return o;
}

std::vector<int> OrderSpec::vars_by_rank() const {
  std::vector<int> v(rank.size());
  for (int i = 0; i < (int)rank.size(); ++i) v[rank[i]] = i;
  return v;
}

std::strong_ordering cmp_c(const OrderSpec& o, const ExpVec& a, const ExpVec& b) {
  if (a.nvars() != o.nvars() || b.nvars() != o.nvars())
    throw std::invalid_argument("exponent vector length mismatch");

  if (o.kind != CmpKind::lex) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da <=> db;
  }
  const std::vector<int> by_rank = o.vars_by_rank();
  if (o.kind == CmpKind::grevlex) {
    for (int r = 0; r < (int)by_rank.size(); ++r) {
      int d = a[by_rank[r]] - b[by_rank[r]];
      if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  // lex and the grlex tie-break: highest-ranked variable decides first
  for (int r = (int)by_rank.size() - 1; r >= 0; --r) {
    int d = a[by_rank[r]] - b[by_rank[r]];
    if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

namespace {

std::strong_ordering word_lex(const OrderSpec& o, const Word& u, const Word& v) {
  int n = std::min(u.deg(), v.deg());
  for (int i = 0; i < n; ++i) {
    int ru = o.rank[u[i]], rv = o.rank[v[i]];
    if (ru != rv) return ru <=> rv;
  }
  return u.deg() <=> v.deg();
}

}  // namespace

std::strong_ordering cmp_w(const OrderSpec& o, const Word& u, const Word& v) {
  for (int i : u.l)
    if (i < 0 || i >= o.nvars()) throw std::out_of_range("letter index out of range");
  for (int i : v.l)
    if (i < 0 || i >= o.nvars()) throw std::out_of_range("letter index out of range");

  if (o.word_kind == WordKind::deglex) {
    if (u.deg() != v.deg()) return u.deg() <=> v.deg();
    return word_lex(o, u, v);
  }
  auto c = cmp_c(o, u.abelianization(o.nvars()), v.abelianization(o.nvars()));
  if (c != 0) return c;
  return word_lex(o, u, v);
}

}  // namespace acgb
