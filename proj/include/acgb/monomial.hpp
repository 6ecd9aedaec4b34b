#ifndef ACGB_MONOMIAL_HPP
#define ACGB_MONOMIAL_HPP

#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace acgb {

// Commutative monomial: a tuple of nonnegative exponents, one per variable.
struct ExpVec {
  std::vector<int> e;

  ExpVec() = default;
  explicit ExpVec(int nvars) : e(nvars, 0) {}
  explicit ExpVec(std::vector<int> exps) : e(std::move(exps)) {}

  static ExpVec var(int nvars, int i, int k = 1) {
    ExpVec m(nvars);
    m.e[i] = k;
    return m;
  }

  int nvars() const { return (int)e.size(); }
  int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_unit() const { return deg() == 0; }
  int operator[](int i) const { return e[i]; }

  friend ExpVec operator*(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
  }

  bool divides(const ExpVec& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  // quotient m := *this / d; caller checks divisibility
  friend ExpVec operator/(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.e.size(); ++i) {
      r.e[i] -= b.e[i];
      if (r.e[i] < 0) throw std::domain_error("monomial quotient with negative exponent");
    }
    return r;
  }

  friend ExpVec lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }

  auto operator<=>(const ExpVec&) const = default;
};

// Free-algebra monomial: a word over letters 0..n-1; the empty word is 1.
// Degree is length.
struct Word {
  std::vector<int> l;

  Word() = default;
  explicit Word(std::vector<int> letters) : l(std::move(letters)) {}

  static Word letter(int i) { return Word({i}); }

  int deg() const { return (int)l.size(); }
  bool empty() const { return l.empty(); }
  int operator[](int i) const { return l[i]; }

  friend Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.l.insert(r.l.end(), b.l.begin(), b.l.end());
    return r;
  }

  Word sub(int pos, int len) const {
    return Word(std::vector<int>(l.begin() + pos, l.begin() + pos + len));
  }

  ExpVec abelianization(int nvars) const {
    ExpVec m(nvars);
    for (int i : l) {
      if (i < 0 || i >= nvars) throw std::out_of_range("letter index out of range");
      ++m.e[i];
    }
    return m;
  }

  auto operator<=>(const Word&) const = default;
};

}  // namespace acgb

#endif
