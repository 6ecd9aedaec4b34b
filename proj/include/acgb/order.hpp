#ifndef ACGB_ORDER_HPP
#define ACGB_ORDER_HPP

#include <compare>
#include <string>
#include <vector>

#include "acgb/monomial.hpp"

namespace acgb {

enum class CmpKind { lex, grlex, grevlex };
enum class WordKind { deglex, et };

std::string cmp_kind_name(CmpKind k);

// Monomial ordering data shared by every module: a commutative kind, a word
// kind, and a rank permutation (rank 0 = smallest variable).
struct OrderSpec {
  CmpKind kind = CmpKind::grevlex;
  WordKind word_kind = WordKind::et;
  std::vector<int> rank;  // rank[i] = rank of variable i, a bijection on 0..n-1

  static OrderSpec make(CmpKind k, int nvars);

  int nvars() const { return (int)rank.size(); }
  bool graded() const { return kind != CmpKind::lex; }
  bool identity_ranks() const;

  OrderSpec with_ranks(std::vector<int> r) const;
  OrderSpec with_word(WordKind w) const;

  // variables listed smallest rank first
  std::vector<int> vars_by_rank() const;
};

// Commutative comparison. Graded kinds compare total degree first; grevlex
// breaks degree ties on the first nonzero entry of a-b scanning from the
// lowest-ranked variable upward (negative entry means a is larger).
std::strong_ordering cmp_c(const OrderSpec& o, const ExpVec& a, const ExpVec& b);

// Word comparison: deglex (length, then letters by rank), or the et
// extension (abelianizations under cmp_c, ties broken word-lexicographically
// by rank). Both are total and multiplicative.
std::strong_ordering cmp_w(const OrderSpec& o, const Word& u, const Word& v);

struct CLess {
  OrderSpec ord;
  bool operator()(const ExpVec& a, const ExpVec& b) const { return cmp_c(ord, a, b) < 0; }
};

struct WLess {
  OrderSpec ord;
  bool operator()(const Word& a, const Word& b) const { return cmp_w(ord, a, b) < 0; }
};

}  // namespace acgb

#endif
