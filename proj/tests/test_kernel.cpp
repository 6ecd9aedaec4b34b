#include "doctest.h"
#include "testutil.hpp"

using namespace acgb;
using namespace testutil;

TEST_SUITE_BEGIN("kernel");

TEST_CASE("rational scalars are canonical and exact") {
  Field q;
  CHECK(Scalar::of(q, 2, 4) == Scalar::of(q, 1, 2));
  CHECK(Scalar::of(q, -3, -6) == Scalar::of(q, 1, 2));
  CHECK((Scalar::of(q, 1, 3) + Scalar::of(q, 1, 6)) == Scalar::of(q, 1, 2));
  CHECK((Scalar::of(q, 2, 3) * Scalar::of(q, 3, 2)).is_one());
  CHECK((Scalar::of(q, 5) / Scalar::of(q, 5)).is_one());
  CHECK_THROWS_AS(Scalar::of(q, 1) / Scalar::zero(q), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero(q).inv(), std::domain_error);
}

TEST_CASE("prime field arithmetic stays in range") {
  Field f{7};
  CHECK(Scalar::of(f, 10) == Scalar::of(f, 3));
  CHECK(Scalar::of(f, -1) == Scalar::of(f, 6));
  CHECK((Scalar::of(f, 3) * Scalar::of(f, 5)) == Scalar::of(f, 1));
  CHECK((Scalar::of(f, 2).inv()) == Scalar::of(f, 4));
  CHECK_THROWS_AS(Scalar::of(f, 3) / Scalar::zero(f), std::domain_error);
  CHECK_THROWS_AS(Scalar::of(f, 1) + Scalar::of(Field{}, 1), std::logic_error);
}

TEST_CASE("cmp_c pinned examples") {
  OrderSpec o = OrderSpec::make(CmpKind::grevlex, 3);
  CHECK(cmp_c(o, cp("x").leading_monomial(o), cp("x^2").leading_monomial(o)) < 0);
  // degree ties scan from the lowest-ranked variable; x^2*y < x*z^2
  CHECK(cmp_c(o, cp("x^2*y").leading_monomial(o), cp("x*z^2").leading_monomial(o)) < 0);
  CHECK(cmp_c(o, cp("x^2*y").leading_monomial(o), cp("x^2*y").leading_monomial(o)) == 0);
  CHECK_THROWS_AS(cmp_c(o, ExpVec(2), ExpVec(3)), std::invalid_argument);
}

TEST_CASE("lex and grlex behave on the classic splits") {
  // lex x > y > z encoded as ranks z < y < x
  OrderSpec lex = OrderSpec::make(CmpKind::lex, 3).with_ranks({2, 1, 0});
  CHECK(cmp_c(lex, cp("x").leading_monomial(lex), cp("y^5").leading_monomial(lex)) > 0);
  OrderSpec grlex = OrderSpec::make(CmpKind::grlex, 3);
  CHECK(cmp_c(grlex, cp("x").leading_monomial(grlex), cp("y^5").leading_monomial(grlex)) < 0);
  // grlex ties break lexicographically from the top variable
  CHECK(cmp_c(grlex, cp("x*z").leading_monomial(grlex), cp("y^2").leading_monomial(grlex)) > 0);
}

TEST_CASE("cmp_c agrees with the weight-matrix oracle") {
  Rng rng(20260808);
  for (int t = 0; t < 600; ++t) {
    const int n = rng.i(1, 4);
    OrderSpec o = OrderSpec::make(rng.kind(), n).with_ranks(rng.ranks(n));
    ExpVec a = rng.expvec(n, 5), b = rng.expvec(n, 5);
    CHECK(cmp_c(o, a, b) == oracle_cmp_c(o, a, b));
  }
}

TEST_CASE("cmp_w pinned examples") {
  OrderSpec o = grevlex3();
  CHECK(cmp_w(o, ncp("X*Y").leading_word(o), ncp("Y*X").leading_word(o)) < 0);
  CHECK(cmp_w(o, ncp("X").leading_word(o), ncp("Y*X").leading_word(o)) < 0);
  // gamma-images x*z^2 vs x*y*z under grevlex
  CHECK(cmp_w(o, ncp("X*Z*Z").leading_word(o), ncp("Z*X*Y").leading_word(o)) > 0);
  CHECK_THROWS_AS(cmp_w(o, Word({5}), Word({0})), std::out_of_range);
}

TEST_CASE("deglex word order") {
  OrderSpec o = grevlex3().with_word(WordKind::deglex);
  CHECK(cmp_w(o, ncp("X*Z").leading_word(o), ncp("Y*Y").leading_word(o)) < 0);
  CHECK(cmp_w(o, ncp("Y*X").leading_word(o), ncp("X*Y*X").leading_word(o)) < 0);
}

TEST_CASE("word orders are total, multiplicative, and degree-compatible") {
  Rng rng(7);
  for (int t = 0; t < 400; ++t) {
    const int n = rng.i(1, 4);
    OrderSpec o = OrderSpec::make(rng.graded_kind(), n).with_ranks(rng.ranks(n));
    if (rng.i(0, 1)) o = o.with_word(WordKind::deglex);
    Word u = rng.word(n, 4), v = rng.word(n, 4), w = rng.word(n, 3);

    auto uv = cmp_w(o, u, v);
    CHECK(cmp_w(o, v, u) == (0 <=> uv));
    if (uv == 0) CHECK(u == v);

    // transitivity on the sorted triple
    Word a = u, b = v, c = w;
    if (cmp_w(o, a, b) > 0) std::swap(a, b);
    if (cmp_w(o, b, c) > 0) std::swap(b, c);
    if (cmp_w(o, a, b) > 0) std::swap(a, b);
    CHECK(cmp_w(o, a, c) <= 0);

    if (uv < 0) {
      CHECK(cmp_w(o, w * u, w * v) < 0);
      CHECK(cmp_w(o, u * w, v * w) < 0);
    }
    if (u.deg() < v.deg()) CHECK(cmp_w(o, u, v) < 0);
  }
}

TEST_CASE("no descending chains at desk scale") {
  // enumerate all words of degree <= 3 over two letters; the order must have
  // a finite strictly-descending walk from any start
  OrderSpec o = OrderSpec::make(CmpKind::grevlex, 2);
  std::vector<Word> all;
  for (int len = 0; len <= 3; ++len) {
    std::vector<Word> layer((size_t)1 << len);
    for (size_t mask = 0; mask < layer.size(); ++mask) {
      std::vector<int> letters(len);
      for (int k = 0; k < len; ++k) letters[k] = (mask >> k) & 1;
      all.push_back(Word(std::move(letters)));
    }
  }
  std::sort(all.begin(), all.end(), WLess{o});
  for (size_t k = 0; k + 1 < all.size(); ++k) CHECK(cmp_w(o, all[k], all[k + 1]) < 0);
  CHECK(all.front() == Word());
}

TEST_SUITE_END();
