#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

using namespace acgb;
using namespace testutil;

namespace {

// the paper-ready 13-element homogeneous basis used in several suites
std::vector<NcPoly> sl2_homogeneous_basis() {
  return ncps({"Y*X - X*Y", "Z*Y - Y*Z", "Z*X - X*Z", "X^3", "Y^3", "Z^3", "X*Z^2", "Y*Z^2",
               "X*Y*Z", "X^2*Y", "X*Y^2", "X^2*Z", "Y^2*Z"});
}

std::vector<NcPoly> tailed_sl2_commutators() {
  return ncps({"Y*X - X*Y + Z", "Z*X - X*Z - 2*X", "Z*Y - Y*Z + 2*Y"});
}

// reduction that records two-sided cofactors, used as the membership oracle
NcPoly tracked_reduce(const NcPoly& f, const std::vector<NcPoly>& basis, const OrderSpec& o,
                      NcPoly& combination) {
  combination = NcPoly(f.nvars());
  std::vector<NcPoly> monic;
  std::vector<Word> lead;
  for (const NcPoly& g : basis) {
    monic.push_back(g.monic(o));
    lead.push_back(monic.back().leading_word(o));
  }
  NcPoly rem = f;
  for (;;) {
    bool hit = false;
    for (const auto& [w, c] : rem.terms()) {
      for (size_t r = 0; r < lead.size() && !hit; ++r)
        for (int off = 0; off + lead[r].deg() <= w.deg() && !hit; ++off) {
          bool match = true;
          for (int k = 0; k < lead[r].deg(); ++k)
            if (w[off + k] != lead[r][k]) match = false;
          if (!match) continue;
          Word pre = w.sub(0, off);
          Word suf = w.sub(off + lead[r].deg(), w.deg() - off - lead[r].deg());
          NcPoly step = monic[r].sandwich(pre, suf) * c;
          rem = rem - step;
          combination = combination + step;
          hit = true;
        }
      if (hit) break;
    }
    if (!hit) return rem;
  }
}

}  // namespace

TEST_SUITE_BEGIN("freealg");

TEST_CASE("leading homogeneous part") {
  CHECK(lh(ncp("Y*X - X*Y + Z")) == ncp("Y*X - X*Y"));
  CHECK(lh(ncp("X^3")) == ncp("X^3"));
  CHECK(lh(ncp("2*X*Y*Z - Z^2 - 2*Z")) == ncp("2*X*Y*Z"));
  CHECK_THROWS_AS(lh(NcPoly(3)), std::domain_error);
}

TEST_CASE("two-sided normal form pinned examples") {
  OrderSpec o = grevlex3();
  CHECK(nc_normal_form(ncp("Y*X"), ncps({"Y*X - X*Y + Z"}), o) == ncp("X*Y - Z"));
  CHECK(nc_normal_form(ncp("Z*Y*X"), tailed_sl2_commutators(), o) == ncp("X*Y*Z - Z^2"));

  auto final_basis = ncps({"Y*X - X*Y + Z", "Z*Y - Y*Z + 2*Y", "Z*X - X*Z - 2*X", "X^3", "Y^3",
                           "Z^3 - 4*Z", "X*Z^2 + 2*X*Z", "Y*Z^2 - 2*Y*Z", "X*Y*Z - 1/2*Z^2 - Z",
                           "X^2*Y - X*Z - 2*X", "X*Y^2 - Y*Z", "X^2*Z + 2*X^2", "Y^2*Z - 2*Y^2"});
  CHECK(nc_normal_form(ncp("X^3"), final_basis, o).is_zero());
}

TEST_CASE("normal form of Z*Y*X agrees with the enveloping-algebra oracle") {
  OrderSpec o = grevlex3();
  const LieStructure L = sl2();
  NcPoly nf = nc_normal_form(ncp("Z*Y*X"), tailed_sl2_commutators(), o);
  CHECK(nf == pbw_section(free_to_pbw(L, ncp("Z*Y*X"))));
}

TEST_CASE("normal form properties") {
  OrderSpec o = grevlex3();
  Rng rng(31);
  auto basis = tailed_sl2_commutators();
  for (int t = 0; t < 120; ++t) {
    NcPoly f = rng.ncpoly(3, 4, 3);
    NcPoly nf = nc_normal_form(f, basis, o);
    CHECK(nc_normal_form(nf, basis, o) == nf);
    if (!f.is_zero() && !nf.is_zero()) CHECK(nf.deg() <= f.deg());

    NcPoly combination(3);
    NcPoly tracked = tracked_reduce(f, basis, o, combination);
    CHECK(f - tracked == combination);   // membership certificate
    CHECK(tracked == nf);                // confluent here: the set is a basis
  }
}

TEST_CASE("homogeneous input, homogeneous normal form") {
  OrderSpec o = grevlex3();
  auto basis = sl2_homogeneous_basis();
  Rng rng(77);
  for (int t = 0; t < 60; ++t) {
    const int d = rng.i(1, 4);
    NcPoly f(3);
    for (int s = 0; s < 3; ++s) {
      std::vector<int> letters(d);
      for (int k = 0; k < d; ++k) letters[k] = rng.i(0, 2);
      f.add_term(Word(std::move(letters)), rng.scalar_nonzero());
    }
    if (f.is_zero()) continue;
    NcPoly nf = nc_normal_form(f, basis, o);
    CHECK(nf.is_homogeneous());
    if (!nf.is_zero()) CHECK(nf.deg() == d);
  }
}

TEST_CASE("ambiguity enumeration") {
  OrderSpec o = grevlex3();
  SUBCASE("a lone commutator has no self-overlap") {
    CHECK(ambiguities(ncps({"Y*X - X*Y"}), o).empty());
  }
  SUBCASE("three commutators overlap exactly once") {
    auto ambs = ambiguities(ncps({"Y*X - X*Y", "Z*X - X*Z", "Z*Y - Y*Z"}), o);
    REQUIRE(ambs.size() == 1);
    CHECK(ambs[0].kind == Ambiguity::Kind::overlap);
    CHECK(ambs[0].word == ncp("Z*Y*X").leading_word(o));
  }
  SUBCASE("inclusions among powers") {
    auto ambs = ambiguities(ncps({"X^2", "X^3"}, "X"), OrderSpec::make(CmpKind::grevlex, 1));
    int inclusions = 0, overlaps = 0;
    for (const auto& a : ambs)
      (a.kind == Ambiguity::Kind::inclusion ? inclusions : overlaps)++;
    CHECK(inclusions == 2);  // X^2 sits inside X^3 at offsets 0 and 1
    CHECK(overlaps == 5);
    for (const auto& a : ambs)
      if (a.kind == Ambiguity::Kind::inclusion) {
        CHECK(a.word == ncp("X^3", "X").leading_word(OrderSpec::make(CmpKind::grevlex, 1)));
      }
  }
}

TEST_CASE("diamond-lemma check") {
  OrderSpec o = grevlex3();
  SUBCASE("plain commutators are confluent") {
    CHECK(nc_is_groebner(ncps({"Y*X - X*Y", "Z*X - X*Z", "Z*Y - Y*Z"}), o).ok);
  }
  SUBCASE("the 13-element homogeneous basis is certified") {
    CHECK(nc_is_groebner(sl2_homogeneous_basis(), o).ok);
  }
  SUBCASE("a non-basis is refuted with the right witness") {
    OrderSpec dl = OrderSpec::make(CmpKind::grevlex, 2).with_word(WordKind::deglex);
    auto res = nc_is_groebner(ncps({"X^2*Y - X", "X^2 - Y"}, "X Y"), dl);
    REQUIRE_FALSE(res.ok);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->word == ncp("X^2*Y", "X Y").leading_word(dl));
    std::vector<NcPoly> nfs = {res.left_nf, res.right_nf};
    CHECK(same_set(nfs, ncps({"X", "Y^2"}, "X Y")));
    CHECK_FALSE(res.difference.is_zero());
  }
}

TEST_CASE("bounded completion") {
  SUBCASE("resolvable overlap leaves the input alone") {
    OrderSpec o = OrderSpec::make(CmpKind::grevlex, 2);
    auto res = nc_complete_bounded(ncps({"Y*X - X*Y", "X^2"}, "X Y"), o, 4);
    CHECK(res.complete);
    CHECK(same_set(res.basis, ncps({"Y*X - X*Y", "X^2"}, "X Y")));
  }
  SUBCASE("the classic non-terminating completion is flagged") {
    // letters ranked Y < X
    OrderSpec o = OrderSpec::make(CmpKind::grevlex, 2).with_ranks({1, 0});
    auto res = nc_complete_bounded(ncps({"X^2 - Y*X"}, "X Y"), o, 4);
    CHECK_FALSE(res.complete);
    bool found = false;
    for (const NcPoly& g : res.basis)
      if (g == ncp("X*Y*X - Y^2*X", "X Y")) found = true;
    CHECK(found);
    CHECK(res.basis.size() >= 2);
  }
  SUBCASE("overlap resolving through a sign change") {
    OrderSpec o = OrderSpec::make(CmpKind::grevlex, 2);
    auto res = nc_complete_bounded(ncps({"Y*X - X*Y", "X^2 + Y"}, "X Y"), o, 4);
    CHECK(res.complete);
    CHECK(same_set(res.basis, ncps({"Y*X - X*Y", "X^2 + Y"}, "X Y")));
  }
  SUBCASE("a certified basis is a fixpoint at any bound") {
    OrderSpec o = grevlex3();
    auto basis = sl2_homogeneous_basis();
    for (int d = 3; d <= 5; ++d) {
      auto res = nc_complete_bounded(basis, o, d);
      CHECK(res.complete);
      CHECK(same_set(res.basis, nc_reduce_basis(basis, o)));
    }
  }
}

TEST_CASE("commutativity of the graded quotient") {
  OrderSpec o = grevlex3();
  CHECK(graded_quotient_is_commutative(sl2_homogeneous_basis(), o));
  CHECK_FALSE(graded_quotient_is_commutative(ncps({"X^3"}), o));
  CHECK(graded_quotient_is_commutative(ncps({"Y*X - X*Y", "Z*X - X*Z", "Z*Y - Y*Z"}), o));
}

TEST_SUITE_END();
