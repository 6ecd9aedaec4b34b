#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

using namespace acgb;
using namespace testutil;

namespace {

const std::vector<std::string> kSl2Gamma = {"x^3",   "y^3",   "z^3",   "x*z^2", "y*z^2",
                                            "x*y*z", "x^2*y", "x*y^2", "x^2*z", "y^2*z"};

std::vector<NcPoly> sl2_homogeneous_basis() {
  return ncps({"Y*X - X*Y", "Z*Y - Y*Z", "Z*X - X*Z", "X^3", "Y^3", "Z^3", "X*Z^2", "Y*Z^2",
               "X*Y*Z", "X^2*Y", "X*Y^2", "X^2*Z", "Y^2*Z"});
}

std::vector<NcPoly> sl2_final_basis() {
  return ncps({"Y*X - X*Y + Z", "Z*Y - Y*Z + 2*Y", "Z*X - X*Z - 2*X", "X^3", "Y^3", "Z^3 - 4*Z",
               "X*Z^2 + 2*X*Z", "Y*Z^2 - 2*Y*Z", "X*Y*Z - 1/2*Z^2 - Z", "X^2*Y - X*Z - 2*X",
               "X*Y^2 - Y*Z", "X^2*Z + 2*X^2", "Y^2*Z - 2*Y^2"});
}

}  // namespace

TEST_SUITE_BEGIN("liftkit");

TEST_CASE("abelianization") {
  CHECK(gamma(ncp("Y*X - X*Y + Z")) == cp("z"));
  CHECK(gamma(ncp("X^3")) == cp("x^3"));
  CHECK(gamma(ncp("2*X*Y*Z - Z^2 - 2*Z")) == cp("2*x*y*z - z^2 - 2*z"));
}

TEST_CASE("lexicographic splitting") {
  OrderSpec o = grevlex3();
  CHECK(delta(cp("x^2*y")) == ncp("X*X*Y"));
  CHECK(delta(CPoly::constant(3, Scalar::one(Field{}))) == NcPoly::constant(3, Scalar::one(Field{})));
  CHECK(delta(cp("x*z^2 + 2*x")) == ncp("X*Z*Z + 2*X"));

  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    CPoly f = rng.cpoly(3, 4, 3);
    CHECK(gamma(delta(f)) == f);

    NcPoly g = rng.ncpoly(3, 4, 3);
    NcPoly sorted = delta(gamma(g));
    for (const auto& [w, c] : sorted.terms()) CHECK(std::is_sorted(w.l.begin(), w.l.end()));

    Word u = rng.word(3, 3), v = rng.word(3, 3);
    CHECK(gamma(NcPoly::term(3, u * v, Scalar::one(Field{}))) ==
          gamma(NcPoly::term(3, u, Scalar::one(Field{}))) *
              gamma(NcPoly::term(3, v, Scalar::one(Field{}))));
  }
}

TEST_CASE("eps lift reproduces the homogeneous basis") {
  OrderSpec o = grevlex3();
  auto lifted = eps_lift(cps(kSl2Gamma), o, Field{});
  CHECK(same_set(lifted, sl2_homogeneous_basis()));
  CHECK(nc_is_groebner(lifted, o).ok);
  for (const NcPoly& g : lifted) CHECK(g.is_homogeneous());
}

TEST_CASE("eps lift on degenerate inputs") {
  OrderSpec o = grevlex3();
  SUBCASE("empty basis gives the commutators") {
    auto lifted = eps_lift({}, o, Field{});
    CHECK(same_set(lifted, ncps({"Y*X - X*Y", "Z*X - X*Z", "Z*Y - Y*Z"})));
  }
  SUBCASE("a single variable adds itself") {
    auto lifted = eps_lift(cps({"z"}), o, Field{});
    CHECK(same_set(lifted, ncps({"Y*X - X*Y", "Z*X - X*Z", "Z*Y - Y*Z", "Z"})));
    CHECK(nc_is_groebner(lifted, o).ok);
  }
  SUBCASE("an infinite U-set is reported with its monomial") {
    CHECK_THROWS_AS(eps_lift(cps({"x*z"}), o, Field{}), uset_infinite_error);
  }
}

TEST_CASE("symbol reduction keeps preimages paired") {
  const LieStructure L = sl2();
  OrderSpec o = grevlex3();
  auto G = two_sided_groebner(L, pbs({"e^3", "f^3", "h^3 - 4*h"}), o);
  auto pairs = reduce_symbols_with_preimages(L, G, o);
  REQUIRE(pairs.size() == 10);
  std::vector<CPoly> symbols;
  for (const auto& p : pairs) {
    CHECK(sigma(p.preimage) == p.symbol);
    symbols.push_back(p.symbol);
  }
  CHECK(same_set(symbols, cps(kSl2Gamma)));

  // a deliberately non-reduced input: mirror reduction must restore pairing
  std::vector<PbwPoly> messy = G;
  messy.push_back(pbw_mul(L, pb("e"), G[0]) + G[1] * Scalar::of(L.field(), 3));
  auto repaired = reduce_symbols_with_preimages(L, messy, o);
  for (const auto& p : repaired) CHECK(sigma(p.preimage) == p.symbol);
  std::vector<CPoly> repaired_symbols;
  for (const auto& p : repaired) repaired_symbols.push_back(p.symbol);
  CHECK(same_set(repaired_symbols, symbols));
}

TEST_CASE("filtered lift pinned entries") {
  const LieStructure L = sl2();
  OrderSpec o = grevlex3();
  auto G = two_sided_groebner(L, pbs({"e^3", "f^3", "h^3 - 4*h"}), o);
  auto pairs = reduce_symbols_with_preimages(L, G, o);
  auto lifted = filtered_lift(L, pairs, o);
  CHECK(same_set(lifted, sl2_final_basis()));

  bool has_xy2 = false, has_commutator = false;
  for (const NcPoly& g : lifted) {
    if (g == ncp("X*Y^2 - Y*Z")) has_xy2 = true;
    if (g == ncp("Y*X - X*Y + Z")) has_commutator = true;
  }
  CHECK(has_xy2);
  CHECK(has_commutator);
}

TEST_CASE("filtered lift matches the homogeneous lift head by head") {
  const LieStructure L = sl2();
  OrderSpec o = grevlex3();
  auto G = two_sided_groebner(L, pbs({"e^3", "f^3", "h^3 - 4*h"}), o);
  auto pairs = reduce_symbols_with_preimages(L, G, o);
  std::vector<CPoly> symbols;
  for (const auto& p : pairs) symbols.push_back(p.symbol);

  auto homogeneous = eps_lift(symbols, o, L.field());
  auto lifted = filtered_lift(L, pairs, o);
  REQUIRE(homogeneous.size() == lifted.size());
  for (size_t k = 0; k < lifted.size(); ++k) CHECK(lh(lifted[k]) == homogeneous[k]);
}

TEST_CASE("filtered lift on an abelian algebra has no tails") {
  const LieStructure L = abelian(2);
  OrderSpec o = OrderSpec::make(CmpKind::grevlex, 2);
  auto G = two_sided_groebner(L, pbs({"x^2"}, "x y"), o);
  auto lifted = filtered_lift(L, reduce_symbols_with_preimages(L, G, o), o);
  CHECK(same_set(lifted, ncps({"Y*X - X*Y", "X^2"}, "X Y")));
}

TEST_CASE("symbol mismatch is rejected") {
  const LieStructure L = sl2();
  OrderSpec o = grevlex3();
  std::vector<SymbolPair> bad = {{cp("x^2"), pb("e^3")}};
  CHECK_THROWS_AS(filtered_lift(L, bad, o), symbol_mismatch_error);
}

TEST_CASE("pipeline reproduces the worked example end to end") {
  PipelineTrace trace = pipeline(sl2(), pbs({"e^3", "f^3", "h^3 - 4*h"}), grevlex3());
  CHECK(trace.twosided_basis.size() == 10);
  CHECK(trace.symbol_basis.size() == 10);
  CHECK(same_set(trace.reduced_basis, cps(kSl2Gamma)));
  REQUIRE(trace.u_sets.size() == 10);
  for (const auto& u : trace.u_sets) CHECK(u == std::vector<ExpVec>{ExpVec(3)});
  CHECK(same_set(trace.homogeneous_basis, sl2_homogeneous_basis()));
  CHECK(same_set(trace.final_basis, sl2_final_basis()));
  CHECK(trace.verification.all_ok());
  CHECK_FALSE(trace.notes.empty());  // the commutator-tail discrepancy is recorded
}

TEST_CASE("pipeline on the Heisenberg quotient presents the Weyl algebra") {
  PipelineTrace trace = pipeline(heisenberg(), pbs({"z - 1"}, "x y z"), grevlex3());
  // four verified elements; the x,y commutator picks up the unit tail once
  // the central Z rewrites to 1
  CHECK(same_set(trace.final_basis, ncps({"Y*X - X*Y + 1", "Z*X - X", "Z*Y - Y", "Z - 1"})));
  CHECK(trace.verification.all_ok());
  OrderSpec et = grevlex3().with_word(WordKind::et);
  CHECK(same_set(nc_reduce_basis(trace.final_basis, et),
                 ncps({"Y*X - X*Y + 1", "Z - 1"})));
}

TEST_CASE("pipeline on an abelian pair is the commutator alone") {
  PipelineTrace trace = pipeline(abelian(2), {}, OrderSpec::make(CmpKind::grevlex, 2));
  CHECK(same_set(trace.final_basis, ncps({"Y*X - X*Y"}, "X Y")));
  CHECK(trace.verification.all_ok());
}

TEST_CASE("pipeline on sl2 with no generators certifies the PBW rewriting") {
  PipelineTrace trace = pipeline(sl2(), {}, grevlex3());
  CHECK(same_set(trace.final_basis, ncps({"Y*X - X*Y + Z", "Z*X - X*Z - 2*X", "Z*Y - Y*Z + 2*Y"})));
  CHECK(trace.verification.all_ok());
}

TEST_CASE("stage identity: gamma of the certified lift reduces back to the symbols") {
  PipelineTrace trace = pipeline(sl2(), pbs({"e^3", "f^3", "h^3 - 4*h"}), grevlex3());
  OrderSpec o = grevlex3();
  std::vector<CPoly> images;
  for (const NcPoly& g : trace.homogeneous_basis) {
    CPoly im = gamma(g);
    if (!im.is_zero()) images.push_back(im);
  }
  auto reduced = c_reduce_basis(c_buchberger(images, o, true), o);
  CHECK(same_set(reduced, trace.reduced_basis));
}

TEST_CASE("pipeline surfaces infinite U-sets, and a basis change can rescue them") {
  const LieStructure L = abelian(3);
  OrderSpec o = grevlex3();
  auto gens = pbs({"x*z"}, "x y z");
  CHECK_THROWS_AS(pipeline(L, gens, o), pipeline_error);
  try {
    pipeline(L, gens, o);
  } catch (const pipeline_error& e) {
    CHECK(e.stage == "usets");
    CHECK(e.exit_hint == 4);
    REQUIRE(e.monomial.has_value());
    CHECK(*e.monomial == cp("x*z").leading_monomial(o));
  }

  PipelineOptions opts;
  opts.random_basis_change = true;
  opts.seed = 3;
  PipelineTrace trace = pipeline(L, gens, o, opts);
  CHECK(trace.verification.all_ok());
  bool noted = false;
  for (const auto& n : trace.notes)
    if (n.find("change of Lie basis") != std::string::npos) noted = true;
  CHECK(noted);
}

TEST_CASE("the sl2 quotient has the dimension of its two simple blocks") {
  // e^3 = f^3 = 0 and h^3 = 4h leave the 1- and 3-dimensional simple
  // modules, so the quotient algebra has dimension 1 + 9 = 10
  PipelineTrace trace = pipeline(sl2(), pbs({"e^3", "f^3", "h^3 - 4*h"}), grevlex3());
  OrderSpec et = grevlex3().with_word(WordKind::et);
  int standard = 0;
  for (const Word& w : all_words(3, 4)) {
    NcPoly p = NcPoly::term(3, w, Scalar::one(Field{}));
    if (nc_normal_form(p, trace.final_basis, et) == p) ++standard;
  }
  CHECK(standard == 10);
  // and nothing of higher degree survives
  for (const Word& w : all_words(3, 6))
    if (w.deg() > 2) {
      NcPoly p = NcPoly::term(3, w, Scalar::one(Field{}));
      CHECK_FALSE(nc_normal_form(p, trace.final_basis, et) == p);
    }
}

TEST_CASE("eps lift certifies on non-monomial reduced bases") {
  Rng rng(5151);
  int exercised = 0;
  for (int t = 0; t < 60 && exercised < 20; ++t) {
    const int n = rng.i(2, 3);
    OrderSpec ord = OrderSpec::make(CmpKind::grevlex, n);
    std::vector<CPoly> gens;
    for (int k = 0, m = rng.i(1, 2); k < m; ++k) {
      CPoly p = rng.cpoly(n, 3, 2);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto reduced = c_buchberger(gens, ord, true);
    if (reduced.empty() || reduced[0].leading_monomial(ord).is_unit()) continue;
    std::vector<NcPoly> lifted;
    try {
      lifted = eps_lift(reduced, ord, Field{});
    } catch (const uset_infinite_error&) {
      continue;
    }
    ++exercised;
    CHECK(nc_is_groebner(lifted, ord.with_word(WordKind::et)).ok);
    // gamma of the lift generates the same commutative ideal
    std::vector<CPoly> back;
    for (const NcPoly& g : lifted) {
      CPoly im = gamma(g);
      if (!im.is_zero()) back.push_back(im);
    }
    CHECK(same_set(c_buchberger(back, ord, true), reduced));
  }
  CHECK(exercised >= 10);
}

TEST_CASE("filtered lift heads match on random problems") {
  Rng rng(6161);
  int exercised = 0;
  for (int t = 0; t < 60 && exercised < 15; ++t) {
    const int n = rng.i(2, 3);
    const LieStructure L = random_lie(rng, n);
    OrderSpec o = OrderSpec::make(CmpKind::grevlex, n);
    std::vector<PbwPoly> gens;
    for (int k = 0, m = rng.i(1, 2); k < m; ++k) {
      PbwPoly p = rng.pbwpoly(n, 3, 2);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto G = two_sided_groebner(L, gens, o);
    if (G.empty()) continue;
    auto pairs = reduce_symbols_with_preimages(L, G, o);
    if (pairs[0].symbol.leading_monomial(o).is_unit()) continue;
    std::vector<CPoly> symbols;
    for (const auto& p : pairs) symbols.push_back(p.symbol);
    std::vector<NcPoly> homogeneous, lifted;
    try {
      homogeneous = eps_lift(symbols, o, L.field());
      lifted = filtered_lift(L, pairs, o);
    } catch (const uset_infinite_error&) {
      continue;
    }
    ++exercised;
    REQUIRE(homogeneous.size() == lifted.size());
    for (size_t k = 0; k < lifted.size(); ++k) CHECK(lh(lifted[k]) == homogeneous[k]);
    CHECK(nc_is_groebner(nc_tail_reduce(lifted, o.with_word(WordKind::et)),
                         o.with_word(WordKind::et))
              .ok);
  }
  CHECK(exercised >= 10);
}

TEST_CASE("pipeline agrees with bounded free-algebra completion") {
  // cross-oracle on the Heisenberg/Weyl instance
  const LieStructure L = heisenberg();
  OrderSpec o = grevlex3();
  auto gens = pbs({"z - 1"}, "x y z");
  PipelineTrace trace = pipeline(L, gens, o);

  std::vector<NcPoly> start = tailed_commutators(L);
  for (const PbwPoly& s : gens) start.push_back(pbw_section(s));
  auto res = nc_complete_bounded(start, o.with_word(WordKind::et), 6);
  CHECK(res.complete);
  CHECK(same_set(res.basis, nc_reduce_basis(trace.final_basis, o.with_word(WordKind::et))));
}

TEST_SUITE_END();
