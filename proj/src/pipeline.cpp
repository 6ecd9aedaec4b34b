#include "acgb/pipeline.hpp"

#include <chrono>
#include <random>

namespace acgb {

std::vector<NcPoly> tailed_commutators(const LieStructure& L) {
  const int n = L.dim();
  const Field& field = L.field();
  std::vector<NcPoly> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NcPoly c = NcPoly::term(n, Word::letter(j) * Word::letter(i), Scalar::one(field)) -
                 NcPoly::term(n, Word::letter(i) * Word::letter(j), Scalar::one(field));
      const auto form = L.bracket(j, i);
      for (int t = 0; t < n; ++t)
        if (!form[t].is_zero()) c.add_term(Word::letter(t), -form[t]);
      out.push_back(std::move(c));
    }
  return out;
}

std::vector<std::vector<Scalar>> random_change_matrix(const Field& field, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  auto unitriangular = [&](bool lower) {
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (int i = 0; i < n; ++i) {
      m[i][i] = Scalar::one(field);
      for (int j = 0; j < n; ++j)
        if ((lower && j < i) || (!lower && j > i)) m[i][j] = Scalar::of(field, entry(rng));
    }
    return m;
  };
  const auto lo = unitriangular(true);
  const auto up = unitriangular(false);
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(field)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m[i][j] = m[i][j] + lo[i][k] * up[k][j];
  return m;
}

namespace {

class StageClock {
 public:
  explicit StageClock(PipelineTrace& trace) : trace_(trace) {}
  void start() { t0_ = std::chrono::steady_clock::now(); }
  void stop(const std::string& name) {
    const auto t1 = std::chrono::steady_clock::now();
    trace_.timings_ms.emplace_back(name, std::chrono::duration<double, std::milli>(t1 - t0_).count());
  }

 private:
  PipelineTrace& trace_;
  std::chrono::steady_clock::time_point t0_;
};

PipelineTrace run_once(const LieStructure& L, const std::vector<PbwPoly>& gens,
                       const OrderSpec& order, const PipelineOptions& opts) {
  PipelineTrace trace(L, gens, order);
  StageClock clock(trace);

  clock.start();
  trace.twosided_basis = two_sided_groebner(L, gens, order, opts.term_cap);
  clock.stop("twostd");

  clock.start();
  for (const PbwPoly& g : trace.twosided_basis) trace.symbol_basis.push_back(sigma(g));
  clock.stop("symbols");

  clock.start();
  const auto pairs = reduce_symbols_with_preimages(L, trace.twosided_basis, order);
  for (const SymbolPair& p : pairs) trace.reduced_basis.push_back(p.symbol);
  clock.stop("reduced");

  clock.start();
  {
    std::vector<ExpVec> lms;
    for (const CPoly& g : trace.reduced_basis) lms.push_back(g.leading_monomial(order));
    const MonomialIdeal ideal(L.dim(), lms);
    for (const CPoly& g : trace.reduced_basis) {
      if (g.leading_monomial(order).is_unit()) {
        trace.u_sets.emplace_back();  // unit ideal: no U-set applies
        continue;
      }
      USet u = u_set(ideal, g.leading_monomial(order), opts.uset_degree_cap);
      if (!u.finite)
        throw uset_infinite_error("U-set is infinite", g.leading_monomial(order), u.infinite_var);
      std::sort(u.monomials.begin(), u.monomials.end(), [&](const ExpVec& a, const ExpVec& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return cmp_c(order, a, b) < 0;
      });
      trace.u_sets.push_back(std::move(u.monomials));
    }
  }
  clock.stop("usets");

  clock.start();
  trace.homogeneous_basis = eps_lift(trace.reduced_basis, order, L.field(), opts.uset_degree_cap);
  clock.stop("lift_homogeneous");

  clock.start();
  trace.final_basis = nc_tail_reduce(filtered_lift(L, pairs, order, opts.uset_degree_cap), order);
  clock.stop("final");

  for (const NcPoly& c : tailed_commutators(L))
    if (c.nterms() > 2) {
      trace.notes.push_back(
          "commutator relations carry lower-order bracket tails; homogeneous-stage "
          "commutators print without them");
      break;
    }

  if (opts.verify) {
    clock.start();
    trace.verification.ran = true;
    auto homog = nc_is_groebner(trace.homogeneous_basis, order, opts.term_cap);
    trace.verification.homogeneous_is_groebner = homog.ok;
    trace.verification.graded_commutative =
        graded_quotient_is_commutative(trace.homogeneous_basis, order);
    auto fin = nc_is_groebner(trace.final_basis, order, opts.term_cap);
    trace.verification.final_is_groebner = fin.ok;
    if (!fin.ok) trace.verification.detail = "unresolved ambiguity in the final basis";
    if (!homog.ok) trace.verification.detail = "unresolved ambiguity in the homogeneous basis";

    bool vanish = true;
    std::vector<NcPoly> defining = tailed_commutators(L);
    for (const PbwPoly& s : gens)
      if (!s.is_zero()) defining.push_back(pbw_section(s));
    for (const NcPoly& d : defining)
      if (!nc_normal_form(d, trace.final_basis, order, opts.term_cap).is_zero()) vanish = false;
    trace.verification.generators_vanish = vanish;

    bool member = true;
    for (const NcPoly& g : trace.final_basis) {
      PbwPoly img = free_to_pbw(L, g);
      if (!left_normal_form(img, trace.twosided_basis, L, order).is_zero()) member = false;
    }
    trace.verification.elements_in_ideal = member;
    clock.stop("verify");
  }
  return trace;
}

}  // namespace

PipelineTrace pipeline(const LieStructure& L, const std::vector<PbwPoly>& gens,
                       const OrderSpec& order, const PipelineOptions& opts) {
  if (!order.graded())
    throw pipeline_error("order", "the pipeline needs a graded monomial ordering", 3);
  if (!order.identity_ranks())
    throw pipeline_error("order", "the pipeline needs the declared variable order to be the rank order", 3);
  if (auto w = L.validate())
    throw pipeline_error("validate",
                         "Jacobi identity fails on generator triple (" + std::to_string(w->i + 1) +
                             "," + std::to_string(w->j + 1) + "," + std::to_string(w->k + 1) + ")",
                         3);

  OrderSpec ord = order.with_word(WordKind::et);
  try {
    try {
      return run_once(L, gens, ord, opts);
    } catch (const uset_infinite_error& e) {
      if (!opts.random_basis_change) throw;
      auto m = random_change_matrix(L.field(), L.dim(), opts.seed);
      auto [L2, gens2] = lie_change_basis(L, gens, m);
      PipelineTrace trace = run_once(L2, gens2, ord, opts);
      trace.notes.push_back("retried after an infinite U-set with a seeded change of Lie basis");
      return trace;
    }
  } catch (const uset_infinite_error& e) {
    pipeline_error pe("usets", e.what(), 4);
    pe.monomial = e.monomial;
    throw pe;
  } catch (const resource_error& e) {
    throw pipeline_error("completion", e.what(), 4);
  } catch (const symbol_mismatch_error& e) {
    throw pipeline_error("final", e.what(), 3);
  }
}

}  // namespace acgb
