#ifndef ACGB_PIPELINE_HPP
#define ACGB_PIPELINE_HPP

#include <string>
#include <vector>

#include "acgb/lift.hpp"

namespace acgb {

struct PipelineOptions {
  bool verify = true;
  bool random_basis_change = false;  // retry once on an infinite U-set
  uint64_t seed = 1;
  int uset_degree_cap = 24;
  size_t term_cap = kDefaultTermCap;
};

struct VerificationReport {
  bool ran = false;
  bool homogeneous_is_groebner = false;
  bool graded_commutative = false;
  bool final_is_groebner = false;
  bool generators_vanish = false;
  bool elements_in_ideal = false;
  std::string detail;  // diamond-lemma witness description on failure

  bool all_ok() const {
    return ran && homogeneous_is_groebner && graded_commutative && final_is_groebner &&
           generators_vanish && elements_in_ideal;
  }
};

// Ordered record of every stage basis plus verification verdicts.
struct PipelineTrace {
  LieStructure lie;
  std::vector<PbwPoly> input;
  OrderSpec order;

  std::vector<PbwPoly> twosided_basis;          // twostd output
  std::vector<CPoly> symbol_basis;              // sigma of it
  std::vector<CPoly> reduced_basis;             // reduced commutative basis
  std::vector<std::vector<ExpVec>> u_sets;      // one per reduced-basis element
  std::vector<NcPoly> homogeneous_basis;        // eps lift
  std::vector<NcPoly> final_basis;              // filtered lift, inter-reduced

  VerificationReport verification;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> notes;

  PipelineTrace(LieStructure l, std::vector<PbwPoly> in, OrderSpec o)
      : lie(std::move(l)), input(std::move(in)), order(std::move(o)) {}
};

struct pipeline_error : std::runtime_error {
  pipeline_error(std::string stage_, const std::string& msg, int exit_hint_)
      : std::runtime_error(msg), stage(std::move(stage_)), exit_hint(exit_hint_) {}
  std::string stage;
  int exit_hint;  // 3 = mathematical domain, 4 = resource/infiniteness
  std::optional<ExpVec> monomial;  // offending monomial for infinite U-sets
};

// End-to-end construction of a finite Groebner basis for the free-algebra
// preimage of <gens> in U(g), with independent verification.
PipelineTrace pipeline(const LieStructure& L, const std::vector<PbwPoly>& gens,
                       const OrderSpec& order, const PipelineOptions& opts = {});

// The defining relations of U(g) in the free algebra: tailed commutators
// X_jX_i - X_iX_j - [X_j,X_i].
std::vector<NcPoly> tailed_commutators(const LieStructure& L);

// Seeded small-entry invertible matrix (unitriangular product), used by the
// retry-on-infinite-U-set path.
std::vector<std::vector<Scalar>> random_change_matrix(const Field& field, int n, uint64_t seed);

}  // namespace acgb

#endif
