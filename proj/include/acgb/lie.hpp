#ifndef ACGB_LIE_HPP
#define ACGB_LIE_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "acgb/scalar.hpp"

namespace acgb {

struct PbwCache;

// Structure constants of a finite dimensional Lie algebra: [X_j, X_i] for
// j > i as linear forms in the generators; the rest follows by antisymmetry.
class LieStructure {
 public:
  LieStructure(Field f, int dim);

  int dim() const { return n_; }
  const Field& field() const { return field_; }

  // form[k] is the coefficient of X_k in [X_j, X_i]; j != i
  void set_bracket(int j, int i, std::vector<Scalar> form);
  std::vector<Scalar> bracket(int j, int i) const;
  bool is_abelian() const { return table_.empty(); }

  struct JacobiWitness {
    int i, j, k;
  };
  // nullopt when the Jacobi identity holds on all triples
  std::optional<JacobiWitness> validate() const;

  PbwCache& cache() const;

  bool operator==(const LieStructure& o) const {
    return field_ == o.field_ && n_ == o.n_ && table_ == o.table_;
  }

 private:
  Field field_;
  int n_ = 0;
  std::map<std::pair<int, int>, std::vector<Scalar>> table_;  // keys j > i only
  mutable std::shared_ptr<PbwCache> cache_;
};

}  // namespace acgb

#endif
