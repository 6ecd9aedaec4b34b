#ifndef ACGB_FREE_GROEBNER_HPP
#define ACGB_FREE_GROEBNER_HPP

#include <optional>
#include <vector>

#include "acgb/ncpoly.hpp"

namespace acgb {

inline constexpr size_t kDefaultTermCap = 1u << 20;

struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Critical pair of two leading words: a proper overlap (a suffix of one is
// a prefix of the other, self-overlaps included) or an inclusion of one in
// the other. `word` is the superposition; the offsets locate both leading
// words inside it.
struct Ambiguity {
  enum class Kind { overlap, inclusion };
  size_t i = 0, j = 0;
  Kind kind = Kind::overlap;
  Word word;
  int off_i = 0, off_j = 0;
};

std::vector<Ambiguity> ambiguities(const std::vector<NcPoly>& basis, const OrderSpec& order);

// Two-sided normal form: rewrites the largest reducible term at its leftmost
// reducible offset with the smallest matching basis element until no term
// contains any leading word. Requires a graded order.
NcPoly nc_normal_form(const NcPoly& f, const std::vector<NcPoly>& basis, const OrderSpec& order,
                      size_t term_cap = kDefaultTermCap);

// Diamond-lemma confluence check; on failure carries the offending ambiguity
// together with the two irreducible reducts and their difference.
struct GroebnerCheck {
  bool ok = true;
  std::optional<Ambiguity> witness;
  NcPoly left_nf, right_nf, difference;
};

GroebnerCheck nc_is_groebner(const std::vector<NcPoly>& basis, const OrderSpec& order,
                             size_t term_cap = kDefaultTermCap);

// Degree-bounded completion: resolves every ambiguity whose superposition
// word has degree <= max_degree, inter-reducing after each addition.
// `complete` is false when some ambiguity above the bound fails to resolve;
// when true the output is a full Groebner basis.
struct CompletionResult {
  std::vector<NcPoly> basis;
  bool complete = true;
};

CompletionResult nc_complete_bounded(std::vector<NcPoly> gens, const OrderSpec& order,
                                     int max_degree, size_t term_cap = kDefaultTermCap);

// For a Groebner basis of a graded ideal: do all commutators X_jX_i - X_iX_j
// reduce to zero?
bool graded_quotient_is_commutative(const std::vector<NcPoly>& lh_basis, const OrderSpec& order);

// Inter-reduce and normalize monic; for a Groebner basis this yields the
// unique reduced basis, sorted by leading word.
std::vector<NcPoly> nc_reduce_basis(std::vector<NcPoly> basis, const OrderSpec& order);

// Monic + tail-reduction only: non-leading terms become irreducible but no
// element is dropped, so a Groebner basis keeps its element count (and stays
// a Groebner basis).
std::vector<NcPoly> nc_tail_reduce(std::vector<NcPoly> basis, const OrderSpec& order);

}  // namespace acgb

#endif
