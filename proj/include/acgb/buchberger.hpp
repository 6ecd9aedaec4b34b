#ifndef ACGB_BUCHBERGER_HPP
#define ACGB_BUCHBERGER_HPP

#include <vector>

#include "acgb/cpoly.hpp"

namespace acgb {

// Division remainder: no term of the result is divisible by any LM(g).
CPoly c_normal_form(const CPoly& f, const std::vector<CPoly>& basis, const OrderSpec& order);

CPoly c_spoly(const CPoly& f, const CPoly& g, const OrderSpec& order);

// Buchberger completion with the normal selection strategy (lowest lcm
// degree first) and the coprimality criterion. Output is monic; with
// `reduce` set it is the unique reduced basis.
std::vector<CPoly> c_buchberger(std::vector<CPoly> gens, const OrderSpec& order,
                                bool reduce = true);

// Minimalize + tail-reduce + monic. The reduced basis of a Groebner basis
// is canonical for the given order.
std::vector<CPoly> c_reduce_basis(std::vector<CPoly> basis, const OrderSpec& order);

// Substitute x_i by the linear form given by row i of m. Throws
// std::domain_error when m is singular.
std::vector<CPoly> apply_linear_change(const std::vector<CPoly>& polys,
                                       const std::vector<std::vector<Scalar>>& m);

bool matrix_invertible(const std::vector<std::vector<Scalar>>& m);
std::vector<std::vector<Scalar>> matrix_inverse(const std::vector<std::vector<Scalar>>& m);

}  // namespace acgb

#endif
