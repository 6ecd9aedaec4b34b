#ifndef ACGB_FORMAT_HPP
#define ACGB_FORMAT_HPP

#include <string>
#include <vector>

#include "acgb/cpoly.hpp"
#include "acgb/ncpoly.hpp"
#include "acgb/pbw.hpp"

#include "json.hpp"

namespace acgb {

// Human-readable polynomials in the declared variable names, terms printed
// in decreasing order.
std::string mono_str(const ExpVec& m, const std::vector<std::string>& names);
std::string word_str(const Word& w, const std::vector<std::string>& names);
std::string cpoly_str(const CPoly& p, const std::vector<std::string>& names, const OrderSpec& o);
std::string pbw_str(const PbwPoly& p, const std::vector<std::string>& names, const OrderSpec& o);
std::string ncpoly_str(const NcPoly& p, const std::vector<std::string>& names, const OrderSpec& o);

// Machine form: a polynomial is a list of [numerator, denominator, monomial];
// a monomial is an exponent list (commutative stages) or a 1-based letter
// list (free stages). Terms emit in decreasing order.
nlohmann::json cpoly_json(const CPoly& p, const OrderSpec& o);
nlohmann::json pbw_json(const PbwPoly& p, const OrderSpec& o);
nlohmann::json ncpoly_json(const NcPoly& p, const OrderSpec& o);

}  // namespace acgb

#endif
