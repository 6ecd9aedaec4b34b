#ifndef ACGB_PROBLEM_HPP
#define ACGB_PROBLEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "acgb/cpoly.hpp"
#include "acgb/ncpoly.hpp"
#include "acgb/pbw.hpp"

namespace acgb {

// A parsed term keeps its written factor order so free-algebra readings and
// round-trip rendering stay faithful.
struct ParsedTerm {
  Scalar coef;
  std::vector<std::pair<int, int>> factors;  // (variable, exponent)
  bool operator==(const ParsedTerm&) const = default;
};

struct ParsedPoly {
  std::vector<ParsedTerm> terms;
  bool operator==(const ParsedPoly&) const = default;
};

struct BracketLine {
  int a = 0, b = 0;  // [vars[a], vars[b]]
  ParsedPoly form;
  bool operator==(const BracketLine&) const = default;
};

struct ProblemOptions {
  int max_degree = 6;
  uint64_t seed = 1;
  bool verify = true;
  size_t term_cap = kDefaultTermCap;
  bool operator==(const ProblemOptions&) const = default;
};

struct Problem {
  Field field;
  std::vector<std::string> vars;  // smallest rank first
  bool lie_mode = false;
  std::vector<BracketLine> brackets;
  CmpKind order_kind = CmpKind::grevlex;
  std::vector<ParsedPoly> generators;
  ProblemOptions options;

  int nvars() const { return (int)vars.size(); }
  OrderSpec order() const { return OrderSpec::make(order_kind, nvars()); }
  LieStructure lie_structure() const;
  std::vector<PbwPoly> pbw_generators() const;  // zero generators dropped
  std::vector<CPoly> c_generators() const;
  std::vector<NcPoly> nc_generators() const;

  bool operator==(const Problem&) const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_),
        col(col_) {}
  int line, col;
};

Problem parse_problem(std::string_view text);
std::string render_problem(const Problem& p);

}  // namespace acgb

#endif
