#include "acgb/driver.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "acgb/buchberger.hpp"
#include "acgb/format.hpp"
#include "acgb/pipeline.hpp"
#include "acgb/problem.hpp"

namespace acgb {

namespace {

constexpr const char* kUsage =
    "usage: acgb <pipeline|comgb|envgb|freegb|check> <file> [flags]\n"
    "flags: --json --no-verify --seed N --random-basis-change --max-deg N --term-cap N\n";

struct Flags {
  bool json = false;
  bool no_verify = false;
  bool random_basis_change = false;
  std::optional<uint64_t> seed;
  std::optional<int> max_degree;
  std::optional<size_t> term_cap;
};

struct UsageError {
  std::string message;
};

uint64_t parse_count(const std::string& flag, const std::string& value) {
  try {
    if (value.empty() || value[0] == '-' || value[0] == '+') throw std::invalid_argument(value);
    size_t used = 0;
    unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError{"flag " + flag + " needs a nonnegative integer, got '" + value + "'"};
  }
}

Flags parse_flags(const std::vector<std::string>& args, size_t from) {
  Flags f;
  for (size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto next = [&](const char* flag) {
      if (++i >= args.size()) throw UsageError{std::string(flag) + " needs a value"};
      return args[i];
    };
    if (a == "--json")
      f.json = true;
    else if (a == "--no-verify")
      f.no_verify = true;
    else if (a == "--random-basis-change")
      f.random_basis_change = true;
    else if (a == "--seed")
      f.seed = parse_count(a, next("--seed"));
    else if (a == "--max-deg")
      f.max_degree = (int)parse_count(a, next("--max-deg"));
    else if (a == "--term-cap")
      f.term_cap = parse_count(a, next("--term-cap"));
    else
      throw UsageError{"unknown flag '" + a + "'"};
  }
  return f;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

struct StageDoc {
  std::string name;
  std::vector<std::string> lines;        // text form
  nlohmann::json basis = nlohmann::json::array();
};

void emit(std::ostream& out, bool json, const std::vector<StageDoc>& stages,
          const nlohmann::json& verification) {
  if (json) {
    nlohmann::json doc;
    doc["stages"] = nlohmann::json::array();
    for (const StageDoc& s : stages) doc["stages"].push_back({{"name", s.name}, {"basis", s.basis}});
    doc["verification"] = verification;
    out << doc.dump(2) << "\n";
    return;
  }
  for (const StageDoc& s : stages) {
    out << "stage " << s.name << " (" << s.lines.size() << " elements)\n";
    for (const std::string& l : s.lines) out << "  " << l << "\n";
  }
  if (!verification.empty()) {
    out << "verification\n";
    for (auto it = verification.begin(); it != verification.end(); ++it)
      out << "  " << it.key() << ": "
          << (it->is_boolean() ? (it->get<bool>() ? "yes" : "no") : it->dump()) << "\n";
  }
}

int cmd_pipeline(const Problem& p, const Flags& flags, std::ostream& out, std::ostream& err) {
  if (!p.lie_mode) throw UsageError{"pipeline needs a lie-mode problem (add bracket lines or 'mode lie')"};
  PipelineOptions opts;
  opts.verify = p.options.verify && !flags.no_verify;
  opts.random_basis_change = flags.random_basis_change;
  opts.seed = flags.seed.value_or(p.options.seed);
  opts.term_cap = flags.term_cap.value_or(p.options.term_cap);

  const OrderSpec c_order = p.order();
  const OrderSpec w_order = c_order.with_word(WordKind::et);
  try {
    PipelineTrace trace = pipeline(p.lie_structure(), p.pbw_generators(), c_order, opts);

    std::vector<StageDoc> stages(6);
    stages[0].name = "twostd";
    for (const PbwPoly& g : trace.twosided_basis) {
      stages[0].lines.push_back(pbw_str(g, p.vars, c_order));
      stages[0].basis.push_back(pbw_json(g, c_order));
    }
    stages[1].name = "symbols";
    for (const CPoly& g : trace.symbol_basis) {
      stages[1].lines.push_back(cpoly_str(g, p.vars, c_order));
      stages[1].basis.push_back(cpoly_json(g, c_order));
    }
    stages[2].name = "reduced";
    for (const CPoly& g : trace.reduced_basis) {
      stages[2].lines.push_back(cpoly_str(g, p.vars, c_order));
      stages[2].basis.push_back(cpoly_json(g, c_order));
    }
    stages[3].name = "usets";
    for (size_t i = 0; i < trace.u_sets.size(); ++i) {
      const ExpVec& head = trace.reduced_basis[i].leading_monomial(c_order);
      std::string line = "U(" + (head.is_unit() ? std::string("1") : mono_str(head, p.vars)) + ") = {";
      for (size_t k = 0; k < trace.u_sets[i].size(); ++k) {
        const ExpVec& m = trace.u_sets[i][k];
        line += (k ? ", " : " ") + (m.is_unit() ? std::string("1") : mono_str(m, p.vars));
        stages[3].basis.push_back(cpoly_json(CPoly::term(p.nvars(), m, Scalar::one(p.field)), c_order));
      }
      line += " }";
      stages[3].lines.push_back(std::move(line));
    }
    stages[4].name = "lift_homogeneous";
    for (const NcPoly& g : trace.homogeneous_basis) {
      stages[4].lines.push_back(ncpoly_str(g, p.vars, w_order));
      stages[4].basis.push_back(ncpoly_json(g, w_order));
    }
    stages[5].name = "final";
    for (const NcPoly& g : trace.final_basis) {
      stages[5].lines.push_back(ncpoly_str(g, p.vars, w_order));
      stages[5].basis.push_back(ncpoly_json(g, w_order));
    }

    nlohmann::json ver;
    ver["ran"] = trace.verification.ran;
    if (trace.verification.ran) {
      ver["homogeneous_is_groebner"] = trace.verification.homogeneous_is_groebner;
      ver["graded_quotient_commutative"] = trace.verification.graded_commutative;
      ver["final_is_groebner"] = trace.verification.final_is_groebner;
      ver["generators_vanish"] = trace.verification.generators_vanish;
      ver["elements_in_ideal"] = trace.verification.elements_in_ideal;
    } else {
      ver["note"] = "unverified";
    }
    emit(out, flags.json, stages, ver);
    return 0;
  } catch (const pipeline_error& e) {
    err << "error [stage " << e.stage << "]: " << e.what();
    if (e.monomial) err << " (monomial " << mono_str(*e.monomial, p.vars) << ")";
    err << "\n";
    return e.exit_hint;
  }
}

int cmd_comgb(const Problem& p, const Flags& flags, std::ostream& out) {
  const OrderSpec order = p.order();
  std::vector<CPoly> basis = c_buchberger(p.c_generators(), order, true);
  StageDoc stage;
  stage.name = "comgb";
  for (const CPoly& g : basis) {
    stage.lines.push_back(cpoly_str(g, p.vars, order));
    stage.basis.push_back(cpoly_json(g, order));
  }
  emit(out, flags.json, {stage}, nlohmann::json::object());
  return 0;
}

int cmd_envgb(const Problem& p, const Flags& flags, std::ostream& out, std::ostream& err) {
  if (!p.lie_mode) throw UsageError{"envgb needs a lie-mode problem"};
  const OrderSpec order = p.order();
  try {
    std::vector<PbwPoly> basis = two_sided_groebner(p.lie_structure(), p.pbw_generators(), order,
                                                    flags.term_cap.value_or(p.options.term_cap));
    StageDoc stage;
    stage.name = "twostd";
    for (const PbwPoly& g : basis) {
      stage.lines.push_back(pbw_str(g, p.vars, order));
      stage.basis.push_back(pbw_json(g, order));
    }
    emit(out, flags.json, {stage}, nlohmann::json::object());
    return 0;
  } catch (const std::domain_error& e) {
    err << "error [stage twostd]: " << e.what() << "\n";
    return 3;
  } catch (const resource_error& e) {
    err << "error [stage twostd]: " << e.what() << "\n";
    return 4;
  }
}

int cmd_freegb(const Problem& p, const Flags& flags, std::ostream& out, std::ostream& err) {
  if (p.lie_mode) throw UsageError{"freegb works on free-mode problems"};
  const OrderSpec order = p.order().with_word(WordKind::et);
  const int max_deg = flags.max_degree.value_or(p.options.max_degree);
  try {
    CompletionResult res = nc_complete_bounded(p.nc_generators(), order, max_deg,
                                               flags.term_cap.value_or(p.options.term_cap));
    StageDoc stage;
    stage.name = "completion";
    for (const NcPoly& g : res.basis) {
      stage.lines.push_back(ncpoly_str(g, p.vars, order));
      stage.basis.push_back(ncpoly_json(g, order));
    }
    nlohmann::json ver;
    ver["complete"] = res.complete;
    emit(out, flags.json, {stage}, ver);
    return 0;
  } catch (const resource_error& e) {
    err << "error [stage completion]: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    err << "error [stage completion]: " << e.what() << "\n";
    return 3;
  }
}

int cmd_check(const Problem& p, const Flags& flags, std::ostream& out, std::ostream& err) {
  if (p.lie_mode) throw UsageError{"check works on free-mode problems"};
  const OrderSpec order = p.order().with_word(WordKind::et);
  std::vector<NcPoly> relations = p.nc_generators();
  if (relations.empty()) throw UsageError{"check needs at least one relation"};
  try {
    GroebnerCheck res = nc_is_groebner(relations, order, flags.term_cap.value_or(p.options.term_cap));
    const bool commutative = graded_quotient_is_commutative(relations, order);

    StageDoc stage;
    stage.name = "input";
    for (const NcPoly& g : relations) {
      stage.lines.push_back(ncpoly_str(g, p.vars, order));
      stage.basis.push_back(ncpoly_json(g, order));
    }
    nlohmann::json ver;
    ver["is_groebner"] = res.ok;
    ver["graded_quotient_commutative"] = commutative;
    if (!res.ok) {
      ver["witness_word"] = word_str(res.witness->word, p.vars);
      ver["witness_elements"] = {res.witness->i + 1, res.witness->j + 1};
      ver["witness_normal_forms"] = {ncpoly_str(res.left_nf, p.vars, order),
                                     ncpoly_str(res.right_nf, p.vars, order)};
    }
    emit(out, flags.json, {stage}, ver);
    return 0;
  } catch (const resource_error& e) {
    err << "error [stage check]: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.size() < 2) throw UsageError{"missing subcommand or file"};
    const std::string& cmd = args[0];
    const Flags flags = parse_flags(args, 2);
    const Problem p = load_problem(args[1]);

    if (cmd == "pipeline") return cmd_pipeline(p, flags, out, err);
    if (cmd == "comgb") return cmd_comgb(p, flags, out);
    if (cmd == "envgb") return cmd_envgb(p, flags, out, err);
    if (cmd == "freegb") return cmd_freegb(p, flags, out, err);
    if (cmd == "check") return cmd_check(p, flags, out, err);
    throw UsageError{"unknown subcommand '" + cmd + "'"};
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n" << kUsage;
    return 2;
  }
}

}  // namespace acgb
