#include "acgb/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace acgb {

namespace {

struct Token {
  enum class Kind { name, number, plus, minus, star, caret, comma, semi, lbrack, rbrack, eq, end };
  Kind kind = Kind::end;
  std::string text;
  long num = 0, den = 1;
  int line = 0, col = 0;
};

class Lexer {
 public:
  Lexer(std::string_view line, int lineno) : s_(line), line_(lineno) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = (int)pos_ + 1;
    if (pos_ >= s_.size() || s_[pos_] == '#') {
      tok_.kind = Token::Kind::end;
      return;
    }
    const char c = s_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
      tok_.kind = Token::Kind::name;
      tok_.text = std::string(s_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      tok_.kind = Token::Kind::number;
      tok_.num = read_int();
      tok_.den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
          std::isdigit((unsigned char)s_[pos_ + 1])) {
        ++pos_;
        tok_.den = read_int();
      }
      return;
    }
    ++pos_;
    switch (c) {
      case '+': tok_.kind = Token::Kind::plus; return;
      case '-': tok_.kind = Token::Kind::minus; return;
      case '*': tok_.kind = Token::Kind::star; return;
      case '^': tok_.kind = Token::Kind::caret; return;
      case ',': tok_.kind = Token::Kind::comma; return;
      case ';': tok_.kind = Token::Kind::semi; return;
      case '[': tok_.kind = Token::Kind::lbrack; return;
      case ']': tok_.kind = Token::Kind::rbrack; return;
      case '=': tok_.kind = Token::Kind::eq; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", line_, (int)pos_);
    }
  }

  long read_int() {
    long v = 0;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
      v = v * 10 + (s_[pos_] - '0');
      if (v < 0) throw ParseError("integer literal too large", line_, (int)pos_ + 1);
      ++pos_;
    }
    return v;
  }

  std::string_view s_;
  size_t pos_ = 0;
  int line_;
  Token tok_;
};

class ProblemParser {
 public:
  Problem parse(std::string_view text) {
    std::vector<std::string> lines;
    {
      std::string buf(text);
      std::istringstream in(buf);
      std::string l;
      while (std::getline(in, l)) lines.push_back(l);
    }

    bool in_ideal = false;
    bool mode_set = false;
    for (size_t li = 0; li < lines.size(); ++li) {
      Lexer lex(lines[li], (int)li + 1);
      if (lex.peek().kind == Token::Kind::end) continue;
      if (lex.peek().kind == Token::Kind::name) {
        const std::string& kw = lex.peek().text;
        if (kw == "field") {
          lex.take();
          parse_field(lex);
          continue;
        }
        if (kw == "vars") {
          lex.take();
          parse_vars(lex);
          continue;
        }
        if (kw == "mode") {
          lex.take();
          parse_mode(lex);
          mode_set = true;
          continue;
        }
        if (kw == "bracket") {
          lex.take();
          parse_bracket(lex);
          continue;
        }
        if (kw == "order") {
          lex.take();
          parse_order(lex);
          continue;
        }
        if (kw == "ideal") {
          Token t = lex.take();
          if (!vars_seen_) throw ParseError("ideal before vars line", t.line, t.col);
          in_ideal = true;
          parse_generators(lex);
          continue;
        }
      }
      if (!in_ideal) {
        const Token& t = lex.peek();
        throw ParseError("expected a directive (field, vars, mode, bracket, order, ideal)",
                         t.line, t.col);
      }
      parse_generators(lex);
    }

    if (!vars_seen_) throw ParseError("missing vars line", (int)lines.size() + 1, 1);
    if (!mode_set) p_.lie_mode = !p_.brackets.empty();
    if (!p_.lie_mode && !p_.brackets.empty()) {
      throw ParseError("bracket lines are only meaningful in lie mode", bracket_line_, 1);
    }
    return p_;
  }

 private:
  void parse_field(Lexer& lex) {
    Token t = lex.take();
    if (t.kind != Token::Kind::name) throw ParseError("expected field name", t.line, t.col);
    if (t.text == "QQ") {
      p_.field = Field{};
    } else if (t.text == "GF") {
      Token n = lex.take();
      if (n.kind != Token::Kind::number || n.den != 1)
        throw ParseError("expected a prime after GF", n.line, n.col);
      if (n.num < 2 || n.num > (1L << 31) || !is_prime((unsigned long)n.num))
        throw ParseError("GF modulus must be a prime below 2^31", n.line, n.col);
      p_.field = Field{(unsigned long)n.num};
    } else {
      throw ParseError("unknown field '" + t.text + "' (use QQ or GF p)", t.line, t.col);
    }
    expect_end(lex);
  }

  void parse_vars(Lexer& lex) {
    if (vars_seen_) {
      const Token& t = lex.peek();
      throw ParseError("duplicate vars line", t.line, t.col);
    }
    while (lex.peek().kind == Token::Kind::name) {
      Token t = lex.take();
      if (var_index_.count(t.text))
        throw ParseError("duplicate variable '" + t.text + "'", t.line, t.col);
      var_index_[t.text] = (int)p_.vars.size();
      p_.vars.push_back(t.text);
    }
    if (p_.vars.empty()) {
      const Token& t = lex.peek();
      throw ParseError("vars line needs at least one name", t.line, t.col);
    }
    expect_end(lex);
    vars_seen_ = true;
  }

  void parse_mode(Lexer& lex) {
    Token t = lex.take();
    if (t.kind != Token::Kind::name || (t.text != "lie" && t.text != "free"))
      throw ParseError("mode must be lie or free", t.line, t.col);
    p_.lie_mode = t.text == "lie";
    expect_end(lex);
  }

  void parse_order(Lexer& lex) {
    Token t = lex.take();
    if (t.kind != Token::Kind::name) throw ParseError("expected an ordering name", t.line, t.col);
    if (t.text == "lex")
      p_.order_kind = CmpKind::lex;
    else if (t.text == "grlex")
      p_.order_kind = CmpKind::grlex;
    else if (t.text == "grevlex")
      p_.order_kind = CmpKind::grevlex;
    else
      throw ParseError("unknown ordering '" + t.text + "'", t.line, t.col);
    expect_end(lex);
  }

  int lookup_var(const Token& t) const {
    auto it = var_index_.find(t.text);
    if (it == var_index_.end())
      throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
    return it->second;
  }

  void parse_bracket(Lexer& lex) {
    if (!vars_seen_) {
      const Token& t = lex.peek();
      throw ParseError("bracket before vars line", t.line, t.col);
    }
    Token t = lex.take();
    bracket_line_ = t.line;
    if (t.kind != Token::Kind::lbrack) throw ParseError("expected '['", t.line, t.col);
    Token a = lex.take();
    if (a.kind != Token::Kind::name) throw ParseError("expected a variable", a.line, a.col);
    t = lex.take();
    if (t.kind != Token::Kind::comma) throw ParseError("expected ','", t.line, t.col);
    Token b = lex.take();
    if (b.kind != Token::Kind::name) throw ParseError("expected a variable", b.line, b.col);
    t = lex.take();
    if (t.kind != Token::Kind::rbrack) throw ParseError("expected ']'", t.line, t.col);
    t = lex.take();
    if (t.kind != Token::Kind::eq) throw ParseError("expected '='", t.line, t.col);

    BracketLine line;
    line.a = lookup_var(a);
    line.b = lookup_var(b);
    if (line.a == line.b)
      throw ParseError("bracket of a variable with itself", a.line, a.col);
    for (const BracketLine& other : p_.brackets)
      if ((other.a == line.a && other.b == line.b) || (other.a == line.b && other.b == line.a))
        throw ParseError("duplicate bracket", a.line, a.col);
    line.form = parse_poly(lex, true);
    for (const ParsedTerm& term : line.form.terms) {
      const bool constant = term.factors.empty();
      const bool linear = term.factors.size() == 1 && term.factors[0].second == 1;
      if (!(linear || (constant && term.coef.is_zero())))
        throw ParseError("bracket right-hand side must be a linear form", a.line, a.col);
    }
    expect_end(lex);
    p_.brackets.push_back(std::move(line));
  }

  void parse_generators(Lexer& lex) {
    for (;;) {
      while (lex.peek().kind == Token::Kind::comma || lex.peek().kind == Token::Kind::semi)
        lex.take();
      if (lex.peek().kind == Token::Kind::end) return;
      p_.generators.push_back(parse_poly(lex, true));
    }
  }

  ParsedPoly parse_poly(Lexer& lex, bool allow_leading_sign) {
    ParsedPoly poly;
    bool negative = false;
    if (allow_leading_sign &&
        (lex.peek().kind == Token::Kind::plus || lex.peek().kind == Token::Kind::minus)) {
      negative = lex.take().kind == Token::Kind::minus;
    }
    poly.terms.push_back(parse_term(lex, negative));
    for (;;) {
      if (lex.peek().kind == Token::Kind::plus || lex.peek().kind == Token::Kind::minus) {
        negative = lex.take().kind == Token::Kind::minus;
        poly.terms.push_back(parse_term(lex, negative));
        continue;
      }
      return poly;  // a bare name or number starts the next generator
    }
  }

  ParsedTerm parse_term(Lexer& lex, bool negative) {
    ParsedTerm term;
    term.coef = Scalar::one(p_.field);
    bool have_coef = false;
    if (lex.peek().kind == Token::Kind::number) {
      Token n = lex.take();
      term.coef = Scalar::of(p_.field, n.num, n.den);
      have_coef = true;
      if (lex.peek().kind == Token::Kind::star) {
        lex.take();
        term.factors.push_back(parse_factor(lex));
      } else if (lex.peek().kind == Token::Kind::name) {
        term.factors.push_back(parse_factor(lex));
      }
    } else {
      term.factors.push_back(parse_factor(lex));
    }
    while (lex.peek().kind == Token::Kind::star) {
      lex.take();
      term.factors.push_back(parse_factor(lex));
    }
    if (!have_coef && term.factors.empty()) {
      const Token& t = lex.peek();
      throw ParseError("expected a term", t.line, t.col);
    }
    if (negative) term.coef = -term.coef;
    return term;
  }

  std::pair<int, int> parse_factor(Lexer& lex) {
    Token t = lex.take();
    if (t.kind != Token::Kind::name)
      throw ParseError("expected a variable name", t.line, t.col);
    const int var = lookup_var(t);
    int exp = 1;
    if (lex.peek().kind == Token::Kind::caret) {
      Token caret = lex.take();
      Token e = lex.take();
      if (e.kind != Token::Kind::number || e.den != 1)
        throw ParseError("expected an integer exponent", e.kind == Token::Kind::end ? caret.line : e.line,
                         e.kind == Token::Kind::end ? caret.col + 1 : e.col);
      if (e.num > 1000000) throw ParseError("exponent too large", e.line, e.col);
      exp = (int)e.num;
    }
    return {var, exp};
  }

  void expect_end(Lexer& lex) {
    const Token& t = lex.peek();
    if (t.kind != Token::Kind::end)
      throw ParseError("unexpected trailing input", t.line, t.col);
  }

  Problem p_;
  std::map<std::string, int> var_index_;
  bool vars_seen_ = false;
  int bracket_line_ = 0;
};

std::string scalar_literal(const Scalar& c) {
  if (c.field().is_rational()) {
    std::string s = c.rat().get_str();
    return s;
  }
  return std::to_string(c.residue());
}

std::string term_text(const ParsedTerm& t, const std::vector<std::string>& vars, bool leading) {
  std::string s;
  Scalar c = t.coef;
  bool negative = false;
  if (c.field().is_rational() && sgn(c.rat()) < 0) {
    negative = true;
    c = -c;
  }
  if (leading)
    s += negative ? "-" : "";
  else
    s += negative ? " - " : " + ";
  std::string body;
  if (!c.is_one() || t.factors.empty()) body = scalar_literal(c);
  for (const auto& [v, e] : t.factors) {
    if (!body.empty()) body += "*";
    body += vars[v];
    if (e != 1) body += "^" + std::to_string(e);
  }
  return s + body;
}

std::string poly_text(const ParsedPoly& p, const std::vector<std::string>& vars) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < p.terms.size(); ++i) s += term_text(p.terms[i], vars, i == 0);
  return s;
}

}  // namespace

LieStructure Problem::lie_structure() const {
  LieStructure L(field, nvars());
  for (const BracketLine& b : brackets) {
    std::vector<Scalar> form(nvars(), Scalar::zero(field));
    for (const ParsedTerm& t : b.form.terms) {
      if (t.factors.empty()) continue;  // zero constant
      form[t.factors[0].first] = form[t.factors[0].first] + t.coef;
    }
    L.set_bracket(b.a, b.b, std::move(form));
  }
  return L;
}

std::vector<PbwPoly> Problem::pbw_generators() const {
  std::vector<PbwPoly> out;
  for (const ParsedPoly& g : generators) {
    PbwPoly p(nvars());
    for (const ParsedTerm& t : g.terms) {
      ExpVec m(nvars());
      for (const auto& [v, e] : t.factors) m.e[v] += e;
      p.add_term(m, t.coef);
    }
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<CPoly> Problem::c_generators() const {
  std::vector<CPoly> out;
  for (const ParsedPoly& g : generators) {
    CPoly p(nvars());
    for (const ParsedTerm& t : g.terms) {
      ExpVec m(nvars());
      for (const auto& [v, e] : t.factors) m.e[v] += e;
      p.add_term(m, t.coef);
    }
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<NcPoly> Problem::nc_generators() const {
  std::vector<NcPoly> out;
  for (const ParsedPoly& g : generators) {
    NcPoly p(nvars());
    for (const ParsedTerm& t : g.terms) {
      std::vector<int> letters;
      for (const auto& [v, e] : t.factors)
        for (int k = 0; k < e; ++k) letters.push_back(v);
      p.add_term(Word(std::move(letters)), t.coef);
    }
    if (!p.is_zero()) out.push_back(std::move(p));
  }
  return out;
}

bool Problem::operator==(const Problem& o) const {
  return field == o.field && vars == o.vars && lie_mode == o.lie_mode && brackets == o.brackets &&
         order_kind == o.order_kind && generators == o.generators && options == o.options;
}

Problem parse_problem(std::string_view text) { return ProblemParser().parse(text); }

std::string render_problem(const Problem& p) {
  std::string out;
  out += "field " + p.field.str() + "\n";
  out += "vars";
  for (const std::string& v : p.vars) out += " " + v;
  out += "\n";
  out += std::string("mode ") + (p.lie_mode ? "lie" : "free") + "\n";
  for (const BracketLine& b : p.brackets)
    out += "bracket [" + p.vars[b.a] + "," + p.vars[b.b] + "] = " + poly_text(b.form, p.vars) + "\n";
  out += "order " + cmp_kind_name(p.order_kind) + "\n";
  out += "ideal\n";
  for (const ParsedPoly& g : p.generators) out += poly_text(g, p.vars) + "\n";
  return out;
}

}  // namespace acgb
