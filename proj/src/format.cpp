#include "acgb/format.hpp"

#include <algorithm>

namespace acgb {

namespace {

struct Piece {
  bool negative = false;
  std::string body;
};

Piece coeff_piece(const Scalar& c, bool has_mono) {
  Piece p;
  Scalar v = c;
  if (c.field().is_rational() && sgn(c.rat()) < 0) {
    p.negative = true;
    v = -c;
  }
  if (!v.is_one() || !has_mono) p.body = v.str();
  return p;
}

std::string join(std::vector<Piece> pieces) {
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].negative ? "-" : "";
    else
      out += pieces[i].negative ? " - " : " + ";
    out += pieces[i].body;
  }
  return out.empty() ? "0" : out;
}

nlohmann::json coeff_json_value(const mpz_class& z) {
  if (z.fits_slong_p()) return (long)z.get_si();
  return z.get_str();
}

nlohmann::json coeff_json(const Scalar& c) {
  nlohmann::json pair = nlohmann::json::array();
  if (c.field().is_rational()) {
    pair.push_back(coeff_json_value(c.rat().get_num()));
    pair.push_back(coeff_json_value(c.rat().get_den()));
  } else {
    pair.push_back(c.residue());
    pair.push_back(1);
  }
  return pair;
}

}  // namespace

std::string mono_str(const ExpVec& m, const std::vector<std::string>& names) {
  std::string s;
  for (int v = 0; v < m.nvars(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[v];
    if (m[v] != 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  int i = 0;
  while (i < w.deg()) {
    int j = i;
    while (j < w.deg() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += names[w[i]];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

template <class Poly, class Key, class KeyStr, class Less>
std::string poly_str_impl(const Poly& p, KeyStr key_str, Less less) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Key, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return less(b.first, a.first); });
  std::vector<Piece> pieces;
  for (const auto& [k, c] : terms) {
    std::string mono = key_str(k);
    Piece piece = coeff_piece(c, !mono.empty());
    if (!piece.body.empty() && !mono.empty()) piece.body += "*";
    piece.body += mono;
    pieces.push_back(std::move(piece));
  }
  return join(std::move(pieces));
}

template <class Poly, class Key, class KeyJson, class Less>
nlohmann::json poly_json_impl(const Poly& p, KeyJson key_json, Less less) {
  std::vector<std::pair<Key, Scalar>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return less(b.first, a.first); });
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [k, c] : terms) {
    nlohmann::json term = coeff_json(c);
    term.push_back(key_json(k));
    out.push_back(std::move(term));
  }
  return out;
}

nlohmann::json expvec_json(const ExpVec& m) {
  nlohmann::json a = nlohmann::json::array();
  for (int v = 0; v < m.nvars(); ++v) a.push_back(m[v]);
  return a;
}

nlohmann::json word_json(const Word& w) {
  nlohmann::json a = nlohmann::json::array();
  for (int v : w.l) a.push_back(v + 1);  // letters are 1-based on the wire
  return a;
}

}  // namespace

std::string cpoly_str(const CPoly& p, const std::vector<std::string>& names, const OrderSpec& o) {
  return poly_str_impl<CPoly, ExpVec>(
      p, [&](const ExpVec& m) { return mono_str(m, names); },
      [&](const ExpVec& a, const ExpVec& b) { return cmp_c(o, a, b) < 0; });
}

std::string pbw_str(const PbwPoly& p, const std::vector<std::string>& names, const OrderSpec& o) {
  return poly_str_impl<PbwPoly, ExpVec>(
      p, [&](const ExpVec& m) { return mono_str(m, names); },
      [&](const ExpVec& a, const ExpVec& b) { return cmp_c(o, a, b) < 0; });
}

std::string ncpoly_str(const NcPoly& p, const std::vector<std::string>& names, const OrderSpec& o) {
  return poly_str_impl<NcPoly, Word>(
      p, [&](const Word& w) { return word_str(w, names); },
      [&](const Word& a, const Word& b) { return cmp_w(o, a, b) < 0; });
}

nlohmann::json cpoly_json(const CPoly& p, const OrderSpec& o) {
  return poly_json_impl<CPoly, ExpVec>(
      p, expvec_json, [&](const ExpVec& a, const ExpVec& b) { return cmp_c(o, a, b) < 0; });
}

nlohmann::json pbw_json(const PbwPoly& p, const OrderSpec& o) {
  return poly_json_impl<PbwPoly, ExpVec>(
      p, expvec_json, [&](const ExpVec& a, const ExpVec& b) { return cmp_c(o, a, b) < 0; });
}

nlohmann::json ncpoly_json(const NcPoly& p, const OrderSpec& o) {
  return poly_json_impl<NcPoly, Word>(
      p, word_json, [&](const Word& a, const Word& b) { return cmp_w(o, a, b) < 0; });
}

}  // namespace acgb
