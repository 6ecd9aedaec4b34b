#ifndef ACGB_DETAIL_TERMS_HPP
#define ACGB_DETAIL_TERMS_HPP

#include <map>

#include "acgb/scalar.hpp"

namespace acgb::detail {

// Sparse term-table helpers shared by the three polynomial types.
// Keys are stored under their container order; no zero coefficient survives.

template <class K>
void add_term(std::map<K, Scalar>& t, const K& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) t.erase(it);
}

template <class K>
void add_all(std::map<K, Scalar>& t, const std::map<K, Scalar>& o, const Scalar* scale = nullptr) {
  for (const auto& [k, c] : o) add_term(t, k, scale ? *scale * c : c);
}

template <class K>
std::map<K, Scalar> negate(const std::map<K, Scalar>& t) {
  std::map<K, Scalar> r;
  for (const auto& [k, c] : t) r.emplace(k, -c);
  return r;
}

template <class K>
std::map<K, Scalar> scale(const std::map<K, Scalar>& t, const Scalar& s) {
  std::map<K, Scalar> r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : t) r.emplace(k, s * c);
  return r;
}

}  // namespace acgb::detail

#endif
