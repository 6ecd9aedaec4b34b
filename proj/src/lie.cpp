#include "acgb/lie.hpp"

#include <stdexcept>

namespace acgb {

LieStructure::LieStructure(Field f, int dim) : field_(f), n_(dim) {
  if (dim < 1) throw std::invalid_argument("Lie algebra dimension must be positive");
}

void LieStructure::set_bracket(int j, int i, std::vector<Scalar> form) {
  if (i == j) throw std::invalid_argument("bracket of a generator with itself is zero");
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("generator index");
  if ((int)form.size() != n_) throw std::invalid_argument("bracket form has wrong length");
  if (j < i) {
    for (Scalar& c : form) c = -c;
    std::swap(i, j);
  }
  bool zero = true;
  for (const Scalar& c : form)
    if (!c.is_zero()) zero = false;
  if (zero)
    table_.erase({j, i});
  else
    table_[{j, i}] = std::move(form);
  cache_.reset();
}

std::vector<Scalar> LieStructure::bracket(int j, int i) const {
  std::vector<Scalar> form(n_, Scalar::zero(field_));
  if (i == j) return form;
  const bool flip = j < i;
  if (flip) std::swap(i, j);
  auto it = table_.find({j, i});
  if (it == table_.end()) return form;
  form = it->second;
  if (flip)
    for (Scalar& c : form) c = -c;
  return form;
}

namespace {

// [form, X_k] by bilinearity
std::vector<Scalar> bracket_form_gen(const LieStructure& L, const std::vector<Scalar>& form,
                                     int k) {
  std::vector<Scalar> out(L.dim(), Scalar::zero(L.field()));
  for (int l = 0; l < L.dim(); ++l) {
    if (form[l].is_zero()) continue;
    const auto b = L.bracket(l, k);
    for (int t = 0; t < L.dim(); ++t) out[t] = out[t] + form[l] * b[t];
  }
  return out;
}

}  // namespace

std::optional<LieStructure::JacobiWitness> LieStructure::validate() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        std::vector<Scalar> sum(n_, Scalar::zero(field_));
        auto acc = [&](int a, int b, int c) {
          const auto inner = bracket(a, b);
          const auto outer = bracket_form_gen(*this, inner, c);
          for (int t = 0; t < n_; ++t) sum[t] = sum[t] + outer[t];
        };
        acc(i, j, k);
        acc(j, k, i);
        acc(k, i, j);
        for (int t = 0; t < n_; ++t)
          if (!sum[t].is_zero()) return JacobiWitness{i, j, k};
      }
  return std::nullopt;
}

}  // namespace acgb
