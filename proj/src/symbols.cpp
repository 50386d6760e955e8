#include "polyhankel/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyhankel {

Symbol::Symbol(Terms terms) : terms_(std::move(terms)) { prune(); }

Symbol Symbol::constant(complex c) { return monomial(MultiIndex{}, c); }

Symbol Symbol::monomial(MultiIndex kappa, complex c) {
  Terms t;
  t.emplace(std::move(kappa), c);
  return Symbol(std::move(t));
}

void Symbol::prune() {
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < prune_threshold; });
}

complex Symbol::coefficient(const MultiIndex& kappa) const {
  auto it = terms_.find(kappa);
  return it == terms_.end() ? complex{} : it->second;
}

std::size_t Symbol::width() const noexcept {
  std::size_t w = 0;
  for (const auto& [kappa, c] : terms_)
    w = std::max(w, kappa.width());
  return w;
}

std::vector<std::size_t> Symbol::active_variables() const {
  std::vector<bool> used(width(), false);
  for (const auto& [kappa, c] : terms_)
    for (std::size_t j = 0; j < kappa.width(); ++j)
      if (kappa[j] != 0)
        used[j] = true;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < used.size(); ++j)
    if (used[j])
      out.push_back(j);
  return out;
}

std::uint64_t Symbol::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [kappa, c] : terms_)
    d = std::max(d, kappa.degree());
  return d;
}

bool Symbol::is_homogeneous() const noexcept {
  if (terms_.empty())
    return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& kv) { return kv.first.degree() == d; });
}

double Symbol::l2_norm() const noexcept {
  double s = 0.0;
  for (const auto& [kappa, c] : terms_)
    s += std::norm(c);
  return std::sqrt(s);
}

complex Symbol::evaluate(std::span<const complex> z) const {
  complex sum{};
  for (const auto& [kappa, c] : terms_) {
    complex term = c;
    for (std::size_t j = 0; j < kappa.width(); ++j)
      for (MultiIndex::value_type r = 0; r < kappa[j]; ++r)
        term *= z[j];
    sum += term;
  }
  return sum;
}

Symbol operator*(const Symbol& f, const Symbol& g) {
  Symbol::Terms out;
  for (const auto& [a, fa] : f.terms_)
    for (const auto& [b, gb] : g.terms_)
      out[a + b] += fa * gb;
  return Symbol(std::move(out));
}

Symbol operator*(complex c, const Symbol& f) {
  Symbol::Terms out = f.terms_;
  for (auto& [kappa, v] : out)
    v *= c;
  return Symbol(std::move(out));
}

Symbol operator+(const Symbol& f, const Symbol& g) {
  Symbol::Terms out = f.terms_;
  for (const auto& [kappa, v] : g.terms_)
    out[kappa] += v;
  return Symbol(std::move(out));
}

Symbol linear(std::span<const complex> c) {
  if (c.empty())
    throw std::invalid_argument("linear: coefficient vector must be nonempty");
  Symbol::Terms t;
  for (std::size_t j = 0; j < c.size(); ++j)
    t.emplace(MultiIndex::unit(j), c[j]);
  return Symbol(std::move(t));
}

Symbol normalized_linear(std::size_t d) {
  if (d == 0)
    throw std::invalid_argument("normalized_linear: d must be positive");
  const std::vector<complex> c(d, 1.0 / std::sqrt(static_cast<double>(d)));
  return linear(c);
}

Symbol multiply(const Symbol& f, const Symbol& g) { return f * g; }

Symbol shift(const Symbol& f, std::size_t k) {
  Symbol::Terms t;
  for (const auto& [kappa, c] : f.terms())
    t.emplace(shift_multiindex(kappa, k), c);
  return Symbol(std::move(t));
}

complex inner(const Symbol& f, const Symbol& phi) {
  const auto& small = f.size() <= phi.size() ? f : phi;
  const auto& large = f.size() <= phi.size() ? phi : f;
  complex sum{};
  for (const auto& [kappa, c] : small.terms()) {
    auto it = large.terms().find(kappa);
    if (it == large.terms().end())
      continue;
    sum += (&small == &f) ? c * std::conj(it->second) : it->second * std::conj(c);
  }
  return sum;
}

} // namespace polyhankel
