#include "polyhankel/nehari.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyhankel {

namespace {

const double steinhaus_l1 = std::sqrt(std::numbers::pi) / 2.0;

double l2(std::span<const complex> v) {
  double s = 0.0;
  for (const auto& x : v)
    s += std::norm(x);
  return std::sqrt(s);
}

NormEstimate l1_estimate(const Symbol& f, const RatioOptions& options) {
  if (options.method == Method::grid)
    return norm_grid(f, 1.0, options.grid);
  return norm_mc(f, 1.0, options.mc_samples, options.seed, options.mc);
}

double two_to_one_over(double p) { return std::isinf(p) ? 1.0 : std::pow(2.0, 1.0 / p); }

} // namespace

double p_zero() noexcept { return 1.0 / (1.0 - std::log(std::numbers::pi) / std::log(4.0)); }

bool decide_exceeds_one(double ratio, double ratio_std_error, Method method) noexcept {
  if (method == Method::grid)
    return ratio > 1.0 + grid_decision_tol;
  return ratio - mc_sigma_guard * ratio_std_error > 1.0;
}

RatioReport ratio(const Symbol& f, const Symbol& phi, double p, const RatioOptions& options) {
  if (f.is_zero() || phi.is_zero())
    throw std::invalid_argument("ratio: f and phi must be nonzero");
  RatioReport r;
  r.p = p;
  r.d = std::max(f.width(), phi.width());
  r.inner = inner(f, phi);
  r.schatten = schatten_norm(singular_values(build_matrix(phi, options.max_dim)), p);
  r.l1 = l1_estimate(f, options);
  r.ratio = std::abs(r.inner) / (r.schatten * r.l1.value);
  r.ratio_std_error = r.l1.value > 0.0 ? r.ratio * r.l1.std_error / r.l1.value : 0.0;
  r.exceeded_one = decide_exceeds_one(r.ratio, r.ratio_std_error, r.l1.method);
  return r;
}

std::pair<Symbol, Symbol> amplify(const Symbol& f, const Symbol& phi, std::size_t m) {
  if (m == 0)
    throw std::invalid_argument("amplify: m must be positive");
  const std::size_t step = std::max(f.width(), phi.width());
  Symbol big_f = f;
  Symbol big_phi = phi;
  for (std::size_t j = 1; j < m; ++j) {
    big_f = big_f * shift(f, j * step);
    big_phi = big_phi * shift(phi, j * step);
  }
  return {std::move(big_f), std::move(big_phi)};
}

RatioReport amplified_report(const RatioReport& base, std::size_t m) {
  if (m == 0)
    throw std::invalid_argument("amplified_report: m must be positive");
  const double mm = static_cast<double>(m);
  RatioReport r = base;
  r.d = base.d * m;
  r.inner = 1.0;
  for (std::size_t j = 0; j < m; ++j)
    r.inner *= base.inner;
  r.schatten = std::pow(base.schatten, mm);
  r.l1.value = std::pow(base.l1.value, mm);
  // Delta method on x^m.
  r.l1.std_error = mm * std::pow(base.l1.value, mm - 1.0) * base.l1.std_error;
  r.ratio = std::pow(base.ratio, mm);
  r.ratio_std_error = mm * std::pow(base.ratio, mm - 1.0) * base.ratio_std_error;
  r.exceeded_one = decide_exceeds_one(r.ratio, r.ratio_std_error, r.l1.method);
  return r;
}

Theorem1Report verify_theorem1(std::size_t d, double p, const RatioOptions& options) {
  if (d == 0)
    throw std::invalid_argument("verify_theorem1: d must be positive");
  if (!(p > 0.0))
    throw std::invalid_argument("verify_theorem1: p must be positive");
  const Symbol phi = normalized_linear(d);
  Theorem1Report t;
  t.spectrum = singular_values(build_matrix(phi, options.max_dim));
  for (std::size_t i = 0; i < t.spectrum.values.size(); ++i) {
    const double expected = i < 2 ? 1.0 : 0.0;
    t.spectrum_error = std::max(t.spectrum_error, std::abs(t.spectrum.values[i] - expected));
  }
  t.spectrum_ok = t.spectrum.values.size() == d + 1 && t.spectrum_error < 1e-10;
  t.schatten = schatten_norm(t.spectrum, p);
  t.expected_schatten = two_to_one_over(p);
  t.schatten_ok = std::abs(t.schatten - t.expected_schatten) < 1e-10;
  t.ratio = ratio(phi, phi, p, options);
  return t;
}

ScanResult counterexample_scan(double p, std::size_t d_max, const RatioOptions& options, bool stop_at_first) {
  if (!(p > 0.0))
    throw std::invalid_argument("counterexample_scan: p must be positive");
  if (d_max == 0)
    throw std::invalid_argument("counterexample_scan: d_max must be positive");
  ScanResult out;
  for (std::size_t d = 1; d <= d_max; ++d) {
    const Symbol phi = normalized_linear(d);
    out.records.push_back(ratio(phi, phi, p, options));
    if (out.records.back().exceeded_one && !out.minimal_d) {
      out.minimal_d = d;
      if (stop_at_first)
        break;
    }
  }
  return out;
}

LinearSpectrumCheck verify_linear_spectrum(std::span<const complex> a, double tol) {
  LinearSpectrumCheck c;
  c.norm_a = l2(a);
  c.spectrum = singular_values(build_matrix(linear(a)));
  for (std::size_t i = 0; i < c.spectrum.values.size(); ++i) {
    const double expected = i < 2 ? c.norm_a : 0.0;
    c.max_error = std::max(c.max_error, std::abs(c.spectrum.values[i] - expected));
  }
  c.ok = c.max_error <= tol;
  return c;
}

Theorem2Report verify_theorem2(std::span<const complex> a, std::span<const complex> b, double p,
                               const RatioOptions& options) {
  if (!(p > 0.0))
    throw std::invalid_argument("verify_theorem2: p must be positive");
  if (p > p_zero())
    throw std::invalid_argument("verify_theorem2: the bound only applies for p <= p0");
  const Symbol phi = linear(a);
  const Symbol f = linear(b);
  if (phi.is_zero() || f.is_zero())
    throw std::invalid_argument("verify_theorem2: a and b must be nonzero");

  Theorem2Report t;
  t.p = p;
  t.norm_a = l2(a);
  t.norm_b = l2(b);
  t.l1 = l1_estimate(f, options).value;
  t.schatten = schatten_norm(singular_values(build_matrix(phi, options.max_dim)), p);
  const double factor = two_to_one_over(p);
  t.lhs = factor * t.norm_a * t.l1;
  t.khintchine_bound = factor * t.norm_a * steinhaus_l1 * t.norm_b;
  t.cauchy_schwarz = t.norm_a * t.norm_b;
  t.inner_abs = std::abs(inner(f, phi));

  const double scale = std::max(1.0, t.cauchy_schwarz);
  t.schatten_matches = std::abs(t.schatten - factor * t.norm_a) <= 1e-10 * std::max(1.0, t.schatten);
  t.lhs_ge_khintchine = t.lhs >= t.khintchine_bound - grid_decision_tol * scale;
  t.khintchine_ge_cs = t.khintchine_bound >= t.cauchy_schwarz - 1e-12 * scale;
  t.cs_ge_inner = t.cauchy_schwarz >= t.inner_abs - 1e-12 * scale;
  return t;
}

} // namespace polyhankel
