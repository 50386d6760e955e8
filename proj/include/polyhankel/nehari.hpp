#pragma once

#include "polyhankel/hankel.hpp"
#include "polyhankel/integrals.hpp"
#include "polyhankel/spectra.hpp"
#include "polyhankel/symbols.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace polyhankel {

/// Critical exponent (1 - ln(pi)/ln(4))^{-1}, the root of 2^{1/p} sqrt(pi)/2 = 1.
[[nodiscard]] double p_zero() noexcept;

/// Guard band, in standard errors, for decisions taken on Monte Carlo estimates.
inline constexpr double mc_sigma_guard = 4.0;
/// Absolute margin for decisions taken on grid estimates.
inline constexpr double grid_decision_tol = 1e-9;

struct RatioOptions {
  Method method = Method::grid;
  GridOptions grid{};
  McOptions mc{};
  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t seed = 20160601;
  std::size_t max_dim = default_max_dim;
};

/// |<f, phi>| / (||H_phi||_{S_p} ||f||_1) with its factors.
struct RatioReport {
  complex inner{};
  double schatten = 0.0;
  NormEstimate l1{};
  double ratio = 0.0;
  /// Standard error of the ratio induced by the L1 estimate (zero for grid).
  double ratio_std_error = 0.0;
  double p = 0.0;
  std::size_t d = 0;
  /// Grid: ratio > 1 + grid_decision_tol. MC: ratio - 4 * ratio_std_error > 1.
  bool exceeded_one = false;
};

/// Throws std::invalid_argument for zero f or phi; propagates MatrixTooLarge,
/// WidthTooLarge and NoConvergence.
[[nodiscard]] RatioReport ratio(const Symbol& f, const Symbol& phi, double p, const RatioOptions& options = {});

/// Applies the decision rule of RatioReport::exceeded_one to a ratio and its L1 estimate.
[[nodiscard]] bool decide_exceeds_one(double ratio, double ratio_std_error, Method method) noexcept;

/// (F, Phi): products of m copies of f and phi, copy j shifted by j * d with
/// d = max(width f, width phi), so copies live on disjoint variables.
[[nodiscard]] std::pair<Symbol, Symbol> amplify(const Symbol& f, const Symbol& phi, std::size_t m);

/// Report for the m-fold amplified pair obtained from a base report through
/// the product identities (inner product, Schatten norm and L1 norm all
/// factor over disjoint variables); nothing is assembled.
[[nodiscard]] RatioReport amplified_report(const RatioReport& base, std::size_t m);

struct Theorem1Report {
  SingularSpectrum spectrum;
  double schatten = 0.0;
  double expected_schatten = 0.0;
  /// Largest deviation of the spectrum from {1, 1, 0, ..., 0}.
  double spectrum_error = 0.0;
  bool spectrum_ok = false;
  bool schatten_ok = false;
  RatioReport ratio;
};

/// phi = f = normalized_linear(d): checks spectrum {1, 1, 0^{d-1}} and
/// ||H_phi||_{S_p} = 2^{1/p} to 1e-10, and evaluates the ratio.
[[nodiscard]] Theorem1Report verify_theorem1(std::size_t d, double p, const RatioOptions& options = {});

struct ScanResult {
  std::vector<RatioReport> records;
  std::optional<std::size_t> minimal_d;
};

/// Ratio of f = phi = normalized_linear(d) for d = 1..d_max, ordered by d.
/// With stop_at_first the scan ends at the first d whose ratio exceeds one.
[[nodiscard]] ScanResult counterexample_scan(double p, std::size_t d_max, const RatioOptions& options = {},
                                             bool stop_at_first = false);

struct LinearSpectrumCheck {
  SingularSpectrum spectrum;
  double norm_a = 0.0;
  double max_error = 0.0;
  bool ok = false;
};

/// Spectrum of linear(a) against {||a||, ||a||, 0, ...} within tol.
[[nodiscard]] LinearSpectrumCheck verify_linear_spectrum(std::span<const complex> a, double tol = 1e-10);

struct Theorem2Report {
  double p = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  double l1 = 0.0;
  /// ||H_phi||_{S_p} from the assembled matrix.
  double schatten = 0.0;
  /// 2^{1/p} ||a|| ||f||_1
  double lhs = 0.0;
  /// 2^{1/p} ||a|| (sqrt(pi)/2) ||b||
  double khintchine_bound = 0.0;
  /// ||a|| ||b||
  double cauchy_schwarz = 0.0;
  /// |<f, phi>|
  double inner_abs = 0.0;
  bool schatten_matches = false;
  bool lhs_ge_khintchine = false;
  bool khintchine_ge_cs = false;
  bool cs_ge_inner = false;
  [[nodiscard]] bool holds() const noexcept {
    return schatten_matches && lhs_ge_khintchine && khintchine_ge_cs && cs_ge_inner;
  }
};

/// phi = linear(a), f = linear(b). Throws std::invalid_argument when p > p_zero().
[[nodiscard]] Theorem2Report verify_theorem2(std::span<const complex> a, std::span<const complex> b, double p,
                                             const RatioOptions& options = {});

} // namespace polyhankel
