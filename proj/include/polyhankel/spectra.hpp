#pragma once

#include "polyhankel/hankel.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace polyhankel {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Singular values in nonincreasing order.
struct SingularSpectrum {
  static constexpr double default_zero_threshold = 1e-12;

  std::vector<double> values;
  double zero_threshold = default_zero_threshold;

  /// Count of values above zero_threshold * max(largest value, 1).
  [[nodiscard]] std::size_t rank() const noexcept;
  [[nodiscard]] double largest() const noexcept { return values.empty() ? 0.0 : values.front(); }
};

/// Full singular spectrum of a dense matrix via a general-purpose SVD (no
/// structure is exploited). Throws NonFinite on NaN/Inf entries.
[[nodiscard]] SingularSpectrum singular_values(const ComplexMatrix& m);
[[nodiscard]] SingularSpectrum singular_values(const HankelMatrix& m);

/// l^p (quasi)norm of the spectrum; p = infinity gives the largest value.
/// Throws std::invalid_argument for p <= 0 or NaN.
[[nodiscard]] double schatten_norm(const SingularSpectrum& spectrum, double p);

} // namespace polyhankel
