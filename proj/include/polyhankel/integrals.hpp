#pragma once

#include "polyhankel/symbols.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace polyhankel {

enum class Method { grid, mc };

[[nodiscard]] std::string_view to_string(Method m) noexcept;
/// Parses "grid" or "mc"; throws std::invalid_argument otherwise.
[[nodiscard]] Method parse_method(std::string_view s);

/// Estimate of ||f||_q on the polytorus. std_error is zero exactly for grid results.
struct NormEstimate {
  double value = 0.0;
  double std_error = 0.0;
  Method method = Method::grid;
  std::uint64_t samples_or_nodes = 0;
  std::optional<std::uint64_t> seed;
};

struct GridOptions {
  /// Relative gap between successive doublings that counts as converged.
  double tol = 1e-9;
  std::size_t initial_nodes = 16;
  int max_doublings = 16;
  /// Cap on nodes of a single tensor grid; exceeding it is NoConvergence.
  std::uint64_t max_total_nodes = std::uint64_t{1} << 26;
  /// Largest number of variables left to integrate after pinning.
  std::size_t max_width = 4;
};

/// Tensor-product uniform-angle quadrature of ||f||_q over the active
/// variables, doubling nodes per angle until successive estimates agree.
///
/// Two exact reductions shrink the grid. For each disjoint group of variables
/// on which every term has the same partial degree, |f| is invariant under
/// rotating the group, so its first variable is pinned to 1. For q = 1, one
/// remaining variable in which f is affine, f = A + B z, is integrated in
/// closed form through the complete elliptic integral of the second kind.
///
/// Throws WidthTooLarge when more than max_width variables remain after
/// pinning and NoConvergence when the doubling budget runs out.
[[nodiscard]] NormEstimate norm_grid(const Symbol& f, double q, const GridOptions& options = {});

struct McOptions {
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
  /// Samples per independently seeded chunk.
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
};

/// Steinhaus Monte Carlo estimate of ||f||_q from n points, with the standard
/// error of the q-th root propagated by the delta method. Chunk c draws from a
/// stream derived from (seed, c), so the result is bit-identical for any
/// thread count.
[[nodiscard]] NormEstimate norm_mc(const Symbol& f, double q, std::uint64_t n, std::uint64_t seed,
                                   const McOptions& options = {});

/// Mean of |A + B e^{i theta}| over the circle for a = |A|, b = |B|.
[[nodiscard]] double circle_mean_abs(double a, double b);

} // namespace polyhankel
