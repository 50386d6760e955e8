#pragma once

#include "polyhankel/integrals.hpp"
#include "polyhankel/symbols.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polyhankel {

struct SearchOptions {
  GridOptions grid{.tol = 1e-9};
  /// Initial simplex edge in parameter space.
  double initial_step = 0.25;
};

/// Best pair found for the ratio |<f, phi>| / (||H_phi||_{S_p} ||f||_1) with
/// phi = linear(a), f = linear(b).
struct SearchResult {
  std::vector<complex> a;
  std::vector<complex> b;
  double p = 0.0;
  double best_ratio = 0.0;
  std::uint64_t evaluations = 0;
  std::uint64_t seed = 0;
  std::size_t restart = 0;
  /// Best ratio so far after the start point and after each simplex iteration
  /// of the winning restart.
  std::vector<double> trace;
};

/// Ratio for the linear pair, evaluated with grid quadrature. Zero when a or b vanish.
[[nodiscard]] double linear_pair_ratio(std::span<const complex> a, std::span<const complex> b, double p,
                                       const GridOptions& grid = SearchOptions{}.grid);

/// Nelder-Mead maximization of the ratio over linear pairs (a, b) in C^d,
/// d <= 3, with a_1 and b_1 real nonnegative. Each restart starts from a
/// Steinhaus-random point drawn from a stream derived from (seed, restart);
/// the best result over restarts wins, ties going to the lower restart.
[[nodiscard]] SearchResult maximize_ratio_linear(std::size_t d, double p, std::size_t restarts, std::size_t iters,
                                                 std::uint64_t seed, const SearchOptions& options = {});

} // namespace polyhankel
