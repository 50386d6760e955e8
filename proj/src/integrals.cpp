#include "polyhankel/integrals.hpp"

#include "polyhankel/errors.hpp"
#include "seeding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace polyhankel {

std::string_view to_string(Method m) noexcept { return m == Method::grid ? "grid" : "mc"; }

Method parse_method(std::string_view s) {
  if (s == "grid")
    return Method::grid;
  if (s == "mc")
    return Method::mc;
  throw std::invalid_argument("unknown method '" + std::string(s) + "' (expected grid or mc)");
}

// (2/pi)(a+b) E(k) with k = 2 sqrt(ab)/(a+b), through the arithmetic-geometric
// mean: E(k) = K(k) (1 - sum 2^{n-1} c_n^2), K(k) = pi / (2 AGM(1, k')).
// The complementary modulus k' = |a-b|/(a+b) is formed without cancellation.
double circle_mean_abs(double a, double b) {
  a = std::abs(a);
  b = std::abs(b);
  const double s = a + b;
  if (s == 0.0)
    return 0.0;
  const double kp = std::abs(a - b) / s;
  if (kp == 0.0)
    return 2.0 / std::numbers::pi * s;
  double am = 1.0;
  double gm = kp;
  double weight = 0.5;
  double sum = weight * (1.0 - kp * kp);
  for (int it = 0; it < 64 && am - gm > 1e-15 * am; ++it) {
    const double c = 0.5 * (am - gm);
    const double next_g = std::sqrt(am * gm);
    am = 0.5 * (am + gm);
    gm = next_g;
    weight *= 2.0;
    sum += weight * c * c;
  }
  return s * (1.0 - sum) / am;
}

namespace {

struct Factor {
  std::uint32_t var;
  std::uint32_t exp;
};

struct Term {
  complex coef;
  std::vector<Factor> factors;
};

// f rewritten on dense variables 0..k-1 (its active variables, in order).
struct Compiled {
  std::vector<Term> terms;
  std::size_t vars = 0;
};

Compiled compile(const Symbol& f) {
  const auto active = f.active_variables();
  std::vector<std::uint32_t> remap(f.width(), 0);
  for (std::size_t i = 0; i < active.size(); ++i)
    remap[active[i]] = static_cast<std::uint32_t>(i);
  Compiled c;
  c.vars = active.size();
  for (const auto& [kappa, coef] : f.terms()) {
    Term t{coef, {}};
    for (std::size_t j = 0; j < kappa.width(); ++j)
      if (kappa[j] != 0)
        t.factors.push_back({remap[j], kappa[j]});
    c.terms.push_back(std::move(t));
  }
  return c;
}

void check_q(double q) {
  if (!(q >= 1.0) || std::isinf(q))
    throw std::invalid_argument("norm: q must be a finite real >= 1");
}

// |z| without hypot's overflow guards; entries here are O(1).
inline double modulus(complex z) { return std::sqrt(std::norm(z)); }

double abs_pow(double modulus, double q) {
  if (q == 1.0)
    return modulus;
  if (q == 2.0)
    return modulus * modulus;
  return std::pow(modulus, q);
}

constexpr std::size_t max_group_search_vars = 16;

// Neumaier compensated sum.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  [[nodiscard]] double value() const { return sum + comp; }
};

// Disjoint variable groups G on which every term has the same partial degree.
// |f| is invariant under rotating all variables of such a group together, so
// one variable per group can be pinned to 1.
std::vector<bool> pinnable_variables(const Compiled& f) {
  std::vector<bool> pinned(f.vars, false);
  if (f.vars == 0 || f.vars > max_group_search_vars)
    return pinned;
  std::vector<std::vector<std::uint32_t>> exps(f.terms.size(), std::vector<std::uint32_t>(f.vars, 0));
  for (std::size_t t = 0; t < f.terms.size(); ++t)
    for (const auto& fa : f.terms[t].factors)
      exps[t][fa.var] = fa.exp;
  std::vector<std::uint32_t> valid;
  const std::uint32_t full = (std::uint32_t{1} << f.vars) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    auto partial = [&](std::size_t t) {
      std::uint64_t d = 0;
      for (std::size_t v = 0; v < f.vars; ++v)
        if (mask & (std::uint32_t{1} << v))
          d += exps[t][v];
      return d;
    };
    bool ok = true;
    for (std::size_t t = 1; t < f.terms.size() && ok; ++t)
      ok = partial(t) == partial(0);
    if (ok)
      valid.push_back(mask);
  }
  std::stable_sort(valid.begin(), valid.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::uint32_t used = 0;
  for (const auto mask : valid) {
    if (mask & used)
      continue;
    used |= mask;
    pinned[static_cast<std::size_t>(std::countr_zero(mask))] = true;
  }
  return pinned;
}

class GridIntegrator {
public:
  GridIntegrator(const Compiled& f, double q) : q_(q), vars_(f.vars) {
    pinned_ = pinnable_variables(f);
    // Closed-form fiber: highest unpinned variable in which f is affine (q = 1 only).
    if (q == 1.0) {
      std::vector<bool> affine(vars_, true);
      for (const auto& t : f.terms)
        for (const auto& fa : t.factors)
          if (fa.exp > 1)
            affine[fa.var] = false;
      for (std::size_t v = vars_; v-- > 0;)
        if (!pinned_[v] && affine[v]) {
          fiber_ = v;
          break;
        }
    }
    for (std::size_t v = 0; v < vars_; ++v)
      if (!pinned_[v] && v != fiber_)
        grid_vars_.push_back(v);
    for (const auto& t : f.terms) {
      Term rest{t.coef, {}};
      bool on_fiber = false;
      for (const auto& fa : t.factors) {
        if (fa.var == fiber_)
          on_fiber = true;
        else if (!pinned_[fa.var])
          rest.factors.push_back(fa);
      }
      (on_fiber ? b_terms_ : a_terms_).push_back(std::move(rest));
    }
  }

  /// Variables still integrated after pinning (grid plus closed-form fiber).
  [[nodiscard]] std::size_t effective_dims() const noexcept {
    return grid_vars_.size() + (fiber_ == npos ? 0 : 1);
  }
  [[nodiscard]] std::size_t grid_dims() const noexcept { return grid_vars_.size(); }

  // Mean of |f|^q over an N^g tensor grid.
  [[nodiscard]] double mean(std::size_t n) {
    roots_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      roots_[k] = {std::cos(theta), std::sin(theta)};
    }
    idx_.assign(vars_, 0);
    Accumulator acc;
    std::uint64_t count = 0;
    while (true) {
      acc.add(point_value(n));
      ++count;
      std::size_t g = 0;
      while (g < grid_vars_.size() && ++idx_[grid_vars_[g]] == n) {
        idx_[grid_vars_[g]] = 0;
        ++g;
      }
      if (g == grid_vars_.size())
        break;
    }
    return acc.value() / static_cast<double>(count);
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  [[nodiscard]] complex sum_terms(const std::vector<Term>& terms, std::size_t n) const {
    complex s{};
    for (const auto& t : terms) {
      complex v = t.coef;
      for (const auto& fa : t.factors)
        v *= roots_[fa.exp == 1 ? idx_[fa.var] : (idx_[fa.var] * fa.exp) % n];
      s += v;
    }
    return s;
  }

  [[nodiscard]] double point_value(std::size_t n) const {
    const complex a = sum_terms(a_terms_, n);
    if (fiber_ == npos)
      return abs_pow(modulus(a), q_);
    return circle_mean_abs(modulus(a), modulus(sum_terms(b_terms_, n)));
  }

  double q_;
  std::size_t vars_;
  std::vector<bool> pinned_;
  std::size_t fiber_ = npos;
  std::vector<std::size_t> grid_vars_;
  std::vector<Term> a_terms_;
  std::vector<Term> b_terms_;
  std::vector<complex> roots_;
  std::vector<std::size_t> idx_;
};

bool nodes_within(std::size_t n, std::size_t dims, std::uint64_t cap, std::uint64_t& total) {
  total = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    if (total > cap / n)
      return false;
    total *= n;
  }
  return total <= cap;
}

struct ChunkStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

ChunkStats run_chunk(const Compiled& f, double q, std::uint64_t seed, std::uint64_t chunk,
                     std::uint64_t samples) {
  std::mt19937_64 gen(detail::stream_seed(seed, chunk));
  std::vector<complex> z(f.vars);
  ChunkStats s;
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (auto& zj : z) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      const double theta = 2.0 * std::numbers::pi * u;
      zj = {std::cos(theta), std::sin(theta)};
    }
    complex val{};
    for (const auto& t : f.terms) {
      complex v = t.coef;
      for (const auto& fa : t.factors)
        for (std::uint32_t r = 0; r < fa.exp; ++r)
          v *= z[fa.var];
      val += v;
    }
    const double x = abs_pow(modulus(val), q);
    ++s.count;
    const double delta = x - s.mean;
    s.mean += delta / static_cast<double>(s.count);
    s.m2 += delta * (x - s.mean);
  }
  return s;
}

void merge(ChunkStats& into, const ChunkStats& other) {
  if (other.count == 0)
    return;
  const double n1 = static_cast<double>(into.count);
  const double n2 = static_cast<double>(other.count);
  const double n = n1 + n2;
  const double delta = other.mean - into.mean;
  into.mean += delta * n2 / n;
  into.m2 += other.m2 + delta * delta * n1 * n2 / n;
  into.count += other.count;
}

} // namespace

NormEstimate norm_grid(const Symbol& f, double q, const GridOptions& options) {
  check_q(q);
  if (options.initial_nodes == 0)
    throw std::invalid_argument("norm_grid: initial_nodes must be positive");
  const Compiled c = compile(f);
  NormEstimate est;
  est.method = Method::grid;
  if (c.vars == 0) {
    est.value = std::abs(f.coefficient(MultiIndex{}));
    est.samples_or_nodes = 1;
    return est;
  }

  if (c.vars > max_group_search_vars)
    throw WidthTooLarge("norm_grid: " + std::to_string(c.vars) + " active variables");
  GridIntegrator integrator(c, q);
  if (integrator.effective_dims() > options.max_width)
    throw WidthTooLarge("norm_grid: " + std::to_string(integrator.effective_dims()) +
                        " integration variables exceed the grid limit of " + std::to_string(options.max_width));
  if (integrator.grid_dims() == 0) {
    est.value = std::pow(integrator.mean(1), 1.0 / q);
    est.samples_or_nodes = 1;
    return est;
  }

  std::size_t n = options.initial_nodes;
  std::uint64_t total = 0;
  if (!nodes_within(n, integrator.grid_dims(), options.max_total_nodes, total))
    throw NoConvergence("norm_grid: initial grid exceeds the node budget");
  double prev = std::pow(integrator.mean(n), 1.0 / q);
  for (int doubling = 0; doubling < options.max_doublings; ++doubling) {
    n *= 2;
    if (!nodes_within(n, integrator.grid_dims(), options.max_total_nodes, total))
      break;
    const double cur = std::pow(integrator.mean(n), 1.0 / q);
    if (std::abs(cur - prev) <= options.tol * std::abs(cur)) {
      est.value = cur;
      est.samples_or_nodes = total;
      return est;
    }
    prev = cur;
  }
  char tol[32];
  std::snprintf(tol, sizeof tol, "%g", options.tol);
  throw NoConvergence(std::string("norm_grid: no convergence to relative tolerance ") + tol +
                      " within the node budget");
}

NormEstimate norm_mc(const Symbol& f, double q, std::uint64_t n, std::uint64_t seed, const McOptions& options) {
  check_q(q);
  if (n < 2)
    throw std::invalid_argument("norm_mc: need at least 2 samples");
  if (options.chunk_size == 0)
    throw std::invalid_argument("norm_mc: chunk_size must be positive");
  const Compiled c = compile(f);
  const std::uint64_t chunks = (n + options.chunk_size - 1) / options.chunk_size;
  std::vector<ChunkStats> stats(chunks);
  auto chunk_samples = [&](std::uint64_t k) {
    return std::min(options.chunk_size, n - k * options.chunk_size);
  };

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
  if (threads <= 1) {
    for (std::uint64_t k = 0; k < chunks; ++k)
      stats[k] = run_chunk(c, q, seed, k, chunk_samples(k));
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::uint64_t k = t; k < chunks; k += threads)
          stats[k] = run_chunk(c, q, seed, k, chunk_samples(k));
      });
  }

  ChunkStats total;
  for (const auto& s : stats)
    merge(total, s);
  const double mu = total.mean;
  const double var = total.m2 / static_cast<double>(total.count - 1);
  double sd = std::sqrt(std::max(var, 0.0));
  // Spread at rounding level comes from a constant |f|.
  if (sd <= 64.0 * std::numeric_limits<double>::epsilon() * mu)
    sd = 0.0;
  const double se_mean = sd / std::sqrt(static_cast<double>(total.count));

  NormEstimate est;
  est.method = Method::mc;
  est.samples_or_nodes = n;
  est.seed = seed;
  est.value = std::pow(mu, 1.0 / q);
  // d/dmu mu^{1/q} = (1/q) mu^{1/q - 1}
  est.std_error = mu > 0.0 ? se_mean * std::pow(mu, 1.0 / q - 1.0) / q : 0.0;
  return est;
}

} // namespace polyhankel
