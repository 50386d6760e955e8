#include "polyhankel/search.hpp"

#include "polyhankel/nehari.hpp"
#include "seeding.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include <cmath>
#include <exception>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>

namespace polyhankel {

double linear_pair_ratio(std::span<const complex> a, std::span<const complex> b, double p, const GridOptions& grid) {
  const Symbol phi = linear(a);
  const Symbol f = linear(b);
  if (phi.is_zero() || f.is_zero())
    return 0.0;
  RatioOptions options;
  options.method = Method::grid;
  options.grid = grid;
  return ratio(f, phi, p, options).ratio;
}

namespace {

// Parameter layout for one vector of length d: [c_1 (real), re c_2, im c_2, ...].
// a and b are stacked; c_1 enters as |x| so it stays nonnegative.
std::vector<complex> unpack(const double* x, std::size_t d) {
  std::vector<complex> c(d);
  c[0] = std::abs(x[0]);
  for (std::size_t j = 1; j < d; ++j)
    c[j] = {x[2 * j - 1], x[2 * j]};
  return c;
}

struct Objective {
  std::size_t d = 0;
  double p = 0.0;
  const GridOptions* grid = nullptr;
  std::uint64_t evaluations = 0;
  double best = -1.0;
  std::vector<complex> best_a;
  std::vector<complex> best_b;
  std::exception_ptr error;

  double evaluate(const double* x) {
    const std::size_t half = 2 * d - 1;
    auto a = unpack(x, d);
    auto b = unpack(x + half, d);
    const double r = linear_pair_ratio(a, b, p, *grid);
    ++evaluations;
    if (r > best) {
      best = r;
      best_a = std::move(a);
      best_b = std::move(b);
    }
    return r;
  }
};

double gsl_objective(const gsl_vector* v, void* params) {
  auto* obj = static_cast<Objective*>(params);
  if (obj->error)
    return GSL_NAN;
  try {
    return -obj->evaluate(gsl_vector_const_ptr(v, 0));
  } catch (...) {
    obj->error = std::current_exception();
    return GSL_NAN;
  }
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* s) const { gsl_multimin_fminimizer_free(s); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

SearchResult run_restart(std::size_t d, double p, std::size_t iters, std::uint64_t seed, std::size_t restart,
                         const SearchOptions& options) {
  const std::size_t n = 2 * (2 * d - 1);
  std::mt19937_64 gen(detail::stream_seed(seed, restart));
  auto angle = [&gen] { return 2.0 * std::numbers::pi * static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  // Steinhaus start: unit-modulus coordinates, leading ones rotated to 1.
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  for (std::size_t block = 0; block < 2; ++block) {
    double* xb = gsl_vector_ptr(x.get(), block * (2 * d - 1));
    xb[0] = 1.0;
    for (std::size_t j = 1; j < d; ++j) {
      const double t = angle();
      xb[2 * j - 1] = std::cos(t);
      xb[2 * j] = std::sin(t);
    }
  }

  Objective obj;
  obj.d = d;
  obj.p = p;
  obj.grid = &options.grid;
  SearchResult result;
  result.p = p;
  result.seed = seed;
  result.restart = restart;
  obj.evaluate(gsl_vector_const_ptr(x.get(), 0));
  result.trace.push_back(obj.best);

  if (iters > 0) {
    std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(n));
    gsl_vector_set_all(step.get(), options.initial_step);
    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> s(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));
    gsl_multimin_function fn{&gsl_objective, n, &obj};
    gsl_multimin_fminimizer_set(s.get(), &fn, x.get(), step.get());
    if (obj.error)
      std::rethrow_exception(obj.error);
    for (std::size_t it = 0; it < iters; ++it) {
      const int status = gsl_multimin_fminimizer_iterate(s.get());
      if (obj.error)
        std::rethrow_exception(obj.error);
      result.trace.push_back(obj.best);
      if (status != GSL_SUCCESS)
        break;
      // A collapsed simplex cannot move any further.
      if (gsl_multimin_fminimizer_size(s.get()) < 1e-12)
        break;
    }
  }

  result.a = std::move(obj.best_a);
  result.b = std::move(obj.best_b);
  result.best_ratio = obj.best;
  result.evaluations = obj.evaluations;
  return result;
}

} // namespace

SearchResult maximize_ratio_linear(std::size_t d, double p, std::size_t restarts, std::size_t iters,
                                   std::uint64_t seed, const SearchOptions& options) {
  if (d == 0 || d > 3)
    throw std::invalid_argument("maximize_ratio_linear: d must be in 1..3");
  if (restarts == 0)
    throw std::invalid_argument("maximize_ratio_linear: need at least one restart");
  if (!(p > 0.0))
    throw std::invalid_argument("maximize_ratio_linear: p must be positive");
  gsl_set_error_handler_off();

  SearchResult best;
  std::uint64_t evaluations = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    SearchResult cur = run_restart(d, p, iters, seed, r, options);
    evaluations += cur.evaluations;
    if (r == 0 || cur.best_ratio > best.best_ratio)
      best = std::move(cur);
  }
  best.evaluations = evaluations;
  return best;
}

} // namespace polyhankel
