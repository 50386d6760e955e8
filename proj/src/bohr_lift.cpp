#include "polyhankel/bohr_lift.hpp"

#include "polyhankel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polyhankel {

MultiIndex::MultiIndex(std::vector<value_type> exponents) : exps_(std::move(exponents)) {
  canonicalize();
}

MultiIndex::MultiIndex(std::initializer_list<value_type> exponents) : exps_(exponents) {
  canonicalize();
}

MultiIndex MultiIndex::unit(std::size_t j) {
  std::vector<value_type> e(j + 1, 0);
  e[j] = 1;
  return MultiIndex(std::move(e));
}

void MultiIndex::canonicalize() {
  while (!exps_.empty() && exps_.back() == 0)
    exps_.pop_back();
}

std::uint64_t MultiIndex::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool MultiIndex::divides(const MultiIndex& other) const noexcept {
  if (exps_.size() > other.exps_.size())
    return false;
  for (std::size_t j = 0; j < exps_.size(); ++j)
    if (exps_[j] > other.exps_[j])
      return false;
  return true;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  const auto& longer = a.width() >= b.width() ? a.exps_ : b.exps_;
  const auto& shorter = a.width() >= b.width() ? b.exps_ : a.exps_;
  MultiIndex sum;
  sum.exps_ = longer;
  for (std::size_t j = 0; j < shorter.size(); ++j)
    sum.exps_[j] += shorter[j];
  return sum;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0)
    return c;
  const std::size_t n = std::max(a.width(), b.width());
  for (std::size_t j = 0; j < n; ++j) {
    // Larger leading exponent sorts first.
    if (auto c = b[j] <=> a[j]; c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

MultiIndex shift_multiindex(const MultiIndex& kappa, std::size_t k) {
  if (kappa.is_constant() || k == 0)
    return kappa;
  std::vector<MultiIndex::value_type> e(k, 0);
  e.insert(e.end(), kappa.exponents().begin(), kappa.exponents().end());
  return MultiIndex(std::move(e));
}

PrimeTable::PrimeTable(std::size_t k, std::size_t limit) {
  if (k == 0)
    throw std::invalid_argument("nth_primes: count must be positive");
  if (k > limit)
    throw std::invalid_argument("nth_primes: " + std::to_string(k) + " exceeds sieve limit " +
                                std::to_string(limit));
  // Rosser's bound p_k < k (ln k + ln ln k) for k >= 6.
  std::size_t bound = 15;
  if (k >= 6) {
    const double kd = static_cast<double>(k);
    bound = static_cast<std::size_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 1;
  }
  std::vector<bool> composite(bound + 1, false);
  primes_.reserve(k);
  for (std::size_t n = 2; n <= bound && primes_.size() < k; ++n) {
    if (composite[n])
      continue;
    primes_.push_back(n);
    for (std::size_t m = n * n; m <= bound; m += n)
      composite[m] = true;
  }
}

std::ptrdiff_t PrimeTable::index_of(std::uint64_t p) const noexcept {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p)
    return -1;
  return it - primes_.begin();
}

PrimeTable nth_primes(std::size_t k, std::size_t limit) { return PrimeTable(k, limit); }

const PrimeTable& default_primes() {
  static const PrimeTable table(PrimeTable::default_limit);
  return table;
}

MultiIndex factorize(std::uint64_t n, const PrimeTable& table) {
  if (n == 0)
    throw std::invalid_argument("factorize: n must be positive");
  std::vector<MultiIndex::value_type> e;
  for (std::size_t j = 0; j < table.size() && n > 1; ++j) {
    const std::uint64_t p = table[j];
    if (p > n / p) {
      // n itself is prime.
      const auto idx = table.index_of(n);
      if (idx < 0)
        break;
      e.resize(static_cast<std::size_t>(idx) + 1, 0);
      e[static_cast<std::size_t>(idx)] += 1;
      n = 1;
      break;
    }
    while (n % p == 0) {
      if (e.size() <= j)
        e.resize(j + 1, 0);
      ++e[j];
      n /= p;
    }
  }
  if (n != 1)
    throw PrimeTableExhausted("factorize: prime factor beyond the prime table");
  return MultiIndex(std::move(e));
}

std::uint64_t label(const MultiIndex& kappa, const PrimeTable& table) {
  if (kappa.width() > table.size())
    throw PrimeTableExhausted("label: multi-index wider than the prime table");
  std::uint64_t n = 1;
  for (std::size_t j = 0; j < kappa.width(); ++j) {
    for (MultiIndex::value_type r = 0; r < kappa[j]; ++r) {
      if (__builtin_mul_overflow(n, table[j], &n))
        throw OverflowLabel("label: product exceeds 64-bit range");
    }
  }
  return n;
}

} // namespace polyhankel
