#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace polyhankel {

/// Exponent vector kappa(n) of n = prod p_j^{kappa_j}.
///
/// Always stored in canonical form: trailing zeros are trimmed, so the empty
/// vector is the constant monomial (n = 1) and two indices compare equal iff
/// their exponent sequences agree. Ordering is graded: total degree first,
/// then within a degree the index with the larger leading exponent comes
/// first, so z_1 < z_2 < ... and z_1^2 < z_1 z_2 < z_2^2.
class MultiIndex {
public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<value_type> exponents);
  MultiIndex(std::initializer_list<value_type> exponents);

  /// The coordinate monomial z_{j+1} (zero-based variable index j).
  static MultiIndex unit(std::size_t j);

  [[nodiscard]] std::span<const value_type> exponents() const noexcept { return exps_; }
  /// Number of stored entries; equals the largest active variable index (1-based).
  [[nodiscard]] std::size_t width() const noexcept { return exps_.size(); }
  [[nodiscard]] bool is_constant() const noexcept { return exps_.empty(); }
  [[nodiscard]] std::uint64_t degree() const noexcept;
  /// Exponent of variable j (zero-based); zero beyond the width.
  [[nodiscard]] value_type operator[](std::size_t j) const noexcept {
    return j < exps_.size() ? exps_[j] : 0;
  }

  /// Componentwise domination: every entry of *this is <= the one of other.
  [[nodiscard]] bool divides(const MultiIndex& other) const noexcept;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept;

private:
  void canonicalize();
  std::vector<value_type> exps_;
};

/// Variables move up by k: z_j -> z_{j+k}. Constants are unchanged.
[[nodiscard]] MultiIndex shift_multiindex(const MultiIndex& kappa, std::size_t k);

/// The first primes, immutable after construction.
class PrimeTable {
public:
  static constexpr std::size_t default_limit = std::size_t{1} << 16;

  /// First k primes; throws std::invalid_argument for k == 0 or k > limit.
  explicit PrimeTable(std::size_t k, std::size_t limit = default_limit);

  [[nodiscard]] std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  [[nodiscard]] std::size_t size() const noexcept { return primes_.size(); }
  [[nodiscard]] std::uint64_t operator[](std::size_t j) const { return primes_.at(j); }
  /// Zero-based index of prime p in the table, or -1 if absent.
  [[nodiscard]] std::ptrdiff_t index_of(std::uint64_t p) const noexcept;

private:
  std::vector<std::uint64_t> primes_;
};

[[nodiscard]] PrimeTable nth_primes(std::size_t k, std::size_t limit = PrimeTable::default_limit);

/// Shared table of the first PrimeTable::default_limit primes, built on first use.
[[nodiscard]] const PrimeTable& default_primes();

/// kappa(n). Throws std::invalid_argument for n == 0 and PrimeTableExhausted
/// if n has a prime factor beyond the table.
[[nodiscard]] MultiIndex factorize(std::uint64_t n, const PrimeTable& table = default_primes());

/// prod p_j^{kappa_j}. Throws OverflowLabel if the product leaves uint64 and
/// PrimeTableExhausted if kappa is wider than the table.
[[nodiscard]] std::uint64_t label(const MultiIndex& kappa, const PrimeTable& table = default_primes());

} // namespace polyhankel
