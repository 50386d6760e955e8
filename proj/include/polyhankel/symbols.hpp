#pragma once

#include "polyhankel/bohr_lift.hpp"

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace polyhankel {

using complex = std::complex<double>;

/// Sparse polynomial on the polytorus: MultiIndex -> nonzero complex coefficient.
///
/// Coefficients with modulus below prune_threshold are never stored. Iteration
/// follows MultiIndex ordering (graded), which is also the serialization order.
class Symbol {
public:
  static constexpr double prune_threshold = 1e-15;
  using Terms = std::map<MultiIndex, complex>;

  Symbol() = default;
  explicit Symbol(Terms terms);
  /// Constant symbol c.
  static Symbol constant(complex c);
  static Symbol monomial(MultiIndex kappa, complex c = 1.0);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  /// Coefficient at kappa, zero if absent.
  [[nodiscard]] complex coefficient(const MultiIndex& kappa) const;
  /// Largest variable index used (1-based), 0 for constants.
  [[nodiscard]] std::size_t width() const noexcept;
  /// Zero-based indices of variables that occur with a nonzero exponent, ascending.
  [[nodiscard]] std::vector<std::size_t> active_variables() const;
  [[nodiscard]] std::uint64_t degree() const noexcept;
  /// True when every term has the same total degree.
  [[nodiscard]] bool is_homogeneous() const noexcept;
  /// Coefficient l2 norm, equal to the L2 norm on the polytorus.
  [[nodiscard]] double l2_norm() const noexcept;

  /// f(z) where z[j] is the value of variable j (zero-based); variables past
  /// z.size() must not occur.
  [[nodiscard]] complex evaluate(std::span<const complex> z) const;

  friend Symbol operator*(const Symbol& f, const Symbol& g);
  friend Symbol operator*(complex c, const Symbol& f);
  friend Symbol operator+(const Symbol& f, const Symbol& g);
  friend bool operator==(const Symbol&, const Symbol&) = default;

private:
  void prune();
  Terms terms_;
};

/// c_1 z_1 + ... + c_d z_d, zero entries dropped.
[[nodiscard]] Symbol linear(std::span<const complex> c);
/// (z_1 + ... + z_d) / sqrt(d).
[[nodiscard]] Symbol normalized_linear(std::size_t d);
[[nodiscard]] Symbol multiply(const Symbol& f, const Symbol& g);
/// Every variable moves up by k (z_j -> z_{j+k}).
[[nodiscard]] Symbol shift(const Symbol& f, std::size_t k);
/// L2 pairing sum_kappa f_kappa * conj(phi_kappa).
[[nodiscard]] complex inner(const Symbol& f, const Symbol& phi);

} // namespace polyhankel
