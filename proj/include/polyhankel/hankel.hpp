#pragma once

#include "polyhankel/symbols.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <set>
#include <vector>

namespace polyhankel {

using ComplexMatrix = Eigen::MatrixXcd;

/// Finite block of the multiplicative Hankel matrix M_rho of a polynomial symbol.
///
/// Rows and columns share `labels`; entry (i, j) is rho at labels[i] + labels[j],
/// where rho_kappa = conj(phi_kappa), so that a^T M b = <f g, phi> for
/// coefficient vectors a, b of f, g over the labels.
struct HankelMatrix {
  ComplexMatrix entries;
  std::vector<MultiIndex> labels;

  [[nodiscard]] std::size_t dim() const noexcept { return labels.size(); }
};

inline constexpr std::size_t default_max_dim = 4096;

/// Every multi-index dominated by some member of `support`, in graded order.
/// Always contains the constant index. Throws MatrixTooLarge past max_size.
[[nodiscard]] std::vector<MultiIndex> support_closure(const std::set<MultiIndex>& support,
                                                      std::size_t max_size = default_max_dim);

/// M_rho restricted to the divisor closure of supp(phi); captures every
/// nonzero entry of the infinite matrix.
[[nodiscard]] HankelMatrix build_matrix(const Symbol& phi, std::size_t max_dim = default_max_dim);

/// M_rho on a caller-supplied label set, sorted ascending (entries outside supp(phi) are zero).
[[nodiscard]] HankelMatrix build_matrix_on(const Symbol& phi, std::vector<MultiIndex> labels,
                                           std::size_t max_dim = default_max_dim);

/// Matrix-free evaluation of the form: <f g, phi>.
[[nodiscard]] complex form_apply(const Symbol& phi, const Symbol& f, const Symbol& g);

/// Coefficients of f laid out over sorted `labels`. Terms of f outside the labels
/// are appended to `dropped` when it is non-null.
[[nodiscard]] Eigen::VectorXcd coefficients_on(const Symbol& f, const std::vector<MultiIndex>& labels,
                                               std::vector<MultiIndex>* dropped = nullptr);

} // namespace polyhankel
