#include "polyhankel/hankel.hpp"

#include "polyhankel/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace polyhankel {

namespace {

[[noreturn]] void too_large(std::size_t max_size) {
  throw MatrixTooLarge("Hankel label set exceeds the dimension cap of " + std::to_string(max_size));
}

// Inserts every index dominated by kappa, odometer style over [0, kappa_j].
void insert_divisors(const MultiIndex& kappa, std::set<MultiIndex>& out, std::size_t max_size) {
  const auto top = kappa.exponents();
  std::vector<MultiIndex::value_type> cur(top.size(), 0);
  while (true) {
    out.insert(MultiIndex(cur));
    if (out.size() > max_size)
      too_large(max_size);
    std::size_t j = 0;
    while (j < cur.size() && cur[j] == top[j]) {
      cur[j] = 0;
      ++j;
    }
    if (j == cur.size())
      return;
    ++cur[j];
  }
}

} // namespace

std::vector<MultiIndex> support_closure(const std::set<MultiIndex>& support, std::size_t max_size) {
  std::set<MultiIndex> closure{MultiIndex{}};
  for (const auto& kappa : support)
    insert_divisors(kappa, closure, max_size);
  return {closure.begin(), closure.end()};
}

HankelMatrix build_matrix(const Symbol& phi, std::size_t max_dim) {
  if (phi.is_zero())
    throw std::invalid_argument("build_matrix: symbol must be nonzero");
  std::set<MultiIndex> support;
  for (const auto& [kappa, c] : phi.terms())
    support.insert(kappa);
  return build_matrix_on(phi, support_closure(support, max_dim), max_dim);
}

HankelMatrix build_matrix_on(const Symbol& phi, std::vector<MultiIndex> labels, std::size_t max_dim) {
  if (labels.size() > max_dim)
    too_large(max_dim);
  const auto n = static_cast<Eigen::Index>(labels.size());
  HankelMatrix m{ComplexMatrix::Zero(n, n), std::move(labels)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& li = m.labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i; j < n; ++j) {
      const auto c = phi.coefficient(li + m.labels[static_cast<std::size_t>(j)]);
      if (c == complex{})
        continue;
      m.entries(i, j) = std::conj(c);
      m.entries(j, i) = std::conj(c);
    }
  }
  return m;
}

complex form_apply(const Symbol& phi, const Symbol& f, const Symbol& g) {
  return inner(multiply(f, g), phi);
}

Eigen::VectorXcd coefficients_on(const Symbol& f, const std::vector<MultiIndex>& labels,
                                 std::vector<MultiIndex>* dropped) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(labels.size()));
  for (const auto& [kappa, c] : f.terms()) {
    auto it = std::lower_bound(labels.begin(), labels.end(), kappa);
    if (it != labels.end() && *it == kappa)
      v(it - labels.begin()) = c;
    else if (dropped != nullptr)
      dropped->push_back(kappa);
  }
  return v;
}

} // namespace polyhankel
