#include "polyhankel/spectra.hpp"

#include "polyhankel/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace polyhankel {

std::size_t SingularSpectrum::rank() const noexcept {
  const double cut = zero_threshold * std::max(largest(), 1.0);
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [cut](double v) { return v > cut; }));
}

SingularSpectrum singular_values(const ComplexMatrix& m) {
  if (!m.allFinite())
    throw NonFinite("singular_values: matrix has NaN or Inf entries");
  SingularSpectrum s;
  if (m.size() == 0)
    return s;
  // BDCSVD falls back to one-sided Jacobi below its block size, so small
  // matrices get Jacobi accuracy.
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  s.values.assign(sv.data(), sv.data() + sv.size());
  std::sort(s.values.begin(), s.values.end(), std::greater<>());
  return s;
}

SingularSpectrum singular_values(const HankelMatrix& m) { return singular_values(m.entries); }

double schatten_norm(const SingularSpectrum& spectrum, double p) {
  if (!(p > 0.0))
    throw std::invalid_argument("schatten_norm: p must be positive");
  const double top = spectrum.largest();
  if (std::isinf(p) || top == 0.0)
    return top;
  // Scale by the largest value so large p cannot overflow.
  double sum = 0.0;
  for (double v : spectrum.values)
    sum += std::pow(v / top, p);
  return top * std::pow(sum, 1.0 / p);
}

} // namespace polyhankel
