#include "cpfuzzy/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpfuzzy/errors.hpp"

namespace cpfuzzy {

CPFV fuse(std::span<const PFV> collection) {
  if (collection.empty()) throw Error(ErrorCode::EmptyInput, "cannot fuse an empty collection of PFVs");

  const auto k = static_cast<double>(collection.size());
  double mu_sq = 0.0;
  double nu_sq = 0.0;
  for (const PFV &p : collection) {
    mu_sq += p.mu() * p.mu();
    nu_sq += p.nu() * p.nu();
  }
  const double mu = std::sqrt(mu_sq / k);
  const double nu = std::sqrt(nu_sq / k);

  double radius = 0.0;
  for (const PFV &p : collection) radius = std::max(radius, std::hypot(mu - p.mu(), nu - p.nu()));
  return CPFV{mu, nu, std::min(radius, 1.0)};
}

Matrix<CPFV> build_circular_matrix(std::span<const Matrix<PFV>> experts) {
  if (experts.empty()) throw Error(ErrorCode::EmptyInput, "no expert matrices");
  const std::size_t rows = experts.front().rows();
  const std::size_t cols = experts.front().cols();
  for (std::size_t e = 1; e < experts.size(); ++e) {
    if (experts[e].rows() != rows || experts[e].cols() != cols) {
      throw Error(ErrorCode::DimensionMismatch,
                  "expert " + std::to_string(e) + " matrix is " + std::to_string(experts[e].rows()) + "x" +
                      std::to_string(experts[e].cols()) + ", expected " + std::to_string(rows) + "x" +
                      std::to_string(cols));
    }
  }

  Matrix<CPFV> out(rows, cols);
  std::vector<PFV> cell(experts.size());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t e = 0; e < experts.size(); ++e) cell[e] = experts[e](i, j);
      out(i, j) = fuse(cell);
    }
  }
  return out;
}

}  // namespace cpfuzzy
