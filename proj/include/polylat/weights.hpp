#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace polylat {

/// Product weights gamma_1, gamma_2, ... stored 0-based. The weight of a
/// subset u is the product of its members' weights, with the empty product 1.
///
/// Entries must be non-negative; zero entries are admitted so that error
/// evaluation can take the empty-weight limit. Constructions require
/// strictly positive weights and check that themselves.
class ProductWeights {
 public:
  ProductWeights() = default;
  explicit ProductWeights(Eigen::VectorXd gammas);
  ProductWeights(std::initializer_list<double> gammas);

  static ProductWeights constant(std::size_t d, double value);

  std::size_t size() const noexcept { return static_cast<std::size_t>(gammas_.size()); }
  double operator[](std::size_t j) const { return gammas_[static_cast<Eigen::Index>(j)]; }
  const Eigen::VectorXd& values() const noexcept { return gammas_; }

  bool strictly_positive() const noexcept;

  /// gamma_j^power, elementwise.
  ProductWeights pow(double power) const;
  /// First d weights; throws InvalidParameter if fewer are available.
  ProductWeights prefix(std::size_t d) const;

  /// gamma_u for u given as 0-based coordinate indices.
  double subset_weight(std::span<const std::size_t> u) const;

 private:
  Eigen::VectorXd gammas_;
};

}  // namespace polylat
