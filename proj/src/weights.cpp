#include "polylat/weights.hpp"

#include <cmath>
#include <string>

#include "polylat/errors.hpp"

namespace polylat {

ProductWeights::ProductWeights(Eigen::VectorXd gammas) : gammas_(std::move(gammas)) {
  for (Eigen::Index j = 0; j < gammas_.size(); ++j)
    if (!(gammas_[j] >= 0.0) || !std::isfinite(gammas_[j]))
      throw InvalidParameter("weight " + std::to_string(j + 1) + " is negative or not finite");
}

ProductWeights::ProductWeights(std::initializer_list<double> gammas)
    : ProductWeights(Eigen::Map<const Eigen::VectorXd>(gammas.begin(),
                                                       static_cast<Eigen::Index>(gammas.size()))) {}

ProductWeights ProductWeights::constant(std::size_t d, double value) {
  return ProductWeights(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(d), value));
}

bool ProductWeights::strictly_positive() const noexcept { return (gammas_.array() > 0.0).all(); }

ProductWeights ProductWeights::pow(double power) const {
  return ProductWeights(gammas_.array().pow(power).matrix());
}

ProductWeights ProductWeights::prefix(std::size_t d) const {
  if (d > size())
    throw InvalidParameter("need " + std::to_string(d) + " weights, have " + std::to_string(size()));
  return ProductWeights(gammas_.head(static_cast<Eigen::Index>(d)));
}

double ProductWeights::subset_weight(std::span<const std::size_t> u) const {
  double w = 1.0;
  for (auto j : u) w *= (*this)[j];
  return w;
}

}  // namespace polylat
