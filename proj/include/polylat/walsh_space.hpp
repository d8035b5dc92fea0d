#pragma once

// Weighted Walsh spaces: Walsh functions, the decay function r_alpha, the
// closed-form worst-case error for b = 2 and the truncated quality measures.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "polylat/errors.hpp"
#include "polylat/pointset.hpp"
#include "polylat/weights.hpp"

namespace polylat {

/// floor(log_b k) for k >= 1, by integer division.
int ilog(std::uint64_t k, unsigned b) noexcept;

/// Walsh function wal_k evaluated at x = u / b^prec.
std::complex<double> walsh_eval(std::uint64_t k, std::uint64_t u, int prec, unsigned b);

/// gamma_supp(k)^{-1} prod_{j in supp k} b^{alpha floor(log_b k_j)}.
double r_alpha_weighted(const std::vector<std::uint64_t>& k, double alpha,
                        const ProductWeights& weights, unsigned b);

/// sum_{k >= 1} r_alpha(k)^{-1} = b^alpha (b - 1) / (b^alpha - b).
template <typename Scalar = double>
Scalar mu_b(Scalar alpha, unsigned b) {
  if (!(alpha > Scalar(1))) throw InvalidParameter("mu_b requires alpha > 1");
  using std::pow;
  const Scalar ba = pow(Scalar(b), alpha);
  return ba * Scalar(b - 1) / (ba - Scalar(b));
}

/// One-dimensional error kernel phi_alpha on the grid {u / 2^m}, tabulated by
/// the bit width of u so each lookup is a single index.
template <typename Scalar = double>
class PhiTable {
 public:
  PhiTable(int m, Scalar alpha) : table_(static_cast<std::size_t>(m) + 1) {
    using std::pow;
    const Scalar mu = mu_b<Scalar>(alpha, 2);
    table_[0] = mu;
    // bit_width(u) = floor(log2 u) + 1, so t + 1 = bit_width - m.
    for (int width = 1; width <= m; ++width)
      table_[width] = mu - pow(Scalar(2), Scalar(width - m) * (alpha - Scalar(1))) * (mu + Scalar(1));
  }

  Scalar operator()(std::uint64_t u) const noexcept { return table_[std::bit_width(u)]; }

 private:
  std::vector<Scalar> table_;
};

template <typename Scalar = double>
Scalar phi_alpha(std::uint64_t u, int m, Scalar alpha) {
  if (m < 1 || m > 62 || u >= (std::uint64_t{1} << m))
    throw InvalidParameter("phi_alpha numerator outside [0, 2^m)");
  return PhiTable<Scalar>(m, alpha)(u);
}

/// Worst-case error of a b = 2 rule in W^alpha_{d,gamma}:
/// -1 + 2^{-m} sum_n prod_j (1 + gamma_j phi_alpha(x_{n,j})), summed in
/// ascending n with the product taken in ascending j.
template <typename Scalar = double>
Scalar wce_product(const PolyLatticeRule& rule, Scalar alpha, const ProductWeights& weights) {
  if (rule.base() != 2) throw UnsupportedBase("closed-form worst-case error needs base 2");
  if (weights.size() < rule.dim()) throw InvalidParameter("fewer weights than dimensions");
  const int m = rule.precision();
  const PhiTable<Scalar> phi(m, alpha);
  const CoordinateMap coord(rule);
  std::vector<Scalar> gamma(rule.dim());
  for (std::size_t j = 0; j < rule.dim(); ++j) gamma[j] = Scalar(weights[j]);
  Scalar sum(0);
  for (std::uint64_t n = 0; n < rule.n_points(); ++n) {
    Scalar prod(1);
    for (std::size_t j = 0; j < rule.dim(); ++j) prod *= Scalar(1) + gamma[j] * phi(coord(n, j));
    sum += prod;
  }
  return sum / Scalar(rule.n_points()) - Scalar(1);
}

/// Dual net intersected with the box {0..b^m-1}^d. Each vector k has
/// tr_m(k) . g == 0 mod p. Guarded by b^{md} <= 2^24.
std::vector<std::vector<std::uint64_t>> dual_box_set(const PolyLatticeRule& rule);

/// T_{alpha,gamma}(g, p); alpha = 1 gives T_gamma.
double t_measure(const PolyLatticeRule& rule, const ProductWeights& weights, double alpha);

/// delta_p(tr_m(k) . g).
bool dual_indicator(const PolyLatticeRule& rule, const std::vector<std::uint64_t>& k);

/// Real part of b^{-m} sum_n wal_k(x_n).
double char_sum(const PolyLatticeRule& rule, const std::vector<std::uint64_t>& k);

/// sum_{k < N} wal_k(x) / r_1(k) at x = u / 2^prec, base 2.
double log_series_partial(std::uint64_t u, int prec, std::uint64_t N);

/// N^{-alpha} (-1 + prod_j (1 + 2 mu_b(alpha) gamma_j)), j = 1..d.
double trunc_gap_bound(double alpha, const ProductWeights& weights, std::size_t d, std::uint64_t N,
                       unsigned b);

}  // namespace polylat
