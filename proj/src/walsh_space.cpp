#include "polylat/walsh_space.hpp"

#include <numbers>
#include <string>

namespace polylat {

namespace {

constexpr std::uint64_t kMaxDualBox = std::uint64_t{1} << 24;

// Sum of digit products kappa_i xi_{i+1}, reduced mod b.
unsigned walsh_phase(std::uint64_t k, std::uint64_t u, int prec, unsigned b) {
  std::uint64_t scale = checked_pow(b, prec);
  std::uint64_t s = 0;
  for (int i = 0; i < prec && k != 0; ++i, k /= b) {
    scale /= b;
    s += (k % b) * ((u / scale) % b);
  }
  return static_cast<unsigned>(s % b);
}

// Next k in the box {0..limit-1}^d in odometer order; false after the last.
bool next_in_box(std::vector<std::uint64_t>& k, std::uint64_t limit) {
  for (auto& c : k) {
    if (++c < limit) return true;
    c = 0;
  }
  return false;
}

}  // namespace

int ilog(std::uint64_t k, unsigned b) noexcept {
  int e = 0;
  while (k >= b) {
    k /= b;
    ++e;
  }
  return e;
}

std::complex<double> walsh_eval(std::uint64_t k, std::uint64_t u, int prec, unsigned b) {
  if (!is_prime(b)) throw InvalidParameter("base is not prime");
  if (u >= checked_pow(b, prec)) throw InvalidParameter("numerator outside [0, b^prec)");
  const unsigned s = walsh_phase(k, u, prec, b);
  if (b == 2) return {s == 0 ? 1.0 : -1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * s / b);
}

double r_alpha_weighted(const std::vector<std::uint64_t>& k, double alpha,
                        const ProductWeights& weights, unsigned b) {
  if (!(alpha >= 1.0)) throw InvalidParameter("decay function requires alpha >= 1");
  if (k.size() > weights.size()) throw InvalidParameter("fewer weights than dimensions");
  double r = 1.0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] == 0) continue;
    r *= std::pow(static_cast<double>(b), alpha * ilog(k[j], b)) / weights[j];
  }
  return r;
}

bool dual_indicator(const PolyLatticeRule& rule, const std::vector<std::uint64_t>& k) {
  if (k.size() != rule.dim()) throw InvalidParameter("frequency vector length differs from dimension");
  const unsigned b = rule.base();
  const int m = rule.precision();
  const std::uint64_t box = rule.n_points();
  if (b == 2) {
    const std::uint64_t p = rule.modulus().bits();
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < k.size(); ++j)
      acc ^= gf2::mulmod(k[j] & gf2::low_mask(m), rule.generators()[j].bits(), p);
    return acc == 0;
  }
  Poly acc(b);
  for (std::size_t j = 0; j < k.size(); ++j)
    acc = poly_add(acc, poly_mul(poly_from_index(k[j] % box, b), rule.generators()[j]));
  return poly_mod(acc, rule.modulus()).is_zero();
}

std::vector<std::vector<std::uint64_t>> dual_box_set(const PolyLatticeRule& rule) {
  const std::uint64_t box = rule.n_points();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < rule.dim(); ++j) {
    if (total > kMaxDualBox / box) throw ResourceLimit("dual box enumeration exceeds 2^24 vectors");
    total *= box;
  }
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> k(rule.dim(), 0);
  do {
    if (dual_indicator(rule, k)) out.push_back(k);
  } while (next_in_box(k, box));
  return out;
}

double t_measure(const PolyLatticeRule& rule, const ProductWeights& weights, double alpha) {
  double sum = 0.0;
  for (const auto& k : dual_box_set(rule)) {
    bool nonzero = false;
    for (auto c : k) nonzero = nonzero || c != 0;
    if (nonzero) sum += 1.0 / r_alpha_weighted(k, alpha, weights, rule.base());
  }
  return sum;
}

double char_sum(const PolyLatticeRule& rule, const std::vector<std::uint64_t>& k) {
  if (k.size() != rule.dim()) throw InvalidParameter("frequency vector length differs from dimension");
  const PointMatrix points = generate_points(rule);
  const unsigned b = rule.base();
  const int m = rule.precision();
  std::complex<double> sum = 0.0;
  for (std::uint64_t n = 0; n < points.n_points(); ++n) {
    std::complex<double> w = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) w *= walsh_eval(k[j], points(n, j), m, b);
    sum += w;
  }
  return sum.real() / static_cast<double>(points.n_points());
}

double log_series_partial(std::uint64_t u, int prec, std::uint64_t N) {
  if (u == 0) throw DegenerateInput("log series identity holds only for x in (0, 1)");
  if (N == 0 || !std::has_single_bit(N)) throw InvalidParameter("N must be a power of 2");
  double sum = 1.0;  // k = 0
  for (std::uint64_t k = 1; k < N; ++k)
    sum += walsh_eval(k, u, prec, 2).real() / static_cast<double>(std::uint64_t{1} << ilog(k, 2));
  return sum;
}

double trunc_gap_bound(double alpha, const ProductWeights& weights, std::size_t d, std::uint64_t N,
                       unsigned b) {
  const double mu = mu_b(alpha, b);
  if (weights.size() < d) throw InvalidParameter("fewer weights than dimensions");
  double prod = 1.0;
  for (std::size_t j = 0; j < d; ++j) prod *= 1.0 + 2.0 * mu * weights[j];
  return (prod - 1.0) / std::pow(static_cast<double>(N), alpha);
}

}  // namespace polylat
