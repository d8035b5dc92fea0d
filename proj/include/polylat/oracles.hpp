#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// arithmetic; polynomials are plain coefficient vectors and every quantity is
// evaluated from its definition so the library can be checked against it.

#include <cstdint>
#include <vector>

namespace polylat::oracle {

using Coeffs = std::vector<int>;

Coeffs digits(std::uint64_t n, unsigned b);
std::uint64_t undigits(const Coeffs& c, unsigned b);

/// Schoolbook product truncated to w coefficients.
Coeffs convolve_trunc(const Coeffs& a, const Coeffs& c, int w, unsigned b);
/// Long division remainder.
Coeffs remainder(Coeffs a, const Coeffs& p, unsigned b);

/// floor(log_b(u / b^w)) + 1 for u >= 1, by repeated multiplication.
int floor_log_plus_one(std::uint64_t u, int w, unsigned b);

/// Checks that u encodes the first m Laurent digits of q/p: multiplying the
/// digit expansion back by p reproduces q's coefficients at x^{m-1}..x^0.
bool laurent_multiply_back(std::uint64_t u, const Coeffs& q, const Coeffs& p, int m, unsigned b);

/// Multiplicative order of x modulo p over F_2, by stepping x^k.
std::uint64_t order_of_x_f2(std::uint64_t p);

/// Coordinate numerator of point n, component g, modulus p, from the
/// definition (product, reduction, Laurent digits by long division).
std::uint64_t coordinate(std::uint64_t n, std::uint64_t g, std::uint64_t p, int m, unsigned b);

/// Walsh function value for base 2 at x = u / 2^m: (-1)^{sum kappa_i xi_{i+1}}.
int walsh2(std::uint64_t k, std::uint64_t u, int m);

/// Sums of wal_k(u / 2^m) over each block 2^a <= k < 2^{a+1}, a = 0..K-1.
std::vector<long long> walsh_block_sums(std::uint64_t u, int m, int K);

/// sum_{k=1}^{2^K - 1} wal_k(u / 2^m) / 2^{alpha floor(log2 k)}.
double phi_series(std::uint64_t u, int m, double alpha, int K);
/// Bound on the omitted blocks k >= 2^K of that series.
double phi_series_tail(double alpha, int K);

/// b^{-m} sum_n wal_k(x_n) over a point set given by numerators (complex
/// magnitude folded to the real part).
double char_sum(const std::vector<std::vector<std::uint64_t>>& points, const std::vector<std::uint64_t>& k,
                int m, unsigned b);

/// delta_p(sum_j tr_m(k_j) g_j).
bool dual_member(const std::vector<std::uint64_t>& k, const std::vector<std::uint64_t>& g, std::uint64_t p,
                 int m, unsigned b);

/// sum over nonzero k in the box of prod over supp(k) of gamma_j b^{-alpha floor(log_b k_j)}.
double t_measure(const std::vector<std::uint64_t>& g, std::uint64_t p, int m, unsigned b,
                 const std::vector<double>& gamma, double alpha);

/// Worst-case error of a base-2 rule by the Walsh dual sum, truncated to
/// k_j < 2^K: sum over nonzero dual k of r_{alpha,gamma}(k)^{-1}.
double wce_dual_sum(const std::vector<std::uint64_t>& g, std::uint64_t p, int m,
                    const std::vector<double>& gamma, double alpha, int K);

/// Digit-wise quality h_{r,w,m,eta}(q) from its definition, any prime b.
double h_quality(const std::vector<std::uint64_t>& previous, std::uint64_t q, int m, int w,
                 const std::vector<double>& eta, unsigned b);

/// a(r, t, l) = prod_{j<=r} (1 - eta_j digitlog(l g_j mod x^t, t)), base 2.
double running_product(const std::vector<std::uint64_t>& g, std::size_t r, int t, std::uint64_t l,
                       const std::vector<double>& eta);

/// H_{d,m,eta}(g) by its subset-sum definition (exponential in d).
double h_subset_sum(const std::vector<std::uint64_t>& g, int m, const std::vector<double>& eta, unsigned b);

/// Algorithm-level re-search: greedy digit-by-digit construction where each
/// digit is chosen by evaluating h_quality for every field element.
std::vector<std::uint64_t> greedy_dbd(int m, std::size_t d, const std::vector<double>& eta, unsigned b);

/// Worst-case error for base 2 via -1 + 2^{-m} sum_n prod_j (1 + gamma_j phi(x_{n,j}))
/// with phi evaluated by its piecewise definition and points from coordinate().
double wce_closed_form(const std::vector<std::uint64_t>& g, std::uint64_t p, int m,
                       const std::vector<double>& gamma, double alpha);

}  // namespace polylat::oracle
