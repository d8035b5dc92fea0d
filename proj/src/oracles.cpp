#include "polylat/oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace polylat::oracle {

namespace {

int inverse_mod(int a, unsigned b) {
  for (unsigned c = 1; c < b; ++c)
    if ((static_cast<unsigned>(a) * c) % b == 1) return static_cast<int>(c);
  throw std::logic_error("oracle: no inverse");
}

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = quotient * p + remainder.
std::pair<Coeffs, Coeffs> divide(Coeffs a, Coeffs p, unsigned b) {
  trim(a);
  trim(p);
  if (p.empty()) throw std::logic_error("oracle: division by zero polynomial");
  const int dp = static_cast<int>(p.size()) - 1;
  const int lead_inv = inverse_mod(p.back(), b);
  Coeffs quot(a.size() > p.size() ? a.size() - p.size() + 1 : 1, 0);
  for (int k = static_cast<int>(a.size()) - 1; k >= dp; --k) {
    const int c = (a[k] * lead_inv) % static_cast<int>(b);
    if (c == 0) continue;
    quot[k - dp] = c;
    for (int i = 0; i <= dp; ++i) {
      int& slot = a[k - dp + i];
      slot = ((slot - c * p[i]) % static_cast<int>(b) + static_cast<int>(b)) % static_cast<int>(b);
    }
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Coeffs multiply(const Coeffs& a, const Coeffs& c, unsigned b) {
  if (a.empty() || c.empty()) return {};
  return convolve_trunc(a, c, static_cast<int>(a.size() + c.size()), b);
}

int floor_log(std::uint64_t u, unsigned b) {
  int e = 0;
  std::uint64_t power = b;
  while (power <= u) {
    ++e;
    if (power > u / b) break;
    power *= b;
  }
  return e;
}

double mu2(double alpha) {
  const double ba = std::pow(2.0, alpha);
  return ba / (ba - 2.0);
}

std::uint64_t power(unsigned b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int dl(std::uint64_t l, std::uint64_t q, int w, unsigned b) {
  const auto prod = convolve_trunc(digits(l, b), digits(q, b), w, b);
  const std::uint64_t u = undigits(prod, b);
  if (u == 0) throw std::logic_error("oracle: digitlog of zero");
  return floor_log_plus_one(u, w, b);
}

}  // namespace

Coeffs digits(std::uint64_t n, unsigned b) {
  Coeffs out;
  while (n > 0) {
    out.push_back(static_cast<int>(n % b));
    n /= b;
  }
  return out;
}

std::uint64_t undigits(const Coeffs& c, unsigned b) {
  std::uint64_t n = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) n = n * b + static_cast<std::uint64_t>(*it);
  return n;
}

Coeffs convolve_trunc(const Coeffs& a, const Coeffs& c, int w, unsigned b) {
  Coeffs out(static_cast<std::size_t>(w), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (static_cast<int>(i + j) < w) out[i + j] = (out[i + j] + a[i] * c[j]) % static_cast<int>(b);
  trim(out);
  return out;
}

Coeffs remainder(Coeffs a, const Coeffs& p, unsigned b) { return divide(std::move(a), p, b).second; }

int floor_log_plus_one(std::uint64_t u, int w, unsigned b) { return floor_log(u, b) - w + 1; }

bool laurent_multiply_back(std::uint64_t u, const Coeffs& q, const Coeffs& p, int m, unsigned b) {
  // Digit t_l sits at position m - l of u.
  const Coeffs ud = digits(u, b);
  auto t = [&](int l) { return m - l < static_cast<int>(ud.size()) ? ud[m - l] : 0; };
  auto at = [](const Coeffs& c, int i) { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; };
  for (int k = 0; k < m; ++k) {
    int s = 0;
    for (int l = 1; l <= m; ++l) s += at(p, k + l) * t(l);
    if (s % static_cast<int>(b) != at(q, k) % static_cast<int>(b)) return false;
  }
  return true;
}

std::uint64_t order_of_x_f2(std::uint64_t p) {
  int m = 63;
  while (m >= 0 && !((p >> m) & 1)) --m;
  if (m < 1) throw std::logic_error("oracle: modulus degree < 1");
  std::uint64_t y = 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t k = 1; k <= limit; ++k) {
    y <<= 1;
    if ((y >> m) & 1) y ^= p;
    if (y == 1) return k;
  }
  return 0;
}

std::uint64_t coordinate(std::uint64_t n, std::uint64_t g, std::uint64_t p, int m, unsigned b) {
  const Coeffs pc = digits(p, b);
  const Coeffs r = remainder(multiply(digits(n, b), digits(g, b), b), pc, b);
  // r/p = Q/x^m + R/(x^m p) with Q = floor(r x^m / p); the second term has no
  // digits among the first m, so the numerator is Q read as an index.
  Coeffs shifted(static_cast<std::size_t>(m), 0);
  shifted.insert(shifted.end(), r.begin(), r.end());
  return undigits(divide(shifted, pc, b).first, b);
}

int walsh2(std::uint64_t k, std::uint64_t u, int m) {
  int s = 0;
  for (int i = 0; i < m; ++i) s += static_cast<int>(((k >> i) & 1) * ((u >> (m - 1 - i)) & 1));
  return s % 2 == 0 ? 1 : -1;
}

std::vector<long long> walsh_block_sums(std::uint64_t u, int m, int K) {
  std::uint64_t rev = 0;
  for (int i = 0; i < m; ++i) rev |= ((u >> (m - 1 - i)) & 1) << i;
  std::vector<long long> blocks(static_cast<std::size_t>(K), 0);
  for (int a = 0; a < K; ++a) {
    const std::uint64_t lo = std::uint64_t{1} << a, hi = lo << 1;
    for (std::uint64_t k = lo; k < hi; ++k) blocks[a] += (__builtin_parityll(k & rev) ? -1 : 1);
  }
  return blocks;
}

double phi_series(std::uint64_t u, int m, double alpha, int K) {
  const auto blocks = walsh_block_sums(u, m, K);
  double total = 0.0;
  for (int a = 0; a < K; ++a) total += static_cast<double>(blocks[a]) * std::pow(2.0, -alpha * a);
  return total;
}

double phi_series_tail(double alpha, int K) {
  return std::pow(2.0, K * (1.0 - alpha)) / (1.0 - std::pow(2.0, 1.0 - alpha));
}

double char_sum(const std::vector<std::vector<std::uint64_t>>& points, const std::vector<std::uint64_t>& k,
                int m, unsigned b) {
  std::complex<double> total = 0.0;
  for (const auto& x : points) {
    long long exponent = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      // kappa_i is digit i of k; xi_{i+1} is digit m-1-i of the numerator.
      std::uint64_t kj = k[j];
      for (int i = 0; i < m && kj != 0; ++i, kj /= b) {
        std::uint64_t xj = x[j];
        for (int s = 0; s < m - 1 - i; ++s) xj /= b;
        exponent += static_cast<long long>((kj % b) * (xj % b));
      }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent % b) / b;
    total += std::polar(1.0, angle);
  }
  return total.real() / static_cast<double>(points.size());
}

bool dual_member(const std::vector<std::uint64_t>& k, const std::vector<std::uint64_t>& g, std::uint64_t p,
                 int m, unsigned b) {
  const std::uint64_t bm = power(b, m);
  Coeffs sum;
  for (std::size_t j = 0; j < k.size(); ++j) {
    const Coeffs term = multiply(digits(k[j] % bm, b), digits(g[j], b), b);
    if (sum.size() < term.size()) sum.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) sum[i] = (sum[i] + term[i]) % static_cast<int>(b);
  }
  return remainder(sum, digits(p, b), b).empty();
}

double t_measure(const std::vector<std::uint64_t>& g, std::uint64_t p, int m, unsigned b,
                 const std::vector<double>& gamma, double alpha) {
  const std::uint64_t bm = power(b, m);
  const std::size_t d = g.size();
  std::vector<std::uint64_t> k(d, 0);
  double total = 0.0;
  while (true) {
    std::size_t j = 0;
    while (j < d && ++k[j] == bm) k[j++] = 0;
    if (j == d) break;
    if (!dual_member(k, g, p, m, b)) continue;
    double term = 1.0;
    for (std::size_t i = 0; i < d; ++i)
      if (k[i] != 0) term *= gamma[i] * std::pow(static_cast<double>(b), -alpha * floor_log(k[i], b));
    total += term;
  }
  return total;
}

double wce_dual_sum(const std::vector<std::uint64_t>& g, std::uint64_t p, int m,
                    const std::vector<double>& gamma, double alpha, int K) {
  const std::uint64_t top = std::uint64_t{1} << K;
  const std::size_t d = g.size();
  std::vector<std::uint64_t> k(d, 0);
  double total = 0.0;
  while (true) {
    std::size_t j = 0;
    while (j < d && ++k[j] == top) k[j++] = 0;
    if (j == d) break;
    if (!dual_member(k, g, p, m, 2)) continue;
    double term = 1.0;
    for (std::size_t i = 0; i < d; ++i)
      if (k[i] != 0) term *= gamma[i] * std::pow(2.0, -alpha * floor_log(k[i], 2));
    total += term;
  }
  return total;
}

double h_quality(const std::vector<std::uint64_t>& previous, std::uint64_t q, int m, int w,
                 const std::vector<double>& eta, unsigned b) {
  const std::size_t r = previous.size() + 1;
  const double one_minus_b = 1.0 - static_cast<double>(b);
  double total = 0.0;
  for (int t = w; t <= m; ++t) {
    double level = 0.0;
    for (std::uint64_t l = 1; l < power(b, t); ++l) {
      if (l % b == 0) continue;
      double term = 1.0 + eta[r - 1] * one_minus_b * dl(l, q, w, b);
      for (std::size_t j = 0; j + 1 < r; ++j) term *= 1.0 + eta[j] * one_minus_b * dl(l, previous[j], t, b);
      level += term;
    }
    total += level * std::pow(static_cast<double>(b), w - t);
  }
  return total;
}

double running_product(const std::vector<std::uint64_t>& g, std::size_t r, int t, std::uint64_t l,
                       const std::vector<double>& eta) {
  double prod = 1.0;
  for (std::size_t j = 0; j < r; ++j) prod *= 1.0 - eta[j] * dl(l, g[j], t, 2);
  return prod;
}

double h_subset_sum(const std::vector<std::uint64_t>& g, int m, const std::vector<double>& eta, unsigned b) {
  const std::size_t d = g.size();
  const std::uint64_t bm = power(b, m);
  const double one_minus_b = 1.0 - static_cast<double>(b);
  double total = 0.0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    double weight = 1.0;
    for (std::size_t j = 0; j < d; ++j)
      if ((mask >> j) & 1) weight *= eta[j];
    double inner = 0.0;
    for (std::uint64_t n = 1; n < bm; ++n) {
      double prod = 1.0;
      for (std::size_t j = 0; j < d; ++j)
        if ((mask >> j) & 1) prod *= one_minus_b * dl(n, g[j], m, b);
      inner += prod;
    }
    total += weight * inner;
  }
  return total;
}

std::vector<std::uint64_t> greedy_dbd(int m, std::size_t d, const std::vector<double>& eta, unsigned b) {
  std::vector<std::uint64_t> g{1};
  for (std::size_t r = 2; r <= d; ++r) {
    std::uint64_t current = 1;
    for (int w = 2; w <= m; ++w) {
      const std::uint64_t place = power(b, w - 1);
      std::uint64_t best = current;
      double best_h = h_quality(g, current, m, w, eta, b);
      for (unsigned c = 1; c < b; ++c) {
        const std::uint64_t cand = current + c * place;
        const double h = h_quality(g, cand, m, w, eta, b);
        if (h < best_h) {
          best_h = h;
          best = cand;
        }
      }
      current = best;
    }
    g.push_back(current);
  }
  return g;
}

double wce_closed_form(const std::vector<std::uint64_t>& g, std::uint64_t p, int m,
                       const std::vector<double>& gamma, double alpha) {
  const double mu = mu2(alpha);
  auto phi = [&](std::uint64_t u) {
    if (u == 0) return mu;
    const int t = floor_log(u, 2) - m;
    return mu - std::pow(2.0, (1.0 + t) * (alpha - 1.0)) * (mu + 1.0);
  };
  const std::uint64_t N = std::uint64_t{1} << m;
  double total = 0.0;
  for (std::uint64_t n = 0; n < N; ++n) {
    double prod = 1.0;
    for (std::size_t j = 0; j < g.size(); ++j) prod *= 1.0 + gamma[j] * phi(coordinate(n, g[j], p, m, 2));
    total += prod;
  }
  return total / static_cast<double>(N) - 1.0;
}

}  // namespace polylat::oracle
