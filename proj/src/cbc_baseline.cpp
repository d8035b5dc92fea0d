#include "polylat/cbc_baseline.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "polylat/walsh_space.hpp"

namespace polylat {

namespace {

constexpr int kMaxBaselinePrecision = 14;

// Numerators of v_m(h / p) for every h of degree < m. The map is F_2-linear,
// so only the images of x^i are computed directly.
std::vector<std::uint32_t> laurent_table(std::uint64_t p, int m, bool power) {
  const std::uint64_t size = std::uint64_t{1} << m;
  std::vector<std::uint32_t> table(size);
  if (power) {
    for (std::uint64_t h = 0; h < size; ++h) table[h] = static_cast<std::uint32_t>(h);
    return table;
  }
  std::vector<std::uint32_t> basis(m);
  for (int i = 0; i < m; ++i)
    basis[i] = static_cast<std::uint32_t>(gf2::laurent_numerator(std::uint64_t{1} << i, p, m));
  table[0] = 0;
  for (std::uint64_t h = 1; h < size; ++h)
    table[h] = table[h & (h - 1)] ^ basis[std::countr_zero(h)];
  return table;
}

// Coordinate numerators of all points for one component, ascending n.
void component_coordinates(std::uint64_t g, std::uint64_t p, int m,
                           const std::vector<std::uint32_t>& laurent,
                           std::vector<std::uint32_t>& residues, std::vector<std::uint32_t>& out) {
  const std::uint64_t size = std::uint64_t{1} << m;
  std::uint32_t basis[kMaxBaselinePrecision];
  for (int i = 0; i < m; ++i)
    basis[i] = static_cast<std::uint32_t>(gf2::mulmod(std::uint64_t{1} << i, g, p));
  residues.resize(size);
  out.resize(size);
  residues[0] = 0;
  out[0] = 0;
  for (std::uint64_t n = 1; n < size; ++n) {
    residues[n] = residues[n & (n - 1)] ^ basis[std::countr_zero(n)];
    out[n] = laurent[residues[n]];
  }
}

}  // namespace

Poly baseline_modulus(int m, ModulusKind kind) {
  if (m < 1) throw InvalidParameter("precision m must be positive");
  return kind == ModulusKind::power ? Poly(2).with_coeff(m, 1) : primitive_poly_f2(m);
}

std::vector<std::uint64_t> baseline_candidates(int m, ModulusKind kind) {
  if (m < 1) throw InvalidParameter("precision m must be positive");
  if (m > kMaxBaselinePrecision)
    throw ResourceLimit("naive CBC is limited to m <= " + std::to_string(kMaxBaselinePrecision));
  std::vector<std::uint64_t> out;
  const std::uint64_t top = std::uint64_t{1} << m;
  // The tabulated moduli are irreducible, so every nonzero g is a unit.
  for (std::uint64_t g = 1; g < top; g += (kind == ModulusKind::power ? 2 : 1)) out.push_back(g);
  return out;
}

GeneratingVector construct_cbc_naive(int m, std::size_t d, double alpha, const ProductWeights& weights,
                                     ModulusKind kind, unsigned threads) {
  if (m > kMaxBaselinePrecision)
    throw ResourceLimit("naive CBC is limited to m <= " + std::to_string(kMaxBaselinePrecision));
  if (d == 0) throw InvalidParameter("dimension must be positive");
  if (weights.size() < d) throw InvalidParameter("fewer weights than dimensions");
  const Poly modulus = baseline_modulus(m, kind);
  const std::uint64_t p = modulus.bits();
  const auto candidates = baseline_candidates(m, kind);
  const auto laurent = laurent_table(p, m, kind == ModulusKind::power);
  const PhiTable<double> phi(m, alpha);
  const std::uint64_t size = std::uint64_t{1} << m;

  std::vector<double> running(size, 1.0);
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint32_t> residues, coords;

  auto fold = [&](std::uint64_t g, double gamma) {
    component_coordinates(g, p, m, laurent, residues, coords);
    for (std::uint64_t n = 0; n < size; ++n) running[n] *= 1.0 + gamma * phi(coords[n]);
  };

  fold(1, weights[0]);
  chosen.push_back(1);

  std::vector<double> sums(candidates.size());
  threads = std::max(1U, threads);
  for (std::size_t r = 1; r < d; ++r) {
    const double gamma = weights[r];
    auto scan = [&](std::size_t lo, std::size_t hi) {
      std::vector<std::uint32_t> res, crd;
      for (std::size_t c = lo; c < hi; ++c) {
        component_coordinates(candidates[c], p, m, laurent, res, crd);
        double s = 0.0;
        for (std::uint64_t n = 0; n < size; ++n) s += running[n] * (1.0 + gamma * phi(crd[n]));
        sums[c] = s;
      }
    };
    if (threads == 1) {
      scan(0, candidates.size());
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (candidates.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk, hi = std::min(candidates.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(scan, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < candidates.size(); ++c)
      if (sums[c] < sums[best]) best = c;
    chosen.push_back(candidates[best]);
    fold(candidates[best], gamma);
  }

  std::vector<Poly> comps;
  for (auto g : chosen) comps.push_back(Poly::from_bits(g));
  return GeneratingVector(2, m, std::move(comps), modulus);
}

double baseline_error_from_scratch(int m, const std::vector<std::uint64_t>& components, double alpha,
                                   const ProductWeights& weights, ModulusKind kind) {
  const Poly modulus = baseline_modulus(m, kind);
  std::vector<Poly> comps;
  for (auto g : components) comps.push_back(Poly::from_bits(g));
  return wce_product(PolyLatticeRule(2, m, modulus, std::move(comps)), alpha, weights);
}

}  // namespace polylat
