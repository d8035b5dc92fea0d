#include "polylat/cbc_dbd.hpp"

#include <cmath>
#include <string>

namespace polylat {

namespace {

void require_positive(const ProductWeights& eta, std::size_t d) {
  if (eta.size() < d)
    throw InvalidParameter("need " + std::to_string(d) + " weights, have " + std::to_string(eta.size()));
  for (std::size_t j = 0; j < d; ++j)
    if (!(eta[j] > 0.0)) throw InvalidParameter("construction weights must be strictly positive");
}

// 1 + eta (1 - b) digitlog, written so that b = 2 reduces to 1 - eta digitlog.
inline double factor(double eta, unsigned b, int dl) {
  return b == 2 ? 1.0 - eta * dl : 1.0 + eta * (1.0 - b) * dl;
}

inline double scale_level(double level_sum, unsigned b, int w, int t) {
  return b == 2 ? std::ldexp(level_sum, w - t) : level_sum / std::pow(double(b), t - w);
}

}  // namespace

GeneratingVector::GeneratingVector(unsigned base, int precision, std::vector<Poly> comps)
    : GeneratingVector(base, precision, std::move(comps), Poly(base).with_coeff(precision, 1)) {}

GeneratingVector::GeneratingVector(unsigned base, int precision, std::vector<Poly> comps, Poly mod)
    : b(base), m(precision), components(std::move(comps)), modulus(std::move(mod)) {}

std::vector<std::uint64_t> GeneratingVector::indices() const {
  std::vector<std::uint64_t> out;
  out.reserve(components.size());
  for (const auto& g : components) out.push_back(index_from_poly(g));
  return out;
}

bool GeneratingVector::power_modulus() const { return modulus == Poly(b).with_coeff(m, 1); }

PolyLatticeRule GeneratingVector::rule() const { return PolyLatticeRule(b, m, modulus, components); }

double h_direct(int m, int w, const ProductWeights& eta, std::span<const Poly> previous,
                const Poly& q) {
  const unsigned b = q.base();
  const std::size_t r = previous.size() + 1;
  if (w < 1 || w > m) throw InvalidParameter("digit index w outside 1..m");
  if (eta.size() < r) throw InvalidParameter("fewer weights than components");
  if (q.coeff(0) == 0) throw DegenerateInput("candidate polynomial is divisible by x");
  for (const auto& g : previous) {
    if (g.base() != b) throw InvalidParameter("mixed bases");
    if (g.coeff(0) == 0) throw DegenerateInput("previous component is divisible by x");
  }
  const double eta_r = eta[r - 1];
  double total = 0.0;

  if (b == 2) {
    if (m > kMaxBinaryPrecision) throw ResourceLimit("m exceeds the binary word limit");
    const std::uint64_t qb = q.bits();
    std::vector<std::uint64_t> gb;
    for (const auto& g : previous) gb.push_back(g.bits());
    for (int t = w; t <= m; ++t) {
      double level_sum = 0.0;
      for (std::uint64_t l = 1; l < (std::uint64_t{1} << t); l += 2) {
        double prod = 1.0;
        for (std::size_t j = 0; j + 1 < r; ++j)
          prod *= factor(eta[j], 2, gf2::digitlog(gf2::mul_mod_xw(l, gb[j], t), t));
        level_sum += prod * factor(eta_r, 2, gf2::digitlog(gf2::mul_mod_xw(l, qb, w), w));
      }
      total += scale_level(level_sum, 2, w, t);
    }
    return total;
  }

  for (int t = w; t <= m; ++t) {
    double level_sum = 0.0;
    const std::uint64_t top = checked_pow(b, t);
    for (std::uint64_t l = 1; l < top; ++l) {
      if (l % b == 0) continue;
      const Poly lp = poly_from_index(l, b);
      double prod = 1.0;
      for (std::size_t j = 0; j + 1 < r; ++j)
        prod *= factor(eta[j], b, digitlog(mul_mod_xw(lp, previous[j], t), t));
      level_sum += prod * factor(eta_r, b, digitlog(mul_mod_xw(lp, q, w), w));
    }
    total += scale_level(level_sum, b, w, t);
  }
  return total;
}

double h_quantity(const GeneratingVector& g, const ProductWeights& eta) {
  const unsigned b = g.b;
  const int m = g.m;
  if (eta.size() < g.dim()) throw InvalidParameter("fewer weights than components");
  for (const auto& c : g.components)
    if (c.coeff(0) == 0) throw DegenerateInput("component is divisible by x");
  const std::uint64_t N = checked_pow(b, m);
  double sum = 0.0;
  if (b == 2) {
    const auto bits = g.indices();
    for (std::uint64_t n = 1; n < N; ++n) {
      double prod = 1.0;
      for (std::size_t j = 0; j < bits.size(); ++j)
        prod *= factor(eta[j], 2, gf2::digitlog(gf2::mul_mod_xw(n, bits[j], m), m));
      sum += prod;
    }
  } else {
    for (std::uint64_t n = 1; n < N; ++n) {
      const Poly np = poly_from_index(n, b);
      double prod = 1.0;
      for (std::size_t j = 0; j < g.dim(); ++j)
        prod *= factor(eta[j], b, digitlog(mul_mod_xw(np, g.components[j], m), m));
      sum += prod;
    }
  }
  return sum - static_cast<double>(N - 1);
}

ConstructionState::ConstructionState(int m, ProductWeights eta, FastOptions options)
    : m_(m), eta_(std::move(eta)), use_table_(options.precompute_digitlog), next_w_(m + 1) {
  if (m < 1) throw InvalidParameter("precision m must be positive");
  if (m > kMaxBinaryPrecision)
    throw ResourceLimit("m = " + std::to_string(m) + " exceeds the supported maximum " +
                        std::to_string(kMaxBinaryPrecision));
  require_positive(eta_, 1);
  const std::uint64_t size = std::uint64_t{1} << m;
  if (use_table_) {
    digitlog_table_.resize(size);
    for (std::uint64_t u = 1; u < size; ++u)
      digitlog_table_[u] = static_cast<std::int8_t>(std::bit_width(u) - m);
  }
  // Index l 2^{m-t} of level t satisfies digitlog(l 2^{m-t}, m) = digitlog(l, t),
  // so one pass seeds every level with component 1 (g_1 = 1).
  v_.resize(static_cast<Eigen::Index>(size));
  v_[0] = 0.0;
  for (std::uint64_t l = 1; l < size; ++l)
    v_[static_cast<Eigen::Index>(l)] = factor(eta_[0], 2, digitlog_at(l, m));
  done_.push_back(1);
}

void ConstructionState::begin_component() {
  if (!component_complete()) throw InternalState("previous component is not complete");
  if (r_ >= eta_.size()) throw InvalidParameter("no weight for component " + std::to_string(r_ + 1));
  if (!(eta_[r_] > 0.0)) throw InvalidParameter("construction weights must be strictly positive");
  ++r_;
  partial_ = 1;
  next_w_ = 2;
  if (component_complete()) done_.push_back(partial_);
}

void ConstructionState::require_stage(int w) const {
  if (component_complete() || w != next_w_)
    throw InternalState("digit " + std::to_string(w) + " requested while the state expects digit " +
                        std::to_string(next_w_));
}

void ConstructionState::fill_factors(int w, std::uint64_t q, std::vector<double>& f) const {
  const double eta_r = eta_[r_ - 1];
  const std::uint64_t half = std::uint64_t{1} << (w - 1);
  f.resize(half);
  for (std::uint64_t i = 0; i < half; ++i) {
    const std::uint64_t l = 2 * i + 1;
    f[i] = factor(eta_r, 2, digitlog_at(gf2::mul_mod_xw(l, q, w), w));
  }
}

double ConstructionState::h_fast(int w, std::uint64_t q) const {
  require_stage(w);
  if ((q & 1U) == 0) throw DegenerateInput("candidate polynomial is divisible by x");
  fill_factors(w, q, scratch0_);
  const double* f = scratch0_.data();
  const std::uint64_t fmask = (std::uint64_t{1} << w) - 1;
  double total = 0.0;
  for (int t = w; t <= m_; ++t) {
    const std::uint64_t stride = std::uint64_t{1} << (m_ - t);
    const std::uint64_t top = std::uint64_t{1} << t;
    double level_sum = 0.0;
    for (std::uint64_t l = 1; l < top; l += 2)
      level_sum += v_[static_cast<Eigen::Index>(l * stride)] * f[(l & fmask) >> 1];
    total += std::ldexp(level_sum, w - t);
  }
  return total;
}

std::pair<double, double> ConstructionState::h_fast_candidates(int w) const {
  require_stage(w);
  fill_factors(w, partial_, scratch0_);
  fill_factors(w, partial_ | (std::uint64_t{1} << (w - 1)), scratch1_);
  const double* f0 = scratch0_.data();
  const double* f1 = scratch1_.data();
  const double* v = v_.data();
  const std::uint64_t half = std::uint64_t{1} << (w - 1);
  double total0 = 0.0, total1 = 0.0;
  for (int t = w; t <= m_; ++t) {
    const std::uint64_t stride = std::uint64_t{1} << (m_ - t);
    const std::uint64_t blocks = std::uint64_t{1} << (t - w);
    double s0 = 0.0, s1 = 0.0;
    // l = 2 i + 1 + c 2^w walks the odd l < 2^t in ascending order while the
    // factor index i runs over one block.
    const double* vp = v + stride;
    const std::uint64_t step = 2 * stride;
    for (std::uint64_t c = 0; c < blocks; ++c) {
      for (std::uint64_t i = 0; i < half; ++i, vp += step) {
        s0 += *vp * f0[i];
        s1 += *vp * f1[i];
      }
    }
    total0 += std::ldexp(s0, w - t);
    total1 += std::ldexp(s1, w - t);
  }
  return {total0, total1};
}

void ConstructionState::apply_digit(int w, unsigned g_star) {
  require_stage(w);
  if (g_star > 1) throw InvalidParameter("digit outside F_2");
  partial_ |= std::uint64_t{g_star} << (w - 1);
  const double eta_r = eta_[r_ - 1];
  const std::uint64_t stride = std::uint64_t{1} << (m_ - w);
  for (std::uint64_t l = 1; l < (std::uint64_t{1} << w); l += 2)
    v_[static_cast<Eigen::Index>(l * stride)] *=
        factor(eta_r, 2, digitlog_at(gf2::mul_mod_xw(l, partial_, w), w));
  ++next_w_;
  if (component_complete()) done_.push_back(partial_);
}

GeneratingVector construct_fast(int m, std::size_t d, const ProductWeights& eta, FastOptions options) {
  if (m > kMaxBinaryPrecision)
    throw ResourceLimit("m = " + std::to_string(m) + " exceeds the supported maximum " +
                        std::to_string(kMaxBinaryPrecision));
  if (d == 0) throw InvalidParameter("dimension must be positive");
  require_positive(eta, d);
  ConstructionState state(m, eta.prefix(d), options);
  for (std::size_t r = 2; r <= d; ++r) {
    state.begin_component();
    for (int w = 2; w <= m; ++w) {
      const auto [h0, h1] = state.h_fast_candidates(w);
      state.apply_digit(w, h1 < h0 ? 1U : 0U);
    }
  }
  std::vector<Poly> comps;
  comps.reserve(d);
  for (auto bits : state.components()) comps.push_back(Poly::from_bits(bits));
  return GeneratingVector(2, m, std::move(comps));
}

GeneratingVector construct_reference(unsigned b, int m, std::size_t d, const ProductWeights& eta) {
  if (!is_prime(b)) throw InvalidParameter("base is not prime");
  if (m < 1) throw InvalidParameter("precision m must be positive");
  if (d == 0) throw InvalidParameter("dimension must be positive");
  constexpr std::uint64_t kBudget = std::uint64_t{1} << 26;
  const std::uint64_t N = checked_pow(b, m);
  if (N > kBudget / (static_cast<std::uint64_t>(m) * d))
    throw ResourceLimit("reference construction limited to b^m m d <= 2^26");
  require_positive(eta, d);

  std::vector<Poly> comps{Poly(b, {1})};
  for (std::size_t r = 2; r <= d; ++r) {
    Poly current(b, {1});
    for (int w = 2; w <= m; ++w) {
      unsigned best = 0;
      double best_h = 0.0;
      for (unsigned g = 0; g < b; ++g) {
        const double h = h_direct(m, w, eta, comps, current.with_coeff(w - 1, g));
        if (g == 0 || h < best_h) {
          best = g;
          best_h = h;
        }
      }
      current = current.with_coeff(w - 1, best);
    }
    comps.push_back(std::move(current));
  }
  return GeneratingVector(b, m, std::move(comps));
}

}  // namespace polylat
