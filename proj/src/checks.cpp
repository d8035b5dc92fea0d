#include "polylat/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "polylat/cbc_baseline.hpp"
#include "polylat/cbc_dbd.hpp"
#include "polylat/oracles.hpp"
#include "polylat/walsh_space.hpp"

namespace polylat::checks {

namespace orc = polylat::oracle;

namespace {

class Recorder {
 public:
  explicit Recorder(CheckResult& r) : r_(r) {}

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      std::ostringstream s;
      describe(s);
      r_.detail = s.str();
    }
  }

 private:
  CheckResult& r_;
};

bool full(Level level) { return level == Level::full; }

std::vector<std::uint64_t> units(unsigned b, int m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 1; g < checked_pow(b, m); ++g)
    if (g % b != 0) out.push_back(g);
  return out;
}

PolyLatticeRule power_rule(unsigned b, int m, const std::vector<std::uint64_t>& g) {
  std::vector<Poly> comps;
  for (auto c : g) comps.push_back(poly_from_index(c, b));
  return PolyLatticeRule::with_power_modulus(b, m, std::move(comps));
}

std::vector<Poly> bits_to_polys(const std::vector<std::uint64_t>& g) {
  std::vector<Poly> out;
  for (auto c : g) out.push_back(Poly::from_bits(c));
  return out;
}

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> dist(0.05, 1.5);
  std::vector<double> out(d);
  for (auto& x : out) x = dist(rng);
  return out;
}

ProductWeights to_weights(const std::vector<double>& v) {
  return ProductWeights(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
}

ProductWeights family(int kind, std::size_t d) {
  Eigen::VectorXd g(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    const double jj = static_cast<double>(j + 1);
    g[static_cast<Eigen::Index>(j)] = kind == 0 ? 1.0 / (jj * jj) : kind == 1 ? std::pow(0.95, jj)
                                    : kind == 2 ? std::pow(0.7, jj) : 1.0;
  }
  return ProductWeights(g);
}

// --- field arithmetic -------------------------------------------------------

void check_index_bijection(Level level, Recorder& rec) {
  const std::uint64_t top = full(level) ? 20000 : 2000;
  for (unsigned b : {2U, 3U, 5U})
    for (std::uint64_t n = 0; n < top; ++n)
      rec.expect(index_from_poly(poly_from_index(n, b)) == n, [&](auto& s) { s << "b=" << b << " n=" << n; });
}

void check_mul_mod_xw(Level level, Recorder& rec) {
  const std::uint64_t top = full(level) ? 2048 : 256;
  for (std::uint64_t a = 0; a < top; ++a)
    for (std::uint64_t c = 0; c < top; c += (full(level) ? 7 : 1)) {
      const int w = 1 + static_cast<int>((a ^ c) % 22);
      const auto expect = orc::undigits(orc::convolve_trunc(orc::digits(a, 2), orc::digits(c, 2), w, 2), 2);
      rec.expect(gf2::mul_mod_xw(a, c, w) == expect, [&](auto& s) { s << "a=" << a << " c=" << c << " w=" << w; });
    }
}

void check_digitlog(Level level, Recorder& rec) {
  const int top = full(level) ? 12 : 8;
  for (int w = 1; w <= top; ++w)
    for (std::uint64_t q = 1; q < (std::uint64_t{1} << w); ++q) {
      const int expect = orc::floor_log_plus_one(vm_numerator(Poly::from_bits(q), w), w, 2);
      rec.expect(gf2::digitlog(q, w) == expect && digitlog(Poly::from_bits(q), w) == expect,
                 [&](auto& s) { s << "q=" << q << " w=" << w; });
    }
  for (int w = 1; w <= (full(level) ? 7 : 4); ++w)
    for (std::uint64_t q = 1; q < checked_pow(3, w); ++q)
      rec.expect(digitlog(poly_from_index(q, 3), w) ==
                     orc::floor_log_plus_one(vm_numerator(poly_from_index(q, 3), w), w, 3),
                 [&](auto& s) { s << "b=3 q=" << q << " w=" << w; });
}

void check_laurent(Level level, Recorder& rec) {
  std::mt19937_64 rng(101);
  const int trials = full(level) ? 500 : 60;
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= 8; ++m) {
      const std::uint64_t bm = checked_pow(b, m);
      for (int t = 0; t < trials; ++t) {
        const std::uint64_t p = bm + rng() % (bm * (b - 1));
        const std::uint64_t q = rng() % bm;
        const auto u = laurent_numerator(poly_from_index(q, b), poly_from_index(p, b), m);
        rec.expect(orc::laurent_multiply_back(u, orc::digits(q, b), orc::digits(p, b), m, b),
                   [&](auto& s) { s << "b=" << b << " q=" << q << " p=" << p; });
      }
      if (b == 2)
        for (std::uint64_t q = 0; q < bm; ++q)
          rec.expect(laurent_numerator(Poly::from_bits(q), Poly::from_bits(bm), m) == vm_numerator(Poly::from_bits(q), m),
                     [&](auto& s) { s << "x^m case q=" << q; });
    }
}

void check_primitive(Level level, Recorder& rec) {
  for (int m = 1; m <= (full(level) ? 24 : 16); ++m) {
    const auto p = primitive_poly_f2(m);
    rec.expect(p.degree() == m && orc::order_of_x_f2(p.bits()) == (std::uint64_t{1} << m) - 1,
               [&](auto& s) { s << "m=" << m; });
  }
}

// --- point sets -------------------------------------------------------------

void check_full_grid(Level level, Recorder& rec) {
  std::mt19937_64 rng(103);
  const int top = full(level) ? 6 : 4;
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= top; ++m) {
      const auto us = units(b, m);
      const std::uint64_t bm = checked_pow(b, m);
      std::vector<std::uint64_t> gen;
      for (int j = 0; j < 4; ++j) gen.push_back(us[rng() % us.size()]);
      std::vector<PolyLatticeRule> rules{power_rule(b, m, gen)};
      if (b == 2) rules.emplace_back(2, m, primitive_poly_f2(m), bits_to_polys(gen));
      for (const auto& rule : rules) {
        const auto pts = generate_points(rule);
        for (std::size_t j = 0; j < rule.dim(); ++j) {
          std::vector<std::uint64_t> col(bm);
          for (std::uint64_t n = 0; n < bm; ++n) col[n] = pts(n, j);
          rec.expect(col[0] == 0, [&](auto& s) { s << "origin b=" << b << " m=" << m; });
          std::sort(col.begin(), col.end());
          bool grid = true;
          for (std::uint64_t n = 0; n < bm; ++n) grid = grid && col[n] == n;
          rec.expect(grid, [&](auto& s) { s << "b=" << b << " m=" << m << " j=" << j; });
          for (std::uint64_t n = 0; n < std::min<std::uint64_t>(bm, 40); ++n)
            rec.expect(pts(n, j) == orc::coordinate(n, index_from_poly(rule.generators()[j]),
                                                    index_from_poly(rule.modulus()), m, b),
                       [&](auto& s) { s << "coordinate b=" << b << " m=" << m << " n=" << n; });
        }
      }
    }
}

void check_harmonic(Level level, Recorder& rec) {
  std::mt19937_64 rng(107);
  for (int m = 4; m <= (full(level) ? 10 : 7); ++m) {
    const auto us = units(2, m);
    const auto rule = power_rule(2, m, {1, us[rng() % us.size()], us[rng() % us.size()]});
    const auto pts = generate_points(rule);
    for (std::size_t j = 0; j < rule.dim(); ++j) {
      double s = 0.0;
      for (std::uint64_t n = 1; n < rule.n_points(); ++n) s += 1.0 / static_cast<double>(pts(n, j));
      const double bound = 1.0 + m * std::log(2.0);
      rec.expect(s < bound && bound <= m, [&](auto& o) { o << "m=" << m << " sum=" << s; });
    }
  }
}

// --- Walsh space ------------------------------------------------------------

void check_character(Level level, Recorder& rec) {
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= (full(level) ? 3 : 2); ++m)
      for (std::size_t d = 1; d <= 2; ++d) {
        const auto us = units(b, m);
        std::vector<std::vector<std::uint64_t>> gens;
        for (auto g1 : us) {
          if (d == 1) {
            gens.push_back({g1});
            continue;
          }
          for (auto g2 : us) gens.push_back({g1, g2});
        }
        const std::uint64_t box = checked_pow(b, 2 * m);
        const std::uint64_t total = d == 1 ? box : box * box;
        // Largest case (b = 3, m = 3, d = 2) is sampled on strides.
        const bool sampled = total * gens.size() > (std::uint64_t{1} << 22);
        const std::size_t g_stride = sampled ? 17 : 1;
        const std::uint64_t k_stride = sampled ? 97 : 1;
        for (std::size_t gi = 0; gi < gens.size(); gi += g_stride) {
          const auto rule = power_rule(b, m, gens[gi]);
          const auto pts = generate_points(rule);
          std::vector<std::vector<std::uint64_t>> rows(pts.n_points(), std::vector<std::uint64_t>(d));
          for (std::uint64_t n = 0; n < pts.n_points(); ++n)
            for (std::size_t j = 0; j < d; ++j) rows[n][j] = pts(n, j);
          std::vector<std::uint64_t> k(d);
          for (std::uint64_t idx = 0; idx < total; idx += k_stride) {
            k[0] = idx % box;
            if (d == 2) k[1] = idx / box;
            const bool member = orc::dual_member(k, gens[gi], checked_pow(b, m), m, b);
            const double delta = member ? 1.0 : 0.0;
            const double lib = idx % 7 == 0 ? char_sum(rule, k) : orc::char_sum(rows, k, m, b);
            rec.expect(dual_indicator(rule, k) == member && std::abs(lib - delta) < 1e-9,
                       [&](auto& s) { s << "b=" << b << " m=" << m << " k0=" << k[0]; });
          }
        }
      }
}

void check_phi_series(Level level, Recorder& rec) {
  const int K = full(level) ? 20 : 16;
  for (int m = 1; m <= (full(level) ? 10 : 6); ++m)
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << m); ++u) {
      const auto blocks = orc::walsh_block_sums(u, m, K);
      for (double alpha : {1.5, 2.0, 3.0}) {
        double series = 0.0;
        for (int a = 0; a < K; ++a) series += static_cast<double>(blocks[a]) * std::pow(2.0, -alpha * a);
        const double diff = std::abs(phi_alpha(u, m, alpha) - series);
        rec.expect(diff <= orc::phi_series_tail(alpha, K) + 1e-12,
                   [&](auto& s) { s << "m=" << m << " u=" << u << " alpha=" << alpha << " diff=" << diff; });
      }
    }
}

void check_wce_oracle(Level level, Recorder& rec) {
  rec.expect(std::abs(wce_product(power_rule(2, 1, {1}), 2.0, ProductWeights{1.0}) - 0.5) < 1e-12,
             [](auto& s) { s << "m=1 exact value"; });
  rec.expect(std::abs(orc::wce_dual_sum({1}, 2, 1, {1.0}, 2.0, 18) - 0.5) < 1e-5,
             [](auto& s) { s << "dual sum m=1"; });
  const std::vector<double> gv{0.9, 0.4, 0.25};
  const ProductWeights gamma(Eigen::Vector3d(0.9, 0.4, 0.25));
  std::mt19937_64 rng(109);
  for (int m = 1; m <= (full(level) ? 8 : 5); ++m) {
    const auto us = units(2, m);
    const std::vector<std::uint64_t> g{1, us[rng() % us.size()], us[rng() % us.size()]};
    for (double alpha : {1.5, 2.0, 3.0}) {
      const double lib = wce_product(power_rule(2, m, g), alpha, gamma);
      const double ref = orc::wce_closed_form(g, std::uint64_t{1} << m, m, gv, alpha);
      rec.expect(std::abs(lib - ref) <= 1e-13 * std::abs(ref), [&](auto& s) { s << "m=" << m << " alpha=" << alpha; });
    }
  }
}

void check_sandwich(Level, Recorder& rec) {
  const std::vector<ProductWeights> families{{1.0, 1.0}, {0.9, 0.3}, {0.25, 0.0625}};
  for (int m = 1; m <= 3; ++m)
    for (std::size_t d = 1; d <= 2; ++d)
      for (auto g2 : units(2, m))
        for (const auto& w : families)
          for (double alpha : {1.5, 2.0, 3.0}) {
            const auto rule = power_rule(2, m, d == 1 ? std::vector<std::uint64_t>{g2} : std::vector<std::uint64_t>{1, g2});
            const double T = t_measure(rule, w, alpha);
            const double e = wce_product(rule, alpha, w);
            const double gap = trunc_gap_bound(alpha, w, d, rule.n_points(), 2);
            rec.expect(T <= e + 1e-12 && e <= T + gap + 1e-12,
                       [&](auto& s) { s << "m=" << m << " g2=" << g2 << " alpha=" << alpha << " T=" << T << " e=" << e; });
          }
}

void check_log_series(Level level, Recorder& rec) {
  const int prec = full(level) ? 10 : 8;
  for (std::uint64_t u = 1; u < (std::uint64_t{1} << prec); ++u) {
    const double x = std::ldexp(static_cast<double>(u), -prec);
    const double target = -static_cast<double>(orc::floor_log_plus_one(u, prec, 2));
    double direct = 1.0;
    std::uint64_t N = 1;
    for (int mp = 0; mp <= prec; ++mp, N <<= 1) {
      if (mp > 0)
        for (std::uint64_t k = N / 2; k < N; ++k)
          direct += orc::walsh2(k, u, prec) / std::ldexp(1.0, std::bit_width(k) - 1);
      const double lib = log_series_partial(u, prec, N);
      const double bound = 2.0 / (static_cast<double>(N) * x);
      rec.expect(std::abs(lib - direct) <= 1e-12 * std::max(1.0, std::abs(direct)) && std::abs(lib - target) < bound,
                 [&](auto& s) { s << "u=" << u << " N=" << N << " value=" << lib; });
    }
  }
}

void check_mu(Level, Recorder& rec) {
  for (unsigned b : {2U, 3U, 5U})
    for (double alpha : {1.5, 2.0, 3.0}) {
      double direct = 0.0;
      const int A = b == 2 ? 16 : b == 3 ? 10 : 7;
      for (std::uint64_t k = 1; k < checked_pow(b, A); ++k) direct += std::pow(double(b), -alpha * ilog(k, b));
      const double tail = (b - 1) * std::pow(double(b), A * (1.0 - alpha)) / (1.0 - std::pow(double(b), 1.0 - alpha));
      const double mu = mu_b(alpha, b);
      rec.expect(direct <= mu && std::abs(mu - direct - tail) <= 1e-10 * mu,
                 [&](auto& s) { s << "b=" << b << " alpha=" << alpha; });
    }
}

void check_padding(Level, Recorder& rec) {
  const auto base = power_rule(2, 8, {1, 0b10110101, 0b1011});
  const auto padded = power_rule(2, 8, {1, 0b10110101, 0b1011, 0b111, 0b1100001});
  for (double alpha : {1.5, 2.0, 3.0}) {
    rec.expect(wce_product(base, alpha, ProductWeights{1.0, 0.5, 0.2}) ==
                   wce_product(padded, alpha, ProductWeights{1.0, 0.5, 0.2, 0.0, 0.0}),
               [&](auto& s) { s << "alpha=" << alpha; });
    rec.expect(wce_product(base, alpha, ProductWeights{0.0, 0.0, 0.0}) == 0.0, [&](auto& s) { s << "all zero"; });
  }
}

// --- construction -----------------------------------------------------------

void check_h_fast(Level level, Recorder& rec) {
  std::mt19937_64 rng(113);
  const int mtop = full(level) ? 10 : 6;
  const std::size_t dtop = full(level) ? 8 : 4;
  for (int m = 1; m <= mtop; ++m)
    for (std::size_t d = 1; d <= dtop; ++d) {
      const auto eta = random_weights(rng, d);
      const auto w = to_weights(eta);
      ConstructionState state(m, w);
      for (std::size_t rr = 2; rr <= d; ++rr) {
        state.begin_component();
        const auto prev = bits_to_polys(state.components());
        for (int dig = 2; dig <= m; ++dig) {
          const std::uint64_t q0 = state.partial(), q1 = q0 | (std::uint64_t{1} << (dig - 1));
          const double d0 = h_direct(m, dig, w, prev, Poly::from_bits(q0));
          const double d1 = h_direct(m, dig, w, prev, Poly::from_bits(q1));
          const auto [f0, f1] = state.h_fast_candidates(dig);
          rec.expect(std::abs(f0 - d0) <= 1e-12 * std::abs(d0) && std::abs(f1 - d1) <= 1e-12 * std::abs(d1) &&
                         f0 == state.h_fast(dig, q0) && f1 == state.h_fast(dig, q1),
                     [&](auto& s) { s << "m=" << m << " r=" << rr << " w=" << dig; });
          if (m <= 5 && rr <= 3) {
            const auto prev_bits = std::vector<std::uint64_t>(state.components());
            rec.expect(std::abs(orc::h_quality(prev_bits, q0, m, dig, eta, 2) - d0) <= 1e-12 * std::abs(d0),
                       [&](auto& s) { s << "definition m=" << m << " w=" << dig; });
          }
          // Monotone selection: the applied digit never has the larger value.
          const unsigned pick = f1 < f0 ? 1U : 0U;
          rec.expect((pick ? f1 : f0) <= (pick ? f0 : f1), [&](auto& s) { s << "selection m=" << m; });
          state.apply_digit(dig, (rr + dig) % 3 == 0 ? 1U - pick : pick);
        }
      }
    }
}

void check_cross_equality(Level level, Recorder& rec) {
  std::mt19937_64 rng(127);
  const int mtop = full(level) ? 8 : 6;
  const std::size_t dtop = full(level) ? 5 : 4;
  for (int m = 1; m <= mtop; ++m)
    for (std::size_t d = 1; d <= dtop; ++d)
      for (int trial = 0; trial < 3; ++trial) {
        const auto w = trial == 0 ? ProductWeights::constant(d, 1.0) : to_weights(random_weights(rng, d));
        const auto fast = construct_fast(m, d, w);
        rec.expect(construct_reference(2, m, d, w) == fast && construct_fast(m, d, w, FastOptions{false}) == fast,
                   [&](auto& s) { s << "m=" << m << " d=" << d << " trial=" << trial; });
      }
}

void check_greedy_oracle(Level level, Recorder& rec) {
  std::mt19937_64 rng(131);
  for (unsigned b : {2U, 3U, 5U})
    for (int m = 1; m <= (b == 5 ? 2 : full(level) ? 4 : 3); ++m)
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto eta = random_weights(rng, d);
        rec.expect(construct_reference(b, m, d, to_weights(eta)).indices() == orc::greedy_dbd(m, d, eta, b),
                   [&](auto& s) { s << "b=" << b << " m=" << m << " d=" << d; });
      }
}

void check_staging(Level level, Recorder& rec) {
  std::mt19937_64 rng(137);
  for (int m = 1; m <= (full(level) ? 12 : 8); ++m)
    for (int t = 1; t <= m; ++t)
      for (std::uint64_t l = 1; l < (std::uint64_t{1} << t); l += 2)
        rec.expect(gf2::digitlog(l << (m - t), m) == gf2::digitlog(l, t),
                   [&](auto& s) { s << "init m=" << m << " t=" << t << " l=" << l; });
  for (int m = 1; m <= (full(level) ? 8 : 6); ++m) {
    const std::size_t d = 4;
    const auto eta = random_weights(rng, d);
    ConstructionState state(m, to_weights(eta));
    for (std::size_t rr = 2; rr <= d; ++rr) {
      state.begin_component();
      for (int w = 2; w <= m + 1; ++w) {
        std::vector<std::uint64_t> with = state.components();
        if (!state.component_complete()) with.push_back(state.partial());
        for (int t = 1; t <= m; ++t)
          for (std::uint64_t l = 1; l < (std::uint64_t{1} << t); l += 2) {
            const double expect = orc::running_product(with, t < w ? rr : rr - 1, t, l, eta);
            rec.expect(std::abs(state.value(l << (m - t)) - expect) <= 1e-13 * std::abs(expect),
                       [&](auto& s) { s << "m=" << m << " r=" << rr << " w=" << w << " t=" << t << " l=" << l; });
          }
        if (w <= m) state.apply_digit(w, static_cast<unsigned>(rng() & 1));
      }
    }
  }
}

void check_h_bound(Level level, Recorder& rec) {
  const int mtop = full(level) ? 12 : 8;
  const std::size_t dtop = full(level) ? 20 : 10;
  for (int kind = 0; kind < 4; ++kind) {
    const auto eta = family(kind, dtop);
    for (int m = 1; m <= mtop; ++m) {
      const auto g = construct_fast(m, dtop, eta);
      double prod = 1.0, prev_h = 0.0;
      for (std::size_t d = 1; d <= dtop; ++d) {
        prod *= 1.0 + eta[d - 1];
        const GeneratingVector prefix(2, m, std::vector<Poly>(g.components.begin(), g.components.begin() + d));
        const double h = h_quantity(prefix, eta);
        const double bound = std::ldexp(prod - 1.0, m);
        rec.expect(h <= bound * (1 + 1e-12), [&](auto& s) { s << "m=" << m << " d=" << d << " H=" << h; });
        if (d >= 2) {
          // Recursion: H_d <= (1 + eta_d) H_{d-1} + eta_d (b^m - 1).
          const double rhs = (1.0 + eta[d - 1]) * prev_h + eta[d - 1] * (std::ldexp(1.0, m) - 1.0);
          rec.expect(h <= rhs + 1e-12 * std::abs(rhs), [&](auto& s) { s << "recursion m=" << m << " d=" << d; });
        }
        prev_h = h;
      }
    }
  }
  std::mt19937_64 rng(139);
  for (int m = 1; m <= 5; ++m)
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto eta = random_weights(rng, d);
      const auto g = construct_fast(m, d, to_weights(eta));
      const double lib = h_quantity(g, to_weights(eta));
      const double ref = orc::h_subset_sum(g.indices(), m, eta, 2);
      rec.expect(std::abs(lib - ref) <= 1e-11 * std::max(1.0, std::abs(ref)),
                 [&](auto& s) { s << "subset form m=" << m << " d=" << d; });
    }
}

void check_t_bound(Level level, Recorder& rec) {
  const int mtop = full(level) ? 8 : 6;
  const std::size_t dtop = full(level) ? 3 : 2;
  for (int kind = 0; kind < 4; ++kind)
    for (int m = 4; m <= mtop; ++m)
      for (std::size_t d = 1; d <= dtop; ++d) {
        const auto eta = family(kind, d);
        const auto g = construct_fast(m, d, eta);
        const double T = t_measure(g.rule(), eta, 1.0);
        double p1 = 1.0, p2 = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
          p1 *= 1.0 + eta[j] * (m + 1.0);
          p2 *= 1.0 + eta[j] * (2.0 * m + 4.0);
        }
        const double bound = std::ldexp(p1 + 2.0 * m * p2, -m);
        rec.expect(T <= bound, [&](auto& s) { s << "m=" << m << " d=" << d << " T=" << T << " bound=" << bound; });
      }
}

void check_baseline(Level level, Recorder& rec) {
  for (auto kind : {ModulusKind::power, ModulusKind::primitive})
    for (int m = 1; m <= (full(level) ? 6 : 4); ++m) {
      const std::size_t d = 4;
      const auto w = family(0, d).pow(1.5);
      const std::vector<double> gamma(w.values().data(), w.values().data() + d);
      const auto g = construct_cbc_naive(m, d, 1.5, w, kind).indices();
      const std::uint64_t p = baseline_modulus(m, kind).bits();
      for (std::size_t rr = 2; rr <= d; ++rr) {
        std::vector<std::uint64_t> prefix(g.begin(), g.begin() + rr);
        const std::vector<double> gr(gamma.begin(), gamma.begin() + rr);
        const double chosen = orc::wce_closed_form(prefix, p, m, gr, 1.5);
        for (auto c : baseline_candidates(m, kind)) {
          prefix.back() = c;
          const double e = orc::wce_closed_form(prefix, p, m, gr, 1.5);
          rec.expect(chosen <= e + 1e-12 * std::abs(e), [&](auto& s) { s << "m=" << m << " r=" << rr << " c=" << c; });
        }
      }
    }
}

}  // namespace

const std::vector<Check>& registry() {
  using Fn = void (*)(Level, Recorder&);
  static const std::vector<Check> checks = [] {
    const std::vector<std::tuple<const char*, const char*, Fn>> table{
        {"index-bijection", "integer-polynomial association", check_index_bijection},
        {"mul-mod-xw", "truncated product", check_mul_mod_xw},
        {"digitlog-exact", "digit logarithm", check_digitlog},
        {"laurent-multiply-back", "Laurent digits of q/p", check_laurent},
        {"primitive-table", "primitive modulus order", check_primitive},
        {"full-grid-projection", "full-grid projection lemma", check_full_grid},
        {"harmonic-sum-bound", "harmonic-sum lemma (1 + m ln b)", check_harmonic},
        {"character-property", "character property of Walsh functions", check_character},
        {"phi-walsh-series", "closed-form kernel phi_alpha", check_phi_series},
        {"wce-closed-form", "closed-form worst-case error", check_wce_oracle},
        {"truncation-sandwich", "truncation-gap proposition", check_sandwich},
        {"log-series-remainder", "Walsh series of the digit logarithm", check_log_series},
        {"mu-partial-sums", "decay-function sum mu_b", check_mu},
        {"zero-weight-padding", "empty-weight limit", check_padding},
        {"h-fast-vs-direct", "fast evaluation of the quality function", check_h_fast},
        {"reference-equals-fast", "reference and fast construction equivalence", check_cross_equality},
        {"reference-vs-re-search", "digit-by-digit greedy selection", check_greedy_oracle},
        {"state-vector-staging", "running products a(r,t,l)", check_staging},
        {"H-bound", "bound on H for constructed vectors", check_h_bound},
        {"T-bound", "bound on T_eta for constructed vectors", check_t_bound},
        {"baseline-greedy-optimality", "naive CBC exhaustive minimisation", check_baseline},
    };
    std::vector<Check> out;
    for (const auto& [name, tag, fn] : table)
      out.push_back({name, tag, [name = std::string(name), tag = std::string(tag), fn](Level level) {
                       CheckResult r;
                       r.name = name;
                       r.tag = tag;
                       Recorder rec(r);
                       fn(level, rec);
                       if (r.passed) r.detail = std::to_string(r.cases) + " cases";
                       return r;
                     }});
    return out;
  }();
  return checks;
}

CheckResult run_check(const std::string& name, Level level) {
  for (const auto& c : registry()) {
    if (c.name == name) return c.run(level);
  }
  throw std::out_of_range("unknown check '" + name + "'");
}

}  // namespace polylat::checks
