#include "doctest.h"

#include <random>

#include "polylat/cbc_dbd.hpp"
#include "polylat/oracles.hpp"
#include "polylat/walsh_space.hpp"

using namespace polylat;
namespace orc = polylat::oracle;

namespace {

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> dist(0.05, 1.5);
  std::vector<double> out(d);
  for (auto& x : out) x = dist(rng);
  return out;
}

ProductWeights to_weights(const std::vector<double>& v) {
  return ProductWeights(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
}

ProductWeights poly_weights(std::size_t d, double c) {
  Eigen::VectorXd g(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) g[static_cast<Eigen::Index>(j)] = std::pow(double(j + 1), -c);
  return ProductWeights(g);
}

ProductWeights geom_weights(std::size_t d, double q) {
  Eigen::VectorXd g(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) g[static_cast<Eigen::Index>(j)] = std::pow(q, double(j + 1));
  return ProductWeights(g);
}

std::vector<Poly> polys(const std::vector<std::uint64_t>& bits) {
  std::vector<Poly> out;
  for (auto b : bits) out.push_back(Poly::from_bits(b));
  return out;
}

}  // namespace

TEST_CASE("h_direct examples") {
  const ProductWeights eta{1.0, 1.0};
  const std::vector<Poly> prev{Poly::from_bits(1)};
  CHECK(h_direct(2, 2, eta, prev, Poly::from_bits(1)) == doctest::Approx(5.0));
  CHECK(h_direct(2, 2, eta, prev, Poly::from_bits(3)) == doctest::Approx(4.0));
  // r = 1, w = m: one block, empty product, q-factor sum over odd l < 2^m.
  const ProductWeights one{0.5};
  double expect = 0.0;
  for (std::uint64_t l = 1; l < 8; l += 2) expect += 1.0 - 0.5 * gf2::digitlog(l, 3);
  CHECK(h_direct(3, 3, one, {}, Poly::from_bits(1)) == doctest::Approx(expect));
  CHECK_THROWS_AS(h_direct(2, 2, eta, prev, Poly::from_bits(2)), DegenerateInput);
  CHECK_THROWS_AS(h_direct(2, 3, eta, prev, Poly::from_bits(1)), InvalidParameter);
}

TEST_CASE("h_direct agrees with the definition") {
  std::mt19937_64 rng(21);
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= (b == 2 ? 6 : 3); ++m)
      for (int trial = 0; trial < 6; ++trial) {
        const std::size_t r = 1 + rng() % 3;
        const auto eta = random_weights(rng, r);
        std::vector<std::uint64_t> prev;
        std::vector<Poly> prev_p;
        const std::uint64_t bm = checked_pow(b, m);
        for (std::size_t j = 0; j + 1 < r; ++j) {
          std::uint64_t g;
          do g = rng() % bm;
          while (g % b == 0);
          prev.push_back(g);
          prev_p.push_back(poly_from_index(g, b));
        }
        for (int w = 1; w <= m; ++w) {
          std::uint64_t q;
          do q = rng() % bm;
          while (q % b == 0);
          const double lib = h_direct(m, w, to_weights(eta), prev_p, poly_from_index(q, b));
          REQUIRE(lib == doctest::Approx(orc::h_quality(prev, q, m, w, eta, b)).epsilon(1e-13));
        }
      }
}

TEST_CASE("h_fast examples") {
  ConstructionState state(2, ProductWeights{1.0, 1.0});
  state.begin_component();
  CHECK(state.h_fast(2, 1) == doctest::Approx(5.0));
  CHECK(state.h_fast(2, 3) == doctest::Approx(4.0));
  const auto [h0, h1] = state.h_fast_candidates(2);
  CHECK(h0 == state.h_fast(2, 1));
  CHECK(h1 == state.h_fast(2, 3));
}

TEST_CASE("h_fast matches h_direct on random states") {
  std::mt19937_64 rng(31);
  for (int m = 1; m <= 10; ++m)
    for (std::size_t d = 1; d <= 8; d += (m > 7 ? 3 : 1)) {
      const auto eta = random_weights(rng, d);
      ConstructionState state(m, to_weights(eta));
      for (std::size_t r = 2; r <= d; ++r) {
        state.begin_component();
        const auto prev = polys(state.components());
        for (int w = 2; w <= m; ++w) {
          const std::uint64_t q0 = state.partial(), q1 = q0 | (std::uint64_t{1} << (w - 1));
          const double d0 = h_direct(m, w, to_weights(eta), prev, Poly::from_bits(q0));
          const double d1 = h_direct(m, w, to_weights(eta), prev, Poly::from_bits(q1));
          const auto [f0, f1] = state.h_fast_candidates(w);
          REQUIRE(std::abs(f0 - d0) <= 1e-12 * std::abs(d0));
          REQUIRE(std::abs(f1 - d1) <= 1e-12 * std::abs(d1));
          REQUIRE(state.h_fast(w, q0) == f0);
          REQUIRE(state.h_fast(w, q1) == f1);
          state.apply_digit(w, static_cast<unsigned>(rng() & 1));
        }
      }
    }
}

TEST_CASE("initialization seeds every level") {
  for (int m = 1; m <= 12; ++m)
    for (int t = 1; t <= m; ++t)
      for (std::uint64_t l = 1; l < (std::uint64_t{1} << t); l += 2)
        REQUIRE(gf2::digitlog(l << (m - t), m) == gf2::digitlog(l, t));
  for (int m = 1; m <= 8; ++m) {
    const std::vector<double> eta{0.7};
    ConstructionState state(m, to_weights(eta));
    for (int t = 1; t <= m; ++t)
      for (std::uint64_t l = 1; l < (std::uint64_t{1} << t); l += 2)
        REQUIRE(state.value(l << (m - t)) == doctest::Approx(orc::running_product({1}, 1, t, l, eta)));
  }
}

TEST_CASE("staging invariant holds after every digit") {
  std::mt19937_64 rng(41);
  for (int m = 1; m <= 8; ++m) {
    const std::size_t d = 4;
    const auto eta = random_weights(rng, d);
    ConstructionState state(m, to_weights(eta));
    for (std::size_t r = 2; r <= d; ++r) {
      state.begin_component();
      for (int w = 2; w <= m + 1; ++w) {
        // Levels t < w include component r, levels t >= w do not.
        std::vector<std::uint64_t> with = state.components();
        if (!state.component_complete()) with.push_back(state.partial());
        for (int t = 1; t <= m; ++t)
          for (std::uint64_t l = 1; l < (std::uint64_t{1} << t); l += 2) {
            const std::size_t upto = t < w ? r : r - 1;
            REQUIRE(state.value(l << (m - t)) ==
                    doctest::Approx(orc::running_product(with, upto, t, l, eta)).epsilon(1e-13));
          }
        if (w <= m) {
          const double level1 = state.value(std::uint64_t{1} << (m - 1));
          state.apply_digit(w, static_cast<unsigned>(rng() & 1));
          REQUIRE(state.value(std::uint64_t{1} << (m - 1)) == level1);
        }
      }
    }
  }
}

TEST_CASE("staging errors") {
  ConstructionState state(4, ProductWeights{1.0, 0.5});
  CHECK(state.component_complete());
  CHECK_THROWS_AS(state.h_fast(2, 1), InternalState);
  state.begin_component();
  CHECK_THROWS_AS(state.h_fast(3, 1), InternalState);
  CHECK_THROWS_AS(state.apply_digit(3, 0), InternalState);
  CHECK_THROWS_AS(state.begin_component(), InternalState);
  state.apply_digit(2, 1);
  CHECK_THROWS_AS(state.apply_digit(2, 0), InternalState);
  state.apply_digit(3, 0);
  state.apply_digit(4, 1);
  CHECK(state.component_complete());
  CHECK(state.components() == std::vector<std::uint64_t>{1, 0b1011});
  CHECK_THROWS_AS(state.apply_digit(5, 0), InternalState);
  CHECK_THROWS_AS(state.begin_component(), InvalidParameter);
}

TEST_CASE("construct_fast examples") {
  CHECK(construct_fast(2, 2, ProductWeights{1.0, 1.0}).indices() == std::vector<std::uint64_t>{1, 3});
  CHECK(construct_fast(1, 3, ProductWeights{0.3, 0.2, 0.1}).indices() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(construct_fast(5, 1, ProductWeights{0.3}).indices() == std::vector<std::uint64_t>{1});
  CHECK_THROWS_AS(construct_fast(31, 1, ProductWeights{1.0}), ResourceLimit);
  CHECK_THROWS_AS(construct_fast(4, 2, ProductWeights{1.0, 0.0}), InvalidParameter);
  CHECK_THROWS_AS(construct_fast(4, 2, ProductWeights{1.0, -1.0}), InvalidParameter);
  CHECK_THROWS_AS(construct_fast(4, 3, ProductWeights{1.0, 1.0}), InvalidParameter);
  CHECK_THROWS_AS(construct_fast(4, 0, ProductWeights{1.0}), InvalidParameter);
}

TEST_CASE("constructed components are odd with degree below m") {
  const auto g = construct_fast(12, 30, poly_weights(30, 2.0));
  for (auto c : g.indices()) {
    CHECK((c & 1U) == 1U);
    CHECK(c < (1U << 12));
  }
  CHECK(g.indices().front() == 1);
}

TEST_CASE("construct_reference examples") {
  CHECK(construct_reference(2, 2, 2, ProductWeights{1.0, 1.0}).indices() == std::vector<std::uint64_t>{1, 3});
  CHECK(construct_reference(3, 1, 2, ProductWeights{1.0, 1.0}).indices() == std::vector<std::uint64_t>{1, 1});
  CHECK(construct_reference(3, 2, 2, ProductWeights{1.0, 1.0}).indices() ==
        orc::greedy_dbd(2, 2, {1.0, 1.0}, 3));
  CHECK_THROWS_AS(construct_reference(2, 20, 10, ProductWeights::constant(10, 1.0)), ResourceLimit);
  CHECK_THROWS_AS(construct_reference(4, 2, 2, ProductWeights{1.0, 1.0}), InvalidParameter);
}

TEST_CASE("reference construction matches exhaustive digit re-search") {
  std::mt19937_64 rng(51);
  for (unsigned b : {2U, 3U, 5U})
    for (int m = 1; m <= (b == 5 ? 2 : 3); ++m)
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto eta = random_weights(rng, d);
        CHECK(construct_reference(b, m, d, to_weights(eta)).indices() == orc::greedy_dbd(m, d, eta, b));
      }
}

TEST_CASE("reference and fast constructions agree exactly") {
  std::mt19937_64 rng(61);
  for (int m = 1; m <= 8; ++m)
    for (std::size_t d = 1; d <= 5; ++d)
      for (int trial = 0; trial < 3; ++trial) {
        const auto eta = to_weights(random_weights(rng, d));
        const auto fast = construct_fast(m, d, eta);
        REQUIRE(construct_reference(2, m, d, eta) == fast);
        REQUIRE(construct_fast(m, d, eta, FastOptions{false}) == fast);
      }
  // Rational weights where exact ties are possible.
  for (int m = 1; m <= 8; ++m) {
    const auto eta = ProductWeights::constant(5, 1.0);
    REQUIRE(construct_reference(2, m, 5, eta) == construct_fast(m, 5, eta));
  }
}

TEST_CASE("selection is monotone") {
  std::mt19937_64 rng(71);
  for (int m = 2; m <= 10; ++m) {
    const std::size_t d = 6;
    const auto eta = to_weights(random_weights(rng, d));
    ConstructionState state(m, eta);
    for (std::size_t r = 2; r <= d; ++r) {
      state.begin_component();
      for (int w = 2; w <= m; ++w) {
        const auto [h0, h1] = state.h_fast_candidates(w);
        const unsigned pick = h1 < h0 ? 1U : 0U;
        REQUIRE((pick == 1 ? h1 : h0) <= (pick == 1 ? h0 : h1));
        state.apply_digit(w, pick);
      }
    }
    CHECK(state.components() == construct_fast(m, d, eta).indices());
  }
}

TEST_CASE("h_quantity examples") {
  CHECK(h_quantity(GeneratingVector(2, 2, polys({1})), ProductWeights{1.0}) == doctest::Approx(1.0));
  CHECK(h_quantity(GeneratingVector(2, 3, polys({1})), ProductWeights{1.0}) == doctest::Approx(4.0));
  CHECK(h_quantity(GeneratingVector(2, 2, polys({1, 3})), ProductWeights{1.0, 1.0}) == doctest::Approx(2.0));
}

TEST_CASE("h_quantity agrees with its subset expansion") {
  std::mt19937_64 rng(81);
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= (b == 2 ? 6 : 3); ++m)
      for (std::size_t d = 1; d <= 4; ++d) {
        const auto eta = random_weights(rng, d);
        const auto g = construct_reference(b, m, d, to_weights(eta));
        CHECK(h_quantity(g, to_weights(eta)) ==
              doctest::Approx(orc::h_subset_sum(g.indices(), m, eta, b)).epsilon(1e-11));
      }
}

TEST_CASE("H bound on constructed vectors") {
  const std::vector<ProductWeights> families{poly_weights(20, 2.0), poly_weights(20, 1.0), geom_weights(20, 0.95),
                                             geom_weights(20, 0.7), ProductWeights::constant(20, 1.0)};
  for (const auto& eta : families)
    for (int m = 1; m <= 12; ++m)
      for (std::size_t d : {1U, 2U, 5U, 10U, 20U}) {
        const auto g = construct_fast(m, d, eta);
        double prod = 1.0;
        for (std::size_t j = 0; j < d; ++j) prod *= 1.0 + eta[j];
        REQUIRE(h_quantity(g, eta) <= std::ldexp(prod - 1.0, m) * (1 + 1e-12));
      }
}

TEST_CASE("recursion inequality on constructed vectors") {
  const std::vector<ProductWeights> families{poly_weights(10, 2.0), geom_weights(10, 0.9), ProductWeights::constant(10, 1.0)};
  for (const auto& eta : families)
    for (int m = 1; m <= 10; ++m) {
      const auto g = construct_fast(m, 10, eta);
      for (std::size_t d = 2; d <= 10; ++d) {
        const GeneratingVector full(2, m, std::vector<Poly>(g.components.begin(), g.components.begin() + d));
        const GeneratingVector prefix(2, m, std::vector<Poly>(g.components.begin(), g.components.begin() + d - 1));
        const double rhs = (1.0 + eta[d - 1]) * h_quantity(prefix, eta) + eta[d - 1] * (std::ldexp(1.0, m) - 1.0);
        REQUIRE(h_quantity(full, eta) <= rhs + 1e-12 * std::abs(rhs));
      }
    }
}

TEST_CASE("T bound on constructed vectors") {
  const std::vector<ProductWeights> families{poly_weights(3, 2.0), geom_weights(3, 0.8), ProductWeights::constant(3, 1.0)};
  for (const auto& eta : families)
    for (int m = 4; m <= 8; ++m)
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto g = construct_fast(m, d, eta);
        const double T = t_measure(g.rule(), eta, 1.0);
        double p1 = 1.0, p2 = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
          p1 *= 1.0 + eta[j] * (m + 1.0);
          p2 *= 1.0 + eta[j] * (2.0 * m + 4.0);
        }
        REQUIRE(T <= std::ldexp(p1 + 2.0 * m * p2, -m));
      }
}
