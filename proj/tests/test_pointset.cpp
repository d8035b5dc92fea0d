#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "polylat/oracles.hpp"
#include "polylat/pointset.hpp"

using namespace polylat;
namespace orc = polylat::oracle;

namespace {

// Random component of degree < m with nonzero constant coefficient.
Poly random_unit(std::mt19937_64& rng, unsigned b, int m) {
  const std::uint64_t bm = checked_pow(b, m);
  std::uint64_t g;
  do g = rng() % bm;
  while (g % b == 0);
  return poly_from_index(g, b);
}

}  // namespace

TEST_CASE("coordinate examples") {
  const auto r1 = PolyLatticeRule::binary(2, 4, {1});
  CHECK(coordinate(r1, 1, 0) == 1);
  CHECK(coordinate(r1, 3, 0) == 3);
  const auto r2 = PolyLatticeRule::binary(2, 4, {1, 3});
  CHECK(coordinate(r2, 1, 1) == 3);
  CHECK_THROWS_AS(coordinate(r2, 4, 0), InvalidParameter);
  CHECK_THROWS_AS(coordinate(r2, 0, 2), InvalidParameter);
}

TEST_CASE("generate_points examples") {
  const auto pts = generate_points(PolyLatticeRule::binary(2, 4, {1}));
  REQUIRE(pts.n_points() == 4);
  for (std::uint64_t n = 0; n < 4; ++n) CHECK(pts(n, 0) == n);
  const auto pts2 = generate_points(PolyLatticeRule::binary(1, 2, {1, 1}));
  CHECK(pts2(0, 0) == 0);
  CHECK(pts2(0, 1) == 0);
  CHECK(pts2(1, 0) == 1);
  CHECK(pts2(1, 1) == 1);
  CHECK_THROWS_AS(PolyLatticeRule::binary(3, 7, {1}), InvalidParameter);
  CHECK_THROWS_AS(generate_points(PolyLatticeRule::binary(2, 4, {})), InvalidParameter);
  CHECK_THROWS_AS(PolyLatticeRule::binary(2, 4, {4}), InvalidParameter);
}

TEST_CASE("coordinates agree with the definition") {
  std::mt19937_64 rng(3);
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= 5; ++m) {
      const std::uint64_t bm = checked_pow(b, m);
      for (int trial = 0; trial < 6; ++trial) {
        // Random modulus of degree m (not necessarily coprime to g).
        const Poly p = poly_from_index(bm + rng() % (bm * (b - 1)), b);
        const Poly g = poly_from_index(rng() % bm, b);
        const PolyLatticeRule rule(b, m, p, {g});
        for (std::uint64_t n = 0; n < bm; ++n)
          REQUIRE(coordinate(rule, n, 0) ==
                  orc::coordinate(n, index_from_poly(g), index_from_poly(p), m, b));
      }
    }
}

TEST_CASE("one-dimensional projections are the full grid") {
  std::mt19937_64 rng(5);
  for (unsigned b : {2U, 3U})
    for (int m = 1; m <= 6; ++m) {
      const std::uint64_t bm = checked_pow(b, m);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Poly> gen;
        for (int j = 0; j < 3; ++j) gen.push_back(random_unit(rng, b, m));
        std::vector<PolyLatticeRule> rules{PolyLatticeRule::with_power_modulus(b, m, gen)};
        if (b == 2) rules.emplace_back(2, m, primitive_poly_f2(m), gen);
        for (const auto& rule : rules) {
          REQUIRE(rule.coprime_components());
          const auto pts = generate_points(rule);
          for (std::size_t j = 0; j < rule.dim(); ++j) {
            std::vector<std::uint64_t> col(bm);
            for (std::uint64_t n = 0; n < bm; ++n) col[n] = pts(n, j);
            std::sort(col.begin(), col.end());
            for (std::uint64_t n = 0; n < bm; ++n) REQUIRE(col[n] == n);
            REQUIRE(pts(0, j) == 0);
          }
        }
      }
    }
}

TEST_CASE("harmonic-sum bound") {
  std::mt19937_64 rng(9);
  for (int m = 4; m <= 10; ++m) {
    const auto rule = PolyLatticeRule::with_power_modulus(2, m, {random_unit(rng, 2, m), Poly::from_bits(1)});
    const auto pts = generate_points(rule);
    for (std::size_t j = 0; j < rule.dim(); ++j) {
      double s = 0.0;
      for (std::uint64_t n = 1; n < rule.n_points(); ++n) s += 1.0 / static_cast<double>(pts(n, j));
      const double lhs = s;  // (1/b^m) sum b^m / u
      CHECK(lhs < 1.0 + m * std::log(2.0));
      CHECK(1.0 + m * std::log(2.0) <= m * 1.0);
    }
  }
}

TEST_CASE("parallel generation is identical") {
  std::mt19937_64 rng(13);
  std::vector<Poly> gen;
  for (int j = 0; j < 5; ++j) gen.push_back(random_unit(rng, 2, 12));
  const auto rule = PolyLatticeRule::with_power_modulus(2, 12, gen);
  CHECK(generate_points(rule, 1) == generate_points(rule, 4));
  const auto rule3 = PolyLatticeRule::with_power_modulus(3, 5, {Poly(3, {1}), Poly(3, {2, 1, 2})});
  CHECK(generate_points(rule3, 1) == generate_points(rule3, 3));
}

TEST_CASE("point stream matches the matrix") {
  const auto rule = PolyLatticeRule::binary(6, 67, {1, 0b101101, 0b11});
  const auto pts = generate_points(rule);
  PointStream stream(rule);
  std::uint64_t rows = 0;
  for (; !stream.done(); stream.advance(), ++rows)
    for (std::size_t j = 0; j < rule.dim(); ++j) REQUIRE(stream.row()[j] == pts(stream.index(), j));
  CHECK(rows == 64);
}

TEST_CASE("csv export") {
  const auto rule = PolyLatticeRule::binary(2, 4, {1, 3});
  std::ostringstream rational, decimal;
  write_points_csv(rational, rule, CoordinateFormat::rational);
  write_points_csv(decimal, rule, CoordinateFormat::decimal);
  CHECK(rational.str() == "n,x1,x2\n0,0/4,0/4\n1,1/4,3/4\n2,2/4,2/4\n3,3/4,1/4\n");
  CHECK(decimal.str() == "n,x1,x2\n0,0,0\n1,0.25,0.75\n2,0.5,0.5\n3,0.75,0.25\n");
}
