#include "polylat/pointset.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <thread>

namespace polylat {

namespace {

constexpr std::uint64_t kMaxMaterializedEntries = std::uint64_t{1} << 26;

bool is_power_of_x(const Poly& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p.coeff(i) != 0) return false;
  return p.degree() >= 0 && p.coeff(p.degree()) == 1;
}

}  // namespace

PolyLatticeRule::PolyLatticeRule(unsigned b, int m, Poly modulus, std::vector<Poly> gen)
    : b_(b), m_(m), modulus_(std::move(modulus)), gen_(std::move(gen)) {
  if (!is_prime(b)) throw InvalidParameter("base " + std::to_string(b) + " is not prime");
  if (m < 1) throw InvalidParameter("precision m must be positive");
  if (b == 2 && m > kMaxBinaryPrecision)
    throw ResourceLimit("m = " + std::to_string(m) + " exceeds the supported maximum " +
                        std::to_string(kMaxBinaryPrecision));
  if (modulus_.base() != b) throw InvalidParameter("modulus base differs from rule base");
  if (modulus_.degree() != m)
    throw InvalidParameter("modulus has degree " + std::to_string(modulus_.degree()) +
                           ", expected " + std::to_string(m));
  for (std::size_t j = 0; j < gen_.size(); ++j) {
    if (gen_[j].base() != b) throw InvalidParameter("generator base differs from rule base");
    if (gen_[j].degree() >= m)
      throw InvalidParameter("component " + std::to_string(j + 1) + " has degree >= m");
  }
  n_points_ = checked_pow(b, m);
  power_modulus_ = is_power_of_x(modulus_);
}

PolyLatticeRule PolyLatticeRule::with_power_modulus(unsigned b, int m, std::vector<Poly> gen) {
  if (m < 1) throw InvalidParameter("precision m must be positive");
  return PolyLatticeRule(b, m, Poly(b).with_coeff(m, 1), std::move(gen));
}

PolyLatticeRule PolyLatticeRule::binary(int m, std::uint64_t modulus,
                                        const std::vector<std::uint64_t>& gen) {
  std::vector<Poly> g;
  g.reserve(gen.size());
  for (auto bits : gen) g.push_back(Poly::from_bits(bits));
  return PolyLatticeRule(2, m, Poly::from_bits(modulus), std::move(g));
}

bool PolyLatticeRule::coprime_components() const {
  for (const auto& g : gen_) {
    if (g.is_zero()) return false;
    if (power_modulus_) {
      if (g.coeff(0) == 0) return false;
      continue;
    }
    // Euclid over F_b.
    Poly a = modulus_, c = g;
    while (!c.is_zero()) {
      Poly r = poly_mod(a, c);
      a = std::move(c);
      c = std::move(r);
    }
    if (a.degree() != 0) return false;
  }
  return true;
}

PointMatrix::PointMatrix(unsigned b, int m, NumeratorMatrix numerators)
    : b_(b), m_(m), denominator_(checked_pow(b, m)), data_(std::move(numerators)) {}

CoordinateMap::CoordinateMap(const PolyLatticeRule& rule) : rule_(&rule) {
  binary_ = rule.base() == 2;
  if (binary_) {
    modulus_bits_ = rule.modulus().bits();
    for (const auto& g : rule.generators()) gen_bits_.push_back(g.bits());
  }
}

std::uint64_t CoordinateMap::operator()(std::uint64_t n, std::size_t j) const {
  const int m = rule_->precision();
  if (binary_) {
    if (rule_->power_modulus()) return gf2::mul_mod_xw(n, gen_bits_[j], m);
    return gf2::laurent_numerator(gf2::mulmod(n, gen_bits_[j], modulus_bits_), modulus_bits_, m);
  }
  const Poly prod = poly_mul(poly_from_index(n, rule_->base()), rule_->generators()[j]);
  return laurent_numerator(poly_mod(prod, rule_->modulus()), rule_->modulus(), m);
}

std::uint64_t coordinate(const PolyLatticeRule& rule, std::uint64_t n, std::size_t j) {
  if (n >= rule.n_points()) throw InvalidParameter("point index out of range");
  if (j >= rule.dim()) throw InvalidParameter("coordinate index out of range");
  return CoordinateMap(rule)(n, j);
}

PointMatrix generate_points(const PolyLatticeRule& rule, unsigned threads) {
  if (rule.dim() == 0) throw InvalidParameter("rule has no components");
  const std::uint64_t rows = rule.n_points();
  if (rows > kMaxMaterializedEntries / rule.dim())
    throw ResourceLimit("point matrix too large to materialize; use PointStream");
  NumeratorMatrix data(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rule.dim()));
  const CoordinateMap map(rule);
  auto fill_rows = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n < hi; ++n)
      for (std::size_t j = 0; j < rule.dim(); ++j)
        data(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j)) = map(n, j);
  };
  threads = std::max(1U, threads);
  if (threads == 1 || rows < 2 * threads) {
    fill_rows(0, rows);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (rows + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk, hi = std::min(rows, lo + chunk);
      if (lo < hi) pool.emplace_back(fill_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return PointMatrix(rule.base(), rule.precision(), std::move(data));
}

PointStream::PointStream(const PolyLatticeRule& rule)
    : rule_(&rule), map_(rule), row_(rule.dim(), 0) {
  if (rule.dim() == 0) throw InvalidParameter("rule has no components");
  fill();
}

void PointStream::advance() {
  ++n_;
  if (!done()) fill();
}

void PointStream::fill() {
  for (std::size_t j = 0; j < row_.size(); ++j) row_[j] = map_(n_, j);
}

void write_points_csv(std::ostream& out, const PolyLatticeRule& rule, CoordinateFormat format) {
  out << 'n';
  for (std::size_t j = 1; j <= rule.dim(); ++j) out << ",x" << j;
  out << '\n';
  const std::uint64_t denom = rule.n_points();
  const auto old_precision = out.precision(17);
  for (PointStream s(rule); !s.done(); s.advance()) {
    out << s.index();
    for (auto u : s.row()) {
      out << ',';
      if (format == CoordinateFormat::rational)
        out << u << '/' << denom;
      else
        out << static_cast<double>(u) / static_cast<double>(denom);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace polylat
