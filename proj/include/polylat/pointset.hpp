#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "polylat/field_poly.hpp"

namespace polylat {

/// A polynomial lattice rule: b^m points x_n with coordinates
/// v_m(n(x) g_j(x) / p(x)). Invariants: deg p = m and deg g_j < m.
class PolyLatticeRule {
 public:
  PolyLatticeRule(unsigned b, int m, Poly modulus, std::vector<Poly> gen);

  /// Rule with modulus x^m.
  static PolyLatticeRule with_power_modulus(unsigned b, int m, std::vector<Poly> gen);
  /// b = 2 shorthand; components and modulus given as bitmasks.
  static PolyLatticeRule binary(int m, std::uint64_t modulus, const std::vector<std::uint64_t>& gen);

  unsigned base() const noexcept { return b_; }
  int precision() const noexcept { return m_; }
  std::size_t dim() const noexcept { return gen_.size(); }
  std::uint64_t n_points() const noexcept { return n_points_; }
  const Poly& modulus() const noexcept { return modulus_; }
  const std::vector<Poly>& generators() const noexcept { return gen_; }
  bool power_modulus() const noexcept { return power_modulus_; }

  /// True when every component is coprime to the modulus.
  bool coprime_components() const;

 private:
  unsigned b_;
  int m_;
  Poly modulus_;
  std::vector<Poly> gen_;
  std::uint64_t n_points_;
  bool power_modulus_;
};

using NumeratorMatrix =
    Eigen::Matrix<std::uint64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// All points of a rule as integer numerators over b^m, one row per point
/// index n in ascending order.
class PointMatrix {
 public:
  PointMatrix(unsigned b, int m, NumeratorMatrix numerators);

  std::uint64_t n_points() const noexcept { return static_cast<std::uint64_t>(data_.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.cols()); }
  std::uint64_t denominator() const noexcept { return denominator_; }

  std::uint64_t operator()(std::uint64_t n, std::size_t j) const {
    return data_(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(j));
  }
  /// Coordinate as a real in [0, 1).
  double value(std::uint64_t n, std::size_t j) const {
    return static_cast<double>((*this)(n, j)) / static_cast<double>(denominator_);
  }

  const NumeratorMatrix& numerators() const noexcept { return data_; }
  Eigen::Matrix<std::uint64_t, Eigen::Dynamic, 1> column(std::size_t j) const {
    return data_.col(static_cast<Eigen::Index>(j));
  }

  friend bool operator==(const PointMatrix& a, const PointMatrix& c) {
    return a.denominator_ == c.denominator_ && a.data_.rows() == c.data_.rows() &&
           a.data_.cols() == c.data_.cols() && a.data_ == c.data_;
  }

 private:
  unsigned b_;
  int m_;
  std::uint64_t denominator_;
  NumeratorMatrix data_;
};

/// Evaluates coordinates of one rule; precomputes what the fast b = 2 path
/// needs so repeated calls are cheap.
class CoordinateMap {
 public:
  explicit CoordinateMap(const PolyLatticeRule& rule);

  /// Numerator of coordinate j (0-based) of point n.
  std::uint64_t operator()(std::uint64_t n, std::size_t j) const;

 private:
  const PolyLatticeRule* rule_;
  std::vector<std::uint64_t> gen_bits_;
  std::uint64_t modulus_bits_ = 0;
  bool binary_ = false;
};

/// Numerator of coordinate j (0-based) of point n; throws InvalidParameter if
/// either index is out of range.
std::uint64_t coordinate(const PolyLatticeRule& rule, std::uint64_t n, std::size_t j);

/// Materializes the full point set. Rows are independent; with threads > 1
/// they are filled in parallel and the result is identical.
PointMatrix generate_points(const PolyLatticeRule& rule, unsigned threads = 1);

/// Row-at-a-time traversal in ascending n, holding one row in memory.
class PointStream {
 public:
  explicit PointStream(const PolyLatticeRule& rule);

  bool done() const noexcept { return n_ >= rule_->n_points(); }
  std::uint64_t index() const noexcept { return n_; }
  const std::vector<std::uint64_t>& row() const noexcept { return row_; }
  void advance();

 private:
  void fill();

  const PolyLatticeRule* rule_;
  CoordinateMap map_;
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> row_;
};

enum class CoordinateFormat { rational, decimal };

/// CSV with header n,x1,...,xd; coordinates as u/b^m or as decimals with 17
/// significant digits.
void write_points_csv(std::ostream& out, const PolyLatticeRule& rule, CoordinateFormat format);

}  // namespace polylat
