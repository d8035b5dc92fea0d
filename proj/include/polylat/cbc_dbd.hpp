#pragma once

// Component-by-component digit-by-digit construction of generating vectors
// for polynomial lattice rules with modulus x^m.
//
// Both constructions minimise the alpha-independent digit-wise quality
// function h_{r,w,m,eta}. The reference version evaluates h by its literal
// double sum and works for any prime b; the fast version (b = 2) keeps the
// running products a(r,t,l) in a state vector of length 2^m - 1 so that a
// full construction costs O(d m 2^m).

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

#include "polylat/field_poly.hpp"
#include "polylat/pointset.hpp"
#include "polylat/weights.hpp"

namespace polylat {

/// Output of a construction: d polynomials of degree < m together with the
/// modulus they are meant for (x^m unless stated otherwise).
struct GeneratingVector {
  unsigned b = 2;
  int m = 1;
  std::vector<Poly> components;
  Poly modulus;

  GeneratingVector() = default;
  GeneratingVector(unsigned base, int precision, std::vector<Poly> comps);
  GeneratingVector(unsigned base, int precision, std::vector<Poly> comps, Poly mod);

  std::size_t dim() const noexcept { return components.size(); }
  std::vector<std::uint64_t> indices() const;
  bool power_modulus() const;
  PolyLatticeRule rule() const;

  friend bool operator==(const GeneratingVector&, const GeneratingVector&) = default;
};

/// h_{r,w,m,eta}(q) by its defining double sum. r is previous.size() + 1 and
/// eta[r - 1] is the weight of the component being searched. Every
/// polynomial involved must have a nonzero constant coefficient.
double h_direct(int m, int w, const ProductWeights& eta, std::span<const Poly> previous,
                const Poly& q);

/// H_{d,m,eta}(g) = sum_{n=1}^{b^m-1} prod_j (1 + eta_j (1-b) digitlog(n g_j, m)) - (b^m - 1).
double h_quantity(const GeneratingVector& g, const ProductWeights& eta);

struct FastOptions {
  /// Tabulate digitlog for all numerators below 2^m. Speed only.
  bool precompute_digitlog = true;
};

/// State of the fast construction (b = 2).
///
/// v(l 2^{m-t}) for odd l < 2^t holds a(r', t, l), the running product over
/// components 1..r' of (1 - eta_j digitlog(l g_j mod x^t, t)). While digit w
/// of component r is being chosen, levels t < w already include component r
/// and levels t >= w do not yet.
class ConstructionState {
 public:
  ConstructionState(int m, ProductWeights eta, FastOptions options = {});

  int precision() const noexcept { return m_; }
  /// 1-based index of the component currently being built (or last built).
  std::size_t component() const noexcept { return r_; }
  /// Digit whose value is chosen next; m + 1 once the component is complete.
  int next_digit() const noexcept { return next_w_; }
  bool component_complete() const noexcept { return next_w_ > m_; }

  /// Entry v(index) for 1 <= index < 2^m.
  double value(std::uint64_t index) const { return v_[static_cast<Eigen::Index>(index)]; }
  /// Prefix g_{r,w-1} of the component under construction, as a bitmask.
  std::uint64_t partial() const noexcept { return partial_; }
  const std::vector<std::uint64_t>& components() const noexcept { return done_; }

  /// Starts component r + 1 with g_{r+1,1} = 1.
  void begin_component();

  /// h_{r,w,m,eta}(q) from the cached products; w must equal next_digit().
  double h_fast(int w, std::uint64_t q) const;
  /// h_fast for both candidates g_{r,w-1} and g_{r,w-1} + x^{w-1}, each with
  /// the same arithmetic as a separate h_fast call.
  std::pair<double, double> h_fast_candidates(int w) const;

  /// Fixes digit w of component r to g_star and folds the new level-w factors
  /// into the state.
  void apply_digit(int w, unsigned g_star);

 private:
  int digitlog_at(std::uint64_t q, int w) const noexcept {
    return use_table_ ? digitlog_table_[q << (m_ - w)] : gf2::digitlog(q, w);
  }
  void fill_factors(int w, std::uint64_t q, std::vector<double>& f) const;
  void require_stage(int w) const;

  int m_;
  ProductWeights eta_;
  bool use_table_;
  std::vector<std::int8_t> digitlog_table_;
  Eigen::VectorXd v_;
  std::size_t r_ = 1;
  int next_w_;
  std::uint64_t partial_ = 1;
  std::vector<std::uint64_t> done_;
  mutable std::vector<double> scratch0_, scratch1_;
};

/// Fast CBC-DBD for b = 2 (1 <= m <= 30). Ties go to digit 0.
GeneratingVector construct_fast(int m, std::size_t d, const ProductWeights& eta,
                                FastOptions options = {});

/// Reference CBC-DBD for any prime b; guarded by b^m m d <= 2^26. Ties go to
/// the smallest field element. For b = 2 it returns exactly construct_fast's
/// vector.
GeneratingVector construct_reference(unsigned b, int m, std::size_t d, const ProductWeights& eta);

}  // namespace polylat
