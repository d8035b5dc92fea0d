#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "polylat/cbc_baseline.hpp"
#include "polylat/cbc_dbd.hpp"
#include "polylat/cli/weight_spec.hpp"

namespace polylat::cli {

/// Rows of named columns, written as CSV or as a JSON array of records.
struct Table {
  using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Doubles print with 17 significant digits.
std::string format_double(double x);
void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

struct StudyParams {
  std::vector<int> ms;
  std::size_t d = 100;
  std::vector<double> alphas{1.5};
  WeightSpec weights;
  /// Evaluate with gamma_j^alpha instead of gamma_j.
  bool eval_weight_power = false;
  ModulusKind modulus = ModulusKind::power;
  unsigned threads = 1;
};

/// Weights used to evaluate (or, for the baseline, to construct) at alpha.
ProductWeights evaluation_weights(const StudyParams& p, std::size_t d, double alpha);

/// Rows m,N,alpha,error. One CBC-DBD vector per m with eta = gamma.
Table run_convergence_study(const StudyParams& p);

/// Rows m,N,alpha,dbd_error,cbc_error; the naive CBC runs once per (m, alpha).
Table run_comparison(const StudyParams& p);

/// Rows m,N,alpha,error for a given vector (b = 2).
Table evaluate_vector(const GeneratingVector& g, const StudyParams& p);

/// Rows m,d,seconds: best of `repeats` timings of construct_fast.
Table run_benchmark(const std::vector<int>& ms, const std::vector<std::size_t>& ds, const WeightSpec& weights,
                    int repeats = 3);

}  // namespace polylat::cli
