#include "polylat/cli/studies.hpp"

#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

#include "json.hpp"
#include "polylat/walsh_space.hpp"

namespace polylat::cli {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>)
              out << format_double(v);
            else
              out << v;
          },
          row[c]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) std::visit([&](const auto& v) { rec[table.columns[c]] = v; }, row[c]);
    records.push_back(std::move(rec));
  }
  out << records.dump(2) << '\n';
}

ProductWeights evaluation_weights(const StudyParams& p, std::size_t d, double alpha) {
  const auto gamma = p.weights.weights(d);
  return p.eval_weight_power ? gamma.pow(alpha) : gamma;
}

Table run_convergence_study(const StudyParams& p) {
  Table t{{"m", "N", "alpha", "error"}, {}};
  for (int m : p.ms) {
    const auto g = construct_fast(m, p.d, p.weights.weights(p.d));
    const auto rule = g.rule();
    for (double alpha : p.alphas)
      t.rows.push_back({std::int64_t{m}, rule.n_points(), alpha, wce_product(rule, alpha, evaluation_weights(p, p.d, alpha))});
  }
  return t;
}

Table run_comparison(const StudyParams& p) {
  Table t{{"m", "N", "alpha", "dbd_error", "cbc_error"}, {}};
  for (int m : p.ms) {
    const auto dbd = construct_fast(m, p.d, p.weights.weights(p.d)).rule();
    for (double alpha : p.alphas) {
      const auto w = evaluation_weights(p, p.d, alpha);
      const auto cbc = construct_cbc_naive(m, p.d, alpha, w, p.modulus, p.threads);
      t.rows.push_back({std::int64_t{m}, dbd.n_points(), alpha, wce_product(dbd, alpha, w),
                        wce_product(cbc.rule(), alpha, w)});
    }
  }
  return t;
}

Table evaluate_vector(const GeneratingVector& g, const StudyParams& p) {
  Table t{{"m", "N", "alpha", "error"}, {}};
  const auto rule = g.rule();
  for (double alpha : p.alphas)
    t.rows.push_back({std::int64_t{g.m}, rule.n_points(), alpha, wce_product(rule, alpha, evaluation_weights(p, g.dim(), alpha))});
  return t;
}

Table run_benchmark(const std::vector<int>& ms, const std::vector<std::size_t>& ds, const WeightSpec& weights,
                    int repeats) {
  Table t{{"m", "d", "seconds"}, {}};
  for (int m : ms)
    for (std::size_t d : ds) {
      const auto eta = weights.weights(d);
      double best = std::numeric_limits<double>::infinity();
      for (int rep = 0; rep < repeats; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const auto g = construct_fast(m, d, eta);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        if (g.dim() != d) throw InternalState("construction returned the wrong dimension");
        best = std::min(best, elapsed.count());
      }
      t.rows.push_back({std::int64_t{m}, std::uint64_t{d}, best});
    }
  return t;
}

}  // namespace polylat::cli
