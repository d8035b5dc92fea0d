#include "polylat/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polylat/checks.hpp"
#include "polylat/cli/studies.hpp"
#include "polylat/cli/weight_spec.hpp"
#include "polylat/vector_file.hpp"
#include "polylat/walsh_space.hpp"

namespace polylat::cli {

namespace {

struct Options {
  unsigned b = 2;
  std::vector<int> m;
  std::string m_range;
  std::vector<std::size_t> d;
  std::vector<double> alpha;
  std::string weights = "poly:2";
  bool eval_weight_power = false;
  std::string modulus = "power";
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
  std::string seed;
  std::string vector_path;
  std::string method = "dbd";
  std::string level = "quick";
  std::vector<std::string> only;
  std::string coords = "rational";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--b", o.b, "Prime base (default 2)");
  cmd->add_option("--weights", o.weights, "Weights: poly:<c> | geom:<q> | list:<a,b,...>");
  cmd->add_option("--out", o.out, "Write output to this path instead of stdout");
  cmd->add_option("--threads", o.threads, "Threads for the parallel modes")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Reserved; every computation is deterministic");
}

void add_table_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_ms(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "Precision m (repeatable)");
  cmd->add_option("--m-range", o.m_range, "Precisions lo:hi inclusive");
}

std::vector<int> collect_ms(const Options& o) {
  std::vector<int> ms = o.m;
  if (!o.m_range.empty()) {
    const auto colon = o.m_range.find(':');
    int lo = 0, hi = 0;
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no colon");
      std::size_t used = 0;
      lo = std::stoi(o.m_range.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument("trailing");
      hi = std::stoi(o.m_range.substr(colon + 1), &used);
      if (used != o.m_range.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("--m-range expects lo:hi, got '" + o.m_range + "'");
    }
    if (lo < 1 || hi < lo) throw UsageError("--m-range needs 1 <= lo <= hi");
    for (int m = lo; m <= hi; ++m) ms.push_back(m);
  }
  if (ms.empty()) throw UsageError("give --m or --m-range");
  return ms;
}

int single_m(const Options& o) {
  const auto ms = collect_ms(o);
  if (ms.size() != 1) throw UsageError("this subcommand takes a single --m");
  return ms.front();
}

std::size_t single_d(const Options& o, std::size_t fallback) {
  if (o.d.empty()) return fallback;
  if (o.d.size() != 1) throw UsageError("this subcommand takes a single --d");
  return o.d.front();
}

ModulusKind modulus_kind(const Options& o) {
  return o.modulus == "primitive" ? ModulusKind::primitive : ModulusKind::power;
}

StudyParams study_params(const Options& o, std::size_t d) {
  StudyParams p;
  p.d = d;
  if (!o.alpha.empty()) p.alphas = o.alpha;
  for (double a : p.alphas)
    if (!(a > 1.0)) throw UsageError("--alpha must exceed 1");
  p.weights = parse_weight_spec(o.weights);
  p.eval_weight_power = o.eval_weight_power;
  p.modulus = modulus_kind(o);
  p.threads = o.threads;
  return p;
}

VectorFile load_vector(const std::string& path) {
  if (path.empty()) throw UsageError("--vector is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_vector_file(in);
}

// Writes to --out when given, otherwise to out.
template <typename Emit>
void emit(const Options& o, std::ostream& out, Emit&& fn) {
  if (o.out.empty()) {
    fn(out);
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw UsageError("cannot write '" + o.out + "'");
  fn(file);
}

void emit_table(const Options& o, std::ostream& out, const Table& t) {
  emit(o, out, [&](std::ostream& s) { o.format == "json" ? write_json(s, t) : write_csv(s, t); });
}

void require_base2(const Options& o, const char* what) {
  if (o.b != 2) throw UnsupportedBase(std::string(what) + " is available for b = 2 only");
}

int cmd_construct(const Options& o, std::ostream& out) {
  const int m = single_m(o);
  const std::size_t d = single_d(o, 0);
  if (d == 0) throw UsageError("--d is required");
  const auto spec = parse_weight_spec(o.weights);
  GeneratingVector g;
  std::vector<std::string> comments{"weights=" + spec.text};
  if (o.method == "dbd") {
    if (o.modulus != "power") throw UsageError("the digit-by-digit construction uses modulus x^m");
    g = o.b == 2 ? construct_fast(m, d, spec.weights(d)) : construct_reference(o.b, m, d, spec.weights(d));
    comments.push_back("method=cbc-dbd");
  } else {
    require_base2(o, "the naive CBC baseline");
    if (o.alpha.size() != 1) throw UsageError("--method cbc needs exactly one --alpha");
    const auto p = study_params(o, d);
    const double alpha = p.alphas.front();
    g = construct_cbc_naive(m, d, alpha, evaluation_weights(p, d, alpha), p.modulus, o.threads);
    comments.push_back("method=cbc alpha=" + format_double(alpha) +
                       (o.eval_weight_power ? " weights-raised-to-alpha" : ""));
  }
  emit(o, out, [&](std::ostream& s) { write_vector_file(s, g, comments); });
  return kSuccess;
}

int cmd_error(const Options& o, std::ostream& out) {
  const auto file = load_vector(o.vector_path);
  if (file.vector.b != 2) throw UnsupportedBase("closed-form worst-case error needs base 2");
  emit_table(o, out, evaluate_vector(file.vector, study_params(o, file.vector.dim())));
  return kSuccess;
}

int cmd_convergence(const Options& o, std::ostream& out) {
  require_base2(o, "the convergence study");
  auto p = study_params(o, single_d(o, 100));
  p.ms = collect_ms(o);
  emit_table(o, out, run_convergence_study(p));
  return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
  require_base2(o, "the comparison");
  auto p = study_params(o, single_d(o, 100));
  p.ms = collect_ms(o);
  emit_table(o, out, run_comparison(p));
  return kSuccess;
}

int cmd_bench(const Options& o, std::ostream& out) {
  require_base2(o, "the benchmark");
  const auto ms = collect_ms(o);
  const std::vector<std::size_t> ds = o.d.empty() ? std::vector<std::size_t>{50} : o.d;
  emit_table(o, out, run_benchmark(ms, ds, parse_weight_spec(o.weights)));
  return kSuccess;
}

int cmd_points(const Options& o, std::ostream& out) {
  if (o.format != "csv") throw UsageError("points are exported as CSV only");
  const auto file = load_vector(o.vector_path);
  const auto format = o.coords == "decimal" ? CoordinateFormat::decimal : CoordinateFormat::rational;
  emit(o, out, [&](std::ostream& s) { write_points_csv(s, file.vector.rule(), format); });
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  const auto level = o.level == "full" ? checks::Level::full : checks::Level::quick;
  bool all = true;
  std::size_t ran = 0;
  for (const auto& c : checks::registry()) {
    if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), c.name) == o.only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    const auto r = c.run(level);
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    char took[32];
    std::snprintf(took, sizeof took, "%.3f", secs.count());
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.tag << "] " << r.detail << " (" << took << " s)\n";
    out.flush();
    all = all && r.passed;
    ++ran;
  }
  if (ran == 0) throw UsageError("no check matches --only");
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? kSuccess : kCheckFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Polynomial lattice rules by component-by-component digit-by-digit construction", "polylat"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Construct a generating vector and write a vector file");
  add_common(construct, o);
  add_ms(construct, o);
  construct->add_option("--d", o.d, "Dimension");
  construct->add_option("--method", o.method, "dbd (digit-by-digit) or cbc (naive baseline)")
      ->check(CLI::IsMember({"dbd", "cbc"}));
  construct->add_option("--alpha", o.alpha, "Smoothness for --method cbc");
  construct->add_flag("--eval-weight-power", o.eval_weight_power, "Baseline minimises with gamma_j^alpha");
  construct->add_option("--modulus", o.modulus, "power or primitive")->check(CLI::IsMember({"power", "primitive"}));

  auto* error = app.add_subcommand("error", "Worst-case error of a vector file");
  add_common(error, o);
  add_table_format(error, o);
  error->add_option("--vector", o.vector_path, "Vector file")->required();
  error->add_option("--alpha", o.alpha, "Smoothness (repeatable)");
  error->add_flag("--eval-weight-power", o.eval_weight_power, "Evaluate with gamma_j^alpha");

  auto* convergence = app.add_subcommand("convergence", "Error of CBC-DBD vectors over a range of m");
  add_common(convergence, o);
  add_table_format(convergence, o);
  add_ms(convergence, o);
  convergence->add_option("--d", o.d, "Dimension (default 100)");
  convergence->add_option("--alpha", o.alpha, "Smoothness (repeatable)");
  convergence->add_flag("--eval-weight-power", o.eval_weight_power, "Evaluate with gamma_j^alpha");

  auto* compare = app.add_subcommand("compare", "CBC-DBD against the naive CBC baseline");
  add_common(compare, o);
  add_table_format(compare, o);
  add_ms(compare, o);
  compare->add_option("--d", o.d, "Dimension (default 100)");
  compare->add_option("--alpha", o.alpha, "Smoothness (repeatable)");
  compare->add_flag("--eval-weight-power", o.eval_weight_power, "Use gamma_j^alpha for the error and the baseline");
  compare->add_option("--modulus", o.modulus, "Baseline modulus: power or primitive")
      ->check(CLI::IsMember({"power", "primitive"}));

  auto* bench = app.add_subcommand("bench", "Time construct_fast, best of three runs");
  add_common(bench, o);
  add_table_format(bench, o);
  add_ms(bench, o);
  bench->add_option("--d", o.d, "Dimension (repeatable, default 50)");

  auto* points = app.add_subcommand("points", "Export the point set of a vector file as CSV");
  add_common(points, o);
  add_table_format(points, o);
  points->add_option("--vector", o.vector_path, "Vector file")->required();
  points->add_option("--coords", o.coords, "rational or decimal")->check(CLI::IsMember({"rational", "decimal"}));

  auto* check = app.add_subcommand("check", "Run the oracle self-checks");
  add_common(check, o);
  check->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  check->add_option("--only", o.only, "Run only the named checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (!o.seed.empty()) throw UsageError("--seed is not supported: every computation is deterministic");
    if (construct->parsed()) return cmd_construct(o, out);
    if (error->parsed()) return cmd_error(o, out);
    if (convergence->parsed()) return cmd_convergence(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (points->parsed()) return cmd_points(o, out);
    if (check->parsed()) return cmd_check(o, out);
  } catch (const ResourceLimit& e) {
    err << "refused: " << e.what() << "\n";
    return kResourceRefusal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DegenerateInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace polylat::cli
