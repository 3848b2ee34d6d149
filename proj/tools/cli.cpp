#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jacobi/chebyshev.hpp"
#include "jacobi/cli.hpp"
#include "jacobi/oracle.hpp"
#include "jacobi/random_instances.hpp"
#include "report.hpp"

namespace jacobi::cli {

namespace {

constexpr int kMaxDirectOrder = 40;

struct Options {
  std::string input;
  std::string rhs;
  std::string output;
  std::string format = "json";
  std::string action = "invert";
  std::string mode = "recurrence";
  double tol = kDefaultTolerance;
  double alpha = 0.0;
  double beta = 0.0;
  std::optional<double> gamma;
  std::size_t size = 0;
  int k = 0;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  bool compare_oracle = false;
  bool timings = false;
};

/// Payload sink: --output when given, the output stream otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot write '" + path + "'");
      out_ = file_.get();
    }
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

void require_format(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw InputError("--format must be json or csv");
}

void add_regularity(Report& r, const RegularityReport& rep) {
  r.text("verdict", rep.regular ? "regular" : "singular");
  r.number("tolerance", rep.tolerance_used);
}

void add_regularity_details(Report& r, const RegularityReport& rep) {
  r.number("denom", rep.denom);
  r.number("scale", rep.scale);
  r.number("d_abc", rep.d_abc);
  r.boolean("overflowed", rep.overflowed);
}

Report singular_report(const std::string& command, const RegularityReport& rep,
                       const ScaledValue& d_j) {
  Report r;
  r.text("command", command);
  add_regularity(r, rep);
  r.scaled("d_j", d_j);
  add_regularity_details(r, rep);
  return r;
}

InverseResult invert_instance(const Instance& inst, double tol) {
  if (const auto* j = std::get_if<JacobiCoefficients>(&inst)) return invert(*j, tol);
  if (const auto* t = std::get_if<ToeplitzSpec>(&inst)) return invert_toeplitz(*t, tol);
  const auto& s = std::get<SymmetricSpec>(inst);
  return invert_sym_toeplitz(s.alpha, s.beta, s.size, tol);
}

int do_invert(const Instance& inst, const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o);
  InverseResult res;
  try {
    res = invert_instance(inst, o.tol);
  } catch (const SingularMatrix& e) {
    err << "singular: " << e.what() << '\n';
    if (o.format == "json") {
      Sink sink(o.output, out);
      *sink << singular_report("invert", e.report(), determinant(to_coefficients(inst))).str()
            << '\n';
    }
    return kSingular;
  }
  Sink sink(o.output, out);
  if (o.format == "csv") {
    *sink << "k,s,value\n";
    const std::size_t m = res.entries.order();
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t s = 0; s < m; ++s) {
        *sink << k << ',' << s << ',' << format_number(res.entries(k, s)) << '\n';
      }
    }
    return kSuccess;
  }
  Report r;
  r.text("command", "invert");
  add_regularity(r, res.report);
  r.integer("size", static_cast<long long>(res.entries.order()));
  r.scaled("d_j", res.determinant);
  r.number("determinant", res.det_matrix);
  r.number("det_inverse", res.det_inverse);
  r.matrix("entries", res.entries);
  *sink << r.str() << '\n';
  return kSuccess;
}

int do_check(const Instance& inst, const Options& o, std::ostream& out) {
  const JacobiCoefficients j = to_coefficients(inst);
  const FundamentalSeqJ fs = fundamental_seq_j(j);
  const RegularityReport rep = regularity_report(j, fs, o.tol);
  Sink sink(o.output, out);
  *sink << singular_report("check", rep, fs.d_j).str() << '\n';
  return rep.regular ? kSuccess : kSingular;
}

int do_det(const Instance& inst, const Options& o, std::ostream& out) {
  const JacobiCoefficients j = to_coefficients(inst);
  const FundamentalSeqJ fs = fundamental_seq_j(j);
  const RegularityReport rep = regularity_report(j, fs, o.tol);
  Report r;
  r.text("command", "det");
  add_regularity(r, rep);
  r.scaled("d_j", fs.d_j);
  const auto d = fs.d_j.try_to_double();
  r.number("determinant", d ? *d : std::copysign(INFINITY, fs.d_j.sign()));
  if (!fs.d_j.is_zero()) {
    const auto inv = (ScaledValue::one() / fs.d_j).try_to_double();
    r.number("det_inverse", inv ? *inv : 0.0);
  } else {
    r.number("det_inverse", INFINITY);
  }
  Sink sink(o.output, out);
  *sink << r.str() << '\n';
  return kSuccess;
}

int do_solve(const Instance& inst, const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o);
  const JacobiCoefficients j = to_coefficients(inst);
  std::vector<double> f = parse_vector(o.rhs);
  if (f.size() != j.size()) {
    throw SchemaError("rhs", "expected " + std::to_string(j.size()) + " entries, got " +
                                 std::to_string(f.size()));
  }
  const GridFunction data(std::move(f));
  const FundamentalSeqJ fs = fundamental_seq_j(j);
  const RegularityReport rep = regularity_report(j, fs, o.tol);
  if (!rep.regular) {
    err << "singular: " << SingularMatrix(rep).what() << '\n';
    if (o.format == "json") {
      Sink sink(o.output, out);
      *sink << singular_report("solve", rep, fs.d_j).str() << '\n';
    }
    return kSingular;
  }
  const GridFunction u = solve(j, data, o.tol);
  Sink sink(o.output, out);
  if (o.format == "csv") {
    *sink << "k,value\n";
    for (std::size_t k = 0; k < u.size(); ++k) *sink << k << ',' << format_number(u[k]) << '\n';
    return kSuccess;
  }
  Report r;
  r.text("command", "solve");
  add_regularity(r, rep);
  r.integer("size", static_cast<long long>(u.size()));
  r.scaled("d_j", fs.d_j);
  r.vector("solution", u.values());
  *sink << r.str() << '\n';
  return kSuccess;
}

int do_toeplitz(const Options& o, std::ostream& out, std::ostream& err) {
  Instance inst = o.gamma ? Instance(ToeplitzSpec{o.alpha, o.beta, *o.gamma, o.size})
                          : Instance(SymmetricSpec{o.alpha, o.beta, o.size});
  ToeplitzSpec{o.alpha, o.beta, o.gamma.value_or(o.alpha), o.size}.validate();
  if (o.action == "invert") return do_invert(inst, o, out, err);
  if (o.action == "check") return do_check(inst, o, out);
  throw InputError("--action must be invert or check");
}

int do_cheb(const Options& o, std::ostream& out) {
  if (o.k < -1) throw InputError("--k must be >= -1");
  if (o.mode != "direct" && o.mode != "recurrence") {
    throw InputError("--mode must be direct or recurrence");
  }
  // The lists hold x(1), x(2), ... and y(1), y(2), ...
  if (o.x.size() < static_cast<std::size_t>(std::max(o.k, 0))) {
    throw InputError("--x needs " + std::to_string(o.k) + " values");
  }
  if (o.y.size() < static_cast<std::size_t>(std::max(o.k - 1, 0))) {
    throw InputError("--y needs " + std::to_string(o.k - 1) + " values");
  }
  const chebyshev::ChebSequences seq(o.x, o.y, -1);
  Report r;
  r.text("command", "cheb");
  r.text("mode", o.mode);
  r.integer("k", o.k);
  if (o.mode == "direct") {
    if (o.k > kMaxDirectOrder) {
      throw InputError("direct mode is exponential; --k must be <= " +
                       std::to_string(kMaxDirectOrder));
    }
    r.number("value", chebyshev::cheb_direct(o.k, seq));
  } else {
    r.scaled("value", chebyshev::cheb_recurrence(o.k, seq));
  }
  out << r.str() << '\n';
  return kSuccess;
}

struct TrialResult {
  bool singular = false;
  double residual = 0.0;
  double oracle_diff = 0.0;
  double fundamental_ms = 0.0;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  double oracle_ms = 0.0;
};

template <class F>
double time_ms(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

TrialResult run_trial(const JacobiCoefficients& j, const Options& o) {
  TrialResult t;
  FundamentalSeqJ fs;
  t.fundamental_ms = time_ms([&] { fs = fundamental_seq_j(j); });
  if (!regularity_report(j, fs, o.tol).regular) {
    t.singular = true;
    return t;
  }
  InverseResult res;
  t.serial_ms = time_ms([&] { res = invert(j, o.tol, Assembly::serial); });
  if (o.timings) t.parallel_ms = time_ms([&] { (void)invert(j, o.tol, Assembly::parallel); });
  const DenseMatrix d = to_dense(j);
  t.residual = std::max(oracle::residual_inf_norm(d, res.entries),
                        oracle::residual_inf_norm(res.entries, d));
  if (o.compare_oracle) {
    DenseMatrix dense;
    try {
      t.oracle_ms = time_ms([&] { dense = oracle::dense_invert(d); });
      t.oracle_diff = oracle::max_abs_difference(dense, res.entries) /
                      std::max(1.0, oracle::max_abs_entry(dense));
    } catch (const NumericallySingular&) {
      t.oracle_diff = INFINITY;
    }
  }
  return t;
}

int do_bench(const Options& o, std::ostream& out) {
  require_format(o);
  if (o.sizes.empty()) throw InputError("--sizes must list at least one size");
  for (auto m : o.sizes) {
    if (m < 2) throw InputError("bench sizes must be >= 2");
  }
  if (o.trials == 0) throw InputError("--trials must be positive");

  // One generator stream in (size, trial) order, independent of how trials run.
  Lcg64 rng(o.seed);
  std::vector<JacobiCoefficients> instances;
  for (auto m : o.sizes) {
    for (std::size_t t = 0; t < o.trials; ++t) instances.push_back(random_jacobi(rng, m));
  }
  std::vector<TrialResult> results(instances.size());
  const long count = static_cast<long>(instances.size());
  if (o.timings) {
    for (long i = 0; i < count; ++i) results[i] = run_trial(instances[i], o);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) results[i] = run_trial(instances[i], o);
  }

  std::vector<Report> rows;
  std::ostringstream csv;
  csv << "size,trials,singular,max_residual";
  if (o.compare_oracle) csv << ",max_oracle_diff";
  if (o.timings) csv << ",fundamental_ms,serial_ms,parallel_ms" << (o.compare_oracle ? ",oracle_ms" : "");
  csv << '\n';
  for (std::size_t si = 0; si < o.sizes.size(); ++si) {
    TrialResult agg;
    long singular = 0, regular = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
      const TrialResult& r = results[si * o.trials + t];
      if (r.singular) {
        ++singular;
        continue;
      }
      ++regular;
      agg.residual = std::max(agg.residual, r.residual);
      agg.oracle_diff = std::max(agg.oracle_diff, r.oracle_diff);
      agg.fundamental_ms += r.fundamental_ms;
      agg.serial_ms += r.serial_ms;
      agg.parallel_ms += r.parallel_ms;
      agg.oracle_ms += r.oracle_ms;
    }
    const double per = regular ? 1.0 / static_cast<double>(regular) : 0.0;
    Report row;
    row.integer("size", static_cast<long long>(o.sizes[si]));
    row.integer("trials", static_cast<long long>(o.trials));
    row.integer("singular", singular);
    row.number("max_residual", agg.residual);
    csv << o.sizes[si] << ',' << o.trials << ',' << singular << ',' << format_number(agg.residual);
    if (o.compare_oracle) {
      row.number("max_oracle_diff", agg.oracle_diff);
      csv << ',' << format_number(agg.oracle_diff);
    }
    if (o.timings) {
      Report ms;
      ms.number("fundamental", agg.fundamental_ms * per);
      ms.number("serial", agg.serial_ms * per);
      ms.number("parallel", agg.parallel_ms * per);
      csv << ',' << format_number(agg.fundamental_ms * per) << ','
          << format_number(agg.serial_ms * per) << ',' << format_number(agg.parallel_ms * per);
      if (o.compare_oracle) {
        ms.number("oracle", agg.oracle_ms * per);
        csv << ',' << format_number(agg.oracle_ms * per);
      }
      row.object("timings_ms", ms);
    }
    csv << '\n';
    rows.push_back(row);
  }

  Sink sink(o.output, out);
  if (o.format == "csv") {
    *sink << csv.str();
    return kSuccess;
  }
  Report r;
  r.text("command", "bench");
  r.integer("seed", static_cast<long long>(o.seed));
  r.integer("trials", static_cast<long long>(o.trials));
  r.number("tolerance", o.tol);
  r.boolean("compare_oracle", o.compare_oracle);
  r.array("rows", rows);
  *sink << r.str() << '\n';
  return kSuccess;
}

void add_tol(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "relative singularity tolerance")->check(CLI::PositiveNumber);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "write the payload to this file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Explicit inverses and determinants of Jacobi (tridiagonal) matrices", "jacobi"};
  app.require_subcommand(1);

  auto* invert_cmd = app.add_subcommand("invert", "explicit inverse of an instance file");
  invert_cmd->add_option("--input", o.input, "instance file")->required();
  add_tol(invert_cmd, o);
  add_format(invert_cmd, o);

  auto* det_cmd = app.add_subcommand("det", "determinant D_J");
  det_cmd->add_option("--input", o.input, "instance file")->required();
  add_tol(det_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "regularity report only");
  check_cmd->add_option("--input", o.input, "instance file")->required();
  add_tol(check_cmd, o);

  auto* solve_cmd = app.add_subcommand("solve", "solve J u = f");
  solve_cmd->add_option("--input", o.input, "instance file")->required();
  solve_cmd->add_option("--rhs", o.rhs, "JSON file holding the n+2 values of f")->required();
  add_tol(solve_cmd, o);
  add_format(solve_cmd, o);

  auto* toeplitz_cmd = app.add_subcommand("toeplitz", "tridiagonal Toeplitz closed forms");
  toeplitz_cmd->add_option("--alpha", o.alpha, "superdiagonal is -alpha")->required();
  toeplitz_cmd->add_option("--beta", o.beta, "diagonal")->required();
  toeplitz_cmd->add_option("--gamma", o.gamma, "subdiagonal is -gamma (default: symmetric)");
  toeplitz_cmd->add_option("--size", o.size, "matrix order")->required();
  toeplitz_cmd->add_option("--action", o.action, "invert or check")
      ->check(CLI::IsMember({"invert", "check"}));
  add_tol(toeplitz_cmd, o);
  add_format(toeplitz_cmd, o);

  auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev function P_k(x, y)");
  cheb_cmd->add_option("--k", o.k, "order, >= -1")->required();
  cheb_cmd->add_option("--x", o.x, "x(1),...,x(k)")->delimiter(',');
  cheb_cmd->add_option("--y", o.y, "y(1),...,y(k-1)")->delimiter(',');
  cheb_cmd->add_option("--mode", o.mode, "direct or recurrence")
      ->check(CLI::IsMember({"direct", "recurrence"}));

  auto* bench_cmd = app.add_subcommand("bench", "random-instance timing and residual table");
  bench_cmd->add_option("--sizes", o.sizes, "matrix orders")->delimiter(',')->required();
  bench_cmd->add_option("--trials", o.trials, "instances per size")->required();
  bench_cmd->add_option("--seed", o.seed, "generator seed")->required();
  bench_cmd->add_flag("--compare-oracle", o.compare_oracle, "also run the dense oracle");
  bench_cmd->add_flag("--timings", o.timings, "report per-phase milliseconds (not deterministic)");
  add_tol(bench_cmd, o);
  add_format(bench_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (*invert_cmd) return do_invert(parse_instance(o.input), o, out, err);
    if (*det_cmd) return do_det(parse_instance(o.input), o, out);
    if (*check_cmd) return do_check(parse_instance(o.input), o, out);
    if (*solve_cmd) return do_solve(parse_instance(o.input), o, out, err);
    if (*toeplitz_cmd) return do_toeplitz(o, out, err);
    if (*cheb_cmd) return do_cheb(o, out);
    if (*bench_cmd) return do_bench(o, out);
  } catch (const SingularMatrix& e) {
    err << "singular: " << e.what() << '\n';
    return kSingular;
  } catch (const SingularProblem& e) {
    err << "singular: " << e.what() << '\n';
    return kSingular;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ZeroOffDiagonal& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const LengthMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NonFiniteInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kInvalidInput;
}

}  // namespace jacobi::cli
