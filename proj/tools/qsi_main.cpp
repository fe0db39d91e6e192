// Copyright 2026 The qsi developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. All mathematics goes through the C API in
// qsi/qsi.h; this file only parses arguments, shapes grids, and formats
// tables. Exit codes: 0 all checks passed, 1 mathematical violation or
// failed verdict, 2 usage/configuration error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsi/qsi.h"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(qsi_status status) {
  if (status == QSI_OK) return;
  const std::string message =
      std::string(qsi_status_name(status)) + ": " + qsi_last_error_message();
  if (status == QSI_ERR_PARSE || status == QSI_ERR_INVALID_ARGUMENT ||
      status == QSI_ERR_DOMAIN || status == QSI_ERR_IO ||
      status == QSI_ERR_UNSUPPORTED_CONTINUATION)
    throw UsageError(message);
  throw MathError(message);
}

struct FunctionDeleter {
  void operator()(qsi_function* fn) const { qsi_function_free(fn); }
};
struct WeightDeleter {
  void operator()(qsi_weight* w) const { qsi_weight_free(w); }
};
using FunctionHandle = std::unique_ptr<qsi_function, FunctionDeleter>;
using WeightHandle = std::unique_ptr<qsi_weight, WeightDeleter>;

FunctionHandle parse_function(const std::string& spec) {
  qsi_function* fn = nullptr;
  check(qsi_function_parse(spec.c_str(), &fn));
  return FunctionHandle(fn);
}

WeightHandle parse_weight(const std::string& spec) {
  qsi_weight* w = nullptr;
  check(qsi_weight_parse(spec.c_str(), &w));
  return WeightHandle(w);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

double parse_double(const std::string& s) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse number '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

// Grid grammar: a single number, a comma list, "a:b:n" (linear, inclusive),
// or "loga:b:n" (log-spaced, inclusive).
std::vector<double> parse_grid(const std::string& spec) {
  const bool logspaced = spec.rfind("log", 0) == 0;
  const std::string body = logspaced ? spec.substr(3) : spec;

  if (body.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(body, ':');
    if (parts.size() != 3) throw UsageError("range spec must be start:stop:count");
    const double a = parse_double(parts[0]);
    const double b = parse_double(parts[1]);
    const long n = std::lround(parse_double(parts[2]));
    if (n < 1) throw UsageError("range spec needs count >= 1");
    if (logspaced && !(a > 0.0 && b > 0.0))
      throw UsageError("log range needs positive endpoints");
    std::vector<double> out(static_cast<size_t>(n));
    if (n == 1) {
      out[0] = a;
      return out;
    }
    const double lo = logspaced ? std::log(a) : a;
    const double hi = logspaced ? std::log(b) : b;
    const double step = (hi - lo) / (n - 1);
    for (long i = 0; i < n; ++i) {
      const double x = lo + i * step;
      out[static_cast<size_t>(i)] = logspaced ? std::exp(x) : x;
    }
    out.back() = b;
    return out;
  }
  if (body.find(',') != std::string::npos) {
    std::vector<double> out;
    for (const std::string& part : split(body, ',')) out.push_back(parse_double(part));
    if (out.empty()) throw UsageError("empty grid");
    return out;
  }
  return {parse_double(body)};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// ---------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------

int run_eval(const std::string& function_spec, const std::string& t_spec,
             const std::string& format, const std::string& output_path) {
  const FunctionHandle fn = parse_function(function_spec);
  const std::vector<double> grid = parse_grid(t_spec);
  for (double t : grid)
    if (!(t > 0.0)) throw UsageError("t grid must be positive");

  double f_zero = 0.0;
  check(qsi_function_f_zero(fn.get(), &f_zero));
  int regular = 0;
  check(qsi_function_is_regular(fn.get(), &regular));

  Output out(output_path);
  std::ostream& os = out.stream();

  json rows = json::array();
  if (format == "csv") os << "t,f,f_check,f_tilde,f_zero\n";
  if (format == "text")
    os << "function " << function_spec << "  f(0)=" << fmt(f_zero)
       << (regular ? "  (regular)" : "  (not regular)") << "\n";

  for (double t : grid) {
    double f = 0.0;
    check(qsi_function_eval(fn.get(), t, &f));
    double fc = std::nan("");
    double ft = std::nan("");
    if (regular) {
      check(qsi_function_eval_check(fn.get(), t, &fc));
      check(qsi_function_eval_tilde(fn.get(), t, &ft));
    }
    if (format == "csv") {
      os << fmt(t) << ',' << fmt(f) << ',' << fmt(fc) << ',' << fmt(ft) << ',' << fmt(f_zero)
         << "\n";
    } else if (format == "json") {
      json row;
      row["t"] = t;
      row["f"] = f;
      row["f_check"] = regular ? json(fc) : json(nullptr);
      row["f_tilde"] = regular ? json(ft) : json(nullptr);
      row["f_zero"] = f_zero;
      rows.push_back(row);
    } else {
      os << "t=" << fmt(t) << " f=" << fmt(f) << " f_check=" << (regular ? fmt(fc) : "n/a")
         << " f_tilde=" << (regular ? fmt(ft) : "n/a") << "\n";
    }
  }
  if (format == "json") os << rows.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

std::string report_to_text(const json& r) {
  std::ostringstream os;
  os << "suite=" << r["suite"].get<std::string>()
     << " function=" << r["function_spec"].get<std::string>() << " dims=[";
  bool first = true;
  for (const auto& d : r["dims"]) {
    if (!first) os << ',';
    os << d.get<int>();
    first = false;
  }
  os << "] trials=" << r["trials"].get<long long>() << " seed=" << r["seed"].get<unsigned long long>()
     << " worst_margin=" << fmt(r["worst_margin"].get<double>())
     << " violations=" << r["violations"].size()
     << " passed=" << (r["passed"].get<bool>() ? "yes" : "no");
  return os.str();
}

std::string report_to_csv_row(const json& r) {
  std::ostringstream os;
  os << r["suite"].get<std::string>() << ',' << r["function_spec"].get<std::string>() << ',';
  bool first = true;
  for (const auto& d : r["dims"]) {
    if (!first) os << '|';
    os << d.get<int>();
    first = false;
  }
  os << ',' << r["trials"].get<long long>() << ',' << r["seed"].get<unsigned long long>() << ','
     << fmt(r["worst_margin"].get<double>()) << ',' << r["violations"].size() << ','
     << (r["passed"].get<bool>() ? "true" : "false");
  return os.str();
}

int run_verify(std::string suite, const std::vector<std::string>& functions, int dim, int k,
               int trials, unsigned long long seed, double tol, const std::string& format,
               const std::string& output_path) {
  if (trials < 1) throw UsageError("trials must be >= 1");
  if (dim < 2) throw UsageError("dim must be >= 2");
  if (!(tol > 0.0)) throw UsageError("tol must be positive");
  if (k < 1) throw UsageError("k must be >= 1");

  std::vector<std::string> suites;
  if (suite == "all")
    suites = {"basic", "matrix", "det", "pmono", "convexity"};
  else if (suite == "basic" || suite == "matrix" || suite == "det" || suite == "pmono" ||
           suite == "convexity")
    suites = {suite};
  else
    throw UsageError("unknown suite '" + suite + "'");

  Output out(output_path);
  std::ostream& os = out.stream();
  if (format == "csv")
    os << "suite,function_spec,dims,trials,seed,worst_margin,violations,passed\n";

  bool all_passed = true;
  bool pmono_done = false;
  for (const std::string& s : suites) {
    for (const std::string& function_spec : functions) {
      if (s == "pmono") {
        if (pmono_done) continue;  // function-independent
        pmono_done = true;
      }
      qsi_verify_config cfg;
      qsi_verify_config_init(&cfg);
      cfg.suite = s.c_str();
      cfg.function_spec = function_spec.c_str();
      cfg.dim = dim;
      cfg.tuple_size = k;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.tol = tol;

      char* report_json = nullptr;
      int passed = 0;
      check(qsi_verify_run(&cfg, &report_json, &passed));
      const std::string text(report_json);
      qsi_string_free(report_json);

      if (format == "json") {
        os << text << "\n";
      } else {
        const json r = json::parse(text);
        os << (format == "csv" ? report_to_csv_row(r) : report_to_text(r)) << "\n";
      }
      if (passed == 0) all_passed = false;
    }
  }
  return all_passed ? 0 : 1;
}

// ---------------------------------------------------------------------
// order / lattice
// ---------------------------------------------------------------------

qsi_order_method method_from_string(const std::string& name) {
  if (name == "auto") return QSI_ORDER_AUTO;
  if (name == "weight") return QSI_ORDER_WEIGHT;
  if (name == "phi") return QSI_ORDER_PHI;
  if (name == "both") return QSI_ORDER_BOTH;
  throw UsageError("unknown order method '" + name + "'");
}

const char* method_name(qsi_order_method m) {
  switch (m) {
    case QSI_ORDER_WEIGHT: return "weight_comparison";
    case QSI_ORDER_PHI: return "phi_monotonicity";
    case QSI_ORDER_BOTH: return "both";
    default: return "auto";
  }
}

int run_order(const std::string& f_spec, const std::string& g_spec, const std::string& method,
              const std::string& output_path) {
  const FunctionHandle f = parse_function(f_spec);
  const FunctionHandle g = parse_function(g_spec);
  qsi_order_verdict verdict{};
  check(qsi_order_preceq(f.get(), g.get(), method_from_string(method), &verdict));

  Output out(output_path);
  out.stream() << "f=" << f_spec << " g=" << g_spec
               << " holds=" << (verdict.holds ? "yes" : "no")
               << " method=" << method_name(verdict.method_used)
               << " worst_margin=" << fmt(verdict.worst_margin)
               << " grid_size=" << verdict.grid_size << "\n";
  return verdict.holds ? 0 : 1;
}

int run_lattice(const std::string& f_spec, const std::string& g_spec, const std::string& t_spec,
                const std::string& output_path) {
  const FunctionHandle f = parse_function(f_spec);
  const FunctionHandle g = parse_function(g_spec);
  qsi_function* meet_raw = nullptr;
  check(qsi_function_meet(f.get(), g.get(), &meet_raw));
  const FunctionHandle meet(meet_raw);
  qsi_function* join_raw = nullptr;
  check(qsi_function_join(f.get(), g.get(), &join_raw));
  const FunctionHandle join(join_raw);

  const std::vector<double> grid = parse_grid(t_spec);
  for (double t : grid)
    if (!(t > 0.0)) throw UsageError("t grid must be positive");

  Output out(output_path);
  std::ostream& os = out.stream();
  os << "t,f,g,meet,join\n";
  for (double t : grid) {
    double vf = 0.0, vg = 0.0, vmeet = 0.0, vjoin = 0.0;
    check(qsi_function_eval(f.get(), t, &vf));
    check(qsi_function_eval(g.get(), t, &vg));
    check(qsi_function_eval(meet.get(), t, &vmeet));
    check(qsi_function_eval(join.get(), t, &vjoin));
    os << fmt(t) << ',' << fmt(vf) << ',' << fmt(vg) << ',' << fmt(vmeet) << ',' << fmt(vjoin)
       << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------
// weights / figure1
// ---------------------------------------------------------------------

std::optional<std::string> weight_spec_for_function(const std::string& function_spec) {
  if (function_spec == "min") return "const:1";
  if (function_spec == "max") return "const:0";
  if (function_spec == "sqrt") return "const:0.5";
  if (function_spec.rfind("wyd:", 0) == 0) return "wydh:" + function_spec.substr(4);
  if (function_spec.rfind("bridge:", 0) == 0) return "steph:" + function_spec.substr(7);
  return std::nullopt;
}

int run_weights(const std::string& function_spec, const std::string& weight_spec,
                const std::string& lambda_spec, bool reconstruct, const std::string& t_spec,
                const std::string& output_path) {
  if (function_spec.empty() == weight_spec.empty())
    throw UsageError("exactly one of --function and --weight is required");

  const std::vector<double> lambdas = parse_grid(lambda_spec);
  for (double l : lambdas)
    if (!(l > 0.0 && l < 1.0)) throw UsageError("lambda grid must lie in (0,1)");

  Output out(output_path);
  std::ostream& os = out.stream();

  if (!weight_spec.empty()) {
    if (reconstruct) throw UsageError("--reconstruct requires --function");
    const WeightHandle w = parse_weight(weight_spec);
    os << "lambda,value\n";
    for (double l : lambdas) {
      double h = 0.0;
      check(qsi_weight_eval(w.get(), l, &h));
      os << fmt(l) << ',' << fmt(h) << "\n";
    }
    return 0;
  }

  const FunctionHandle fn = parse_function(function_spec);
  if (reconstruct) {
    const std::optional<std::string> wspec = weight_spec_for_function(function_spec);
    if (!wspec) throw UsageError("no weight grammar entry for '" + function_spec + "'");
    const WeightHandle w = parse_weight(*wspec);
    const std::vector<double> ts = parse_grid(t_spec);
    double max_rel = 0.0;
    os << "t,f_reference,f_reconstructed,rel_error\n";
    for (double t : ts) {
      if (!(t > 0.0)) throw UsageError("t grid must be positive");
      double reference = 0.0, reconstructed = 0.0;
      check(qsi_function_eval(fn.get(), t, &reference));
      check(qsi_weight_reconstruct_f(w.get(), t, &reconstructed));
      const double rel = std::abs(reconstructed - reference) / std::abs(reference);
      max_rel = std::max(max_rel, rel);
      os << fmt(t) << ',' << fmt(reference) << ',' << fmt(reconstructed) << ',' << fmt(rel)
         << "\n";
    }
    std::cerr << "max_rel_error=" << fmt(max_rel) << "\n";
    return 0;
  }

  os << "lambda,value\n";
  for (double l : lambdas) {
    double h = 0.0;
    check(qsi_function_weight(fn.get(), l, &h));
    os << fmt(l) << ',' << fmt(h) << "\n";
  }
  return 0;
}

int run_figure1(double lambda, const std::string& p_spec, const std::string& output_path) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw UsageError("lambda out of range (0,1)");
  const std::vector<double> ps = parse_grid(p_spec);
  for (double p : ps)
    if (!(p > 0.0 && p < 1.0)) throw UsageError("p out of range (0,1)");

  Output out(output_path);
  std::ostream& os = out.stream();
  os << "p,h_p_lambda\n";
  for (double p : ps) {
    double h = 0.0;
    check(qsi_wyd_weight(p, lambda, &h));
    os << fmt(p) << ',' << fmt(h) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qsi: quantum variance, metric-adjusted skew information, and the\n"
      "lattice of representing functions for monotone quantum Fisher metrics.\n"
      "Function specs: min | max | sqrt | wyd:<p> | bridge:<p>.\n"
      "Weight specs: const:<v> | wydh:<p> | steph:<p> | grid:<file.csv>.\n"
      "Grids: <x> | <a,b,c,...> | a:b:n (linear) | loga:b:n (log-spaced).\n"
      "Exit codes: 0 ok, 1 violation/failed verdict, 2 usage error."};
  app.require_subcommand(1);

  // eval
  std::string eval_function, eval_t = "1", eval_format = "text", eval_output;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate f, f(0)/f, the tilde transform, f(0)");
  eval_cmd->add_option("--function", eval_function, "function spec")->required();
  eval_cmd->add_option("--t", eval_t, "t grid (default 1)");
  eval_cmd->add_option("--format", eval_format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  eval_cmd->add_option("--output", eval_output, "write to file instead of stdout");

  // verify
  std::string verify_suite = "all", verify_format = "text", verify_output;
  std::vector<std::string> verify_functions;
  int verify_dim = 3, verify_k = 2, verify_trials = 1000;
  unsigned long long verify_seed = 42;
  double verify_tol = 1e-9;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run randomized inequality suites (exit 1 on violation)");
  verify_cmd->add_option("--suite", verify_suite, "basic | matrix | det | pmono | convexity | all");
  verify_cmd->add_option("--function", verify_functions, "function spec(s), repeatable");
  verify_cmd->add_option("--dim", verify_dim, "state dimension (default 3)");
  verify_cmd->add_option("--k", verify_k, "observable tuple size (default 2)");
  verify_cmd->add_option("--trials", verify_trials, "trials per suite (default 1000)");
  verify_cmd->add_option("--seed", verify_seed, "base seed (default 42; QSI_SEED overrides)");
  verify_cmd->add_option("--tol", verify_tol, "margin tolerance (default 1e-9)");
  verify_cmd->add_option("--format", verify_format, "text | csv | json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  verify_cmd->add_option("--output", verify_output, "write to file instead of stdout");

  // order
  std::string order_f, order_g, order_method = "auto", order_output;
  CLI::App* order_cmd = app.add_subcommand("order", "Decide whether f precedes g");
  order_cmd->add_option("f", order_f, "first function spec")->required();
  order_cmd->add_option("g", order_g, "second function spec")->required();
  order_cmd->add_option("--method", order_method, "auto | weight | phi | both")
      ->check(CLI::IsMember({"auto", "weight", "phi", "both"}));
  order_cmd->add_option("--output", order_output, "write to file instead of stdout");

  // lattice
  std::string lattice_f, lattice_g, lattice_t = "log0.1:10:13", lattice_output;
  CLI::App* lattice_cmd = app.add_subcommand("lattice", "Tabulate f, g, meet, join on a t grid");
  lattice_cmd->add_option("f", lattice_f, "first function spec")->required();
  lattice_cmd->add_option("g", lattice_g, "second function spec")->required();
  lattice_cmd->add_option("--t", lattice_t, "t grid (default log0.1:10:13)");
  lattice_cmd->add_option("--output", lattice_output, "write to file instead of stdout");

  // weights
  std::string weights_function, weights_weight, weights_lambda = "0.02:0.98:49";
  std::string weights_t = "log0.01:100:40", weights_output;
  bool weights_reconstruct = false;
  CLI::App* weights_cmd =
      app.add_subcommand("weights", "Tabulate a weight function, or check reconstruction");
  weights_cmd->add_option("--function", weights_function, "function spec");
  weights_cmd->add_option("--weight", weights_weight, "weight spec");
  weights_cmd->add_option("--lambda", weights_lambda, "lambda grid (default 0.02:0.98:49)");
  weights_cmd->add_flag("--reconstruct", weights_reconstruct,
                        "compare reconstruction against the closed form on the t grid");
  weights_cmd->add_option("--t", weights_t, "t grid for --reconstruct (default log0.01:100:40)");
  weights_cmd->add_option("--output", weights_output, "write to file instead of stdout");

  // figure1
  double figure1_lambda = 0.5;
  std::string figure1_p = "0.02:0.98:33", figure1_output;
  CLI::App* figure1_cmd =
      app.add_subcommand("figure1", "CSV of p versus h_p(lambda) at fixed lambda");
  figure1_cmd->add_option("--lambda", figure1_lambda, "lambda in (0,1) (default 0.5)");
  figure1_cmd->add_option("--p", figure1_p, "p grid (default 0.02:0.98:33)");
  figure1_cmd->add_option("--output", figure1_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env_seed = std::getenv("QSI_SEED")) {
    try {
      verify_seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "error: QSI_SEED is not an unsigned integer\n";
      return 2;
    }
  }
  if (verify_functions.empty()) verify_functions = {"wyd:0.5"};

  try {
    if (*eval_cmd) return run_eval(eval_function, eval_t, eval_format, eval_output);
    if (*verify_cmd)
      return run_verify(verify_suite, verify_functions, verify_dim, verify_k, verify_trials,
                        verify_seed, verify_tol, verify_format, verify_output);
    if (*order_cmd) return run_order(order_f, order_g, order_method, order_output);
    if (*lattice_cmd) return run_lattice(lattice_f, lattice_g, lattice_t, lattice_output);
    if (*weights_cmd)
      return run_weights(weights_function, weights_weight, weights_lambda, weights_reconstruct,
                         weights_t, weights_output);
    if (*figure1_cmd) return run_figure1(figure1_lambda, figure1_p, figure1_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
