// Copyright 2026 The linsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "capi.hpp"
#include "system_file.hpp"

namespace linsolve::cli {

namespace {

bool is_iterative(ls_method m) {
  return m == LS_METHOD_GAUSS_SEIDEL || m == LS_METHOD_JACOBI;
}

int exit_code_for(ls_status status) {
  switch (status) {
    case LS_STATUS_EXACT:
    case LS_STATUS_CONVERGED:
      return kExitSolved;
    case LS_STATUS_DIVERGED:
    case LS_STATUS_MAX_ITERATIONS:
      return kExitIterationFailed;
    case LS_STATUS_SINGULAR:
    case LS_STATUS_INCONSISTENT:
    case LS_STATUS_UNDERDETERMINED:
      return kExitNoUniqueSolution;
  }
  return kExitUsage;
}

bool has_solution(ls_status s) { return s == LS_STATUS_EXACT || s == LS_STATUS_CONVERGED; }

struct MethodRun {
  ls_method method;
  ls_status status = LS_STATUS_SINGULAR;
  std::vector<double> x;
  std::size_t iterations = 0;
  TraceHandle trace;
};

MethodRun run_method(const SystemFile& sys, ls_method method, const ls_config& cfg,
                     const std::optional<std::vector<double>>& guess, bool want_trace) {
  MethodRun run;
  run.method = method;
  run.x.assign(sys.cols(), 0.0);
  const std::string context = ls_method_name(method);
  if (is_iterative(method)) {
    const double* g = guess ? guess->data() : nullptr;
    const std::size_t g_len = guess ? guess->size() : 0;
    ls_trace* raw = nullptr;
    check(ls_solve_iterative(sys.a.get(), sys.b.data(), sys.b.size(), g, g_len, method,
                             &cfg, run.x.data(), run.x.size(), &run.status,
                             &run.iterations, want_trace ? &raw : nullptr),
          context);
    run.trace.reset(raw);
  } else {
    check(ls_solve_direct(sys.a.get(), sys.b.data(), sys.b.size(), method, &cfg,
                          run.x.data(), run.x.size(), &run.status),
          context);
  }
  if (!has_solution(run.status)) run.x.clear();
  return run;
}

void write_trace(const ls_trace* trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot open trace file '" + path + "'");
  const std::size_t n = ls_trace_dimension(trace);
  std::vector<double> x(n), deltas(n);
  out << "iteration,component,value,delta\n";
  for (std::size_t k = 0; k < ls_trace_length(trace); ++k) {
    std::size_t iteration = 0;
    check(ls_trace_record(trace, k, &iteration, x.data(), deltas.data(), nullptr), "trace");
    for (std::size_t i = 0; i < n; ++i) {
      out << iteration << ',' << i << ',' << format_double(x[i]) << ','
          << format_double(deltas[i]) << '\n';
    }
  }
  if (!out) throw CliError("failed writing trace file '" + path + "'");
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::string fixed(double v, int precision) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::fixed, precision);
  return ec == std::errc() ? std::string(buf.data(), ptr) : "-";
}

// Portable uniform draw in [0, 1): std::mt19937_64 is fully specified, the
// standard distributions are not.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

// ---- solve ------------------------------------------------------------------

int run_solve(const SolveOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (options.trace_path && !is_iterative(options.method)) {
      throw CliError("--trace is only available for iterative methods");
    }
    const SystemFile sys = load_system(options.input);
    const auto& guess = options.guess ? options.guess : sys.guess;
    if (guess && guess->size() != sys.cols()) {
      throw CliError("guess has " + std::to_string(guess->size()) + " entries, expected " +
                     std::to_string(sys.cols()));
    }
    const MethodRun run = run_method(sys, options.method, options.config, guess,
                                     options.trace_path.has_value());
    if (options.trace_path) write_trace(run.trace.get(), *options.trace_path);

    for (std::size_t i = 0; i < run.x.size(); ++i) {
      out << "x[" << i << "] = " << format_double(run.x[i]) << '\n';
    }
    out << "status: " << ls_status_name(run.status) << '\n';
    if (is_iterative(options.method)) out << "iterations: " << run.iterations << '\n';
    return exit_code_for(run.status);
  });
}

// ---- compare ----------------------------------------------------------------

int run_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SystemFile sys = load_system(options.input);
    if (sys.rows() != sys.cols()) {
      throw CliError("compare needs a square system (got " + std::to_string(sys.rows()) +
                     "x" + std::to_string(sys.cols()) + ")");
    }
    const auto& guess = options.guess ? options.guess : sys.guess;

    ls_dominance dominance = LS_DOMINANCE_NONE;
    check(ls_classify_dominance(sys.a.get(), &dominance), "dominance");
    std::size_t zero_diagonals = 0;
    check(ls_check_diagonal(sys.a.get(), options.config.pivot_tolerance, nullptr, 0,
                            &zero_diagonals),
          "diagonal check");

    const MethodRun reference = run_method(sys, LS_METHOD_CRAMER, options.config, guess, false);

    out << std::left << std::setw(14) << "method" << std::setw(16) << "status"
        << std::setw(12) << "iterations" << std::setw(24) << "deviation"
        << "solution\n";

    const std::array methods{LS_METHOD_CRAMER, LS_METHOD_GAUSS_JORDAN,
                             LS_METHOD_GAUSS_SEIDEL, LS_METHOD_JACOBI};
    for (const ls_method method : methods) {
      out << std::setw(14) << ls_method_name(method);
      if (is_iterative(method) && zero_diagonals > 0) {
        out << std::setw(16) << "zero-diagonal" << std::setw(12) << "-" << std::setw(24)
            << "-" << "-\n";
        continue;
      }
      const MethodRun run = run_method(sys, method, options.config, guess, false);
      std::string deviation = "-";
      if (has_solution(run.status) && has_solution(reference.status)) {
        double dev = 0.0;
        for (std::size_t i = 0; i < run.x.size(); ++i) {
          dev = std::max(dev, std::abs(run.x[i] - reference.x[i]));
        }
        deviation = format_double(dev);
      }
      out << std::setw(16) << ls_status_name(run.status) << std::setw(12)
          << (is_iterative(method) ? std::to_string(run.iterations) : std::string("-"))
          << std::setw(24) << deviation
          << (run.x.empty() ? std::string("-") : format_vector(run.x)) << '\n';
    }
    out << "dominance: " << ls_dominance_name(dominance) << '\n';
    out << "reference: cramer " << ls_status_name(reference.status) << '\n';
    return has_solution(reference.status) ? kExitSolved : kExitNoUniqueSolution;
  });
}

// ---- bench ------------------------------------------------------------------

GeneratedSystem generate_dominant_system(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (n + 1)));
  GeneratedSystem g{n, std::vector<double>(n * n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double v = 2.0 * unit(rng) - 1.0;
      g.a[i * n + j] = v;
      off += std::abs(v);
    }
    g.a[i * n + i] = off + 1.0 + unit(rng);
  }
  std::vector<double> x(n);
  for (double& v : x) v = 2.0 * unit(rng) - 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += g.a[i * n + j] * x[j];
    g.b[i] = s;
  }
  return g;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string token = text.substr(start, comma - start);
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
        value == 0) {
      throw CliError("--sizes: '" + token + "' is not a positive integer");
    }
    sizes.push_back(value);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return sizes;
}

std::vector<BenchRow> run_benchmark(const BenchOptions& options) {
  if (options.sizes.empty()) throw CliError("--sizes must list at least one size");
  if (options.repeats == 0) throw CliError("repeats must be at least 1");

  ls_config cfg;
  ls_config_default(&cfg);
  cfg.epsilon = 1e-8;
  cfg.max_iterations = 10000;

  std::vector<BenchRow> rows;
  for (const std::size_t n : options.sizes) {
    if (n == 0) throw CliError("--sizes entries must be positive");
    const GeneratedSystem g = generate_dominant_system(n, options.seed);
    const MatrixHandle a = create_matrix(n, n, g.a);
    std::vector<double> x(n);

    for (const ls_method method : {LS_METHOD_CRAMER, LS_METHOD_GAUSS_JORDAN,
                                   LS_METHOD_GAUSS_SEIDEL, LS_METHOD_JACOBI}) {
      BenchRow row{n, method, 0.0, LS_STATUS_SINGULAR, 0};
      double best = INFINITY;
      for (std::size_t r = 0; r < options.repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        if (is_iterative(method)) {
          check(ls_solve_iterative(a.get(), g.b.data(), n, nullptr, 0, method, &cfg,
                                   x.data(), n, &row.status, &row.iterations, nullptr),
                ls_method_name(method));
        } else {
          check(ls_solve_direct(a.get(), g.b.data(), n, method, &cfg, x.data(), n,
                                &row.status),
                ls_method_name(method));
        }
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
      }
      row.milliseconds = best;
      rows.push_back(row);
    }
  }
  return rows;
}

int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<BenchRow> rows = run_benchmark(options);
    out << std::left << std::setw(8) << "n" << std::setw(14) << "method" << std::setw(16)
        << "status" << std::setw(12) << "iterations" << std::setw(14) << "ms"
        << "ratio_vs_gj\n";
    for (const BenchRow& row : rows) {
      double gj = 0.0;
      for (const BenchRow& other : rows) {
        if (other.n == row.n && other.method == LS_METHOD_GAUSS_JORDAN) {
          gj = other.milliseconds;
        }
      }
      out << std::setw(8) << row.n << std::setw(14) << ls_method_name(row.method)
          << std::setw(16) << ls_status_name(row.status) << std::setw(12)
          << (is_iterative(row.method) ? std::to_string(row.iterations) : std::string("-"))
          << std::setw(14) << fixed(row.milliseconds, 4)
          << (gj > 0.0 ? fixed(row.milliseconds / gj, 2) : std::string("-")) << '\n';
    }
    return kExitSolved;
  });
}

// ---- argument parsing ---------------------------------------------------------

namespace {

ls_method parse_method(const std::string& name) {
  if (name == "cramer") return LS_METHOD_CRAMER;
  if (name == "gauss-jordan") return LS_METHOD_GAUSS_JORDAN;
  if (name == "gauss-seidel") return LS_METHOD_GAUSS_SEIDEL;
  if (name == "jacobi") return LS_METHOD_JACOBI;
  throw CliError("unknown method '" + name +
                 "' (expected cramer, gauss-jordan, gauss-seidel or jacobi)");
}

ls_criterion parse_criterion(const std::string& name) {
  if (name == "abs") return LS_CRITERION_ABSOLUTE_DELTA;
  if (name == "rel") return LS_CRITERION_RELATIVE_ERROR;
  throw CliError("unknown criterion '" + name + "' (expected abs or rel)");
}

struct ConfigFlags {
  double epsilon = 0.01;
  std::size_t max_iter = 1000;
  std::string criterion = "abs";
  double singular_tol = 1e-12;
  double pivot_tol = 1e-12;
  std::string guess;

  void add_to(CLI::App& app) {
    app.add_option("--epsilon", epsilon, "Convergence tolerance")->capture_default_str();
    app.add_option("--max-iter", max_iter, "Sweep budget")->capture_default_str();
    app.add_option("--criterion", criterion, "abs or rel")->capture_default_str();
    app.add_option("--singular-tol", singular_tol, "|det| at or below this is singular")
        ->capture_default_str();
    app.add_option("--pivot-tol", pivot_tol, "pivot magnitudes at or below this are zero")
        ->capture_default_str();
    app.add_option("--guess", guess, "Initial guess \"g1;g2;...\"");
  }

  ls_config config() const {
    ls_config cfg;
    ls_config_default(&cfg);
    cfg.epsilon = epsilon;
    cfg.max_iterations = max_iter;
    cfg.criterion = parse_criterion(criterion);
    cfg.singular_tolerance = singular_tol;
    cfg.pivot_tolerance = pivot_tol;
    return cfg;
  }

  std::optional<std::vector<double>> parsed_guess() const {
    if (guess.empty()) return std::nullopt;
    return parse_vector(guess, "--guess");
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense linear-system solver: Cramer, Gauss-Jordan, Gauss-Seidel, Jacobi",
               "linsolve"};
  app.require_subcommand(1);

  std::string input, method = "gauss-jordan", trace, sizes;
  std::uint64_t seed = 42;

  ConfigFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Solve a system with one method");
  solve->add_option("--input", input, "System file")->required();
  solve->add_option("--method", method, "cramer|gauss-jordan|gauss-seidel|jacobi")
      ->capture_default_str();
  solve->add_option("--trace", trace, "Write the iteration trace as CSV");
  solve_flags.add_to(*solve);

  ConfigFlags compare_flags;
  auto* compare = app.add_subcommand("compare", "Run every method against the Cramer reference");
  compare->add_option("--input", input, "System file")->required();
  compare_flags.add_to(*compare);

  auto* bench = app.add_subcommand("bench", "Time every method on random dominant systems");
  bench->add_option("--sizes", sizes, "Comma-separated sizes, e.g. 10,50,100")->required();
  bench->add_option("--seed", seed, "Generator seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSolved;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSolved;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  return guarded(err, [&] {
    if (solve->parsed()) {
      SolveOptions o;
      o.input = input;
      o.method = parse_method(method);
      o.config = solve_flags.config();
      o.guess = solve_flags.parsed_guess();
      if (!trace.empty()) o.trace_path = trace;
      return run_solve(o, out, err);
    }
    if (compare->parsed()) {
      CompareOptions o;
      o.input = input;
      o.config = compare_flags.config();
      o.guess = compare_flags.parsed_guess();
      return run_compare(o, out, err);
    }
    BenchOptions o;
    o.sizes = parse_sizes(sizes);
    o.seed = seed;
    return run_bench(o, out, err);
  });
}

}  // namespace linsolve::cli
