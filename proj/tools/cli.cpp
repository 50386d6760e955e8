#include "cli.hpp"

#include "polyhankel/bohr_lift.hpp"
#include "polyhankel/errors.hpp"
#include "polyhankel/hankel.hpp"
#include "polyhankel/integrals.hpp"
#include "polyhankel/io.hpp"
#include "polyhankel/nehari.hpp"
#include "polyhankel/search.hpp"
#include "polyhankel/spectra.hpp"
#include "polyhankel/symbols.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polyhankel::cli {

namespace {

using io::Record;

struct RunConfig {
  std::uint64_t seed = 20160601;
  std::uint64_t samples = 1'000'000;
  double tol = GridOptions{}.tol;
  std::string p = "2";
  std::size_t d = 0;
  std::size_t m = 1;
  std::string method = "grid";
  std::size_t max_dim = default_max_dim;
  unsigned threads = 0;
  std::string output;

  // symbol sources
  std::string symbol_file;
  std::string linear;
  std::string f_file;
  std::string f_linear;
  std::string matrix_file;

  // subcommand specific
  std::uint64_t n = 0;
  std::string exponents;
  std::string csv_out;
  std::string labels_out;
  double q = 1.0;
  std::size_t d_max = 8;
  bool stop_at_first = false;
  std::size_t restarts = 20;
  std::size_t iters = 200;
  std::string a;
  std::string b;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf")
    return infinity;
  std::size_t used = 0;
  const double p = std::stod(s, &used);
  if (used != s.size() || !(p > 0.0))
    throw std::invalid_argument("p must be a positive number or 'inf'");
  return p;
}

Symbol read_symbol_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open symbol file '" + path + "'");
  return io::symbol_from_json(nlohmann::json::parse(in));
}

// phi from --symbol, --linear or --d (normalized linear), in that order.
Symbol phi_from(const RunConfig& c) {
  if (!c.symbol_file.empty())
    return read_symbol_file(c.symbol_file);
  if (!c.linear.empty())
    return linear(io::parse_complex_list(c.linear));
  if (c.d > 0)
    return normalized_linear(c.d);
  throw std::invalid_argument("a symbol is required: use --symbol, --linear or --d");
}

// f from --f or --f-linear; defaults to phi.
Symbol f_from(const RunConfig& c, const Symbol& phi) {
  if (!c.f_file.empty())
    return read_symbol_file(c.f_file);
  if (!c.f_linear.empty())
    return linear(io::parse_complex_list(c.f_linear));
  return phi;
}

RatioOptions ratio_options(const RunConfig& c) {
  RatioOptions o;
  o.method = parse_method(c.method);
  o.grid.tol = c.tol;
  o.mc.threads = c.threads;
  o.mc_samples = c.samples;
  o.seed = c.seed;
  o.max_dim = c.max_dim;
  return o;
}

Record exponents_of(const MultiIndex& k) {
  return Record(std::vector<std::uint32_t>(k.exponents().begin(), k.exponents().end()));
}

Record labels_record(const std::vector<MultiIndex>& labels) {
  Record out = Record::array();
  for (const auto& k : labels) {
    Record r;
    r["exponents"] = exponents_of(k);
    try {
      r["n"] = label(k);
    } catch (const ComputationError&) {
      r["n"] = nullptr;
    }
    out.push_back(std::move(r));
  }
  return out;
}

Record spectrum_record(const SingularSpectrum& s) { return Record(s.values); }

Record estimate_record(const NormEstimate& e) {
  Record r;
  r["value"] = e.value;
  r["stderr"] = e.std_error;
  r["method"] = std::string(to_string(e.method));
  r["samples_or_nodes"] = e.samples_or_nodes;
  if (e.seed)
    r["seed"] = *e.seed;
  return r;
}

Record ratio_record(const RatioReport& r, const RatioOptions& o) {
  Record out;
  out["d"] = r.d;
  out["p"] = r.p;
  out["inner_abs"] = std::abs(r.inner);
  out["schatten"] = r.schatten;
  out["l1"] = r.l1.value;
  out["l1_stderr"] = r.l1.std_error;
  out["ratio"] = r.ratio;
  out["exceeded_one"] = r.exceeded_one;
  out["method"] = std::string(to_string(r.l1.method));
  if (r.l1.method == Method::mc) {
    out["samples"] = o.mc_samples;
    out["seed"] = o.seed;
    out["confidence"] = "ratio - 4 * stderr > 1";
  }
  return out;
}

ComplexMatrix matrix_from(const RunConfig& c, std::vector<MultiIndex>* labels) {
  if (!c.matrix_file.empty()) {
    std::ifstream in(c.matrix_file);
    if (!in)
      throw std::invalid_argument("cannot open matrix file '" + c.matrix_file + "'");
    return io::read_matrix_csv(in);
  }
  HankelMatrix m = build_matrix(phi_from(c), c.max_dim);
  if (labels != nullptr)
    *labels = m.labels;
  return std::move(m.entries);
}

void add_symbol_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--symbol", c.symbol_file, "Symbol JSON file");
  sub->add_option("--linear", c.linear, "Linear symbol coefficients, e.g. 1,0,2i");
  sub->add_option("--d", c.d, "Normalized linear symbol on d variables");
}

void add_method_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--method", c.method, "L1 estimator: grid or mc")->check(CLI::IsMember({"grid", "mc"}));
  sub->add_option("--samples", c.samples, "Monte Carlo sample count");
  sub->add_option("--seed", c.seed, "Monte Carlo seed");
  sub->add_option("--tol", c.tol, "Grid relative convergence tolerance");
  sub->add_option("--threads", c.threads, "Worker threads (0 = all cores, 1 = sequential)");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicative Hankel forms on the polytorus"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--output", c.output, "Write records to this file instead of stdout");
  app.add_option("--max-dim", c.max_dim, "Hankel matrix dimension cap");

  auto* pzero = app.add_subcommand("pzero", "Critical exponent p0");

  auto* lift = app.add_subcommand("lift", "Integer <-> multi-index via prime factorization");
  auto* lift_n = lift->add_option("--n", c.n, "Positive integer to factor");
  auto* lift_e = lift->add_option("--exponents", c.exponents, "Comma-separated exponents to label");
  lift_n->excludes(lift_e);

  auto* matrix = app.add_subcommand("matrix", "Finite Hankel matrix of a symbol");
  add_symbol_options(matrix, c);
  matrix->add_option("--csv", c.csv_out, "Export entries as CSV");
  matrix->add_option("--labels", c.labels_out, "Export row/column labels");

  auto* svd = app.add_subcommand("svd", "Singular values");
  add_symbol_options(svd, c);
  svd->add_option("--matrix", c.matrix_file, "Matrix CSV produced by 'matrix --csv'");

  auto* schatten = app.add_subcommand("schatten", "Schatten p-norm");
  add_symbol_options(schatten, c);
  schatten->add_option("--matrix", c.matrix_file, "Matrix CSV produced by 'matrix --csv'");
  schatten->add_option("--p", c.p, "Exponent p > 0 or 'inf'");

  auto* l1 = app.add_subcommand("l1", "L^q norm on the polytorus");
  add_symbol_options(l1, c);
  add_method_options(l1, c);
  l1->add_option("--q", c.q, "Exponent q >= 1");

  auto* ratio_cmd = app.add_subcommand("ratio", "Nehari ratio |<f,phi>| / (||H_phi||_Sp ||f||_1)");
  add_symbol_options(ratio_cmd, c);
  add_method_options(ratio_cmd, c);
  ratio_cmd->add_option("--f", c.f_file, "Test function JSON file (defaults to phi)");
  ratio_cmd->add_option("--f-linear", c.f_linear, "Linear test function coefficients");
  ratio_cmd->add_option("--p", c.p, "Exponent p > 0 or 'inf'");

  auto* amplify_cmd = app.add_subcommand("amplify", "m-fold disjoint-variable products");
  add_symbol_options(amplify_cmd, c);
  add_method_options(amplify_cmd, c);
  amplify_cmd->add_option("--f", c.f_file, "Test function JSON file (defaults to phi)");
  amplify_cmd->add_option("--f-linear", c.f_linear, "Linear test function coefficients");
  amplify_cmd->add_option("--m", c.m, "Number of copies")->check(CLI::PositiveNumber);
  auto* amplify_p = amplify_cmd->add_option("--p", c.p, "Also report the ratio identity at this p");

  auto* scan = app.add_subcommand("scan", "Counterexample scan over normalized linear symbols");
  add_method_options(scan, c);
  scan->add_option("--p", c.p, "Exponent p > 0 or 'inf'")->required();
  scan->add_option("--d-max", c.d_max, "Largest d")->check(CLI::PositiveNumber);
  scan->add_flag("--stop-at-first", c.stop_at_first, "Stop at the first d with ratio > 1");

  auto* maximize = app.add_subcommand("maximize", "Maximize the ratio over linear pairs");
  maximize->add_option("--d", c.d, "Number of variables (1..3)")->required();
  maximize->add_option("--p", c.p, "Exponent p > 0 or 'inf'")->required();
  maximize->add_option("--restarts", c.restarts, "Random restarts");
  maximize->add_option("--iters", c.iters, "Simplex iterations per restart");
  maximize->add_option("--seed", c.seed, "Seed for restart points");
  maximize->add_option("--tol", c.tol, "Grid relative convergence tolerance");

  auto* thm1 = app.add_subcommand("verify-thm1", "Normalized linear construction: spectrum, norm and ratio");
  add_method_options(thm1, c);
  thm1->add_option("--d", c.d, "Number of variables")->required();
  thm1->add_option("--p", c.p, "Exponent p > 0 or 'inf'")->required();

  auto* thm2 = app.add_subcommand("verify-thm2", "Inequality chain for linear phi = a.z, f = b.z, p <= p0");
  add_method_options(thm2, c);
  thm2->add_option("--a", c.a, "Coefficients of phi")->required();
  thm2->add_option("--b", c.b, "Coefficients of f")->required();
  thm2->add_option("--p", c.p, "Exponent p <= p0")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  std::ostringstream buf;
  auto emit = [&buf](const Record& r) { buf << io::dump(r) << '\n'; };

  try {
    if (pzero->parsed()) {
      const double p0 = p_zero();
      Record r;
      r["p0"] = p0;
      r["steinhaus_identity"] = std::pow(2.0, 1.0 / p0) * std::sqrt(std::numbers::pi) / 2.0;
      emit(r);
    } else if (lift->parsed()) {
      Record r;
      if (lift_n->count() > 0) {
        const MultiIndex k = factorize(c.n);
        r["n"] = c.n;
        r["exponents"] = exponents_of(k);
      } else if (lift_e->count() > 0) {
        std::vector<std::uint32_t> e;
        std::stringstream ss(c.exponents);
        for (std::string tok; std::getline(ss, tok, ',');) {
          const long long v = std::stoll(tok);
          if (v < 0)
            throw std::invalid_argument("exponents must be nonnegative");
          e.push_back(static_cast<std::uint32_t>(v));
        }
        const MultiIndex k(std::move(e));
        r["exponents"] = exponents_of(k);
        r["n"] = label(k);
      } else {
        throw std::invalid_argument("lift needs --n or --exponents");
      }
      emit(r);
    } else if (matrix->parsed()) {
      const HankelMatrix m = build_matrix(phi_from(c), c.max_dim);
      if (!c.csv_out.empty()) {
        std::ofstream f(c.csv_out);
        io::write_matrix_csv(f, m.entries);
        if (!f)
          throw std::runtime_error("cannot write '" + c.csv_out + "'");
      }
      if (!c.labels_out.empty()) {
        std::ofstream f(c.labels_out);
        io::write_labels(f, m.labels);
        if (!f)
          throw std::runtime_error("cannot write '" + c.labels_out + "'");
      }
      Record r;
      r["dim"] = m.dim();
      r["labels"] = labels_record(m.labels);
      if (c.csv_out.empty()) {
        Record rows = Record::array();
        for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
          Record row = Record::array();
          for (Eigen::Index j = 0; j < m.entries.cols(); ++j)
            row.push_back(io::format_complex(m.entries(i, j)));
          rows.push_back(std::move(row));
        }
        r["entries"] = std::move(rows);
      } else {
        r["csv"] = c.csv_out;
      }
      emit(r);
    } else if (svd->parsed()) {
      std::vector<MultiIndex> labels;
      const SingularSpectrum s = singular_values(matrix_from(c, &labels));
      Record r;
      r["dim"] = s.values.size();
      r["rank"] = s.rank();
      r["singular_values"] = spectrum_record(s);
      emit(r);
    } else if (schatten->parsed()) {
      const double p = parse_p(c.p);
      const SingularSpectrum s = singular_values(matrix_from(c, nullptr));
      Record r;
      r["p"] = p;
      r["schatten"] = schatten_norm(s, p);
      r["singular_values"] = spectrum_record(s);
      emit(r);
    } else if (l1->parsed()) {
      const Symbol f = phi_from(c);
      const RatioOptions o = ratio_options(c);
      const NormEstimate e =
          o.method == Method::grid ? norm_grid(f, c.q, o.grid) : norm_mc(f, c.q, c.samples, c.seed, o.mc);
      Record r = estimate_record(e);
      r["q"] = c.q;
      emit(r);
    } else if (ratio_cmd->parsed()) {
      const Symbol phi = phi_from(c);
      const Symbol f = f_from(c, phi);
      const RatioOptions o = ratio_options(c);
      emit(ratio_record(ratio(f, phi, parse_p(c.p), o), o));
    } else if (amplify_cmd->parsed()) {
      const Symbol phi = phi_from(c);
      const Symbol f = f_from(c, phi);
      const auto [big_f, big_phi] = amplify(f, phi, c.m);
      Record r;
      r["m"] = c.m;
      r["F"] = io::symbol_to_json(big_f);
      r["Phi"] = io::symbol_to_json(big_phi);
      r["inner_abs"] = std::abs(inner(big_f, big_phi));
      r["base_inner_abs_pow_m"] = std::pow(std::abs(inner(f, phi)), static_cast<double>(c.m));
      if (amplify_p->count() > 0) {
        const RatioOptions o = ratio_options(c);
        const RatioReport base = ratio(f, phi, parse_p(c.p), o);
        r["base"] = ratio_record(base, o);
        r["amplified"] = ratio_record(amplified_report(base, c.m), o);
      }
      emit(r);
    } else if (scan->parsed()) {
      const RatioOptions o = ratio_options(c);
      const ScanResult s = counterexample_scan(parse_p(c.p), c.d_max, o, c.stop_at_first);
      for (const auto& rec : s.records)
        emit(ratio_record(rec, o));
      Record summary;
      summary["p"] = parse_p(c.p);
      summary["d_max"] = c.d_max;
      summary["minimal_d"] = s.minimal_d ? Record(*s.minimal_d) : Record(nullptr);
      emit(summary);
    } else if (maximize->parsed()) {
      SearchOptions so;
      so.grid.tol = c.tol;
      const SearchResult s = maximize_ratio_linear(c.d, parse_p(c.p), c.restarts, c.iters, c.seed, so);
      auto vec = [](const std::vector<complex>& v) {
        Record out = Record::array();
        for (const auto& z : v)
          out.push_back(Record::array({z.real(), z.imag()}));
        return out;
      };
      Record r;
      r["d"] = c.d;
      r["p"] = s.p;
      r["best_ratio"] = s.best_ratio;
      r["a"] = vec(s.a);
      r["b"] = vec(s.b);
      r["evaluations"] = s.evaluations;
      r["restart"] = s.restart;
      r["seed"] = s.seed;
      emit(r);
    } else if (thm1->parsed()) {
      const RatioOptions o = ratio_options(c);
      const Theorem1Report t = verify_theorem1(c.d, parse_p(c.p), o);
      Record r = ratio_record(t.ratio, o);
      r["singular_values"] = spectrum_record(t.spectrum);
      r["spectrum_error"] = t.spectrum_error;
      r["spectrum_ok"] = t.spectrum_ok;
      r["expected_schatten"] = t.expected_schatten;
      r["schatten_ok"] = t.schatten_ok;
      emit(r);
    } else if (thm2->parsed()) {
      const auto a = io::parse_complex_list(c.a);
      const auto b = io::parse_complex_list(c.b);
      const Theorem2Report t = verify_theorem2(a, b, parse_p(c.p), ratio_options(c));
      Record r;
      r["p"] = t.p;
      r["norm_a"] = t.norm_a;
      r["norm_b"] = t.norm_b;
      r["l1"] = t.l1;
      r["schatten"] = t.schatten;
      r["lhs"] = t.lhs;
      r["khintchine_bound"] = t.khintchine_bound;
      r["cauchy_schwarz"] = t.cauchy_schwarz;
      r["inner_abs"] = t.inner_abs;
      r["holds"] = t.holds();
      emit(r);
    }
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_computation;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_computation;
  }

  if (c.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(c.output);
    f << buf.str();
    if (!f) {
      err << "error: cannot write '" << c.output << "'\n";
      return exit_computation;
    }
  }
  return exit_ok;
}

} // namespace polyhankel::cli
