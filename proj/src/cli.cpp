#include "capkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "capkit/capacity.hpp"
#include "capkit/choquet.hpp"
#include "capkit/error.hpp"
#include "capkit/io.hpp"
#include "capkit/proof_kit.hpp"
#include "capkit/verifier.hpp"

namespace capkit {

namespace {

enum class Format { Text, Machine };

struct Globals {
  bool quiet = false;
  Format format = Format::Text;
};

/// Error carrying its own exit status.
struct Exit {
  int code;
  std::string message;
};

Capacity load_capacity(const std::string& path) {
  try {
    return parse_capacity(read_file(path));
  } catch (const std::exception& e) {
    throw Exit{kExitUsage, path + ": " + e.what()};
  }
}

PointFunction load_function(const std::string& path) {
  try {
    return parse_function(read_file(path));
  } catch (const std::exception& e) {
    throw Exit{kExitUsage, path + ": " + e.what()};
  }
}

IntFunction load_int_function(const std::string& path) {
  const PointFunction x = load_function(path);
  try {
    return IntFunction::from_point_function(x);
  } catch (const std::exception& e) {
    throw Exit{kExitUsage, path + ": expected a nonnegative integer function: " + e.what()};
  }
}

void require_size(const Capacity& c, std::size_t size, const std::string& path) {
  if (size != static_cast<std::size_t>(c.size())) {
    throw Exit{kExitUsage, path + ": DimensionMismatch: function of size " + std::to_string(size) +
                               ", capacity on " + std::to_string(c.size()) + " elements"};
  }
}

std::string render_violation(const ViolationReport& report, Format format) {
  return format == Format::Machine ? render_machine(report) : render_text(report);
}

int cmd_check(const Globals& g, const std::string& path, std::ostream& out) {
  const Capacity c = load_capacity(path);
  const auto violation = check_submodular_exhaustive(c);
  if (check_submodular_local(c).has_value() != violation.has_value()) {
    throw Exit{kExitInternal, "exhaustive and pairwise submodularity checks disagree"};
  }
  if (!g.quiet) {
    if (!violation) {
      out << "submodular\n";
    } else {
      out << (g.format == Format::Machine ? "not_submodular\n" : "not submodular\n")
          << render_violation(*violation, g.format);
    }
  }
  return violation ? kExitNegative : kExitOk;
}

int cmd_integrate(const Globals& g, const std::string& capacity_path, const std::string& function_path,
                  std::ostream& out) {
  const Capacity c = load_capacity(capacity_path);
  const PointFunction x = load_function(function_path);
  require_size(c, x.size(), function_path);
  const Rational value = choquet_layer_cake(c, x);
  const Rational check = choquet_sorted(c, x);
  if (value != check) {
    throw Exit{kExitInternal, "layer-cake value " + to_string(value) + " != sorted-levels value " +
                                  to_string(check)};
  }
  if (!g.quiet) out << to_string(value) << "\n";
  return kExitOk;
}

int cmd_prove(const Globals& g, const std::string& capacity_path, const std::string& x_path,
              const std::string& y_path, std::ostream& out) {
  const Capacity c = load_capacity(capacity_path);
  const IntFunction x = load_int_function(x_path);
  const IntFunction y = load_int_function(y_path);
  require_size(c, x.size(), x_path);
  require_size(c, y.size(), y_path);

  if (auto counterexample = indicator_counterexample(c)) {
    if (!g.quiet) {
      out << "not submodular: indicator counterexample A = " << to_string(counterexample->a)
          << ", B = " << to_string(counterexample->b) << "\n"
          << render_violation(counterexample->report, g.format);
    }
    return kExitNegative;
  }

  const InductionCertificate certificate = induction_certificate(c, x, y);
  if (!g.quiet) out << render(certificate);
  if (!verify_certificate(certificate)) throw Exit{kExitInternal, "certificate failed verification"};
  return kExitOk;
}

int cmd_scan(const Globals& g, const ScanOptions& options, std::ostream& out) {
  const ScanReport report = equivalence_scan(options);
  if (!g.quiet) out << (g.format == Format::Machine ? render_machine(report) : render_text(report));
  return report.disagreements.empty() ? kExitOk : kExitInternal;
}

int cmd_lemma(const Globals& g, std::int64_t k, std::int64_t bound, std::ostream& out) {
  const LemmaSets sets = lemma_sets(k, bound);
  const bool ok = check_lemma_identities(k, bound);
  if (!g.quiet) {
    for (std::int64_t y = bound; y >= 0; --y) {
      std::string row;
      for (std::int64_t x = 0; x <= bound; ++x) {
        const bool in_a = sets.a_tilde.contains({x, y});
        const bool in_b = sets.b_tilde.contains({x, y});
        row += in_a && in_b ? '@' : in_a ? 'o' : in_b ? '^' : '.';
      }
      out << row << "\n";
    }
    out << "verdict: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kExitOk : kExitNegative;
}

int cmd_generate(const Globals& g, int n, const std::string& kind, std::uint64_t seed,
                 const std::string& out_path, std::ostream& out) {
  const Capacity c = kind == "submodular" ? random_submodular_capacity(n, seed)
                                          : random_monotone_capacity(n, seed);
  const std::string text = serialize(c);
  if (parse_capacity(text) != c) throw Exit{kExitInternal, "generated capacity does not round-trip"};
  if (out_path.empty()) {
    if (!g.quiet) out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!(file << text)) throw Exit{kExitUsage, "cannot write '" + out_path + "'"};
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Choquet integrals and submodularity checks on finite ground sets", "capkit"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Globals g;
  app.add_flag("--quiet", g.quiet, "Suppress normal output; rely on the exit status");
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"machine", Format::Machine}}));

  std::string capacity_path, function_path, x_path, y_path;

  auto* check = app.add_subcommand("check", "Decide submodularity of a capacity file");
  check->add_option("capacity", capacity_path)->required();

  auto* integrate = app.add_subcommand("integrate", "Choquet integral of a function");
  integrate->add_option("capacity", capacity_path)->required();
  integrate->add_option("function", function_path)->required();

  auto* prove = app.add_subcommand("prove", "Print a subadditivity certificate for integer X, Y");
  prove->add_option("capacity", capacity_path)->required();
  prove->add_option("x", x_path)->required();
  prove->add_option("y", y_path)->required();

  ScanOptions scan_options;
  auto* scan = app.add_subcommand("scan", "Randomized check of both directions of the equivalence");
  scan->add_option("--n", scan_options.n, "Ground-set size")->required();
  scan->add_option("--count", scan_options.count, "Number of capacities")->capture_default_str();
  scan->add_option("--max-value", scan_options.max_value, "Largest function value")
      ->capture_default_str();
  scan->add_option("--seed", scan_options.seed)->capture_default_str();
  scan->add_option("--budget", scan_options.budget, "Function pairs allowed per capacity")
      ->capture_default_str();
  scan->add_option("--samples", scan_options.samples,
                   "Sample this many pairs when the range exceeds the budget (0: fail instead)")
      ->capture_default_str();

  std::int64_t lemma_k = 0, lemma_bound = 0;
  auto* lemma = app.add_subcommand("lemma", "Render the lattice sets and check their identities");
  lemma->add_option("--k", lemma_k)->required();
  lemma->add_option("--bound", lemma_bound)->required();

  int generate_n = 0;
  std::string generate_kind = "monotone", generate_out;
  std::uint64_t generate_seed = 0;
  auto* generate = app.add_subcommand("generate", "Write a random capacity file");
  generate->add_option("--n", generate_n)->required();
  generate->add_option("--kind", generate_kind)
      ->check(CLI::IsMember({"monotone", "submodular"}))
      ->capture_default_str();
  generate->add_option("--seed", generate_seed)->capture_default_str();
  generate->add_option("--out", generate_out, "Output path (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(g, capacity_path, out);
    if (*integrate) return cmd_integrate(g, capacity_path, function_path, out);
    if (*prove) return cmd_prove(g, capacity_path, x_path, y_path, out);
    if (*scan) return cmd_scan(g, scan_options, out);
    if (*lemma) return cmd_lemma(g, lemma_k, lemma_bound, out);
    if (*generate) return cmd_generate(g, generate_n, generate_kind, generate_seed, generate_out, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace capkit
