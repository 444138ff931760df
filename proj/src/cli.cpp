#include "lagkit/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lagkit/constructor.hpp"
#include "lagkit/errors.hpp"
#include "lagkit/report.hpp"
#include "lagkit/verifier.hpp"

namespace lagkit {

namespace {

// Failure that maps straight to an exit code with a diagnostic.
struct Exit {
  int code;
  std::string message;
};

ImmersionSpec load_input(const std::string& input) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_regular_file(input, ec)) {
    std::ifstream in(input, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      ImmersionSpec spec = parse_spec(ss.str());
      spec.validate();
      return spec;
    } catch (const ParseError& e) {
      throw Exit{kExitUsage, input + ":" + e.what()};
    } catch (const Error& e) {
      throw Exit{kExitUsage, input + ": " + e.what()};
    }
  }
  if (in_catalog(input)) return catalog(input);
  throw Exit{kExitUsage, "no such file or catalog entry: " + input};
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Exit{kExitUsage, "cannot write " + path};
  f << text;
}

std::set<std::string> split_list(const std::string& list) {
  std::set<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

struct CheckFlags {
  int samples = 20;
  std::uint64_t seed = 42;
  double tol = Tolerances{}.jet;
  double tol_third = Tolerances{}.third;
  bool json = false;
  std::string out;
  std::string checks;
  std::string quadric;
};

void add_check_flags(CLI::App* cmd, CheckFlags& f, bool with_out) {
  cmd->add_option("--samples", f.samples, "Number of sample points")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Sampling seed")->capture_default_str();
  cmd->add_option("--tol", f.tol, "Tolerance for jet-exact identities")->capture_default_str();
  cmd->add_option("--tol-third", f.tol_third, "Tolerance for Gauss and Codazzi checks")
      ->capture_default_str();
  cmd->add_flag("--json", f.json, "Emit the JSON report");
  if (with_out) cmd->add_option("--out", f.out, "Write the report to this file");
  cmd->add_option("--checks", f.checks, "Comma-separated checks to report (default: all)");
  cmd->add_option("--quadric", f.quadric,
                  "Declare the ambient quadric <z,z> = 1/c as s:c (s must match the spec)");
}

std::optional<AmbientQuadric> parse_quadric(const std::string& text, const ImmersionSpec& spec) {
  if (text.empty()) return std::nullopt;
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Exit{kExitUsage, "--quadric expects s:c"};
  int s = 0;
  double c = 0.0;
  try {
    std::size_t used = 0;
    s = std::stoi(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("s");
    const std::string rest = text.substr(colon + 1);
    c = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("c");
  } catch (const std::logic_error&) {
    throw Exit{kExitUsage, "--quadric expects s:c, got '" + text + "'"};
  }
  if (s != spec.signature.s()) {
    throw Exit{kExitUsage, "--quadric index " + std::to_string(s) +
                               " does not match the spec signature index " +
                               std::to_string(spec.signature.s())};
  }
  try {
    return AmbientQuadric::from_curvature(c);
  } catch (const Error& e) {
    throw Exit{kExitUsage, std::string("--quadric: ") + e.what()};
  }
}

int run_check(const ImmersionSpec& spec, const CheckFlags& f, std::ostream& out) {
  if (f.samples < 1) throw Exit{kExitUsage, "--samples must be >= 1"};
  VerifierConfig cfg;
  cfg.sampling.num_points = f.samples;
  cfg.sampling.seed = f.seed;
  cfg.tol.jet = f.tol;
  cfg.tol.third = f.tol_third;
  if (!f.checks.empty()) cfg.only = split_list(f.checks);
  const auto quadric = parse_quadric(f.quadric, spec);
  const CheckReport report = run_suite(spec, cfg, quadric);
  write_output(f.json ? report_json(report) : report_text(report), f.out, out);
  return report.all_passed() ? kExitPass : kExitCheckFailure;
}

std::string catalog_text() {
  std::ostringstream os;
  for (const auto& e : catalog_entries()) {
    const ImmersionSpec spec = catalog(e.name);
    os << e.name << "  C^" << spec.signature.n() << "_" << spec.signature.s() << "  "
       << spec.num_params() << " params\n    " << e.summary << "\n    pass:";
    for (const auto& c : e.expected_pass) os << " " << c;
    if (!e.expected_fail.empty()) {
      os << "\n    fail:";
      for (const auto& c : e.expected_fail) os << " " << c;
    }
    os << "\n";
  }
  return os.str();
}

void export_catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (const auto& e : catalog_entries()) {
    const fs::path path = fs::path(dir) / (e.name + ".imm");
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Exit{kExitUsage, "cannot write " + path.string()};
    f << serialize_spec(catalog(e.name));
  }
}

std::string crosscheck_text(const CrosscheckResult& r) {
  std::ostringstream os;
  char buf[160];
  for (const auto& o : r.orders) {
    std::snprintf(buf, sizeof buf, "order %d  step %.1e  max deviation %.3e  tol %.1e  %s\n",
                  o.order, o.step, o.max_deviation, o.tolerance, o.pass ? "PASS" : "FAIL");
    os << buf;
  }
  os << r.points_evaluated << " points\n";
  return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify Lagrangian and Legendrian immersions into flat complex space"};
  app.name("lagkit");
  app.require_subcommand(1);

  std::string input;
  CheckFlags check_flags;
  auto* check = app.add_subcommand("check", "Run the verifier suite on a spec file or catalog name");
  check->add_option("input", input, "DSL file or catalog entry")->required();
  add_check_flags(check, check_flags, true);

  std::string t_name = "t";
  std::string construct_out;
  bool verify = false;
  CheckFlags verify_flags;
  auto* construct = app.add_subcommand("construct", "Build exp(i*t) * psi from a Legendrian psi");
  construct->add_option("input", input, "DSL file or catalog entry")->required();
  construct->add_option("--t-name", t_name, "Name of the circle parameter")->capture_default_str();
  construct->add_option("--out", construct_out, "Write the constructed spec to this file");
  construct->add_flag("--verify", verify, "Run the verifier suite on the result");
  add_check_flags(construct, verify_flags, false);

  CrosscheckConfig cross;
  double step = 0.0;
  int points = 20;
  std::uint64_t cross_seed = 42;
  bool cross_json = false;
  auto* crosscheck_cmd =
      app.add_subcommand("crosscheck", "Compare jet derivatives against finite differences");
  crosscheck_cmd->add_option("input", input, "DSL file or catalog entry")->required();
  crosscheck_cmd->add_option("--order", cross.max_order, "Highest derivative order (1-3)")
      ->capture_default_str()
      ->check(CLI::Range(1, 3));
  auto* step_opt = crosscheck_cmd->add_option(
      "--step", step, "Finite-difference step for the highest order (default 1e-4, or 1e-2 for order 3)");
  crosscheck_cmd->add_option("--points", points, "Number of sample points")->capture_default_str();
  crosscheck_cmd->add_option("--seed", cross_seed, "Sampling seed")->capture_default_str();
  crosscheck_cmd->add_flag("--json", cross_json, "Emit JSON");

  bool catalog_as_json = false;
  std::string export_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in example immersions");
  catalog_cmd->add_flag("--json", catalog_as_json, "Emit JSON");
  catalog_cmd->add_option("--export", export_dir, "Write every entry as <name>.imm into a directory");

  std::vector<std::string> argv_store{"lagkit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(load_input(input), check_flags, out);

    if (construct->parsed()) {
      const ImmersionSpec psi = load_input(input);
      ImmersionSpec product;
      try {
        product = circle_product(psi, t_name);
      } catch (const Error& e) {
        throw Exit{kExitUsage, e.what()};
      }
      write_output(serialize_spec(product), construct_out, out);
      if (!verify) return kExitPass;
      return run_check(product, verify_flags, out);
    }

    if (crosscheck_cmd->parsed()) {
      const ImmersionSpec spec = load_input(input);
      if (points < 1) throw Exit{kExitUsage, "--points must be >= 1"};
      if (*step_opt) cross.step = step;
      cross.sampling.num_points = points;
      cross.sampling.seed = cross_seed;
      CrosscheckResult r;
      try {
        r = crosscheck(spec, cross);
      } catch (const UsageError& e) {
        throw Exit{kExitUsage, e.what()};
      }
      out << (cross_json ? crosscheck_json(r) : crosscheck_text(r));
      return r.pass() ? kExitPass : kExitCheckFailure;
    }

    if (catalog_cmd->parsed()) {
      if (!export_dir.empty()) {
        export_catalog(export_dir);
        return kExitPass;
      }
      out << (catalog_as_json ? catalog_json() : catalog_text());
      return kExitPass;
    }
  } catch (const Exit& e) {
    err << "lagkit: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "lagkit: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}

}  // namespace lagkit
