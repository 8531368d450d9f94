#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "holoforms/errors.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/identities.hpp"
#include "holoforms/numerics.hpp"
#include "holoforms/potential.hpp"
#include "holoforms/structures.hpp"
#include "holoforms/suites.hpp"

using namespace holoforms;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Thrown for bad user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_table(const std::vector<VerificationReport>& reports) {
  std::size_t width = 10;
  for (const auto& r : reports) width = std::max(width, r.suite.size() + r.id.size() + 1);
  std::cerr << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::setw(14) << "status"
            << "trials\n";
  int failed = 0;
  for (const auto& r : reports) {
    std::cerr << std::setw(static_cast<int>(width) + 2) << (r.suite + "/" + r.id) << std::setw(14)
              << status_name(r.status) << r.trials << "\n";
    if (!r.passed()) ++failed;
  }
  std::cerr << reports.size() << " checks, " << failed << " failed\n";
}

int emit(std::vector<VerificationReport> reports, const std::string& json_path, bool timing) {
  if (!timing) {
    for (auto& r : reports) r.elapsed_ms = 0;
  }
  std::ofstream file;
  if (!json_path.empty()) {
    file.open(json_path);
    if (!file) throw UsageError("cannot open " + json_path);
  }
  std::ostream& out = json_path.empty() ? std::cout : file;
  bool ok = true;
  for (const auto& r : reports) {
    out << to_json_line(r) << "\n";
    ok = ok && r.passed();
  }
  print_table(reports);
  return ok ? 0 : kExitFail;
}

StructureDescriptor structure_arg(const std::string& text) {
  try {
    return StructureDescriptor::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_decompose(const std::string& form_text, const std::string& structure) {
  const StructureDescriptor s = structure_arg(structure);
  if (!has_type_operator(s) || s.kind() == StructureKind::Kaehler) {
    throw UsageError("decompose needs --structure g2 or spin7");
  }
  const DifferentialForm a = parse_form(form_text, s.dim(), 2);
  const auto [a7, rest] = project2(s, a);
  const auto& spec = type_spectrum(s);
  std::cout << "a7: " << format_form(a7) << "\n";
  std::cout << "a_rest: " << format_form(rest) << "\n";
  for (const auto& c : spec.components) {
    const auto& part = c.multiplicity == 7 ? a7 : rest;
    const auto residual = type_operator(s, part) - c.eigenvalue * part;
    std::cout << "residual_" << c.label << ": " << format_form(residual) << "\n";
  }
  std::cout << "sum_residual: " << format_form(a7 + rest - a) << "\n";
  return 0;
}

int cmd_potential(const std::string& f_text, const std::string& structure) {
  const StructureDescriptor s = structure_arg(structure);
  const Polynomial f = parse_polynomial(f_text, s.dim());
  const PotentialReport p = perturbation(s, f);
  std::cout << "structure: " << s.name() << "\n";
  std::cout << "f: " << to_string(f) << "\n";
  std::cout << "omega_prime: " << format_form(p.omega_prime) << "\n";
  if (p.convexity) {
    std::cout << "convexity: A=" << p.convexity->A << " B=" << p.convexity->B << " "
              << (p.convexity->certified ? "certified" : "sampled") << "\n";
  } else {
    std::cout << "convexity: none\n";
  }
  std::cout << "minus_dstar_df: " << to_string(p.laplacian_bound) << "\n";
  std::cout << "lie_chain: " << (p.lie_chain_holds ? "exact-pass" : "fail") << "\n";
  if (s.kind() != StructureKind::Kaehler) {
    const LaplacianChain c = laplacian_bound(s, f, p.omega_prime);
    std::cout << "laplacian_chain: " << c.constant << " * minus_dstar_df = "
              << to_string(c.constant * c.minus_dstar_df) << ", remainder = " << to_string(c.remainder)
              << ", residual = " << to_string(c.residual) << " "
              << (c.residual.is_zero() ? "exact-pass" : "fail") << "\n";
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact verification of identities for parallel forms"};
  app.require_subcommand(1);

  std::string suite = "all";
  int trials = 25;
  std::uint64_t seed = 0;
  std::string json_path;
  std::string fault = "none";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "all, identities, verbitsky, potentials, cone or hardy")
      ->capture_default_str();
  verify->add_option("--trials", trials, "Random trials per check")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", seed, "Seed for all randomness")->capture_default_str();
  verify->add_option("--json", json_path, "Write JSON lines to this file instead of stdout");
  verify->add_option("--fault", fault, "Fault injection: none, phi0 or cone")
      ->check(CLI::IsMember({"none", "phi0", "cone"}))
      ->capture_default_str();
  verify->add_flag("--timing", timing, "Record elapsed_ms in reports");

  std::string form_text;
  std::string structure = "g2";
  auto* decompose = app.add_subcommand("decompose", "Split a 2-form into its type components");
  decompose->add_option("form", form_text, "2-form, e.g. \"dx1^dx2\"")->required();
  decompose->add_option("--structure", structure, "g2 or spin7")->capture_default_str();

  std::string f_text;
  auto* potential = app.add_subcommand("potential", "Check a potential function");
  potential->add_option("f", f_text, "Polynomial in x1..xn")->required();
  potential->add_option("--structure", structure, "g2, spin7 or kaehler:<m>")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "List the identity catalog");

  std::string profiles_path;
  std::string hardy_json;
  bool hardy_timing = false;
  auto* hardy = app.add_subcommand("hardy", "Run the Hardy inequality profiles");
  hardy->add_option("--profiles", profiles_path, "Profile file (default: bundled suite)");
  hardy->add_option("--json", hardy_json, "Write JSON lines to this file instead of stdout");
  hardy->add_flag("--timing", hardy_timing, "Record elapsed_ms in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      SuiteOptions o;
      o.trials = trials;
      o.seed = seed;
      o.fault = fault == "phi0" ? Fault::CorruptPhi0 : fault == "cone" ? Fault::BrokenCone : Fault::None;
      std::vector<VerificationReport> reports;
      try {
        reports = run_suite(suite, o);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return emit(std::move(reports), json_path, timing);
    }
    if (*decompose) return cmd_decompose(form_text, structure);
    if (*potential) return cmd_potential(f_text, structure);
    if (*catalog) {
      for (const auto& e : identity_catalog()) {
        std::cout << e.id << "\t" << e.structure << "\t" << e.inputs << "\t" << e.anchor << "\n";
      }
      return 0;
    }
    if (*hardy) {
      std::string text = bundled_hardy_profiles();
      if (!profiles_path.empty()) {
        std::ifstream in(profiles_path);
        if (!in) throw UsageError("cannot open " + profiles_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      return emit(hardy_suite(parse_hardy_profiles(text)), hardy_json, hardy_timing);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
