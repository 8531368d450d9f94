// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Exact criteria have tolerance zero.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <sys/wait.h>

#include "holoforms/cone.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/identities.hpp"
#include "holoforms/numerics.hpp"
#include "holoforms/parallel.hpp"
#include "holoforms/potential.hpp"
#include "holoforms/random_forms.hpp"
#include "holoforms/structures.hpp"

using namespace holoforms;

namespace {

constexpr int kIdentityTrials = 100;
constexpr int kVerbitskyTrials = 50;
constexpr int kHarmonicTrials = 50;
constexpr int kChainTrials = 25;
constexpr int kProjectionTrials = 50;
constexpr int kRoundTrips = 1000;
constexpr double kQuadratureRelError = 1e-6;
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

std::vector<StructureDescriptor> verbitsky_structures() {
  return {StructureDescriptor::g2(), StructureDescriptor::spin7(), StructureDescriptor::kaehler(3)};
}

const VerificationReport* find(const std::vector<VerificationReport>& reports, const std::string& id) {
  for (const auto& r : reports) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

bool exact(const VerificationReport* r) { return r && r->status == Status::ExactPass; }

// Verbitsky reports are shared by criteria 4, 5 and 10.
const std::vector<VerificationReport>& verbitsky_reports(const StructureDescriptor& s) {
  static std::map<std::string, std::vector<VerificationReport>> cache;
  auto it = cache.find(s.name());
  if (it == cache.end()) it = cache.emplace(s.name(), verbitsky_suite(s, kVerbitskyTrials, kSeed)).first;
  return it->second;
}

Outcome model_constants() {
  Outcome o;
  const auto g2 = StructureDescriptor::g2();
  const auto spin7 = StructureDescriptor::spin7();
  const auto& phi = g2.omega();
  const auto& Phi = spin7.omega();
  o.require(pairing(phi, phi) == Polynomial(7, 7), "<phi0,phi0> = 7");
  o.require(wedge(phi, hodge_star(phi)) == Rational(7) * DifferentialForm::volume(7), "phi0 ^ *phi0 = 7 vol");
  o.require(pairing(Phi, Phi) == Polynomial(8, 14), "<Phi0,Phi0> = 14");
  o.require(hodge_star(Phi) == Phi, "*Phi0 = Phi0");
  o.require(ext_d(phi).is_zero(), "d phi0 = 0");
  o.require(ext_d(hodge_star(phi)).is_zero(), "d *phi0 = 0");
  o.require(ext_d(Phi).is_zero(), "d Phi0 = 0");
  o.note << " <phi0,phi0>=7 <Phi0,Phi0>=14 *Phi0=Phi0 closed";
  return o;
}

Outcome spectra() {
  Outcome o;
  struct Want {
    StructureDescriptor s;
    Rational top;
    int top_mult, rest_mult;
  };
  for (const auto& w : {Want{StructureDescriptor::g2(), 2, 7, 14}, Want{StructureDescriptor::spin7(), 3, 7, 21}}) {
    const auto spec = type_spectrum(w.s);
    bool ok = spec.components.size() == 2;
    for (const auto& c : spec.components) {
      ok = ok && ((c.eigenvalue == -1 && c.multiplicity == w.rest_mult) ||
                  (c.eigenvalue == w.top && c.multiplicity == w.top_mult));
      o.note << " " << w.s.name() << ":" << to_string(c.eigenvalue) << "x" << c.multiplicity;
    }
    o.require(ok, w.s.name() + " spectrum");
  }
  return o;
}

Outcome identities() {
  Outcome o;
  int count = 0;
  for (const auto& e : identity_catalog()) {
    const auto r = verify_identity(e.id, kIdentityTrials, kSeed);
    o.require(r.status == Status::ExactPass && r.trials == kIdentityTrials, e.id);
    ++count;
  }
  o.note << " " << count << " identities x " << kIdentityTrials << " trials";
  return o;
}

Outcome verbitsky_vanishing() {
  Outcome o;
  for (const auto& s : verbitsky_structures()) {
    const auto& reports = verbitsky_reports(s);
    for (const char* check : {"d_dC", "dstar_dC", "d_dCstar", "dstar_dCstar", "laplace_L"}) {
      o.require(exact(find(reports, s.name() + "." + check)), s.name() + "." + check);
    }
    // Both d_C expressions must agree literally.
    const auto* routes = find(reports, s.name() + ".dc_routes");
    o.require(exact(routes), s.name() + ".dc_routes");
    const auto* opposite = find(reports, s.name() + ".dc_routes_opposite");
    if (!exact(routes) && exact(opposite)) o.note << " " << s.name() << ": the two d_C expressions differ by sign";
  }
  o.note << " " << kVerbitskyTrials << " forms per degree";
  return o;
}

Outcome harmonic() {
  Outcome o;
  for (const auto& s : verbitsky_structures()) {
    const auto* r = find(verbitsky_reports(s), s.name() + ".harmonic_wedge");
    o.require(exact(r), s.name() + ".harmonic_wedge");
  }
  // Explicit batch of kHarmonicTrials forms with harmonic coefficients on G₂.
  const auto g2 = StructureDescriptor::g2();
  RandomSource rng(kSeed);
  for (int t = 0; t < kHarmonicTrials; ++t) {
    const auto a = random_harmonic_form(rng, 7, t % 8);
    o.require(laplacian(a).is_zero() && laplacian(wedge(a, g2.omega())).is_zero(), "harmonic trial");
  }
  o.note << " " << kHarmonicTrials << " harmonic forms";
  return o;
}

Outcome lie_chain() {
  Outcome o;
  for (const auto& s : verbitsky_structures()) {
    const auto r = check_lie_chain(s, std::nullopt, kChainTrials, kSeed);
    o.require(r.status == Status::ExactPass && r.trials == kChainTrials, r.id);
  }
  o.note << " " << kChainTrials << " potentials per structure";
  return o;
}

Outcome euclidean() {
  Outcome o;
  struct Case {
    StructureDescriptor s;
    int k;
  };
  for (const auto& c : {Case{StructureDescriptor::g2(), 6}, Case{StructureDescriptor::spin7(), 8},
                        Case{StructureDescriptor::kaehler(3), 4}}) {
    const Polynomial f = ratio(1, c.k) * radius_squared(c.s.dim());
    const auto p = perturbation(c.s, f);
    o.require(p.omega_prime.is_zero(), c.s.name() + " omega' = 0");
    if (c.s.kind() != StructureKind::Kaehler) {
      const auto chain = laplacian_bound(c.s, f, p.omega_prime);
      const Polynomial lhs = chain.constant * chain.minus_dstar_df;
      o.require(lhs == pairing(c.s.omega(), c.s.omega()), c.s.name() + " chain");
      o.note << " " << c.s.name() << ": " << to_string(chain.constant) << "*(-d*df)=" << to_string(lhs);
    }
  }
  return o;
}

Outcome convexity() {
  Outcome o;
  const auto c7 = convexity_constants(Rational(1, 6) * radius_squared(7));
  const auto c8 = convexity_constants(Rational(1, 8) * radius_squared(8));
  o.require(c7 && c7->certified && c7->A == 0 && c7->B == Rational(2, 3), "r^2/6");
  o.require(c8 && c8->certified && c8->A == 0 && c8->B == Rational(1, 2), "r^2/8");
  if (c7 && c8) {
    o.note << " r^2/6: (" << to_string(c7->A) << "," << to_string(c7->B) << ") r^2/8: (" << to_string(c8->A) << ","
           << to_string(c8->B) << ")";
  }
  return o;
}

Outcome cone() {
  Outcome o;
  o.require(verify_cone_potential(ConeCase::NearlyKaehler).status == Status::ExactPass, "nearly Kaehler cone");
  o.require(verify_cone_potential(ConeCase::NearlyParallelG2).status == Status::ExactPass, "nearly parallel G2 cone");
  const auto broken = verify_cone_potential(ConeCase::NearlyKaehler, broken_nearly_kaehler_link_text());
  bool nonzero = false;
  if (broken.counterexample) {
    for (const auto& [k, v] : *broken.counterexample) {
      if (k != "structure_form" && v != "0") nonzero = true;
    }
  }
  o.require(broken.status == Status::Fail && nonzero, "broken relation detected");
  o.note << " broken link fails with a nonzero residual";
  return o;
}

Outcome projections() {
  Outcome o;
  for (const auto& s : {StructureDescriptor::g2(), StructureDescriptor::spin7()}) {
    for (const char* check : {"laplace_P7", "laplace_Prest"}) {
      const auto* r = find(verbitsky_reports(s), s.name() + "." + check);
      o.require(exact(r) && r->trials == kProjectionTrials, s.name() + "." + check);
    }
  }
  o.note << " " << kProjectionTrials << " 2-forms per structure";
  return o;
}

Outcome hardy() {
  Outcome o;
  int per_dim[9] = {};
  for (const auto& row : parse_hardy_profiles(bundled_hardy_profiles())) {
    const auto h = hardy_constants_for(row.f, row.n);
    o.require(h.m == 1 && h.M == 1, row.name + " (m,M) = (1,1)");
    const auto res = hardy_check(row.f, h, row.u);
    o.require(res.margin > 0, row.name + " margin");
    o.require(res.relative_error <= kQuadratureRelError, row.name + " quadrature error");
    if (row.n == 7 || row.n == 8) ++per_dim[row.n];
    o.note << " " << row.name << ":" << res.margin;
  }
  o.require(per_dim[7] >= 3 && per_dim[8] >= 3, "three profiles per dimension");
  return o;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  FILE* pipe = popen((std::string(HOLOFORMS_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome parser_and_determinism() {
  Outcome o;
  RandomSource rng(kSeed);
  int ok = 0;
  for (int t = 0; t < kRoundTrips; ++t) {
    const int n = rng.uniform(1, 8);
    const auto a = random_form(rng, n, rng.uniform(0, n));
    const std::string text = format_form(a);
    const auto back = parse_form(text, n, a.degree());
    if (back == a && format_form(back) == text) ++ok;
  }
  o.require(ok == kRoundTrips, "round trip");
  const auto first = run_cli("verify --suite all --trials 5 --seed 42");
  const auto second = run_cli("verify --suite all --trials 5 --seed 42");
  o.require(!first.out.empty() && first.out == second.out && first.code == second.code, "CLI determinism");
  o.note << " " << ok << "/" << kRoundTrips << " round trips, JSON byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"model-form constants", model_constants},
      {"type-operator spectra", spectra},
      {"identity catalog", identities},
      {"vanishing supercommutators and d_C routes", verbitsky_vanishing},
      {"harmonic coefficients", harmonic},
      {"Lie derivative chain", lie_chain},
      {"Euclidean potentials", euclidean},
      {"convexity certificates", convexity},
      {"cone calculus", cone},
      {"Laplacian and 2-form projections", projections},
      {"Hardy margins", hardy},
      {"parser round trip and CLI determinism", parser_and_determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << index << ". " << name << " (" << secs << " s)" << o.note.str()
              << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
