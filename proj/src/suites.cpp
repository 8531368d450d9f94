#include "holoforms/suites.hpp"

#include <stdexcept>

#include "holoforms/cone.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/identities.hpp"
#include "holoforms/numerics.hpp"
#include "holoforms/parallel.hpp"
#include "holoforms/potential.hpp"
#include "holoforms/random_forms.hpp"
#include "holoforms/trials.hpp"

namespace holoforms {

namespace {

std::vector<StructureDescriptor> suite_structures() {
  return {StructureDescriptor::g2(), StructureDescriptor::spin7(), StructureDescriptor::kaehler(3)};
}

VerificationReport base(const StructureDescriptor& s, const std::string& check,
                        const std::string& anchor, int trials, std::uint64_t seed) {
  VerificationReport r;
  r.suite = "potentials";
  r.id = s.name() + "." + check;
  r.anchor = anchor;
  r.trials = trials;
  r.seed = seed;
  return r;
}

// f = r²/(2k) makes ∇f = r∂r/k, so 𝓛_∇f ω = ω by homogeneity.
Polynomial euclidean_potential(const StructureDescriptor& s) {
  return Rational(1, 2 * s.degree()) * radius_squared(s.dim());
}

std::vector<VerificationReport> potentials_suite(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& s : suite_structures()) {
    const Polynomial f = euclidean_potential(s);
    out.push_back(check_lie_chain(s, std::nullopt, o.trials, o.seed));

    {
      const Stopwatch clock;
      VerificationReport r = base(s, "euclidean", "omega' = omega - L_{grad f} omega = 0, f = r^2/(2k)", 1, 0);
      const PotentialReport p = perturbation(s, f);
      r.status = p.omega_prime.is_zero() ? Status::ExactPass : Status::Fail;
      r.details = {{"f", to_string(f)}, {"omega_prime", format_form(p.omega_prime)}};
      if (!p.omega_prime.is_zero()) r.counterexample = Fields{{"omega_prime", format_form(p.omega_prime)}};
      r.elapsed_ms = clock.elapsed_ms();
      out.push_back(std::move(r));
    }

    {
      const Stopwatch clock;
      VerificationReport r = base(s, "convexity", "|df|^2 - B f is a constant <= A", 1, 0);
      const auto c = convexity_constants(f);
      const bool ok = c && c->certified && certify_convexity(f, *c);
      r.status = ok ? Status::ExactPass : Status::Fail;
      if (c) r.details = {{"A", c->A.get_str()}, {"B", c->B.get_str()}};
      if (!ok) r.counterexample = Fields{{"f", to_string(f)}};
      r.elapsed_ms = clock.elapsed_ms();
      out.push_back(std::move(r));
    }

    if (s.kind() != StructureKind::Kaehler) {
      const Stopwatch clock;
      VerificationReport r = base(s, "laplacian_chain", "<w,w> = c (-d*df) + *(w' ^ *w)", 1, 0);
      const PotentialReport p = perturbation(s, f);
      const LaplacianChain ch = laplacian_bound(s, f, p.omega_prime);
      const Polynomial scaled = ch.constant * ch.minus_dstar_df;
      const bool ok = ch.residual.is_zero() && scaled == Polynomial(s.dim(), s.norm_squared());
      r.status = ok ? Status::ExactPass : Status::Fail;
      r.details = {{"constant", ch.constant.get_str()},
                   {"minus_dstar_df", to_string(ch.minus_dstar_df)},
                   {"scaled", to_string(scaled)}};
      if (!ok) r.counterexample = Fields{{"residual", to_string(ch.residual)}};
      r.elapsed_ms = clock.elapsed_ms();
      out.push_back(std::move(r));
    }

    {
      const Stopwatch clock;
      VerificationReport r = base(s, "linearity", "L_{grad(f+g)} omega = L_{grad f} omega + L_{grad g} omega",
                                  o.trials, o.seed);
      FormGenOptions opt;
      opt.max_poly_degree = 4;
      const auto outcome = run_trials(o.trials, o.seed, [&](int, RandomSource& rng) -> std::optional<Fields> {
        const Polynomial f1 = random_polynomial(rng, s.dim(), opt);
        const Polynomial f2 = random_polynomial(rng, s.dim(), opt);
        const auto lhs = perturbation(s, f1 + f2).lie_term;
        const auto rhs = perturbation(s, f1).lie_term + perturbation(s, f2).lie_term;
        if (lhs == rhs) return std::nullopt;
        return Fields{{"f1", to_string(f1)}, {"f2", to_string(f2)}};
      });
      r.status = outcome.failures == 0 ? Status::ExactPass : Status::Fail;
      r.counterexample = outcome.counterexample;
      r.details = {{"failures", std::to_string(outcome.failures)}};
      r.elapsed_ms = clock.elapsed_ms();
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "verbitsky", "potentials", "cone", "hardy"};
  return names;
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, o);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  std::vector<VerificationReport> out;
  if (name == "identities") {
    std::optional<StructureDescriptor> fixture;
    if (o.fault == Fault::CorruptPhi0) fixture = corrupted_g2_fixture();
    for (const auto& e : identity_catalog()) out.push_back(verify_identity(e.id, o.trials, o.seed, fixture));
  } else if (name == "verbitsky") {
    for (const auto& s : suite_structures()) {
      auto part = verbitsky_suite(s, o.trials, o.seed);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else if (name == "potentials") {
    out = potentials_suite(o);
  } else if (name == "cone") {
    out.push_back(verify_cone_potential(ConeCase::NearlyKaehler,
                             o.fault == Fault::BrokenCone ? broken_nearly_kaehler_link_text() : nullptr));
    out.push_back(verify_cone_potential(ConeCase::NearlyParallelG2));
  } else if (name == "hardy") {
    out = hardy_suite(parse_hardy_profiles(bundled_hardy_profiles()));
  } else {
    std::string known = "all";
    for (const auto& n : suite_names()) known += ", " + n;
    throw std::invalid_argument("unknown suite '" + name + "'; expected one of " + known);
  }
  return out;
}

}  // namespace holoforms
