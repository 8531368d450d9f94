#include "holoforms/parallel.hpp"

#include <stdexcept>

#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/random_forms.hpp"
#include "holoforms/trials.hpp"

namespace holoforms {

DifferentialForm GradedOperator::operator()(const DifferentialForm& a) const {
  DifferentialForm out = action(a);
  if (out.degree() != a.degree() + shift) {
    throw std::logic_error("operator " + name + " produced degree " + std::to_string(out.degree()) +
                           " from degree " + std::to_string(a.degree()));
  }
  return out;
}

DifferentialForm supercommutator(const GradedOperator& p, const GradedOperator& q,
                                 const DifferentialForm& a) {
  const DifferentialForm pq = p(q(a));
  const DifferentialForm qp = q(p(a));
  return (p.parity * q.parity) % 2 == 0 ? pq - qp : pq + qp;
}

DifferentialForm structure_op_C(const StructureDescriptor& s, const DifferentialForm& a) {
  return apply_table(s.structure_table(), a, a.degree() + s.degree() - 2);
}

DifferentialForm lefschetz_L(const StructureDescriptor& s, const DifferentialForm& a) {
  return apply_table(s.lefschetz_table(), a, a.degree() + s.degree());
}

DifferentialForm adjoint_Lambda(const StructureDescriptor& s, const DifferentialForm& a) {
  return apply_table(s.adjoint_table(), a, a.degree() - s.degree());
}

namespace {

DifferentialForm graded_difference(const DifferentialForm& x, const DifferentialForm& y, int parity) {
  return parity == 0 ? x - y : x + y;
}

}  // namespace

DifferentialForm d_C(const StructureDescriptor& s, const DifferentialForm& a) {
  return graded_difference(lefschetz_L(s, codifferential(a)), codifferential(lefschetz_L(s, a)),
                           s.parity());
}

DifferentialForm d_C_via_structure(const StructureDescriptor& s, const DifferentialForm& a) {
  return graded_difference(ext_d(structure_op_C(s, a)), structure_op_C(s, ext_d(a)), s.parity());
}

DifferentialForm d_C_star(const StructureDescriptor& s, const DifferentialForm& a) {
  return graded_difference(adjoint_Lambda(s, ext_d(a)), ext_d(adjoint_Lambda(s, a)), s.parity());
}

GradedOperator op_d(int) { return {"d", 1, 1, [](const DifferentialForm& a) { return ext_d(a); }}; }

GradedOperator op_codifferential(int) {
  return {"d*", -1, 1, [](const DifferentialForm& a) { return codifferential(a); }};
}

GradedOperator op_laplacian(int) {
  return {"Delta", 0, 0, [](const DifferentialForm& a) { return laplacian(a); }};
}

GradedOperator op_C(const StructureDescriptor& s) {
  return {"C", s.degree() - 2, s.parity(), [s](const DifferentialForm& a) { return structure_op_C(s, a); }};
}

GradedOperator op_L(const StructureDescriptor& s) {
  return {"L", s.degree(), s.parity(), [s](const DifferentialForm& a) { return lefschetz_L(s, a); }};
}

GradedOperator op_Lambda(const StructureDescriptor& s) {
  return {"Lambda", -s.degree(), s.parity(), [s](const DifferentialForm& a) { return adjoint_Lambda(s, a); }};
}

GradedOperator op_d_C(const StructureDescriptor& s) {
  return {"d_C", s.degree() - 1, 1 - s.parity(), [s](const DifferentialForm& a) { return d_C(s, a); }};
}

GradedOperator op_d_C_via_structure(const StructureDescriptor& s) {
  return {"{d,C}", s.degree() - 1, 1 - s.parity(),
          [s](const DifferentialForm& a) { return d_C_via_structure(s, a); }};
}

GradedOperator op_d_C_star(const StructureDescriptor& s) {
  return {"d_C*", 1 - s.degree(), 1 - s.parity(), [s](const DifferentialForm& a) { return d_C_star(s, a); }};
}

namespace {

struct SuiteCheck {
  std::string id;
  std::string anchor;
  bool harmonic_input;
  // −1 runs every degree 0..n; otherwise only this degree.
  int only_degree;
  // Residual for input a; zero means the identity holds on a.
  std::function<DifferentialForm(const DifferentialForm&)> residual;
};

std::vector<SuiteCheck> suite_checks(const StructureDescriptor& s) {
  const int n = s.dim();
  const auto d = op_d(n);
  const auto ds = op_codifferential(n);
  const auto dc = op_d_C(s);
  const auto dcs = op_d_C_star(s);
  const auto L = op_L(s);
  const auto Lam = op_Lambda(s);
  const auto lap = op_laplacian(n);
  auto commutator = [](GradedOperator p, GradedOperator q) {
    return [p, q](const DifferentialForm& a) { return supercommutator(p, q, a); };
  };
  std::vector<SuiteCheck> checks{
      {"d_dC", "{d, d_C} = 0", false, -1, commutator(d, dc)},
      {"dstar_dC", "{d*, d_C} = 0", false, -1, commutator(ds, dc)},
      {"d_dCstar", "{d, d_C*} = 0", false, -1, commutator(d, dcs)},
      {"dstar_dCstar", "{d*, d_C*} = 0", false, -1, commutator(ds, dcs)},
      {"laplace_L", "Delta L - L Delta = 0", false, -1, commutator(lap, L)},
      {"laplace_Lambda", "Delta Lambda - Lambda Delta = 0", false, -1, commutator(lap, Lam)},
      {"harmonic_wedge", "Delta a = 0 implies Delta(a^omega) = 0", true, -1,
       [s](const DifferentialForm& a) {
         // Both Δa and Δ(a∧ω) must vanish; report whichever does not.
         const auto da = laplacian(a);
         return da.is_zero() ? laplacian(lefschetz_L(s, a)) : da;
       }},
      {"dc_routes", "d C - (-1)^k C d = L d* - (-1)^k d* L", false, -1,
       [s](const DifferentialForm& a) { return d_C_via_structure(s, a) - d_C(s, a); }},
      {"dc_routes_opposite", "d C - (-1)^k C d = -(L d* - (-1)^k d* L)", false, -1,
       [s](const DifferentialForm& a) { return d_C_via_structure(s, a) + d_C(s, a); }},
  };
  if (s.kind() != StructureKind::Kaehler) {
    checks.push_back({"laplace_P7", "Delta P7 - P7 Delta = 0", false, 2,
                      [s](const DifferentialForm& a) {
                        return project2(s, laplacian(a)).first - laplacian(project2(s, a).first);
                      }});
    checks.push_back({"laplace_Prest", "Delta P_rest - P_rest Delta = 0", false, 2,
                      [s](const DifferentialForm& a) {
                        return project2(s, laplacian(a)).second - laplacian(project2(s, a).second);
                      }});
  }
  return checks;
}

}  // namespace

std::vector<VerificationReport> verbitsky_suite(const StructureDescriptor& s, int trials,
                                                std::uint64_t seed) {
  const int n = s.dim();
  const auto checks = suite_checks(s);
  std::vector<VerificationReport> reports;
  for (const auto& check : checks) {
    const Stopwatch clock;
    const int total = check.only_degree < 0 ? trials * (n + 1) : trials;
    const auto outcome = run_trials(total, seed, [&](int t, RandomSource& rng) -> std::optional<Fields> {
      const int degree = check.only_degree < 0 ? t % (n + 1) : check.only_degree;
      const DifferentialForm a =
          check.harmonic_input ? random_harmonic_form(rng, n, degree) : random_form(rng, n, degree);
      const DifferentialForm r = check.residual(a);
      if (r.is_zero()) return std::nullopt;
      return Fields{{"degree", std::to_string(degree)}, {"a", format_form(a)}, {"residual", format_form(r)}};
    });
    VerificationReport rep;
    rep.suite = "verbitsky";
    rep.id = s.name() + "." + check.id;
    rep.anchor = check.anchor;
    rep.trials = total;
    rep.seed = seed;
    rep.status = outcome.failures == 0 ? Status::ExactPass : Status::Fail;
    rep.counterexample = outcome.counterexample;
    rep.details = {{"structure", s.name()}, {"per_degree", std::to_string(trials)},
                   {"failures", std::to_string(outcome.failures)}};
    rep.elapsed_ms = clock.elapsed_ms();
    reports.push_back(std::move(rep));
  }
  return reports;
}

VerificationReport verify_verbitsky(const StructureDescriptor& s, int trials, std::uint64_t seed) {
  const Stopwatch clock;
  VerificationReport agg;
  agg.suite = "verbitsky";
  agg.id = s.name() + ".all";
  agg.anchor = "vanishing supercommutators, Laplacian commutation, harmonic wedge";
  agg.seed = seed;
  for (const auto& r : verbitsky_suite(s, trials, seed)) {
    if (r.id.find(".dc_routes") != std::string::npos) continue;
    agg.trials = r.trials;
    agg.details.emplace_back(r.id, status_name(r.status));
    if (!r.passed() && !agg.counterexample) {
      agg.status = Status::Fail;
      Fields f{{"check", r.id}};
      f.insert(f.end(), r.counterexample->begin(), r.counterexample->end());
      agg.counterexample = std::move(f);
    }
  }
  agg.elapsed_ms = clock.elapsed_ms();
  return agg;
}

}  // namespace holoforms
