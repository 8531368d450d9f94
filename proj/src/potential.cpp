#include "holoforms/potential.hpp"

#include <stdexcept>

#include "holoforms/errors.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/parallel.hpp"
#include "holoforms/random_forms.hpp"
#include "holoforms/trials.hpp"

namespace holoforms {

VectorField gradient(const Polynomial& f) {
  std::vector<Polynomial> comps;
  for (int i = 1; i <= f.dim(); ++i) comps.push_back(f.derivative(i));
  return VectorField(std::move(comps));
}

namespace {

Polynomial gradient_norm2(const Polynomial& f) {
  Polynomial out(f.dim());
  for (int i = 1; i <= f.dim(); ++i) {
    const Polynomial g = f.derivative(i);
    out += g * g;
  }
  return out;
}

// c when the degree-2 part of f is c·r² and f has degree ≤ 2.
std::optional<Rational> radial_quadratic_coefficient(const Polynomial& f) {
  if (f.total_degree() > 2) return std::nullopt;
  const int n = f.dim();
  Polynomial quad(n);
  for (const auto& [m, c] : f.terms()) {
    if (m.total_degree() == 2) quad.add_term(m, c);
  }
  Monomial x1sq;
  x1sq.exps[0] = 2;
  const auto it = quad.terms().find(x1sq);
  const Rational c = it == quad.terms().end() ? Rational(0) : it->second;
  if (quad != c * radius_squared(n)) return std::nullopt;
  return c;
}

struct ShellEstimate {
  Rational A;
  Rational B;
};

ShellEstimate sample_shell(const Polynomial& f, const Polynomial& g2, int radius, RandomSource& rng) {
  const int n = f.dim();
  std::vector<std::pair<Rational, Rational>> samples;  // (f, |df|²)
  std::vector<Rational> x(n);
  for (int s = 0; s < 64; ++s) {
    for (auto& xi : x) xi = ratio(rng.uniform(-4 * radius, 4 * radius), 4);
    samples.emplace_back(f.evaluate(x), g2.evaluate(x));
  }
  ShellEstimate e{0, 0};
  for (const auto& [fv, gv] : samples) {
    if (fv >= 1 && gv / fv > e.B) e.B = gv / fv;
  }
  for (const auto& [fv, gv] : samples) {
    const Rational slack = gv - e.B * fv;
    if (slack > e.A) e.A = slack;
  }
  return e;
}

}  // namespace

bool certify_convexity(const Polynomial& f, const Convexity& c) {
  const Polynomial rest = gradient_norm2(f) - c.B * f;
  return rest.is_constant() && rest.constant_term() <= c.A && c.A >= 0 && c.B >= 0;
}

std::optional<Convexity> convexity_constants(const Polynomial& f, std::uint64_t seed) {
  if (const auto c = radial_quadratic_coefficient(f); c && *c >= 0) {
    Convexity out;
    out.B = 4 * *c;
    const Rational gap = (gradient_norm2(f) - out.B * f).constant_term();
    out.A = gap > 0 ? gap : Rational(0);
    out.certified = certify_convexity(f, out);
    if (out.certified) return out;
  }
  const Polynomial g2 = gradient_norm2(f);
  RandomSource rng = RandomSource::for_trial(seed, 0);
  std::vector<ShellEstimate> shells;
  for (int radius : {1, 4, 16}) shells.push_back(sample_shell(f, g2, radius, rng));
  // Domination must not deteriorate on the outer shell.
  const auto& mid = shells[1];
  const auto& outer = shells[2];
  if (outer.B > 2 * mid.B + 1 || outer.A > 2 * mid.A + 1) return std::nullopt;
  Convexity out;
  for (const auto& s : shells) {
    if (s.B > out.B) out.B = s.B;
  }
  for (const auto& s : shells) {
    if (s.A > out.A) out.A = s.A;
  }
  out.certified = false;
  return out;
}

PotentialReport perturbation(const StructureDescriptor& s, const Polynomial& f) {
  if (f.dim() != s.dim()) throw DimensionError("potential and structure live in different dimensions");
  PotentialReport r{f, gradient(f), DifferentialForm(s.dim(), s.degree()),
                    DifferentialForm(s.dim(), s.degree()), std::nullopt, Polynomial(s.dim()), false};
  r.lie_term = ext_d(interior(r.grad_f, s.omega()));
  r.omega_prime = s.omega() - r.lie_term;
  r.convexity = convexity_constants(f);
  r.laplacian_bound = -codifferential(ext_d(DifferentialForm::function(f))).coefficient(MultiIndex{});
  r.lie_chain_holds = lie_chain_terms(s, f).equal();
  return r;
}

LieChainTerms lie_chain_terms(const StructureDescriptor& s, const Polynomial& f) {
  const auto F = DifferentialForm::function(f);
  const Rational sign = s.degree() % 2 == 0 ? 1 : -1;
  return {lie_derivative(gradient(f), s.omega()), sign * ext_d(d_C(s, F)),
          -ext_d(codifferential(f * s.omega()))};
}

VerificationReport check_lie_chain(const StructureDescriptor& s, const std::optional<Polynomial>& f,
                                int trials, std::uint64_t seed) {
  const Stopwatch clock;
  auto mismatch = [&](const Polynomial& p) -> std::optional<Fields> {
    const auto t = lie_chain_terms(s, p);
    if (t.equal()) return std::nullopt;
    return Fields{{"f", to_string(p)},
                  {"lie", format_form(t.lie)},
                  {"via_twisted", format_form(t.via_twisted)},
                  {"via_codifferential", format_form(t.via_codifferential)}};
  };
  VerificationReport r;
  r.suite = "potentials";
  r.id = s.name() + ".lie_chain";
  r.anchor = "L_{grad f} w = (-1)^k d d_C f = -d d*(f w)";
  r.seed = seed;
  r.trials = trials + (f ? 1 : 0);
  std::optional<Fields> given;
  if (f) given = mismatch(*f);
  FormGenOptions opt;
  opt.max_poly_degree = 4;
  const auto outcome = run_trials(trials, seed, [&](int, RandomSource& rng) {
    return mismatch(random_polynomial(rng, s.dim(), opt));
  });
  const int failures = outcome.failures + (given ? 1 : 0);
  r.status = failures == 0 ? Status::ExactPass : Status::Fail;
  r.counterexample = given ? given : outcome.counterexample;
  r.details = {{"structure", s.name()}, {"failures", std::to_string(failures)}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

LaplacianChain laplacian_bound(const StructureDescriptor& s, const Polynomial& f,
                               const DifferentialForm& omega_prime) {
  if (s.kind() == StructureKind::Kaehler) {
    throw std::invalid_argument("the Laplacian chain is stated for G2 and Spin7 only");
  }
  const int n = s.dim();
  const auto contraction = interior(VectorField::coordinate(n, 1), s.omega());
  LaplacianChain c{-codifferential(ext_d(DifferentialForm::function(f))).coefficient(MultiIndex{}),
                   pairing(contraction, contraction).constant_term(),
                   hodge_star(wedge(omega_prime, s.star_omega())).coefficient(MultiIndex{}),
                   Polynomial(n)};
  c.residual = Polynomial(n, s.norm_squared()) - c.constant * c.minus_dstar_df - c.remainder;
  return c;
}

}  // namespace holoforms
