#include "holoforms/identities.hpp"

#include <functional>
#include <stdexcept>

#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/trials.hpp"

namespace holoforms {

namespace {

using Check = std::function<std::optional<Fields>(const StructureDescriptor&, RandomSource&)>;

std::optional<Fields> verdict(const DifferentialForm& residual, Fields inputs) {
  if (residual.is_zero()) return std::nullopt;
  inputs.emplace_back("residual", format_form(residual));
  return inputs;
}

DifferentialForm fn(const Polynomial& p) { return DifferentialForm::function(p); }

// ∗(a∧w)∧w − c·∗a for 1-forms a.
Check contraction(bool use_star, int c) {
  return [use_star, c](const StructureDescriptor& s, RandomSource& rng) {
    const auto& w = use_star ? s.star_omega() : s.omega();
    const auto a = random_form(rng, s.dim(), 1);
    const auto r = wedge(hodge_star(wedge(a, w)), w) - Rational(c) * hodge_star(a);
    return verdict(r, {{"a", format_form(a)}});
  };
}

// (a·w)∧∗(b·w) − c·ab·vol for 0-forms a, b.
Check zero_forms(int c) {
  return [c](const StructureDescriptor& s, RandomSource& rng) {
    const int n = s.dim();
    const auto a = random_polynomial(rng, n);
    const auto b = random_polynomial(rng, n);
    const auto r = wedge(a * s.omega(), hodge_star(b * s.omega())) -
                   Rational(c) * (a * b) * DifferentialForm::volume(n);
    return verdict(r, {{"a", to_string(a)}, {"b", to_string(b)}});
  };
}

// ∗(a∧w)∧(b∧w) − c·∗a∧b for 1-forms a, b.
Check one_forms(int c) {
  return [c](const StructureDescriptor& s, RandomSource& rng) {
    const auto a = random_form(rng, s.dim(), 1);
    const auto b = random_form(rng, s.dim(), 1);
    const auto& w = s.omega();
    const auto r = wedge(hodge_star(wedge(a, w)), wedge(b, w)) - Rational(c) * wedge(hodge_star(a), b);
    return verdict(r, {{"a", format_form(a)}, {"b", format_form(b)}});
  };
}

// ⟨a∧w, b∧w⟩ − c7·⟨a₇,b₇⟩ − ⟨a_rest,b_rest⟩ for 2-forms a, b.
Check two_forms(int c7) {
  return [c7](const StructureDescriptor& s, RandomSource& rng) {
    const auto a = random_form(rng, s.dim(), 2);
    const auto b = random_form(rng, s.dim(), 2);
    const auto [a7, ar] = project2(s, a);
    const auto [b7, br] = project2(s, b);
    const auto& w = s.omega();
    const Polynomial r = pairing(wedge(a, w), wedge(b, w)) - Rational(c7) * pairing(a7, b7) - pairing(ar, br);
    return verdict(fn(r), {{"a", format_form(a)}, {"b", format_form(b)}});
  };
}

std::optional<Fields> metric6(const StructureDescriptor& s, RandomSource& rng) {
  const int n = s.dim();
  const auto u = random_vector_field(rng, n);
  const auto v = random_vector_field(rng, n);
  Polynomial g(n);
  for (int i = 1; i <= n; ++i) g += u[i] * v[i];
  const auto& w = s.omega();
  const auto r = wedge(wedge(interior(u, w), interior(v, w)), w) - Rational(6) * g * DifferentialForm::volume(n);
  auto text = [n](const VectorField& x) {
    std::string out;
    for (int i = 1; i <= n; ++i) out += (i > 1 ? ", " : "") + to_string(x[i]);
    return "(" + out + ")";
  };
  return verdict(r, {{"u", text(u)}, {"v", text(v)}});
}

struct Entry {
  IdentityInfo info;
  Check check;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"g2.minus4", "g2", "1-form a", "*(a^phi)^phi = -4 *a"}, contraction(false, -4)},
      {{"g2.psi3", "g2", "1-form a", "*(a^*phi)^*phi = 3 *a"}, contraction(true, 3)},
      {{"spin7.seven", "spin7", "1-form a", "*(a^Phi)^Phi = 7 *a"}, contraction(false, 7)},
      {{"g2.metric6", "g2", "vector fields u, v", "i_u phi ^ i_v phi ^ phi = 6 g(u,v) vol"}, metric6},
      {{"g2.zero7", "g2", "0-forms a, b", "(a phi) ^ *(b phi) = 7 a b vol"}, zero_forms(7)},
      {{"spin7.zero14", "spin7", "0-forms a, b", "(a Phi) ^ *(b Phi) = 14 a b vol"}, zero_forms(14)},
      {{"g2.one4", "g2", "1-forms a, b", "*(a^phi) ^ (b^phi) = 4 *a ^ b"}, one_forms(4)},
      {{"spin7.one7", "spin7", "1-forms a, b", "*(a^Phi) ^ (b^Phi) = 7 *a ^ b"}, one_forms(7)},
      {{"g2.two41", "g2", "2-forms a, b", "<a^phi, b^phi> = 4 <a7,b7> + <a14,b14>"}, two_forms(4)},
      {{"spin7.two91", "spin7", "2-forms a, b", "<a^Phi, b^Phi> = 9 <a7,b7> + <a21,b21>"}, two_forms(9)},
  };
  return table;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

StructureDescriptor corrupted_g2_fixture() {
  // −dx^{356} replaced by −dx^{456}.
  DifferentialForm w = StructureDescriptor::g2().omega();
  w += DifferentialForm::basis_form(7, {3, 5, 6});
  w -= DifferentialForm::basis_form(7, {4, 5, 6});
  return StructureDescriptor::from_form(StructureKind::G2, w);
}

VerificationReport verify_identity(const std::string& id, int trials, std::uint64_t seed,
                                   const std::optional<StructureDescriptor>& fixture) {
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.info.id == id) entry = &e;
  }
  if (!entry) {
    std::string known;
    for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.info.id;
    throw std::invalid_argument("unknown identity '" + id + "'; catalog: " + known);
  }
  const Stopwatch clock;
  const StructureDescriptor s = fixture && fixture->name() == entry->info.structure
                                    ? *fixture
                                    : StructureDescriptor::parse(entry->info.structure);
  TrialOutcome outcome;
  try {
    outcome = run_trials(trials, seed, [&](int, RandomSource& rng) { return entry->check(s, rng); });
  } catch (const std::exception& e) {
    // A fixture can break the inputs of a check (e.g. no 7-dimensional summand).
    outcome.failures = trials;
    outcome.counterexample = Fields{{"error", e.what()}};
  }

  VerificationReport r;
  r.suite = "identities";
  r.id = id;
  r.anchor = entry->info.anchor;
  r.trials = trials;
  r.seed = seed;
  r.status = outcome.failures == 0 ? Status::ExactPass : Status::Fail;
  r.counterexample = outcome.counterexample;
  r.details = {{"structure", s.name()}, {"inputs", entry->info.inputs},
               {"failures", std::to_string(outcome.failures)}};
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace holoforms
