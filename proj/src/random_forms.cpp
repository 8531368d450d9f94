#include "holoforms/random_forms.hpp"

#include <limits>
#include <stdexcept>

namespace holoforms {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational nonzero_coeff(RandomSource& rng, int bound) {
  int c = 0;
  while (c == 0) c = rng.uniform(-bound, bound);
  return c;
}

}  // namespace

RandomSource RandomSource::for_trial(std::uint64_t seed, std::uint64_t index) {
  return RandomSource(splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ULL + 1)));
}

int RandomSource::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<int>(draw % span);
}

Polynomial random_polynomial(RandomSource& rng, int n, const FormGenOptions& opt) {
  Polynomial p(n);
  const int terms = opt.constant ? 1 : rng.uniform(1, opt.max_poly_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    if (!opt.constant) {
      const int deg = rng.uniform(0, opt.max_poly_degree);
      for (int e = 0; e < deg; ++e) m.exps[rng.uniform(0, n - 1)] += 1;
    }
    p.add_term(m, nonzero_coeff(rng, opt.coeff_bound));
  }
  if (p.is_zero()) p.add_term(Monomial{}, 1);
  return p;
}

DifferentialForm random_form(RandomSource& rng, int n, int degree, const FormGenOptions& opt) {
  DifferentialForm out(n, degree);
  const auto elems = basis(n, degree);
  if (elems.empty()) return out;
  for (MultiIndex idx : elems) {
    if (rng.uniform(1, 100) <= opt.density_percent) out.add(idx, random_polynomial(rng, n, opt));
  }
  if (out.is_zero()) {
    out.add(elems[rng.uniform(0, static_cast<int>(elems.size()) - 1)],
            random_polynomial(rng, n, opt));
  }
  return out;
}

VectorField random_vector_field(RandomSource& rng, int n, const FormGenOptions& opt) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < n; ++i) {
    comps.push_back(rng.uniform(1, 100) <= opt.density_percent ? random_polynomial(rng, n, opt)
                                                               : Polynomial(n));
  }
  return VectorField(std::move(comps));
}

Polynomial random_harmonic_polynomial(RandomSource& rng, int n, int terms) {
  auto x = [n](int i) { return Polynomial::variable(n, i); };
  Polynomial out(n);
  for (int t = 0; t < terms; ++t) {
    // Three distinct indices when n allows it.
    const int i = rng.uniform(1, n);
    int j = rng.uniform(1, n - (n > 1 ? 1 : 0));
    if (n > 1 && j >= i) ++j;
    int k = i;
    if (n > 2) {
      while (k == i || k == j) k = rng.uniform(1, n);
    }
    Polynomial h(n);
    const int shape = n > 2 ? rng.uniform(0, 6) : rng.uniform(0, 1);
    switch (shape) {
      case 0: h = Polynomial(n, 1); break;
      case 1: h = x(i); break;
      case 2: h = x(i) * x(j); break;
      case 3: h = x(i) * x(i) - x(j) * x(j); break;
      case 4: h = x(i) * x(j) * x(k); break;
      case 5: h = x(i) * x(i) * x(i) - Rational(3) * x(i) * x(j) * x(j); break;
      default: h = (x(i) * x(i) - x(j) * x(j)) * x(k); break;
    }
    out += nonzero_coeff(rng, 3) * h;
  }
  if (!flat_laplacian(out).is_zero()) throw std::logic_error("harmonic generator produced a non-harmonic polynomial");
  if (out.is_zero()) out = x(1);
  return out;
}

DifferentialForm random_harmonic_form(RandomSource& rng, int n, int degree) {
  DifferentialForm out(n, degree);
  const auto elems = basis(n, degree);
  for (MultiIndex idx : elems) {
    if (rng.coin()) out.add(idx, random_harmonic_polynomial(rng, n));
  }
  if (out.is_zero() && !elems.empty()) out.add(elems.front(), random_harmonic_polynomial(rng, n));
  return out;
}

}  // namespace holoforms
