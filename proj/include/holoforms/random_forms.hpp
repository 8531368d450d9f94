#pragma once

#include <cstdint>
#include <random>

#include "holoforms/form.hpp"

namespace holoforms {

/// Seeded source of small integers. Draws are derived from std::mt19937_64
/// by rejection sampling, so sequences are identical across standard
/// libraries (std::uniform_int_distribution is implementation-defined).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static RandomSource for_trial(std::uint64_t seed, std::uint64_t index);

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Shape of generated test inputs. Defaults: coefficients in {−3..3},
/// polynomial degree ≤ 3, up to 3 monomials per coefficient, each basis
/// element present with probability 1/2.
struct FormGenOptions {
  int coeff_bound = 3;
  int max_poly_degree = 3;
  int max_poly_terms = 3;
  /// Percent chance that a given basis element gets a coefficient.
  int density_percent = 50;
  /// Restrict to constant coefficients.
  bool constant = false;
};

Polynomial random_polynomial(RandomSource& rng, int n, const FormGenOptions& opt = {});
/// Never returns the zero form when degree is in 0..n.
DifferentialForm random_form(RandomSource& rng, int n, int degree, const FormGenOptions& opt = {});
VectorField random_vector_field(RandomSource& rng, int n, const FormGenOptions& opt = {});

/// Random rational combination of harmonic polynomials of degree ≤ 3 built
/// from 1, xᵢ, xᵢxⱼ, xᵢ²−xⱼ², xᵢxⱼx_k, xᵢ³−3xᵢxⱼ², (xᵢ²−xⱼ²)x_k.
Polynomial random_harmonic_polynomial(RandomSource& rng, int n, int terms = 3);
/// Form whose every coefficient is a random harmonic polynomial.
DifferentialForm random_harmonic_form(RandomSource& rng, int n, int degree);

}  // namespace holoforms
