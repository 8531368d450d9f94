#pragma once

#include "holoforms/form.hpp"

// Operator suite on flat ℝⁿ with the identity metric and orientation
// dx1∧…∧dxn. Every operation is exact. Results whose degree falls outside
// 0..n are zero forms tagged with that degree, so operator compositions
// stay degree-consistent.

namespace holoforms {

/// Graded-commutative product. Throws DimensionError on mismatched ambient
/// spaces.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// ∗ : Λᵏ → Λⁿ⁻ᵏ, characterised by dx^I ∧ ∗dx^I = vol.
DifferentialForm hodge_star(const DifferentialForm& a);

DifferentialForm ext_d(const DifferentialForm& a);

/// d* = (−1)^{nk+n+1} ∗d∗ on k-forms. On 0-forms returns zero (tagged with
/// degree −1).
DifferentialForm codifferential(const DifferentialForm& a);

/// Contraction i_X. Zero on 0-forms.
DifferentialForm interior(const VectorField& x, const DifferentialForm& a);

/// 𝓛_X = d∘i_X + i_X∘d.
DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& a);

/// Δ = d d* + d* d.
DifferentialForm laplacian(const DifferentialForm& a);

/// Pointwise inner product in the orthonormal basis {dx^I}. Throws DegreeError
/// on degree mismatch.
Polynomial pairing(const DifferentialForm& a, const DifferentialForm& b);

/// Applies −Σ∂ᵢ² to each coefficient. Reference for the Hodge Laplacian on
/// flat space.
DifferentialForm componentwise_laplacian(const DifferentialForm& a);

}  // namespace holoforms
