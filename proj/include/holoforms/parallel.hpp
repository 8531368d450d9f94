#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "holoforms/report.hpp"
#include "holoforms/structures.hpp"

namespace holoforms {

/// Homogeneous operator on forms with a declared degree shift and parity.
struct GradedOperator {
  std::string name;
  int shift = 0;
  int parity = 0;
  std::function<DifferentialForm(const DifferentialForm&)> action;

  /// Throws std::logic_error if the result degree disagrees with the shift.
  DifferentialForm operator()(const DifferentialForm& a) const;
};

/// {P,Q}a = P(Q a) − (−1)^{P̃Q̃} Q(P a).
DifferentialForm supercommutator(const GradedOperator& p, const GradedOperator& q,
                                 const DifferentialForm& a);

/// Structure operator: the derivation of parity k mod 2 that vanishes on
/// functions and sends dxᵢ to ∗(∗ω∧dxᵢ). Shifts degree by k − 2.
DifferentialForm structure_op_C(const StructureDescriptor& s, const DifferentialForm& a);

/// L_ω a = ω∧a, the graded left multiplication. For even k this is a∧ω; for
/// odd k the right multiplication a∧ω is not a graded operator of parity k
/// and the supercommutator identities fail for it.
DifferentialForm lefschetz_L(const StructureDescriptor& s, const DifferentialForm& a);

/// Pointwise adjoint of lefschetz_L; zero below degree k.
DifferentialForm adjoint_Lambda(const StructureDescriptor& s, const DifferentialForm& a);

/// Twisted differential d_C = L_ω d* − (−1)^{C̃} d* L_ω. This is the
/// canonical definition used throughout the library.
DifferentialForm d_C(const StructureDescriptor& s, const DifferentialForm& a);

/// The derivation-side expression dC − (−1)^{C̃} C d, computed literally.
DifferentialForm d_C_via_structure(const StructureDescriptor& s, const DifferentialForm& a);

/// d_C* = Λ_ω d − (−1)^{C̃} d Λ_ω.
DifferentialForm d_C_star(const StructureDescriptor& s, const DifferentialForm& a);

GradedOperator op_d(int n);
GradedOperator op_codifferential(int n);
GradedOperator op_laplacian(int n);
GradedOperator op_C(const StructureDescriptor& s);
GradedOperator op_L(const StructureDescriptor& s);
GradedOperator op_Lambda(const StructureDescriptor& s);
GradedOperator op_d_C(const StructureDescriptor& s);
GradedOperator op_d_C_via_structure(const StructureDescriptor& s);
GradedOperator op_d_C_star(const StructureDescriptor& s);

/// One report per vanishing identity, run on `trials` random polynomial forms
/// of every degree 0..n (harmonic coefficients for the harmonic checks).
/// Report ids are "<structure>.<check>":
///   d_dC, dstar_dC, d_dCstar, dstar_dCstar   supercommutators vanish
///   laplace_L, laplace_Lambda                Δ commutes with L_ω and Λ_ω
///   harmonic_wedge                           Δa = 0 ⟹ Δ(a∧ω) = 0
///   dc_routes                                both d_C expressions agree
///   dc_routes_opposite                       they agree up to an overall sign
///   laplace_P7, laplace_Prest                Δ commutes with the 2-form
///                                            projections (G₂, Spin(7) only;
///                                            `trials` 2-forms, not per degree)
std::vector<VerificationReport> verbitsky_suite(const StructureDescriptor& s, int trials,
                                                std::uint64_t seed);

/// Aggregate of verbitsky_suite without the two d_C route comparisons:
/// exact-pass iff every vanishing identity holds.
VerificationReport verify_verbitsky(const StructureDescriptor& s, int trials, std::uint64_t seed);

}  // namespace holoforms
