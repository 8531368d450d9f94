#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "holoforms/report.hpp"
#include "holoforms/structures.hpp"

namespace holoforms {

/// ∇f = (∂₁f, …, ∂ₙf) for the flat metric.
VectorField gradient(const Polynomial& f);

/// Constants with |df|² ≤ A + B·f.
struct Convexity {
  Rational A;
  Rational B;
  /// True for an exact certificate; false when A and B are sample estimates.
  bool certified = false;
};

/// Exact certificate when f = c·r² + ⟨b,x⟩ + c₀ with c ≥ 0: then
/// |df|² = 4c·f + (|b|² − 4c·c₀), giving B = 4c, A = max(0, |b|² − 4c·c₀).
/// Any other f gets seeded sample estimates on growing shells; returns
/// nullopt when the estimates keep growing (f does not dominate its
/// gradient on the samples).
std::optional<Convexity> convexity_constants(const Polynomial& f, std::uint64_t seed = 0);

/// Checks an exact certificate: |df|² − B·f is a constant not exceeding A.
bool certify_convexity(const Polynomial& f, const Convexity& c);

struct PotentialReport {
  Polynomial f;
  VectorField grad_f;
  /// 𝓛_∇f ω, computed as d(i_∇f ω) on the closed form ω.
  DifferentialForm lie_term;
  /// ω − 𝓛_∇f ω.
  DifferentialForm omega_prime;
  std::optional<Convexity> convexity;
  /// −d*df.
  Polynomial laplacian_bound;
  /// Side check: the three expressions of lie_chain_terms agree.
  bool lie_chain_holds = false;
};

PotentialReport perturbation(const StructureDescriptor& s, const Polynomial& f);

/// The three expressions 𝓛_∇f ω (full Cartan formula), (−1)^k d d_C f and
/// −d d*(fω).
struct LieChainTerms {
  DifferentialForm lie;
  DifferentialForm via_twisted;
  DifferentialForm via_codifferential;
  bool equal() const { return lie == via_twisted && lie == via_codifferential; }
};

LieChainTerms lie_chain_terms(const StructureDescriptor& s, const Polynomial& f);

/// Checks the three-way equality on `f` (when given) and on `trials` seeded
/// random polynomials of degree ≤ 4.
VerificationReport check_lie_chain(const StructureDescriptor& s, const std::optional<Polynomial>& f,
                                int trials, std::uint64_t seed);

struct LaplacianChain {
  /// −d*df.
  Polynomial minus_dstar_df;
  /// |i_v ω|² for a unit vector v: 3 for G₂, 7 for Spin(7).
  Rational constant;
  /// ∗(ω′∧∗ω).
  Polynomial remainder;
  /// ⟨ω,ω⟩ − constant·(−d*df) − remainder; zero when the chain holds.
  Polynomial residual;
};

/// ⟨ω,ω⟩ = c·(−d*df) + ∗(ω′∧∗ω). Throws std::invalid_argument for Kähler.
LaplacianChain laplacian_bound(const StructureDescriptor& s, const Polynomial& f,
                               const DifferentialForm& omega_prime);

}  // namespace holoforms
