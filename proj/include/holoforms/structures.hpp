#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holoforms/form.hpp"
#include "holoforms/rational_matrix.hpp"

namespace holoforms {

enum class StructureKind { G2, Spin7, Kaehler };

/// Linear map on constant forms, indexed by the bitmask of a basis element:
/// row[I.bits()] lists the (J, c) with map(dx^I) = Σ c·dx^J.
using BasisTable = std::vector<std::vector<std::pair<MultiIndex, Rational>>>;

struct TypeComponent {
  std::string label;  // "L2_<multiplicity>"
  Rational eigenvalue;
  int multiplicity = 0;
};

struct TypeSpectrum {
  std::vector<Rational> minimal_polynomial;  // increasing degree, monic
  std::vector<TypeComponent> components;     // increasing eigenvalue
  bool self_adjoint = false;
  /// Minimal polynomial splits into distinct rational linear factors.
  bool diagonalizable = false;
};

/// Applies a basis table C^∞-linearly, producing a form of `out_degree`.
DifferentialForm apply_table(const BasisTable& table, const DifferentialForm& a, int out_degree);

/// A parallel form ω on flat ℝⁿ with its derived data. Construction checks
/// that ω has constant coefficients, dω = 0, d*ω = 0 and that ⟨ω,ω⟩ takes the
/// value of its kind (7, 14, m). Copies share the precomputed tables.
class StructureDescriptor {
 public:
  static StructureDescriptor g2();
  static StructureDescriptor spin7();
  /// Standard form Σ dx^{2i−1}∧dx^{2i} on ℝ^{2m}, 1 ≤ m ≤ 6.
  static StructureDescriptor kaehler(int m = 3);
  /// Custom ω of the given kind, subject to the construction checks. Used for
  /// fault injection with sign-perturbed model forms.
  static StructureDescriptor from_form(StructureKind kind, const DifferentialForm& omega, int m = 0);
  /// "g2", "spin7", "kaehler" (m = 3) or "kaehler:<m>".
  static StructureDescriptor parse(const std::string& name);

  StructureKind kind() const { return kind_; }
  int m() const { return m_; }
  int dim() const { return omega_.dim(); }
  int degree() const { return omega_.degree(); }
  int parity() const { return omega_.parity(); }
  const DifferentialForm& omega() const { return omega_; }
  const DifferentialForm& star_omega() const { return star_omega_; }
  /// "g2", "spin7", "kaehler:<m>".
  std::string name() const;
  /// ⟨ω,ω⟩.
  const Rational& norm_squared() const { return norm_; }

  /// a ↦ ω∧a on basis elements of every degree. This is the graded left
  /// action; it equals a∧ω up to the sign (−1)^{k·deg a}.
  const BasisTable& lefschetz_table() const { return tables_->lefschetz; }
  /// Transpose of the Lefschetz table: the pointwise adjoint Λ_ω.
  const BasisTable& adjoint_table() const { return tables_->adjoint; }
  /// Structure operator C on basis elements of every degree.
  const BasisTable& structure_table() const { return tables_->structure; }
  /// Spectrum of the type operator, present when it maps Λ² to itself.
  const std::optional<TypeSpectrum>& spectrum() const { return tables_->spectrum; }

 private:
  struct Tables {
    BasisTable lefschetz;
    BasisTable adjoint;
    BasisTable structure;
    std::optional<TypeSpectrum> spectrum;
  };

  StructureDescriptor(StructureKind kind, int m, DifferentialForm omega);

  StructureKind kind_;
  int m_;
  DifferentialForm omega_;
  DifferentialForm star_omega_;
  Rational norm_;
  std::shared_ptr<const Tables> tables_;
};

/// Model descriptor for a kind; m is only read for Kähler.
StructureDescriptor model_form(StructureKind kind, int m = 3);

/// T(a) = ∗(a∧ω) on 2-forms. Defined when T maps Λ² to itself, i.e.
/// n − k = 4 (G₂, Spin(7), Kähler with m = 3). Throws DegreeError otherwise
/// or when deg a ≠ 2.
DifferentialForm type_operator(const StructureDescriptor& s, const DifferentialForm& a);

/// Matrix of T on constant 2-forms in the canonical basis order.
RationalMatrix type_matrix(const StructureDescriptor& s);

/// Spectrum computed from the minimal polynomial of the type matrix; the
/// multiplicity of λ is the nullity of T − λ.
TypeSpectrum compute_type_spectrum(const RationalMatrix& t);
/// Cached spectrum of s; throws DegreeError when T is undefined.
TypeSpectrum type_spectrum(const StructureDescriptor& s);

/// True when T maps Λ² to itself.
bool has_type_operator(const StructureDescriptor& s);

/// Eigen-projector Π_{μ≠λ}(T − μ)/(λ − μ) applied to a 2-form.
DifferentialForm eigen_projection(const StructureDescriptor& s, const TypeSpectrum& spec,
                                  const Rational& eigenvalue, const DifferentialForm& a);

/// Splits a 2-form as a = a7 + rest, a7 in the 7-dimensional summand.
/// Defined for G₂ and Spin(7); throws DegreeError for Kähler.
std::pair<DifferentialForm, DifferentialForm> project2(const StructureDescriptor& s,
                                                       const DifferentialForm& a);

/// Matrix of a ↦ a∧ω from Λᵏ to Λ^{k+deg ω}, columns indexed by Λᵏ.
RationalMatrix lefschetz_matrix(const StructureDescriptor& s, int k);

/// (dim Λᵏ, rank of a ↦ a∧ω on constant k-forms). Requires
/// 0 ≤ k ≤ n − deg ω; throws DegreeError otherwise.
std::pair<int, int> lefschetz_rank(const StructureDescriptor& s, int k);

}  // namespace holoforms
