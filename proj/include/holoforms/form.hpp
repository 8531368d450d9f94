#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "holoforms/polynomial.hpp"

namespace holoforms {

/// Strictly increasing index set {i₁ < … < i_k} ⊂ {1..n}, stored as a bitmask
/// with bit i-1 set for index i. The empty set is the degree-0 basis element.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  constexpr explicit MultiIndex(std::uint32_t bits) : bits_(bits) {}
  /// Indices must be strictly increasing.
  static MultiIndex from_indices(const std::vector<int>& indices);
  static constexpr MultiIndex single(int index) { return MultiIndex(1u << (index - 1)); }
  /// {1..n}.
  static constexpr MultiIndex full(int n) {
    return MultiIndex(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int index) const { return (bits_ >> (index - 1)) & 1u; }
  /// Largest index, 0 when empty.
  constexpr int max_index() const { return 32 - std::countl_zero(bits_); }
  std::vector<int> indices() const;

  friend constexpr bool operator==(MultiIndex, MultiIndex) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the sorted index lists; for equal sizes this is the
/// canonical basis order dx^{123} < dx^{124} < … < dx^{567}.
struct MultiIndexOrder {
  bool operator()(MultiIndex a, MultiIndex b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint32_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1u))) != 0;
  }
};

/// Sign ε with dx^I ∧ dx^J = ε·dx^{I∪J}; 0 when the sets overlap.
int wedge_sign(MultiIndex a, MultiIndex b);

/// All multi-indices of the given size on {1..n}, in canonical order.
std::vector<MultiIndex> basis(int n, int degree);

/// Homogeneous degree-k form on flat ℝⁿ with polynomial coefficients. A form
/// whose degree lies outside 0..n can only be zero.
class DifferentialForm {
 public:
  using ComponentMap = std::map<MultiIndex, Polynomial, MultiIndexOrder>;

  DifferentialForm(int dim, int degree);

  static DifferentialForm zero(int dim, int degree) { return DifferentialForm(dim, degree); }
  static DifferentialForm function(const Polynomial& f);
  static DifferentialForm constant(int dim, const Rational& c);
  /// c·dx^{i₁}∧…∧dx^{i_k}; repeated indices give zero, and the permutation
  /// sign is absorbed into the coefficient.
  static DifferentialForm basis_form(int dim, const std::vector<int>& indices,
                                     const Rational& c = 1);
  static DifferentialForm volume(int dim);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  int parity() const { return ((degree_ % 2) + 2) % 2; }
  const ComponentMap& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  /// True when every coefficient is a constant polynomial.
  bool has_constant_coefficients() const;
  /// Coefficient of dx^I (the zero polynomial when absent).
  Polynomial coefficient(MultiIndex index) const;

  void add(MultiIndex index, const Polynomial& p);

  DifferentialForm operator-() const;
  DifferentialForm& operator+=(const DifferentialForm& rhs);
  DifferentialForm& operator-=(const DifferentialForm& rhs);
  DifferentialForm& operator*=(const Rational& c);
  DifferentialForm& operator*=(const Polynomial& p);

  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(const Rational& c, DifferentialForm a) { return a *= c; }
  friend DifferentialForm operator*(DifferentialForm a, const Rational& c) { return a *= c; }
  friend DifferentialForm operator*(const Polynomial& p, DifferentialForm a) { return a *= p; }
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);
  friend bool operator!=(const DifferentialForm& a, const DifferentialForm& b) { return !(a == b); }

 private:
  int dim_;
  int degree_;
  ComponentMap comps_;
};

class VectorField {
 public:
  explicit VectorField(std::vector<Polynomial> components);
  /// Unit coordinate field ∂/∂x_index.
  static VectorField coordinate(int dim, int index);
  /// E = Σ xᵢ ∂ᵢ.
  static VectorField euler(int dim);

  int dim() const { return static_cast<int>(comps_.size()); }
  const Polynomial& operator[](int index) const { return comps_[index - 1]; }  // 1-based
  const std::vector<Polynomial>& components() const { return comps_; }

 private:
  std::vector<Polynomial> comps_;
};

}  // namespace holoforms
