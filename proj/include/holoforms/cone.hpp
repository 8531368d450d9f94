#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "holoforms/polynomial.hpp"
#include "holoforms/report.hpp"

// Forms on a Riemannian cone (0,∞)×Σ written as sums of c·rᵃ·dr^ε∧σ, where σ
// is a wedge monomial in the declared generators of the link Σ.

namespace holoforms {

/// Generator indices in non-decreasing order. Odd generators appear at most
/// once; even generators may repeat (w^w is a valid monomial).
using LinkMonomial = std::vector<int>;
/// Formal linear combination of link monomials.
using LinkSum = std::map<LinkMonomial, Rational>;

/// Graded-commutative algebra on declared generators with a differential
/// fixed on generators. Monomials are only reduced by graded commutativity
/// and the declared monomial relations.
///
/// Text format, one declaration per line ('#' starts a comment):
///   gen <name> <degree>
///   const <name> = <rational>
///   d <name> = <sum>              e.g. "d ImOmega = -2 lambda w^w"
///   rel <monomial> = 0            e.g. "rel w^ReOmega = 0"
/// Generators without a d rule get their differential from d² = 0 through a
/// rule d h = c·g + (terms with known differential). Construction fails when
/// that is impossible or when d(d g) ≠ 0 for some generator.
class LinkDGA {
 public:
  static LinkDGA parse(std::string_view text);

  int generator_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int g) const { return names_[g]; }
  int degree(int g) const { return degrees_[g]; }
  /// Index of a generator, −1 when absent.
  int find(std::string_view name) const;
  int degree(const LinkMonomial& m) const;
  /// True when the rule for d g was derived from d² = 0 rather than declared.
  bool derived(int g) const { return derived_[g]; }

  /// Canonical product of two monomials with its Koszul sign; sign 0 when
  /// the product vanishes.
  std::pair<int, LinkMonomial> multiply(const LinkMonomial& a, const LinkMonomial& b) const;
  const LinkSum& d_generator(int g) const { return d_rules_[g]; }
  LinkSum d(const LinkMonomial& m) const;
  LinkSum d(const LinkSum& s) const;

  /// "w^ReOmega", "1" for the empty monomial.
  std::string format(const LinkMonomial& m) const;
  std::string format(const LinkSum& s) const;
  /// Parses "<coeff> <gen>^<gen> + …" against the declared generators and
  /// constants; all terms must share one degree.
  LinkSum parse_sum(std::string_view text) const;

 private:
  bool killed(const LinkMonomial& m) const;

  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<LinkSum> d_rules_;
  std::vector<bool> derived_;
  std::vector<LinkMonomial> relations_;
  std::map<std::string, Rational, std::less<>> constants_;
};

/// Key (a, ε, σ) of a term rᵃ·dr^ε∧σ.
struct ConeKey {
  int r_power = 0;
  int dr = 0;
  LinkMonomial link;
  friend bool operator<(const ConeKey& x, const ConeKey& y) {
    return std::tie(x.dr, x.r_power, x.link) < std::tie(y.dr, y.r_power, y.link);
  }
  friend bool operator==(const ConeKey&, const ConeKey&) = default;
};

/// Homogeneous form on the cone. Zero coefficients are never stored.
class ConeForm {
 public:
  explicit ConeForm(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<ConeKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ConeKey& key, const Rational& c);

  ConeForm& operator+=(const ConeForm& rhs);
  ConeForm& operator-=(const ConeForm& rhs);
  ConeForm& operator*=(const Rational& c);
  friend ConeForm operator+(ConeForm a, const ConeForm& b) { return a += b; }
  friend ConeForm operator-(ConeForm a, const ConeForm& b) { return a -= b; }
  friend ConeForm operator*(const Rational& c, ConeForm a) { return a *= c; }
  friend bool operator==(const ConeForm& a, const ConeForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_;
  std::map<ConeKey, Rational> terms_;
};

/// Terms like "1/3 r^3 w", "r^2 w^dr" (factors in any order, sign absorbed),
/// "r^3 ReOmega". 'r' and 'dr' are reserved names.
ConeForm parse_cone_form(std::string_view text, const LinkDGA& link);
std::string format_cone_form(const ConeForm& x, const LinkDGA& link);

/// d(rᵃσ) = a·rᵃ⁻¹dr∧σ + rᵃ·dσ and d(rᵃdr∧σ) = −rᵃdr∧dσ.
ConeForm cone_d(const ConeForm& x, const LinkDGA& link);
/// Contraction with c·r∂r: rᵃdr∧σ ↦ c·rᵃ⁺¹σ, rᵃσ ↦ 0.
ConeForm cone_interior_euler(const ConeForm& x, const Rational& c);
/// Cartan formula d∘i + i∘d for the field c·r∂r.
ConeForm cone_lie_euler(const ConeForm& x, const Rational& c, const LinkDGA& link);

/// Bundled nearly Kähler 6-dimensional link (λ = 1).
const char* nearly_kaehler_link_text();
/// Bundled nearly parallel G₂ link.
const char* nearly_parallel_g2_link_text();
/// Nearly Kähler link with the broken rule d w = 2 ReOmega.
const char* broken_nearly_kaehler_link_text();

enum class ConeCase { NearlyKaehler, NearlyParallelG2 };

/// Builds the cone structure form for the case over `link_text` (the bundled
/// link by default) and checks dφ = 0, d(i_∇f φ) = φ and 𝓛_∇f φ = φ for
/// ∇f = c·r∂r with c = 1/3 (f = r²/6) or 1/4 (f = r²/8).
VerificationReport verify_cone_potential(ConeCase which, const char* link_text = nullptr);

}  // namespace holoforms
