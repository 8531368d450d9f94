#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "holoforms/form.hpp"
#include "holoforms/report.hpp"

// Floating-point side of the library: Hardy-type inequality checks on radial
// profiles. Everything upstream of this header is exact.

namespace holoforms {

/// Constants for m∫|u|²/(f+M) ≤ ‖du‖² given |df|² ≤ A + B·f and −d*df ≥ C.
/// The rescaled potential f̃ = t·f + 1 satisfies |df̃|² ≤ B̃·f̃ with
/// B̃ = t·B + t²·A and −d*df̃ ≥ t·C; κ = t·C − B̃ − ε·B̃ > 0.
struct HardyConstants {
  Rational A, B, C;
  Rational t, B_tilde, epsilon, kappa;
  Rational m, M;
};

/// t = 2^{−j} for the least j with B + t·A < C; ε = min(1, (tC − B̃)/(2B̃)),
/// or 1 when B̃ = 0; m = κε/t, M = 1/t. Throws std::domain_error unless
/// 0 ≤ B < C and A ≥ 0.
HardyConstants compute_hardy_constants(const Rational& A, const Rational& B, const Rational& C);

/// f = c2·r² + c0 on ℝⁿ.
struct RadialQuadratic {
  Rational c2;
  Rational c0;
  double operator()(double r) const { return c2.get_d() * r * r + c0.get_d(); }
  std::string text() const;
};

/// Piecewise polynomial u(r) on [0, R], zero beyond R.
class RadialProfile {
 public:
  struct Piece {
    Rational a, b;
    std::vector<Rational> coeffs;  // increasing powers of r
  };

  /// "a..b:c0,c1,…;b..c:…" with pieces covering [0, R] in order. Throws
  /// ParseError on bad syntax and std::invalid_argument when u is not
  /// continuous or u(R) ≠ 0.
  static RadialProfile parse(std::string_view text, int n);
  static RadialProfile zero(int n, const Rational& R);

  int dim() const { return n_; }
  const Rational& support_radius() const { return pieces_.back().b; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_zero() const;
  double value(const Piece& p, double r) const;
  double derivative(const Piece& p, double r) const;

 private:
  int n_ = 0;
  std::vector<Piece> pieces_;
};

struct HardyResult {
  double lhs = 0;
  double rhs = 0;
  double margin = 0;
  /// Largest relative error estimate reported by the quadrature.
  double relative_error = 0;
};

/// Piecewise adaptive Gauss–Kronrod (61 points) with target relative error
/// 1e−10; throws std::runtime_error carrying the achieved error when the
/// estimate exceeds 1e−6 relative.
double integrate(const std::function<double(double)>& g, double a, double b, double* rel_error);

/// lhs = m∫₀^R |u|²/(f+M)·ω_{n−1}r^{n−1}dr, rhs = ∫₀^R |u′|²·ω_{n−1}r^{n−1}dr.
HardyResult hardy_check(const RadialQuadratic& f, const HardyConstants& consts,
                        const RadialProfile& u);

/// "|S^{n−1}|", the area of the unit sphere in ℝⁿ.
double sphere_area(int n);

/// Components of `a` at `point` in basis(n, k) order, evaluated exactly and
/// rounded once. Throws DimensionError on a length mismatch.
std::vector<double> eval_form(const DifferentialForm& a, const std::vector<double>& point);

struct HardyProfileRow {
  std::string name;
  int n = 0;
  RadialQuadratic f;
  RadialProfile u;
};

/// Rows "<name> <n> <c2>,<c0> <u-spec> <R>" ('#' comments, blank lines).
/// R must equal the profile's support radius.
std::vector<HardyProfileRow> parse_hardy_profiles(std::string_view text);
/// The bundled profile suite.
const char* bundled_hardy_profiles();

/// (A, B, C) for f through the exact convexity certificate and −d*df.
HardyConstants hardy_constants_for(const RadialQuadratic& f, int n);

/// One numeric-pass/fail report per row ("<name>"), preceded by the
/// quadrature self-test "quadrature.monomials" on ∫₀¹ r^p dr, p = 0..12.
std::vector<VerificationReport> hardy_suite(const std::vector<HardyProfileRow>& rows);

}  // namespace holoforms
