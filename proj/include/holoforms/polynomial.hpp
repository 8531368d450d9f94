#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace holoforms {

using Rational = mpq_class;

/// Largest ambient dimension supported by the exponent and multi-index
/// encodings.
inline constexpr int kMaxDim = 16;

/// Exponent vector x1^e1 ... xn^en. Entries beyond the ambient dimension are
/// always zero.
struct Monomial {
  std::array<std::uint8_t, kMaxDim> exps{};

  int total_degree() const;
  bool is_one() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: lower total degree first, ties broken by larger x1 exponent,
/// then larger x2 exponent, and so on. This is the canonical print order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial in x1..xn with exact rational coefficients.
/// Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  explicit Polynomial(int dim);
  Polynomial(int dim, const Rational& c);

  static Polynomial variable(int dim, int index);  // 1-based
  static Polynomial monomial(int dim, const Monomial& m, const Rational& c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term, zero when absent.
  Rational constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial

  /// Adds c·m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial derivative(int index) const;  // d/dx_index, 1-based
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  int dim_;
  TermMap terms_;
};

/// "x1^2 x3"; empty for the unit monomial.
std::string monomial_text(const Monomial& m);

/// Canonical text in monomial order: "1 - x2 + 3/2 x1^2 x3". Zero prints as "0".
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& q);

/// Σ ∂ᵢ² p.
Polynomial flat_laplacian(const Polynomial& p);

/// x1² + … + xn².
Polynomial radius_squared(int dim);

/// p/q in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, and GMP arithmetic requires canonical operands.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

void check_dim(int dim);

}  // namespace holoforms
