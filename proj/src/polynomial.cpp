#include "holoforms/polynomial.hpp"

#include <sstream>

#include "holoforms/errors.hpp"

namespace holoforms {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw DimensionError("ambient dimension " + std::to_string(dim) +
                         " outside 1.." + std::to_string(kMaxDim));
  }
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (auto e : exps) {
    if (e != 0) return false;
  }
  return true;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.total_degree();
  const int db = b.total_degree();
  if (da != db) return da < db;
  for (int i = 0; i < kMaxDim; ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
  }
  return false;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxDim; ++i) {
    const int e = a.exps[i] + b.exps[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.exps[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Polynomial::Polynomial(int dim) : dim_(dim) { check_dim(dim); }

Polynomial::Polynomial(int dim, const Rational& c) : Polynomial(dim) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(int dim, int index) {
  if (index < 1 || index > dim) {
    throw DimensionError("variable x" + std::to_string(index) +
                         " outside 1.." + std::to_string(dim));
  }
  Monomial m;
  m.exps[index - 1] = 1;
  return monomial(dim, m, 1);
}

Polynomial Polynomial::monomial(int dim, const Monomial& m, const Rational& c) {
  Polynomial p(dim);
  for (int i = dim; i < kMaxDim; ++i) {
    if (m.exps[i] != 0) throw DimensionError("monomial uses a variable beyond the dimension");
  }
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int index) const {
  if (index < 1 || index > dim_) throw DimensionError("derivative index out of range");
  Polynomial out(dim_);
  const int i = index - 1;
  for (const auto& [m, c] : terms_) {
    if (m.exps[i] == 0) continue;
    Monomial dm = m;
    dm.exps[i] -= 1;
    out.terms_.emplace_hint(out.terms_.end(), dm, c * m.exps[i]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != dim_) {
    throw DimensionError("evaluation point has wrong length");
  }
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < dim_; ++i) {
      for (int e = 0; e < m.exps[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("polynomial dimension mismatch");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_) throw DimensionError("polynomial dimension mismatch");
  Polynomial out(a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (int i = 0; i < kMaxDim; ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(i + 1);
    if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + ' ';
      out += mono;
    }
  }
  return out;
}

Polynomial flat_laplacian(const Polynomial& p) {
  Polynomial out(p.dim());
  for (int i = 1; i <= p.dim(); ++i) out += p.derivative(i).derivative(i);
  return out;
}

Polynomial radius_squared(int dim) {
  Polynomial r2(dim);
  for (int i = 0; i < dim; ++i) {
    Monomial m;
    m.exps[i] = 2;
    r2.add_term(m, 1);
  }
  return r2;
}

}  // namespace holoforms
