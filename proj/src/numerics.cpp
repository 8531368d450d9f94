#include "holoforms/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "holoforms/errors.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/potential.hpp"
#include "holoforms/trials.hpp"

namespace holoforms {

namespace {

constexpr double kTargetError = 1e-10;
constexpr double kAcceptedError = 1e-6;

Rational parse_q(const std::string& s, int line, int column) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'", line, column);
  }
}

Rational evaluate(const std::vector<Rational>& coeffs, const Rational& r) {
  Rational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * r + *it;
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

}  // namespace

HardyConstants compute_hardy_constants(const Rational& A, const Rational& B, const Rational& C) {
  if (A < 0 || B < 0) throw std::domain_error("convexity constants must be non-negative");
  if (B >= C) throw std::domain_error("the Hardy constants need B < C");
  HardyConstants h{A, B, C, 1, 0, 0, 0, 0, 0};
  while (B + h.t * A >= C) h.t /= 2;
  h.B_tilde = h.t * B + h.t * h.t * A;
  const Rational C_tilde = h.t * C;
  h.epsilon = 1;
  if (h.B_tilde > 0) {
    const Rational e = (C_tilde - h.B_tilde) / (2 * h.B_tilde);
    if (e < 1) h.epsilon = e;
  }
  h.kappa = C_tilde - h.B_tilde - h.epsilon * h.B_tilde;
  h.m = h.kappa * h.epsilon / h.t;
  h.M = 1 / h.t;
  return h;
}

std::string RadialQuadratic::text() const {
  return c2.get_str() + " r^2 + " + c0.get_str();
}

RadialProfile RadialProfile::parse(std::string_view text, int n) {
  if (n < 1) throw DimensionError("profile dimension must be positive");
  RadialProfile p;
  p.n_ = n;
  const std::string s(text);
  int column = 1;
  for (const std::string& chunk : split(s, ';')) {
    const auto colon = chunk.find(':');
    const auto dots = chunk.find("..");
    if (colon == std::string::npos || dots == std::string::npos || dots > colon) {
      throw ParseError("expected 'a..b:c0,c1,...'", 1, column);
    }
    Piece piece{parse_q(chunk.substr(0, dots), 1, column),
                parse_q(chunk.substr(dots + 2, colon - dots - 2), 1, column), {}};
    for (const std::string& c : split(chunk.substr(colon + 1), ',')) {
      piece.coeffs.push_back(parse_q(c, 1, column));
    }
    if (piece.b <= piece.a) throw ParseError("empty piece", 1, column);
    const Rational expected = p.pieces_.empty() ? Rational(0) : p.pieces_.back().b;
    if (piece.a != expected) throw ParseError("pieces must be contiguous from 0", 1, column);
    if (!p.pieces_.empty()) {
      const auto& prev = p.pieces_.back();
      if (evaluate(prev.coeffs, prev.b) != evaluate(piece.coeffs, piece.a)) {
        throw std::invalid_argument("profile is discontinuous at r = " + piece.a.get_str());
      }
    }
    p.pieces_.push_back(std::move(piece));
    column += static_cast<int>(chunk.size()) + 1;
  }
  const auto& last = p.pieces_.back();
  if (evaluate(last.coeffs, last.b) != 0) throw std::invalid_argument("profile must vanish at R");
  return p;
}

RadialProfile RadialProfile::zero(int n, const Rational& R) {
  RadialProfile p;
  p.n_ = n;
  p.pieces_.push_back({0, R, {0}});
  return p;
}

bool RadialProfile::is_zero() const {
  for (const auto& piece : pieces_) {
    for (const auto& c : piece.coeffs) {
      if (c != 0) return false;
    }
  }
  return true;
}

double RadialProfile::value(const Piece& p, double r) const {
  double v = 0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) v = v * r + it->get_d();
  return v;
}

double RadialProfile::derivative(const Piece& p, double r) const {
  double v = 0;
  for (std::size_t i = p.coeffs.size(); i-- > 1;) v = v * r + static_cast<double>(i) * p.coeffs[i].get_d();
  return v;
}

double integrate(const std::function<double(double)>& g, double a, double b, double* rel_error) {
  double err = 0;
  double l1 = 0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      g, a, b, 15, kTargetError, &err, &l1);
  const double rel = l1 > 0 ? err / l1 : err;
  if (rel > kAcceptedError) {
    std::ostringstream msg;
    msg << "quadrature did not converge on [" << a << ", " << b << "], achieved relative error "
        << rel;
    throw std::runtime_error(msg.str());
  }
  if (rel_error) *rel_error = rel;
  return value;
}

double sphere_area(int n) {
  const double pi = std::acos(-1.0);
  return 2 * std::pow(pi, n / 2.0) / std::tgamma(n / 2.0);
}

HardyResult hardy_check(const RadialQuadratic& f, const HardyConstants& consts,
                        const RadialProfile& u) {
  HardyResult out;
  if (u.is_zero()) return out;
  const int n = u.dim();
  const double area = sphere_area(n);
  const double m = consts.m.get_d();
  const double M = consts.M.get_d();
  for (const auto& piece : u.pieces()) {
    const double a = piece.a.get_d();
    const double b = piece.b.get_d();
    double e1 = 0;
    double e2 = 0;
    out.lhs += m * area * integrate([&](double r) {
      const double v = u.value(piece, r);
      return v * v / (f(r) + M) * std::pow(r, n - 1);
    }, a, b, &e1);
    out.rhs += area * integrate([&](double r) {
      const double v = u.derivative(piece, r);
      return v * v * std::pow(r, n - 1);
    }, a, b, &e2);
    out.relative_error = std::max({out.relative_error, e1, e2});
  }
  out.margin = out.rhs - out.lhs;
  return out;
}

std::vector<double> eval_form(const DifferentialForm& a, const std::vector<double>& point) {
  const int n = a.dim();
  if (static_cast<int>(point.size()) != n) throw DimensionError("point has the wrong length");
  std::vector<Rational> x;
  for (double v : point) x.emplace_back(v);
  std::vector<double> out;
  for (const MultiIndex idx : basis(n, a.degree())) {
    out.push_back(a.coefficient(idx).evaluate(x).get_d());
  }
  return out;
}

std::vector<HardyProfileRow> parse_hardy_profiles(std::string_view text) {
  std::vector<HardyProfileRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, n_text, f_text, u_text, r_text, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> n_text >> f_text >> u_text >> r_text) || (fields >> extra)) {
      throw ParseError("expected '<name> <n> <c2>,<c0> <profile> <R>'", number, 1);
    }
    HardyProfileRow row;
    row.name = name;
    try {
      row.n = std::stoi(n_text);
    } catch (const std::exception&) {
      throw ParseError("bad dimension '" + n_text + "'", number, 1);
    }
    const auto fc = split(f_text, ',');
    if (fc.size() != 2) throw ParseError("f must read '<c2>,<c0>'", number, 1);
    row.f = {parse_q(fc[0], number, 1), parse_q(fc[1], number, 1)};
    row.u = RadialProfile::parse(u_text, row.n);
    if (parse_q(r_text, number, 1) != row.u.support_radius()) {
      throw ParseError("R disagrees with the profile support", number, 1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

HardyConstants hardy_constants_for(const RadialQuadratic& f, int n) {
  const Polynomial p = f.c2 * radius_squared(n) + Polynomial(n, f.c0);
  const auto conv = convexity_constants(p);
  if (!conv || !conv->certified) throw std::domain_error("f has no exact convexity certificate");
  const DifferentialForm lap = codifferential(ext_d(DifferentialForm::function(p)));
  const Polynomial minus = -lap.coefficient(MultiIndex{});
  if (!minus.is_constant()) throw std::domain_error("-d*df is not constant");
  return compute_hardy_constants(conv->A, conv->B, minus.constant_term());
}

std::vector<VerificationReport> hardy_suite(const std::vector<HardyProfileRow>& rows) {
  std::vector<VerificationReport> out;
  {
    const Stopwatch clock;
    VerificationReport r;
    r.suite = "hardy";
    r.id = "quadrature.monomials";
    r.anchor = "int_0^1 r^p dr = 1/(p+1)";
    r.trials = 13;
    r.tolerance = kAcceptedError;
    double worst = 0;
    int worst_p = 0;
    for (int p = 0; p <= 12; ++p) {
      const double v = integrate([p](double x) { return std::pow(x, p); }, 0, 1, nullptr);
      const double rel = std::abs(v * (p + 1) - 1);
      if (rel > worst) {
        worst = rel;
        worst_p = p;
      }
    }
    r.status = worst <= kAcceptedError ? Status::NumericPass : Status::Fail;
    r.details = {{"max_relative_error", fmt(worst)}};
    if (r.status == Status::Fail) r.counterexample = Fields{{"p", std::to_string(worst_p)}};
    r.elapsed_ms = clock.elapsed_ms();
    out.push_back(std::move(r));
  }
  for (const auto& row : rows) {
    const Stopwatch clock;
    VerificationReport r;
    r.suite = "hardy";
    r.id = row.name;
    r.anchor = "m int |u|^2/(f+M) <= ||du||^2";
    r.trials = 1;
    r.tolerance = kAcceptedError;
    try {
      const HardyConstants h = hardy_constants_for(row.f, row.n);
      const HardyResult res = hardy_check(row.f, h, row.u);
      const bool ok = res.margin > 0 && res.relative_error <= kAcceptedError;
      r.status = ok ? Status::NumericPass : Status::Fail;
      r.details = {{"n", std::to_string(row.n)}, {"f", row.f.text()},
                   {"m", h.m.get_str()},         {"M", h.M.get_str()},
                   {"lhs", fmt(res.lhs)},           {"rhs", fmt(res.rhs)},
                   {"margin", fmt(res.margin)},     {"relative_error", fmt(res.relative_error)}};
      if (!ok) r.counterexample = Fields{{"profile", row.name}, {"margin", fmt(res.margin)}};
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.counterexample = Fields{{"profile", row.name}, {"error", e.what()}};
    }
    r.elapsed_ms = clock.elapsed_ms();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace holoforms
