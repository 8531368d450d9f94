#include "holoforms/cone.hpp"

#include <algorithm>
#include <optional>

#include "holoforms/errors.hpp"
#include "holoforms/lexer.hpp"
#include "holoforms/trials.hpp"

namespace holoforms {

namespace {

Rational parse_rational(TokenStream& ts) {
  const Token num = ts.next();
  Rational q(num.text);
  if (ts.accept_symbol('/')) {
    const Token den = ts.peek();
    if (den.kind != Token::Kind::Number) ts.fail("expected denominator");
    ts.next();
    Rational d(den.text);
    if (d == 0) ts.fail_at(den, "zero denominator");
    q /= d;
  }
  q.canonicalize();
  return q;
}

void add_to(LinkSum& s, const LinkMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = s.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

struct RawTerm {
  Rational coeff = 1;
  int r_power = 0;
  int dr = 0;
  LinkMonomial link;
  Token start;
};

// Signed sum of products. Factors: rationals, declared constants, generators,
// and (when `cone` is set) r, r^N and dr. dr is moved to the front.
std::vector<RawTerm> parse_terms(TokenStream& ts, const LinkDGA& link,
                                 const std::map<std::string, Rational, std::less<>>& constants,
                                 bool cone) {
  std::vector<RawTerm> out;
  bool negate = ts.accept_symbol('-');
  if (!negate) ts.accept_symbol('+');
  while (true) {
    RawTerm t;
    t.start = ts.peek();
    bool any = false;
    while (true) {
      if (any && (ts.accept_symbol('^') || ts.accept_symbol('*'))) {
        if (ts.peek().kind == Token::Kind::End || ts.peek().kind == Token::Kind::Symbol) {
          ts.fail("expected a factor");
        }
      }
      const Token& tok = ts.peek();
      if (tok.kind == Token::Kind::Number) {
        t.coeff *= parse_rational(ts);
      } else if (tok.kind == Token::Kind::Identifier) {
        const Token id = ts.next();
        if (cone && id.text == "r") {
          int e = 1;
          if (ts.is_symbol('^') && ts.peek(1).kind == Token::Kind::Number) {
            ts.next();
            const Token ex = ts.next();
            if (ex.text.size() > 3) ts.fail_at(ex, "radial exponent too large");
            e = std::stoi(ex.text);
          }
          t.r_power += e;
        } else if (cone && id.text == "dr") {
          if (t.dr) {
            t.coeff = 0;
          } else {
            t.dr = 1;
            if (link.degree(t.link) % 2) t.coeff = -t.coeff;
          }
        } else if (const auto c = constants.find(id.text); c != constants.end()) {
          t.coeff *= c->second;
        } else if (const int g = link.find(id.text); g >= 0) {
          const auto [sign, m] = link.multiply(t.link, LinkMonomial{g});
          t.coeff *= sign;
          t.link = m;
        } else {
          ts.fail_at(id, "unknown generator '" + id.text + "'");
        }
      } else {
        if (!any) ts.fail("expected a coefficient or generator");
        break;
      }
      any = true;
    }
    if (negate) t.coeff = -t.coeff;
    out.push_back(std::move(t));
    if (ts.accept_symbol('+')) {
      negate = false;
    } else if (ts.accept_symbol('-')) {
      negate = true;
    } else {
      break;
    }
  }
  return out;
}

std::string coefficient_prefix(const Rational& c, bool first, bool bare) {
  std::string out;
  if (first) {
    if (c < 0) out += '-';
  } else {
    out += c < 0 ? " - " : " + ";
  }
  const Rational a = abs(c);
  if (bare || a != 1) {
    out += a.get_str();
    if (!bare) out += ' ';
  }
  return out;
}

}  // namespace

int LinkDGA::find(std::string_view name) const {
  for (int g = 0; g < generator_count(); ++g) {
    if (names_[g] == name) return g;
  }
  return -1;
}

int LinkDGA::degree(const LinkMonomial& m) const {
  int d = 0;
  for (int g : m) d += degrees_[g];
  return d;
}

bool LinkDGA::killed(const LinkMonomial& m) const {
  for (const auto& rel : relations_) {
    if (std::includes(m.begin(), m.end(), rel.begin(), rel.end())) return true;
  }
  return false;
}

std::pair<int, LinkMonomial> LinkDGA::multiply(const LinkMonomial& a, const LinkMonomial& b) const {
  LinkMonomial m = a;
  m.insert(m.end(), b.begin(), b.end());
  int sign = 1;
  // Insertion sort; each adjacent swap contributes (−1)^{deg x·deg y}.
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (std::size_t j = i; j > 0 && m[j - 1] > m[j]; --j) {
      if (degrees_[m[j - 1]] % 2 && degrees_[m[j]] % 2) sign = -sign;
      std::swap(m[j - 1], m[j]);
    }
  }
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == m[i - 1] && degrees_[m[i]] % 2) return {0, {}};
  }
  if (killed(m)) return {0, {}};
  return {sign, m};
}

LinkSum LinkDGA::d(const LinkMonomial& m) const {
  LinkSum out;
  int before = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const LinkMonomial head(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i));
    const LinkMonomial tail(m.begin() + static_cast<std::ptrdiff_t>(i) + 1, m.end());
    const Rational sign = before % 2 ? -1 : 1;
    for (const auto& [dm, c] : d_rules_[m[i]]) {
      const auto [s1, left] = multiply(head, dm);
      if (s1 == 0) continue;
      const auto [s2, full] = multiply(left, tail);
      if (s2 == 0) continue;
      add_to(out, full, sign * c * s1 * s2);
    }
    before += degrees_[m[i]];
  }
  return out;
}

LinkSum LinkDGA::d(const LinkSum& s) const {
  LinkSum out;
  for (const auto& [m, c] : s) {
    for (const auto& [dm, dc] : d(m)) add_to(out, dm, c * dc);
  }
  return out;
}

std::string LinkDGA::format(const LinkMonomial& m) const {
  if (m.empty()) return "1";
  std::string out;
  for (int g : m) {
    if (!out.empty()) out += '^';
    out += names_[g];
  }
  return out;
}

std::string LinkDGA::format(const LinkSum& s) const {
  if (s.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : s) {
    out += coefficient_prefix(c, first, m.empty());
    if (!m.empty()) out += format(m);
    first = false;
  }
  return out;
}

LinkSum LinkDGA::parse_sum(std::string_view text) const {
  TokenStream ts(tokenize(text));
  const auto terms = parse_terms(ts, *this, constants_, false);
  if (!ts.at_end()) ts.fail("expected '+', '-' or end of input");
  LinkSum out;
  std::optional<int> deg;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    const int k = degree(t.link);
    if (deg && *deg != k) ts.fail_at(t.start, "terms of different degrees");
    deg = k;
    add_to(out, t.link, t.coeff);
  }
  return out;
}

LinkDGA LinkDGA::parse(std::string_view text) {
  struct Line {
    int number;
    std::string body;
  };
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    ++number;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string body(text.substr(pos, end - pos));
    if (const auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
    if (body.find_first_not_of(" \t\r") != std::string::npos) lines.push_back({number, body});
    pos = end + 1;
  }

  LinkDGA dga;
  std::vector<bool> has_rule;
  struct Pending {
    TokenStream ts;
    bool is_rule;
    int generator;
  };
  std::vector<Pending> pending;
  for (const auto& line : lines) {
    TokenStream ts(tokenize(line.body, line.number));
    const Token head = ts.next();
    if (head.kind != Token::Kind::Identifier) ts.fail_at(head, "expected a declaration");
    if (head.text == "gen") {
      const Token name = ts.next();
      if (name.kind != Token::Kind::Identifier) ts.fail_at(name, "expected a generator name");
      if (name.text == "r" || name.text == "dr") ts.fail_at(name, "reserved name");
      if (dga.find(name.text) >= 0) ts.fail_at(name, "duplicate generator");
      const Token deg = ts.next();
      if (deg.kind != Token::Kind::Number || deg.text.size() > 2) ts.fail_at(deg, "expected a degree");
      if (!ts.at_end()) ts.fail("unexpected trailing input");
      dga.names_.push_back(name.text);
      dga.degrees_.push_back(std::stoi(deg.text));
      dga.d_rules_.emplace_back();
      dga.derived_.push_back(false);
      has_rule.push_back(false);
    } else if (head.text == "const") {
      const Token name = ts.next();
      if (name.kind != Token::Kind::Identifier) ts.fail_at(name, "expected a constant name");
      ts.expect_symbol('=');
      const bool neg = ts.accept_symbol('-');
      if (ts.peek().kind != Token::Kind::Number) ts.fail("expected a rational");
      Rational v = parse_rational(ts);
      if (neg) v = -v;
      if (!ts.at_end()) ts.fail("unexpected trailing input");
      dga.constants_[name.text] = v;
    } else if (head.text == "d" || head.text == "rel") {
      pending.push_back({std::move(ts), head.text == "d", -1});
    } else {
      ts.fail_at(head, "unknown declaration '" + head.text + "'");
    }
  }

  // Relations first so d rules are reduced by them.
  for (auto& p : pending) {
    if (p.is_rule) continue;
    const Token start = p.ts.peek();
    const auto terms = parse_terms(p.ts, dga, dga.constants_, false);
    if (terms.size() != 1 || terms.front().coeff == 0) p.ts.fail_at(start, "expected a monomial");
    p.ts.expect_symbol('=');
    const Token zero = p.ts.next();
    if (zero.text != "0" || !p.ts.at_end()) p.ts.fail_at(zero, "relations must read '<monomial> = 0'");
    dga.relations_.push_back(terms.front().link);
  }
  for (auto& p : pending) {
    if (!p.is_rule) continue;
    const Token name = p.ts.next();
    const int g = dga.find(name.text);
    if (g < 0) p.ts.fail_at(name, "unknown generator '" + name.text + "'");
    if (has_rule[g]) p.ts.fail_at(name, "duplicate rule");
    p.ts.expect_symbol('=');
    const auto terms = parse_terms(p.ts, dga, dga.constants_, false);
    if (!p.ts.at_end()) p.ts.fail("expected '+', '-' or end of line");
    LinkSum rule;
    for (const auto& t : terms) {
      if (t.coeff == 0) continue;
      if (dga.degree(t.link) != dga.degrees_[g] + 1) {
        p.ts.fail_at(t.start, "d " + name.text + " must have degree " +
                                  std::to_string(dga.degrees_[g] + 1));
      }
      add_to(rule, t.link, t.coeff);
    }
    dga.d_rules_[g] = std::move(rule);
    has_rule[g] = true;
  }

  // d(d h) = 0 fixes d g whenever d h = c·g + (terms whose d is known).
  bool progress = true;
  while (progress) {
    progress = false;
    for (int h = 0; h < dga.generator_count(); ++h) {
      if (!has_rule[h]) continue;
      std::optional<int> unknown;
      Rational coeff;
      bool blocked = false;
      LinkSum rest;
      for (const auto& [m, c] : dga.d_rules_[h]) {
        bool known = true;
        for (int x : m) known = known && has_rule[x];
        if (known) {
          add_to(rest, m, c);
        } else if (m.size() == 1 && !unknown) {
          unknown = m.front();
          coeff = c;
        } else {
          blocked = true;
        }
      }
      if (!unknown || blocked) continue;
      LinkSum rule;
      for (const auto& [m, c] : dga.d(rest)) add_to(rule, m, -c / coeff);
      dga.d_rules_[*unknown] = std::move(rule);
      dga.derived_[*unknown] = true;
      has_rule[*unknown] = true;
      progress = true;
    }
  }
  for (int g = 0; g < dga.generator_count(); ++g) {
    if (!has_rule[g]) {
      throw ParseError("no rule for d " + dga.names_[g] + " and none follows from d^2 = 0",
                       lines.empty() ? 1 : lines.back().number, 1);
    }
  }
  for (int g = 0; g < dga.generator_count(); ++g) {
    const LinkSum dd = dga.d(dga.d_rules_[g]);
    if (!dd.empty()) {
      throw ParseError("d^2 " + dga.names_[g] + " = " + dga.format(dd) + " is not zero",
                       lines.empty() ? 1 : lines.back().number, 1);
    }
  }
  return dga;
}

void ConeForm::add(const ConeKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ConeForm& ConeForm::operator+=(const ConeForm& rhs) {
  if (rhs.degree_ != degree_ && !rhs.is_zero() && !is_zero()) {
    throw DegreeError("adding cone forms of different degrees");
  }
  if (is_zero()) degree_ = rhs.degree_;
  for (const auto& [k, c] : rhs.terms_) add(k, c);
  return *this;
}

ConeForm& ConeForm::operator-=(const ConeForm& rhs) {
  ConeForm neg = rhs;
  neg *= -1;
  return *this += neg;
}

ConeForm& ConeForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ConeForm parse_cone_form(std::string_view text, const LinkDGA& link) {
  TokenStream ts(tokenize(text));
  static const std::map<std::string, Rational, std::less<>> kNoConstants;
  const auto terms = parse_terms(ts, link, kNoConstants, true);
  if (!ts.at_end()) ts.fail("expected '+', '-' or end of input");
  std::optional<int> deg;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    const int k = t.dr + link.degree(t.link);
    if (deg && *deg != k) ts.fail_at(t.start, "terms of different degrees");
    deg = k;
  }
  ConeForm out(deg.value_or(0));
  for (const auto& t : terms) out.add({t.r_power, t.dr, t.link}, t.coeff);
  return out;
}

std::string format_cone_form(const ConeForm& x, const LinkDGA& link) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    std::vector<std::string> factors;
    if (k.r_power == 1) factors.push_back("r");
    if (k.r_power > 1) factors.push_back("r^" + std::to_string(k.r_power));
    std::string wedge;
    if (k.dr) wedge = "dr";
    if (!k.link.empty()) wedge += (wedge.empty() ? "" : "^") + link.format(k.link);
    if (!wedge.empty()) factors.push_back(wedge);
    out += coefficient_prefix(c, first, factors.empty());
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? " " : "") + factors[i];
    first = false;
  }
  return out;
}

ConeForm cone_d(const ConeForm& x, const LinkDGA& link) {
  ConeForm out(x.degree() + 1);
  for (const auto& [k, c] : x.terms()) {
    if (!k.dr && k.r_power > 0) {
      out.add({k.r_power - 1, 1, k.link}, c * k.r_power);
    }
    const Rational sign = k.dr ? -1 : 1;
    for (const auto& [m, dc] : link.d(k.link)) out.add({k.r_power, k.dr, m}, sign * c * dc);
  }
  return out;
}

ConeForm cone_interior_euler(const ConeForm& x, const Rational& c) {
  ConeForm out(x.degree() - 1);
  for (const auto& [k, v] : x.terms()) {
    if (k.dr) out.add({k.r_power + 1, 0, k.link}, c * v);
  }
  return out;
}

ConeForm cone_lie_euler(const ConeForm& x, const Rational& c, const LinkDGA& link) {
  ConeForm out = cone_d(cone_interior_euler(x, c), link);
  out += cone_interior_euler(cone_d(x, link), c);
  return out;
}

const char* nearly_kaehler_link_text() {
  return "gen w 2\n"
         "gen ReOmega 3\n"
         "gen ImOmega 3\n"
         "const lambda = 1\n"
         "d w = 3 lambda ReOmega\n"
         "d ImOmega = -2 lambda w^w\n"
         "rel w^ReOmega = 0\n"
         "rel w^ImOmega = 0\n";
}

const char* nearly_parallel_g2_link_text() {
  return "gen phi 3\n"
         "gen psi 4\n"
         "d phi = 4 psi\n";
}

const char* broken_nearly_kaehler_link_text() {
  return "gen w 2\n"
         "gen ReOmega 3\n"
         "gen ImOmega 3\n"
         "d w = 2 ReOmega\n"
         "d ImOmega = -2 w^w\n"
         "rel w^ReOmega = 0\n"
         "rel w^ImOmega = 0\n";
}

VerificationReport verify_cone_potential(ConeCase which, const char* link_text) {
  const Stopwatch clock;
  const bool nk = which == ConeCase::NearlyKaehler;
  VerificationReport r;
  r.suite = "cone";
  r.id = nk ? "nearly_kaehler_cone" : "nearly_parallel_g2_cone";
  r.anchor = nk ? "phi = r^2 dr^w + r^3 ReOmega, f = r^2/6, L_{grad f} phi = phi"
                : "Phi = r^3 dr^phi + r^4 psi, f = r^2/8, L_{grad f} Phi = Phi";
  r.trials = 1;
  r.seed = 0;
  const Rational c = nk ? Rational(1, 3) : Rational(1, 4);
  try {
    const LinkDGA link = LinkDGA::parse(link_text ? link_text
                                                  : (nk ? nearly_kaehler_link_text()
                                                        : nearly_parallel_g2_link_text()));
    const ConeForm phi =
        parse_cone_form(nk ? "r^2 w^dr + r^3 ReOmega" : "r^3 dr^phi + r^4 psi", link);
    const ConeForm dphi = cone_d(phi, link);
    const ConeForm exact = cone_d(cone_interior_euler(phi, c), link);
    const ConeForm exact_residual = exact - phi;
    const ConeForm lie_residual = cone_lie_euler(phi, c, link) - phi;
    const bool ok = dphi.is_zero() && exact_residual.is_zero() && lie_residual.is_zero();
    r.status = ok ? Status::ExactPass : Status::Fail;
    r.details = {{"potential", nk ? "r^2/6" : "r^2/8"},
                 {"euler_coefficient", c.get_str()},
                 {"structure_form", format_cone_form(phi, link)}};
    if (!ok) {
      r.counterexample = Fields{{"d_structure_form", format_cone_form(dphi, link)},
                                {"d_i_residual", format_cone_form(exact_residual, link)},
                                {"lie_residual", format_cone_form(lie_residual, link)}};
    }
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.counterexample = Fields{{"error", e.what()}};
  }
  r.elapsed_ms = clock.elapsed_ms();
  return r;
}

}  // namespace holoforms
