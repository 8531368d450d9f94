#include "holoforms/form_text.hpp"

#include "holoforms/errors.hpp"
#include "holoforms/lexer.hpp"

namespace holoforms {

namespace {

// Identifier of the form <prefix><digits>; returns the index or -1.
int indexed_name(const Token& t, std::string_view prefix) {
  if (t.kind != Token::Kind::Identifier) return -1;
  if (t.text.size() <= prefix.size() || t.text.compare(0, prefix.size(), prefix) != 0) return -1;
  int value = 0;
  for (std::size_t i = prefix.size(); i < t.text.size(); ++i) {
    const char c = t.text[i];
    if (c < '0' || c > '9') return -1;
    value = value * 10 + (c - '0');
    if (value > 1000) return 1001;
  }
  return value;
}

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

struct ParsedTerm {
  Rational coeff = 1;
  Monomial mono;
  std::vector<int> basis;
  bool has_basis = false;
  Token start;
};

class FormParser {
 public:
  FormParser(std::string_view text, int n) : ts_(tokenize(text)), n_(n) { check_dim(n); }

  DifferentialForm parse(std::optional<int> degree) {
    std::vector<ParsedTerm> terms;
    bool negate = false;
    if (ts_.accept_symbol('-')) {
      negate = true;
    } else {
      ts_.accept_symbol('+');
    }
    while (true) {
      ParsedTerm t = parse_term();
      if (negate) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (ts_.accept_symbol('+')) {
        negate = false;
      } else if (ts_.accept_symbol('-')) {
        negate = true;
      } else {
        break;
      }
    }
    if (!ts_.at_end()) ts_.fail("expected '+', '-' or end of input");

    std::optional<int> deg;
    for (const auto& t : terms) {
      if (!t.has_basis) continue;
      const int k = static_cast<int>(t.basis.size());
      if (deg && *deg != k) {
        ts_.fail_at(t.start, "term degree " + std::to_string(k) + " differs from form degree " +
                                 std::to_string(*deg));
      }
      deg = k;
    }
    for (const auto& t : terms) {
      if (deg && !t.has_basis && t.coeff != 0) {
        ts_.fail_at(t.start, "scalar term in a form of degree " + std::to_string(*deg));
      }
    }
    if (degree && deg && *degree != *deg) {
      ts_.fail_at(terms.front().start, "expected a form of degree " + std::to_string(*degree));
    }
    const int k = deg.value_or(degree.value_or(0));
    DifferentialForm out(n_, k);
    for (const auto& t : terms) {
      if (t.coeff == 0) continue;
      const DifferentialForm piece = DifferentialForm::basis_form(n_, t.basis, 1);
      for (const auto& [idx, p] : piece.components()) {
        out.add(idx, Polynomial::monomial(n_, t.mono, t.coeff * p.constant_term()));
      }
    }
    return out;
  }

 private:
  int parse_index(const Token& tok, std::string_view prefix) {
    const int i = indexed_name(tok, prefix);
    if (i < 1 || i > n_) {
      ts_.fail_at(tok, "index of " + std::string(prefix) + " outside 1.." + std::to_string(n_));
    }
    return i;
  }

  ParsedTerm parse_term() {
    ParsedTerm t;
    t.start = ts_.peek();
    bool any = false;
    while (true) {
      if (any) ts_.accept_symbol('*');
      const Token& tok = ts_.peek();
      if (tok.kind == Token::Kind::Number) {
        t.coeff *= parse_rational(ts_);
      } else if (indexed_name(tok, "dx") >= 0) {
        parse_basis(t);
        return t;
      } else if (indexed_name(tok, "x") >= 0) {
        const Token var = ts_.next();
        const int i = parse_index(var, "x");
        int e = 1;
        if (ts_.accept_symbol('^')) {
          const Token ex = ts_.peek();
          if (ex.kind != Token::Kind::Number) ts_.fail("expected exponent");
          ts_.next();
          e = std::stoi(ex.text.size() > 4 ? std::string("99999") : ex.text);
          if (e > 255) ts_.fail_at(ex, "exponent too large");
        }
        const int total = t.mono.exps[i - 1] + e;
        if (total > 255) ts_.fail_at(var, "exponent too large");
        t.mono.exps[i - 1] = static_cast<std::uint8_t>(total);
      } else {
        if (!any) ts_.fail("expected a coefficient, variable or basis element");
        return t;
      }
      any = true;
    }
  }

  void parse_basis(ParsedTerm& t) {
    t.has_basis = true;
    while (true) {
      const Token tok = ts_.next();
      t.basis.push_back(parse_index(tok, "dx"));
      if (ts_.is_symbol('^') && indexed_name(ts_.peek(1), "dx") >= 0) {
        ts_.next();
        continue;
      }
      if (ts_.is_symbol('^')) {
        ts_.next();
        ts_.fail("expected a basis element after '^'");
      }
      return;
    }
  }

  TokenStream ts_;
  int n_;
};

std::string basis_text(MultiIndex idx) {
  std::string out;
  for (int i : idx.indices()) {
    if (!out.empty()) out += '^';
    out += "dx" + std::to_string(i);
  }
  return out;
}

}  // namespace

DifferentialForm parse_form(std::string_view text, int n, std::optional<int> degree) {
  return FormParser(text, n).parse(degree);
}

Polynomial parse_polynomial(std::string_view text, int n) {
  const DifferentialForm f = parse_form(text, n, 0);
  if (f.degree() != 0) throw ParseError("expected a polynomial, found a form", 1, 1);
  return f.coefficient(MultiIndex{});
}

std::string format_form(const DifferentialForm& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, p] : a.components()) {
    const std::string b = basis_text(idx);
    for (const auto& [m, c] : p.terms()) {
      if (first) {
        if (c < 0) out += '-';
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      const Rational mag = abs(c);
      std::string body;
      const std::string mono = monomial_text(m);
      if (mag != 1 || (mono.empty() && b.empty())) body = to_string(mag);
      for (const std::string* part : {&mono, &b}) {
        if (part->empty()) continue;
        if (!body.empty()) body += ' ';
        body += *part;
      }
      out += body;
    }
  }
  return out;
}

}  // namespace holoforms
