#include "holoforms/structures.hpp"

#include <stdexcept>

#include "holoforms/errors.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"

namespace holoforms {

namespace {

constexpr const char* kPhi0 =
    "dx1^dx2^dx3 + dx1^dx4^dx5 + dx1^dx6^dx7 + dx2^dx4^dx6 - dx2^dx5^dx7 - dx3^dx4^dx7 - "
    "dx3^dx5^dx6";

constexpr const char* kPsi0 =
    "dx1^dx2^dx3^dx4 + dx1^dx2^dx5^dx6 + dx1^dx2^dx7^dx8 + dx1^dx3^dx5^dx7 - dx1^dx3^dx6^dx8 "
    "- dx1^dx4^dx5^dx8 - dx1^dx4^dx6^dx7 - dx2^dx3^dx5^dx8 - dx2^dx3^dx6^dx7 - dx2^dx4^dx5^dx7 "
    "+ dx2^dx4^dx6^dx8 + dx3^dx4^dx5^dx6 + dx3^dx4^dx7^dx8 + dx5^dx6^dx7^dx8";

DifferentialForm unit_basis(int n, MultiIndex idx) {
  DifferentialForm e(n, idx.size());
  e.add(idx, Polynomial(n, 1));
  return e;
}

std::vector<std::pair<MultiIndex, Rational>> constant_entries(const DifferentialForm& a) {
  std::vector<std::pair<MultiIndex, Rational>> out;
  for (const auto& [idx, p] : a.components()) out.emplace_back(idx, p.constant_term());
  return out;
}

Rational expected_norm(StructureKind kind, int m) {
  switch (kind) {
    case StructureKind::G2: return 7;
    case StructureKind::Spin7: return 14;
    case StructureKind::Kaehler: return m;
  }
  return 0;
}

int expected_dim(StructureKind kind, int m) {
  switch (kind) {
    case StructureKind::G2: return 7;
    case StructureKind::Spin7: return 8;
    case StructureKind::Kaehler: return 2 * m;
  }
  return 0;
}

int expected_degree(StructureKind kind) {
  switch (kind) {
    case StructureKind::G2: return 3;
    case StructureKind::Spin7: return 4;
    case StructureKind::Kaehler: return 2;
  }
  return 0;
}

}  // namespace

DifferentialForm apply_table(const BasisTable& table, const DifferentialForm& a, int out_degree) {
  DifferentialForm out(a.dim(), out_degree);
  for (const auto& [idx, p] : a.components()) {
    for (const auto& [jdx, c] : table[idx.bits()]) out.add(jdx, c * p);
  }
  return out;
}

StructureDescriptor::StructureDescriptor(StructureKind kind, int m, DifferentialForm omega)
    : kind_(kind), m_(m), omega_(std::move(omega)), star_omega_(hodge_star(omega_)) {
  const int n = omega_.dim();
  const int k = omega_.degree();
  if (n != expected_dim(kind, m) || k != expected_degree(kind)) {
    throw DimensionError("parallel form has the wrong dimension or degree for its kind");
  }
  if (!omega_.has_constant_coefficients()) throw std::invalid_argument("model form must have constant coefficients");
  if (!ext_d(omega_).is_zero() || !codifferential(omega_).is_zero()) {
    throw std::invalid_argument("model form is not closed and coclosed");
  }
  norm_ = pairing(omega_, omega_).constant_term();
  if (norm_ != expected_norm(kind, m)) {
    throw std::invalid_argument("model form has squared norm " + norm_.get_str() + ", expected " +
                                expected_norm(kind, m).get_str());
  }

  auto tables = std::make_shared<Tables>();
  const std::size_t size = std::size_t{1} << n;
  tables->lefschetz.resize(size);
  tables->adjoint.resize(size);
  tables->structure.resize(size);

  std::vector<DifferentialForm> c1;  // C(dxᵢ) = ∗(∗ω∧dxᵢ)
  for (int i = 1; i <= n; ++i) {
    c1.push_back(hodge_star(wedge(star_omega_, unit_basis(n, MultiIndex::single(i)))));
  }
  const Rational step = omega_.parity() == 0 ? 1 : -1;

  for (int deg = 0; deg <= n; ++deg) {
    for (MultiIndex idx : basis(n, deg)) {
      const DifferentialForm e = unit_basis(n, idx);
      tables->lefschetz[idx.bits()] = constant_entries(wedge(omega_, e));
      for (const auto& [jdx, c] : tables->lefschetz[idx.bits()]) {
        tables->adjoint[jdx.bits()].emplace_back(idx, c);
      }
      // C(dx^{i₁}∧…∧dx^{i_d}) = Σⱼ (−1)^{C̃(j−1)} dx^{i₁…i_{j−1}} ∧ C(dx^{iⱼ}) ∧ dx^{i_{j+1}…}
      DifferentialForm image(n, deg + k - 2);
      const std::vector<int> ids = idx.indices();
      Rational sign = 1;
      for (std::size_t j = 0; j < ids.size(); ++j) {
        const std::vector<int> head(ids.begin(), ids.begin() + j);
        const std::vector<int> tail(ids.begin() + j + 1, ids.end());
        const auto piece = wedge(wedge(DifferentialForm::basis_form(n, head), c1[ids[j] - 1]),
                                 DifferentialForm::basis_form(n, tail));
        image += sign * piece;
        sign *= step;
      }
      tables->structure[idx.bits()] = constant_entries(image);
    }
  }
  tables_ = tables;
  if (n - k == 4) {
    tables->spectrum = compute_type_spectrum(type_matrix(*this));
  }
}

StructureDescriptor StructureDescriptor::g2() {
  return StructureDescriptor(StructureKind::G2, 0, parse_form(kPhi0, 7));
}

StructureDescriptor StructureDescriptor::spin7() {
  return StructureDescriptor(StructureKind::Spin7, 0, parse_form(kPsi0, 8));
}

StructureDescriptor StructureDescriptor::kaehler(int m) {
  if (m < 1 || m > 6) throw DimensionError("Kaehler model supports 1 <= m <= 6");
  DifferentialForm w(2 * m, 2);
  for (int i = 1; i <= m; ++i) w += DifferentialForm::basis_form(2 * m, {2 * i - 1, 2 * i});
  return StructureDescriptor(StructureKind::Kaehler, m, w);
}

StructureDescriptor StructureDescriptor::from_form(StructureKind kind, const DifferentialForm& omega,
                                                   int m) {
  return StructureDescriptor(kind, kind == StructureKind::Kaehler ? m : 0, omega);
}

StructureDescriptor StructureDescriptor::parse(const std::string& name) {
  if (name == "g2") return g2();
  if (name == "spin7") return spin7();
  if (name == "kaehler") return kaehler(3);
  const std::string prefix = "kaehler:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.size() <= 2 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      return kaehler(std::stoi(digits));
    }
  }
  throw std::invalid_argument("unknown structure '" + name + "' (expected g2, spin7 or kaehler:<m>)");
}

std::string StructureDescriptor::name() const {
  switch (kind_) {
    case StructureKind::G2: return "g2";
    case StructureKind::Spin7: return "spin7";
    case StructureKind::Kaehler: return "kaehler:" + std::to_string(m_);
  }
  return "";
}

StructureDescriptor model_form(StructureKind kind, int m) {
  switch (kind) {
    case StructureKind::G2: return StructureDescriptor::g2();
    case StructureKind::Spin7: return StructureDescriptor::spin7();
    case StructureKind::Kaehler: return StructureDescriptor::kaehler(m);
  }
  throw std::invalid_argument("unknown structure kind");
}

bool has_type_operator(const StructureDescriptor& s) { return s.dim() - s.degree() == 4; }

DifferentialForm type_operator(const StructureDescriptor& s, const DifferentialForm& a) {
  if (!has_type_operator(s)) throw DegreeError("type operator needs n - deg(omega) = 4");
  if (a.degree() != 2) throw DegreeError("type operator acts on 2-forms");
  if (a.dim() != s.dim()) throw DimensionError("form and structure live in different dimensions");
  return hodge_star(apply_table(s.lefschetz_table(), a, 2 + s.degree()));
}

RationalMatrix type_matrix(const StructureDescriptor& s) {
  if (!has_type_operator(s)) throw DegreeError("type operator needs n - deg(omega) = 4");
  const auto b = basis(s.dim(), 2);
  const int size = static_cast<int>(b.size());
  RationalMatrix t(size, size);
  for (int c = 0; c < size; ++c) {
    const auto image = type_operator(s, unit_basis(s.dim(), b[c]));
    for (int r = 0; r < size; ++r) t(r, c) = image.coefficient(b[r]).constant_term();
  }
  return t;
}

TypeSpectrum compute_type_spectrum(const RationalMatrix& t) {
  TypeSpectrum spec;
  spec.minimal_polynomial = minimal_polynomial(t);
  spec.self_adjoint = t == t.transpose();
  const auto roots = rational_roots(spec.minimal_polynomial);
  spec.diagonalizable = roots.size() + 1 == spec.minimal_polynomial.size();
  for (const auto& lambda : roots) {
    const int nullity = t.rows() - (t - lambda * RationalMatrix::identity(t.rows())).rank();
    spec.components.push_back({"L2_" + std::to_string(nullity), lambda, nullity});
  }
  return spec;
}

TypeSpectrum type_spectrum(const StructureDescriptor& s) {
  if (!s.spectrum()) throw DegreeError("type operator needs n - deg(omega) = 4");
  return *s.spectrum();
}

DifferentialForm eigen_projection(const StructureDescriptor& s, const TypeSpectrum& spec,
                                  const Rational& eigenvalue, const DifferentialForm& a) {
  DifferentialForm out = a;
  bool found = false;
  for (const auto& comp : spec.components) {
    if (comp.eigenvalue == eigenvalue) {
      found = true;
      continue;
    }
    out = type_operator(s, out) - comp.eigenvalue * out;
    out *= Rational(1) / (eigenvalue - comp.eigenvalue);
  }
  if (!found) throw std::invalid_argument("not an eigenvalue of the type operator");
  return out;
}

std::pair<DifferentialForm, DifferentialForm> project2(const StructureDescriptor& s,
                                                        const DifferentialForm& a) {
  if (s.kind() == StructureKind::Kaehler) throw DegreeError("project2 is defined for G2 and Spin7");
  if (a.degree() != 2) throw DegreeError("project2 acts on 2-forms");
  const auto& spec = type_spectrum(s);
  for (const auto& comp : spec.components) {
    if (comp.multiplicity == 7) {
      DifferentialForm a7 = eigen_projection(s, spec, comp.eigenvalue, a);
      DifferentialForm rest = a - a7;
      return {std::move(a7), std::move(rest)};
    }
  }
  throw std::logic_error("type spectrum has no 7-dimensional summand");
}

RationalMatrix lefschetz_matrix(const StructureDescriptor& s, int k) {
  const int n = s.dim();
  if (k < 0 || k > n - s.degree()) {
    throw DegreeError("Lefschetz degree " + std::to_string(k) + " outside 0.." + std::to_string(n - s.degree()));
  }
  const auto src = basis(n, k);
  const auto dst = basis(n, k + s.degree());
  RationalMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [jdx, v] : s.lefschetz_table()[src[c].bits()]) {
      for (std::size_t r = 0; r < dst.size(); ++r) {
        if (dst[r] == jdx) {
          m(static_cast<int>(r), static_cast<int>(c)) = v;
          break;
        }
      }
    }
  }
  return m;
}

std::pair<int, int> lefschetz_rank(const StructureDescriptor& s, int k) {
  const RationalMatrix m = lefschetz_matrix(s, k);
  return {m.cols(), m.rank()};
}

}  // namespace holoforms
