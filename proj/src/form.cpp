#include "holoforms/form.hpp"

#include <string>

#include "holoforms/errors.hpp"

namespace holoforms {

MultiIndex MultiIndex::from_indices(const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  int last = 0;
  for (int i : indices) {
    if (i <= last) throw std::invalid_argument("multi-index must be strictly increasing");
    if (i > 32) throw DimensionError("multi-index entry beyond 32");
    bits |= 1u << (i - 1);
    last = i;
  }
  return MultiIndex(bits);
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if ((a.bits() & b.bits()) != 0) return 0;
  // Each pair (i in a, j in b) with i > j costs one transposition.
  int inversions = 0;
  for (std::uint32_t bb = b.bits(); bb != 0; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    inversions += std::popcount(a.bits() >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<MultiIndex> basis(int n, int degree) {
  std::vector<MultiIndex> out;
  if (degree < 0 || degree > n) return out;
  std::vector<int> idx(degree);
  for (int i = 0; i < degree; ++i) idx[i] = i + 1;
  while (true) {
    out.push_back(MultiIndex::from_indices(idx));
    int pos = degree - 1;
    while (pos >= 0 && idx[pos] == n - degree + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < degree; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

DifferentialForm::DifferentialForm(int dim, int degree) : dim_(dim), degree_(degree) {
  check_dim(dim);
}

DifferentialForm DifferentialForm::function(const Polynomial& f) {
  DifferentialForm out(f.dim(), 0);
  out.add(MultiIndex{}, f);
  return out;
}

DifferentialForm DifferentialForm::constant(int dim, const Rational& c) {
  return function(Polynomial(dim, c));
}

DifferentialForm DifferentialForm::basis_form(int dim, const std::vector<int>& indices,
                                              const Rational& c) {
  DifferentialForm out(dim, static_cast<int>(indices.size()));
  MultiIndex acc;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > dim) {
      throw DimensionError("basis index " + std::to_string(i) + " outside 1.." +
                           std::to_string(dim));
    }
    const MultiIndex single = MultiIndex::single(i);
    const int s = wedge_sign(acc, single);
    if (s == 0) return out;
    sign *= s;
    acc = MultiIndex(acc.bits() | single.bits());
  }
  out.add(acc, Polynomial(dim, c * sign));
  return out;
}

DifferentialForm DifferentialForm::volume(int dim) {
  DifferentialForm out(dim, dim);
  out.add(MultiIndex::full(dim), Polynomial(dim, 1));
  return out;
}

bool DifferentialForm::has_constant_coefficients() const {
  for (const auto& [idx, p] : comps_) {
    if (!p.is_constant()) return false;
  }
  return true;
}

Polynomial DifferentialForm::coefficient(MultiIndex index) const {
  auto it = comps_.find(index);
  return it == comps_.end() ? Polynomial(dim_) : it->second;
}

void DifferentialForm::add(MultiIndex index, const Polynomial& p) {
  if (p.dim() != dim_) throw DimensionError("coefficient lives in a different dimension");
  if (index.size() != degree_) throw DegreeError("component degree does not match form degree");
  if (index.max_index() > dim_) throw DimensionError("component index beyond dimension");
  if (p.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(index, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm out = *this;
  for (auto& [idx, p] : out.comps_) p = -p;
  return out;
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("form dimension mismatch");
  if (rhs.degree_ != degree_) throw DegreeError("adding forms of different degree");
  for (const auto& [idx, p] : rhs.comps_) add(idx, p);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& rhs) {
  if (rhs.dim_ != dim_) throw DimensionError("form dimension mismatch");
  if (rhs.degree_ != degree_) throw DegreeError("subtracting forms of different degree");
  for (const auto& [idx, p] : rhs.comps_) add(idx, -p);
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Rational& c) {
  if (c == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [idx, p] : comps_) p *= c;
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Polynomial& q) {
  if (q.dim() != dim_) throw DimensionError("form dimension mismatch");
  ComponentMap out;
  for (auto& [idx, p] : comps_) {
    Polynomial prod = p * q;
    if (!prod.is_zero()) out.emplace_hint(out.end(), idx, std::move(prod));
  }
  comps_ = std::move(out);
  return *this;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
}

VectorField::VectorField(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw DimensionError("vector field needs at least one component");
  const int n = static_cast<int>(comps_.size());
  for (const auto& c : comps_) {
    if (c.dim() != n) throw DimensionError("vector field component count must equal dimension");
  }
}

VectorField VectorField::coordinate(int dim, int index) {
  std::vector<Polynomial> comps(dim, Polynomial(dim));
  comps.at(index - 1) = Polynomial(dim, 1);
  return VectorField(std::move(comps));
}

VectorField VectorField::euler(int dim) {
  std::vector<Polynomial> comps;
  for (int i = 1; i <= dim; ++i) comps.push_back(Polynomial::variable(dim, i));
  return VectorField(std::move(comps));
}

}  // namespace holoforms
