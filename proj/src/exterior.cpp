#include "holoforms/exterior.hpp"

#include "holoforms/errors.hpp"

namespace holoforms {

namespace {

void require_same_dim(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("incompatible ambient spaces: dimension " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  const int k = a.degree() + b.degree();
  DifferentialForm out(n, k);
  if (k > n) return out;
  for (const auto& [ia, pa] : a.components()) {
    for (const auto& [ib, pb] : b.components()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      Polynomial prod = pa * pb;
      if (s < 0) prod = -prod;
      out.add(MultiIndex(ia.bits() | ib.bits()), prod);
    }
  }
  return out;
}

DifferentialForm hodge_star(const DifferentialForm& a) {
  const int n = a.dim();
  const MultiIndex all = MultiIndex::full(n);
  DifferentialForm out(n, n - a.degree());
  for (const auto& [idx, p] : a.components()) {
    const MultiIndex comp(all.bits() & ~idx.bits());
    out.add(comp, wedge_sign(idx, comp) > 0 ? p : -p);
  }
  return out;
}

DifferentialForm ext_d(const DifferentialForm& a) {
  const int n = a.dim();
  DifferentialForm out(n, a.degree() + 1);
  for (const auto& [idx, p] : a.components()) {
    for (int i = 1; i <= n; ++i) {
      if (idx.contains(i)) continue;
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      const MultiIndex di = MultiIndex::single(i);
      if (wedge_sign(di, idx) < 0) dp = -dp;
      out.add(MultiIndex(di.bits() | idx.bits()), dp);
    }
  }
  return out;
}

DifferentialForm codifferential(const DifferentialForm& a) {
  const int n = a.dim();
  const int k = a.degree();
  if (k <= 0) return DifferentialForm::zero(n, k - 1);
  DifferentialForm out = hodge_star(ext_d(hodge_star(a)));
  if ((n * k + n + 1) % 2 != 0) out = -out;
  return out;
}

DifferentialForm interior(const VectorField& x, const DifferentialForm& a) {
  const int n = a.dim();
  if (x.dim() != n) throw DimensionError("vector field and form live in different dimensions");
  DifferentialForm out(n, a.degree() - 1);
  for (const auto& [idx, p] : a.components()) {
    int position = 0;
    for (int j : idx.indices()) {
      const Polynomial& xj = x[j];
      if (!xj.is_zero()) {
        Polynomial c = xj * p;
        if (position % 2 != 0) c = -c;
        out.add(MultiIndex(idx.bits() & ~(1u << (j - 1))), c);
      }
      ++position;
    }
  }
  return out;
}

DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& a) {
  return ext_d(interior(x, a)) + interior(x, ext_d(a));
}

DifferentialForm laplacian(const DifferentialForm& a) {
  return ext_d(codifferential(a)) + codifferential(ext_d(a));
}

Polynomial pairing(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_dim(a, b);
  if (a.degree() != b.degree()) {
    throw DegreeError("pairing needs equal degrees, got " + std::to_string(a.degree()) + " and " +
                      std::to_string(b.degree()));
  }
  Polynomial out(a.dim());
  auto ib = b.components().begin();
  const auto eb = b.components().end();
  MultiIndexOrder less;
  for (const auto& [idx, p] : a.components()) {
    while (ib != eb && less(ib->first, idx)) ++ib;
    if (ib != eb && ib->first == idx) out += p * ib->second;
  }
  return out;
}

DifferentialForm componentwise_laplacian(const DifferentialForm& a) {
  DifferentialForm out(a.dim(), a.degree());
  for (const auto& [idx, p] : a.components()) out.add(idx, -flat_laplacian(p));
  return out;
}

}  // namespace holoforms
