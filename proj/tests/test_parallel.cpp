#include <gtest/gtest.h>

#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/parallel.hpp"
#include "holoforms/random_forms.hpp"

using namespace holoforms;

namespace {

std::vector<StructureDescriptor> all_structures() {
  return {StructureDescriptor::g2(), StructureDescriptor::spin7(), StructureDescriptor::kaehler(3)};
}

FormGenOptions small() {
  FormGenOptions o;
  o.max_poly_degree = 2;
  o.max_poly_terms = 2;
  return o;
}

Rational sign(int e) { return e % 2 ? -1 : 1; }

}  // namespace

TEST(StructureOperator, VanishesOnFunctions) {
  for (const auto& s : all_structures()) {
    RandomSource rng(1);
    const auto f = random_form(rng, s.dim(), 0);
    EXPECT_TRUE(structure_op_C(s, f).is_zero());
  }
}

TEST(StructureOperator, OneFormsAgreeWithStarFormula) {
  for (const auto& s : all_structures()) {
    for (int i = 1; i <= s.dim(); ++i) {
      const auto dx = DifferentialForm::basis_form(s.dim(), {i});
      EXPECT_EQ(structure_op_C(s, dx), hodge_star(wedge(s.star_omega(), dx))) << s.name() << " i=" << i;
    }
  }
}

TEST(StructureOperator, G2Dx1IsContractionInSevenSummand) {
  const auto s = StructureDescriptor::g2();
  const auto c = structure_op_C(s, parse_form("dx1", 7));
  EXPECT_EQ(c, parse_form("dx2^dx3 + dx4^dx5 + dx6^dx7", 7));
  EXPECT_EQ(type_operator(s, c), Rational(2) * c);
}

TEST(StructureOperator, GradedLeibniz) {
  for (const auto& s : all_structures()) {
    RandomSource rng(2);
    for (int t = 0; t < 40; ++t) {
      const int p = rng.uniform(0, s.dim());
      const int q = rng.uniform(0, s.dim() - p);
      const auto a = random_form(rng, s.dim(), p, small());
      const auto b = random_form(rng, s.dim(), q, small());
      const auto lhs = structure_op_C(s, wedge(a, b));
      const auto rhs = wedge(structure_op_C(s, a), b) + sign(s.parity() * p) * wedge(a, structure_op_C(s, b));
      EXPECT_EQ(lhs, rhs) << s.name() << " degrees " << p << "," << q;
    }
  }
}

TEST(Lefschetz, LeftMultiplication) {
  const auto s = StructureDescriptor::g2();
  RandomSource rng(3);
  for (int k = 0; k <= 4; ++k) {
    const auto a = random_form(rng, 7, k);
    EXPECT_EQ(lefschetz_L(s, a), wedge(s.omega(), a));
  }
}

TEST(Lefschetz, AdjointPairing) {
  for (const auto& s : all_structures()) {
    RandomSource rng(4);
    for (int t = 0; t < 100; ++t) {
      const int k = rng.uniform(0, s.dim() - s.degree());
      const auto a = random_form(rng, s.dim(), k, small());
      const auto b = random_form(rng, s.dim(), k + s.degree(), small());
      EXPECT_EQ(pairing(lefschetz_L(s, a), b), pairing(a, adjoint_Lambda(s, b)));
    }
  }
}

TEST(Lefschetz, LambdaOfOmegaIsNorm) {
  const auto s = StructureDescriptor::g2();
  EXPECT_EQ(adjoint_Lambda(s, s.omega()), DifferentialForm::constant(7, 7));
  EXPECT_TRUE(adjoint_Lambda(s, parse_form("x1 dx2", 7)).is_zero());
  EXPECT_EQ(adjoint_Lambda(StructureDescriptor::spin7(), StructureDescriptor::spin7().omega()),
            DifferentialForm::constant(8, 14));
}

TEST(TwistedDifferential, Examples) {
  for (const auto& s : all_structures()) {
    EXPECT_TRUE(d_C(s, DifferentialForm::constant(s.dim(), 1)).is_zero());
    RandomSource rng(5);
    for (int t = 0; t < 20; ++t) {
      const auto f = random_polynomial(rng, s.dim());
      const auto F = DifferentialForm::function(f);
      EXPECT_TRUE((d_C(s, F) + sign(s.degree()) * codifferential(f * s.omega())).is_zero());
      // Independent route: d*(fω) = −i_∇f ω for constant ω.
      std::vector<Polynomial> grad;
      for (int i = 1; i <= s.dim(); ++i) grad.push_back(f.derivative(i));
      EXPECT_EQ(d_C(s, F), sign(s.degree()) * interior(VectorField(grad), s.omega()));
    }
  }
}

TEST(TwistedDifferential, DegreeShifts) {
  for (const auto& s : all_structures()) {
    RandomSource rng(6);
    for (int k = 1; k < s.dim(); ++k) {
      const auto a = random_form(rng, s.dim(), k, small());
      EXPECT_EQ(op_d_C(s)(a).degree(), k + s.degree() - 1);
      EXPECT_EQ(op_d_C_star(s)(a).degree(), k - s.degree() + 1);
      EXPECT_EQ(op_C(s)(a).degree(), k + s.degree() - 2);
    }
  }
}

// The derivation-side expression dC − (−1)^k C d equals −d_C exactly.
TEST(TwistedDifferential, ViaStructureIsNegativeOfCanonical) {
  for (const auto& s : all_structures()) {
    RandomSource rng(7);
    for (int k = 0; k <= s.dim(); ++k) {
      const auto a = random_form(rng, s.dim(), k, small());
      EXPECT_EQ(d_C_via_structure(s, a), -d_C(s, a)) << s.name() << " degree " << k;
    }
  }
}

TEST(Supercommutator, DWithItselfIsTwiceDSquared) {
  const auto d = op_d(7);
  RandomSource rng(8);
  for (int k = 0; k < 7; ++k) {
    EXPECT_TRUE(supercommutator(d, d, random_form(rng, 7, k)).is_zero());
  }
}

TEST(Supercommutator, SignUsesBothParities) {
  // L_ω for G₂ is odd, d is odd: {d, L} = dL + Ld.
  const auto s = StructureDescriptor::g2();
  const auto d = op_d(7);
  const auto L = op_L(s);
  const auto a = parse_form("x1^2 dx2", 7);
  EXPECT_EQ(supercommutator(d, L, a), d(L(a)) + L(d(a)));
  // ω is closed and constant, so {d, L} = 0.
  EXPECT_TRUE(supercommutator(d, L, a).is_zero());
}

TEST(GradedOperatorTest, RejectsWrongShift) {
  GradedOperator bad{"bad", 2, 0, [](const DifferentialForm& a) { return a; }};
  EXPECT_THROW(bad(parse_form("dx1", 7)), std::logic_error);
}

TEST(GradedOperatorTest, OperatorsAreLinear) {
  for (const auto& s : all_structures()) {
    RandomSource rng(9);
    for (const auto& op : {op_C(s), op_L(s), op_Lambda(s), op_d_C(s), op_d_C_star(s)}) {
      for (int t = 0; t < 5; ++t) {
        const int k = rng.uniform(0, s.dim());
        const auto a = random_form(rng, s.dim(), k, small());
        const auto b = random_form(rng, s.dim(), k, small());
        const Rational c = ratio(rng.uniform(-3, 3), 2);
        EXPECT_EQ(op(a + c * b), op(a) + c * op(b)) << op.name;
      }
    }
  }
}

TEST(Verbitsky, HarmonicCoefficientExample) {
  const auto s = StructureDescriptor::g2();
  const auto a = parse_form("x1^2 dx1 - x2^2 dx1", 7);
  EXPECT_TRUE(laplacian(a).is_zero());
  EXPECT_TRUE(laplacian(lefschetz_L(s, a)).is_zero());
}

TEST(Verbitsky, SuitePassesOnEveryStructure) {
  for (const auto& s : all_structures()) {
    const auto r = verify_verbitsky(s, 10, 1);
    EXPECT_EQ(r.status, Status::ExactPass) << s.name();
    for (const auto& rep : verbitsky_suite(s, 5, 2)) {
      const bool literal_routes = rep.id == s.name() + ".dc_routes";
      EXPECT_EQ(rep.passed(), !literal_routes) << rep.id;
      if (!rep.passed()) {
        EXPECT_TRUE(rep.counterexample.has_value());
      }
    }
  }
}
