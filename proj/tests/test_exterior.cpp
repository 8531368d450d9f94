#include <gtest/gtest.h>

#include "holoforms/errors.hpp"
#include "holoforms/exterior.hpp"
#include "holoforms/form_text.hpp"
#include "holoforms/random_forms.hpp"

using namespace holoforms;

namespace {

DifferentialForm F(const std::string& s, int n) { return parse_form(s, n); }
Polynomial P(const std::string& s, int n) { return parse_polynomial(s, n); }

const char* kPhi0 =
    "dx1^dx2^dx3 + dx1^dx4^dx5 + dx1^dx6^dx7 + dx2^dx4^dx6 - dx2^dx5^dx7 - dx3^dx4^dx7 - "
    "dx3^dx5^dx6";

// Permutation sign of a sequence of distinct integers, by selection sort.
int perm_sign(std::vector<int> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[j] < v[i]) s = -s;
    }
  }
  return s;
}

}  // namespace

TEST(Polynomial, ArithmeticIsExact) {
  const Polynomial a = P("1/3 x1 + 1/6", 2);
  const Polynomial b = P("3 x1 - 1/2", 2);
  EXPECT_EQ(to_string(a * b), "-1/12 + 1/3 x1 + x1^2");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(to_string(P("x1^2 x2", 3).derivative(1)), "2 x1 x2");
}

TEST(Polynomial, RejectsBadDimension) {
  EXPECT_THROW(Polynomial(0), DimensionError);
  EXPECT_THROW(Polynomial(17), DimensionError);
  EXPECT_THROW(Polynomial::variable(3, 4), DimensionError);
}

TEST(Wedge, BasisProducts) {
  EXPECT_EQ(wedge(F("dx1", 3), F("dx2", 3)), F("dx1^dx2", 3));
  EXPECT_EQ(wedge(F("dx2", 3), F("dx1", 3)), F("-dx1^dx2", 3));
  EXPECT_TRUE(wedge(F("dx1", 3), F("dx1", 3)).is_zero());
}

TEST(Wedge, PhiWedgeStarPhiIsSevenVolume) {
  const auto phi = F(kPhi0, 7);
  EXPECT_EQ(wedge(phi, hodge_star(phi)), Rational(7) * DifferentialForm::volume(7));
}

TEST(Wedge, DimensionMismatchThrows) {
  EXPECT_THROW(wedge(F("dx1", 3), F("dx1", 4)), DimensionError);
}

TEST(Wedge, OverlongDegreeGivesTaggedZero) {
  const auto a = wedge(F("dx1^dx2", 3), F("dx1^dx3", 3));
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.degree(), 4);
}

TEST(HodgeStar, Examples) {
  EXPECT_EQ(hodge_star(DifferentialForm::constant(5, 1)), DifferentialForm::volume(5));
  EXPECT_EQ(hodge_star(F("dx1^dx2^dx3", 7)), F("dx4^dx5^dx6^dx7", 7));
}

TEST(HodgeStar, MatchesPermutationOracle) {
  // ∗dx^I = sign(I, I^c) dx^{I^c}, with the sign computed from the
  // concatenated index sequence.
  for (int n : {6, 7, 8}) {
    for (int k = 0; k <= n; ++k) {
      for (MultiIndex idx : basis(n, k)) {
        std::vector<int> seq = idx.indices();
        std::vector<int> comp;
        for (int i = 1; i <= n; ++i) {
          if (!idx.contains(i)) comp.push_back(i);
        }
        seq.insert(seq.end(), comp.begin(), comp.end());
        DifferentialForm a(n, k);
        a.add(idx, Polynomial(n, 1));
        EXPECT_EQ(hodge_star(a), DifferentialForm::basis_form(n, comp, perm_sign(seq)));
      }
    }
  }
}

TEST(ExtD, Examples) {
  EXPECT_EQ(ext_d(DifferentialForm::function(P("x1", 4))), F("dx1", 4));
  EXPECT_EQ(ext_d(F("x1 dx2", 4)), F("dx1^dx2", 4));
}

TEST(Codifferential, Examples) {
  const auto z = codifferential(DifferentialForm::function(P("x1^2 + x2", 7)));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.degree(), -1);
  EXPECT_EQ(codifferential(F("x1 dx1", 7)), DifferentialForm::constant(7, -1));
  EXPECT_EQ(codifferential(ext_d(DifferentialForm::function(P("x1^2", 7)))),
            DifferentialForm::constant(7, -2));
}

TEST(Codifferential, DivergenceOracleOnOneForms) {
  // On 1-forms d*(Σ aᵢ dxᵢ) = −Σ ∂ᵢaᵢ.
  for (int n : {6, 7, 8}) {
    for (int t = 0; t < 20; ++t) {
      auto rng = RandomSource::for_trial(11, t);
      const auto a = random_form(rng, n, 1);
      Polynomial div(n);
      for (int i = 1; i <= n; ++i) div -= a.coefficient(MultiIndex::single(i)).derivative(i);
      EXPECT_EQ(codifferential(a), DifferentialForm::function(div));
    }
  }
}

TEST(Interior, Examples) {
  EXPECT_EQ(interior(VectorField::coordinate(3, 1), F("dx1^dx2", 3)), F("dx2", 3));
  EXPECT_EQ(interior(VectorField::coordinate(7, 1), F(kPhi0, 7)),
            F("dx2^dx3 + dx4^dx5 + dx6^dx7", 7));
  EXPECT_TRUE(interior(VectorField::coordinate(3, 1), DifferentialForm::constant(3, 2)).is_zero());
}

TEST(Interior, GradientContractionIsMinusCodifferential) {
  const auto phi = F(kPhi0, 7);
  for (int t = 0; t < 10; ++t) {
    auto rng = RandomSource::for_trial(5, t);
    const Polynomial f = random_polynomial(rng, 7);
    std::vector<Polynomial> g;
    for (int i = 1; i <= 7; ++i) g.push_back(f.derivative(i));
    EXPECT_TRUE((interior(VectorField(g), phi) + codifferential(f * phi)).is_zero());
  }
}

TEST(LieDerivative, Examples) {
  EXPECT_EQ(lie_derivative(VectorField::coordinate(3, 1), F("x1 dx2", 3)), F("dx2", 3));
  const Polynomial f = Rational(1, 6) * radius_squared(7);
  std::vector<Polynomial> g;
  for (int i = 1; i <= 7; ++i) g.push_back(f.derivative(i));
  EXPECT_EQ(lie_derivative(VectorField(g), F(kPhi0, 7)), F(kPhi0, 7));
}

TEST(LieDerivative, EulerScalesConstantFormsByDegree) {
  for (int n : {6, 7, 8}) {
    for (int k = 0; k <= n; ++k) {
      auto rng = RandomSource::for_trial(n, k);
      FormGenOptions opt;
      opt.constant = true;
      const auto c = random_form(rng, n, k, opt);
      EXPECT_EQ(lie_derivative(VectorField::euler(n), c), Rational(k) * c);
    }
  }
}

TEST(Laplacian, Examples) {
  EXPECT_TRUE(laplacian(DifferentialForm::function(P("x1^2 - x2^2", 3))).is_zero());
  EXPECT_EQ(laplacian(DifferentialForm::function(P("x1^2", 3))), DifferentialForm::constant(3, -2));
}

TEST(Pairing, Examples) {
  EXPECT_TRUE(pairing(F("dx1", 3), F("dx2", 3)).is_zero());
  EXPECT_EQ(pairing(F(kPhi0, 7), F(kPhi0, 7)), Polynomial(7, 7));
  EXPECT_THROW(pairing(F("dx1", 3), F("dx1^dx2", 3)), DegreeError);
}

TEST(FormText, ParseExamples) {
  auto a = F("dx1^dx2 + 3/2 x3 dx4^dx5", 5);
  EXPECT_EQ(a.coefficient(MultiIndex::from_indices({4, 5})), P("3/2 x3", 5));
  EXPECT_EQ(F("dx2^dx1", 3), F("-dx1^dx2", 3));
  EXPECT_TRUE(F("dx1^dx1", 3).is_zero());
  EXPECT_EQ(format_form(F("x1*x1*dx2 - 2 dx3", 3)), "x1^2 dx2 - 2 dx3");
}

TEST(FormText, Errors) {
  try {
    F("dx1 +\n  @", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
  EXPECT_THROW(F("dx9", 3), ParseError);
  EXPECT_THROW(F("dx1 + dx1^dx2", 3), ParseError);
  EXPECT_THROW(F("dx1 + 2", 3), ParseError);
  EXPECT_THROW(F("1/0", 3), ParseError);
  EXPECT_THROW(F("dx1 ^", 3), ParseError);
}

// Invariants over random inputs.

class RandomForms : public ::testing::TestWithParam<int> {};

TEST_P(RandomForms, DSquaredAndIISquaredVanish) {
  const int n = GetParam();
  for (int t = 0; t < 30; ++t) {
    auto rng = RandomSource::for_trial(100 + n, t);
    const int k = rng.uniform(0, n);
    const auto a = random_form(rng, n, k);
    const auto x = random_vector_field(rng, n);
    EXPECT_TRUE(ext_d(ext_d(a)).is_zero());
    EXPECT_TRUE(interior(x, interior(x, a)).is_zero());
  }
}

TEST_P(RandomForms, DoubleStarSign) {
  const int n = GetParam();
  for (int k = 0; k <= n; ++k) {
    auto rng = RandomSource::for_trial(200 + n, k);
    const auto a = random_form(rng, n, k);
    const Rational s = (k * (n - k)) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(hodge_star(hodge_star(a)), s * a);
  }
}

TEST_P(RandomForms, WedgeStarIsPairingVolume) {
  const int n = GetParam();
  for (int t = 0; t < 20; ++t) {
    auto rng = RandomSource::for_trial(300 + n, t);
    const int k = rng.uniform(0, n);
    const auto a = random_form(rng, n, k);
    const auto b = random_form(rng, n, k);
    EXPECT_EQ(wedge(a, hodge_star(b)), pairing(a, b) * DifferentialForm::volume(n));
  }
}

TEST_P(RandomForms, LeibnizRules) {
  const int n = GetParam();
  for (int t = 0; t < 20; ++t) {
    auto rng = RandomSource::for_trial(400 + n, t);
    const int k = rng.uniform(0, 3);
    const auto a = random_form(rng, n, k);
    const auto b = random_form(rng, n, rng.uniform(0, 3));
    const auto x = random_vector_field(rng, n);
    const Rational s = k % 2 == 0 ? 1 : -1;
    EXPECT_EQ(ext_d(wedge(a, b)), wedge(ext_d(a), b) + s * wedge(a, ext_d(b)));
    EXPECT_EQ(interior(x, wedge(a, b)), wedge(interior(x, a), b) + s * wedge(a, interior(x, b)));
  }
}

TEST_P(RandomForms, LaplacianIsComponentwise) {
  const int n = GetParam();
  for (int t = 0; t < 15; ++t) {
    auto rng = RandomSource::for_trial(500 + n, t);
    const auto a = random_form(rng, n, rng.uniform(0, n));
    EXPECT_EQ(laplacian(a), componentwise_laplacian(a));
  }
}

TEST_P(RandomForms, FunctionCodifferentialOfGradient) {
  const int n = GetParam();
  for (int t = 0; t < 15; ++t) {
    auto rng = RandomSource::for_trial(600 + n, t);
    const Polynomial f = random_polynomial(rng, n);
    EXPECT_EQ(codifferential(ext_d(DifferentialForm::function(f))),
              DifferentialForm::function(-flat_laplacian(f)));
  }
}

TEST_P(RandomForms, FormatParseRoundTrip) {
  const int n = GetParam();
  for (int t = 0; t < 100; ++t) {
    auto rng = RandomSource::for_trial(700 + n, t);
    const int k = rng.uniform(0, n);
    const auto a = random_form(rng, n, k);
    const std::string s = format_form(a);
    const auto b = parse_form(s, n, k);
    EXPECT_EQ(a, b) << s;
    EXPECT_EQ(format_form(b), s);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, RandomForms, ::testing::Values(6, 7, 8));

TEST(RandomSource, ReproducibleStreams) {
  auto a = RandomSource::for_trial(42, 3);
  auto b = RandomSource::for_trial(42, 3);
  auto c = RandomSource::for_trial(42, 4);
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    const int x = a.uniform(-3, 3);
    EXPECT_EQ(x, b.uniform(-3, 3));
    differs |= x != c.uniform(-3, 3);
  }
  EXPECT_TRUE(differs);
}

TEST(RandomSource, HarmonicGeneratorIsHarmonic) {
  for (int t = 0; t < 50; ++t) {
    auto rng = RandomSource::for_trial(9, t);
    EXPECT_TRUE(flat_laplacian(random_harmonic_polynomial(rng, 7)).is_zero());
  }
}
