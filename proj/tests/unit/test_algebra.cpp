#include <gtest/gtest.h>

#include <random>

#include "qhopf/error.hpp"
#include "qhopf/parse.hpp"
#include "test_support.hpp"

using namespace qhopf;
using qhopf::testing::gen;
using qhopf::testing::preset;
using qhopf::testing::random_element;

namespace {

const AlgebraPtr& abelian4() { return preset(PresetId::abelian, 4).presentation->algebra; }
const AlgebraPtr& qsl2(int N) { return preset(PresetId::qsl2, N).presentation->algebra; }

TensorElement P(const AlgebraPtr& alg, const std::string& text, int arity = 1) {
  return parse_element(text, alg, arity);
}

}  // namespace

TEST(Algebra, GeneratorTableValidation) {
  EXPECT_THROW(GeneratorTable({"x", "x"}), Error);
  EXPECT_THROW(GeneratorTable({"h"}), Error);
  EXPECT_THROW(GeneratorTable({""}), Error);
  GeneratorTable t({"F", "H", "E"});
  EXPECT_EQ(t.index_of("E"), 2);
  EXPECT_FALSE(t.index_of("K").has_value());
}

TEST(Algebra, AbelianCommutes) {
  const auto& alg = abelian4();
  EXPECT_EQ(gen(alg, "y") * gen(alg, "x"), gen(alg, "x") * gen(alg, "y"));
  EXPECT_EQ(print_element(gen(alg, "y") * gen(alg, "x")), "x*y");
}

TEST(Algebra, Qsl2CartanRelations) {
  const auto& alg = qsl2(4);
  const auto E = gen(alg, "E"), F = gen(alg, "F"), H = gen(alg, "H");
  // normal order is F < H < E, so H*E is already normal and E*H straightens
  EXPECT_EQ(E * H + E * TruncScalar::constant(2, 4), H * E);
  EXPECT_EQ(H * F, F * H - F * TruncScalar::constant(2, 4));
  EXPECT_EQ(print_element(E * H), "-2 * E + H*E");
}

TEST(Algebra, Qsl2EFExpansion) {
  // sinh(hH)/sinh(h) = H + h^2 (H^3 - H)/6 + h^4 (H^5/120 - H^3/36 + 7H/360) + O(h^6),
  // hand-expanded from the two odd series.
  const auto& alg = qsl2(4);
  const auto E = gen(alg, "E"), F = gen(alg, "F");
  const TensorElement expected =
      F * E + P(alg, "H + 1/6*h^2*H^3 - 1/6*h^2*H + 1/120*h^4*H^5 - 1/36*h^4*H^3 + 7/360*h^4*H");
  EXPECT_EQ(E * F, expected);

  // at N=1 only the classical commutator survives
  const auto& a1 = qsl2(1);
  EXPECT_EQ(gen(a1, "E") * gen(a1, "F"), gen(a1, "F") * gen(a1, "E") + gen(a1, "H"));
}

TEST(Algebra, TensorMultiplyExamples) {
  const auto& alg = abelian4();
  const auto x1 = P(alg, "x # 1", 2), y2 = P(alg, "1 # y", 2);
  EXPECT_EQ(tensor_multiply(x1, y2), P(alg, "x # y", 2));
  const auto a = P(alg, "h*x^2 # y - 3 # x*y", 2);
  EXPECT_EQ(TensorElement::unit(alg, 2) * a, a);
  EXPECT_EQ(a * TensorElement::unit(alg, 2), a);

  const auto& q = qsl2(4);
  EXPECT_EQ(P(q, "E # 1", 2) * P(q, "H # 1", 2), P(q, "(H*E - 2*E) # 1", 2));
  EXPECT_THROW(tensor_multiply(x1, gen(alg, "x")), ArityMismatch);
}

TEST(Algebra, EmbedJSigma) {
  const auto& alg = abelian4();
  EXPECT_EQ(embed_j_sigma(P(alg, "x # y", 2), SubsetIndex({1, 3}, 3)), P(alg, "x # 1 # y", 3));
  EXPECT_EQ(embed_j_sigma(TensorElement::scalar(alg, 0, TruncScalar::constant(5, 4)), SubsetIndex({}, 2)),
            P(alg, "5 # 1", 2));
  EXPECT_EQ(embed_j_sigma(gen(alg, "x"), SubsetIndex({2}, 3)), P(alg, "1 # x # 1", 3));
  EXPECT_THROW(embed_j_sigma(gen(alg, "x"), SubsetIndex({1, 2}, 3)), ArityMismatch);
  // block width 2: pair i goes to legs (2i-1, 2i)
  EXPECT_EQ(embed_j_sigma(P(alg, "x # y", 2), SubsetIndex({2}, 2), 2), P(alg, "1 # 1 # x # y", 4));
}

TEST(Algebra, ApplyFlip) {
  const auto& alg = qsl2(2);
  EXPECT_EQ(apply_flip(P(alg, "E # F", 2), 1, 2), P(alg, "F # E", 2));
  EXPECT_EQ(apply_flip(P(alg, "E # F # H # E*F", 4), 2, 3), P(alg, "E # H # F # E*F", 4));
  EXPECT_EQ(apply_flip(TensorElement::unit(alg, 4), 1, 3), TensorElement::unit(alg, 4));
  EXPECT_THROW(apply_flip(P(alg, "E # F", 2), 1, 3), OutOfRange);
}

TEST(Algebra, TensorInvert) {
  const auto& alg = abelian4();
  const TensorElement r = *preset(PresetId::abelian, 4).presentation->r_matrix;
  // exp(-h x (x) y), written out term by term
  const TensorElement expected =
      P(alg, "1 # 1 - h*x # y + 1/2*h^2*x^2 # y^2 - 1/6*h^3*x^3 # y^3 + 1/24*h^4*x^4 # y^4", 2);
  EXPECT_EQ(tensor_invert(r), expected);
  EXPECT_EQ(tensor_invert(r) * r, TensorElement::unit(alg, 2));
  EXPECT_EQ(tensor_invert(TensorElement::unit(alg, 2)), TensorElement::unit(alg, 2));
  EXPECT_THROW(tensor_invert(P(alg, "h*x # y", 2)), NotInvertible);
  EXPECT_THROW(tensor_invert(P(alg, "1 # 1 + x # y", 2)), NotInvertible);
  EXPECT_EQ(tensor_invert(P(alg, "2 # 1", 2)), P(alg, "1/2 # 1", 2));
}

TEST(Algebra, HCoefficient) {
  const auto& alg = abelian4();
  const TensorElement r = *preset(PresetId::abelian, 4).presentation->r_matrix;
  EXPECT_EQ(h_coefficient(r, 1), P(alg, "x # y", 2));
  EXPECT_EQ(h_coefficient(r, 2), P(alg, "1/2 * x^2 # y^2", 2));
  EXPECT_EQ(h_coefficient(TensorElement::unit(alg, 2), 0), TensorElement::unit(alg, 2));
  EXPECT_THROW(h_coefficient(r, 5), OutOfRange);
  EXPECT_THROW(h_coefficient(r, -1), OutOfRange);
}

TEST(Parse, GrammarInstances) {
  const auto& alg = abelian4();
  TensorElement expected(alg, 2);
  expected.add_term(ExponentKey{1, 1, 0, 0}, TruncScalar::monomial(1, 2, 4));
  expected.add_term(ExponentKey{1, 0, 0, 1}, TruncScalar::monomial(1, 1, 4));
  EXPECT_EQ(P(alg, "h^2 * x*y # 1 + h * x # y", 2), expected);
  EXPECT_EQ(P(alg, "1 # 1", 2), TensorElement::unit(alg, 2));
  EXPECT_EQ(P(alg, "  (x+y)^2 ", 1), P(alg, "x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P(alg, "h^5*x"), TensorElement(alg, 1));
  EXPECT_EQ(P(alg, "-x + 1/2*h^3 * y"), gen(alg, "x") * TruncScalar::constant(-1, 4) +
                                             gen(alg, "y") * TruncScalar::monomial(Rational(1, 2), 3, 4));
}

TEST(Parse, Errors) {
  const auto& alg = abelian4();
  EXPECT_THROW(P(alg, "x # # y", 2), ParseError);
  try {
    P(alg, "x # # y", 2);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(P(alg, "x * z"), UnknownGenerator);
  EXPECT_THROW(P(alg, "x # y", 1), ParseError);
  EXPECT_THROW(P(alg, "x # y", 3), ParseError);
  EXPECT_THROW(P(alg, "(x", 1), ParseError);
  EXPECT_THROW(P(alg, "1/0", 1), ParseError);
  EXPECT_THROW(P(alg, "", 1), ParseError);
}

TEST(Parse, PrintingIsDeterministic) {
  const auto& alg = abelian4();
  EXPECT_EQ(print_element(P(alg, "h^2 * y # x + h^2 * x # y", 2)), "h^2 * (x # y) + h^2 * (y # x)");
  EXPECT_EQ(print_element(TensorElement(alg, 2)), "0");
  EXPECT_EQ(print_element(P(alg, "3 + h", 1)), "(3 + h)");
  EXPECT_EQ(print_element(P(alg, "-x", 1)), "-x");
}

TEST(AlgebraProperty, RoundTripParsePrint) {
  std::mt19937_64 rng(5);
  for (PresetId id : {PresetId::abelian, PresetId::qsl2})
    for (int legs : {1, 2, 3})
      for (int trial = 0; trial < 40; ++trial) {
        const auto& alg = preset(id, 3).presentation->algebra;
        const TensorElement a = random_element(alg, legs, rng, 5, 3);
        EXPECT_EQ(parse_element(print_element(a), alg, legs), a) << print_element(a);
      }
}

TEST(AlgebraProperty, AssociativityAndUnit) {
  std::mt19937_64 rng(6);
  for (PresetId id : {PresetId::trivial, PresetId::abelian, PresetId::qsl2}) {
    const auto& alg = preset(id, 3).presentation->algebra;
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_element(alg, 1, rng, 3, 3), b = random_element(alg, 1, rng, 3, 3),
                 c = random_element(alg, 1, rng, 3, 3);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(TensorElement::unit(alg, 1) * a, a);
      EXPECT_EQ(a * TensorElement::unit(alg, 1), a);
    }
  }
}

TEST(AlgebraProperty, GeneratorWordAssociativityQsl2) {
  // every length-3 word in the generators, both bracketings
  const auto& alg = qsl2(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const auto a = TensorElement::generator(alg, i), b = TensorElement::generator(alg, j),
                   c = TensorElement::generator(alg, k);
        EXPECT_EQ((a * b) * c, a * (b * c));
      }
}

TEST(AlgebraProperty, EmbeddingIsMorphismAndFlipInvolution) {
  std::mt19937_64 rng(7);
  const auto& alg = qsl2(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_element(alg, 2, rng), b = random_element(alg, 2, rng);
    const SubsetIndex sigma({1, 3}, 3);
    EXPECT_EQ(embed_j_sigma(a * b, sigma), embed_j_sigma(a, sigma) * embed_j_sigma(b, sigma));
    EXPECT_EQ(apply_flip(apply_flip(a, 1, 2), 1, 2), a);
    EXPECT_EQ(apply_flip(a * b, 1, 2), apply_flip(a, 1, 2) * apply_flip(b, 1, 2));
  }
}

TEST(AlgebraProperty, InverseOfRandomUnit) {
  std::mt19937_64 rng(8);
  const auto& alg = qsl2(3);
  for (int trial = 0; trial < 10; ++trial) {
    const TensorElement a = TensorElement::unit(alg, 2) + random_element(alg, 2, rng, 3, 2, 1);
    const TensorElement b = tensor_invert(a);
    EXPECT_EQ(a * b, TensorElement::unit(alg, 2));
    EXPECT_EQ(b * a, TensorElement::unit(alg, 2));
  }
}

TEST(Algebra, DivergentRewriteIsReported) {
  // b*a -> a^2*b^2 grows without bound when straightening b*a^2
  const int N = 2;
  TermMap rhs;
  rhs.emplace(ExponentKey{2, 2}, TruncScalar::one(N));
  RewriteLimits limits;
  limits.step_budget = 20'000;
  limits.depth_budget = 60;
  auto alg = std::make_shared<Algebra>(GeneratorTable({"a", "b"}), std::vector<Relation>{{1, 0, rhs}}, N, limits);
  EXPECT_THROW(alg->multiply(ExponentKey{0, 1}, ExponentKey{2, 0}), Divergence);
}

TEST(Algebra, MissingRuleIsAnError) {
  auto alg = std::make_shared<Algebra>(GeneratorTable({"a", "b"}), std::vector<Relation>{}, 2);
  EXPECT_THROW(alg->multiply(ExponentKey{0, 1}, ExponentKey{1, 0}), Error);
  EXPECT_EQ(alg->multiply(ExponentKey{1, 0}, ExponentKey{0, 1}).size(), 1u);
}

TEST(Algebra, ContextChecks) {
  const auto& a3 = qsl2(3);
  const auto& a4 = qsl2(4);
  EXPECT_THROW(gen(a3, "E") + gen(a4, "E"), Error);
  EXPECT_EQ(gen(a3, "E").rebind(a4), gen(a4, "E"));
}
