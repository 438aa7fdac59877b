#include <gtest/gtest.h>

#include "qhopf/error.hpp"
#include "qhopf/parse.hpp"
#include "test_support.hpp"

using namespace qhopf;
using qhopf::testing::preset;
using qhopf::testing::qt;

namespace {

const char* kAbelianJson = R"({
  "generators": ["x", "y"],
  "order": 3,
  "relations": [{"lhs": "y*x", "rhs": "x*y"}],
  "counit": {"x": "0", "y": "0"},
  "coproduct": {"x": "x # 1 + 1 # x", "y": "y # 1 + 1 # y"},
  "r_matrix": "1 # 1 + h * x # y + 1/2*h^2 * x^2 # y^2 + 1/6*h^3 * x^3 # y^3"
})";

// Frozen regression fingerprint of the qsl2 R-matrix at N = 3.
const char* kQsl2R3 =
    "(1 # 1) + 1/2*h * (H # H) + (2*h + 1/3*h^3) * (E # F) - 2*h^2 * (H*E # F) + 1/8*h^2 * (H^2 # H^2) + "
    "h^3 * (H^2*E # F) + h^2 * (H*E # F*H) + (2*h^2 + 2*h^3) * (E^2 # F^2) - h^3 * (H^2*E # F*H) - "
    "4*h^3 * (H*E^2 # F^2) + 1/48*h^3 * (H^3 # H^3) + 1/4*h^3 * (H^2*E # F*H^2) + h^3 * (H*E^2 # F^2*H) + "
    "4/3*h^3 * (E^3 # F^3)";

}  // namespace

TEST(Presets, Names) {
  EXPECT_EQ(preset_from_string("qsl2"), PresetId::qsl2);
  EXPECT_EQ(to_string(PresetId::abelian), "abelian");
  EXPECT_THROW(preset_from_string("sl3"), Error);
}

TEST(Presets, AbelianClassicalLimit) {
  const auto& q = qt(PresetId::abelian, 4);
  EXPECT_TRUE(qt_axioms_check(q, q.hopf().generators()).passed());
  EXPECT_EQ(classical_r_extract(q), parse_element("x # y", q.algebra(), 2));
}

TEST(Presets, TrivialIsUnitR) {
  const auto& q = qt(PresetId::trivial, 2);
  EXPECT_EQ(q.r(), TensorElement::unit(q.algebra(), 2));
  EXPECT_TRUE(qt_axioms_check(q, q.hopf().generators()).passed());
  EXPECT_TRUE(verify_r_sigma_identity(q, 2).passed());
}

TEST(Presets, Qsl2ShapeAndFingerprint) {
  const auto& q = qt(PresetId::qsl2, 3);
  EXPECT_EQ(h_coefficient(q.r(), 0), TensorElement::unit(q.algebra(), 2));
  const auto r1 = classical_r_extract(q);
  const int ng = q.algebra()->ngens();
  bool has_hh = false, has_ef = false;
  for (const auto& [k, c] : r1.terms()) {
    if (k[1] == 1 && k[ng + 1] == 1) has_hh = true;
    if (k[2] == 1 && k[ng + 0] == 1) has_ef = true;
  }
  EXPECT_TRUE(has_hh);
  EXPECT_TRUE(has_ef);
  EXPECT_EQ(print_element(q.r()), kQsl2R3);
}

TEST(Presets, EveryRIsUnitPlusHR) {
  for (auto [id, N] : {std::pair{PresetId::trivial, 2}, {PresetId::abelian, 4}, {PresetId::qsl2, 4}}) {
    const auto& q = qt(id, N);
    TensorElement low = TensorElement::unit(q.algebra(), 2);
    low += classical_r_extract(q) * TruncScalar::monomial(1, 1, N);
    EXPECT_GE((q.r() - low).valuation(), 2) << to_string(id);
  }
}

TEST(Presets, AbelianAdjointIsIdentityOnSpanningCorpus) {
  const auto& q = qt(PresetId::abelian, 4);
  for (const auto& c : certified_corpus(q.twisted(), 1, {4, 0, 0, 0})) {
    TensorElement m = c.subject;
    EXPECT_EQ(ad_r(q, m), m);
  }
}

TEST(Presets, Qsl2BraidingWitness) {
  for (int N : {3, 4}) {
    const auto& q = qt(PresetId::qsl2, N);
    const auto x = parse_element("1 # H", q.algebra(), 2);
    EXPECT_EQ((ad_r(q, x) - x).valuation(), 1);
  }
}

TEST(Presets, Qsl2PassesAtOrdersThreeAndFour) {
  for (int N : {3, 4}) {
    const auto& q = qt(PresetId::qsl2, N);
    auto corpus = certified_corpus(q.hopf(), N + 2, {3, 0, 0, 0});
    std::vector<TensorElement> test_set;
    for (const auto& c : corpus) test_set.push_back(c.subject);
    EXPECT_TRUE(qt_axioms_check(q, test_set).passed()) << N;
    EXPECT_TRUE(hopf_axioms_check(q.twisted()).passed()) << N;
  }
}

TEST(Presets, TruncationCoherence) {
  for (PresetId id : {PresetId::trivial, PresetId::abelian, PresetId::qsl2}) {
    const Presentation big = preset(id, 4).presentation->with_order(2);
    const Presentation& small = *preset(id, 2).presentation;
    ASSERT_EQ(big.algebra->relations().size(), small.algebra->relations().size());
    for (std::size_t i = 0; i < small.algebra->relations().size(); ++i)
      EXPECT_EQ(big.algebra->relations()[i].rhs, small.algebra->relations()[i].rhs);
    for (std::size_t g = 0; g < small.coproduct.size(); ++g)
      EXPECT_EQ(big.coproduct[g].rebind(small.algebra), small.coproduct[g]);
    EXPECT_EQ(big.r_matrix->rebind(small.algebra), *small.r_matrix) << to_string(id);
  }
}

TEST(Presets, MarginDoesNotChangeResult) {
  const Presentation a = make_qsl2_presentation(3, 2);
  const Presentation b = make_qsl2_presentation(3, 5);
  EXPECT_EQ(a.r_matrix->rebind(b.algebra), *b.r_matrix);
  EXPECT_EQ(a.algebra->relations().back().rhs, b.algebra->relations().back().rhs);
  EXPECT_THROW(make_qsl2_presentation(3, 0), OutOfRange);
  EXPECT_THROW(build_preset({PresetId::abelian, 0, 2}), OutOfRange);
}

TEST(PresentationFile, ParsesAndMatchesBuiltIn) {
  Preset p = validate_presentation(parse_presentation_json(kAbelianJson), "file");
  ASSERT_TRUE(p.qt);
  const auto& builtin = qt(PresetId::abelian, 3);
  EXPECT_EQ(p.qt->r().rebind(builtin.algebra()), builtin.r());
  EXPECT_TRUE(verify_r_sigma_identity(*p.qt, 2).passed());

  Presentation shorter = parse_presentation_json(kAbelianJson, 2);
  EXPECT_EQ(shorter.order(), 2);
}

TEST(PresentationFile, RejectsBrokenR) {
  std::string text = kAbelianJson;
  const std::string from = R"("r_matrix": "1 # 1 + h * x # y + 1/2*h^2 * x^2 # y^2 + 1/6*h^3 * x^3 # y^3")";
  text.replace(text.find(from), from.size(), R"("r_matrix": "1 # 1 + h * x # y")");
  try {
    validate_presentation(parse_presentation_json(text), "file");
    FAIL() << "expected PresetInvalid";
  } catch (const PresetInvalid& e) {
    EXPECT_NE(std::string(e.what()).find("R13"), std::string::npos) << e.what();
  }
}

TEST(PresentationFile, NoRMatrixGivesNoQtContext) {
  std::string text = kAbelianJson;
  text.replace(text.find(",\n  \"r_matrix\""), std::string::npos, "\n}");
  Preset p = validate_presentation(parse_presentation_json(text), "file");
  EXPECT_FALSE(p.qt);
}

TEST(PresentationFile, Errors) {
  EXPECT_THROW(parse_presentation_json("{"), Error);
  EXPECT_THROW(parse_presentation_json(R"({"generators": ["x"]})"), Error);
  std::string text = kAbelianJson;
  text.replace(text.find("y*x"), 3, "y x");
  EXPECT_THROW(parse_presentation_json(text), Error);
  text = kAbelianJson;
  text.replace(text.find("\"rhs\": \"x*y\""), 12, "\"rhs\": \"y*x\"");
  EXPECT_THROW(parse_presentation_json(text), Error);
  text = kAbelianJson;
  text.replace(text.find("x # 1 + 1 # x"), 13, "x # 1 + 1 # z");
  EXPECT_THROW(parse_presentation_json(text), UnknownGenerator);
}
