#include "qhopf/presets.hpp"

#include <nlohmann/json.hpp>
#include <map>

#include "qhopf/error.hpp"
#include "qhopf/parse.hpp"

namespace qhopf {

std::string to_string(PresetId id) {
  switch (id) {
    case PresetId::trivial:
      return "trivial";
    case PresetId::abelian:
      return "abelian";
    case PresetId::qsl2:
      return "qsl2";
  }
  return "?";
}

PresetId preset_from_string(const std::string& name) {
  if (name == "trivial") return PresetId::trivial;
  if (name == "abelian") return PresetId::abelian;
  if (name == "qsl2") return PresetId::qsl2;
  throw Error("unknown preset '" + name + "' (expected trivial, abelian or qsl2)");
}

namespace {

ExponentKey word(int ngens, std::initializer_list<std::pair<int, int>> powers) {
  ExponentKey k(ngens, 0);
  for (auto [g, e] : powers) k[g] = static_cast<Exponent>(e);
  return k;
}

// Polynomial in a single generator with series coefficients: power -> coefficient.
using SeriesPoly = std::map<int, TruncScalar>;

// sinh(c h) / h at order M as a scalar series; requires M >= 1 to be meaningful.
TruncScalar sinh_over_h(const Rational& c, int order) {
  std::vector<Rational> co(order + 1);
  // sinh(c h) = sum_{j odd} c^j h^j / j!; divided by h the h^{j-1} coefficient.
  Rational fact = 1;
  Rational cp = 1;
  for (int j = 1; j <= order + 1; ++j) {
    fact *= j;
    cp *= c;
    if (j % 2 == 1) co[j - 1] = cp / fact;
  }
  return TruncScalar::from_coefficients(co, order);
}

// [k]_q = (q^k - q^-k) / (q - q^-1) with q = e^h, computed at order + margin.
TruncScalar q_number(int k, int order, int margin) {
  const int m = order + margin;
  TruncScalar v = sinh_over_h(k, m) * sinh_over_h(1, m).inverse();
  return v.with_order(order);
}

// (K - K^{-1}) / (q - q^{-1}) = sinh(hH) / sinh(h) as a polynomial in H.
SeriesPoly ef_commutator(int order, int margin) {
  const int m = order + margin;
  const TruncScalar inv_den = sinh_over_h(1, m).inverse();
  SeriesPoly out;
  // sinh(hH)/h = sum_{j odd} h^{j-1} H^j / j!
  Rational fact = 1;
  for (int j = 1; j <= m + 1; ++j) {
    fact *= j;
    if (j % 2 == 0) continue;
    TruncScalar c = TruncScalar::monomial(1 / fact, j - 1, m) * inv_den;
    TruncScalar t = c.with_order(order);
    if (!t.is_zero()) out.emplace(j, t);
  }
  return out;
}

TensorElement exp_in_generator(const AlgebraPtr& alg, int gen, const Rational& scale) {
  // exp(scale h g) = sum_k (scale h)^k g^k / k!
  const int N = alg->order();
  TensorElement e(alg, 1);
  Rational c = 1;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) c = c * scale / k;
    ExponentKey w(alg->ngens(), 0);
    w[gen] = static_cast<Exponent>(k);
    e.add_term(std::move(w), TruncScalar::monomial(c, k, N));
  }
  return e;
}

Presentation commuting_xy(int order) {
  const int N = order;
  std::vector<Relation> rels;
  rels.push_back({1, 0, {{word(2, {{0, 1}, {1, 1}}), TruncScalar::one(N)}}});
  auto alg = std::make_shared<Algebra>(GeneratorTable({"x", "y"}), std::move(rels), N);
  Presentation p;
  p.algebra = alg;
  for (int g = 0; g < 2; ++g) {
    p.counit.emplace_back(N);
    const TensorElement x = TensorElement::generator(alg, g);
    const TensorElement one = TensorElement::unit(alg, 1);
    p.coproduct.push_back(tensor_product(x, one) + tensor_product(one, x));
  }
  return p;
}

std::vector<TensorElement> validation_sample(const HopfContext& ctx) {
  auto gens = ctx.generators();
  std::vector<TensorElement> out = gens;
  for (const auto& a : gens)
    for (const auto& b : gens) out.push_back(a * b);
  return out;
}

void throw_if_failed(const AxiomReport& rep, const std::string& label) {
  if (rep.passed()) return;
  const auto& f = rep.failures.front();
  throw PresetInvalid(label + ": Hopf axiom '" + f.axiom + "' fails on " + f.element + " (residual valuation " +
                      std::to_string(f.residual_valuation) + ")");
}

void throw_if_failed(const VerdictReport& rep, const std::string& label) {
  for (const auto& r : rep.records)
    if (!r.passed)
      throw PresetInvalid(label + ": axiom '" + r.name + "' fails on " + r.counterexample +
                          " (residual valuation " + std::to_string(r.residual_valuation) + ")");
}

}  // namespace

Presentation make_qsl2_presentation(int order, int internal_margin) {
  if (internal_margin < 1) throw OutOfRange("qsl2 needs an internal margin of at least 1");
  const int N = order;
  constexpr int F = 0, H = 1, E = 2;
  const TruncScalar one = TruncScalar::one(N);

  std::vector<Relation> rels;
  // H F -> F H - 2 F
  rels.push_back({H, F, {{word(3, {{F, 1}, {H, 1}}), one}, {word(3, {{F, 1}}), TruncScalar::constant(-2, N)}}});
  // E H -> H E - 2 E
  rels.push_back({E, H, {{word(3, {{H, 1}, {E, 1}}), one}, {word(3, {{E, 1}}), TruncScalar::constant(-2, N)}}});
  // E F -> F E + sinh(hH)/sinh(h)
  Relation ef{E, F, {{word(3, {{F, 1}, {E, 1}}), one}}};
  for (auto& [p, c] : ef_commutator(N, internal_margin)) ef.rhs.emplace(word(3, {{H, p}}), c);
  rels.push_back(std::move(ef));

  auto alg = std::make_shared<Algebra>(GeneratorTable({"F", "H", "E"}), std::move(rels), N);
  Presentation pres;
  pres.algebra = alg;
  pres.counit.assign(3, TruncScalar(N));

  const TensorElement u = TensorElement::unit(alg, 1);
  const TensorElement gF = TensorElement::generator(alg, F);
  const TensorElement gH = TensorElement::generator(alg, H);
  const TensorElement gE = TensorElement::generator(alg, E);
  const TensorElement K = exp_in_generator(alg, H, 1);
  const TensorElement Kinv = exp_in_generator(alg, H, -1);
  pres.coproduct.resize(3);
  pres.coproduct[H] = tensor_product(gH, u) + tensor_product(u, gH);
  pres.coproduct[E] = tensor_product(gE, K) + tensor_product(u, gE);
  pres.coproduct[F] = tensor_product(gF, u) + tensor_product(Kinv, gF);

  // Cartan factor exp(h H (x) H / 2)
  TensorElement cartan(alg, 2);
  {
    Rational c = 1;
    for (int k = 0; k <= N; ++k) {
      if (k > 0) c = c / 2 / k;
      ExponentKey w(6, 0);
      w[H] = static_cast<Exponent>(k);
      w[3 + H] = static_cast<Exponent>(k);
      cartan.add_term(std::move(w), TruncScalar::monomial(c, k, N));
    }
  }
  // sum_n q^{n(n-1)/2} (q - q^{-1})^n / [n]_q! E^n (x) F^n
  TensorElement sum(alg, 2);
  {
    const TruncScalar q_minus_qinv = TruncScalar::monomial(2, 1, N) * sinh_over_h(1, N);  // 2 sinh h
    TruncScalar qfact = one;
    TruncScalar pw = one;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) {
        qfact *= q_number(n, N, internal_margin);
        pw *= q_minus_qinv;
      }
      const TruncScalar qpow = exp_series(TruncScalar::monomial(Rational(n * (n - 1), 2), 1, N));
      const TruncScalar c = qpow * pw * qfact.inverse();
      if (c.is_zero()) continue;
      ExponentKey w(6, 0);
      w[E] = static_cast<Exponent>(n);
      w[3 + F] = static_cast<Exponent>(n);
      sum.add_term(std::move(w), c);
    }
  }
  pres.r_matrix = cartan * sum;
  return pres;
}

Preset validate_presentation(Presentation p, const std::string& label) {
  p.validate();
  auto pres = std::make_shared<const Presentation>(std::move(p));
  const HopfContext base = HopfContext::base(pres);
  throw_if_failed(hopf_axioms_check(base), label);
  Preset out;
  out.presentation = pres;
  if (pres->r_matrix) {
    auto qt = std::make_shared<const QTContext>(pres);
    throw_if_failed(qt_axioms_check(*qt, validation_sample(base)), label);
    out.qt = std::move(qt);
  }
  return out;
}

Preset build_preset(const PresetDescriptor& d) {
  if (d.order < 1) throw OutOfRange("presets need order N >= 1");
  Presentation p;
  switch (d.id) {
    case PresetId::trivial: {
      p = commuting_xy(d.order);
      p.r_matrix = TensorElement::unit(p.algebra, 2);
      break;
    }
    case PresetId::abelian: {
      p = commuting_xy(d.order);
      // exp(h x (x) y) = sum_k h^k / k! x^k (x) y^k
      TensorElement r(p.algebra, 2);
      Rational c = 1;
      for (int k = 0; k <= d.order; ++k) {
        if (k > 0) c /= k;
        r.add_term(word(4, {{0, k}, {3, k}}), TruncScalar::monomial(c, k, d.order));
      }
      p.r_matrix = r;
      break;
    }
    case PresetId::qsl2:
      p = make_qsl2_presentation(d.order, d.internal_margin);
      break;
  }
  Preset out = validate_presentation(std::move(p), "preset " + to_string(d.id));
  out.descriptor = d;
  return out;
}

// ---------------------------------------------------------------------------

Presentation parse_presentation_json(const std::string& json_text, std::optional<int> order_override) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("presentation file is not valid JSON: ") + e.what());
  }
  try {
    const int order = order_override ? *order_override : doc.value("order", kDefaultOrder);
    std::vector<std::string> names = doc.at("generators").get<std::vector<std::string>>();
    GeneratorTable gens(names);
    const int ng = gens.size();

    // Relation right-hand sides are parsed over a rule-free copy: they must
    // already be written in PBW order.
    auto bare = std::make_shared<Algebra>(gens, std::vector<Relation>{}, order);
    std::vector<Relation> rels;
    if (doc.contains("relations")) {
      for (const auto& r : doc.at("relations")) {
        const std::string lhs = r.at("lhs").get<std::string>();
        const auto star = lhs.find('*');
        if (star == std::string::npos) throw Error("relation lhs must look like 'b*a', got '" + lhs + "'");
        auto trim = [](std::string s) {
          s.erase(0, s.find_first_not_of(" \t"));
          s.erase(s.find_last_not_of(" \t") + 1);
          return s;
        };
        const auto later = gens.index_of(trim(lhs.substr(0, star)));
        const auto earlier = gens.index_of(trim(lhs.substr(star + 1)));
        if (!later || !earlier) throw Error("relation lhs '" + lhs + "' names an unknown generator");
        const TensorElement rhs = parse_element(r.at("rhs").get<std::string>(), bare, 1);
        rels.push_back({*later, *earlier, rhs.terms()});
      }
    }
    auto alg = std::make_shared<Algebra>(gens, std::move(rels), order);
    Presentation p;
    p.algebra = alg;
    const auto& counit = doc.at("counit");
    const auto& coproduct = doc.at("coproduct");
    for (int g = 0; g < ng; ++g) {
      const std::string& name = gens.name(g);
      const TensorElement c = parse_element(counit.at(name).get<std::string>(), alg, 0);
      p.counit.push_back(c.unit_coefficient());
      p.coproduct.push_back(parse_element(coproduct.at(name).get<std::string>(), alg, 2));
    }
    if (doc.contains("r_matrix") && !doc.at("r_matrix").is_null())
      p.r_matrix = parse_element(doc.at("r_matrix").get<std::string>(), alg, 2);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed presentation file: ") + e.what());
  }
}

}  // namespace qhopf
