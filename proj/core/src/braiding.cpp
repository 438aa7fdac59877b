#include "qhopf/braiding.hpp"

#include <algorithm>
#include <random>

#include "qhopf/error.hpp"
#include "qhopf/parse.hpp"

namespace qhopf {

namespace {

const TensorElement& require_r(const PresentationPtr& p) {
  if (!p || !p->r_matrix) throw Error("presentation carries no R-matrix");
  return *p->r_matrix;
}

CheckRecord compare(std::string name, const TensorElement& lhs, const TensorElement& rhs,
                    const TensorElement& subject) {
  CheckRecord rec;
  rec.name = std::move(name);
  const TensorElement diff = lhs - rhs;
  rec.residual_valuation = diff.valuation();
  rec.passed = diff.is_zero();
  if (!rec.passed) rec.counterexample = subject.str();
  return rec;
}

}  // namespace

QTContext::QTContext(PresentationPtr presentation)
    : hopf_(HopfContext::base(presentation)),
      twisted_(HopfContext::tensor_square(presentation)),
      r_(require_r(presentation)),
      r_inv_(tensor_invert(r_)) {}

bool VerdictReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.passed; });
}

int VerdictReport::worst_residual(int order) const {
  int worst = order + 1;
  for (const auto& r : records)
    if (!r.passed) worst = std::min(worst, r.residual_valuation);
  return worst;
}

TensorElement twisted_coproduct(const QTContext& qt, const TensorElement& a) {
  if (a.arity() != 2) throw ArityMismatch("twisted coproduct expects an element of H (x) H");
  const HopfContext& h = qt.hopf();
  TensorElement t = h.coproduct_at(a, 2);  // id (x) D
  t = h.coproduct_at(t, 1);                // D (x) id (x) id
  return apply_flip(t, 2, 3);              // s_23
}

TensorElement r_sigma(const QTContext& qt, const SubsetIndex& sigma) {
  const int arity = 2 * sigma.ambient();
  TensorElement acc = TensorElement::unit(qt.algebra(), arity);
  const auto& pos = sigma.positions();
  for (int a = 0; a < sigma.size(); ++a)
    for (int b = sigma.size() - 1; b >= 0; --b)
      acc = acc * embed_pair(qt.r(), 2 * pos[a] - 1, 2 * pos[b], arity);
  return acc;
}

TensorElement ad_r(const QTContext& qt, const TensorElement& a) { return qt.r() * a * qt.r_inv(); }

TensorElement ad_r_inverse(const QTContext& qt, const TensorElement& a) { return qt.r_inv() * a * qt.r(); }

TensorElement classical_r_extract(const QTContext& qt) { return h_coefficient(qt.r(), 1); }

VerdictReport qt_axioms_check(const QTContext& qt, const std::vector<TensorElement>& test_set) {
  VerdictReport rep;
  const HopfContext& h = qt.hopf();
  const TensorElement& r = qt.r();
  for (const TensorElement& a : test_set) {
    rep.records.push_back(compare("R D(a) R^-1 = D^op(a)", r * h.coproduct(a) * qt.r_inv(), h.coproduct_op(a), a));
  }
  const TensorElement r12 = embed_pair(r, 1, 2, 3);
  const TensorElement r13 = embed_pair(r, 1, 3, 3);
  const TensorElement r23 = embed_pair(r, 2, 3, 3);
  rep.records.push_back(compare("(D (x) id)(R) = R13 R23", h.coproduct_at(r, 1), r13 * r23, r));
  rep.records.push_back(compare("(id (x) D)(R) = R13 R12", h.coproduct_at(r, 2), r13 * r12, r));
  rep.records.push_back(compare("R12 R13 R23 = R23 R13 R12", r12 * r13 * r23, r23 * r13 * r12, r));
  return rep;
}

VerdictReport verify_r_sigma_identity(const QTContext& qt, int n) {
  if (n < 1) throw OutOfRange("R_Sigma identity needs n >= 1");
  VerdictReport rep;
  // twisted D^k(R) for k = 0..n, embedded per subset
  std::vector<TensorElement> tower;
  tower.push_back(coproduct_iter(qt.twisted(), qt.r(), 0));
  tower.push_back(qt.r());
  for (int k = 2; k <= n; ++k) tower.push_back(qt.twisted().coproduct_at(tower.back(), 1));
  for (const SubsetIndex& sigma : subsets(n)) {
    const TensorElement lhs = embed_j_sigma(tower[sigma.size()], sigma, 2);
    const TensorElement rhs = r_sigma(qt, sigma);
    CheckRecord rec = compare("D~_" + sigma.str() + "(R) = R_" + sigma.str() + " (n=" + std::to_string(n) + ")",
                              lhs, rhs, qt.r());
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

CheckRecord verify_truncated_expansion(const QTContext& qt, const GateCertificate& certificate,
                                       const SubsetIndex& sigma, int i) {
  if (certificate.width != 2 || !certificate.passed())
    throw PreconditionError("element is not gate-certified in H (x) H");
  if (certificate.order != qt.order()) throw PreconditionError("certificate was issued at another order");
  const int need = std::min(sigma.size(), qt.order() + 1);
  if (certificate.n_max < need)
    throw PreconditionError("certificate covers n <= " + std::to_string(certificate.n_max) + ", need " +
                            std::to_string(need));
  if (i < 0 || sigma.size() <= i) throw PreconditionError("expansion needs 0 <= i < |Sigma|");

  const HopfContext& tw = qt.twisted();
  const TensorElement& a = certificate.subject;
  std::vector<TensorElement> tower;
  tower.push_back(coproduct_iter(tw, a, 0));
  tower.push_back(a);
  for (int k = 2; k <= sigma.size(); ++k) tower.push_back(tw.coproduct_at(tower.back(), 1));

  TensorElement residual = embed_j_sigma(tower[sigma.size()], sigma, 2);
  const int N = qt.order();
  for (const SubsetIndex& sub : subsets_of(sigma, i)) {
    const int m = sub.size();
    Rational coeff(binom(sigma.size() - 1 - m, i - m));
    if ((i - m) % 2 != 0) coeff = -coeff;
    if (sgn(coeff) == 0) continue;
    residual -= embed_j_sigma(tower[m], sub, 2) * TruncScalar::constant(coeff, N);
  }
  CheckRecord rec;
  rec.name = "expansion Sigma=" + sigma.str() + " i=" + std::to_string(i);
  rec.residual_valuation = residual.valuation();
  rec.passed = rec.residual_valuation >= std::min(i + 1, N + 1);
  if (!rec.passed) rec.counterexample = a.str();
  rec.detail = "required valuation " + std::to_string(std::min(i + 1, N + 1));
  return rec;
}

StabilityResult verify_adjoint_stability(const QTContext& qt, const GateCertificate& certificate) {
  if (certificate.width != 2 || !certificate.passed())
    throw PreconditionError("element is not gate-certified in H (x) H");
  if (certificate.order != qt.order()) throw PreconditionError("certificate was issued at another order");
  return StabilityResult{drinfeld_gate(qt.twisted(), ad_r(qt, certificate.subject), certificate.n_max)};
}

TensorElement BraidOperator::apply12(const TensorElement& x) const {
  const TensorElement r = embed_pair(qt->r(), 1, 2, 3);
  const TensorElement ri = embed_pair(qt->r_inv(), 1, 2, 3);
  return r * x * ri;
}

TensorElement BraidOperator::apply23(const TensorElement& x) const {
  const TensorElement r = embed_pair(qt->r(), 2, 3, 3);
  const TensorElement ri = embed_pair(qt->r_inv(), 2, 3, 3);
  return r * x * ri;
}

TensorElement BraidOperator::apply13(const TensorElement& x) const {
  return apply_flip(apply23(apply_flip(x, 1, 2)), 1, 2);
}

BraidOperatorReport braided_axioms_check(const QTContext& qt, const std::vector<GateCertificate>& certified_h,
                                         const std::vector<GateCertificate>& certified_hh) {
  for (const auto& c : certified_h)
    if (c.width != 1 || !c.passed()) throw PreconditionError("braided check needs gate-certified elements of H");
  for (const auto& c : certified_hh)
    if (c.width != 2 || !c.passed())
      throw PreconditionError("braided check needs gate-certified elements of H (x) H");

  BraidOperatorReport rep;
  const HopfContext& h = qt.hopf();
  const BraidOperator op{&qt};
  for (const auto& c : certified_h) {
    const TensorElement& a = c.subject;
    rep.axioms.records.push_back(compare("R o D = D^op", op.apply(h.coproduct(a)), h.coproduct_op(a), a));
  }
  for (const auto& c : certified_hh) {
    const TensorElement& x = c.subject;
    const TensorElement rx = op.apply(x);
    const TensorElement d1 = h.coproduct_at(x, 1);
    rep.axioms.records.push_back(
        compare("(D (x) id) o R = R13 o R23 o (D (x) id)", h.coproduct_at(rx, 1), op.apply13(op.apply23(d1)), x));
    const TensorElement d2 = h.coproduct_at(x, 2);
    rep.axioms.records.push_back(
        compare("(id (x) D) o R = R13 o R12 o (id (x) D)", h.coproduct_at(rx, 2), op.apply13(op.apply12(d2)), x));
    if (!rep.differs_from_flip && !(rx == apply_flip(x, 1, 2))) {
      rep.differs_from_flip = true;
      rep.sigma_witness = x.str();
    }
  }
  // operator Yang-Baxter on x (x) a and a (x) x
  for (std::size_t k = 0; k < certified_hh.size() && !certified_h.empty(); ++k) {
    const TensorElement& x = certified_hh[k].subject;
    const TensorElement& a = certified_h[k % certified_h.size()].subject;
    for (const TensorElement& y : {tensor_product(x, a), tensor_product(a, x)}) {
      rep.axioms.records.push_back(compare("R12 o R13 o R23 = R23 o R13 o R12", op.apply12(op.apply13(op.apply23(y))),
                                           op.apply23(op.apply13(op.apply12(y))), y));
    }
  }
  return rep;
}

namespace {

void monomials_of_degree(int nvars, int degree, ExponentKey& cur, int var, std::vector<ExponentKey>& out) {
  if (var == nvars - 1) {
    cur[var] = static_cast<Exponent>(degree);
    out.push_back(cur);
    cur[var] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[var] = static_cast<Exponent>(e);
    monomials_of_degree(nvars, degree - e, cur, var + 1, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<GateCertificate> certified_corpus(const HopfContext& ctx, int n_max, const CorpusOptions& options) {
  const AlgebraPtr& alg = ctx.algebra();
  const int N = ctx.order();
  const int nvars = ctx.width() * alg->ngens();
  std::vector<std::vector<TensorElement>> by_degree;
  for (int d = 0; d <= std::min(options.max_degree, N); ++d) {
    std::vector<ExponentKey> keys;
    ExponentKey cur(nvars, 0);
    monomials_of_degree(nvars, d, cur, 0, keys);
    by_degree.emplace_back();
    for (auto& k : keys) {
      TensorElement a(alg, ctx.width());
      a.add_term(std::move(k), TruncScalar::monomial(1, d, N));
      by_degree.back().push_back(std::move(a));
    }
  }
  std::mt19937_64 rng(options.seed);
  std::vector<TensorElement> candidates;
  if (options.limit == 0) {
    for (auto& group : by_degree)
      for (auto& a : group) candidates.push_back(std::move(a));
  } else {
    // seeded draw spread evenly over the degrees, then back to canonical order
    std::vector<std::vector<std::size_t>> picks(by_degree.size());
    std::vector<std::size_t> taken(by_degree.size(), 0);
    for (std::size_t d = 0; d < by_degree.size(); ++d) {
      picks[d].resize(by_degree[d].size());
      for (std::size_t i = 0; i < picks[d].size(); ++i) picks[d][i] = i;
      for (std::size_t i = 0; i + 1 < picks[d].size(); ++i)
        std::swap(picks[d][i], picks[d][i + rng() % (picks[d].size() - i)]);
    }
    std::size_t total = 0;
    for (bool progress = true; progress && total < options.limit;) {
      progress = false;
      for (std::size_t d = 0; d < by_degree.size() && total < options.limit; ++d)
        if (taken[d] < picks[d].size()) {
          ++taken[d];
          ++total;
          progress = true;
        }
    }
    for (std::size_t d = 0; d < by_degree.size(); ++d) {
      std::vector<std::size_t> chosen(picks[d].begin(), picks[d].begin() + taken[d]);
      std::sort(chosen.begin(), chosen.end());
      for (std::size_t i : chosen) candidates.push_back(by_degree[d][i]);
    }
  }
  const std::size_t base_count = candidates.size();
  for (int c = 0; c < options.random_combinations && base_count > 1; ++c) {
    const auto& a = candidates[rng() % base_count];
    const auto& b = candidates[rng() % base_count];
    const Rational p(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    const Rational q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    TensorElement mix = a * TruncScalar::constant(p, N) + b * TruncScalar::constant(q, N);
    if (!mix.is_zero()) candidates.push_back(std::move(mix));
  }
  std::vector<GateCertificate> out;
  for (const auto& a : candidates) {
    GateCertificate cert = drinfeld_gate(ctx, a, n_max);
    if (cert.passed()) out.push_back(std::move(cert));
  }
  return out;
}

}  // namespace qhopf
