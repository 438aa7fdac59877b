#include "qhopf/hopf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qhopf/error.hpp"
#include "qhopf/parse.hpp"

namespace qhopf {

void Presentation::validate() const {
  if (!algebra) throw Error("presentation without algebra");
  const int ng = algebra->ngens();
  if (static_cast<int>(counit.size()) != ng) throw Error("need one counit value per generator");
  if (static_cast<int>(coproduct.size()) != ng) throw Error("need one coproduct image per generator");
  for (const TruncScalar& c : counit)
    if (c.order() != order()) throw OrderMismatch("counit value has the wrong order");
  for (const TensorElement& d : coproduct) {
    if (d.algebra() != algebra) throw ContextMismatch("coproduct image over a different algebra");
    if (d.arity() != 2) throw ArityMismatch("coproduct images must have arity 2");
  }
  if (r_matrix) {
    if (r_matrix->algebra() != algebra) throw ContextMismatch("R-matrix over a different algebra");
    if (r_matrix->arity() != 2) throw ArityMismatch("R-matrix must have arity 2");
    const TensorElement zeroth = h_coefficient(*r_matrix, 0);
    if (!(zeroth == TensorElement::unit(algebra, 2)))
      throw Error("R-matrix must reduce to 1 # 1 modulo h, got " + zeroth.str());
  }
}

Presentation Presentation::with_order(int order) const {
  Presentation p;
  p.algebra = algebra->with_order(order);
  for (const TruncScalar& c : counit) p.counit.push_back(c.with_order(order));
  for (const TensorElement& d : coproduct) p.coproduct.push_back(d.rebind(p.algebra));
  if (r_matrix) p.r_matrix = r_matrix->rebind(p.algebra);
  return p;
}

// ---------------------------------------------------------------------------

struct HopfContext::Cache {
  std::shared_mutex mutex;
  std::map<ExponentKey, TermMap> coproducts;
};

HopfContext::HopfContext(PresentationPtr presentation, int width)
    : presentation_(std::move(presentation)), width_(width), cache_(std::make_shared<Cache>()) {
  if (!presentation_) throw Error("HopfContext needs a presentation");
  if (width < 1) throw OutOfRange("HopfContext width must be positive");
  presentation_->validate();
}

TensorElement HopfContext::unit(int copies) const { return TensorElement::unit(algebra(), copies * width_); }

std::vector<TensorElement> HopfContext::generators() const {
  std::vector<TensorElement> out;
  const int ng = algebra()->ngens();
  for (int w = 0; w < width_; ++w) {
    for (int g = 0; g < ng; ++g) {
      std::vector<int> target{w};
      out.push_back(place_legs(TensorElement::generator(algebra(), g), target, width_));
    }
  }
  return out;
}

int HopfContext::copies_of(const TensorElement& a) const {
  if (a.arity() % width_ != 0)
    throw ArityMismatch("arity " + std::to_string(a.arity()) + " is not a multiple of the context width " +
                        std::to_string(width_));
  return a.arity() / width_;
}

TruncScalar HopfContext::block_counit(const Exponent* block) const {
  const int ng = algebra()->ngens();
  TruncScalar c = TruncScalar::one(order());
  for (int l = 0; l < width_; ++l)
    for (int g = 0; g < ng; ++g)
      for (Exponent e = 0; e < block[l * ng + g]; ++e) {
        c *= presentation_->counit[g];
        if (c.is_zero()) return c;
      }
  return c;
}

const TermMap& HopfContext::block_coproduct(const ExponentKey& block) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->coproducts.find(block);
    if (it != cache_->coproducts.end()) return it->second;
  }
  const AlgebraPtr& alg = algebra();
  const int ng = alg->ngens();
  // Coproduct of each leg in H (x) H, multiplicatively from generator images.
  std::vector<TensorElement> legs;
  for (int l = 0; l < width_; ++l) {
    TensorElement d = TensorElement::unit(alg, 2);
    for (int g = 0; g < ng; ++g)
      for (Exponent e = 0; e < block[l * ng + g]; ++e) d = d * presentation_->coproduct[g];
    legs.push_back(std::move(d));
  }
  // Interleave: first copies of all legs, then second copies.
  TensorElement acc = TensorElement::unit(alg, 0);
  for (const auto& d : legs) acc = tensor_product(acc, d);
  std::vector<int> target(2 * width_);
  for (int l = 0; l < width_; ++l) {
    target[2 * l] = l;
    target[2 * l + 1] = width_ + l;
  }
  TensorElement result = place_legs(acc, target, 2 * width_);
  std::unique_lock lock(cache_->mutex);
  auto [it, inserted] = cache_->coproducts.emplace(block, result.terms());
  return it->second;
}

TensorElement HopfContext::coproduct(const TensorElement& a) const {
  if (a.arity() != width_) throw ArityMismatch("coproduct expects an element with one copy");
  return coproduct_at(a, 1);
}

TensorElement HopfContext::coproduct_at(const TensorElement& a, int copy) const {
  const int k = copies_of(a);
  if (copy < 1 || copy > k) throw OutOfRange("coproduct_at: copy index out of range");
  const int ng = algebra()->ngens();
  const std::size_t bw = static_cast<std::size_t>(width_) * ng;
  const std::size_t start = (copy - 1) * bw;
  TensorElement out(algebra(), (k + 1) * width_);
  const int N = order();
  for (const auto& [key, c] : a.terms()) {
    ExponentKey block(key.begin() + start, key.begin() + start + bw);
    const TermMap& d = block_coproduct(block);
    for (const auto& [dk, dc] : d) {
      if (c.valuation() + dc.valuation() > N) continue;
      ExponentKey nk;
      nk.reserve(key.size() + bw);
      nk.insert(nk.end(), key.begin(), key.begin() + start);
      nk.insert(nk.end(), dk.begin(), dk.end());
      nk.insert(nk.end(), key.begin() + start + bw, key.end());
      out.add_term(std::move(nk), c * dc);
    }
  }
  return out;
}

TensorElement HopfContext::coproduct_op(const TensorElement& a) const {
  return swap_copies(coproduct(a), 1, 2);
}

TensorElement HopfContext::swap_copies(const TensorElement& a, int p, int q) const {
  const int k = copies_of(a);
  if (p < 1 || q < 1 || p > k || q > k) throw OutOfRange("swap_copies: copy index out of range");
  std::vector<int> target(a.arity());
  for (int c = 0; c < k; ++c) {
    int dest = c;
    if (c == p - 1) dest = q - 1;
    if (c == q - 1) dest = p - 1;
    for (int w = 0; w < width_; ++w) target[c * width_ + w] = dest * width_ + w;
  }
  return place_legs(a, target, a.arity());
}

TruncScalar HopfContext::counit(const TensorElement& a) const {
  if (a.arity() != width_) throw ArityMismatch("counit expects an element with one copy");
  TruncScalar s(order());
  for (const auto& [k, c] : a.terms()) s += c * block_counit(k.data());
  return s;
}

TensorElement HopfContext::counit_at(const TensorElement& a, int copy) const {
  const int k = copies_of(a);
  if (copy < 1 || copy > k) throw OutOfRange("counit_at: copy index out of range");
  const int ng = algebra()->ngens();
  const std::size_t bw = static_cast<std::size_t>(width_) * ng;
  const std::size_t start = (copy - 1) * bw;
  TensorElement out(algebra(), (k - 1) * width_);
  for (const auto& [key, c] : a.terms()) {
    TruncScalar e = block_counit(key.data() + start);
    if (e.is_zero()) continue;
    ExponentKey nk(key.begin(), key.begin() + start);
    nk.insert(nk.end(), key.begin() + start + bw, key.end());
    out.add_term(std::move(nk), c * e);
  }
  return out;
}

// ---------------------------------------------------------------------------

TensorElement coproduct_iter(const HopfContext& ctx, const TensorElement& a, int n) {
  if (n < 0) throw OutOfRange("coproduct_iter: n must be non-negative");
  if (a.arity() != ctx.width()) throw ArityMismatch("coproduct_iter expects an element with one copy");
  if (n == 0) return TensorElement::scalar(a.algebra(), 0, ctx.counit(a));
  TensorElement cur = a;
  for (int k = 2; k <= n; ++k) cur = ctx.coproduct_at(cur, 1);
  return cur;
}

namespace {

// D^k(a) for k = 0..max, computed once.
std::vector<TensorElement> coproduct_tower(const HopfContext& ctx, const TensorElement& a, int max) {
  std::vector<TensorElement> tower;
  tower.push_back(coproduct_iter(ctx, a, 0));
  if (max >= 1) tower.push_back(a);
  for (int k = 2; k <= max; ++k) tower.push_back(ctx.coproduct_at(tower.back(), 1));
  return tower;
}

}  // namespace

TensorElement delta_upper(const HopfContext& ctx, const TensorElement& a, const SubsetIndex& sigma) {
  return embed_j_sigma(coproduct_iter(ctx, a, sigma.size()), sigma, ctx.width());
}

TensorElement delta_lower(const HopfContext& ctx, const TensorElement& a, const SubsetIndex& sigma) {
  const auto tower = coproduct_tower(ctx, a, sigma.size());
  TensorElement out(a.algebra(), sigma.ambient() * ctx.width());
  for (const SubsetIndex& sub : subsets_of(sigma)) {
    TensorElement term = embed_j_sigma(tower[sub.size()], sub, ctx.width());
    if ((sigma.size() - sub.size()) % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

TensorElement delta_n(const HopfContext& ctx, const TensorElement& a, int n) {
  if (n < 0 || n > 31) throw OutOfRange("delta_n: n out of range");
  const auto tower = coproduct_tower(ctx, a, n);
  TensorElement out(a.algebra(), n * ctx.width());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int k = std::popcount(mask);
    // place copy m of D^k at the m-th set bit
    std::vector<int> target;
    for (int b = 0; b < n; ++b)
      if (mask & (1u << b))
        for (int w = 0; w < ctx.width(); ++w) target.push_back(b * ctx.width() + w);
    TensorElement term = place_legs(tower[k], target, n * ctx.width());
    if ((n - k) % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

TensorElement reduced_coproduct(const HopfContext& ctx, const TensorElement& a, int n) {
  if (n == 0) return coproduct_iter(ctx, a, 0);
  TensorElement cur = coproduct_iter(ctx, a, n);
  // (id - 1*counit) on each copy in turn
  for (int c = 1; c <= n; ++c) {
    TensorElement eps = ctx.counit_at(cur, c);
    std::vector<int> target;
    for (int j = 0; j < n; ++j) {
      if (j == c - 1) continue;
      for (int w = 0; w < ctx.width(); ++w) target.push_back(j * ctx.width() + w);
    }
    cur -= place_legs(eps, target, n * ctx.width());
  }
  return cur;
}

MoebiusResult moebius_reconstruct(const HopfContext& ctx, const TensorElement& a, const SubsetIndex& sigma) {
  MoebiusResult res{TensorElement(a.algebra(), sigma.ambient() * ctx.width()), delta_upper(ctx, a, sigma), false};
  for (const SubsetIndex& sub : subsets_of(sigma)) res.reconstruction += delta_lower(ctx, a, sub);
  res.equal = res.reconstruction == res.direct;
  return res;
}

GateCertificate drinfeld_gate(const HopfContext& ctx, const TensorElement& a, int n_max) {
  if (n_max < 1) throw OutOfRange("drinfeld_gate: n_max must be at least 1");
  if (a.arity() != ctx.width()) throw ArityMismatch("drinfeld_gate expects an element with one copy");
  GateCertificate cert;
  cert.subject = a;
  cert.width = ctx.width();
  cert.order = ctx.order();
  cert.n_max = n_max;
  const int inf = ctx.order() + 1;
  for (int n = 1; n <= n_max; ++n) {
    const int v = delta_n(ctx, a, n).valuation();
    cert.valuations.push_back(v);
    const int required = std::min(n, inf);
    if (v < required) cert.failures.push_back({n, v, required});
  }
  return cert;
}

// ---------------------------------------------------------------------------

AxiomReport hopf_axioms_check(const HopfContext& ctx, const std::vector<TensorElement>& extra) {
  AxiomReport rep;
  const auto gens = ctx.generators();
  std::vector<TensorElement> sample = gens;
  std::vector<std::pair<TensorElement, TensorElement>> pairs;
  for (const auto& x : gens)
    for (const auto& y : gens) pairs.emplace_back(x, y);
  for (const auto& [x, y] : pairs) sample.push_back(x * y);
  sample.insert(sample.end(), extra.begin(), extra.end());

  auto fail = [&](const std::string& axiom, const TensorElement& a, const TensorElement& residual) {
    rep.failures.push_back({axiom, a.str(), residual.valuation()});
  };

  rep.checked = {"coassociativity", "left counit", "right counit", "coproduct multiplicative",
                 "counit multiplicative"};
  for (const auto& a : sample) {
    const TensorElement d = ctx.coproduct(a);
    const TensorElement lhs = ctx.coproduct_at(d, 1);
    const TensorElement rhs = ctx.coproduct_at(d, 2);
    if (!(lhs == rhs)) fail("coassociativity", a, lhs - rhs);
    const TensorElement left = ctx.counit_at(d, 1);
    if (!(left == a)) fail("left counit", a, left - a);
    const TensorElement right = ctx.counit_at(d, 2);
    if (!(right == a)) fail("right counit", a, right - a);
  }
  for (const auto& [x, y] : pairs) {
    const TensorElement xy = x * y;
    const TensorElement lhs = ctx.coproduct(xy);
    const TensorElement rhs = ctx.coproduct(x) * ctx.coproduct(y);
    if (!(lhs == rhs)) fail("coproduct multiplicative", xy, lhs - rhs);
    const TruncScalar el = ctx.counit(xy);
    const TruncScalar er = ctx.counit(x) * ctx.counit(y);
    if (el != er) fail("counit multiplicative", xy, TensorElement::scalar(ctx.algebra(), 0, el - er));
  }
  return rep;
}

}  // namespace qhopf
