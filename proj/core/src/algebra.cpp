#include "qhopf/algebra.hpp"

#include <algorithm>
#include <mutex>

#include "qhopf/error.hpp"

namespace qhopf {

int Monomial::degree() const {
  int d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

GeneratorTable::GeneratorTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("empty generator name");
    if (names_[i] == "h") throw Error("'h' is reserved for the formal parameter");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw Error("duplicate generator name '" + names_[i] + "'");
  }
}

std::optional<int> GeneratorTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

std::size_t Algebra::KeyHash::operator()(const ExponentKey& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : k) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

Algebra::Algebra(GeneratorTable generators, std::vector<Relation> relations, int order,
                 RewriteLimits limits)
    : generators_(std::move(generators)),
      relations_(std::move(relations)),
      order_(order),
      limits_(limits) {
  if (order < 0) throw OutOfRange("truncation order must be non-negative");
  const int n = ngens();
  rule_index_.assign(static_cast<std::size_t>(n) * n, nullptr);
  for (const Relation& rel : relations_) {
    if (rel.later < 0 || rel.later >= n || rel.earlier < 0 || rel.earlier >= n)
      throw OutOfRange("relation refers to an unknown generator index");
    if (rel.later <= rel.earlier)
      throw Error("relation " + generators_.name(rel.later) + "*" + generators_.name(rel.earlier) +
                  " is already in PBW order");
    auto& slot = rule_index_[rel.later * n + rel.earlier];
    if (slot) throw Error("duplicate relation for " + generators_.name(rel.later) + "*" +
                          generators_.name(rel.earlier));
    for (const auto& [k, c] : rel.rhs) {
      if (static_cast<int>(k.size()) != n) throw ArityMismatch("relation right-hand side must have one leg");
      if (c.order() != order_) throw OrderMismatch("relation coefficient has the wrong truncation order");
    }
    slot = &rel.rhs;
  }
}

const TermMap* Algebra::rule(int later, int earlier) const {
  return rule_index_[static_cast<std::size_t>(later) * ngens() + earlier];
}

namespace {

int last_nonzero(const Exponent* e, int n) {
  for (int i = n - 1; i >= 0; --i)
    if (e[i]) return i;
  return -1;
}

int first_nonzero(const Exponent* e, int n) {
  for (int i = 0; i < n; ++i)
    if (e[i]) return i;
  return n;
}

}  // namespace

std::vector<std::pair<ExponentKey, TruncScalar>> Algebra::multiply(const ExponentKey& a,
                                                                   const ExponentKey& b) const {
  Budget budget;
  return multiply_impl(a, b, 0, budget);
}

Algebra::Product Algebra::multiply_impl(const ExponentKey& a, const ExponentKey& b, int depth,
                                        Budget& budget) const {
  const int n = ngens();
  const int la = last_nonzero(a.data(), n);
  const int fb = first_nonzero(b.data(), n);
  if (la <= fb) {
    ExponentKey k(n);
    for (int i = 0; i < n; ++i) k[i] = static_cast<Exponent>(a[i] + b[i]);
    return {{std::move(k), TruncScalar::one(order_)}};
  }

  ExponentKey cache_key;
  cache_key.reserve(2 * n);
  cache_key.insert(cache_key.end(), a.begin(), a.end());
  cache_key.insert(cache_key.end(), b.begin(), b.end());
  {
    std::shared_lock lock(cache_mutex_);
    auto it = product_cache_.find(cache_key);
    if (it != product_cache_.end()) return it->second;
  }

  if (depth > limits_.depth_budget || ++budget.steps > limits_.step_budget)
    throw Divergence("rewriting did not terminate within budget (depth " + std::to_string(depth) +
                     ", steps " + std::to_string(budget.steps) + "); check the presentation");
  const TermMap* rhs = rule(la, fb);
  if (!rhs)
    throw Error("no straightening rule for " + generators_.name(la) + "*" + generators_.name(fb));

  ExponentKey a_rest = a;
  --a_rest[la];
  ExponentKey b_rest = b;
  --b_rest[fb];

  // a * b = a_rest * (g_la g_fb) * b_rest = sum_t c_t * a_rest * (t * b_rest)
  TermMap acc;
  for (const auto& [t, ct] : *rhs) {
    for (const auto& [u, cu] : multiply_impl(t, b_rest, depth + 1, budget)) {
      TruncScalar c1 = ct * cu;
      if (c1.is_zero()) continue;
      for (const auto& [v, cv] : multiply_impl(a_rest, u, depth + 1, budget)) {
        TruncScalar c = c1 * cv;
        if (c.is_zero()) continue;
        auto [it, inserted] = acc.try_emplace(v, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
  }
  Product out(acc.begin(), acc.end());
  {
    std::unique_lock lock(cache_mutex_);
    product_cache_.emplace(std::move(cache_key), out);
  }
  return out;
}

std::shared_ptr<const Algebra> Algebra::with_order(int order) const {
  std::vector<Relation> rels;
  for (const Relation& r : relations_) {
    Relation c{r.later, r.earlier, {}};
    for (const auto& [k, s] : r.rhs) {
      TruncScalar t = s.with_order(order);
      if (!t.is_zero()) c.rhs.emplace(k, std::move(t));
    }
    rels.push_back(std::move(c));
  }
  return std::make_shared<Algebra>(generators_, std::move(rels), order, limits_);
}

// ---------------------------------------------------------------------------

TensorElement::TensorElement(AlgebraPtr algebra, int arity) : algebra_(std::move(algebra)), arity_(arity) {
  if (!algebra_) throw Error("tensor element needs an algebra");
  if (arity < 0) throw ArityMismatch("negative arity");
}

TensorElement TensorElement::unit(AlgebraPtr algebra, int arity) {
  const int order = algebra->order();
  return scalar(std::move(algebra), arity, TruncScalar::one(order));
}

TensorElement TensorElement::scalar(AlgebraPtr algebra, int arity, const TruncScalar& c) {
  TensorElement e(algebra, arity);
  if (c.order() != algebra->order()) throw OrderMismatch("scalar order differs from the algebra's");
  e.add_term(ExponentKey(static_cast<std::size_t>(arity) * algebra->ngens(), 0), c);
  return e;
}

TensorElement TensorElement::generator(AlgebraPtr algebra, int index) {
  if (index < 0 || index >= algebra->ngens()) throw OutOfRange("generator index out of range");
  TensorElement e(algebra, 1);
  ExponentKey k(algebra->ngens(), 0);
  k[index] = 1;
  e.add_term(std::move(k), TruncScalar::one(algebra->order()));
  return e;
}

TensorElement TensorElement::term(AlgebraPtr algebra, const std::vector<Monomial>& legs,
                                  const TruncScalar& c) {
  TensorElement e(algebra, static_cast<int>(legs.size()));
  ExponentKey k;
  for (const Monomial& m : legs) {
    if (static_cast<int>(m.exponents().size()) != algebra->ngens())
      throw ArityMismatch("monomial has the wrong number of exponents");
    k.insert(k.end(), m.exponents().begin(), m.exponents().end());
  }
  e.add_term(std::move(k), c);
  return e;
}

void TensorElement::add_term(const ExponentKey& key, const TruncScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add_term(ExponentKey&& key, const TruncScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int TensorElement::valuation() const {
  int v = order() + 1;
  for (const auto& [k, c] : terms_) v = std::min(v, c.valuation());
  return v;
}

TruncScalar TensorElement::unit_coefficient() const {
  auto it = terms_.find(ExponentKey(static_cast<std::size_t>(arity_) * ngens(), 0));
  return it == terms_.end() ? TruncScalar(order()) : it->second;
}

void TensorElement::check_compatible(const TensorElement& o) const {
  if (!algebra_ || !o.algebra_) throw ContextMismatch("uninitialised tensor element");
  if (algebra_ != o.algebra_) throw ContextMismatch("elements belong to different algebras");
  if (arity_ != o.arity_)
    throw ArityMismatch("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(o.arity_));
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_compatible(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const TruncScalar& c) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement e = *this;
  for (auto& [k, c] : e.terms_) c = -c;
  return e;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.arity_ != b.arity_) return false;
  if (a.algebra_ != b.algebra_ &&
      (a.order() != b.order() || !(a.algebra_->generators() == b.algebra_->generators())))
    return false;
  return a.terms_ == b.terms_;
}

TensorElement TensorElement::rebind(AlgebraPtr algebra) const {
  if (!(algebra->generators() == algebra_->generators()))
    throw ContextMismatch("cannot rebind across different generator tables");
  TensorElement e(algebra, arity_);
  for (const auto& [k, c] : terms_) e.add_term(k, c.with_order(algebra->order()));
  return e;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  a.check_compatible(b);
  const Algebra& alg = *a.algebra_;
  const int ng = alg.ngens();
  const int n = a.arity_;
  const int N = alg.order();
  TensorElement out(a.algebra_, n);

  std::vector<int> a_last, b_first;
  ExponentKey key(static_cast<std::size_t>(n) * ng);
  std::vector<std::pair<ExponentKey, TruncScalar>> combos, next;

  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (ca.valuation() + cb.valuation() > N) continue;
      TruncScalar c = ca * cb;
      if (c.is_zero()) continue;
      bool ordered = true;
      for (int l = 0; l < n && ordered; ++l)
        ordered = last_nonzero(ka.data() + l * ng, ng) <= first_nonzero(kb.data() + l * ng, ng);
      if (ordered) {
        for (std::size_t i = 0; i < key.size(); ++i) key[i] = static_cast<Exponent>(ka[i] + kb[i]);
        out.add_term(key, c);
        continue;
      }
      combos.clear();
      combos.emplace_back(ExponentKey(static_cast<std::size_t>(n) * ng), c);
      for (int l = 0; l < n; ++l) {
        const Exponent* la = ka.data() + l * ng;
        const Exponent* lb = kb.data() + l * ng;
        if (last_nonzero(la, ng) <= first_nonzero(lb, ng)) {
          for (auto& [k, s] : combos)
            for (int g = 0; g < ng; ++g) k[l * ng + g] = static_cast<Exponent>(la[g] + lb[g]);
          continue;
        }
        ExponentKey leg_a(la, la + ng), leg_b(lb, lb + ng);
        const auto prod = alg.multiply(leg_a, leg_b);
        next.clear();
        for (const auto& [k, s] : combos) {
          for (const auto& [m, cm] : prod) {
            if (s.valuation() + cm.valuation() > N) continue;
            TruncScalar sc = s * cm;
            if (sc.is_zero()) continue;
            ExponentKey nk = k;
            std::copy(m.begin(), m.end(), nk.begin() + l * ng);
            next.emplace_back(std::move(nk), std::move(sc));
          }
        }
        combos.swap(next);
      }
      for (auto& [k, s] : combos) out.add_term(std::move(k), s);
    }
  }
  if (out.size() > alg.limits().term_budget)
    throw TermBudgetExceeded("product exceeded the term budget (" + std::to_string(out.size()) + " terms)");
  return out;
}

TensorElement normalize_product(const TensorElement& a, const TensorElement& b) { return a * b; }
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) { return a * b; }

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  if (a.algebra() != b.algebra()) throw ContextMismatch("elements belong to different algebras");
  TensorElement out(a.algebra(), a.arity() + b.arity());
  const int N = a.order();
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ca.valuation() + cb.valuation() > N) continue;
      ExponentKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add_term(std::move(k), ca * cb);
    }
  }
  return out;
}

TensorElement place_legs(const TensorElement& a, const std::vector<int>& target, int out_arity) {
  if (static_cast<int>(target.size()) != a.arity())
    throw ArityMismatch("leg placement needs one target per leg");
  std::vector<bool> used(out_arity, false);
  for (int t : target) {
    if (t < 0 || t >= out_arity) throw OutOfRange("leg position out of range");
    if (used[t]) throw OutOfRange("two legs placed at the same position");
    used[t] = true;
  }
  const int ng = a.ngens();
  TensorElement out(a.algebra(), out_arity);
  for (const auto& [k, c] : a.terms()) {
    ExponentKey nk(static_cast<std::size_t>(out_arity) * ng, 0);
    for (std::size_t i = 0; i < target.size(); ++i)
      std::copy(k.begin() + i * ng, k.begin() + (i + 1) * ng, nk.begin() + target[i] * ng);
    out.add_term(std::move(nk), c);
  }
  return out;
}

TensorElement embed_j_sigma(const TensorElement& a, const SubsetIndex& sigma, int block_width) {
  if (a.arity() != sigma.size() * block_width)
    throw ArityMismatch("j_sigma: element arity " + std::to_string(a.arity()) + " does not match |sigma| = " +
                        std::to_string(sigma.size()));
  std::vector<int> target;
  for (int p : sigma.positions())
    for (int w = 0; w < block_width; ++w) target.push_back((p - 1) * block_width + w);
  return place_legs(a, target, sigma.ambient() * block_width);
}

TensorElement apply_flip(const TensorElement& a, int p, int q) {
  if (p < 1 || q < 1 || p > a.arity() || q > a.arity()) throw OutOfRange("flip position out of range");
  std::vector<int> target(a.arity());
  for (int i = 0; i < a.arity(); ++i) target[i] = i;
  std::swap(target[p - 1], target[q - 1]);
  return place_legs(a, target, a.arity());
}

TensorElement embed_pair(const TensorElement& r, int p, int q, int arity) {
  if (r.arity() != 2) throw ArityMismatch("embed_pair needs an element of H (x) H");
  if (p == q) throw OutOfRange("embed_pair needs distinct positions");
  if (p < 1 || q < 1 || p > arity || q > arity) throw OutOfRange("embed_pair position out of range");
  return place_legs(r, {p - 1, q - 1}, arity);
}

TensorElement tensor_invert(const TensorElement& a) {
  const Rational c0 = a.unit_coefficient().coefficient(0);
  if (sgn(c0) == 0) throw NotInvertible("h^0 part is not a nonzero multiple of the unit");
  const TruncScalar inv_c = TruncScalar::constant(1 / c0, a.order());
  const TensorElement one = TensorElement::unit(a.algebra(), a.arity());
  TensorElement x = a * inv_c - one;
  if (x.valuation() < 1) throw NotInvertible("h^0 part is not a scalar multiple of the unit");
  // (1 + x)^{-1} = sum_k (-x)^k; x^{N+1} = 0.
  TensorElement minus_x = -x;
  TensorElement result = one;
  TensorElement power = one;
  for (int k = 1; k <= a.order(); ++k) {
    power = power * minus_x;
    if (power.is_zero()) break;
    result += power;
  }
  return result * inv_c;
}

TensorElement h_coefficient(const TensorElement& a, int l) {
  if (l < 0 || l > a.order()) throw OutOfRange("h_coefficient: degree out of range");
  TensorElement out(a.algebra(), a.arity());
  for (const auto& [k, c] : a.terms()) out.add_term(k, TruncScalar::constant(c.coefficient(l), a.order()));
  return out;
}

}  // namespace qhopf
