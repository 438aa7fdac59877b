#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qhopf/combinatorics.hpp"
#include "qhopf/scalar.hpp"

namespace qhopf {

using Exponent = std::uint16_t;

/// Exponent vector of a PBW word g_1^{e_1} ... g_m^{e_m}; for tensors the legs
/// are concatenated, so a key of arity n has n * ngens entries.
using ExponentKey = std::vector<Exponent>;

/// Sparse linear combination keyed by exponent vectors; std::map keeps
/// iteration (and therefore every printed report) deterministic.
using TermMap = std::map<ExponentKey, TruncScalar>;

/// A normal-form word over a generator table.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(ExponentKey exps) : exps_(std::move(exps)) {}
  static Monomial unit(int ngens) { return Monomial(ExponentKey(ngens, 0)); }

  const ExponentKey& exponents() const noexcept { return exps_; }
  int degree() const;
  bool is_unit() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  ExponentKey exps_;
};

/// Ordered generator names; list order is the PBW order.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<std::string> names);

  int size() const noexcept { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;

 private:
  std::vector<std::string> names_;
};

/// Straightening rule for an out-of-order adjacent pair g_later * g_earlier.
struct Relation {
  int later = 0;
  int earlier = 0;
  TermMap rhs;  // normal-form words of length ngens
};

/// Budgets guarding against presentations whose rewriting does not terminate.
struct RewriteLimits {
  long step_budget = 2'000'000;
  int depth_budget = 400;
  std::size_t term_budget = 4'000'000;
};

/// A presented associative algebra over Q[h]/(h^{N+1}) with PBW normal forms.
///
/// Immutable after construction apart from an internal, thread-safe cache of
/// monomial products.
class Algebra {
 public:
  Algebra(GeneratorTable generators, std::vector<Relation> relations, int order,
          RewriteLimits limits = {});

  const GeneratorTable& generators() const noexcept { return generators_; }
  int ngens() const noexcept { return generators_.size(); }
  int order() const noexcept { return order_; }
  const RewriteLimits& limits() const noexcept { return limits_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const TermMap* rule(int later, int earlier) const;

  /// Normal form of a * b for normal-form words a, b (single legs).
  /// Throws Divergence when the step or depth budget runs out.
  std::vector<std::pair<ExponentKey, TruncScalar>> multiply(const ExponentKey& a,
                                                            const ExponentKey& b) const;

  /// Same generators and relations re-read at another truncation order.
  std::shared_ptr<const Algebra> with_order(int order) const;

 private:
  struct Budget {
    long steps = 0;
  };
  using Product = std::vector<std::pair<ExponentKey, TruncScalar>>;
  Product multiply_impl(const ExponentKey& a, const ExponentKey& b, int depth, Budget& budget) const;

  struct KeyHash {
    std::size_t operator()(const ExponentKey& k) const noexcept;
  };

  GeneratorTable generators_;
  std::vector<Relation> relations_;
  std::vector<const TermMap*> rule_index_;  // ngens * ngens, (later, earlier)
  int order_;
  RewriteLimits limits_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<ExponentKey, Product, KeyHash> product_cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Sparse element of H^{(x) n}: (n-tuple of monomials) -> TruncScalar.
/// Arity 0 is allowed and represents a pure scalar.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(AlgebraPtr algebra, int arity);

  static TensorElement unit(AlgebraPtr algebra, int arity);
  static TensorElement scalar(AlgebraPtr algebra, int arity, const TruncScalar& c);
  static TensorElement generator(AlgebraPtr algebra, int index);
  static TensorElement term(AlgebraPtr algebra, const std::vector<Monomial>& legs, const TruncScalar& c);

  int arity() const noexcept { return arity_; }
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  int order() const { return algebra_->order(); }
  int ngens() const { return algebra_->ngens(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c to the coefficient of key, dropping the entry if it cancels.
  void add_term(const ExponentKey& key, const TruncScalar& c);
  void add_term(ExponentKey&& key, const TruncScalar& c);

  /// Min valuation over all coefficients; order()+1 for the zero element.
  int valuation() const;

  /// Coefficient of the unit tensor 1^{(x) n}.
  TruncScalar unit_coefficient() const;

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const TruncScalar& c);

  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(TensorElement a, const TruncScalar& c) { return a *= c; }
  friend TensorElement operator*(const TruncScalar& c, TensorElement a) { return a *= c; }
  TensorElement operator-() const;

  friend bool operator==(const TensorElement& a, const TensorElement& b);

  /// Same coefficients re-read over another algebra with the same generators
  /// (typically the same presentation at a different order).
  TensorElement rebind(AlgebraPtr algebra) const;

  std::string str() const;

 private:
  void check_compatible(const TensorElement& o) const;

  AlgebraPtr algebra_;
  int arity_ = 0;
  TermMap terms_;
};

using AlgebraElement = TensorElement;

TensorElement normalize_product(const TensorElement& a, const TensorElement& b);
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);

/// a (x) b, arities add.
TensorElement tensor_product(const TensorElement& a, const TensorElement& b);

/// j_Sigma: leg block m goes to block position sigma[m]; unit elsewhere.
/// block_width is the number of legs per copy (1 for H, 2 for H (x) H).
TensorElement embed_j_sigma(const TensorElement& a, const SubsetIndex& sigma, int block_width = 1);

/// Transposes legs p and q (1-based).
TensorElement apply_flip(const TensorElement& a, int p, int q);

/// Output leg target[i] receives input leg i (0-based); missing legs become 1.
TensorElement place_legs(const TensorElement& a, const std::vector<int>& target, int out_arity);

/// R_{p,q} in H^{(x) arity}: leg 1 of r at position p, leg 2 at position q.
TensorElement embed_pair(const TensorElement& r, int p, int q, int arity);

/// Inverse of c * 1 + O(h) by geometric series; throws NotInvertible otherwise.
TensorElement tensor_invert(const TensorElement& a);

/// The h^l coefficient, re-embedded as an element with h-degree-0 scalars.
TensorElement h_coefficient(const TensorElement& a, int l);

}  // namespace qhopf
