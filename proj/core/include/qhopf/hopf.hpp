#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"
#include "qhopf/combinatorics.hpp"

namespace qhopf {

/// Hopf data on top of an Algebra: counit values and coproduct images of the
/// generators, plus an optional R-matrix.
struct Presentation {
  AlgebraPtr algebra;
  std::vector<TruncScalar> counit;           // one per generator
  std::vector<TensorElement> coproduct;      // one arity-2 image per generator
  std::optional<TensorElement> r_matrix;     // arity 2, h^0 part 1 (x) 1

  int order() const { return algebra->order(); }
  const GeneratorTable& generators() const { return algebra->generators(); }

  /// Shape checks: one counit value and one arity-2 coproduct image per
  /// generator, everything over `algebra`, R (if any) of arity 2 with h^0 part 1 (x) 1.
  void validate() const;

  /// Same presentation re-read at another truncation order.
  Presentation with_order(int order) const;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// A Hopf algebra whose elements are tensors of `width` base legs: width 1 is
/// H itself, width 2 is H (x) H with the twisted coproduct
/// s_23 o (D (x) id (x) id) o (id (x) D).
///
/// Coproducts are extended multiplicatively from the generator images and
/// cached per monomial block; copies of a context share the cache.
class HopfContext {
 public:
  HopfContext(PresentationPtr presentation, int width);

  static HopfContext base(PresentationPtr p) { return HopfContext(std::move(p), 1); }
  static HopfContext tensor_square(PresentationPtr p) { return HopfContext(std::move(p), 2); }

  int width() const noexcept { return width_; }
  const PresentationPtr& presentation() const noexcept { return presentation_; }
  const AlgebraPtr& algebra() const noexcept { return presentation_->algebra; }
  int order() const { return presentation_->order(); }

  /// 1^{(x) (copies * width)}.
  TensorElement unit(int copies = 1) const;

  /// Algebra generators of this context: g for width 1; g (x) 1 and 1 (x) g for width 2.
  std::vector<TensorElement> generators() const;

  /// Coproduct of an element with `width` legs.
  TensorElement coproduct(const TensorElement& a) const;
  /// Applies the coproduct to copy `copy` (1-based) of an element with k copies.
  TensorElement coproduct_at(const TensorElement& a, int copy) const;
  /// Opposite coproduct: the coproduct followed by swapping the two copies.
  TensorElement coproduct_op(const TensorElement& a) const;

  TruncScalar counit(const TensorElement& a) const;
  /// Applies the counit to copy `copy` (1-based), dropping those legs.
  TensorElement counit_at(const TensorElement& a, int copy) const;

  /// Swaps copies p and q (1-based) of an element with several copies.
  TensorElement swap_copies(const TensorElement& a, int p, int q) const;

  int copies_of(const TensorElement& a) const;

 private:
  struct Cache;
  const TermMap& block_coproduct(const ExponentKey& block) const;
  TruncScalar block_counit(const Exponent* block) const;

  PresentationPtr presentation_;
  int width_;
  std::shared_ptr<Cache> cache_;
};

/// D^n(a): D^0 = counit (an arity-0 scalar element), D^1 = id, D^2 = D,
/// D^n = (D (x) id^{(x)(n-2)}) o D^{n-1}.
TensorElement coproduct_iter(const HopfContext& ctx, const TensorElement& a, int n);

/// D_Sigma = j_Sigma o D^{|Sigma|}, in the ambient copy count of sigma.
TensorElement delta_upper(const HopfContext& ctx, const TensorElement& a, const SubsetIndex& sigma);

/// delta_Sigma = sum_{S' <= Sigma} (-1)^{|Sigma|-|S'|} D_{S'}.
TensorElement delta_lower(const HopfContext& ctx, const TensorElement& a, const SubsetIndex& sigma);

/// delta_n = sum over all subsets S of {1..n} of (-1)^{n-|S|} D_S, enumerated
/// by bitmask independently of delta_lower.
TensorElement delta_n(const HopfContext& ctx, const TensorElement& a, int n);

/// (id - counit)^{(x) n} o D^n, an algebraically independent route to delta_n
/// (equal to it whenever the counit axioms hold).
TensorElement reduced_coproduct(const HopfContext& ctx, const TensorElement& a, int n);

struct MoebiusResult {
  TensorElement reconstruction;  // sum_{S' <= Sigma} delta_{S'}(a)
  TensorElement direct;          // D_Sigma(a)
  bool equal = false;
};

MoebiusResult moebius_reconstruct(const HopfContext& ctx, const TensorElement& a, const SubsetIndex& sigma);

struct GateFailure {
  int n = 0;
  int valuation = 0;
  int required = 0;
};

/// Outcome of the truncated membership test for H' (or (H (x) H)' at width 2):
/// valuation(delta_n(a)) >= min(n, N+1) for n = 1..n_max. A pass certifies
/// membership at order N only.
struct GateCertificate {
  TensorElement subject;
  int width = 1;
  int order = 0;
  int n_max = 0;
  std::vector<int> valuations;  // index n-1
  std::vector<GateFailure> failures;
  bool passed() const { return failures.empty(); }
};

GateCertificate drinfeld_gate(const HopfContext& ctx, const TensorElement& a, int n_max);

struct AxiomFailure {
  std::string axiom;
  std::string element;  // element grammar
  int residual_valuation = 0;
};

struct AxiomReport {
  std::vector<std::string> checked;
  std::vector<AxiomFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Coassociativity, counit laws, and multiplicativity of D and counit, on the
/// generators and on all products of two generators (plus `extra` elements).
AxiomReport hopf_axioms_check(const HopfContext& ctx, const std::vector<TensorElement>& extra = {});

}  // namespace qhopf
