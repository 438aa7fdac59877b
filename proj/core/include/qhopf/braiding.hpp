#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/hopf.hpp"

namespace qhopf {

/// A quasitriangular pair (H, R) together with the derived Hopf structure on
/// H (x) H. R^{-1} is computed once at construction.
class QTContext {
 public:
  /// Throws Error if the presentation carries no R-matrix.
  explicit QTContext(PresentationPtr presentation);

  const HopfContext& hopf() const noexcept { return hopf_; }
  const HopfContext& twisted() const noexcept { return twisted_; }
  const TensorElement& r() const noexcept { return r_; }
  const TensorElement& r_inv() const noexcept { return r_inv_; }
  const AlgebraPtr& algebra() const { return hopf_.algebra(); }
  int order() const { return hopf_.order(); }

 private:
  HopfContext hopf_;
  HopfContext twisted_;
  TensorElement r_;
  TensorElement r_inv_;
};

/// s_23 o (D (x) id (x) id) o (id (x) D), built from first principles (not
/// through the width-2 HopfContext, which it cross-checks).
TensorElement twisted_coproduct(const QTContext& qt, const TensorElement& a);

/// R_Sigma in H^{(x) 2n}: the ordered product over a = 1..k, and within each
/// row b = k..1, of R_{2 i_a - 1, 2 i_b}; the empty product is the unit.
TensorElement r_sigma(const QTContext& qt, const SubsetIndex& sigma);

/// R a R^{-1}.
TensorElement ad_r(const QTContext& qt, const TensorElement& a);
/// R^{-1} a R.
TensorElement ad_r_inverse(const QTContext& qt, const TensorElement& a);

/// The h-linear part of R.
TensorElement classical_r_extract(const QTContext& qt);

struct CheckRecord {
  std::string name;
  bool passed = false;
  int residual_valuation = 0;   // order()+1 when exact
  std::string counterexample;   // element grammar, empty on pass
  std::string detail;
};

struct VerdictReport {
  std::vector<CheckRecord> records;
  bool passed() const;
  /// Smallest residual valuation over all failing records (order()+1 if none).
  int worst_residual(int order) const;
};

/// R D(a) R^{-1} = D^op(a) on each test element, (D (x) id)(R) = R_13 R_23,
/// (id (x) D)(R) = R_13 R_12, and R_12 R_13 R_23 = R_23 R_13 R_12.
VerdictReport qt_axioms_check(const QTContext& qt, const std::vector<TensorElement>& test_set);

/// For every Sigma <= {1..n}: twisted D_Sigma(R) equals r_sigma(Sigma) exactly.
VerdictReport verify_r_sigma_identity(const QTContext& qt, int n);

/// Twisted D_Sigma(a) minus
///   sum_{S' <= Sigma, |S'| <= i} (-1)^{i-|S'|} C(|Sigma|-1-|S'|, i-|S'|) D_{S'}(a)
/// must have valuation >= i+1. `certificate` must be a passing width-2 gate
/// certificate for `a` reaching at least |Sigma|; otherwise PreconditionError.
CheckRecord verify_truncated_expansion(const QTContext& qt, const GateCertificate& certificate,
                                       const SubsetIndex& sigma, int i);

struct StabilityResult {
  GateCertificate image;  // gate run on R a R^{-1}
  bool falsified() const { return !image.passed(); }
};

/// Runs the width-2 gate on R a R^{-1}; `certificate` must certify a with the
/// same n_max. A failing image certificate is a counterexample to stability.
StabilityResult verify_adjoint_stability(const QTContext& qt, const GateCertificate& certificate);

/// Operator picture of a braiding: Ad(R) on H (x) H and its legwise versions
/// on H^{(x) 3}. R_13 is realised as (sigma (x) id) o (id (x) R) o (sigma (x) id).
struct BraidOperator {
  const QTContext* qt;
  TensorElement apply(const TensorElement& a) const { return ad_r(*qt, a); }
  TensorElement apply12(const TensorElement& x) const;
  TensorElement apply23(const TensorElement& x) const;
  TensorElement apply13(const TensorElement& x) const;
};

struct BraidOperatorReport {
  VerdictReport axioms;            // one record per axiom and corpus element
  std::optional<std::string> sigma_witness;  // w with R(w) != sigma(w)
  bool differs_from_flip = false;
  bool passed() const { return axioms.passed() && differs_from_flip; }
};

/// Braided-algebra axioms for R = Ad(R) restricted to gate-certified elements:
///   R o D = D^op                      on certified a in H,
///   (D (x) id) o R = R_13 R_23 (D (x) id)   on certified elements of H (x) H,
///   (id (x) D) o R = R_13 R_12 (id (x) D)   on the same,
///   R_12 R_13 R_23 = R_23 R_13 R_12   on triple tensors of certified elements,
/// plus a witness that R differs from the flip.
BraidOperatorReport braided_axioms_check(const QTContext& qt, const std::vector<GateCertificate>& certified_h,
                                         const std::vector<GateCertificate>& certified_hh);

struct CorpusOptions {
  int max_degree = 3;
  std::size_t limit = 0;          // 0 keeps every scaled monomial
  int random_combinations = 0;    // extra random sums of kept elements
  std::uint64_t seed = 0;
};

/// Gate-certified test elements of a context: h^d * m for every monomial m
/// (all legs together) of total degree d <= max_degree, optionally thinned to
/// `limit` elements by a seeded draw, plus random rational combinations of
/// them. Each element is re-verified by the gate; rejects are dropped.
std::vector<GateCertificate> certified_corpus(const HopfContext& ctx, int n_max, const CorpusOptions& options = {});

}  // namespace qhopf
