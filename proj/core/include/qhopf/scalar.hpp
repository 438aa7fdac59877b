#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qhopf {

using Rational = mpq_class;

inline constexpr int kDefaultOrder = 4;

/// An element of Q[h]/(h^{N+1}).
///
/// Only nonzero coefficients are stored, sorted by degree, so equality is
/// structural. The dense view (coefficients()) always has N+1 entries.
class TruncScalar {
 public:
  explicit TruncScalar(int order = kDefaultOrder);

  static TruncScalar constant(const Rational& c, int order);
  /// c * h^degree; zero when degree > order.
  static TruncScalar monomial(const Rational& c, int degree, int order);
  static TruncScalar one(int order) { return constant(1, order); }
  static TruncScalar from_coefficients(const std::vector<Rational>& coeffs, int order);

  int order() const noexcept { return order_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;

  /// Smallest k with a nonzero h^k coefficient, or order()+1 when zero.
  int valuation() const noexcept { return terms_.empty() ? order_ + 1 : terms_.front().first; }
  int infinity() const noexcept { return order_ + 1; }

  Rational coefficient(int k) const;
  std::vector<Rational> coefficients() const;
  const std::vector<std::pair<int, Rational>>& sparse_terms() const noexcept { return terms_; }

  TruncScalar& operator+=(const TruncScalar& o);
  TruncScalar& operator-=(const TruncScalar& o);
  TruncScalar& operator*=(const TruncScalar& o);
  TruncScalar& operator*=(const Rational& c);

  friend TruncScalar operator+(TruncScalar a, const TruncScalar& b) { return a += b; }
  friend TruncScalar operator-(TruncScalar a, const TruncScalar& b) { return a -= b; }
  friend TruncScalar operator*(const TruncScalar& a, const TruncScalar& b);
  friend TruncScalar operator*(TruncScalar a, const Rational& c) { return a *= c; }
  friend TruncScalar operator*(const Rational& c, TruncScalar a) { return a *= c; }
  TruncScalar operator-() const;

  friend bool operator==(const TruncScalar& a, const TruncScalar& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncScalar& a, const TruncScalar& b) { return !(a == b); }

  /// Multiplicative inverse mod h^{N+1}; throws NotAUnit if the constant term vanishes.
  TruncScalar inverse() const;

  /// Re-reads the same coefficients at another order, dropping degrees above it.
  TruncScalar with_order(int order) const;

  /// Divides by h^k; the k lowest coefficients must vanish. The result keeps the order.
  TruncScalar shifted_down(int k) const;

  /// Element-grammar rendering: "3", "1/2*h^2", "(1 + h - 2*h^3)".
  std::string str() const;

 private:
  void check_order(const TruncScalar& o) const;
  void add_scaled(const TruncScalar& o, int sign);

  int order_;
  std::vector<std::pair<int, Rational>> terms_;
};

enum class ScalarOp { add, sub, mul };

TruncScalar scalar_arith(const TruncScalar& a, const TruncScalar& b, ScalarOp op);
inline TruncScalar scalar_inv(const TruncScalar& a) { return a.inverse(); }
inline int scalar_valuation(const TruncScalar& a) { return a.valuation(); }

/// Truncated exp of a series with zero constant term.
TruncScalar exp_series(const TruncScalar& x);

}  // namespace qhopf
