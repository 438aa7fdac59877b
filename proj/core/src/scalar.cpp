#include "qhopf/scalar.hpp"

#include <algorithm>
#include <sstream>

#include "qhopf/error.hpp"

namespace qhopf {

TruncScalar::TruncScalar(int order) : order_(order) {
  if (order < 0) throw OutOfRange("truncation order must be non-negative");
}

TruncScalar TruncScalar::constant(const Rational& c, int order) { return monomial(c, 0, order); }

TruncScalar TruncScalar::monomial(const Rational& c, int degree, int order) {
  TruncScalar s(order);
  if (degree < 0) throw OutOfRange("negative power of h");
  if (degree <= order && sgn(c) != 0) {
    Rational v = c;
    v.canonicalize();
    s.terms_.emplace_back(degree, std::move(v));
  }
  return s;
}

TruncScalar TruncScalar::from_coefficients(const std::vector<Rational>& coeffs, int order) {
  TruncScalar s(order);
  for (int k = 0; k < static_cast<int>(coeffs.size()) && k <= order; ++k) {
    if (sgn(coeffs[k]) != 0) {
      Rational v = coeffs[k];
      v.canonicalize();
      s.terms_.emplace_back(k, std::move(v));
    }
  }
  return s;
}

bool TruncScalar::is_one() const {
  return terms_.size() == 1 && terms_.front().first == 0 && terms_.front().second == 1;
}

Rational TruncScalar::coefficient(int k) const {
  for (const auto& [d, c] : terms_)
    if (d == k) return c;
  return 0;
}

std::vector<Rational> TruncScalar::coefficients() const {
  std::vector<Rational> out(order_ + 1);
  for (const auto& [d, c] : terms_) out[d] = c;
  return out;
}

void TruncScalar::check_order(const TruncScalar& o) const {
  if (o.order_ != order_)
    throw OrderMismatch("truncation orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(o.order_));
}

void TruncScalar::add_scaled(const TruncScalar& o, int sign) {
  check_order(o);
  if (o.terms_.empty()) return;
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first < i->first) {
      merged.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational v = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (sgn(v) != 0) merged.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
}

TruncScalar& TruncScalar::operator+=(const TruncScalar& o) {
  add_scaled(o, +1);
  return *this;
}

TruncScalar& TruncScalar::operator-=(const TruncScalar& o) {
  add_scaled(o, -1);
  return *this;
}

TruncScalar operator*(const TruncScalar& a, const TruncScalar& b) {
  a.check_order(b);
  TruncScalar out(a.order_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.valuation() + b.valuation() > a.order_) return out;
  // Single-term fast path dominates tensor arithmetic.
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    out.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first,
                            Rational(a.terms_[0].second * b.terms_[0].second));
    return out;
  }
  std::vector<Rational> acc(a.order_ + 1);
  std::vector<bool> touched(a.order_ + 1, false);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      if (da + db > a.order_) break;
      acc[da + db] += ca * cb;
      touched[da + db] = true;
    }
  }
  for (int k = 0; k <= a.order_; ++k)
    if (touched[k] && sgn(acc[k]) != 0) out.terms_.emplace_back(k, std::move(acc[k]));
  return out;
}

TruncScalar& TruncScalar::operator*=(const TruncScalar& o) { return *this = *this * o; }

TruncScalar& TruncScalar::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

TruncScalar TruncScalar::operator-() const {
  TruncScalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

TruncScalar TruncScalar::inverse() const {
  if (terms_.empty() || terms_.front().first != 0)
    throw NotAUnit("series with zero constant term is not a unit: " + str());
  const auto a = coefficients();
  std::vector<Rational> b(order_ + 1);
  Rational inv0 = 1 / a[0];
  b[0] = inv0;
  // a_0 b_k = -sum_{j=1..k} a_j b_{k-j}
  for (int k = 1; k <= order_; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s * inv0;
  }
  return from_coefficients(b, order_);
}

TruncScalar TruncScalar::with_order(int order) const {
  TruncScalar s(order);
  for (const auto& t : terms_)
    if (t.first <= order) s.terms_.push_back(t);
  return s;
}

TruncScalar TruncScalar::shifted_down(int k) const {
  if (valuation() < k) throw NotAUnit("cannot divide by h^" + std::to_string(k) + ": " + str());
  TruncScalar s(order_);
  for (const auto& [d, c] : terms_) s.terms_.emplace_back(d - k, c);
  return s;
}

namespace {

std::string power_text(const Rational& c, int d) {
  std::ostringstream os;
  bool unit = (c == 1 || c == -1);
  if (!unit || d == 0) os << abs(c);
  if (d > 0) {
    if (!unit) os << '*';
    os << 'h';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

}  // namespace

std::string TruncScalar::str() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1) {
    const auto& [d, c] = terms_.front();
    return (sgn(c) < 0 ? "-" : "") + power_text(c, d);
  }
  std::string out = "(";
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    out += power_text(c, d);
    first = false;
  }
  return out + ")";
}

TruncScalar scalar_arith(const TruncScalar& a, const TruncScalar& b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add:
      return a + b;
    case ScalarOp::sub:
      return a - b;
    case ScalarOp::mul:
      return a * b;
  }
  return TruncScalar(a.order());
}

TruncScalar exp_series(const TruncScalar& x) {
  if (x.valuation() == 0) throw NotAUnit("exp needs a series without constant term");
  const int n = x.order();
  TruncScalar sum = TruncScalar::one(n);
  TruncScalar term = TruncScalar::one(n);
  for (int k = 1; k <= n; ++k) {
    term = term * x * Rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace qhopf
