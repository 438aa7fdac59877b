#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qhopf {

/// A subset {i_1 < ... < i_k} of {1, ..., n}, positions 1-based.
class SubsetIndex {
 public:
  SubsetIndex() = default;
  /// Throws OutOfRange unless positions are strictly increasing within [1, ambient].
  SubsetIndex(std::vector<int> positions, int ambient);

  static SubsetIndex full(int n);
  static SubsetIndex from_mask(std::uint32_t mask, int ambient);

  const std::vector<int>& positions() const noexcept { return positions_; }
  int size() const noexcept { return static_cast<int>(positions_.size()); }
  int ambient() const noexcept { return ambient_; }
  bool empty() const noexcept { return positions_.empty(); }
  std::uint32_t mask() const;
  bool contains(int position) const;

  /// Rendered as "{1,3}" or "{}".
  std::string str() const;
  /// Parses "{1,3}", "1,3" or "{}"; ambient defaults to the largest position.
  static SubsetIndex parse(const std::string& text, int ambient = -1);

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  std::vector<int> positions_;
  int ambient_ = 0;
};

/// All subsets of {1..n}, by size and then lexicographically.
std::vector<SubsetIndex> subsets(int n, int max_size = -1);

/// All subsets of the given subset, same ordering, same ambient.
std::vector<SubsetIndex> subsets_of(const SubsetIndex& sigma, int max_size = -1);

/// (upper choose lower), zero when lower < 0 or lower > upper; zero for upper < 0.
mpz_class binom(long upper, long lower);

/// Pascal-triangle cache of exact binomials C(u, v) for 0 <= u, v <= cap.
class BinomTable {
 public:
  explicit BinomTable(int cap);
  int cap() const noexcept { return cap_; }
  /// Out-of-table or out-of-support arguments give zero.
  const mpz_class& operator()(int upper, int lower) const;

 private:
  int cap_;
  std::vector<std::vector<mpz_class>> rows_;
  mpz_class zero_;
};

struct BinomialIdentityResult {
  int r = 0, t = 0, s = 0;
  mpz_class sum_a, expected_a;
  mpz_class sum_b, expected_b;
  bool pass_a = false;
  bool pass_b = false;
  bool passed() const { return pass_a && pass_b; }
};

/// Evaluates sum_{d=0..t} (-1)^d C(d-1, r) C(t, d) against -(-1)^r and
/// sum_{d=0..t} (-1)^d C(d+s, r) C(t, d) against 0. Requires r < t.
BinomialIdentityResult verify_binomial_identities(int r, int t, int s);

/// sum over Sigma' <= T <= Sigma of (-1)^{|T| - |Sigma'|}: 1 if equal, else 0.
long moebius_sign_sum(const SubsetIndex& lower, const SubsetIndex& upper);

}  // namespace qhopf
