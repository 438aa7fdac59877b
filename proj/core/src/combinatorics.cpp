#include "qhopf/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "qhopf/error.hpp"

namespace qhopf {

SubsetIndex::SubsetIndex(std::vector<int> positions, int ambient)
    : positions_(std::move(positions)), ambient_(ambient) {
  if (ambient_ < 0 || ambient_ > 31) throw OutOfRange("subset ambient must be in [0, 31]");
  for (std::size_t m = 0; m < positions_.size(); ++m) {
    if (positions_[m] < 1 || positions_[m] > ambient_)
      throw OutOfRange("subset position " + std::to_string(positions_[m]) + " outside {1.." +
                       std::to_string(ambient_) + "}");
    if (m > 0 && positions_[m] <= positions_[m - 1])
      throw OutOfRange("subset positions must be strictly increasing");
  }
}

SubsetIndex SubsetIndex::full(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return SubsetIndex(std::move(p), n);
}

SubsetIndex SubsetIndex::from_mask(std::uint32_t mask, int ambient) {
  std::vector<int> p;
  for (int i = 0; i < ambient; ++i)
    if (mask & (1u << i)) p.push_back(i + 1);
  return SubsetIndex(std::move(p), ambient);
}

std::uint32_t SubsetIndex::mask() const {
  std::uint32_t m = 0;
  for (int p : positions_) m |= 1u << (p - 1);
  return m;
}

bool SubsetIndex::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

std::string SubsetIndex::str() const {
  std::string out = "{";
  for (std::size_t m = 0; m < positions_.size(); ++m) {
    if (m) out += ',';
    out += std::to_string(positions_[m]);
  }
  return out + "}";
}

SubsetIndex SubsetIndex::parse(const std::string& text, int ambient) {
  std::vector<int> p;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '{' ||
                               text[i] == '}' || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character in subset '" + text + "'", i);
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    p.push_back(v);
    skip();
  }
  int amb = ambient;
  if (amb < 0) amb = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
  return SubsetIndex(std::move(p), amb);
}

namespace {

void sort_canonical(std::vector<SubsetIndex>& v) {
  std::stable_sort(v.begin(), v.end(), [](const SubsetIndex& a, const SubsetIndex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.positions() < b.positions();
  });
}

}  // namespace

std::vector<SubsetIndex> subsets(int n, int max_size) {
  if (n < 0) throw OutOfRange("subsets: n must be non-negative");
  return subsets_of(SubsetIndex::full(n), max_size);
}

std::vector<SubsetIndex> subsets_of(const SubsetIndex& sigma, int max_size) {
  const int k = sigma.size();
  std::vector<SubsetIndex> out;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    if (max_size >= 0 && std::popcount(m) > max_size) continue;
    std::vector<int> p;
    for (int b = 0; b < k; ++b)
      if (m & (1u << b)) p.push_back(sigma.positions()[b]);
    out.emplace_back(std::move(p), sigma.ambient());
  }
  sort_canonical(out);
  return out;
}

mpz_class binom(long upper, long lower) {
  if (lower < 0 || upper < 0 || lower > upper) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(upper), static_cast<unsigned long>(lower));
  return r;
}

BinomTable::BinomTable(int cap) : cap_(cap), zero_(0) {
  rows_.resize(cap + 1);
  for (int u = 0; u <= cap; ++u) {
    rows_[u].assign(u + 1, 1);
    for (int v = 1; v < u; ++v) rows_[u][v] = rows_[u - 1][v - 1] + rows_[u - 1][v];
  }
}

const mpz_class& BinomTable::operator()(int upper, int lower) const {
  if (upper < 0 || upper > cap_ || lower < 0 || lower > upper) return zero_;
  return rows_[upper][lower];
}

BinomialIdentityResult verify_binomial_identities(int r, int t, int s) {
  if (r < 0 || s < 0 || t < 0) throw HypothesisOutOfRange("binomial identities need r, s, t >= 0");
  if (r >= t)
    throw HypothesisOutOfRange("binomial identities are only claimed for r < t (got r=" +
                               std::to_string(r) + ", t=" + std::to_string(t) + ")");
  BinomialIdentityResult res;
  res.r = r;
  res.t = t;
  res.s = s;
  for (int d = 0; d <= t; ++d) {
    const int sign = (d % 2 == 0) ? 1 : -1;
    res.sum_a += sign * binom(d - 1, r) * binom(t, d);
    res.sum_b += sign * binom(d + s, r) * binom(t, d);
  }
  res.expected_a = (r % 2 == 0) ? -1 : 1;
  res.expected_b = 0;
  res.pass_a = res.sum_a == res.expected_a;
  res.pass_b = res.sum_b == res.expected_b;
  return res;
}

long moebius_sign_sum(const SubsetIndex& lower, const SubsetIndex& upper) {
  const std::uint32_t lo = lower.mask();
  const std::uint32_t hi = upper.mask();
  if ((lo & hi) != lo) return 0;
  long total = 0;
  const std::uint32_t free = hi & ~lo;
  // enumerate T = lo | sub for sub <= free
  for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
    total += (std::popcount(sub) % 2 == 0) ? 1 : -1;
    if (sub == 0) break;
  }
  return total;
}

}  // namespace qhopf
