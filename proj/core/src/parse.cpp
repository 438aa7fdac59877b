#include "qhopf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

// A parsed value: either a bare scalar (no arity yet) or a tensor element.
struct Value {
  std::optional<TruncScalar> scalar;
  std::optional<TensorElement> tensor;
};

class Parser {
 public:
  Parser(std::string_view text, AlgebraPtr algebra) : text_(text), alg_(std::move(algebra)) {}

  TensorElement run(int arity) {
    Value v = parse_sum();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (v.scalar) return TensorElement::scalar(alg_, arity, *v.scalar);
    if (v.tensor->arity() != arity)
      throw ParseError("expected an element of arity " + std::to_string(arity) + ", got arity " +
                           std::to_string(v.tensor->arity()),
                       0);
    return *v.tensor;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  unsigned long parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (v > 1'000'000'000ul) fail("integer too large");
    }
    return v;
  }

  std::string parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  int order() const { return alg_->order(); }

  Value lift(const Value& v, int arity) const {
    if (v.tensor) return v;
    return Value{std::nullopt, TensorElement::scalar(alg_, arity, *v.scalar)};
  }

  Value add(const Value& a, const Value& b, int sign, std::size_t at) {
    if (a.scalar && b.scalar) return Value{sign > 0 ? *a.scalar + *b.scalar : *a.scalar - *b.scalar, std::nullopt};
    const int arity = a.tensor ? a.tensor->arity() : b.tensor->arity();
    Value la = lift(a, arity), lb = lift(b, arity);
    if (la.tensor->arity() != lb.tensor->arity())
      throw ParseError("cannot add elements of arity " + std::to_string(la.tensor->arity()) + " and " +
                           std::to_string(lb.tensor->arity()),
                       at);
    return Value{std::nullopt, sign > 0 ? *la.tensor + *lb.tensor : *la.tensor - *lb.tensor};
  }

  Value multiply(const Value& a, const Value& b, std::size_t at) {
    if (a.scalar && b.scalar) return Value{*a.scalar * *b.scalar, std::nullopt};
    if (a.scalar) return Value{std::nullopt, *b.tensor * *a.scalar};
    if (b.scalar) return Value{std::nullopt, *a.tensor * *b.scalar};
    if (a.tensor->arity() != b.tensor->arity())
      throw ParseError("cannot multiply elements of arity " + std::to_string(a.tensor->arity()) + " and " +
                           std::to_string(b.tensor->arity()),
                       at);
    return Value{std::nullopt, *a.tensor * *b.tensor};
  }

  Value power(const Value& base, unsigned long e) {
    if (base.scalar) {
      TruncScalar r = TruncScalar::one(order());
      for (unsigned long i = 0; i < e; ++i) r *= *base.scalar;
      return Value{r, std::nullopt};
    }
    TensorElement r = TensorElement::unit(alg_, base.tensor->arity());
    for (unsigned long i = 0; i < e; ++i) r = r * *base.tensor;
    return Value{std::nullopt, r};
  }

  Value parse_sum() {
    int sign = +1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    std::size_t at = pos_;
    Value acc = parse_tensor_term();
    if (sign < 0) acc = add(Value{TruncScalar(order()), std::nullopt}, acc, -1, at);
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      at = pos_;
      Value rhs = parse_tensor_term();
      acc = add(acc, rhs, c == '+' ? 1 : -1, at);
    }
    return acc;
  }

  Value parse_tensor_term() {
    Value first = parse_product();
    if (peek() != '#') return first;
    TensorElement acc = *lift(first, 1).tensor;
    while (accept('#')) {
      Value leg = parse_product();
      acc = tensor_product(acc, *lift(leg, 1).tensor);
    }
    return Value{std::nullopt, acc};
  }

  Value parse_product() {
    Value acc = parse_power();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        std::size_t at = pos_;
        acc = multiply(acc, parse_power(), at);
      } else {
        break;
      }
    }
    return acc;
  }

  Value parse_power() {
    Value base = parse_atom();
    if (accept('^')) return power(base, parse_uint());
    return base;
  }

  Value parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = parse_digits();
      Rational q(num, 10);
      if (accept('/')) {
        std::size_t at = pos_;
        std::string den = parse_digits();
        Rational d(den, 10);
        if (sgn(d) == 0) throw ParseError("division by zero", at);
        q /= d;
      }
      q.canonicalize();
      return Value{TruncScalar::constant(q, order()), std::nullopt};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "h") return Value{TruncScalar::monomial(1, 1, order()), std::nullopt};
      auto idx = alg_->generators().index_of(name);
      if (!idx) throw UnknownGenerator("unknown generator '" + name + "'", start);
      return Value{std::nullopt, TensorElement::generator(alg_, *idx)};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  AlgebraPtr alg_;
  std::size_t pos_ = 0;
};

// Word order on one leg: compare g_1^{e_1} g_2^{e_2} ... as letter sequences.
int compare_words(const Exponent* a, const Exponent* b, int ng) {
  for (int g = 0; g < ng; ++g) {
    if (a[g] == b[g]) continue;
    const bool a_shorter = a[g] < b[g];
    const Exponent* s = a_shorter ? a : b;
    bool s_has_more = false;
    for (int k = g + 1; k < ng; ++k) s_has_more |= s[k] != 0;
    // the shorter run either ends (prefix, smaller) or continues with a later letter (larger)
    const int s_vs_other = s_has_more ? 1 : -1;
    return a_shorter ? s_vs_other : -s_vs_other;
  }
  return 0;
}

}  // namespace

TensorElement parse_element(std::string_view text, const AlgebraPtr& algebra, int arity) {
  return Parser(text, algebra).run(arity);
}

std::string print_monomial(const GeneratorTable& gens, const Exponent* exps) {
  std::string out;
  for (int g = 0; g < gens.size(); ++g) {
    if (!exps[g]) continue;
    if (!out.empty()) out += '*';
    out += gens.name(g);
    if (exps[g] > 1) out += '^' + std::to_string(exps[g]);
  }
  return out.empty() ? "1" : out;
}

std::string print_element(const TensorElement& a) {
  if (a.is_zero()) return "0";
  const int ng = a.ngens();
  const int n = a.arity();
  std::vector<const TermMap::value_type*> entries;
  entries.reserve(a.size());
  for (const auto& e : a.terms()) entries.push_back(&e);
  auto degree = [](const ExponentKey& k) {
    int d = 0;
    for (Exponent e : k) d += e;
    return d;
  };
  std::sort(entries.begin(), entries.end(), [&](auto* x, auto* y) {
    const int dx = degree(x->first), dy = degree(y->first);
    if (dx != dy) return dx < dy;
    for (int l = 0; l < n; ++l) {
      int c = compare_words(x->first.data() + l * ng, y->first.data() + l * ng, ng);
      if (c != 0) return c < 0;
    }
    return false;
  });

  std::string out;
  bool first = true;
  for (const auto* e : entries) {
    const ExponentKey& k = e->first;
    const TruncScalar& c = e->second;
    std::string body;
    const bool unit_key = std::all_of(k.begin(), k.end(), [](Exponent x) { return x == 0; });
    if (n == 1) {
      body = print_monomial(a.algebra()->generators(), k.data());
    } else if (n > 1) {
      body = "(";
      for (int l = 0; l < n; ++l) {
        if (l) body += " # ";
        body += print_monomial(a.algebra()->generators(), k.data() + l * ng);
      }
      body += ")";
    }
    const bool single = c.sparse_terms().size() == 1;
    const bool negative = single && sgn(c.sparse_terms().front().second) < 0;
    const TruncScalar mag = negative ? -c : c;
    std::string text;
    if ((n <= 1 && unit_key)) {
      text = mag.str();
    } else if (mag.is_one()) {
      text = body;
    } else {
      text = mag.str() + " * " + body;
    }
    if (first)
      out += negative ? "-" + text : text;
    else
      out += (negative ? " - " : " + ") + text;
    first = false;
  }
  return out;
}

std::string TensorElement::str() const { return print_element(*this); }

}  // namespace qhopf
