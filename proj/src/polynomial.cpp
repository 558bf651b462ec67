#include "topotutte/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace topotutte {

namespace {

struct VarRegistry {
  std::shared_mutex mutex;
  std::deque<std::string> names{""};  // stable references
  std::unordered_map<std::string, std::uint32_t> ids{{"", 0}};
};

VarRegistry& registry() {
  static VarRegistry r;
  return r;
}

int checked_exponent(long long value) {
  if (value > std::numeric_limits<std::int32_t>::max() || value < std::numeric_limits<std::int32_t>::min())
    throw std::overflow_error("polynomial exponent overflow");
  return static_cast<int>(value);
}

}  // namespace

Var::Var(std::string_view name) {
  auto& reg = registry();
  std::string key(name);
  {
    std::shared_lock lock(reg.mutex);
    if (auto it = reg.ids.find(key); it != reg.ids.end()) {
      id_ = it->second;
      return;
    }
  }
  std::unique_lock lock(reg.mutex);
  auto [it, inserted] = reg.ids.emplace(key, static_cast<std::uint32_t>(reg.names.size()));
  if (inserted) reg.names.push_back(key);
  id_ = it->second;
}

const std::string& Var::name() const {
  auto& reg = registry();
  std::shared_lock lock(reg.mutex);
  return reg.names[id_];
}

Var Var::arrow(const Rational& index) { return Var("K{" + to_string(index) + "}"); }

// ---------------------------------------------------------------------------

Monomial::Monomial(Var v, int doubled_exponent) {
  if (doubled_exponent != 0) factors_.emplace_back(v, doubled_exponent);
}

int Monomial::doubled_exponent(Var v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int e = checked_exponent(static_cast<long long>(a->second) + b->second);
      if (e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = checked_exponent(-static_cast<long long>(f.second));
  return out;
}

Monomial Monomial::scaled(int num, int den) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    long long scaled = static_cast<long long>(e) * num;
    if (scaled % den != 0) throw std::invalid_argument("exponent is not a multiple of 1/2 after substitution");
    int ne = checked_exponent(scaled / den);
    if (ne != 0) out.factors_.emplace_back(v, ne);
  }
  return out;
}

// ---------------------------------------------------------------------------

Poly::Poly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::variable(Var v, int doubled_exponent) { return term(Rational(1), Monomial(v, doubled_exponent)); }

Poly Poly::term(const Rational& coefficient, Monomial m) {
  Poly p;
  if (sgn(coefficient) != 0) p.terms_.emplace(std::move(m), coefficient);
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

std::vector<Var> Poly::variables() const {
  std::vector<Var> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1), base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

using NamedMonomial = std::vector<std::pair<std::string, int>>;

NamedMonomial named(const Monomial& m) {
  NamedMonomial out;
  for (const auto& [v, e] : m.factors()) out.emplace_back(v.name(), e);
  std::sort(out.begin(), out.end());
  return out;
}

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) {
    int e = doubled / 2;
    return e == 1 ? "" : "^" + std::to_string(e);
  }
  return "^(" + std::to_string(doubled) + "/2)";
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<NamedMonomial, const Rational*>> ordered;
  ordered.reserve(terms_.size());
  for (const auto& [m, c] : terms_) ordered.emplace_back(named(m), &c);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.empty() != b.first.empty()) return b.first.empty();
    return a.first < b.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : ordered) {
    Rational c = *coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (const auto& [name, e] : mono) {
      if (!factors.empty()) factors += "*";
      factors += name + exponent_text(e);
    }
    if (factors.empty()) {
      out += topotutte::to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += topotutte::to_string(c) + "*" + factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    Poly result;
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    Poly t = parse_term();
    result += negative ? -t : t;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      Poly next = parse_term();
      result += op == '-' ? -next : next;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  Poly parse_term() {
    Poly t = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      t *= parse_factor();
    }
    return t;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly parse_factor() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        std::string den = digits();
        if (den.empty()) fail("malformed rational");
        return Poly(parse_rational(num + "/" + den));
      }
      return Poly(parse_rational(num));
    }
    if (c == '(') {
      ++pos_;
      std::size_t depth = 1, start = pos_;
      while (pos_ < text_.size() && depth) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth) fail("unbalanced parenthesis");
      Poly inner = PolyParser(text_.substr(start, pos_ - 1 - start)).parse();
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        int e = parse_exponent();
        if (e < 0 || e % 2) fail("parenthesised powers must be non-negative integers");
        inner = inner.pow(static_cast<unsigned>(e / 2));
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      if (peek() == '{') {
        while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
        if (peek() != '}') fail("unterminated '{'");
        ++pos_;
      }
      Var v(text_.substr(start, pos_ - start));
      skip_ws();
      int e = 2;
      if (peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      return Poly::variable(v, e);
    }
    fail("expected a number, variable or '('");
  }

  // Returns a doubled exponent.
  int parse_exponent() {
    skip_ws();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string num = digits();
    if (num.empty()) fail("expected exponent");
    long long value = std::stoll(num) * 2;
    if (paren && peek() == '/') {
      ++pos_;
      std::string den = digits();
      if (den == "2") {
        value /= 2;
      } else if (den != "1") {
        fail("exponent denominator must be 1 or 2");
      }
    }
    if (paren) {
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return checked_exponent(neg ? -value : value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

// ---------------------------------------------------------------------------

Rational evaluate(const Poly& p, const Assignment& values) {
  std::map<std::pair<Var, int>, Rational> powers;
  auto factor = [&](Var v, int doubled) -> const Rational& {
    auto key = std::make_pair(v, doubled);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    auto it = values.find(v);
    if (it == values.end()) throw std::domain_error("variable '" + v.name() + "' is not assigned");
    Rational base = it->second;
    long e = doubled;
    if (doubled % 2 != 0) {
      auto root = exact_sqrt(base);
      if (!root) throw std::domain_error("half power of non-square value for '" + v.name() + "'");
      base = *root;
    } else {
      e = doubled / 2;
    }
    if (sgn(base) == 0 && e < 0) throw std::domain_error("zero value for '" + v.name() + "' under a negative power");
    return powers.emplace(key, power(base, e)).first->second;
  };

  Rational total(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) t *= factor(v, e);
    total += t;
  }
  return total;
}

Poly substitute_monomial(const Poly& p, const std::map<Var, Poly>& rules) {
  struct Target {
    Rational coefficient;
    Monomial monomial;
  };
  std::map<Var, Target> targets;
  for (const auto& [v, target] : rules) {
    if (target.size() != 1) throw std::invalid_argument("substitution target for '" + v.name() + "' is not a monomial");
    const auto& [m, c] = *target.terms().begin();
    targets.emplace(v, Target{c, m});
  }

  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Rational coef = c;
    Monomial mono;
    for (const auto& [v, e] : m.factors()) {
      auto it = targets.find(v);
      if (it == targets.end()) {
        mono = mono * Monomial(v, e);
        continue;
      }
      Rational base = it->second.coefficient;
      long ce = e;
      if (e % 2 != 0) {
        auto root = exact_sqrt(base);
        if (!root) throw std::invalid_argument("half power of a non-square substitution coefficient");
        base = *root;
      } else {
        ce = e / 2;
      }
      coef *= power(base, ce);
      mono = mono * it->second.monomial.scaled(e, 2);
    }
    out.add_term(mono, coef);
  }
  return out;
}

Poly substitute(const Poly& p, const std::map<Var, Poly>& rules) {
  std::map<std::pair<Var, int>, Poly> powers;
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::term(c, Monomial{});
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = rules.find(v);
      if (it == rules.end()) {
        rest = rest * Monomial(v, e);
        continue;
      }
      if (e < 0 || e % 2 != 0)
        throw std::invalid_argument("cannot substitute a polynomial into a negative or half power of '" + v.name() + "'");
      auto key = std::make_pair(v, e);
      auto pit = powers.find(key);
      if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(static_cast<unsigned>(e / 2))).first;
      t *= pit->second;
    }
    out += t * Poly::term(Rational(1), rest);
  }
  return out;
}

}  // namespace topotutte
