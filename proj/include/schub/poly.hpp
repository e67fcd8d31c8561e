#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/perm.hpp"

namespace schub {

/// Exponent vector with trailing zeros stripped; entry k is the power of x_{k+1}.
using Mono = std::vector<int>;

inline Mono trim_mono(Mono m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim_mono(std::move(out));
}

/// Graded-lex order with x1 > x2 > ..., larger terms first.
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      int ea = i < a.size() ? a[i] : 0;
      int eb = i < b.size() ? b[i] : 0;
      if (ea != eb) return ea > eb;
    }
    return false;
  }
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in mul");
  return r;
}

/**
 * Polynomial in x1, x2, ... with exact 64-bit integer coefficients.
 * All coefficient arithmetic is overflow-checked; zero terms are never stored.
 */
class Poly {
public:
  using TermMap = std::map<Mono, std::int64_t, GrlexGreater>;

  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly constant(std::int64_t c) {
    Poly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
  }

  static Poly one() { return constant(1); }

  /// The variable x_i (1-based).
  static Poly variable(int i) {
    if (i < 1) throw std::invalid_argument("variable: index must be positive");
    Poly p;
    Mono m(static_cast<size_t>(i), 0);
    m.back() = 1;
    p.terms_[std::move(m)] = 1;
    return p;
  }

  static Poly monomial(Mono m, std::int64_t c) {
    Poly p;
    if (c != 0) {
      for (int e : m)
        if (e < 0) throw std::invalid_argument("monomial: negative exponent");
      p.terms_[trim_mono(std::move(m))] = c;
    }
    return p;
  }

  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(const Mono& m) const {
    auto it = terms_.find(trim_mono(m));
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t constant_term() const { return coeff({}); }

  /// Max total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      if (d == -1) d = mono_degree(m);
      else if (mono_degree(m) != d) return false;
    }
    return true;
  }

  /// Largest variable index with nonzero exponent anywhere (0 for constants).
  int num_vars() const {
    size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return static_cast<int>(n);
  }

  bool has_nonneg_coeffs() const {
    for (const auto& [m, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  void add_term(Mono m, std::int64_t c) {
    if (c == 0) return;
    Mono key = trim_mono(std::move(m));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a.terms_) out.terms_[m] = checked_mul(c, -1);
    return out;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(mono_mul(ma, mb), checked_mul(ca, cb));
    return out;
  }

  friend Poly operator*(std::int64_t c, const Poly& a) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, k] : a.terms_) out.terms_[m] = checked_mul(c, k);
    return out;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Exact evaluation at integer points (x_i = xs[i-1]; missing entries are 0).
  std::int64_t evaluate(const std::vector<std::int64_t>& xs) const {
    std::int64_t total = 0;
    for (const auto& [m, c] : terms_) {
      std::int64_t term = c;
      for (size_t i = 0; i < m.size(); ++i) {
        std::int64_t base = i < xs.size() ? xs[i] : 0;
        for (int e = 0; e < m[i]; ++e) term = checked_mul(term, base);
      }
      total = checked_add(total, term);
    }
    return total;
  }

private:
  TermMap terms_;
};

/// Substitute x_i -> x_{w(i)}; variables beyond w's rank are untouched.
inline Poly act(const Perm& w, const Poly& f) {
  Poly out;
  for (const auto& [m, c] : f.terms()) {
    Mono nm(std::max(m.size(), static_cast<size_t>(w.n())), 0);
    for (size_t i = 0; i < m.size(); ++i) {
      int var = static_cast<int>(i) + 1;
      int target = var <= w.n() ? w(var) : var;
      nm[static_cast<size_t>(target - 1)] += m[i];
    }
    out.add_term(std::move(nm), c);
  }
  return out;
}

/// Swap x_a and x_b.
inline Poly act_transposition(int a, int b, const Poly& f) {
  if (a == b) return f;
  Poly out;
  size_t ia = static_cast<size_t>(a - 1), ib = static_cast<size_t>(b - 1);
  for (const auto& [m, c] : f.terms()) {
    Mono nm = m;
    nm.resize(std::max(nm.size(), std::max(ia, ib) + 1), 0);
    std::swap(nm[ia], nm[ib]);
    out.add_term(std::move(nm), c);
  }
  return out;
}

/// Substitute x_i -> x_{i+k}.
inline Poly shift_vars(const Poly& f, int k) {
  if (k < 0) throw std::invalid_argument("shift_vars: negative shift");
  Poly out;
  for (const auto& [m, c] : f.terms()) {
    Mono nm(m.size() + static_cast<size_t>(k), 0);
    for (size_t i = 0; i < m.size(); ++i) nm[i + static_cast<size_t>(k)] = m[i];
    out.add_term(std::move(nm), c);
  }
  return out;
}

/// Complete homogeneous symmetric polynomial h_k(x_1, ..., x_m): the sum of
/// all degree-k monomials in the first m variables.  h_0 = 1; k < 0 gives 0.
inline Poly complete_homogeneous(int k, int m) {
  if (m < 0) throw std::invalid_argument("complete_homogeneous: negative variable count");
  if (k < 0) return Poly::zero();
  if (k == 0) return Poly::one();
  if (m == 0) return Poly::zero();
  Poly out;
  // Enumerate weak compositions of k into m parts.
  Mono mono(static_cast<size_t>(m), 0);
  mono[0] = k;
  while (true) {
    out.add_term(mono, 1);
    // Next composition in colex-style order: move one unit rightward.
    int i = 0;
    while (i < m && mono[static_cast<size_t>(i)] == 0) ++i;
    if (i == m - 1) break;  // all mass in the last slot: done
    int v = mono[static_cast<size_t>(i)];
    mono[static_cast<size_t>(i)] = 0;
    mono[0] = v - 1;
    mono[static_cast<size_t>(i) + 1] += 1;
  }
  return out;
}

// --- text forms ---------------------------------------------------------

inline std::string mono_to_string(const Mono& m) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] != 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

/// Terms in graded-lex order, e.g. "x1^2*x2 - 3*x3 + 5".
inline std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::int64_t a = c;
    if (first) {
      if (a < 0) { os << '-'; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.empty()) os << a;
    else if (a == 1) os << mono_to_string(m);
    else os << a << '*' << mono_to_string(m);
  }
  return os.str();
}

namespace detail {

class PolyParser {
public:
  explicit PolyParser(const std::string& text) : s_(text) {}

  Poly parse() {
    Poly p = expression();
    skip_ws();
    if (pos_ != s_.size()) throw std::invalid_argument("parse_poly: trailing input");
    return p;
  }

private:
  const std::string& s_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) { ++pos_; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::int64_t integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("parse_poly: expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  Poly expression() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') { ++pos_; acc *= factor(); }
      else if (c == 'x' || c == '(') acc *= factor();  // juxtaposition
      else break;
    }
    return acc;
  }

  Poly factor() {
    Poly base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = expression();
      if (!eat(')')) throw std::invalid_argument("parse_poly: missing ')'");
    } else if (c == 'x') {
      ++pos_;
      base = Poly::variable(static_cast<int>(integer()));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Poly::constant(integer());
    } else {
      throw std::invalid_argument("parse_poly: unexpected character");
    }
    if (eat('^')) {
      std::int64_t e = integer();
      if (e < 0) throw std::invalid_argument("parse_poly: negative exponent");
      Poly pow = Poly::one();
      for (std::int64_t k = 0; k < e; ++k) pow *= base;
      base = std::move(pow);
    }
    return base;
  }
};

}  // namespace detail

/// Parse "x1^3*x2^2", "2*x1 - 3*(x2 + 1)^2", "x1 x2" (juxtaposition multiplies).
inline Poly parse_poly(const std::string& text) {
  return detail::PolyParser(text).parse();
}

}  // namespace schub
