#pragma once
// NilCoxeter algebra with polynomial coefficients: generators e_1..e_n whose
// basis words are indexed by rank n+1 permutations, the factored generating
// expression whose coefficients are the Schubert polynomials, a positivity
// scan for single divided differences, and structure constants via signed
// chain sums.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/divdiff.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"

namespace schub {

/// Element of the nilCoxeter algebra on generators e_1..e_n with coefficients
/// in the polynomial ring: a finite map from rank n+1 permutations (basis
/// words e_w) to polynomials.  Zero coefficients are never stored.
struct NilCoxElem {
  int n = 0;
  std::map<Perm, Poly> coeffs;

  static NilCoxElem zero(int n) {
    if (n < 1) throw std::invalid_argument("NilCoxElem: rank must be >= 1");
    return {n, {}};
  }
  static NilCoxElem one(int n) {
    NilCoxElem e = zero(n);
    e.coeffs.emplace(Perm::identity(n + 1), Poly::one());
    return e;
  }
  /// Basis element e_w.
  static NilCoxElem basis(const Perm& w, int n) {
    NilCoxElem e = zero(n);
    e.coeffs.emplace(embed(trim_fixed(w), n + 1), Poly::one());
    return e;
  }
  /// Generator e_i, 1 <= i <= n.
  static NilCoxElem generator(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("NilCoxElem: generator index out of range");
    return basis(Perm::simple(i, n + 1), n);
  }

  friend bool operator==(const NilCoxElem&, const NilCoxElem&) = default;
};

namespace detail {

inline void nc_prune(NilCoxElem& e) {
  for (auto it = e.coeffs.begin(); it != e.coeffs.end();) {
    if (it->second.is_zero())
      it = e.coeffs.erase(it);
    else
      ++it;
  }
}

}  // namespace detail

inline NilCoxElem operator+(const NilCoxElem& a, const NilCoxElem& b) {
  if (a.n != b.n) throw std::invalid_argument("NilCoxElem addition: rank mismatch");
  NilCoxElem out = a;
  for (const auto& [w, p] : b.coeffs) out.coeffs[w] += p;
  detail::nc_prune(out);
  return out;
}

inline NilCoxElem operator-(const NilCoxElem& a, const NilCoxElem& b) {
  if (a.n != b.n) throw std::invalid_argument("NilCoxElem subtraction: rank mismatch");
  NilCoxElem out = a;
  for (const auto& [w, p] : b.coeffs) out.coeffs[w] -= p;
  detail::nc_prune(out);
  return out;
}

inline NilCoxElem nc_scale(const Poly& p, const NilCoxElem& a) {
  NilCoxElem out = NilCoxElem::zero(a.n);
  if (p.is_zero()) return out;
  for (const auto& [w, q] : a.coeffs) out.coeffs.emplace(w, p * q);
  return out;
}

/// Bilinear product with e_u * e_v = e_{uv} when lengths add and 0 otherwise.
inline NilCoxElem nc_mul(const NilCoxElem& a, const NilCoxElem& b) {
  if (a.n != b.n) throw std::invalid_argument("nc_mul: rank mismatch");
  NilCoxElem out = NilCoxElem::zero(a.n);
  for (const auto& [u, p] : a.coeffs) {
    const std::size_t lu = length(u);
    for (const auto& [v, q] : b.coeffs) {
      const Perm uv = compose(u, v);
      if (length(uv) != lu + length(v)) continue;
      out.coeffs[uv] += p * q;
    }
  }
  detail::nc_prune(out);
  return out;
}

/// Ordered product (1 + x e_n)(1 + x e_{n-1}) ... (1 + x e_i), where x is the
/// polynomial variable with index xvar.
inline NilCoxElem a_factor(int i, int xvar, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("a_factor: index out of range");
  if (xvar < 1) throw std::invalid_argument("a_factor: variable index must be >= 1");
  const Poly x = Poly::variable(xvar);
  NilCoxElem acc = NilCoxElem::one(n);
  for (int j = n; j >= i; --j) {
    NilCoxElem factor = NilCoxElem::one(n);
    factor.coeffs.emplace(Perm::simple(j, n + 1), x);
    acc = nc_mul(acc, factor);
  }
  return acc;
}

/// The factored generating expression A_1(x_1) A_2(x_2) ... A_n(x_n); its
/// coefficient at e_w is the Schubert polynomial of w, over all w of rank n+1.
inline NilCoxElem schubert_expression(int n) {
  NilCoxElem acc = NilCoxElem::one(n);
  for (int i = 1; i <= n; ++i) acc = nc_mul(acc, a_factor(i, i, n));
  return acc;
}

/// One failed nonnegativity check from theorem1_scan.
struct PairPositivityViolation {
  Perm w;
  int i = 0;
  int j = 0;
  Poly value;
};

/// Apply every pair divided difference nabla_{ij}, 1 <= i < j <= n+1, to
/// every Schubert polynomial of rank n+1 and report the cases with a negative
/// coefficient (expected: none).
inline std::vector<PairPositivityViolation> theorem1_scan(int n) {
  if (n < 1) throw std::invalid_argument("theorem1_scan: rank must be >= 1");
  std::vector<PairPositivityViolation> out;
  for (const Perm& w : all_perms(n + 1)) {
    const Poly s = schubert_poly(w);
    for (int i = 1; i <= n + 1; ++i) {
      for (int j = i + 1; j <= n + 1; ++j) {
        Poly d = ddiff_pair(i, j, s);
        if (!d.has_nonneg_coeffs()) out.push_back({w, i, j, std::move(d)});
      }
    }
  }
  return out;
}

/// Value of one chain step: 1 on a stay, +/- e_{n-i} on a cover whose
/// transposition touches the layer index s, and 0 otherwise.
struct StepFactor {
  enum class Kind { Zero, One, PlusE, MinusE };
  Kind kind = Kind::Zero;
  int k = 0;

  friend bool operator==(const StepFactor&, const StepFactor&) = default;
};

/// Step rule for the chain sum: with w = v * t_(a,b) a single cover,
/// the factor is +e_{n-i} when a = s, -e_{n-i} when b = s, and 0 when the
/// transposition avoids s; a stay (w = v) contributes 1.
inline StepFactor e_step(int i, int s, const Perm& w, const Perm& v, int n) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("e_step: position index out of range");
  if (s < 1 || s > n - 1) throw std::invalid_argument("e_step: layer index out of range");
  if (w == v) return {StepFactor::Kind::One, 0};
  if (length(w) > length(v) + 1)
    throw std::invalid_argument("e_step: length gap must be at most one");
  if (length(w) <= length(v))
    throw std::invalid_argument("e_step: step must go strictly down");
  const CoverRel rel = cover_transposition(w, v);
  if (rel.kind != CoverRel::Kind::Cover) return {StepFactor::Kind::Zero, 0};
  if (rel.a == s) return {StepFactor::Kind::PlusE, n - i};
  if (rel.b == s) return {StepFactor::Kind::MinusE, n - i};
  return {StepFactor::Kind::Zero, 0};
}

/// Chain-sum structure constants: returns sum_v c^w_{uv} e_v as an element on
/// generators e_1..e_{n-1} (basis words of rank n).  Chains start at w, end
/// at u, drop by at most one cover per step, and walk C(n,2) steps grouped in
/// layers s = 1..n-1 with positions i = 1..n-s; each cover contributes the
/// signed generator from e_step and the signed words multiply left to right.
/// Intermediate coefficients may be negative; the final sum is nonnegative.
inline NilCoxElem path_sum_constants(const Perm& w, const Perm& u, int n) {
  if (n < 2) throw std::invalid_argument("path_sum_constants: rank must be >= 2");
  const Perm wr = embed(trim_fixed(w), n);
  const Perm ur = embed(trim_fixed(u), n);
  // State: (current chain permutation, accumulated basis word) -> coefficient.
  std::map<std::pair<Perm, Perm>, std::int64_t> states;
  states[{wr, Perm::identity(n)}] = 1;
  for (int s = 1; s <= n - 1; ++s) {
    for (int i = 1; i <= n - s; ++i) {
      std::map<std::pair<Perm, Perm>, std::int64_t> next;
      for (const auto& [key, c] : states) {
        const Perm& vcur = key.first;
        const Perm& pi = key.second;
        auto [stay, stay_new] = next.emplace(key, 0);
        stay->second = checked_add(stay->second, c);
        for (const auto& [vlow, ab] : bruhat_covers_down(vcur)) {
          int sgn;
          if (ab.first == s)
            sgn = 1;
          else if (ab.second == s)
            sgn = -1;
          else
            continue;
          const Perm pi2 = compose(pi, Perm::simple(n - i, n));
          if (length(pi2) != length(pi) + 1) continue;  // basis word vanishes
          auto [it, inserted] = next.emplace(std::make_pair(vlow, pi2), 0);
          it->second = checked_add(it->second, sgn * c);
        }
      }
      states.clear();
      for (const auto& [key, c] : next)
        if (c != 0) states.emplace(key, c);
    }
  }
  NilCoxElem out = NilCoxElem::zero(n - 1);
  for (const auto& [key, c] : states) {
    if (key.first == ur && c != 0) out.coeffs[key.second] += Poly::constant(c);
  }
  detail::nc_prune(out);
  return out;
}

inline std::string to_string(const NilCoxElem& e) {
  if (e.coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, p] : e.coeffs) {
    if (!first) s += " + ";
    first = false;
    s += "(" + to_string(p) + ")*e[" + to_string(w) + "]";
  }
  return s;
}

}  // namespace schub
