#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

/**
 * Divided difference for a pair a < b: (f - t_ab f) / (x_a - x_b).
 *
 * Computed term by term from the closed form, so no polynomial division is
 * involved: with p, q the exponents of x_a, x_b and M the rest of the
 * monomial, the image of x_a^p x_b^q M is
 *   sum_{k=q}^{p-1} x_a^k x_b^{p+q-1-k} M    when p > q,
 *  -sum_{k=p}^{q-1} x_a^k x_b^{p+q-1-k} M    when p < q,
 *   0                                        when p = q.
 */
inline Poly ddiff_pair(int a, int b, const Poly& f) {
  if (!(1 <= a && a < b)) throw std::invalid_argument("ddiff_pair: need 1 <= a < b");
  Poly out;
  size_t ia = static_cast<size_t>(a - 1), ib = static_cast<size_t>(b - 1);
  for (const auto& [m, c] : f.terms()) {
    int p = ia < m.size() ? m[ia] : 0;
    int q = ib < m.size() ? m[ib] : 0;
    if (p == q) continue;
    Mono base = m;
    base.resize(std::max(base.size(), ib + 1), 0);
    std::int64_t sgn = p > q ? 1 : -1;
    int lo = std::min(p, q), hi = std::max(p, q);
    for (int k = lo; k < hi; ++k) {
      base[ia] = k;
      base[ib] = p + q - 1 - k;
      out.add_term(base, checked_mul(sgn, c));
    }
  }
  return out;
}

/// Simple divided difference on the adjacent pair (i, i+1).
inline Poly ddiff(int i, const Poly& f) { return ddiff_pair(i, i + 1, f); }

/// Product of simple divided differences; the rightmost letter acts first.
inline Poly ddiff_word(const Word& a, const Poly& f) {
  Poly g = f;
  for (auto it = a.rbegin(); it != a.rend(); ++it) g = ddiff(*it, g);
  return g;
}

/// Divided difference of a permutation (independent of the reduced word used).
inline Poly ddiff_w(const Perm& w, const Poly& f) {
  return ddiff_word(canonical_reduced_word(w), f);
}

/// Isobaric variant: pi_i(f) = ddiff(i, x_i * f).
inline Poly isobaric_pi(int i, const Poly& f) {
  return ddiff(i, Poly::variable(i) * f);
}

inline Poly isobaric_pi_word(const Word& a, const Poly& f) {
  Poly g = f;
  for (auto it = a.rbegin(); it != a.rend(); ++it) g = isobaric_pi(*it, g);
  return g;
}

inline Poly isobaric_pi_w(const Perm& w, const Poly& f) {
  return isobaric_pi_word(canonical_reduced_word(w), f);
}

// --- operator words -----------------------------------------------------

/**
 * One factor of an operator word: a variable swap, a divided difference (on
 * an adjacent or general pair), an isobaric step, or a permutation action.
 */
struct OpStep {
  enum class Kind { Swap, Nabla, NablaPair, Pi, ActPerm };
  Kind kind = Kind::Swap;
  int a = 0, b = 0;  // Swap/Nabla/Pi use a; NablaPair uses (a, b)
  Perm perm;         // ActPerm only

  static OpStep swap(int i) { return {Kind::Swap, i, 0, {}}; }
  static OpStep nabla(int i) { return {Kind::Nabla, i, 0, {}}; }
  static OpStep nabla_pair(int a, int b) { return {Kind::NablaPair, a, b, {}}; }
  static OpStep pi(int i) { return {Kind::Pi, i, 0, {}}; }
  static OpStep act_perm(Perm w) { return {Kind::ActPerm, 0, 0, std::move(w)}; }

  friend bool operator==(const OpStep&, const OpStep&) = default;
};

/// Product of steps with an integer coefficient; the rightmost step acts first.
struct OpWord {
  std::int64_t coeff = 1;
  std::vector<OpStep> steps;

  friend bool operator==(const OpWord&, const OpWord&) = default;
};

using OpSum = std::vector<OpWord>;

inline Poly apply_step(const OpStep& s, const Poly& f) {
  switch (s.kind) {
    case OpStep::Kind::Swap: return act_transposition(s.a, s.a + 1, f);
    case OpStep::Kind::Nabla: return ddiff(s.a, f);
    case OpStep::Kind::NablaPair: return ddiff_pair(s.a, s.b, f);
    case OpStep::Kind::Pi: return isobaric_pi(s.a, f);
    case OpStep::Kind::ActPerm: return act(s.perm, f);
  }
  throw std::logic_error("apply_step: bad kind");
}

inline Poly apply_opword(const OpWord& t, const Poly& f) {
  Poly g = f;
  for (auto it = t.steps.rbegin(); it != t.steps.rend(); ++it) g = apply_step(*it, g);
  return t.coeff * g;
}

inline Poly apply_opsum(const OpSum& ts, const Poly& f) {
  Poly out;
  for (const OpWord& t : ts) out += apply_opword(t, f);
  return out;
}

inline std::string to_string(const OpStep& s) {
  std::ostringstream os;
  switch (s.kind) {
    case OpStep::Kind::Swap: os << "s[" << s.a << ']'; break;
    case OpStep::Kind::Nabla: os << "d[" << s.a << ']'; break;
    case OpStep::Kind::NablaPair: os << "d[" << s.a << ',' << s.b << ']'; break;
    case OpStep::Kind::Pi: os << "pi[" << s.a << ']'; break;
    case OpStep::Kind::ActPerm: os << "act[" << to_string(s.perm) << ']'; break;
  }
  return os.str();
}

inline std::string to_string(const OpWord& t) {
  std::ostringstream os;
  if (t.coeff == -1) os << '-';
  else if (t.coeff != 1) os << t.coeff << '*';
  if (t.steps.empty()) {
    if (t.coeff == 1 || t.coeff == -1) os << '1';
  } else {
    for (size_t i = 0; i < t.steps.size(); ++i) {
      if (i) os << ' ';
      os << to_string(t.steps[i]);
    }
  }
  return os.str();
}

inline std::string to_string(const OpSum& ts) {
  if (ts.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < ts.size(); ++i) {
    if (i) os << "  +  ";
    os << to_string(ts[i]);
  }
  return os.str();
}

}  // namespace schub
