#pragma once
// Skew divided difference operators: operator sums built from subwords of a
// reduced word, skew Schubert polynomials, structure constants by skew
// evaluation, and coefficientwise positivity checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/divdiff.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"

namespace schub {

/// Operator attached to a Bruhat-comparable pair v <= w.  Each term comes
/// from one way of picking positions of a reduced word of w that spell a
/// reduced word of v: picked letters become variable swaps, unpicked letters
/// become divided differences, and a leading act_perm(v^{-1}) relabels the
/// variables last.  Every term carries exactly length(w) - length(v)
/// divided-difference steps, so on a homogeneous polynomial of degree d the
/// operator yields degree d - (length(w) - length(v)), or zero.
struct SkewOperator {
  Perm w;
  Perm v;
  OpSum terms;
};

namespace detail {

enum class SkewStepKind { Nabla, Pi };

inline OpSum skew_terms_from_word(const Word& a, const Perm& v, int n, SkewStepKind lower) {
  const Perm vr = embed(trim_fixed(v), n);
  const Perm vinv = inverse(vr);
  const std::size_t l = a.size();
  const std::size_t lv = length(vr);
  OpSum terms;
  std::vector<bool> chosen(l, false);

  // Depth-first over positions.  A picked position must extend the partial
  // product length-additively (every prefix of a reduced word is reduced),
  // and the complete pick must multiply out to exactly v.
  std::function<void(std::size_t, const Perm&, std::size_t)> rec =
      [&](std::size_t pos, const Perm& cur, std::size_t picked) {
        if (lv - picked > l - pos) return;  // v is out of reach
        if (pos == l) {
          if (cur == vr) {
            OpWord t;
            t.coeff = 1;
            t.steps.push_back(OpStep::act_perm(vinv));
            for (std::size_t i = 0; i < l; ++i) {
              if (chosen[i]) {
                t.steps.push_back(OpStep::swap(a[i]));
              } else {
                t.steps.push_back(lower == SkewStepKind::Nabla ? OpStep::nabla(a[i])
                                                               : OpStep::pi(a[i]));
              }
            }
            terms.push_back(std::move(t));
          }
          return;
        }
        rec(pos + 1, cur, picked);
        if (picked < lv) {
          const Perm next = compose(cur, Perm::simple(a[pos], n));
          if (length(next) == length(cur) + 1) {
            chosen[pos] = true;
            rec(pos + 1, next, picked + 1);
            chosen[pos] = false;
          }
        }
      };
  rec(0, Perm::identity(n), 0);
  return terms;
}

}  // namespace detail

/// Build the operator from an explicit word for w (any reduced word gives an
/// operator with the same action).  Letters must satisfy 1 <= letter < n.
/// When no subword spells v the sum is empty and the operator is zero.
inline SkewOperator skew_op_from_word(const Word& a, const Perm& v, int n) {
  for (int letter : a)
    if (letter < 1 || letter >= n)
      throw std::invalid_argument("skew_op_from_word: letter out of range for rank");
  SkewOperator op;
  op.w = from_word(a, n);
  op.v = embed(trim_fixed(v), n);
  op.terms = detail::skew_terms_from_word(a, op.v, n, detail::SkewStepKind::Nabla);
  return op;
}

/// Skew divided difference operator for v <= w (Bruhat order), built from the
/// canonical reduced word of w.  A same-length pair w != v yields the zero
/// operator (the subword sum is empty); any other pair with v not below w is
/// rejected.
inline SkewOperator skew_op(const Perm& w, const Perm& v) {
  const int n = std::max(w.n(), v.n());
  const Perm wr = embed(w, n);
  const Perm vr = embed(v, n);
  if (!bruhat_leq(vr, wr) && length(vr) != length(wr))
    throw std::invalid_argument("skew_op: v is not below w in Bruhat order");
  return skew_op_from_word(canonical_reduced_word(wr), vr, n);
}

inline Poly skew_apply(const SkewOperator& op, const Poly& f) {
  return apply_opsum(op.terms, f);
}

inline Poly skew_apply(const Perm& w, const Perm& v, const Poly& f) {
  return skew_apply(skew_op(w, v), f);
}

/// Structure constant c^w_{uv} read off as the constant value of the skew
/// operator for (w, v) applied to the Schubert polynomial of u.
inline std::int64_t constants_by_skew(const Perm& u, const Perm& v, const Perm& w, int n) {
  const Perm ur = embed(trim_fixed(u), n);
  const Perm vr = embed(trim_fixed(v), n);
  const Perm wr = embed(trim_fixed(w), n);
  if (!bruhat_leq(vr, wr))
    throw std::invalid_argument("constants_by_skew: v is not below w in Bruhat order");
  if (length(ur) + length(vr) != length(wr))
    throw std::invalid_argument("constants_by_skew: length(u) + length(v) must equal length(w)");
  return skew_apply(wr, vr, schubert_poly(ur)).constant_term();
}

/// Skew Schubert polynomial: the skew operator for the pair
/// (v^{-1} w_0, w^{-1} w_0) applied to the staircase monomial, with w_0 the
/// longest element of the common rank.  Homogeneous of degree
/// C(n,2) - length(w) + length(v).
inline Poly skew_schubert(const Perm& w, const Perm& v) {
  const int n = std::max(w.n(), v.n());
  const Perm wr = embed(w, n);
  const Perm vr = embed(v, n);
  if (!bruhat_leq(vr, wr))
    throw std::invalid_argument("skew_schubert: v is not below w in Bruhat order");
  const Perm w0 = Perm::longest_element(n);
  return skew_apply(compose(inverse(vr), w0), compose(inverse(wr), w0), x_delta(n));
}

struct PositivityVerdict {
  bool positive = false;
  Poly value;
};

/// Apply the skew operator for (w, v) to the Schubert polynomial of u and
/// report whether every coefficient of the result is nonnegative; the value
/// itself is returned as the witness either way.
inline PositivityVerdict conjecture1_check(const Perm& w, const Perm& v, const Perm& u) {
  const int n = std::max(std::max(w.n(), v.n()), u.n());
  const Poly value = skew_apply(embed(w, n), embed(v, n), schubert_poly(u));
  return {value.has_nonneg_coeffs(), value};
}

/// Isobaric variant of the skew operator: unpicked letters become isobaric
/// steps instead of divided differences.
inline SkewOperator skew_op_isobaric(const Perm& w, const Perm& v) {
  const int n = std::max(w.n(), v.n());
  const Perm wr = embed(w, n);
  const Perm vr = embed(v, n);
  if (!bruhat_leq(vr, wr) && length(vr) != length(wr))
    throw std::invalid_argument("skew_op_isobaric: v is not below w in Bruhat order");
  SkewOperator op;
  op.w = wr;
  op.v = vr;
  op.terms =
      detail::skew_terms_from_word(canonical_reduced_word(wr), vr, n, detail::SkewStepKind::Pi);
  return op;
}

/// Skew key polynomial: the isobaric skew operator of the pair
/// (sorting permutation of alpha, v) applied to the dominant monomial
/// x^{lambda(alpha)}.
inline Poly skew_key_poly(const std::vector<int>& alpha, const Perm& v) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("skew_key_poly: parts must be nonnegative");
  const Perm w = w_of_composition(alpha);
  const Perm vt = trim_fixed(v);
  const int n = std::max(w.n(), vt.n());
  const Perm wr = embed(w, n);
  const Perm vr = embed(vt, n);
  if (!bruhat_leq(vr, wr))
    throw std::invalid_argument("skew_key_poly: v is not below the sorting permutation of alpha");
  std::vector<int> lambda(alpha);
  std::sort(lambda.begin(), lambda.end(), std::greater<int>());
  SkewOperator op;
  op.w = wr;
  op.v = vr;
  op.terms =
      detail::skew_terms_from_word(canonical_reduced_word(wr), vr, n, detail::SkewStepKind::Pi);
  return skew_apply(op, Poly::monomial(Mono(lambda.begin(), lambda.end()), 1));
}

inline std::string to_string(const SkewOperator& op) { return to_string(op.terms); }

}  // namespace schub
