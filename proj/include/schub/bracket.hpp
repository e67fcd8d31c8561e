#pragma once
// Bracket algebra: pair generators subject to square-zero, three-index, and
// disjoint-commutation relations; the subword element attached to a Bruhat
// pair; its representation by two-index divided differences; and a bounded
// breadth-first rewriting search for manifestly nonnegative forms.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/divdiff.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

/// Word in the generators: a sequence of index pairs, each strictly
/// increasing.
using BracketWord = std::vector<std::pair<int, int>>;

/// Integer combination of bracket words; zero coefficients are never stored.
struct BracketElem {
  std::map<BracketWord, std::int64_t> terms;

  friend bool operator==(const BracketElem&, const BracketElem&) = default;
};

/// One summand inside the crossed product with the symmetric group: a
/// permutation standing to the left of a run of generator pairs (a pair may
/// appear in either index order), with an overall sign.
struct CrossedTerm {
  Perm perm;
  BracketWord word;
  int sign = 1;
};

/// Result of pushing the permutation of a crossed term through its word: the
/// rewritten word with strictly increasing pairs, the accumulated sign, and
/// the residual permutation now standing on the right.
struct NormalizedCrossed {
  int sign = 1;
  BracketWord word;
  Perm residual;
};

inline std::string to_string(const BracketWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (const auto& [i, j] : w) {
    if (i <= 9 && j <= 9)
      os << '[' << i << j << ']';
    else
      os << '[' << i << ',' << j << ']';
  }
  return os.str();
}

inline std::string to_string(const BracketElem& e) {
  if (e.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (w.empty())
      os << mag;
    else if (mag != 1)
      os << mag << '*' << to_string(w);
    else
      os << to_string(w);
  }
  return os.str();
}

/// Push the permutation rightward through every generator: pi * [i j] equals
/// [pi(i) pi(j)] * pi, and a pair whose images land out of order flips the
/// sign.  The permutation itself survives unchanged as the residual on the
/// right; callers that require a genuine algebra element must check that the
/// residual is the identity.
inline NormalizedCrossed normalize_crossed(const CrossedTerm& t) {
  NormalizedCrossed out;
  out.sign = t.sign;
  out.word.reserve(t.word.size());
  for (const auto& [i, j] : t.word) {
    if (i == j || i < 1 || j < 1 || i > t.perm.n() || j > t.perm.n())
      throw std::invalid_argument("normalize_crossed: pair indices out of range");
    int a = t.perm(i);
    int b = t.perm(j);
    if (a > b) {
      std::swap(a, b);
      out.sign = -out.sign;
    }
    out.word.emplace_back(a, b);
  }
  out.residual = t.perm;
  return out;
}

namespace detail {

inline void bracket_add(BracketElem& e, const BracketWord& w, std::int64_t c) {
  const auto it = e.terms.emplace(w, 0).first;
  it->second = checked_add(it->second, c);
  if (it->second == 0) e.terms.erase(it);
}

}  // namespace detail

/// Subword element built from an explicit reduced word for w.  For each way
/// of picking positions that spell a reduced word of v, walk the word once:
/// picked letters fold into a running permutation, every other letter a
/// contributes the raw pair (a, a+1) conjugated by the picks made so far, and
/// the whole run is finally conjugated by v^{-1} (the crossed-product
/// normalization).  The picks multiply out to exactly v, so the residual
/// permutation of every walk cancels to the identity.
inline BracketElem bracket_skew_from_word(const Word& a, const Perm& v, int n) {
  for (int letter : a)
    if (letter < 1 || letter >= n)
      throw std::invalid_argument("bracket_skew_from_word: letter out of range for rank");
  const Perm vr = embed(trim_fixed(v), n);
  const Perm vinv = inverse(vr);
  const std::size_t l = a.size();
  const std::size_t lv = length(vr);
  BracketElem out;
  std::vector<bool> chosen(l, false);

  const auto emit = [&]() {
    BracketWord raw;
    raw.reserve(l - lv);
    Perm cur = Perm::identity(n);
    for (std::size_t i = 0; i < l; ++i) {
      if (chosen[i]) {
        cur = compose(cur, Perm::simple(a[i], n));
      } else {
        raw.emplace_back(cur(a[i]), cur(a[i] + 1));
      }
    }
    const NormalizedCrossed nc = normalize_crossed({vinv, std::move(raw), 1});
    if (compose(nc.residual, cur) != Perm::identity(n))
      throw std::logic_error("bracket_skew_from_word: residual permutation is not the identity");
    detail::bracket_add(out, nc.word, nc.sign);
  };

  // Depth-first over positions, as for the skew operator subword sum: a
  // picked position must extend the partial product length-additively, and
  // the complete pick must multiply out to exactly v.
  std::function<void(std::size_t, const Perm&, std::size_t)> rec =
      [&](std::size_t pos, const Perm& cur, std::size_t picked) {
        if (lv - picked > l - pos) return;
        if (pos == l) {
          if (cur == vr) emit();
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
  return out;
}

/// Subword element of a Bruhat pair v <= w, built from the canonical reduced
/// word of w.  Its image under the divided-difference representation is the
/// skew operator of the pair.
inline BracketElem bracket_skew(const Perm& w, const Perm& v) {
  const int n = std::max(w.n(), v.n());
  const Perm wr = embed(w, n);
  const Perm vr = embed(v, n);
  if (!bruhat_leq(vr, wr))
    throw std::invalid_argument("bracket_skew: v is not below w in Bruhat order");
  return bracket_skew_from_word(canonical_reduced_word(wr), vr, n);
}

/// Linear representation on polynomials: each pair becomes the two-index
/// divided difference on those variables, applied rightmost-first within a
/// word.
inline OpSum represent(const BracketElem& e) {
  OpSum out;
  out.reserve(e.terms.size());
  for (const auto& [word, c] : e.terms) {
    OpWord t;
    t.coeff = c;
    t.steps.reserve(word.size());
    for (const auto& [i, j] : word) t.steps.push_back(OpStep::nabla_pair(i, j));
    out.push_back(std::move(t));
  }
  return out;
}

inline Poly represent_apply(const BracketElem& e, const Poly& f) {
  return apply_opsum(represent(e), f);
}

namespace detail {

/// Largest variable index mentioned by any generator pair (at least 1).
inline int bracket_max_index(const BracketElem& e) {
  int n = 1;
  for (const auto& [word, c] : e.terms)
    for (const auto& [i, j] : word) n = std::max(n, j);
  return n;
}

/// Whether two elements act identically on every monomial dividing the
/// staircase x1^n x2^(n-1) ... xn, where n covers every index they mention.
inline bool bracket_represent_agree(const BracketElem& a, const BracketElem& b) {
  const int n = std::max(bracket_max_index(a), bracket_max_index(b));
  const OpSum oa = represent(a);
  const OpSum ob = represent(b);
  Mono m(static_cast<std::size_t>(n) + 1, 0);
  std::function<bool(int)> walk = [&](int i) -> bool {
    if (i > n) {
      const Poly f = Poly::monomial(m, 1);
      return apply_opsum(oa, f) == apply_opsum(ob, f);
    }
    for (int e = 0; e <= n - i; ++e) {
      m[static_cast<std::size_t>(i)] = e;
      if (!walk(i + 1)) return false;
    }
    m[static_cast<std::size_t>(i)] = 0;
    return true;
  };
  return walk(0);
}

/// All one-step rewrites of e, in deterministic order (terms in word order,
/// adjacent positions left to right).  An equal adjacent pair annihilates the
/// whole word; a disjoint adjacent pair commutes; a pair sharing exactly one
/// index expands by the unique three-index relation that rewrites it.
inline std::vector<BracketElem> bracket_successors(const BracketElem& e) {
  std::vector<BracketElem> out;
  for (const auto& [word, c] : e.terms) {
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      const auto [a1, a2] = word[p];
      const auto [b1, b2] = word[p + 1];
      BracketElem next = e;
      bracket_add(next, word, -c);
      if (a1 == b1 && a2 == b2) {
        out.push_back(std::move(next));
        continue;
      }
      if (a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2) {
        BracketWord sw = word;
        std::swap(sw[p], sw[p + 1]);
        bracket_add(next, sw, c);
        out.push_back(std::move(next));
        continue;
      }
      // Shared single index: word[p] word[p+1] -> first + sgn * second.
      std::pair<int, int> f1, f2, s1, s2;
      std::int64_t sgn = 1;
      if (a2 == b1) {  // [ij][jk] = [jk][ik] + [ik][ij]
        f1 = {a2, b2}, f2 = {a1, b2};
        s1 = {a1, b2}, s2 = {a1, a2};
      } else if (a1 == b2) {  // [jk][ij] = [ik][jk] + [ij][ik]
        f1 = {b1, a2}, f2 = {a1, a2};
        s1 = {b1, a1}, s2 = {b1, a2};
      } else if (a2 == b2) {
        if (a1 > b1) {  // [jk][ik] = [ij][jk] - [ik][ij]
          f1 = {b1, a1}, f2 = {a1, a2};
          s1 = {b1, b2}, s2 = {b1, a1};
          sgn = -1;
        } else {  // [ik][jk] = [jk][ij] - [ij][ik]
          f1 = {b1, b2}, f2 = {a1, b1};
          s1 = {a1, b1}, s2 = {a1, a2};
          sgn = -1;
        }
      } else {         // a1 == b1
        if (a2 > b2) {  // [ik][ij] = [ij][jk] - [jk][ik]
          f1 = {a1, b2}, f2 = {b2, a2};
          s1 = {b2, a2}, s2 = {a1, a2};
          sgn = -1;
        } else {  // [ij][ik] = [jk][ij] - [ik][jk]
          f1 = {a2, b2}, f2 = {a1, a2};
          s1 = {a1, b2}, s2 = {a2, b2};
          sgn = -1;
        }
      }
      BracketWord w1 = word;
      BracketWord w2 = word;
      w1[p] = f1, w1[p + 1] = f2;
      w2[p] = s1, w2[p + 1] = s2;
      bracket_add(next, w1, c);
      bracket_add(next, w2, checked_mul(sgn, c));
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace detail

/// Breadth-first search for a rewrite of e in which every coefficient is
/// nonnegative.  States are deduped by their text rendering and max_steps
/// bounds the number of states expanded, so the search is deterministic.  A
/// candidate is certified by agreement with e under the polynomial
/// representation before being returned; std::nullopt means the budget or
/// the reachable set was exhausted first.
inline std::optional<BracketElem> rewrite_search(const BracketElem& e,
                                                 std::int64_t max_steps = 10000) {
  const auto nonneg = [](const BracketElem& x) {
    for (const auto& [w, c] : x.terms)
      if (c < 0) return false;
    return true;
  };
  const auto certify = [&e](BracketElem found) {
    if (!detail::bracket_represent_agree(e, found))
      throw std::logic_error("rewrite_search: candidate fails the representation check");
    return found;
  };
  if (nonneg(e)) return certify(e);
  std::deque<BracketElem> queue;
  queue.push_back(e);
  std::set<std::string> seen;
  seen.insert(to_string(e));
  std::int64_t expanded = 0;
  while (!queue.empty() && expanded < max_steps) {
    const BracketElem cur = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    for (BracketElem& nx : detail::bracket_successors(cur)) {
      if (!seen.insert(to_string(nx)).second) continue;
      if (nonneg(nx)) return certify(std::move(nx));
      queue.push_back(std::move(nx));
    }
  }
  return std::nullopt;
}

}  // namespace schub
