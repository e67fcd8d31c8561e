#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace schub {

/**
 * Permutation of {1..n} in one-line notation.
 *
 * The group product is function composition: (u*v)(i) = u(v(i)), so in a
 * product the right factor acts first.  A word (a_1,...,a_p) of simple
 * reflections denotes s_{a_1} * s_{a_2} * ... * s_{a_p}.
 */
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    validate();
  }

  static Perm identity(int n) {
    check_rank(n);
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
  }

  /// Simple reflection s_i swapping values/positions i, i+1; rank n.
  static Perm simple(int i, int n) {
    if (i < 1 || i + 1 > n) throw std::invalid_argument("simple: letter out of range");
    Perm w = identity(n);
    std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
    return w;
  }

  /// Transposition t_{a,b} (a < b), rank n.
  static Perm transposition(int a, int b, int n) {
    if (!(1 <= a && a < b && b <= n)) throw std::invalid_argument("transposition: bad pair");
    Perm w = identity(n);
    std::swap(w.img_[static_cast<size_t>(a - 1)], w.img_[static_cast<size_t>(b - 1)]);
    return w;
  }

  static Perm longest_element(int n) {
    check_rank(n);
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Perm(std::move(v));
  }

  int n() const { return static_cast<int>(img_.size()); }

  /// Image of i (1-based).
  int operator()(int i) const {
    if (i < 1 || i > n()) throw std::invalid_argument("Perm: index out of range");
    return img_[static_cast<size_t>(i - 1)];
  }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    if (auto c = a.n() <=> b.n(); c != 0) return c;
    return a.img_ <=> b.img_;
  }

private:
  std::vector<int> img_;

  static void check_rank(int n) {
    if (n < 1) throw std::invalid_argument("Perm: rank must be positive");
  }

  void validate() const {
    check_rank(n());
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
      if (x < 1 || x > n() || seen[static_cast<size_t>(x - 1)])
        throw std::invalid_argument("Perm: not a permutation of 1..n");
      seen[static_cast<size_t>(x - 1)] = 1;
    }
  }
};

using Word = std::vector<int>;

/// Function composition: compose(u,v)(i) = u(v(i)); v acts first.
inline Perm compose(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> out(static_cast<size_t>(u.n()));
  for (int i = 1; i <= u.n(); ++i) out[static_cast<size_t>(i - 1)] = u(v(i));
  return Perm(std::move(out));
}

inline Perm inverse(const Perm& w) {
  std::vector<int> out(static_cast<size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) out[static_cast<size_t>(w(i) - 1)] = i;
  return Perm(std::move(out));
}

/// Number of inversions.
inline int length(const Perm& w) {
  int l = 0;
  for (int i = 1; i <= w.n(); ++i)
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(i) > w(j)) ++l;
  return l;
}

inline int sign(const Perm& w) { return length(w) % 2 == 0 ? 1 : -1; }

/// Fold a word left-to-right: s_{a_1} * s_{a_2} * ... * s_{a_p} in rank n.
inline Perm from_word(const Word& a, int n) {
  Perm w = Perm::identity(n);
  for (int letter : a) w = compose(w, Perm::simple(letter, n));
  return w;
}

inline bool is_reduced_word(const Word& a, int n) {
  return length(from_word(a, n)) == static_cast<int>(a.size());
}

/// Append fixed points so the rank becomes m >= w.n().
inline Perm embed(const Perm& w, int m) {
  if (m < w.n()) throw std::invalid_argument("embed: target rank too small");
  std::vector<int> out = w.images();
  for (int i = w.n() + 1; i <= m; ++i) out.push_back(i);
  return Perm(std::move(out));
}

/// Drop trailing fixed points (keeping rank >= 1).
inline Perm trim_fixed(const Perm& w) {
  std::vector<int> out = w.images();
  while (out.size() > 1 && out.back() == static_cast<int>(out.size())) out.pop_back();
  return Perm(std::move(out));
}

/// Lehmer code: c_i = #{j > i : w(j) < w(i)}, length n.
inline std::vector<int> code(const Perm& w) {
  std::vector<int> c(static_cast<size_t>(w.n()));
  for (int i = 1; i <= w.n(); ++i) {
    int k = 0;
    for (int j = i + 1; j <= w.n(); ++j)
      if (w(j) < w(i)) ++k;
    c[static_cast<size_t>(i - 1)] = k;
  }
  return c;
}

/// Inverse of code(); rank is the smallest that realizes the code.
inline Perm from_code(const std::vector<int>& c) {
  int n = static_cast<int>(c.size());
  if (n == 0) n = 1;
  for (int i = 0; i < static_cast<int>(c.size()); ++i) {
    if (c[static_cast<size_t>(i)] < 0) throw std::invalid_argument("from_code: negative entry");
    n = std::max(n, i + 1 + c[static_cast<size_t>(i)]);
  }
  std::vector<int> unused(static_cast<size_t>(n));
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int ci = i < static_cast<int>(c.size()) ? c[static_cast<size_t>(i)] : 0;
    if (ci >= static_cast<int>(unused.size()))
      throw std::invalid_argument("from_code: entry too large for rank");
    out.push_back(unused[static_cast<size_t>(ci)]);
    unused.erase(unused.begin() + ci);
  }
  return Perm(std::move(out));
}

/// Positions i with w(i) > w(i+1).
inline std::vector<int> descents(const Perm& w) {
  std::vector<int> d;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) d.push_back(i);
  return d;
}

/// All permutations of rank n in lexicographic order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// Lehmer index of w among the n! permutations of its rank (lex order).
inline long perm_index(const Perm& w) {
  std::vector<int> c = code(w);
  std::vector<long> factorial(static_cast<size_t>(w.n()) + 1, 1);
  for (int k = 1; k <= w.n(); ++k)
    factorial[static_cast<size_t>(k)] = factorial[static_cast<size_t>(k - 1)] * k;
  long idx = 0;
  for (int i = 0; i < w.n(); ++i)
    idx += c[static_cast<size_t>(i)] * factorial[static_cast<size_t>(w.n() - 1 - i)];
  return idx;
}

// --- reduced words ------------------------------------------------------

namespace detail {
/// Letters i that can start a reduced word of w: length(s_i * w) < length(w).
inline std::vector<int> left_descent_letters(const Perm& w) {
  Perm wi = inverse(w);
  std::vector<int> out;
  for (int i = 1; i < w.n(); ++i)
    if (wi(i) > wi(i + 1)) out.push_back(i);
  return out;
}

inline void reduced_words_rec(const Perm& w, Word& prefix, std::vector<Word>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i : left_descent_letters(w)) {
    prefix.push_back(i);
    reduced_words_rec(compose(Perm::simple(i, w.n()), w), prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

/// All reduced words of w, in lexicographic order.
inline std::vector<Word> reduced_words(const Perm& w) {
  std::vector<Word> out;
  Word prefix;
  detail::reduced_words_rec(w, prefix, out);
  return out;
}

/// Lexicographically smallest reduced word (greedy on first letters).
inline Word canonical_reduced_word(const Perm& w) {
  Word out;
  Perm cur = w;
  while (!cur.is_identity()) {
    std::vector<int> ds = detail::left_descent_letters(cur);
    out.push_back(ds.front());
    cur = compose(Perm::simple(ds.front(), cur.n()), cur);
  }
  return out;
}

// --- Bruhat order -------------------------------------------------------

namespace detail {
/// Covers below w: pairs (v, (a,b)) with w = v * t_ab, length(v) = length(w) - 1.
inline std::vector<std::pair<Perm, std::pair<int, int>>> covers_down_impl(const Perm& w) {
  std::vector<std::pair<Perm, std::pair<int, int>>> out;
  for (int a = 1; a <= w.n(); ++a) {
    for (int b = a + 1; b <= w.n(); ++b) {
      if (w(a) <= w(b)) continue;
      bool blocked = false;
      for (int k = a + 1; k < b; ++k)
        if (w(a) > w(k) && w(k) > w(b)) { blocked = true; break; }
      if (blocked) continue;
      out.push_back({compose(w, Perm::transposition(a, b, w.n())), {a, b}});
    }
  }
  return out;
}

struct BruhatTable {
  int n = 0;
  // leq[i] holds the set of Lehmer indices v with v <= w_i, bit-packed.
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<long>> covers_down;
};

inline const BruhatTable& bruhat_table(int n) {
  static std::mutex mu;
  static std::vector<BruhatTable> tables;  // indexed by rank
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(tables.size()) <= n) tables.resize(static_cast<size_t>(n) + 1);
  BruhatTable& t = tables[static_cast<size_t>(n)];
  if (t.n == n) return t;
  std::vector<Perm> perms = all_perms(n);
  size_t total = perms.size();
  std::vector<long> by_index(total);
  std::vector<std::vector<long>> by_length(static_cast<size_t>(n * (n - 1) / 2) + 1);
  t.leq.assign(total, std::vector<bool>(total, false));
  t.covers_down.assign(total, {});
  for (const Perm& w : perms) {
    long i = perm_index(w);
    by_length[static_cast<size_t>(length(w))].push_back(i);
    for (auto& [v, ab] : covers_down_impl(w)) t.covers_down[static_cast<size_t>(i)].push_back(perm_index(v));
  }
  for (const auto& layer : by_length) {
    for (long i : layer) {
      auto& row = t.leq[static_cast<size_t>(i)];
      row[static_cast<size_t>(i)] = true;
      for (long j : t.covers_down[static_cast<size_t>(i)]) {
        const auto& sub = t.leq[static_cast<size_t>(j)];
        for (size_t k = 0; k < total; ++k)
          if (sub[k]) row[k] = true;
      }
    }
  }
  t.n = n;
  return t;
}

constexpr int kBruhatTableMaxRank = 7;
}  // namespace detail

/// Covers below w, with the transposition: w = v * t_ab and lengths differ by 1.
inline std::vector<std::pair<Perm, std::pair<int, int>>> bruhat_covers_down(const Perm& w) {
  return detail::covers_down_impl(w);
}

/**
 * Subword criterion: true iff some subsequence of canonical_reduced_word(w)
 * is a reduced word of v.
 */
inline bool bruhat_leq_subword(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (length(v) > length(w)) return false;
  Word a = canonical_reduced_word(w);
  // Targets that still need a reduced word from the remaining suffix.
  std::set<Perm> targets{v};
  for (int letter : a) {
    std::set<Perm> next = targets;
    Perm s = Perm::simple(letter, v.n());
    for (const Perm& u : targets) {
      Perm su = compose(s, u);
      if (length(su) < length(u)) next.insert(su);
    }
    targets.swap(next);
    if (targets.count(Perm::identity(v.n()))) return true;
  }
  return targets.count(Perm::identity(v.n())) > 0;
}

/// Bruhat order; memoized per rank for ranks the table supports.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  if (v.n() > detail::kBruhatTableMaxRank) return bruhat_leq_subword(v, w);
  const auto& t = detail::bruhat_table(v.n());
  return t.leq[static_cast<size_t>(perm_index(w))][static_cast<size_t>(perm_index(v))];
}

/// Relation of w to v: equal, a Bruhat cover w = v * t_ab, or neither.
struct CoverRel {
  enum class Kind { None, Equal, Cover } kind = Kind::None;
  int a = 0, b = 0;  // set when kind == Cover
};

inline CoverRel cover_transposition(const Perm& w, const Perm& v) {
  if (w.n() != v.n()) throw std::invalid_argument("cover_transposition: rank mismatch");
  if (w == v) return {CoverRel::Kind::Equal, 0, 0};
  if (length(w) != length(v) + 1) return {};
  for (int a = 1; a <= w.n(); ++a)
    for (int b = a + 1; b <= w.n(); ++b)
      if (compose(v, Perm::transposition(a, b, w.n())) == w)
        return {CoverRel::Kind::Cover, a, b};
  return {};
}

// --- text forms ---------------------------------------------------------

/// One-line form "4,3,1,2".
inline std::string to_string(const Perm& w) {
  std::ostringstream os;
  for (int i = 1; i <= w.n(); ++i) {
    if (i > 1) os << ',';
    os << w(i);
  }
  return os.str();
}

inline std::string to_string(const Word& a) {
  std::ostringstream os;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

namespace detail {
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      if (cur.empty()) throw std::invalid_argument("parse: empty list entry");
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (cur.empty()) throw std::invalid_argument("parse: empty list entry");
  out.push_back(std::stoi(cur));
  return out;
}
}  // namespace detail

/**
 * Parse "4,3,1,2" (one-line) or "s:2,1,3,2,1" (word of simple reflections).
 * The result is embedded into rank n; a one-line form longer than n is an error.
 */
inline Perm parse_perm(const std::string& text, int n) {
  if (text.rfind("s:", 0) == 0) {
    Word a = detail::parse_int_list(text.substr(2));
    return from_word(a, n);
  }
  std::vector<int> images = detail::parse_int_list(text);
  if (static_cast<int>(images.size()) > n)
    throw std::invalid_argument("parse_perm: one-line form longer than rank");
  return embed(Perm(std::move(images)), n);
}

}  // namespace schub
