#pragma once
// Schubert polynomials and the calculus around them: expansion in the
// Schubert basis, canonical reduction modulo the ideal generated by
// positive-degree symmetric polynomials, structure constants via products,
// key (Demazure) polynomials, and expansion over blocks of variables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schub/divdiff.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

/// Staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}.
inline Poly x_delta(int n) {
  if (n < 1) throw std::invalid_argument("x_delta: rank must be >= 1");
  Mono m(static_cast<size_t>(n > 0 ? n - 1 : 0), 0);
  for (int i = 0; i < n - 1; ++i) m[static_cast<size_t>(i)] = n - 1 - i;
  return Poly::monomial(std::move(m), 1);
}

namespace detail {

// Memoized Schubert polynomials, keyed by trailing-fixed-point-trimmed
// permutations.  Recursion: at the first ascent i of w (w(i) < w(i+1)),
// S_w = nabla_i S_{w s_i}; with no ascent w is the longest element and
// S_w is the staircase monomial.
class SchubertCache {
 public:
  static Poly get(const Perm& w_trimmed) {
    static SchubertCache cache;
    return cache.lookup(w_trimmed);
  }

 private:
  Poly lookup(const Perm& w) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(w);
      if (it != memo_.end()) return it->second;
    }
    Poly result = compute(w);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(w, std::move(result)).first->second;
  }

  Poly compute(const Perm& w) {
    const int n = w.n();
    int asc = 0;
    for (int i = 1; i < n; ++i) {
      if (w(i) < w(i + 1)) {
        asc = i;
        break;
      }
    }
    if (asc == 0) return x_delta(n);
    return ddiff(asc, lookup(compose(w, Perm::simple(asc, n))));
  }

  std::mutex mu_;
  std::map<Perm, Poly> memo_;
};

}  // namespace detail

/// Schubert polynomial of w: homogeneous of degree length(w), all
/// coefficients positive, stable under embedding w into a larger rank.
inline Poly schubert_poly(const Perm& w) {
  return detail::SchubertCache::get(trim_fixed(w));
}

/// A finite integer combination of Schubert polynomials indexed by
/// permutations of rank n; zero coefficients are never stored.
struct SchubExpansion {
  int n = 0;
  std::map<Perm, std::int64_t> coeffs;

  friend bool operator==(const SchubExpansion&, const SchubExpansion&) = default;
};

/// Expand f in the Schubert basis over S_n, working modulo the ideal I_n
/// generated by symmetric polynomials with zero constant term:
/// coeff(v) is the constant term of nabla_v f.  The congruence
/// f = sum_v coeff(v) S_v (mod I_n) always holds; it is an exact polynomial
/// identity when every exponent vector of f fits under the staircase.
inline SchubExpansion expand_mod_ideal(const Poly& f, int n) {
  if (n < 1) throw std::invalid_argument("expand_mod_ideal: rank must be >= 1");
  if (f.num_vars() > n)
    throw std::invalid_argument("expand_mod_ideal: polynomial uses variables beyond x_n");
  SchubExpansion out;
  out.n = n;
  for (const Perm& v : all_perms(n)) {
    const std::int64_t c = ddiff_w(v, f).constant_term();
    if (c != 0) out.coeffs.emplace(v, c);
  }
  return out;
}

/// Canonical representative of f modulo I_n: divides by the triangular set
/// g_i = h_{n-i+1}(x_1..x_i), i = 1..n, whose leading monomials under the
/// lexicographic order with x_n > ... > x_1 are the pairwise-coprime powers
/// x_i^{n-i+1}.  The remainder has every exponent vector under the staircase
/// (exponent of x_i at most n-i) and equals sum_v eta(nabla_v f) S_v.
inline Poly reduce_mod_ideal(const Poly& f, int n) {
  if (n < 1) throw std::invalid_argument("reduce_mod_ideal: rank must be >= 1");
  if (f.num_vars() > n)
    throw std::invalid_argument("reduce_mod_ideal: polynomial uses variables beyond x_n");

  // Divisor tails: g_i minus its leading monomial x_i^{n-i+1}.
  std::vector<Poly> tail(static_cast<size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    Mono lead(static_cast<size_t>(i), 0);
    lead[static_cast<size_t>(i - 1)] = n - i + 1;
    tail[static_cast<size_t>(i)] =
        complete_homogeneous(n - i + 1, i) - Poly::monomial(std::move(lead), 1);
  }

  const auto exponent = [](const Mono& m, int var) -> int {
    return var - 1 < static_cast<int>(m.size()) ? m[static_cast<size_t>(var - 1)] : 0;
  };
  // Lexicographic comparison with priority x_n > x_{n-1} > ... > x_1.
  const auto lex_less = [&](const Mono& a, const Mono& b) {
    for (int v = n; v >= 1; --v) {
      const int ea = exponent(a, v), eb = exponent(b, v);
      if (ea != eb) return ea < eb;
    }
    return false;
  };

  Poly work = f;
  while (true) {
    bool found = false;
    Mono pivot;
    int pivot_var = 0;
    for (const auto& [m, c] : work.terms()) {
      int var = 0;
      for (int i = 1; i <= n; ++i) {
        if (exponent(m, i) >= n - i + 1) {
          var = i;
          break;
        }
      }
      if (var == 0) continue;
      if (!found || lex_less(pivot, m)) {
        pivot = m;
        pivot_var = var;
        found = true;
      }
    }
    if (!found) break;
    const std::int64_t c = work.coeff(pivot);
    Mono quot = pivot;
    quot.resize(std::max(quot.size(), static_cast<size_t>(pivot_var)), 0);
    quot[static_cast<size_t>(pivot_var - 1)] -= n - pivot_var + 1;
    // work -= c * x^quot * g_{pivot_var}; the pivot term cancels exactly and
    // every replacement monomial is lexicographically smaller.
    work -= Poly::monomial(pivot, c);
    work -= Poly::monomial(std::move(quot), c) * tail[static_cast<size_t>(pivot_var)];
  }
  return work;
}

/// Structure constants through the product route: expand S_u * S_v over S_n.
inline SchubExpansion constants_by_product(const Perm& u, const Perm& v, int n) {
  const Poly p = schubert_poly(embed(trim_fixed(u), n)) * schubert_poly(embed(trim_fixed(v), n));
  return expand_mod_ideal(p, n);
}

/// Scalar pairing <f, g> = constant term of nabla_{w_0}(f g) over rank n.
inline std::int64_t pairing(const Poly& f, const Poly& g, int n) {
  if (n < 1) throw std::invalid_argument("pairing: rank must be >= 1");
  return ddiff_w(Perm::longest_element(n), f * g).constant_term();
}

/// The shortest permutation sorting the composition alpha into its decreasing
/// rearrangement lambda: (w . alpha)_i = alpha_{w(i)} = lambda_i, realized by
/// the stable argsort (w(i) = index of the i-th largest entry, ties broken by
/// smaller index).
inline Perm w_of_composition(const std::vector<int>& alpha) {
  const int n = static_cast<int>(alpha.size());
  if (n == 0) return Perm::identity(1);
  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return alpha[static_cast<size_t>(a)] > alpha[static_cast<size_t>(b)]; });
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)] + 1;
  return Perm(img);
}

/// Key (Demazure) polynomial of a composition: for weakly decreasing alpha it
/// is the monomial x^alpha; at the first strict ascent i it satisfies
/// key(alpha) = pi_i(key(alpha with entries i, i+1 swapped)).  Equivalently
/// key(alpha) = pi_{w(alpha)}(x^{lambda(alpha)}).
inline Poly key_poly(const std::vector<int>& alpha) {
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("key_poly: parts must be nonnegative");
  for (size_t i = 0; i + 1 < alpha.size(); ++i) {
    if (alpha[i] < alpha[i + 1]) {
      std::vector<int> beta = alpha;
      std::swap(beta[i], beta[i + 1]);
      return isobaric_pi(static_cast<int>(i) + 1, key_poly(beta));
    }
  }
  return Poly::monomial(Mono(alpha.begin(), alpha.end()), 1);
}

namespace detail {

// Constant term of nabla_u applied to the monomial x^alpha, computed in an
// isolated variable space (so higher variables touched by nabla_u are fresh).
inline std::int64_t schubert_monomial_coeff(const Perm& u, const Mono& alpha) {
  return ddiff_w(u, Poly::monomial(alpha, 1)).constant_term();
}

inline void weak_compositions(int total, int parts,
                              const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(static_cast<size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == parts - 1) {
      cur[static_cast<size_t>(pos)] = remaining;
      fn(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
  };
  if (parts > 0) rec(0, total);
}

inline void block_expand_impl(const Poly& f, const std::vector<int>& mu, size_t j,
                              std::vector<Perm>& prefix,
                              std::map<std::vector<Perm>, std::int64_t>& out) {
  if (f.is_zero()) return;
  if (j == mu.size()) {
    const std::int64_t c = f.constant_term();
    if (!(f - Poly::constant(c)).is_zero())
      throw std::logic_error("block_expand: variables left over after the last block");
    auto [it, inserted] = out.emplace(prefix, c);
    if (!inserted) it->second = checked_add(it->second, c);
    if (it->second == 0) out.erase(it);
    return;
  }
  const size_t m = static_cast<size_t>(mu[j]);

  // Split each monomial into its block part (first m variables) and the rest
  // (shifted down so the next block starts at x_1).
  std::map<Mono, Poly> parts;
  for (const auto& [mono, c] : f.terms()) {
    Mono alpha(mono.begin(), mono.begin() + std::min(mono.size(), m));
    Mono rest;
    for (size_t k = m; k < mono.size(); ++k) rest.push_back(mono[k]);
    parts[trim_mono(std::move(alpha))] += Poly::monomial(std::move(rest), c);
  }

  std::vector<int> degrees;
  for (const auto& [alpha, rest] : parts) {
    const int d = mono_degree(alpha);
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end()) degrees.push_back(d);
  }

  for (int d : degrees) {
    weak_compositions(d, static_cast<int>(m), [&](const std::vector<int>& codevec) {
      const Perm u = from_code(codevec);
      Poly h;
      for (const auto& [alpha, rest] : parts) {
        if (mono_degree(alpha) != d) continue;
        const std::int64_t kappa = schubert_monomial_coeff(u, alpha);
        if (kappa != 0) h += Poly::constant(kappa) * rest;
      }
      if (h.is_zero()) return;
      prefix.push_back(trim_fixed(u));
      block_expand_impl(h, mu, j + 1, prefix, out);
      prefix.pop_back();
    });
  }
}

}  // namespace detail

/// Expand S_w over blocks of variables cut by the composition mu
/// (mu_1 variables, then the next mu_2, ...): returns the integer
/// coefficients d indexed by tuples (u_1, ..., u_p) with
/// S_w(x_1..x_n) = sum d_{u_1..u_p} * prod_j S_{u_j}(block j variables).
/// Each u_j is stored trimmed; its code has at most mu_j nonzero entries.
inline std::map<std::vector<Perm>, std::int64_t> block_expand(const Perm& w,
                                                              const std::vector<int>& mu) {
  if (mu.empty()) throw std::invalid_argument("block_expand: composition must be nonempty");
  int n = 0;
  for (int part : mu) {
    if (part <= 0) throw std::invalid_argument("block_expand: composition parts must be positive");
    n += part;
  }
  const Perm wt = trim_fixed(w);
  const std::vector<int> cd = code(wt);
  int code_len = 0;
  for (size_t i = 0; i < cd.size(); ++i)
    if (cd[i] != 0) code_len = static_cast<int>(i) + 1;
  if (code_len > n)
    throw std::invalid_argument("block_expand: permutation needs more variables than the composition provides");

  std::map<std::vector<Perm>, std::int64_t> out;
  std::vector<Perm> prefix;
  detail::block_expand_impl(schubert_poly(wt), mu, 0, prefix, out);
  return out;
}

inline std::string to_string(const SchubExpansion& e) {
  if (e.coeffs.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : e.coeffs) {
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1) {
      s += std::to_string(a);
      s += "*";
    }
    s += "S[" + to_string(w) + "]";
  }
  return s;
}

}  // namespace schub
