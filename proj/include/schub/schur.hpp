#pragma once
// Skew Schur polynomials two ways (a complete-homogeneous determinant and a
// semistandard-tableau sum) plus Littlewood-Richardson numbers by lattice-word
// tableau counting.  Serves as an independent oracle for the structure
// constants of Grassmannian permutations.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {

/// Weakly decreasing nonnegative parts; trailing zeros are trimmed on entry
/// to every operation.
using Partition = std::vector<int>;

/// Semistandard filling of the skew shape lambda/mu: rows[r][k] is the entry
/// in row r (0-indexed) and column mu_r + k.  Rows weakly increase left to
/// right, columns strictly increase top to bottom.
struct Tableau {
  Partition lambda;
  Partition mu;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

namespace detail {

inline Partition normalize_partition(Partition p, const char* who) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || (i + 1 < p.size() && p[i] < p[i + 1]))
      throw std::invalid_argument(std::string(who) +
                                  ": parts must be weakly decreasing and nonnegative");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline bool contains_shape(const Partition& lambda, const Partition& mu) {
  if (mu.size() > lambda.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

inline int partition_weight(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

/// Backtracking enumeration of semistandard fillings of lambda/mu with
/// entries in 1..nmax, visiting cells in reading order (right to left along
/// each row, rows top to bottom) so that weight and lattice-word constraints
/// prune by prefix.  weight == nullptr means any weight; lattice demands that
/// every reading-word prefix contain at least as many i as i+1.
inline void for_each_tableau(const Partition& lambda, const Partition& mu, int nmax,
                             const Partition* weight, bool lattice,
                             const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  const std::size_t nrows = lambda.size();
  std::vector<std::vector<int>> rows(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    const int lo = r < mu.size() ? mu[r] : 0;
    rows[r].assign(static_cast<std::size_t>(lambda[r] - lo), 0);
  }
  std::vector<std::pair<int, int>> cells;  // (row, column), reading order
  for (std::size_t r = 0; r < nrows; ++r) {
    const int lo = r < mu.size() ? mu[r] : 0;
    for (int c = lambda[r] - 1; c >= lo; --c) cells.emplace_back(static_cast<int>(r), c);
  }
  std::vector<int> counts(static_cast<std::size_t>(nmax) + 1, 0);

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      fn(rows);
      return;
    }
    const auto [r, c] = cells[k];
    const int row_lo = static_cast<std::size_t>(r) < mu.size() ? mu[r] : 0;
    int hi = nmax;
    if (c + 1 < lambda[r]) hi = std::min(hi, rows[r][static_cast<std::size_t>(c + 1 - row_lo)]);
    int lo = 1;
    if (r > 0) {
      const int up_lo = static_cast<std::size_t>(r - 1) < mu.size() ? mu[r - 1] : 0;
      if (c >= up_lo && c < lambda[r - 1])
        lo = std::max(lo, rows[r - 1][static_cast<std::size_t>(c - up_lo)] + 1);
    }
    for (int v = lo; v <= hi; ++v) {
      if (weight && counts[static_cast<std::size_t>(v)] >= (*weight)[static_cast<std::size_t>(v - 1)])
        continue;
      if (lattice && v > 1 &&
          counts[static_cast<std::size_t>(v)] >= counts[static_cast<std::size_t>(v - 1)])
        continue;
      rows[r][static_cast<std::size_t>(c - row_lo)] = v;
      ++counts[static_cast<std::size_t>(v)];
      rec(k + 1);
      --counts[static_cast<std::size_t>(v)];
    }
    rows[r][static_cast<std::size_t>(c - row_lo)] = 0;
  };
  rec(0);
}

}  // namespace detail

/// Skew Schur polynomial in x1..xn as the n x n determinant of complete
/// homogeneous polynomials h_{lambda_i - mu_j - i + j} (shapes padded with
/// zero parts).  Requires mu inside lambda and at most n rows.
inline Poly skew_schur_jt(const Partition& lambda, const Partition& mu, int n) {
  const Partition lam = detail::normalize_partition(lambda, "skew_schur_jt");
  const Partition m = detail::normalize_partition(mu, "skew_schur_jt");
  if (!detail::contains_shape(lam, m))
    throw std::invalid_argument("skew_schur_jt: mu is not contained in lambda");
  if (n < 1 || static_cast<int>(lam.size()) > n)
    throw std::invalid_argument("skew_schur_jt: shape has more rows than variables");
  std::vector<std::vector<Poly>> h(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int li = i < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i)] : 0;
    for (int j = 0; j < n; ++j) {
      const int mj = j < static_cast<int>(m.size()) ? m[static_cast<std::size_t>(j)] : 0;
      h[static_cast<std::size_t>(i)].push_back(complete_homogeneous(li - mj - i + j, n));
    }
  }
  Poly det;
  for (const Perm& sigma : all_perms(n)) {
    Poly term = length(sigma) % 2 == 0 ? Poly::one() : Poly::constant(-1);
    for (int i = 0; i < n && !term.is_zero(); ++i)
      term = term * h[static_cast<std::size_t>(i)][static_cast<std::size_t>(sigma(i + 1) - 1)];
    det += term;
  }
  return det;
}

/// The same polynomial as a sum of x^(weight) over semistandard fillings of
/// lambda/mu with entries at most n.
inline Poly skew_schur_tableaux(const Partition& lambda, const Partition& mu, int n) {
  const Partition lam = detail::normalize_partition(lambda, "skew_schur_tableaux");
  const Partition m = detail::normalize_partition(mu, "skew_schur_tableaux");
  if (!detail::contains_shape(lam, m))
    throw std::invalid_argument("skew_schur_tableaux: mu is not contained in lambda");
  if (n < 1 || static_cast<int>(lam.size()) > n)
    throw std::invalid_argument("skew_schur_tableaux: shape has more rows than variables");
  Poly out;
  detail::for_each_tableau(lam, m, n, nullptr, false,
                           [&](const std::vector<std::vector<int>>& rows) {
                             Mono w(static_cast<std::size_t>(n), 0);
                             for (const auto& row : rows)
                               for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
                             out += Poly::monomial(std::move(w), 1);
                           });
  return out;
}

/// All semistandard fillings of lambda/mu with entries at most n.
inline std::vector<Tableau> semistandard_tableaux(const Partition& lambda,
                                                  const Partition& mu, int n) {
  const Partition lam = detail::normalize_partition(lambda, "semistandard_tableaux");
  const Partition m = detail::normalize_partition(mu, "semistandard_tableaux");
  if (!detail::contains_shape(lam, m))
    throw std::invalid_argument("semistandard_tableaux: mu is not contained in lambda");
  std::vector<Tableau> out;
  detail::for_each_tableau(lam, m, n, nullptr, false,
                           [&](const std::vector<std::vector<int>>& rows) {
                             out.push_back(Tableau{lam, m, rows});
                           });
  return out;
}

/// Littlewood-Richardson number: semistandard fillings of lambda/mu with
/// exactly nu_i entries equal to i whose reading word (right to left along
/// rows, top to bottom) is a lattice word.  Size or containment mismatches
/// count zero tableaux rather than erroring.
inline std::int64_t lr_numbers(const Partition& lambda, const Partition& mu,
                               const Partition& nu) {
  const Partition lam = detail::normalize_partition(lambda, "lr_numbers");
  const Partition m = detail::normalize_partition(mu, "lr_numbers");
  const Partition w = detail::normalize_partition(nu, "lr_numbers");
  if (!detail::contains_shape(lam, m)) return 0;
  if (detail::partition_weight(lam) != detail::partition_weight(m) + detail::partition_weight(w))
    return 0;
  std::int64_t count = 0;
  detail::for_each_tableau(lam, m, static_cast<int>(w.size()), &w, true,
                           [&](const std::vector<std::vector<int>>&) {
                             count = checked_add(count, 1);
                           });
  return count;
}

/// Shape of a permutation whose descents all sit at position r: the reversed
/// prefix of its code up to r.  Such permutations are the Grassmannian ones,
/// and their Schubert polynomials are Schur polynomials in x1..xr.
inline Partition grassmannian_shape(const Perm& w, int r) {
  if (r < 1 || r > w.n())
    throw std::invalid_argument("grassmannian_shape: descent position out of range");
  const std::vector<int> c = code(w);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] > 0 && static_cast<int>(i) >= r)
      throw std::invalid_argument("grassmannian_shape: permutation has a descent beyond r");
  Partition lam(c.begin(), c.begin() + std::min<std::size_t>(c.size(), static_cast<std::size_t>(r)));
  std::reverse(lam.begin(), lam.end());
  return detail::normalize_partition(std::move(lam), "grassmannian_shape");
}

}  // namespace schub
