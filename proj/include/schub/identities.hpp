#pragma once

// Self-checking identity suites spanning the whole library.  Each suite
// verifies one algebraic law -- Leibniz rules, braid relations, word
// independence, operator factorizations, structure-constant agreement --
// exhaustively on small ranks plus seeded random samples, and reports a
// pass/fail verdict with a counterexample on failure.  The checks are
// deterministic for a fixed (n, seed).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "schub/bracket.hpp"
#include "schub/divdiff.hpp"
#include "schub/nilcox.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"
#include "schub/schubert.hpp"
#include "schub/schur.hpp"
#include "schub/skewop.hpp"

namespace schub {

struct IdentityItem {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass; counterexample or error text on failure
};

struct IdentityReport {
  int n = 0;
  unsigned int seed = 0;
  std::vector<IdentityItem> items;

  bool all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const IdentityItem& i) { return i.pass; });
  }
};

/// Switches that deliberately break a check, used to demonstrate that the
/// suite catches a wrong convention instead of passing vacuously.
struct IdentityOptions {
  // Drop the variable relabeling on the left factor of the pair-difference
  // Leibniz rule; the suite must then fail on a pinned counterexample.
  bool sabotage_twisted_leibniz = false;
};

namespace detail {

/// All monomials dividing x1^(n-1) * x2^(n-2) * ... * x_{n-1}.
inline std::vector<Mono> staircase_divisors(int n) {
  std::vector<Mono> out;
  Mono cur(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= n - 1 - i; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  return out;
}

struct IdentityContext {
  int n;
  std::mt19937 rng;
  IdentityOptions opt;
  std::vector<IdentityItem> items;

  void check(const std::string& name, const std::function<std::string()>& body) {
    IdentityItem item{name, false, {}};
    try {
      item.detail = body();
      item.pass = item.detail.empty();
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = std::string("exception: ") + e.what();
    }
    items.push_back(std::move(item));
  }

  int capped(int cap) const { return std::min(n, cap); }

  Poly random_poly(int nvars, int max_exp = 2, int num_terms = 3, int max_coeff = 3) {
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
    Poly f;
    for (int t = 0; t < num_terms; ++t) {
      Mono m(static_cast<std::size_t>(nvars), 0);
      for (int i = 0; i < nvars; ++i) m[static_cast<std::size_t>(i)] = exp_dist(rng);
      std::int64_t c = coeff_dist(rng);
      if (c == 0) c = 1;
      f += Poly::monomial(m, c);
    }
    return f;
  }

  Perm random_perm(int m) {
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(img);
  }

  /// A uniformly random pair v <= w in the Bruhat order of S_m, found by
  /// resampling.
  std::pair<Perm, Perm> random_bruhat_pair(int m) {
    for (;;) {
      Perm w = random_perm(m);
      Perm v = random_perm(m);
      if (bruhat_leq(v, w)) return {w, v};
    }
  }
};

}  // namespace detail

inline IdentityReport run_identities(int n, unsigned int seed,
                                     const IdentityOptions& options = {}) {
  if (n < 2) throw std::invalid_argument("run_identities: rank must be >= 2");
  detail::IdentityContext ctx{n, std::mt19937(seed), options, {}};

  // --- Divided differences -------------------------------------------------

  ctx.check("pair-difference-twisted-leibniz", [&]() -> std::string {
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        std::vector<std::pair<Poly, Poly>> cases;
        const Poly xa = Poly::variable(a);
        cases.emplace_back(xa, xa);  // pinned: lhs is x_a + x_b, untwisted gives 2 x_a
        for (int t = 0; t < 2; ++t)
          cases.emplace_back(ctx.random_poly(n), ctx.random_poly(n));
        for (const auto& [f, g] : cases) {
          const Poly lhs = ddiff_pair(a, b, f * g);
          const Poly left =
              ctx.opt.sabotage_twisted_leibniz ? f : act_transposition(a, b, f);
          const Poly rhs = ddiff_pair(a, b, f) * g + left * ddiff_pair(a, b, g);
          if (!(lhs == rhs))
            return "counterexample at pair (" + std::to_string(a) + "," +
                   std::to_string(b) + ") with f = " + to_string(f) +
                   ", g = " + to_string(g);
        }
      }
    }
    return {};
  });

  ctx.check("pair-difference-square-is-zero", [&]() -> std::string {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const Poly f = ctx.random_poly(n);
        if (!ddiff_pair(a, b, ddiff_pair(a, b, f)).is_zero())
          return "nonzero square at pair (" + std::to_string(a) + "," +
                 std::to_string(b) + ")";
      }
    return {};
  });

  ctx.check("pair-difference-kills-symmetric-input", [&]() -> std::string {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        const Poly f = ctx.random_poly(n);
        const Poly sym = f + act_transposition(a, b, f);
        if (!ddiff_pair(a, b, sym).is_zero())
          return "symmetric input not annihilated at pair (" + std::to_string(a) +
                 "," + std::to_string(b) + ")";
      }
    return {};
  });

  ctx.check("simple-difference-braid-and-commutation", [&]() -> std::string {
    for (int i = 1; i + 2 <= n; ++i) {
      const Poly f = ctx.random_poly(n);
      const Poly lhs = ddiff(i, ddiff(i + 1, ddiff(i, f)));
      const Poly rhs = ddiff(i + 1, ddiff(i, ddiff(i + 1, f)));
      if (!(lhs == rhs)) return "braid mismatch at i = " + std::to_string(i);
    }
    for (int i = 1; i + 1 <= n; ++i)
      for (int j = i + 2; j + 1 <= n; ++j) {
        const Poly f = ctx.random_poly(n);
        if (!(ddiff(i, ddiff(j, f)) == ddiff(j, ddiff(i, f))))
          return "commutation mismatch at (i,j) = (" + std::to_string(i) + "," +
                 std::to_string(j) + ")";
      }
    return {};
  });

  ctx.check("reduced-word-independence", [&]() -> std::string {
    const int m = ctx.capped(4);
    for (const Perm& w : all_perms(m)) {
      const Poly f = ctx.random_poly(m);
      const Poly want = ddiff_w(w, f);
      for (const Word& a : reduced_words(w))
        if (!(ddiff_word(a, f) == want))
          return "word " + to_string(a) + " disagrees for w = " + to_string(w);
    }
    return {};
  });

  ctx.check("length-additive-composition", [&]() -> std::string {
    const int m = ctx.capped(4);
    for (int trial = 0; trial < 12; ++trial) {
      const Perm u = ctx.random_perm(m);
      const Perm v = ctx.random_perm(m);
      const Poly f = ctx.random_poly(m);
      const Poly composed = ddiff_w(u, ddiff_w(v, f));
      const Perm uv = compose(u, v);
      const Poly want = length(uv) == length(u) + length(v) ? ddiff_w(uv, f) : Poly::zero();
      if (!(composed == want))
        return "composition mismatch for u = " + to_string(u) +
               ", v = " + to_string(v);
    }
    return {};
  });

  // --- Schubert polynomials ------------------------------------------------

  ctx.check("schubert-transition-under-descents", [&]() -> std::string {
    const int m = ctx.capped(4);
    for (const Perm& w : all_perms(m)) {
      const Poly s = schubert_poly(w);
      for (int i = 1; i < m; ++i) {
        const Poly d = ddiff(i, s);
        const Perm ws = compose(w, Perm::simple(i, m));
        const Poly want = length(ws) < length(w) ? schubert_poly(ws) : Poly::zero();
        if (!(d == want))
          return "transition mismatch at w = " + to_string(w) + ", i = " +
                 std::to_string(i);
      }
    }
    return {};
  });

  ctx.check("schubert-stability-under-embedding", [&]() -> std::string {
    const int m = ctx.capped(4);
    for (const Perm& w : all_perms(m))
      if (!(schubert_poly(embed(w, m + 1)) == schubert_poly(w)))
        return "embedding changes the polynomial for w = " + to_string(w);
    return {};
  });

  ctx.check("longest-element-product-expansion", [&]() -> std::string {
    const int m = ctx.capped(4);
    const Perm w0 = Perm::longest_element(m);
    for (int trial = 0; trial < 2; ++trial) {
      const Poly f = ctx.random_poly(m);
      const Poly g = ctx.random_poly(m);
      const Poly lhs = ddiff_w(w0, f * g);
      Poly rhs;
      for (const Perm& w : all_perms(m))
        rhs += Poly::constant(sign(w)) * ddiff_w(w, act(w0, f)) *
               ddiff_w(compose(w, w0), g);
      if (!(lhs == rhs)) return "expansion mismatch on trial " + std::to_string(trial);
    }
    return {};
  });

  // --- Skew operators ------------------------------------------------------

  ctx.check("skew-product-rule-with-relabeling", [&]() -> std::string {
    auto run_rank = [&](int m, const std::vector<Perm>& ws) -> std::string {
      for (const Perm& w : ws) {
        const Poly f = ctx.random_poly(m);
        const Poly g = ctx.random_poly(m);
        const Poly lhs = ddiff_w(w, f * g);
        Poly rhs;
        for (const Perm& v : all_perms(m))
          if (bruhat_leq(v, w))
            rhs += act(v, skew_apply(w, v, f)) * ddiff_w(v, g);
        if (!(lhs == rhs)) return "mismatch at w = " + to_string(w);
      }
      return {};
    };
    const int m3 = ctx.capped(3);
    if (std::string r = run_rank(m3, all_perms(m3)); !r.empty()) return r;
    if (n >= 4) {
      std::vector<Perm> sample;
      for (int t = 0; t < 6; ++t) sample.push_back(ctx.random_perm(4));
      if (std::string r = run_rank(4, sample); !r.empty()) return r;
    }
    return {};
  });

  ctx.check("skew-chain-rule-through-intermediates", [&]() -> std::string {
    auto run_pair = [&](int m, const Perm& w, const Perm& u) -> std::string {
      const Poly f = ctx.random_poly(m);
      const Poly g = ctx.random_poly(m);
      const Poly lhs = skew_apply(w, u, f * g);
      Poly rhs;
      for (const Perm& v : all_perms(m))
        if (bruhat_leq(u, v) && bruhat_leq(v, w))
          rhs += act(compose(inverse(u), v), skew_apply(w, v, f)) *
                 skew_apply(v, u, g);
      if (!(lhs == rhs))
        return "mismatch at w = " + to_string(w) + ", u = " + to_string(u);
      return {};
    };
    const int m3 = ctx.capped(3);
    for (const Perm& w : all_perms(m3))
      for (const Perm& u : all_perms(m3))
        if (bruhat_leq(u, w))
          if (std::string r = run_pair(m3, w, u); !r.empty()) return r;
    if (n >= 4)
      for (int t = 0; t < 6; ++t) {
        const auto [w, u] = ctx.random_bruhat_pair(4);
        if (std::string r = run_pair(4, w, u); !r.empty()) return r;
      }
    return {};
  });

  ctx.check("skew-longest-element-conjugation", [&]() -> std::string {
    const int m = ctx.capped(4);
    const Perm w0 = Perm::longest_element(m);
    for (const Perm& v : all_perms(m)) {
      const Poly f = ctx.random_poly(m);
      const Poly lhs = act(compose(w0, v), skew_apply(w0, v, f));
      const Poly rhs = ddiff_w(compose(w0, v), f);
      if (!(lhs == rhs)) return "conjugation mismatch at v = " + to_string(v);
    }
    return {};
  });

  ctx.check("skew-operator-word-independence", [&]() -> std::string {
    const int m = ctx.capped(4);
    for (int t = 0; t < 6; ++t) {
      const auto [w, v] = ctx.random_bruhat_pair(m);
      const Poly f = ctx.random_poly(m);
      const Poly want = skew_apply(w, v, f);
      for (const Word& a : reduced_words(w)) {
        const OpSum terms = detail::skew_terms_from_word(a, v, m, detail::SkewStepKind::Nabla);
        const Poly got = apply_opsum(terms, f);
        if (!(got == want))
          return "word " + to_string(a) + " disagrees for (w, v) = (" +
                 to_string(w) + ", " + to_string(v) + ")";
      }
    }
    return {};
  });

  ctx.check("skew-schubert-longest-case", [&]() -> std::string {
    const int m = ctx.capped(4);
    const Perm w0 = Perm::longest_element(m);
    for (const Perm& v : all_perms(m))
      if (!(skew_schubert(w0, v) == schubert_poly(v)))
        return "mismatch at v = " + to_string(v);
    return {};
  });

  ctx.check("skew-schubert-base-conjugation", [&]() -> std::string {
    const int m = ctx.capped(4);
    const Perm w0 = Perm::longest_element(m);
    const Perm id = Perm::identity(m);
    for (const Perm& w : all_perms(m)) {
      const Poly lhs = skew_schubert(w, id);
      const Poly rhs = act(compose(compose(w0, w), w0), schubert_poly(compose(w, w0)));
      if (!(lhs == rhs)) return "mismatch at w = " + to_string(w);
    }
    return {};
  });

  // --- NilCoxeter algebra --------------------------------------------------

  ctx.check("nilcoxeter-defining-relations", [&]() -> std::string {
    const int k = std::max(2, ctx.capped(4) - 1);
    for (int i = 1; i <= k; ++i)
      if (!(nc_mul(NilCoxElem::generator(i, k), NilCoxElem::generator(i, k)) ==
            NilCoxElem::zero(k)))
        return "square of generator " + std::to_string(i) + " is nonzero";
    for (int i = 1; i + 1 <= k; ++i) {
      const NilCoxElem a = NilCoxElem::generator(i, k);
      const NilCoxElem b = NilCoxElem::generator(i + 1, k);
      if (!(nc_mul(nc_mul(a, b), a) == nc_mul(nc_mul(b, a), b)))
        return "braid relation fails at i = " + std::to_string(i);
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 2; j <= k; ++j) {
        const NilCoxElem a = NilCoxElem::generator(i, k);
        const NilCoxElem b = NilCoxElem::generator(j, k);
        if (!(nc_mul(a, b) == nc_mul(b, a)))
          return "disjoint generators " + std::to_string(i) + ", " +
                 std::to_string(j) + " do not commute";
      }
    return {};
  });

  ctx.check("nilcoxeter-series-commutation", [&]() -> std::string {
    const int k = std::max(2, ctx.capped(4) - 1);
    for (int i = 1; i <= k; ++i)
      if (!(nc_mul(a_factor(i, 1, k), a_factor(i, 2, k)) ==
            nc_mul(a_factor(i, 2, k), a_factor(i, 1, k))))
        return "series factors at i = " + std::to_string(i) +
               " fail to commute in two formal variables";
    return {};
  });

  ctx.check("nilcoxeter-series-recursion", [&]() -> std::string {
    const int k = std::max(2, ctx.capped(4) - 1);
    for (int i = 1; i < k; ++i) {
      NilCoxElem tail = NilCoxElem::one(k);
      tail.coeffs.emplace(Perm::simple(i, k + 1), Poly::variable(5));
      if (!(a_factor(i, 5, k) == nc_mul(a_factor(i + 1, 5, k), tail)))
        return "peeling recursion fails at i = " + std::to_string(i);
    }
    return {};
  });

  ctx.check("nilcoxeter-factorization-matches-schubert-sum", [&]() -> std::string {
    const int k = ctx.capped(4);
    NilCoxElem want = NilCoxElem::zero(k);
    for (const Perm& w : all_perms(k + 1)) {
      const Poly s = schubert_poly(w);
      if (!s.is_zero()) want.coeffs.emplace(w, s);
    }
    if (!(schubert_expression(k) == want)) return "factorization disagrees at rank " + std::to_string(k);
    return {};
  });

  ctx.check("path-sum-matches-product-constants", [&]() -> std::string {
    auto run_pair = [&](int m, const Perm& w, const Perm& u) -> std::string {
      const NilCoxElem paths = path_sum_constants(w, u, m);
      for (const Perm& v : all_perms(m)) {
        const SchubExpansion prod = constants_by_product(u, v, m);
        const auto pit = prod.coeffs.find(w);
        const std::int64_t want = pit == prod.coeffs.end() ? 0 : pit->second;
        const auto cit = paths.coeffs.find(v);
        const std::int64_t got = cit == paths.coeffs.end() ? 0 : cit->second.constant_term();
        if (got != want)
          return "coefficient mismatch at (w, u, v) = (" + to_string(w) + ", " +
                 to_string(u) + ", " + to_string(v) + ")";
      }
      return {};
    };
    const int m3 = ctx.capped(3);
    for (const Perm& w : all_perms(m3))
      for (const Perm& u : all_perms(m3))
        if (std::string r = run_pair(m3, w, u); !r.empty()) return r;
    if (n >= 4)
      for (int t = 0; t < 12; ++t) {
        const Perm w = ctx.random_perm(4);
        const Perm u = ctx.random_perm(4);
        if (std::string r = run_pair(4, w, u); !r.empty()) return r;
      }
    return {};
  });

  // --- Bracket algebra -----------------------------------------------------

  ctx.check("bracket-defining-relations-under-representation", [&]() -> std::string {
    const int top = ctx.capped(4);
    auto one_word = [](std::vector<std::pair<int, int>> w) {
      BracketElem e;
      e.terms.emplace(std::move(w), 1);
      return e;
    };
    for (int i = 1; i <= top; ++i)
      for (int j = i + 1; j <= top; ++j)
        if (!detail::bracket_represent_agree(one_word({{i, j}, {i, j}}), BracketElem{}))
          return "square of [" + std::to_string(i) + "," + std::to_string(j) +
                 "] does not vanish";
    for (int i = 1; i <= top; ++i)
      for (int j = i + 1; j <= top; ++j)
        for (int k = j + 1; k <= top; ++k) {
          BracketElem rhs1 = one_word({{j, k}, {i, k}});
          detail::bracket_add(rhs1, {{i, k}, {i, j}}, 1);
          if (!detail::bracket_represent_agree(one_word({{i, j}, {j, k}}), rhs1))
            return "first three-term relation fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")";
          BracketElem rhs2 = one_word({{i, k}, {j, k}});
          detail::bracket_add(rhs2, {{i, j}, {i, k}}, 1);
          if (!detail::bracket_represent_agree(one_word({{j, k}, {i, j}}), rhs2))
            return "second three-term relation fails at (" + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(k) + ")";
        }
    if (top >= 4 &&
        !detail::bracket_represent_agree(one_word({{1, 2}, {3, 4}}),
                                         one_word({{3, 4}, {1, 2}})))
      return "disjoint generators do not commute";
    return {};
  });

  ctx.check("bracket-matches-skew-operator", [&]() -> std::string {
    const int m = ctx.capped(4);
    const std::vector<Mono> monos = detail::staircase_divisors(m + 1);
    const int trials = m >= 4 ? 8 : 12;
    for (int t = 0; t < trials; ++t) {
      const auto [w, v] = ctx.random_bruhat_pair(m);
      const BracketElem e = bracket_skew(w, v);
      for (const Mono& mono : monos) {
        const Poly f = Poly::monomial(mono, 1);
        if (!(represent_apply(e, f) == skew_apply(w, v, f)))
          return "disagreement at (w, v) = (" + to_string(w) + ", " + to_string(v) +
                 ") on monomial " + to_string(f);
      }
    }
    return {};
  });

  // --- Schur oracle ----------------------------------------------------------

  ctx.check("schur-determinant-matches-tableau-sum", [&]() -> std::string {
    const std::vector<Partition> shapes = {
        {}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
    for (const Partition& lambda : shapes)
      for (const Partition& mu : shapes) {
        if (!detail::contains_shape(lambda, mu)) continue;
        for (int nv = std::max<int>(1, static_cast<int>(lambda.size()));
             nv <= ctx.capped(3); ++nv)
          if (!(skew_schur_jt(lambda, mu, nv) == skew_schur_tableaux(lambda, mu, nv)))
            return "determinant and tableau sum disagree on a shape pair with " +
                   std::to_string(nv) + " variables";
      }
    return {};
  });

  ctx.check("grassmannian-bridge", [&]() -> std::string {
    const int m = ctx.capped(4);
    for (int r = 1; r < m; ++r) {
      std::vector<Perm> grass;
      for (const Perm& w : all_perms(m)) {
        const std::vector<int> ds = descents(w);
        if (std::all_of(ds.begin(), ds.end(), [&](int d) { return d == r; }))
          grass.push_back(w);
      }
      for (const Perm& u : grass)
        for (const Perm& v : grass) {
          const SchubExpansion prod = constants_by_product(u, v, m);
          for (const Perm& w : grass) {
            const auto it = prod.coeffs.find(w);
            const std::int64_t got = it == prod.coeffs.end() ? 0 : it->second;
            const std::int64_t want = lr_numbers(
                grassmannian_shape(w, r), grassmannian_shape(u, r),
                grassmannian_shape(v, r));
            if (got != want)
              return "constant differs from the tableau count at r = " +
                     std::to_string(r) + ", (u, v, w) = (" + to_string(u) + ", " +
                     to_string(v) + ", " + to_string(w) + ")";
          }
        }
    }
    return {};
  });

  return {n, seed, std::move(ctx.items)};
}

inline std::string to_string(const IdentityReport& report) {
  std::ostringstream os;
  int passed = 0;
  for (const IdentityItem& item : report.items) {
    if (item.pass) {
      ++passed;
      os << "PASS " << item.name << '\n';
    } else {
      os << "FAIL " << item.name << ": " << item.detail << '\n';
    }
  }
  os << "identities: " << passed << '/' << report.items.size() << " passed (n="
     << report.n << ", seed=" << report.seed << ")\n";
  return os.str();
}

}  // namespace schub
