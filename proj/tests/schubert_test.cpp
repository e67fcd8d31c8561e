#include "schub/schubert.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "schub/divdiff.hpp"
#include "schub/perm.hpp"
#include "schub/poly.hpp"

namespace schub {
namespace {

Perm P(std::initializer_list<int> v) { return Perm(std::vector<int>(v)); }

Poly random_poly(std::mt19937& rng, int nvars, int max_exp, int nterms) {
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  std::uniform_int_distribution<std::int64_t> coeff_dist(-4, 4);
  Poly f;
  for (int t = 0; t < nterms; ++t) {
    Mono m(static_cast<size_t>(nvars), 0);
    for (int i = 0; i < nvars; ++i) m[static_cast<size_t>(i)] = exp_dist(rng);
    f += Poly::monomial(std::move(m), coeff_dist(rng));
  }
  return f;
}

// Independent definition: S_w is the divided-difference word of w^{-1} w_0
// applied to the staircase monomial.
Poly schubert_by_definition(const Perm& w) {
  const int n = w.n();
  return ddiff_w(compose(inverse(w), Perm::longest_element(n)), x_delta(n));
}

TEST(Schubert, PinnedValues) {
  EXPECT_EQ(schubert_poly(P({2, 1, 4, 3})), parse_poly("x1^2 + x1*x2 + x1*x3"));
  EXPECT_EQ(schubert_poly(Perm::identity(4)), Poly::one());
  const Perm w = from_word({1, 2, 3, 2, 1}, 4);
  EXPECT_EQ(w, P({4, 2, 3, 1}));
  EXPECT_EQ(schubert_poly(w), parse_poly("x1^3*x2*x3"));
  EXPECT_EQ(schubert_poly(P({4, 3, 1, 2})), parse_poly("x1^3*x2^2"));
  EXPECT_EQ(schubert_poly(P({3, 4, 2, 1})), parse_poly("x1^2*x2^2*x3"));
  EXPECT_EQ(schubert_poly(P({3, 1, 2})), parse_poly("x1^2"));
  EXPECT_EQ(schubert_poly(Perm::longest_element(4)), parse_poly("x1^3*x2^2*x3"));
}

TEST(Schubert, MatchesDirectDefinition) {
  for (int n = 1; n <= 4; ++n) {
    for (const Perm& w : all_perms(n)) {
      EXPECT_EQ(schubert_poly(w), schubert_by_definition(w)) << to_string(w);
    }
  }
  // Spot checks in rank 5.
  EXPECT_EQ(schubert_poly(P({5, 4, 3, 2, 1})), schubert_by_definition(P({5, 4, 3, 2, 1})));
  EXPECT_EQ(schubert_poly(P({2, 4, 1, 5, 3})), schubert_by_definition(P({2, 4, 1, 5, 3})));
  EXPECT_EQ(schubert_poly(P({3, 1, 5, 2, 4})), schubert_by_definition(P({3, 1, 5, 2, 4})));
}

TEST(Schubert, HomogeneousPositiveOfDegreeLength) {
  for (const Perm& w : all_perms(4)) {
    const Poly s = schubert_poly(w);
    EXPECT_TRUE(s.is_homogeneous());
    EXPECT_EQ(s.degree(), static_cast<int>(length(w)));
    EXPECT_TRUE(s.has_nonneg_coeffs());
    EXPECT_FALSE(s.is_zero());
  }
}

TEST(Schubert, StableUnderEmbedding) {
  for (const Perm& w : all_perms(4)) {
    for (int m = 5; m <= 6; ++m) {
      EXPECT_EQ(schubert_poly(embed(w, m)), schubert_poly(w));
    }
  }
}

TEST(Schubert, TransitionUnderDividedDifferences) {
  // nabla_v S_w = S_{w v^{-1}} when lengths subtract, and 0 otherwise.
  for (const Perm& w : all_perms(4)) {
    for (const Perm& v : all_perms(4)) {
      const Poly lhs = ddiff_w(v, schubert_poly(w));
      const Perm wv = compose(w, inverse(v));
      if (length(wv) == length(w) - length(v)) {
        EXPECT_EQ(lhs, schubert_poly(wv)) << to_string(w) << " / " << to_string(v);
      } else {
        EXPECT_TRUE(lhs.is_zero()) << to_string(w) << " / " << to_string(v);
      }
    }
  }
}

TEST(ExpandModIdeal, PinnedExample) {
  SchubExpansion e = expand_mod_ideal(parse_poly("x2*x3"), 4);
  std::map<Perm, std::int64_t> want = {
      {P({1, 3, 4, 2}), 1}, {P({2, 1, 4, 3}), -1}, {P({3, 1, 2, 4}), 1}};
  EXPECT_EQ(e.coeffs, want);
  EXPECT_EQ(e.n, 4);
  // The same expansion for the equivalent polynomial in x1, x4.
  SchubExpansion e2 = expand_mod_ideal(parse_poly("x1^2 + x1*x4 + x4^2"), 4);
  EXPECT_EQ(e2.coeffs, want);
}

TEST(ExpandModIdeal, SchubertBasisIsRecovered) {
  for (const Perm& w : all_perms(4)) {
    SchubExpansion e = expand_mod_ideal(schubert_poly(w), 4);
    std::map<Perm, std::int64_t> want = {{embed(w, 4), 1}};
    EXPECT_EQ(e.coeffs, want) << to_string(w);
  }
}

TEST(ExpandModIdeal, ExactOnSubStaircase) {
  // Every monomial under the staircase expands exactly (not just mod the ideal).
  const int n = 4;
  std::vector<Mono> staircase;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 1; ++c) staircase.push_back(trim_mono({a, b, c}));
  for (const Mono& m : staircase) {
    const Poly f = Poly::monomial(m, 1);
    SchubExpansion e = expand_mod_ideal(f, n);
    Poly back;
    for (const auto& [v, c] : e.coeffs) back += Poly::constant(c) * schubert_poly(v);
    EXPECT_EQ(back, f) << mono_to_string(m);
  }
  // And a random combination of them.
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> coeff_dist(-5, 5);
  Poly f;
  for (const Mono& m : staircase) f += Poly::monomial(m, coeff_dist(rng));
  SchubExpansion e = expand_mod_ideal(f, n);
  Poly back;
  for (const auto& [v, c] : e.coeffs) back += Poly::constant(c) * schubert_poly(v);
  EXPECT_EQ(back, f);
}

TEST(ReduceModIdeal, PinnedExamples) {
  EXPECT_EQ(reduce_mod_ideal(parse_poly("x1^2 + x1*x4 + x4^2"), 4), parse_poly("x2*x3"));
  EXPECT_EQ(reduce_mod_ideal(parse_poly("x1*x2*x3*(x1 + x3)"), 4), parse_poly("-x1*x2^2*x3"));
}

TEST(ReduceModIdeal, FixesSubStaircase) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::int64_t> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> e1(0, 3), e2(0, 2), e3(0, 1);
    Poly f;
    for (int t = 0; t < 6; ++t)
      f += Poly::monomial(trim_mono({e1(rng), e2(rng), e3(rng)}), coeff_dist(rng));
    EXPECT_EQ(reduce_mod_ideal(f, 4), f);
  }
}

TEST(ReduceModIdeal, RemainderIsSubStaircaseAndCongruent) {
  const int n = 4;
  std::mt19937 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    const Poly f = random_poly(rng, n, 4, 5);
    const Poly r = reduce_mod_ideal(f, n);
    for (const auto& [m, c] : r.terms()) {
      for (size_t i = 0; i < m.size(); ++i) {
        EXPECT_LE(m[i], n - 1 - static_cast<int>(i)) << mono_to_string(m);
      }
    }
    // Same Schubert coefficients before and after reduction: eta(nabla_v f)
    // is an ideal invariant.
    for (const Perm& v : all_perms(n)) {
      EXPECT_EQ(ddiff_w(v, f).constant_term(), ddiff_w(v, r).constant_term())
          << to_string(v);
    }
    // The reduction agrees with the expansion route.
    SchubExpansion e = expand_mod_ideal(f, n);
    Poly back;
    for (const auto& [v, c] : e.coeffs) back += Poly::constant(c) * schubert_poly(v);
    EXPECT_EQ(r, back);
  }
}

TEST(ConstantsByProduct, PinnedExamples) {
  {
    SchubExpansion e = constants_by_product(P({2, 1, 3}), P({2, 1, 3}), 3);
    std::map<Perm, std::int64_t> want = {{P({3, 1, 2}), 1}};
    EXPECT_EQ(e.coeffs, want);
  }
  {
    SchubExpansion e = constants_by_product(Perm::identity(3), P({2, 3, 1}), 3);
    std::map<Perm, std::int64_t> want = {{P({2, 3, 1}), 1}};
    EXPECT_EQ(e.coeffs, want);
  }
  {
    SchubExpansion e = constants_by_product(P({2, 1, 3}), P({1, 3, 2}), 3);
    std::map<Perm, std::int64_t> want = {{P({3, 1, 2}), 1}, {P({2, 3, 1}), 1}};
    EXPECT_EQ(e.coeffs, want);
  }
}

TEST(ConstantsByProduct, NonnegativeOverRankThree) {
  for (const Perm& u : all_perms(3)) {
    for (const Perm& v : all_perms(3)) {
      SchubExpansion e = constants_by_product(u, v, 3);
      for (const auto& [w, c] : e.coeffs) {
        EXPECT_GT(c, 0) << to_string(u) << " * " << to_string(v) << " at " << to_string(w);
        EXPECT_EQ(length(w), length(u) + length(v));
      }
    }
  }
}

TEST(Pairing, OrthogonalityOfSchubertBases) {
  for (int n = 3; n <= 4; ++n) {
    const Perm w0 = Perm::longest_element(n);
    for (const Perm& w : all_perms(n)) {
      for (const Perm& u : all_perms(n)) {
        if (length(u) + length(w) != length(w0)) continue;
        const std::int64_t p = pairing(schubert_poly(w), schubert_poly(u), n);
        EXPECT_EQ(p, u == compose(w0, w) ? 1 : 0)
            << to_string(w) << " , " << to_string(u);
      }
    }
  }
  EXPECT_EQ(pairing(Poly::one(), x_delta(4), 4), 1);
}

TEST(Pairing, MacdonaldProductRule) {
  // nabla_{w0}(f g) = sum over w of sign(w) * nabla_w(act(w0, f)) * nabla_{w w0}(g).
  std::mt19937 rng(5);
  for (int n = 3; n <= 4; ++n) {
    const Perm w0 = Perm::longest_element(n);
    const int trials = n == 3 ? 6 : 2;
    for (int trial = 0; trial < trials; ++trial) {
      const Poly f = random_poly(rng, n, 2, 3);
      const Poly g = random_poly(rng, n, 2, 3);
      const Poly lhs = ddiff_w(w0, f * g);
      Poly rhs;
      for (const Perm& w : all_perms(n)) {
        const Poly a = ddiff_w(w, act(w0, f));
        const Poly b = ddiff_w(compose(w, w0), g);
        rhs += Poly::constant(sign(w)) * a * b;
      }
      EXPECT_EQ(lhs, rhs) << "rank " << n;
    }
  }
}

TEST(KeyPoly, PinnedValues) {
  EXPECT_EQ(key_poly({2, 1, 0}), parse_poly("x1^2*x2"));
  EXPECT_EQ(key_poly({0, 1}), parse_poly("x1 + x2"));
  EXPECT_EQ(key_poly({0, 0, 1}), parse_poly("x1 + x2 + x3"));
  EXPECT_EQ(key_poly({}), Poly::one());
  EXPECT_EQ(key_poly({0, 2}), parse_poly("x1^2 + x1*x2 + x2^2"));
  EXPECT_EQ(key_poly({1, 0, 2}),
            parse_poly("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2"));
}

TEST(KeyPoly, SortingPermutationRoute) {
  EXPECT_EQ(w_of_composition({0, 0, 1}), P({3, 1, 2}));
  EXPECT_EQ(w_of_composition({2, 1, 0}), Perm::identity(3));
  EXPECT_EQ(w_of_composition({1, 1, 0}), Perm::identity(3));
  EXPECT_EQ(w_of_composition({0, 1, 1}), P({2, 3, 1}));
  // key(alpha) = pi_{w(alpha)}(x^{lambda(alpha)}) for every composition with
  // parts bounded by 2 in three slots.
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        const std::vector<int> alpha = {a, b, c};
        std::vector<int> lambda = alpha;
        std::sort(lambda.begin(), lambda.end(), std::greater<int>());
        const Perm w = w_of_composition(alpha);
        // Check the sorting property: lambda_i = alpha_{w(i)}.
        for (int i = 1; i <= 3; ++i)
          EXPECT_EQ(lambda[static_cast<size_t>(i - 1)], alpha[static_cast<size_t>(w(i) - 1)]);
        const Poly via_word =
            isobaric_pi_w(w, Poly::monomial(Mono(lambda.begin(), lambda.end()), 1));
        EXPECT_EQ(key_poly(alpha), via_word)
            << a << "," << b << "," << c;
      }
    }
  }
}

TEST(KeyPoly, DominantCaseIsMonomial) {
  EXPECT_EQ(key_poly({3, 2, 1}), parse_poly("x1^3*x2^2*x3"));
  EXPECT_EQ(key_poly({2, 2, 0}), parse_poly("x1^2*x2^2"));
}

TEST(BlockExpand, PinnedExamples) {
  {
    // S_231 = x1 x2 = x1 * S_21(block 2) with block sizes (1, 2).
    auto d = block_expand(P({2, 3, 1}), {1, 2});
    std::map<std::vector<Perm>, std::int64_t> want = {
        {{P({2, 1}), P({2, 1})}, 1}};
    EXPECT_EQ(d, want);
  }
  {
    auto d = block_expand(Perm::identity(4), {2, 2});
    std::map<std::vector<Perm>, std::int64_t> want = {
        {{P({1}), P({1})}, 1}};
    EXPECT_EQ(d, want);
  }
  {
    // S_312 = x1^2 lies entirely in the first block.
    auto d = block_expand(P({3, 1, 2}), {1, 2});
    std::map<std::vector<Perm>, std::int64_t> want = {
        {{P({3, 1, 2}), P({1})}, 1}};
    EXPECT_EQ(d, want);
  }
}

TEST(BlockExpand, NonnegativeAndRecomposes) {
  const std::vector<std::vector<int>> comps = {
      {1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {2, 2}, {1, 3}, {3, 1}, {4}};
  for (const Perm& w : all_perms(4)) {
    for (const auto& mu : comps) {
      auto d = block_expand(w, mu);
      Poly back;
      for (const auto& [tuple, c] : d) {
        EXPECT_GE(c, 0) << to_string(w);
        Poly prod = Poly::constant(c);
        int offset = 0;
        for (size_t j = 0; j < mu.size(); ++j) {
          prod *= shift_vars(schubert_poly(tuple[j]), offset);
          offset += mu[j];
        }
        back += prod;
      }
      EXPECT_EQ(back, schubert_poly(trim_fixed(w))) << to_string(w);
    }
  }
}

TEST(BlockExpand, RejectsBadInput) {
  EXPECT_THROW(block_expand(P({2, 1}), {}), std::invalid_argument);
  EXPECT_THROW(block_expand(P({2, 1}), {1, 0, 1}), std::invalid_argument);
  // Code length 3 cannot fit into two variables.
  EXPECT_THROW(block_expand(P({2, 3, 4, 1}), {1, 1}), std::invalid_argument);
}

TEST(XDelta, Basics) {
  EXPECT_EQ(x_delta(1), Poly::one());
  EXPECT_EQ(x_delta(2), parse_poly("x1"));
  EXPECT_EQ(x_delta(4), parse_poly("x1^3*x2^2*x3"));
}

TEST(SchubExpansionText, Format) {
  SchubExpansion e;
  e.n = 3;
  e.coeffs = {{P({1, 3, 2}), 1}, {P({3, 1, 2}), -2}};
  EXPECT_EQ(to_string(e), "S[1,3,2] - 2*S[3,1,2]");
  EXPECT_EQ(to_string(SchubExpansion{}), "0");
}

}  // namespace
}  // namespace schub
