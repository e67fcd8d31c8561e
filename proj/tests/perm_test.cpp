#include "schub/perm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace schub;

namespace {

Perm P(std::initializer_list<int> images) { return Perm(std::vector<int>(images)); }

// Independent Bruhat oracle (Ehresmann): v <= w iff for every prefix size k,
// sorted {v(1..k)} is entrywise <= sorted {w(1..k)}.
bool bruhat_leq_oracle(const Perm& v, const Perm& w) {
  int n = v.n();
  std::vector<int> av, aw;
  for (int k = 1; k <= n; ++k) {
    av.push_back(v(k));
    aw.push_back(w(k));
    std::vector<int> sv = av, sw = aw;
    std::sort(sv.begin(), sv.end());
    std::sort(sw.begin(), sw.end());
    for (size_t j = 0; j < sv.size(); ++j)
      if (sv[j] > sw[j]) return false;
  }
  return true;
}

TEST(Perm, ComposeActsRightFactorFirst) {
  Perm s1 = Perm::simple(1, 3), s2 = Perm::simple(2, 3);
  EXPECT_EQ(compose(s2, s1), P({3, 1, 2}));
  EXPECT_EQ(compose(s1, s2), P({2, 3, 1}));
}

TEST(Perm, FromWordFoldsLeftToRight) {
  EXPECT_EQ(from_word({2, 1}, 3), P({3, 1, 2}));
  EXPECT_EQ(from_word({2, 1, 3, 2, 1}, 4), P({4, 3, 1, 2}));
  EXPECT_EQ(from_word({1, 2, 3, 1}, 4), P({3, 2, 4, 1}));
  EXPECT_EQ(from_word({3, 2}, 4), P({1, 4, 2, 3}));
  EXPECT_EQ(from_word({1, 2, 3, 2, 1}, 4), P({4, 2, 3, 1}));
  EXPECT_EQ(from_word({2, 3}, 4), P({1, 3, 4, 2}));
  EXPECT_EQ(from_word({1, 3}, 4), P({2, 1, 4, 3}));
  EXPECT_EQ(from_word({2, 3, 2}, 4), P({1, 4, 3, 2}));
  EXPECT_EQ(from_word({1, 2, 3}, 4), P({2, 3, 4, 1}));
  EXPECT_EQ(from_word({2, 1, 3}, 4), P({3, 1, 4, 2}));
  EXPECT_EQ(from_word({3, 1, 2}, 4), P({2, 4, 1, 3}));
}

TEST(Perm, InverseAndIdentity) {
  Perm w = P({4, 3, 1, 2});
  EXPECT_EQ(compose(w, inverse(w)), Perm::identity(4));
  EXPECT_EQ(compose(inverse(w), w), Perm::identity(4));
  EXPECT_EQ(inverse(w), P({3, 4, 2, 1}));
  EXPECT_TRUE(Perm::identity(5).is_identity());
}

TEST(Perm, LengthAndSign) {
  EXPECT_EQ(length(Perm::identity(4)), 0);
  EXPECT_EQ(length(P({4, 3, 1, 2})), 5);
  EXPECT_EQ(length(Perm::longest_element(4)), 6);
  EXPECT_EQ(sign(P({4, 3, 1, 2})), -1);
  EXPECT_EQ(sign(Perm::longest_element(4)), 1);
}

TEST(Perm, LengthAddsAlongReducedWords) {
  for (const Perm& w : all_perms(4)) {
    Word a = canonical_reduced_word(w);
    EXPECT_EQ(static_cast<int>(a.size()), length(w));
    EXPECT_EQ(from_word(a, 4), w);
  }
}

TEST(Perm, CodeRoundTrip) {
  EXPECT_EQ(code(P({3, 1, 2})), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(code(P({4, 3, 1, 2})), (std::vector<int>{3, 2, 0, 0}));
  EXPECT_EQ(from_code({2, 0, 0}), P({3, 1, 2}));
  EXPECT_EQ(from_code({3, 2, 0, 0}), P({4, 3, 1, 2}));
  EXPECT_EQ(from_code({0, 2}), P({1, 4, 2, 3}));  // rank grows to fit
  for (const Perm& w : all_perms(5)) EXPECT_EQ(from_code(code(w)), w);
}

TEST(Perm, CodeSumsToLength) {
  for (const Perm& w : all_perms(5)) {
    std::vector<int> c = code(w);
    int sum = 0;
    for (int x : c) sum += x;
    EXPECT_EQ(sum, length(w));
  }
}

TEST(Perm, EmbedAndTrim) {
  Perm w = P({3, 1, 2});
  EXPECT_EQ(embed(w, 5), P({3, 1, 2, 4, 5}));
  EXPECT_EQ(trim_fixed(embed(w, 6)), w);
  EXPECT_EQ(trim_fixed(Perm::identity(4)), Perm::identity(1));
  EXPECT_EQ(length(embed(w, 6)), length(w));
}

TEST(Perm, Descents) {
  EXPECT_EQ(descents(P({4, 3, 1, 2})), (std::vector<int>{1, 2}));
  EXPECT_EQ(descents(Perm::identity(4)), (std::vector<int>{}));
  EXPECT_EQ(descents(Perm::longest_element(4)), (std::vector<int>{1, 2, 3}));
}

TEST(Perm, ReducedWordsOfLongestElements) {
  std::vector<Word> r3 = reduced_words(P({3, 2, 1}));
  EXPECT_EQ(r3, (std::vector<Word>{{1, 2, 1}, {2, 1, 2}}));
  EXPECT_EQ(reduced_words(Perm::longest_element(4)).size(), 16u);
}

TEST(Perm, ReducedWordsAllReduceToW) {
  for (const Perm& w : all_perms(4)) {
    std::vector<Word> rw = reduced_words(w);
    EXPECT_FALSE(rw.empty());
    std::set<Word> seen;
    for (const Word& a : rw) {
      EXPECT_EQ(static_cast<int>(a.size()), length(w));
      EXPECT_EQ(from_word(a, 4), w);
      EXPECT_TRUE(seen.insert(a).second);  // no duplicates
    }
    EXPECT_EQ(rw.front(), canonical_reduced_word(w));
    EXPECT_TRUE(std::is_sorted(rw.begin(), rw.end()));
  }
}

TEST(Perm, IsReducedWord) {
  EXPECT_TRUE(is_reduced_word({2, 1, 3, 2, 1}, 4));
  EXPECT_FALSE(is_reduced_word({1, 1}, 4));
  EXPECT_FALSE(is_reduced_word({1, 2, 1, 2}, 3));
}

TEST(Perm, PermIndexMatchesLexOrder) {
  std::vector<Perm> ps = all_perms(5);
  for (size_t k = 0; k < ps.size(); ++k)
    EXPECT_EQ(perm_index(ps[k]), static_cast<long>(k));
}

TEST(Perm, BruhatMatchesEhresmannOracle) {
  std::vector<Perm> ps = all_perms(4);
  for (const Perm& v : ps)
    for (const Perm& w : ps) {
      bool expect = bruhat_leq_oracle(v, w);
      EXPECT_EQ(bruhat_leq(v, w), expect) << to_string(v) << " vs " << to_string(w);
      EXPECT_EQ(bruhat_leq_subword(v, w), expect) << to_string(v) << " vs " << to_string(w);
    }
}

TEST(Perm, BruhatAgreesAcrossMethodsOnRankFive) {
  std::vector<Perm> ps = all_perms(5);
  for (const Perm& v : ps)
    for (const Perm& w : ps)
      ASSERT_EQ(bruhat_leq(v, w), bruhat_leq_subword(v, w));
}

TEST(Perm, BruhatPinnedPairs) {
  EXPECT_TRUE(bruhat_leq(P({3, 1, 2, 4}), P({4, 3, 1, 2})));
  EXPECT_TRUE(bruhat_leq(P({2, 4, 3, 1}), P({3, 4, 2, 1})));
  EXPECT_FALSE(bruhat_leq(P({4, 3, 1, 2}), P({3, 1, 2, 4})));
  EXPECT_TRUE(bruhat_leq(Perm::identity(4), P({1, 3, 4, 2})));
}

TEST(Perm, CoversDownAreCovers) {
  for (const Perm& w : all_perms(4)) {
    for (auto& [v, ab] : bruhat_covers_down(w)) {
      EXPECT_EQ(length(v), length(w) - 1);
      EXPECT_EQ(compose(v, Perm::transposition(ab.first, ab.second, 4)), w);
      EXPECT_TRUE(bruhat_leq(v, w));
    }
    // Every length(w)-1 element below w is among the covers.
    int count = 0;
    for (const Perm& v : all_perms(4))
      if (length(v) == length(w) - 1 && bruhat_leq(v, w)) ++count;
    EXPECT_EQ(count, static_cast<int>(bruhat_covers_down(w).size()));
  }
}

TEST(Perm, CoverTransposition) {
  Perm w = P({3, 2, 1});
  auto r = cover_transposition(w, P({3, 1, 2}));
  EXPECT_EQ(r.kind, CoverRel::Kind::Cover);
  EXPECT_EQ(compose(P({3, 1, 2}), Perm::transposition(r.a, r.b, 3)), w);
  EXPECT_EQ(cover_transposition(w, w).kind, CoverRel::Kind::Equal);
  EXPECT_EQ(cover_transposition(w, Perm::identity(3)).kind, CoverRel::Kind::None);
}

TEST(Perm, ParseAndFormat) {
  EXPECT_EQ(parse_perm("4,3,1,2", 4), P({4, 3, 1, 2}));
  EXPECT_EQ(parse_perm("s:2,1,3,2,1", 4), P({4, 3, 1, 2}));
  EXPECT_EQ(parse_perm("3,1,2", 5), P({3, 1, 2, 4, 5}));
  EXPECT_EQ(to_string(P({4, 3, 1, 2})), "4,3,1,2");
  EXPECT_EQ(to_string(Word{2, 1, 3}), "2,1,3");
  EXPECT_THROW(parse_perm("1,1,2", 3), std::invalid_argument);
  EXPECT_THROW(parse_perm("4,3,1,2", 3), std::invalid_argument);
  for (const Perm& w : all_perms(4)) EXPECT_EQ(parse_perm(to_string(w), 4), w);
}

TEST(Perm, Validation) {
  EXPECT_THROW(Perm(std::vector<int>{1, 3}), std::invalid_argument);
  EXPECT_THROW(Perm(std::vector<int>{0, 1}), std::invalid_argument);
  EXPECT_THROW(Perm::simple(3, 3), std::invalid_argument);
  EXPECT_THROW(compose(Perm::identity(3), Perm::identity(4)), std::invalid_argument);
}

}  // namespace
