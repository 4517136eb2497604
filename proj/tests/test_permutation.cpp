#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hfo/permutation.hpp"

using namespace hfo;

namespace {

permutation perm(std::initializer_list<int> v) { return permutation(std::vector<int>(v)); }

// Independent Baxter oracle straight from the four-index definition:
// no 1<=i<j<k<l<=n with pi[k] < pi[i]+1 = pi[l] < pi[j]  or
//                     pi[j] < pi[i] = pi[l]+1 < pi[k].
bool baxter_oracle(const permutation& p) {
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (p.at(k) < p.at(i) + 1 && p.at(i) + 1 == p.at(l) && p.at(l) < p.at(j)) return false;
          if (p.at(j) < p.at(i) && p.at(i) == p.at(l) + 1 && p.at(i) < p.at(k)) return false;
        }
  return true;
}

// Independent simplicity oracle: check every proper segment's value image.
bool simple_oracle(const permutation& p) {
  const int n = p.size();
  for (int s = 1; s <= n; ++s)
    for (int e = s + 1; e <= n; ++e) {
      if (e - s + 1 == n) continue;
      std::set<int> vals;
      for (int i = s; i <= e; ++i) vals.insert(p.at(i));
      if (*vals.rbegin() - *vals.begin() + 1 == static_cast<int>(vals.size())) return false;
    }
  return true;
}

bool witness_matches(const permutation& text, const permutation& pattern, const std::vector<int>& w) {
  if (static_cast<int>(w.size()) != pattern.size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] >= w[i + 1]) return false;
  for (std::size_t h = 0; h < w.size(); ++h)
    for (std::size_t l = 0; l < w.size(); ++l)
      if ((text.at(w[h]) > text.at(w[l])) != (pattern[static_cast<int>(h)] > pattern[static_cast<int>(l)]))
        return false;
  return true;
}

}  // namespace

TEST_CASE("permutation construction and text form") {
  CHECK(parse_permutation("4 1 3 5 2") == perm({4, 1, 3, 5, 2}));
  CHECK(to_string(perm({4, 1, 3, 5, 2})) == "4 1 3 5 2");
  CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("2 x"), std::invalid_argument);
}

TEST_CASE("pattern containment") {
  auto w = contains_pattern(perm({4, 1, 3, 5, 2}), perm({3, 1, 4, 2}));
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{1, 2, 4, 5});  // the values 4,1,5,2
  CHECK(witness_matches(perm({4, 1, 3, 5, 2}), perm({3, 1, 4, 2}), *w));

  CHECK_FALSE(contains_pattern(perm({1, 2, 3}), perm({2, 1})).has_value());

  auto self = contains_pattern(perm({2, 4, 1, 3}), perm({2, 4, 1, 3}));
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{1, 2, 3, 4});

  // agreement with a brute-force subsequence oracle over a small sweep; any
  // returned witness must order-match
  for (const auto& text : enumerate_class(5, perm_class::all))
    for (const auto& pat : enumerate_class(3, perm_class::all)) {
      bool brute = false;
      for (int a = 1; a <= 5 && !brute; ++a)
        for (int b = a + 1; b <= 5 && !brute; ++b)
          for (int c = b + 1; c <= 5 && !brute; ++c)
            if (witness_matches(text, pat, {a, b, c})) brute = true;
      auto found = contains_pattern(text, pat);
      CHECK(found.has_value() == brute);
      if (found) CHECK(witness_matches(text, pat, *found));
    }
}

TEST_CASE("baxter test agrees with the four-index oracle, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_class(n, perm_class::all))
      CHECK(is_baxter(p) == baxter_oracle(p));
}

TEST_CASE("baxter examples") {
  CHECK_FALSE(is_baxter(perm({2, 4, 1, 3})));
  CHECK(is_baxter(perm({4, 1, 3, 5, 2})));
  CHECK(is_baxter(permutation::identity(1)));
  CHECK(is_baxter(permutation::identity(6)));
  CHECK_FALSE(is_baxter(perm({2, 4, 6, 1, 3, 5})));
}

TEST_CASE("simplicity") {
  CHECK_FALSE(is_simple(perm({3, 4, 2, 1})));
  CHECK(is_simple(perm({4, 1, 3, 5, 2})));
  CHECK(is_simple(perm({1, 2})));
  CHECK(is_simple(permutation::identity(1)));
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_class(n, perm_class::all))
      CHECK(is_simple(p) == simple_oracle(p));
}

TEST_CASE("one-point deletion") {
  CHECK(one_point_deletion(perm({4, 1, 3, 5, 2}), 3) == perm({3, 1, 4, 2}));
  CHECK(one_point_deletion(perm({2, 4, 6, 1, 3, 5}), 1) == perm({3, 5, 1, 2, 4}));
  CHECK(one_point_deletion(perm({1, 2}), 1) == permutation::identity(1));
  CHECK_THROWS_AS(one_point_deletion(permutation::identity(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(one_point_deletion(perm({1, 2}), 3), std::invalid_argument);
}

TEST_CASE("deletion outside a witness preserves it") {
  const auto text = perm({4, 1, 3, 5, 2});
  const auto pat = perm({3, 1, 4, 2});
  const auto w = *contains_pattern(text, pat);  // positions 1,2,4,5
  const int deleted = 3;
  auto after = one_point_deletion(text, deleted);
  std::vector<int> reindexed;
  for (int pos : w) reindexed.push_back(pos > deleted ? pos - 1 : pos);
  CHECK(witness_matches(after, pat, reindexed));
}

TEST_CASE("inflation") {
  CHECK(inflate(perm({4, 1, 3, 5, 2}),
                {perm({1, 2}), perm({1}), perm({1}), perm({1}), perm({1})}) == perm({4, 5, 1, 3, 6, 2}));
  CHECK(inflate(permutation::identity(1), {perm({3, 1, 2})}) == perm({3, 1, 2}));
  CHECK(inflate(perm({1, 2}), {perm({1}), perm({1})}) == perm({1, 2}));
  CHECK_THROWS_AS(inflate(perm({1, 2}), {perm({1})}), std::invalid_argument);
}

TEST_CASE("block decomposition examples") {
  {
    auto d = block_decompose(perm({4, 5, 1, 3, 6, 2}));
    CHECK(d.sigma == perm({4, 1, 3, 5, 2}));
    REQUIRE(d.blocks.size() == 5);
    CHECK(d.blocks[0] == perm({1, 2}));
    for (int i = 1; i < 5; ++i) CHECK(d.blocks[static_cast<std::size_t>(i)] == permutation::identity(1));
  }
  {
    auto d = block_decompose(perm({3, 1, 4, 2}));
    CHECK(d.sigma == perm({3, 1, 4, 2}));
    for (const auto& b : d.blocks) CHECK(b == permutation::identity(1));
  }
  {
    auto d = block_decompose(perm({1, 2, 3}));
    CHECK(d.sigma == perm({1, 2}));
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0] == perm({1, 2}));
    CHECK(d.blocks[1] == permutation::identity(1));
  }
  CHECK_THROWS_AS(block_decompose(permutation::identity(1)), std::invalid_argument);
}

TEST_CASE("decomposition round-trips and respects the skew convention, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& p : enumerate_class(n, perm_class::all)) {
      auto d = block_decompose(p);
      CHECK(is_simple(d.sigma));
      CHECK(d.sigma.size() >= 2);
      CHECK(inflate(d.sigma, d.blocks) == p);
      if (d.sigma.size() == 2 && d.blocks.back().size() >= 2) {
        auto rd = block_decompose(d.blocks.back());
        CHECK(rd.sigma != d.sigma);
      }
    }
}

TEST_CASE("exceptional families") {
  CHECK(exceptional(3, 1) == perm({2, 4, 6, 1, 3, 5}));
  CHECK(exceptional(2, 1) == perm({2, 4, 1, 3}));
  CHECK(exceptional(2, 3) == perm({3, 1, 4, 2}));
  CHECK_THROWS_AS(exceptional(1, 1), std::invalid_argument);

  CHECK(is_exceptional(perm({2, 4, 6, 1, 3, 5})));
  CHECK_FALSE(is_exceptional(perm({4, 1, 3, 5, 2})));
  CHECK(is_exceptional(perm({2, 4, 1, 3})));

  for (int m = 2; m <= 4; ++m)
    for (int fam = 1; fam <= 4; ++fam) {
      auto e = exceptional(m, fam);
      CHECK(e.size() == 2 * m);
      CHECK(is_simple(e));
      // every one-point deletion is non-simple
      for (int idx = 1; idx <= e.size(); ++idx) CHECK_FALSE(is_simple(one_point_deletion(e, idx)));
      // some two-point deletion is simple
      bool found = false;
      for (int a = 1; a <= e.size() && !found; ++a) {
        auto q = one_point_deletion(e, a);
        for (int b = 1; b <= q.size() && !found; ++b)
          if (is_simple(one_point_deletion(q, b))) found = true;
      }
      CHECK(found);
    }
}

TEST_CASE("inverse and reverse") {
  CHECK(inverse(perm({4, 1, 3, 5, 2})) == perm({2, 5, 3, 1, 4}));
  CHECK(inverse(permutation::identity(5)) == permutation::identity(5));
  CHECK(reverse(perm({4, 1, 3, 5, 2})) == perm({2, 5, 3, 1, 4}));
  for (const auto& p : enumerate_class(6, perm_class::all)) {
    CHECK(inverse(inverse(p)) == p);
    CHECK(reverse(reverse(p)) == p);
  }
}

TEST_CASE("baxter closed under inverse and reverse, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : enumerate_class(n, perm_class::all)) {
      const bool b = is_baxter(p);
      CHECK(b == is_baxter(inverse(p)));
      CHECK(b == is_baxter(reverse(p)));
    }
}

TEST_CASE("class enumeration") {
  auto sb5 = enumerate_class(5, perm_class::simple_and_baxter);
  REQUIRE(sb5.size() == 2);
  CHECK(sb5[0] == perm({2, 5, 3, 1, 4}));
  CHECK(sb5[1] == perm({4, 1, 3, 5, 2}));

  CHECK(enumerate_class(3, perm_class::simple).empty());
  CHECK(enumerate_class(4, perm_class::baxter).size() == 22);

  // lexicographic order
  auto all3 = enumerate_class(3, perm_class::all);
  REQUIRE(all3.size() == 6);
  CHECK(all3.front() == perm({1, 2, 3}));
  CHECK(all3.back() == perm({3, 2, 1}));
  CHECK(std::is_sorted(all3.begin(), all3.end()));
}
