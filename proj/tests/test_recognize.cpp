#include <catch_amalgamated.hpp>

#include <set>

#include "hfo/recognize.hpp"

using namespace hfo;

namespace {
permutation perm(std::initializer_list<int> v) { return permutation(std::vector<int>(v)); }
}

TEST_CASE("is_hfo_k examples") {
  CHECK(is_hfo_k(perm({4, 1, 3, 5, 2}), 5));
  CHECK_FALSE(is_hfo_k(perm({4, 1, 3, 5, 2}), 4));
  CHECK(is_hfo_k(permutation::identity(6), 2));
  CHECK_FALSE(is_hfo_k(perm({2, 4, 1, 3}), 5));
  CHECK_THROWS_AS(is_hfo_k(perm({1, 2}), 1), std::invalid_argument);
}

TEST_CASE("min_k examples") {
  CHECK(min_k(perm({4, 1, 3, 5, 2})) == 5);
  CHECK(min_k(perm({1, 2, 3})) == 2);
  CHECK_FALSE(min_k(perm({2, 4, 6, 1, 3, 5})).has_value());
  CHECK(min_k(permutation::identity(1)) == 1);
  CHECK(min_k(perm({4, 5, 1, 3, 6, 2})) == 5);
}

TEST_CASE("characterization oracle examples") {
  for (const auto& p : enumerate_class(5, perm_class::separable)) CHECK(avoids_characterization(p, 2));
  CHECK_FALSE(avoids_characterization(perm({4, 1, 3, 5, 2}), 4));
  CHECK(avoids_characterization(perm({4, 1, 3, 5, 2}), 5));
}

TEST_CASE("recognizers agree with the characterization, n <= 6 here") {
  // the n = 7 sweep lives in the acceptance suite
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_class(n, perm_class::all))
      for (int k = 2; k <= 6; ++k)
        CHECK(is_hfo_k(p, k) == avoids_characterization(p, k));
}

TEST_CASE("monotone in k and consistent with min_k, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_class(n, perm_class::baxter)) {
      int smallest = 0;
      for (int k = 2; k <= n && smallest == 0; ++k)
        if (is_hfo_k(p, k)) smallest = k;
      REQUIRE(smallest > 0);
      CHECK(min_k(p) == smallest);
      for (int k = smallest; k <= n + 1; ++k) CHECK(is_hfo_k(p, k));
    }
}

TEST_CASE("slicing means separable, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_class(n, perm_class::all))
      CHECK(is_hfo_k(p, 2) == (is_baxter(p) && is_separable(p)));
}

TEST_CASE("safe insertion examples") {
  {
    auto out = safe_insertions(perm({4, 1, 3, 5, 2}));
    std::set<permutation> got(out.begin(), out.end());
    std::set<permutation> want{perm({6, 4, 1, 3, 5, 2}), perm({4, 1, 3, 6, 5, 2}), perm({4, 1, 3, 5, 6, 2}),
                               perm({4, 1, 3, 5, 2, 6})};
    CHECK(got == want);
    for (const auto& q : out) CHECK(is_hfo_k(q, 5));
  }
  {
    auto out = safe_insertions(perm({1, 2}));
    std::set<permutation> got(out.begin(), out.end());
    std::set<permutation> want{perm({3, 1, 2}), perm({1, 3, 2}), perm({1, 2, 3})};
    CHECK(got == want);
  }
  CHECK_THROWS_AS(safe_insertions(perm({2, 4, 1, 3})), std::invalid_argument);
}

TEST_CASE("safe insertions stay Baxter and never raise min_k, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_class(n, perm_class::baxter)) {
      const int kp = *min_k(p);
      auto out = safe_insertions(p);
      CHECK(out.size() >= 3);
      for (const auto& q : out) {
        CHECK(is_baxter(q));
        CHECK(*min_k(q) <= std::max(kp, 2));
      }
    }
}

TEST_CASE("iterating safe insertions from the wheel") {
  std::set<permutation> layer{perm({4, 1, 3, 5, 2})};
  long long bound = 1;
  for (int n = 6; n <= 8; ++n) {
    std::set<permutation> next;
    for (const auto& p : layer)
      for (const auto& q : safe_insertions(p)) next.insert(q);
    layer = std::move(next);
    bound *= 3;
    CHECK(static_cast<long long>(layer.size()) >= bound);
    for (const auto& q : layer) CHECK(is_hfo_k(q, 5));
  }
}
