#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hfo/permutation.hpp"

namespace hfo {

/// Stack entry of the recognition scan: a contiguous value range lo..hi
/// covering the positions span [pos_start, pos_end].
struct range_stack_entry {
  int lo = 0;
  int hi = 0;
  int pos_start = 0;
  int pos_end = 0;
};

namespace detail {

// Rank pattern of the top j stack entries (stack order = position order).
// Entries hold pairwise disjoint ranges, so the lo values induce it.
inline permutation top_pattern(const std::vector<range_stack_entry>& stack, int j) {
  std::vector<int> rep;
  rep.reserve(static_cast<std::size_t>(j));
  for (std::size_t i = stack.size() - static_cast<std::size_t>(j); i < stack.size(); ++i)
    rep.push_back(stack[i].lo);
  return pattern_of(rep);
}

inline void merge_top(std::vector<range_stack_entry>& stack, int j, int lo, int hi) {
  const int pos_start = stack[stack.size() - static_cast<std::size_t>(j)].pos_start;
  const int pos_end = stack.back().pos_end;
  stack.resize(stack.size() - static_cast<std::size_t>(j));
  stack.push_back({lo, hi, pos_start, pos_end});
#ifndef NDEBUG
  // entries hold pairwise disjoint contiguous ranges
  for (std::size_t a = 0; a + 1 < stack.size(); ++a)
    assert(stack[a].hi < stack[a + 1].lo || stack[a + 1].hi < stack[a].lo);
#endif
}

}  // namespace detail

/// Left-to-right scan with a range stack: push each value, then repeatedly
/// merge the least j <= k top entries that form a contiguous range whose rank
/// pattern is Baxter. Accepts iff one entry remains. O(n) for fixed k.
inline bool is_hfo_k(const permutation& p, int k) {
  if (k < 2) throw std::invalid_argument("is_hfo_k: k must be >= 2");
  const int n = p.size();
  if (n == 1) return true;
  std::vector<range_stack_entry> stack;
  stack.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    stack.push_back({p.at(i), p.at(i), i, i});
    bool merged = true;
    while (merged) {
      merged = false;
      const int jmax = std::min<int>(k, static_cast<int>(stack.size()));
      const std::size_t top = stack.size() - 1;
      int lo = stack[top].lo, hi = stack[top].hi;
      long long count = static_cast<long long>(hi) - lo + 1;
      for (int j = 2; j <= jmax; ++j) {
        const auto& e = stack[top - static_cast<std::size_t>(j) + 1];
        lo = std::min(lo, e.lo);
        hi = std::max(hi, e.hi);
        count += e.hi - e.lo + 1;
        if (static_cast<long long>(hi) - lo + 1 != count) continue;
        if (!is_baxter(detail::top_pattern(stack, j))) continue;
        detail::merge_top(stack, j, lo, hi);
        merged = true;
        break;
      }
    }
  }
  return stack.size() == 1;
}

/// Minimum k for which p is HFO_k: nullopt if p is not Baxter, 1 for the
/// singleton, else the largest merge arity of the unbounded-stack scan (the
/// skewed generating tree is unique, so least-j merges reproduce its nodes).
/// The Baxter pre-check is O(n^2); the scan itself is O(n^2).
inline std::optional<int> min_k(const permutation& p) {
  if (!is_baxter(p)) return std::nullopt;
  const int n = p.size();
  if (n == 1) return 1;
  std::vector<range_stack_entry> stack;
  stack.reserve(static_cast<std::size_t>(n));
  int max_arity = 2;
  for (int i = 1; i <= n; ++i) {
    stack.push_back({p.at(i), p.at(i), i, i});
    bool merged = true;
    while (merged) {
      merged = false;
      const std::size_t top = stack.size() - 1;
      int lo = stack[top].lo, hi = stack[top].hi;
      long long count = static_cast<long long>(hi) - lo + 1;
      for (int j = 2; j <= static_cast<int>(stack.size()); ++j) {
        const auto& e = stack[top - static_cast<std::size_t>(j) + 1];
        lo = std::min(lo, e.lo);
        hi = std::max(hi, e.hi);
        count += e.hi - e.lo + 1;
        if (static_cast<long long>(hi) - lo + 1 != count) continue;
        // consecutive positions over a contiguous value range form a block of
        // the Baxter input, so the quotient pattern is Baxter; merge directly
        detail::merge_top(stack, j, lo, hi);
        max_arity = std::max(max_arity, j);
        merged = true;
        break;
      }
    }
  }
  if (stack.size() != 1) throw std::logic_error("min_k: Baxter input did not reduce to a single range");
  return max_arity;
}

/// Characterization oracle: Baxter, avoiding simple patterns of length k+1 and
/// exceptional patterns of length k+2.
inline bool avoids_characterization(const permutation& p, int k) {
  if (k < 2) throw std::invalid_argument("avoids_characterization: k must be >= 2");
  if (!is_baxter(p)) return false;
  if (p.size() > k) {
    for (const auto& s : enumerate_class(k + 1, perm_class::simple))
      if (contains_pattern(p, s)) return false;
    if ((k + 2) % 2 == 0 && k + 2 >= 4) {
      const int m = (k + 2) / 2;
      std::vector<permutation> exc;
      for (int f = 1; f <= 4; ++f) {
        auto e = exceptional(m, f);
        if (std::find(exc.begin(), exc.end(), e) == exc.end()) exc.push_back(std::move(e));
      }
      for (const auto& e : exc)
        if (contains_pattern(p, e)) return false;
    }
  }
  return true;
}

/// Insert value n+1 at the four safe sites (before first, after last, before
/// the position of n, after it), deduplicated. Input must be Baxter.
inline std::vector<permutation> safe_insertions(const permutation& p) {
  if (!is_baxter(p)) throw std::invalid_argument("safe_insertions: input is not Baxter");
  const int n = p.size();
  int pos_n = 0;
  for (int i = 1; i <= n; ++i)
    if (p.at(i) == n) pos_n = i;

  auto insert_at = [&](int gap) {  // gap in 0..n: new value goes after `gap` old elements
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= gap; ++i) v.push_back(p.at(i));
    v.push_back(n + 1);
    for (int i = gap + 1; i <= n; ++i) v.push_back(p.at(i));
    return permutation(std::move(v));
  };

  std::vector<permutation> out;
  for (int gap : {0, n, pos_n - 1, pos_n}) {
    auto q = insert_at(gap);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

}  // namespace hfo
