#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfo {

/// One-based permutation of {1..n}, n >= 1. Immutable value type.
class permutation {
 public:
  explicit permutation(std::vector<int> values) : vals_(std::move(values)) {
    if (vals_.empty()) throw std::invalid_argument("permutation: empty value sequence");
    std::vector<char> seen(vals_.size() + 1, 0);
    for (int v : vals_) {
      if (v < 1 || v > static_cast<int>(vals_.size()))
        throw std::invalid_argument("permutation: value out of range 1..n");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("permutation: duplicate value");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return permutation(std::move(v));
  }

  int size() const { return static_cast<int>(vals_.size()); }

  /// Value at 1-based position.
  int at(int pos) const { return vals_[static_cast<std::size_t>(pos - 1)]; }

  /// 0-based access.
  int operator[](int i) const { return vals_[static_cast<std::size_t>(i)]; }

  const std::vector<int>& values() const { return vals_; }

  friend bool operator==(const permutation& a, const permutation& b) { return a.vals_ == b.vals_; }
  friend bool operator!=(const permutation& a, const permutation& b) { return !(a == b); }
  friend bool operator<(const permutation& a, const permutation& b) { return a.vals_ < b.vals_; }

 private:
  std::vector<int> vals_;
};

/// "4 1 3 5 2" -> permutation. Rejects duplicates, gaps, zeros.
inline permutation parse_permutation(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> vals;
  long long v = 0;
  while (in >> v) vals.push_back(static_cast<int>(v));
  if (!in.eof()) throw std::invalid_argument("permutation: non-integer token in \"" + text + "\"");
  return permutation(std::move(vals));
}

inline std::string to_string(const permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Rank-order an arbitrary sequence of distinct integers into a permutation.
inline permutation pattern_of(const std::vector<int>& seq) {
  std::vector<int> sorted(seq);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seq[i]) - sorted.begin()) + 1;
  }
  return permutation(std::move(ranks));
}

/// Positions of each value: result[v] = 1-based position of value v (index 0 unused).
inline std::vector<int> positions_of(const permutation& p) {
  std::vector<int> pos(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int i = 1; i <= p.size(); ++i) pos[static_cast<std::size_t>(p.at(i))] = i;
  return pos;
}

/// Classic pattern containment. Returns a strictly increasing list of 1-based
/// positions whose values order-match `pattern`, or nullopt. Backtracking
/// search; fine for the short patterns this library works with.
inline std::optional<std::vector<int>> contains_pattern(const permutation& text, const permutation& pattern) {
  const int n = text.size();
  const int k = pattern.size();
  if (k > n) return std::nullopt;

  std::vector<int> chosen;  // 1-based positions picked so far
  chosen.reserve(static_cast<std::size_t>(k));

  // order-consistency of a candidate extension against all picked positions
  auto consistent = [&](int pos) {
    const int h = static_cast<int>(chosen.size());  // extending to pattern index h (0-based)
    for (int l = 0; l < h; ++l) {
      const bool text_gt = text.at(pos) > text.at(chosen[static_cast<std::size_t>(l)]);
      const bool pat_gt = pattern[h] > pattern[l];
      if (text_gt != pat_gt) return false;
    }
    return true;
  };

  // depth-first over positions
  auto search = [&](auto&& self, int from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    const int remaining = k - static_cast<int>(chosen.size());
    for (int pos = from; pos <= n - remaining + 1; ++pos) {
      if (!consistent(pos)) continue;
      chosen.push_back(pos);
      if (self(self, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  if (search(search, 1)) return chosen;
  return std::nullopt;
}

/// Baxter test: no 3142/2413 witness whose first and last values differ by 1.
/// O(n^2): for each pair of adjacent values v, v+1, scan the positions strictly
/// between them for the forbidden descent/ascent.
inline bool is_baxter(const permutation& p) {
  const int n = p.size();
  if (n < 4) return true;
  const auto pos = positions_of(p);
  for (int v = 1; v < n; ++v) {
    const int a = pos[static_cast<std::size_t>(v)];
    const int b = pos[static_cast<std::size_t>(v + 1)];
    if (a < b) {
      // 2413 shape: v ... (>v+1) ... (<v) ... v+1
      bool seen_high = false;
      for (int i = a + 1; i < b; ++i) {
        const int x = p.at(i);
        if (x > v + 1) seen_high = true;
        else if (x < v && seen_high) return false;
      }
    } else {
      // 3142 shape: v+1 ... (<v) ... (>v+1) ... v
      bool seen_low = false;
      for (int i = b + 1; i < a; ++i) {
        const int x = p.at(i);
        if (x < v) seen_low = true;
        else if (x > v + 1 && seen_low) return false;
      }
    }
  }
  return true;
}

/// A block: consecutive positions [start, end] (1-based, inclusive) mapped to a
/// contiguous range of values.
struct block {
  int start = 0;
  int end = 0;
};

/// All proper non-singleton blocks (2 <= size <= n-1), by incremental min/max scan.
inline std::vector<block> proper_blocks(const permutation& p) {
  const int n = p.size();
  std::vector<block> out;
  for (int s = 1; s <= n; ++s) {
    int lo = p.at(s), hi = p.at(s);
    for (int e = s + 1; e <= n; ++e) {
      lo = std::min(lo, p.at(e));
      hi = std::max(hi, p.at(e));
      if (e - s + 1 == n) break;  // whole interval is trivial
      if (hi - lo == e - s) out.push_back({s, e});
    }
  }
  return out;
}

/// Simple: every block is a singleton or the whole interval.
inline bool is_simple(const permutation& p) {
  const int n = p.size();
  for (int s = 1; s <= n; ++s) {
    int lo = p.at(s), hi = p.at(s);
    for (int e = s + 1; e <= n; ++e) {
      lo = std::min(lo, p.at(e));
      hi = std::max(hi, p.at(e));
      if (e - s + 1 == n) break;
      if (hi - lo == e - s) return false;
    }
  }
  return true;
}

/// Delete the element at 1-based `index` and rank-order the rest.
inline permutation one_point_deletion(const permutation& p, int index) {
  if (p.size() < 2) throw std::invalid_argument("one_point_deletion: length-1 permutation");
  if (index < 1 || index > p.size()) throw std::invalid_argument("one_point_deletion: index out of range");
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(p.size()) - 1);
  for (int i = 1; i <= p.size(); ++i)
    if (i != index) rest.push_back(p.at(i));
  return pattern_of(rest);
}

/// Wreath product sigma[alpha_1, ..., alpha_m]: block i sits at position i,
/// value ranges ordered as sigma orders its entries.
inline permutation inflate(const permutation& sigma, const std::vector<permutation>& blocks) {
  const int m = sigma.size();
  if (static_cast<int>(blocks.size()) != m)
    throw std::invalid_argument("inflate: arity mismatch between sigma and blocks");
  // offset[i] = values below block i = total size of blocks with smaller sigma rank
  std::vector<int> offset(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    int off = 0;
    for (int j = 0; j < m; ++j)
      if (sigma[j] < sigma[i]) off += blocks[static_cast<std::size_t>(j)].size();
    offset[static_cast<std::size_t>(i)] = off;
  }
  std::vector<int> out;
  for (int i = 0; i < m; ++i)
    for (int v : blocks[static_cast<std::size_t>(i)].values()) out.push_back(v + offset[static_cast<std::size_t>(i)]);
  return permutation(std::move(out));
}

struct decomposition {
  permutation sigma;
  std::vector<permutation> blocks;  // left-to-right by position
};

/// Albert-Atkinson block decomposition. sigma is simple and non-singleton;
/// for sigma in {12, 21} the split point is chosen maximal, so the rightmost
/// block does not itself decompose with the same root (skew convention).
inline decomposition block_decompose(const permutation& p) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("block_decompose: length-1 permutation");

  auto segment_pattern = [&](int s, int e) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(e - s + 1));
    for (int i = s; i <= e; ++i) seq.push_back(p.at(i));
    return pattern_of(seq);
  };

  // sum split: p[1..i] carries values {1..i}; take the last such i
  {
    int split = 0, hi = 0;
    for (int i = 1; i < n; ++i) {
      hi = std::max(hi, p.at(i));
      if (hi == i) split = i;
    }
    if (split > 0)
      return {permutation({1, 2}), {segment_pattern(1, split), segment_pattern(split + 1, n)}};
  }
  // skew split: p[1..i] carries values {n-i+1..n}; take the last such i
  {
    int split = 0, lo = n + 1;
    for (int i = 1; i < n; ++i) {
      lo = std::min(lo, p.at(i));
      if (lo == n - i + 1) split = i;
    }
    if (split > 0)
      return {permutation({2, 1}), {segment_pattern(1, split), segment_pattern(split + 1, n)}};
  }

  if (is_simple(p)) {
    std::vector<permutation> singletons(static_cast<std::size_t>(n), permutation({1}));
    return {p, std::move(singletons)};
  }

  // Neither sum- nor skew-decomposable: maximal proper blocks are pairwise
  // disjoint and give the unique partition.
  auto blocks = proper_blocks(p);
  std::vector<block> maximal;
  for (const auto& b : blocks) {
    bool contained = false;
    for (const auto& c : blocks)
      if ((c.start < b.start && b.end <= c.end) || (c.start <= b.start && b.end < c.end)) {
        contained = true;
        break;
      }
    if (!contained) maximal.push_back(b);
  }
  std::sort(maximal.begin(), maximal.end(), [](const block& a, const block& b) { return a.start < b.start; });

  std::vector<permutation> parts;
  std::vector<int> rep;  // one representative value per part, for the quotient
  int pos = 1;
  for (const auto& b : maximal) {
    if (b.start < pos) throw std::logic_error("block_decompose: overlapping maximal blocks");
    while (pos < b.start) {
      parts.push_back(permutation({1}));
      rep.push_back(p.at(pos));
      ++pos;
    }
    parts.push_back(segment_pattern(b.start, b.end));
    rep.push_back(p.at(b.start));
    pos = b.end + 1;
  }
  while (pos <= n) {
    parts.push_back(permutation({1}));
    rep.push_back(p.at(pos));
    ++pos;
  }
  return {pattern_of(rep), std::move(parts)};
}

/// The four parametric families of exceptional simple permutations, length 2m.
inline permutation exceptional(int m, int family) {
  if (m < 2) throw std::invalid_argument("exceptional: m must be >= 2");
  if (family < 1 || family > 4) throw std::invalid_argument("exceptional: family must be in 1..4");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(2 * m));
  switch (family) {
    case 1:  // 2 4 6 ... (2m) 1 3 5 ... (2m-1)
      for (int i = 1; i <= m; ++i) v.push_back(2 * i);
      for (int i = 1; i <= m; ++i) v.push_back(2 * i - 1);
      break;
    case 2:  // (2m-1)(2m-3)...1 (2m)(2m-2)...2
      for (int i = m; i >= 1; --i) v.push_back(2 * i - 1);
      for (int i = m; i >= 1; --i) v.push_back(2 * i);
      break;
    case 3:  // (m+1) 1 (m+2) 2 ... (2m) m
      for (int i = 1; i <= m; ++i) {
        v.push_back(m + i);
        v.push_back(i);
      }
      break;
    case 4:  // m (2m) (m-1) (2m-1) ... 1 (m+1)
      for (int i = m; i >= 1; --i) {
        v.push_back(i);
        v.push_back(m + i);
      }
      break;
  }
  return permutation(std::move(v));
}

inline bool is_exceptional(const permutation& p) {
  const int n = p.size();
  if (n < 4 || n % 2 != 0) return false;
  const int m = n / 2;
  for (int family = 1; family <= 4; ++family)
    if (p == exceptional(m, family)) return true;
  return false;
}

inline permutation inverse(const permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) inv[static_cast<std::size_t>(p.at(i)) - 1] = i;
  return permutation(std::move(inv));
}

inline permutation reverse(const permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return permutation(std::move(v));
}

/// Separable: avoids 2413 and 3142 as plain patterns.
inline bool is_separable(const permutation& p) {
  return !contains_pattern(p, permutation({2, 4, 1, 3})) && !contains_pattern(p, permutation({3, 1, 4, 2}));
}

enum class perm_class { all, baxter, simple, simple_and_baxter, separable };

/// Brute-force S_n filter, lexicographic order. Intended for n <= 8.
inline std::vector<permutation> enumerate_class(int n, perm_class cls) {
  if (n < 1) throw std::invalid_argument("enumerate_class: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<permutation> out;
  do {
    permutation p(v);
    bool keep = false;
    switch (cls) {
      case perm_class::all: keep = true; break;
      case perm_class::baxter: keep = is_baxter(p); break;
      case perm_class::simple: keep = is_simple(p); break;
      case perm_class::simple_and_baxter: keep = is_simple(p) && is_baxter(p); break;
      case perm_class::separable: keep = is_separable(p); break;
    }
    if (keep) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace hfo
