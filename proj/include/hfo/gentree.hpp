#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfo/floorplan.hpp"
#include "hfo/permutation.hpp"

namespace hfo {

/// Skewed generating tree: leaves carry room labels, internal nodes carry
/// simple Baxter permutations with one child per entry. The right child of a
/// node labeled 12 or 21 never repeats the parent label.
struct gen_tree {
  int leaf_label = 0;                 // meaningful for leaves only
  std::optional<permutation> sigma;   // set for internal nodes
  std::vector<gen_tree> children;

  static gen_tree leaf(int label) {
    gen_tree t;
    t.leaf_label = label;
    return t;
  }

  static gen_tree internal(permutation s, std::vector<gen_tree> kids) {
    gen_tree t;
    t.sigma = std::move(s);
    t.children = std::move(kids);
    return t;
  }

  bool is_leaf() const { return !sigma.has_value(); }

  friend bool operator==(const gen_tree& a, const gen_tree& b) {
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.leaf_label == b.leaf_label;
    return *a.sigma == *b.sigma && a.children == b.children;
  }
  friend bool operator!=(const gen_tree& a, const gen_tree& b) { return !(a == b); }
};

namespace detail {
inline bool is_slicing(const permutation& s) {
  return s.size() == 2;
}
inline void collect_leaves(const gen_tree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf_label);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}
}  // namespace detail

/// Structural validation; throws naming the violated rule.
inline void validate_tree(const gen_tree& t) {
  if (t.is_leaf()) {
    if (!t.children.empty()) throw std::invalid_argument("tree: leaf with children");
  } else {
    const auto& s = *t.sigma;
    if (s.size() < 2) throw std::invalid_argument("tree: internal label shorter than 2");
    if (!is_simple(s) || !is_baxter(s))
      throw std::invalid_argument("tree: internal label " + to_string(s) + " is not simple and Baxter");
    if (static_cast<int>(t.children.size()) != s.size())
      throw std::invalid_argument("tree: arity does not match label length");
    if (detail::is_slicing(s)) {
      const auto& right = t.children.back();
      if (!right.is_leaf() && *right.sigma == s)
        throw std::invalid_argument("tree: skew rule violated (right child repeats slicing parent)");
    }
    for (const auto& c : t.children) validate_tree(c);
  }
}

/// Check leaf labels are exactly 1..n on top of the structural rules.
inline void validate_tree_labels(const gen_tree& t) {
  validate_tree(t);
  std::vector<int> leaves;
  detail::collect_leaves(t, leaves);
  std::vector<int> sorted(leaves);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("tree: leaf labels are not exactly 1..n");
}

/// Recursive inflation: the label pattern of the node applied to the child
/// patterns. Leaf labels do not enter; for a tree built from a permutation
/// the labels coincide with the values this reproduces.
inline permutation tree_to_perm(const gen_tree& t) {
  if (t.is_leaf()) return permutation::identity(1);
  std::vector<permutation> parts;
  parts.reserve(t.children.size());
  for (const auto& c : t.children) parts.push_back(tree_to_perm(c));
  return inflate(*t.sigma, parts);
}

namespace detail {
inline gen_tree build_tree(const std::vector<int>& values) {
  if (values.size() == 1) return gen_tree::leaf(values[0]);
  auto d = block_decompose(pattern_of(values));
  std::vector<gen_tree> kids;
  kids.reserve(d.blocks.size());
  std::size_t at = 0;
  for (const auto& b : d.blocks) {
    std::vector<int> part(values.begin() + static_cast<long>(at),
                          values.begin() + static_cast<long>(at + static_cast<std::size_t>(b.size())));
    kids.push_back(build_tree(part));
    at += static_cast<std::size_t>(b.size());
  }
  return gen_tree::internal(std::move(d.sigma), std::move(kids));
}
}  // namespace detail

/// Unique skewed generating tree of a Baxter permutation; leaves carry the
/// permutation's values.
inline gen_tree perm_to_tree(const permutation& p) {
  if (!is_baxter(p)) throw std::invalid_argument("perm_to_tree: input is not Baxter");
  return detail::build_tree(p.values());
}

/// Maximum internal arity; 1 for a bare leaf.
inline int order(const gen_tree& t) {
  if (t.is_leaf()) return 1;
  int best = t.sigma->size();
  for (const auto& c : t.children) best = std::max(best, order(c));
  return best;
}

/// Per-length table of simple Baxter permutations with their reference
/// geometries; room ids inside a geometry equal top-left deletion labels.
class hfo_catalog {
 public:
  explicit hfo_catalog(int max_l) : max_l_(max_l) {
    for (int l = 2; l <= max_l; ++l)
      for (const auto& f : enumerate_mosaic(l)) {
        auto sigma = fp2bp(f);
        if (!is_simple(sigma)) continue;  // fp2bp output is always Baxter
        // relabel rooms by top-left deletion order
        std::map<int, int> tl;
        {
          mosaic_floorplan g = f;
          for (int step = 1; step <= l; ++step) {
            tl[g.top_left_room().id] = step;
            if (step < l) g = top_left_delete(g);
          }
        }
        std::vector<room> rooms;
        for (const auto& r : f.rooms()) {
          room s = r;
          s.id = tl[r.id];
          rooms.push_back(s);
        }
        entries_.emplace(std::move(sigma), mosaic_floorplan::from_rooms(std::move(rooms)));
      }
  }

  int max_length() const { return max_l_; }

  bool contains(const permutation& sigma) const { return entries_.count(sigma) > 0; }

  const mosaic_floorplan& geometry(const permutation& sigma) const {
    auto it = entries_.find(sigma);
    if (it == entries_.end())
      throw std::invalid_argument("catalog: no uniquely-hierarchical operator of length " +
                                  std::to_string(sigma.size()) + " matching " + to_string(sigma) +
                                  " (catalog covers lengths up to " + std::to_string(max_l_) + ")");
    return it->second;
  }

  std::vector<permutation> labels_of_length(int l) const {
    std::vector<permutation> out;
    for (const auto& [sigma, g] : entries_)
      if (sigma.size() == l) out.push_back(sigma);
    return out;
  }

  const std::map<permutation, mosaic_floorplan>& entries() const { return entries_; }

 private:
  int max_l_;
  std::map<permutation, mosaic_floorplan> entries_;
};

inline hfo_catalog build_catalog(int max_l) { return hfo_catalog(max_l); }

namespace detail {

// Replace `host_id` in `parent` by `child`, refining the grid so all
// coordinates stay integral. Renormalization keeps them small.
inline mosaic_floorplan embed(const mosaic_floorplan& parent, int host_id, const mosaic_floorplan& child) {
  const room h = parent.room_by_id(host_id);
  const int cw = child.width(), ch = child.height();
  std::vector<room> out;
  for (const auto& r : parent.rooms()) {
    if (r.id == host_id) continue;
    out.push_back({r.id, r.x1 * cw, r.y1 * ch, r.x2 * cw, r.y2 * ch});
  }
  const int bx = h.x1 * cw, by = h.y1 * ch;
  const int sx = h.x2 - h.x1, sy = h.y2 - h.y1;
  for (const auto& r : child.rooms())
    out.push_back({r.id, bx + r.x1 * sx, by + r.y1 * sy, bx + r.x2 * sx, by + r.y2 * sy});
  return mosaic_floorplan::from_rooms(std::move(out));
}

}  // namespace detail

/// Recursive embedding: materialize each internal label's geometry from the
/// catalog; the child at position i lands in the room whose top-left deletion
/// label is sigma[i] (that room sits at bottom-left deletion position i).
/// Room ids of the result are the tree's leaf labels.
inline mosaic_floorplan tree_to_floorplan(const gen_tree& t, const hfo_catalog& catalog) {
  if (t.is_leaf()) return mosaic_floorplan::single(t.leaf_label);
  const auto& sigma = *t.sigma;
  const auto& skeleton = catalog.geometry(sigma);
  // temporary negative ids so child room ids cannot collide
  std::vector<room> tmp;
  for (const auto& r : skeleton.rooms()) {
    room s = r;
    s.id = -r.id;
    tmp.push_back(s);
  }
  mosaic_floorplan acc = mosaic_floorplan::from_rooms(std::move(tmp));
  for (int i = 1; i <= sigma.size(); ++i) {
    auto child = tree_to_floorplan(t.children[static_cast<std::size_t>(i - 1)], catalog);
    acc = detail::embed(acc, -sigma.at(i), child);
  }
  return acc;
}

/// Parenthesized prefix form, e.g. "(41352 (12 1 2) 3 4 5 6)".
inline std::string tree_to_text(const gen_tree& t) {
  if (t.is_leaf()) return std::to_string(t.leaf_label);
  std::string out = "(";
  const auto& s = *t.sigma;
  if (s.size() <= 9) {
    for (int v : s.values()) out += static_cast<char>('0' + v);
  } else {
    for (int i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s[i]);
    }
  }
  for (const auto& c : t.children) {
    out += ' ';
    out += tree_to_text(c);
  }
  out += ')';
  return out;
}

namespace detail {

inline permutation parse_operator_token(const std::string& tok) {
  std::vector<int> vals;
  if (tok.find(',') != std::string::npos) {
    std::istringstream in(tok);
    std::string part;
    while (std::getline(in, part, ',')) vals.push_back(std::stoi(part));
  } else {
    for (char c : tok) {
      if (c < '1' || c > '9') throw std::invalid_argument("tree: bad operator token '" + tok + "'");
      vals.push_back(c - '0');
    }
  }
  return permutation(std::move(vals));
}

inline gen_tree parse_tree_at(const std::vector<std::string>& toks, std::size_t& at) {
  if (at >= toks.size()) throw std::invalid_argument("tree: unexpected end of input");
  const std::string tok = toks[at++];
  if (tok == "(") {
    if (at >= toks.size()) throw std::invalid_argument("tree: missing operator after '('");
    permutation sigma = parse_operator_token(toks[at++]);
    std::vector<gen_tree> kids;
    while (at < toks.size() && toks[at] != ")") kids.push_back(parse_tree_at(toks, at));
    if (at >= toks.size()) throw std::invalid_argument("tree: missing ')'");
    ++at;  // consume ')'
    return gen_tree::internal(std::move(sigma), std::move(kids));
  }
  if (tok == ")") throw std::invalid_argument("tree: unexpected ')'");
  return gen_tree::leaf(std::stoi(tok));
}

}  // namespace detail

/// Inverse of tree_to_text; validates the parsed tree.
inline gen_tree parse_tree(const std::string& text) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == ')') {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
      toks.push_back(std::string(1, c));
    } else if (c == ' ' || c == '\t' || c == '\n') {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  std::size_t at = 0;
  gen_tree t = detail::parse_tree_at(toks, at);
  if (at != toks.size()) throw std::invalid_argument("tree: trailing tokens");
  validate_tree(t);
  return t;
}

}  // namespace hfo
