#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hfo/permutation.hpp"

namespace hfo {

/// Axis-aligned room on the integer grid. Origin at the top-left corner,
/// x grows rightward, y grows downward.
struct room {
  int id = 0;
  int x1 = 0, y1 = 0, x2 = 0, y2 = 0;
};

/// Rectangular dissection with no empty rooms and no cross junctions.
/// Coordinates are kept normalized: grid lines are exactly the used ones,
/// starting at 0.
class mosaic_floorplan {
 public:
  static mosaic_floorplan single(int id = 1) {
    return mosaic_floorplan(std::vector<room>{{id, 0, 0, 1, 1}});
  }

  /// Validates all invariants; throws std::invalid_argument with a diagnostic
  /// naming the violated one. Coordinates are normalized on the way in.
  static mosaic_floorplan from_rooms(std::vector<room> rooms) { return mosaic_floorplan(std::move(rooms)); }

  int size() const { return static_cast<int>(rooms_.size()); }
  int width() const { return width_; }
  int height() const { return height_; }
  const std::vector<room>& rooms() const { return rooms_; }

  const room& room_by_id(int id) const {
    for (const auto& r : rooms_)
      if (r.id == id) return r;
    throw std::invalid_argument("floorplan: no room with id " + std::to_string(id));
  }

  /// The unique room whose top-left corner is the bounding box's top-left corner.
  const room& top_left_room() const {
    const room* found = nullptr;
    for (const auto& r : rooms_)
      if (r.x1 == 0 && r.y1 == 0) {
        if (found) throw std::logic_error("floorplan: top-left room is not unique");
        found = &r;
      }
    if (!found) throw std::logic_error("floorplan: no top-left room");
    return *found;
  }

  const room& bottom_left_room() const {
    const room* found = nullptr;
    for (const auto& r : rooms_)
      if (r.x1 == 0 && r.y2 == height_) {
        if (found) throw std::logic_error("floorplan: bottom-left room is not unique");
        found = &r;
      }
    if (!found) throw std::logic_error("floorplan: no bottom-left room");
    return *found;
  }

 private:
  explicit mosaic_floorplan(std::vector<room> rooms) : rooms_(std::move(rooms)) {
    normalize();
    validate();
  }

  void normalize() {
    std::vector<int> xs, ys;
    for (const auto& r : rooms_) {
      xs.push_back(r.x1);
      xs.push_back(r.x2);
      ys.push_back(r.y1);
      ys.push_back(r.y2);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    auto xi = [&](int x) { return static_cast<int>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin()); };
    auto yi = [&](int y) { return static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin()); };
    for (auto& r : rooms_) {
      r.x1 = xi(r.x1);
      r.x2 = xi(r.x2);
      r.y1 = yi(r.y1);
      r.y2 = yi(r.y2);
    }
    width_ = static_cast<int>(xs.size()) - 1;
    height_ = static_cast<int>(ys.size()) - 1;
    std::sort(rooms_.begin(), rooms_.end(), [](const room& a, const room& b) { return a.id < b.id; });
  }

  void validate() const {
    const int n = static_cast<int>(rooms_.size());
    if (n < 1) throw std::invalid_argument("floorplan: no rooms");
    std::set<int> ids;
    for (const auto& r : rooms_) ids.insert(r.id);
    if (static_cast<int>(ids.size()) != n) throw std::invalid_argument("floorplan: duplicate room ids");
    long long area = 0;
    for (const auto& r : rooms_) {
      if (!(r.x1 < r.x2 && r.y1 < r.y2))
        throw std::invalid_argument("floorplan: degenerate room extent (id " + std::to_string(r.id) + ")");
      if (r.x1 < 0 || r.y1 < 0 || r.x2 > width_ || r.y2 > height_)
        throw std::invalid_argument("floorplan: room outside bounding rectangle (id " + std::to_string(r.id) + ")");
      area += static_cast<long long>(r.x2 - r.x1) * (r.y2 - r.y1);
    }
    for (std::size_t i = 0; i < rooms_.size(); ++i)
      for (std::size_t j = i + 1; j < rooms_.size(); ++j) {
        const auto& a = rooms_[i];
        const auto& b = rooms_[j];
        if (a.x1 < b.x2 && b.x1 < a.x2 && a.y1 < b.y2 && b.y1 < a.y2)
          throw std::invalid_argument("floorplan: rooms overlap (ids " + std::to_string(a.id) + ", " +
                                      std::to_string(b.id) + ")");
      }
    if (area != static_cast<long long>(width_) * height_)
      throw std::invalid_argument("floorplan: rooms do not tile the bounding rectangle (empty room)");
    // no interior point may be a corner of four rooms
    std::map<std::pair<int, int>, int> corner_count;
    for (const auto& r : rooms_) {
      ++corner_count[{r.x1, r.y1}];
      ++corner_count[{r.x2, r.y1}];
      ++corner_count[{r.x1, r.y2}];
      ++corner_count[{r.x2, r.y2}];
    }
    for (const auto& [pt, cnt] : corner_count) {
      const bool interior = pt.first > 0 && pt.first < width_ && pt.second > 0 && pt.second < height_;
      if (interior && cnt == 4)
        throw std::invalid_argument("floorplan: cross junction at (" + std::to_string(pt.first) + ", " +
                                    std::to_string(pt.second) + ")");
    }
  }

  std::vector<room> rooms_;
  int width_ = 0;
  int height_ = 0;
};

/// Remove the top-left room: if the vertical wall through its bottom-right
/// corner continues downward, its bottom edge shifts up (rooms below expand);
/// otherwise its right edge shifts left (rooms to the right expand).
inline mosaic_floorplan top_left_delete(const mosaic_floorplan& f) {
  if (f.size() == 1) throw std::invalid_argument("top_left_delete: floorplan has a single room");
  const room b = f.top_left_room();
  bool shift_bottom_up;
  if (b.x2 == f.width()) {
    shift_bottom_up = true;
  } else if (b.y2 == f.height()) {
    shift_bottom_up = false;
  } else {
    const room* below = nullptr;
    for (const auto& r : f.rooms())
      if (r.y1 == b.y2 && r.x1 < b.x2 && r.x2 >= b.x2) below = &r;
    if (!below) throw std::logic_error("top_left_delete: no room below the corner");
    shift_bottom_up = (below->x2 == b.x2);
  }
  std::vector<room> out;
  for (const auto& r : f.rooms()) {
    if (r.id == b.id) continue;
    room s = r;
    if (shift_bottom_up) {
      if (s.y1 == b.y2 && s.x2 <= b.x2) s.y1 = 0;
    } else {
      if (s.x1 == b.x2 && s.y2 <= b.y2) s.x1 = 0;
    }
    out.push_back(s);
  }
  return mosaic_floorplan::from_rooms(std::move(out));
}

/// Mirror-symmetric deletion at the bottom-left corner.
inline mosaic_floorplan bottom_left_delete(const mosaic_floorplan& f) {
  if (f.size() == 1) throw std::invalid_argument("bottom_left_delete: floorplan has a single room");
  const room b = f.bottom_left_room();
  bool shift_top_down;
  if (b.x2 == f.width()) {
    shift_top_down = true;
  } else if (b.y1 == 0) {
    shift_top_down = false;
  } else {
    const room* above = nullptr;
    for (const auto& r : f.rooms())
      if (r.y2 == b.y1 && r.x1 < b.x2 && r.x2 >= b.x2) above = &r;
    if (!above) throw std::logic_error("bottom_left_delete: no room above the corner");
    shift_top_down = (above->x2 == b.x2);
  }
  std::vector<room> out;
  for (const auto& r : f.rooms()) {
    if (r.id == b.id) continue;
    room s = r;
    if (shift_top_down) {
      if (s.y2 == b.y1 && s.x2 <= b.x2) s.y2 = f.height();
    } else {
      if (s.x1 == b.x2 && s.y1 >= b.y1) s.x1 = 0;
    }
    out.push_back(s);
  }
  return mosaic_floorplan::from_rooms(std::move(out));
}

/// Abe-label of a mosaic floorplan: rooms labeled in top-left deletion order,
/// labels read in bottom-left deletion order.
inline permutation fp2bp(const mosaic_floorplan& f) {
  const int n = f.size();
  std::map<int, int> label;  // room id -> top-left deletion label
  {
    mosaic_floorplan g = f;
    for (int step = 1; step <= n; ++step) {
      label[g.top_left_room().id] = step;
      if (step < n) g = top_left_delete(g);
    }
  }
  std::vector<int> seq;
  {
    mosaic_floorplan g = f;
    for (int step = 1; step <= n; ++step) {
      seq.push_back(label[g.bottom_left_room().id]);
      if (step < n) g = bottom_left_delete(g);
    }
  }
  return permutation(std::move(seq));
}

/// Exact inverse of top_left_delete. `from_top` inserts a room hugging the
/// top wall whose right edge sits on the `captured`-th top-wall junction
/// (or the right boundary when captured == junction count); `from_left`
/// is the symmetric choice along the left wall.
struct insertion_choice {
  bool from_top = true;
  int captured = 0;
};

inline std::vector<int> top_wall_junctions(const mosaic_floorplan& f) {
  std::set<int> xs;
  for (const auto& r : f.rooms())
    if (r.y1 == 0 && r.x1 > 0) xs.insert(r.x1);
  return {xs.begin(), xs.end()};
}

inline std::vector<int> left_wall_junctions(const mosaic_floorplan& f) {
  std::set<int> ys;
  for (const auto& r : f.rooms())
    if (r.x1 == 0 && r.y1 > 0) ys.insert(r.y1);
  return {ys.begin(), ys.end()};
}

inline mosaic_floorplan insert_top_left(const mosaic_floorplan& f, const insertion_choice& c) {
  int new_id = 1;
  for (const auto& r : f.rooms()) new_id = std::max(new_id, r.id + 1);
  std::vector<room> out;
  if (c.from_top) {
    const auto jx = top_wall_junctions(f);
    if (c.captured < 0 || c.captured > static_cast<int>(jx.size()))
      throw std::invalid_argument("insert_top_left: captured out of range for from-top");
    const int far_edge =
        c.captured == static_cast<int>(jx.size()) ? f.width() : jx[static_cast<std::size_t>(c.captured)];
    for (const auto& r : f.rooms()) {
      room s = r;
      s.y1 = 2 * s.y1;
      s.y2 = 2 * s.y2;
      if (r.y1 == 0 && r.x2 <= far_edge) s.y1 = 1;
      out.push_back(s);
    }
    out.push_back({new_id, 0, 0, far_edge, 1});
  } else {
    const auto jy = left_wall_junctions(f);
    if (c.captured < 0 || c.captured > static_cast<int>(jy.size()))
      throw std::invalid_argument("insert_top_left: captured out of range for from-left");
    const int far_edge =
        c.captured == static_cast<int>(jy.size()) ? f.height() : jy[static_cast<std::size_t>(c.captured)];
    for (const auto& r : f.rooms()) {
      room s = r;
      s.x1 = 2 * s.x1;
      s.x2 = 2 * s.x2;
      if (r.x1 == 0 && r.y2 <= far_edge) s.x1 = 1;
      out.push_back(s);
    }
    out.push_back({new_id, 0, 0, 1, far_edge});
  }
  return mosaic_floorplan::from_rooms(std::move(out));
}

inline std::vector<insertion_choice> enumerate_insertions(const mosaic_floorplan& f) {
  std::vector<insertion_choice> out;
  const int t_top = static_cast<int>(top_wall_junctions(f).size());
  for (int j = 0; j <= t_top; ++j) out.push_back({true, j});
  const int t_left = static_cast<int>(left_wall_junctions(f).size());
  for (int j = 0; j <= t_left; ++j) out.push_back({false, j});
  return out;
}

/// One representative per equivalence class, sorted by Abe-label. Each class
/// arises from exactly one (parent class, insertion choice) pair, so level
/// BFS needs no deduplication. Intended for n <= 8.
inline std::vector<mosaic_floorplan> enumerate_mosaic(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_mosaic: n must be >= 1");
  std::vector<mosaic_floorplan> level{mosaic_floorplan::single()};
  for (int m = 2; m <= n; ++m) {
    std::vector<mosaic_floorplan> next;
    for (const auto& f : level)
      for (const auto& c : enumerate_insertions(f)) next.push_back(insert_top_left(f, c));
    level = std::move(next);
  }
  std::vector<std::pair<permutation, std::size_t>> keyed;
  for (std::size_t i = 0; i < level.size(); ++i) keyed.emplace_back(fp2bp(level[i]), i);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<mosaic_floorplan> out;
  out.reserve(level.size());
  for (const auto& [key, idx] : keyed) out.push_back(std::move(level[idx]));
  return out;
}

enum class transform_op { mirror_h, mirror_v, rotate_cw };

/// mirror_h reflects across the horizontal axis (flips above/below),
/// mirror_v across the vertical axis (flips left/right), rotate_cw turns
/// the floorplan 90 degrees clockwise.
inline mosaic_floorplan transform(const mosaic_floorplan& f, transform_op op) {
  std::vector<room> out;
  const int w = f.width(), h = f.height();
  for (const auto& r : f.rooms()) {
    room s = r;
    switch (op) {
      case transform_op::mirror_h:
        s.y1 = h - r.y2;
        s.y2 = h - r.y1;
        break;
      case transform_op::mirror_v:
        s.x1 = w - r.x2;
        s.x2 = w - r.x1;
        break;
      case transform_op::rotate_cw:
        s.x1 = h - r.y2;
        s.x2 = h - r.y1;
        s.y1 = r.x1;
        s.y2 = r.x2;
        break;
    }
    out.push_back(s);
  }
  return mosaic_floorplan::from_rooms(std::move(out));
}

/// Equivalence is Abe-label equality.
inline bool equivalent(const mosaic_floorplan& f, const mosaic_floorplan& g) { return fp2bp(f) == fp2bp(g); }

enum class seg_dir { top, left, right, bottom };

/// Incidence of a maximal segment supporting a room from one direction.
struct seg_room_relation {
  int segment = 0;  // index into the maximal-segment list, horizontals first
  int room_id = 0;
  seg_dir dir = seg_dir::top;
};

namespace detail {

struct segment {
  bool horizontal = true;
  int fixed = 0;  // y for horizontal, x for vertical
  int from = 0, to = 0;
};

inline std::vector<segment> maximal_segments(const mosaic_floorplan& f) {
  auto collect = [](std::vector<std::pair<int, std::pair<int, int>>> edges, bool horizontal) {
    std::sort(edges.begin(), edges.end());
    std::vector<segment> segs;
    for (std::size_t i = 0; i < edges.size();) {
      const int fixed = edges[i].first;
      int from = edges[i].second.first, to = edges[i].second.second;
      std::size_t j = i + 1;
      for (; j < edges.size() && edges[j].first == fixed && edges[j].second.first <= to; ++j)
        to = std::max(to, edges[j].second.second);
      segs.push_back({horizontal, fixed, from, to});
      i = j;
    }
    return segs;
  };
  std::vector<std::pair<int, std::pair<int, int>>> h_edges, v_edges;
  for (const auto& r : f.rooms()) {
    h_edges.push_back({r.y1, {r.x1, r.x2}});
    h_edges.push_back({r.y2, {r.x1, r.x2}});
    v_edges.push_back({r.x1, {r.y1, r.y2}});
    v_edges.push_back({r.x2, {r.y1, r.y2}});
  }
  auto segs = collect(std::move(h_edges), true);
  auto vsegs = collect(std::move(v_edges), false);
  segs.insert(segs.end(), vsegs.begin(), vsegs.end());
  return segs;
}

}  // namespace detail

/// The complete seg-room relation set over maximal segments.
inline std::vector<seg_room_relation> seg_room_relations(const mosaic_floorplan& f) {
  const auto segs = detail::maximal_segments(f);
  auto find_seg = [&](bool horizontal, int fixed, int from, int to) {
    for (std::size_t i = 0; i < segs.size(); ++i)
      if (segs[i].horizontal == horizontal && segs[i].fixed == fixed && segs[i].from <= from && to <= segs[i].to)
        return static_cast<int>(i);
    throw std::logic_error("seg_room_relations: edge not covered by a maximal segment");
  };
  std::vector<seg_room_relation> out;
  for (const auto& r : f.rooms()) {
    out.push_back({find_seg(true, r.y1, r.x1, r.x2), r.id, seg_dir::top});
    out.push_back({find_seg(true, r.y2, r.x1, r.x2), r.id, seg_dir::bottom});
    out.push_back({find_seg(false, r.x1, r.y1, r.y2), r.id, seg_dir::left});
    out.push_back({find_seg(false, r.x2, r.y1, r.y2), r.id, seg_dir::right});
  }
  return out;
}

/// Canonical signature of the seg-room relation set: rooms renamed by their
/// top-left deletion labels, each segment reduced to its sorted support list,
/// segment list sorted. Two floorplans are relation-isomorphic iff their
/// signatures are equal.
inline std::vector<std::vector<std::pair<int, int>>> relation_signature(const mosaic_floorplan& f) {
  std::map<int, int> tl_label;
  {
    mosaic_floorplan g = f;
    for (int step = 1; step <= f.size(); ++step) {
      tl_label[g.top_left_room().id] = step;
      if (step < f.size()) g = top_left_delete(g);
    }
  }
  std::map<int, std::vector<std::pair<int, int>>> per_segment;
  for (const auto& rel : seg_room_relations(f))
    per_segment[rel.segment].push_back({tl_label[rel.room_id], static_cast<int>(rel.dir)});
  std::vector<std::vector<std::pair<int, int>>> sig;
  for (auto& [seg, support] : per_segment) {
    std::sort(support.begin(), support.end());
    sig.push_back(std::move(support));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace hfo
