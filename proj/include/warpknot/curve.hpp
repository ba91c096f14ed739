#pragma once

// Closed transversely intersected plane curves.
//
// A curve is stored as a chirality-signed Gauss sequence plus an outer-face
// marker. The chirality flag of a crossing describes how the strand of the
// second visit crosses the strand of the first visit, measured with the
// curve's reference orientation (the stored sequence order):
//
//   chirality::r  -- second strand passes from the right side of the first
//                    strand to its left side  (cross(u, v) > 0),
//   chirality::l  -- from the left side to the right side (cross(u, v) < 0).
//
// This is exactly the data of the rotation system at each double point. At a
// crossing with visits at positions p1 < p2, the counterclockwise order of
// the four edge-ends (as darts pointing away from the vertex) is
//
//   r:  out1, out2, in1, in2        l:  out1, in2, in1, out2
//
// where out_k is the edge leaving visit k and in_k the edge arriving at it.
// Faces are the orbits of the usual dual walk on darts; a curve embeds in
// the plane (equivalently the sphere) iff the trace yields exactly n+2 faces.
//
// The crossingless circle (n = 0) is modelled with one virtual closed edge,
// index 0, so outer markers stay well formed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "warpknot/diagram.hpp"
#include "warpknot/errors.hpp"

namespace warpknot {

enum class side : std::uint8_t { left, right };
enum class chirality : std::uint8_t { l, r };

inline side opposite(side s) { return s == side::left ? side::right : side::left; }
inline chirality opposite(chirality c) { return c == chirality::l ? chirality::r : chirality::l; }

struct face_structure {
  // faces[f] is the cyclic boundary walk of face f as (edge, side) pairs:
  // the pair (e, left) lies in the face to the left of edge e's direction.
  std::vector<std::vector<std::pair<int, side>>> faces;
  std::vector<std::array<int, 2>> face_of;  // [edge][side as 0/1] -> face id
  int outer_face = -1;                      // set when traced from a marked curve

  int face_count() const noexcept { return static_cast<int>(faces.size()); }
  int face_at(int edge, side s) const {
    return face_of[static_cast<std::size_t>(edge)][s == side::left ? 0 : 1];
  }
};

namespace detail {

// Face trace of the rotation system given by a Gauss sequence with chirality
// flags (flags indexed by crossing id - 1). Does not require the face count
// to be n+2; callers gate on it.
inline face_structure trace_faces(const std::vector<int>& seq,
                                  const std::vector<chirality>& flags) {
  face_structure fs;
  const int m = static_cast<int>(seq.size());
  if (m == 0) {
    fs.faces = {{{0, side::left}}, {{0, side::right}}};
    fs.face_of = {{0, 1}};
    return fs;
  }
  const int n = m / 2;
  const auto ix = passage_index::build(seq, n);

  // Darts: 2e = edge e forward, 2e+1 = edge e backward. ccw[c][0..3] is the
  // counterclockwise order of away-pointing darts at crossing c.
  std::vector<std::array<int, 4>> ccw(static_cast<std::size_t>(n));
  std::vector<int> dart_vertex(static_cast<std::size_t>(2 * m));  // tail crossing of dart
  std::vector<int> dart_slot(static_cast<std::size_t>(2 * m));    // index within ccw list
  for (int c = 0; c < n; ++c) {
    const int p1 = ix.pos[static_cast<std::size_t>(c)][0];
    const int p2 = ix.pos[static_cast<std::size_t>(c)][1];
    const int out1 = 2 * p1;
    const int in1 = 2 * ((p1 - 1 + m) % m) + 1;
    const int out2 = 2 * p2;
    const int in2 = 2 * ((p2 - 1 + m) % m) + 1;
    if (flags[static_cast<std::size_t>(c)] == chirality::r)
      ccw[static_cast<std::size_t>(c)] = {out1, out2, in1, in2};
    else
      ccw[static_cast<std::size_t>(c)] = {out1, in2, in1, out2};
    for (int k = 0; k < 4; ++k) {
      const int d = ccw[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      dart_vertex[static_cast<std::size_t>(d)] = c;
      dart_slot[static_cast<std::size_t>(d)] = k;
    }
  }

  // Orbit of d under "reverse, then next clockwise at the vertex" is the face
  // on the left of d.
  fs.face_of.assign(static_cast<std::size_t>(m), {-1, -1});
  std::vector<int> face_of_dart(static_cast<std::size_t>(2 * m), -1);
  for (int start = 0; start < 2 * m; ++start) {
    if (face_of_dart[static_cast<std::size_t>(start)] >= 0) continue;
    const int f = fs.face_count();
    fs.faces.emplace_back();
    int d = start;
    do {
      face_of_dart[static_cast<std::size_t>(d)] = f;
      const int e = d >> 1;
      const side s = (d & 1) ? side::right : side::left;
      fs.faces.back().emplace_back(e, s);
      fs.face_of[static_cast<std::size_t>(e)][s == side::left ? 0 : 1] = f;
      const int rev = d ^ 1;
      const int c = dart_vertex[static_cast<std::size_t>(rev)];
      const int k = dart_slot[static_cast<std::size_t>(rev)];
      d = ccw[static_cast<std::size_t>(c)][static_cast<std::size_t>((k + 3) % 4)];
    } while (d != start);
  }
  return fs;
}

}  // namespace detail

class planar_curve {
 public:
  planar_curve() : outer_edge_(0), outer_side_(side::right) {}  // ccw circle

  planar_curve(std::vector<int> seq, std::vector<chirality> flags, int outer_edge,
               side outer_side)
      : seq_(std::move(seq)),
        flags_(std::move(flags)),
        outer_edge_(outer_edge),
        outer_side_(outer_side) {
    const int n = detail::validate_pairing(seq_, "planar curve");
    if (static_cast<int>(flags_.size()) != n)
      fail(errc::validation_error, "expected one chirality flag per crossing");
    const auto fs = detail::trace_faces(seq_, flags_);
    if (fs.face_count() != n + 2)
      fail(errc::not_planar, "rotation system yields " + std::to_string(fs.face_count()) +
                                 " faces, expected " + std::to_string(n + 2));
    const int edges = n == 0 ? 1 : 2 * n;
    if (outer_edge_ < 0 || outer_edge_ >= edges)
      fail(errc::bad_outer_face, "outer marker references edge " + std::to_string(outer_edge_));
  }

  int crossing_count() const noexcept { return static_cast<int>(seq_.size() / 2); }
  // Edge count of the underlying 4-valent graph; the crossingless circle
  // counts as a single closed edge.
  int edge_count() const noexcept { return seq_.empty() ? 1 : static_cast<int>(seq_.size()); }
  const std::vector<int>& seq() const noexcept { return seq_; }
  const std::vector<chirality>& flags() const noexcept { return flags_; }
  chirality flag(int crossing_id) const {
    return flags_[static_cast<std::size_t>(crossing_id - 1)];
  }
  int outer_edge() const noexcept { return outer_edge_; }
  side outer_side() const noexcept { return outer_side_; }

  passage_index index() const { return passage_index::build(seq_, crossing_count()); }

  friend bool operator==(const planar_curve&, const planar_curve&) = default;

 private:
  std::vector<int> seq_;
  std::vector<chirality> flags_;
  int outer_edge_;
  side outer_side_;
};

struct based_planar_curve {
  planar_curve curve;
  int base_edge = 0;

  based_planar_curve(planar_curve c, int base) : curve(std::move(c)), base_edge(base) {
    if (base_edge < 0 || base_edge >= curve.edge_count())
      fail(errc::bad_base_edge, "base edge " + std::to_string(base_edge) + " out of range");
  }

  friend bool operator==(const based_planar_curve&, const based_planar_curve&) = default;
};

// ---------------------------------------------------------------------------
// Re-encodings of the same curve.

// Reversal of the reference orientation. The passage order reverses, every
// chirality flag flips (the visit order at each crossing swaps and both
// tangents negate), and edge i becomes edge 2n-2-i with its sides swapped.
inline planar_curve reverse_curve(const planar_curve& c) {
  const int m = static_cast<int>(c.seq().size());
  if (m == 0) return planar_curve({}, {}, 0, opposite(c.outer_side()));
  std::vector<int> seq(c.seq().rbegin(), c.seq().rend());
  std::vector<chirality> flags(c.flags());
  for (auto& f : flags) f = opposite(f);
  const int outer_edge = ((m - 2 - c.outer_edge()) % m + m) % m;
  return planar_curve(std::move(seq), std::move(flags), outer_edge, opposite(c.outer_side()));
}

inline int reversed_edge_index(const planar_curve& c, int edge) {
  const int m = static_cast<int>(c.seq().size());
  if (m == 0) return 0;
  return ((m - 2 - edge) % m + m) % m;
}

// Same curve read from k positions later. A crossing whose two visits end up
// in swapped order gets its chirality flag flipped, since the flag is tied to
// which visit comes first in the encoding.
inline planar_curve rotate_curve_encoding(const planar_curve& c, int k) {
  const int m = static_cast<int>(c.seq().size());
  if (m == 0) return c;
  k = ((k % m) + m) % m;
  std::vector<int> seq(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    seq[static_cast<std::size_t>(i)] = c.seq()[static_cast<std::size_t>((i + k) % m)];
  const auto ix = c.index();
  std::vector<chirality> flags(c.flags());
  for (int id = 1; id <= c.crossing_count(); ++id) {
    const int p1 = ix.pos[static_cast<std::size_t>(id - 1)][0];
    const int p2 = ix.pos[static_cast<std::size_t>(id - 1)][1];
    if ((p1 - k + m) % m > (p2 - k + m) % m)
      flags[static_cast<std::size_t>(id - 1)] = opposite(flags[static_cast<std::size_t>(id - 1)]);
  }
  const int outer_edge = (c.outer_edge() - k + m) % m;
  return planar_curve(std::move(seq), std::move(flags), outer_edge, c.outer_side());
}

// Renames crossing ids to first-appearance order, keeping the embedding.
inline planar_curve relabel_first_appearance(const planar_curve& c) {
  const int n = c.crossing_count();
  std::vector<int> name(static_cast<std::size_t>(n), 0);
  int next = 0;
  std::vector<int> seq = c.seq();
  std::vector<chirality> flags(static_cast<std::size_t>(n), chirality::l);
  for (auto& id : seq) {
    int& slot = name[static_cast<std::size_t>(id - 1)];
    if (slot == 0) {
      slot = ++next;
      flags[static_cast<std::size_t>(slot - 1)] = c.flags()[static_cast<std::size_t>(id - 1)];
    }
    id = slot;
  }
  return planar_curve(std::move(seq), std::move(flags), c.outer_edge(), c.outer_side());
}

}  // namespace warpknot
