#pragma once

// Plane-curve machinery: faces, checkerboard coloring, the induced
// alternating diagram, winding labels, rotation number, positive kinks, and
// the four canonical orientation procedures.
//
// Over/under convention for the induced alternating diagram: at each double
// point, the over strand is the one whose counterclockwise rotation by a
// quarter turn sweeps the two black quadrants. Quadrant colors alternate
// around a vertex, so exactly one strand qualifies. Choosing the opposite
// convention would mirror every induced diagram globally; the alternation
// postcondition holds either way, and the corpus tests pin the behaviour of
// this one. See over_strand_sweeps_black below.
//
// Rotation number: winding labels on faces are propagated from outer = 0
// with the larger label on the left of each oriented edge. Splicing the
// curve at every crossing in the orientation-respecting way yields disjoint
// simple circles; regions of the spliced picture are the faces merged at the
// two quadrants each splice joins. The regions form a tree across circles
// (rooted at the outer region), each circle's sign is the winding label on
// its inner side minus the label on its outer side, and rot is the sum of
// circle signs = (counterclockwise circles) - (clockwise circles).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "warpknot/curve.hpp"
#include "warpknot/diagram.hpp"
#include "warpknot/errors.hpp"
#include "warpknot/warping.hpp"

namespace warpknot {

enum class region_color : std::uint8_t { white, black };

// True when the first-visit strand's counterclockwise quarter turn sweeps
// black; "black" is looked up through the face structure, never guessed from
// the flag alone.
inline constexpr bool over_strand_sweeps_black = true;

inline face_structure compute_faces(const planar_curve& c) {
  face_structure fs = detail::trace_faces(c.seq(), c.flags());
  const int n = c.crossing_count();
  if (fs.face_count() != n + 2)
    fail(errc::not_planar, "face trace gave " + std::to_string(fs.face_count()) +
                               " faces, expected " + std::to_string(n + 2));
  fs.outer_face = fs.face_at(c.outer_edge(), c.outer_side());
  return fs;
}

struct checkerboard_coloring {
  face_structure faces;
  std::vector<region_color> color;  // by face id

  bool is_black(int face) const { return color[static_cast<std::size_t>(face)] == region_color::black; }
  int black_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), region_color::black));
  }
};

namespace detail {

// Proper 2-coloring of the face adjacency graph with the given root white.
inline std::vector<region_color> two_color(const face_structure& fs, int edges, int root) {
  std::vector<int> mark(static_cast<std::size_t>(fs.face_count()), -1);
  mark[static_cast<std::size_t>(root)] = 0;
  std::vector<int> queue{root};
  // adjacency: faces on the two sides of each edge
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(fs.face_count()));
  for (int e = 0; e < edges; ++e) {
    const int l = fs.face_at(e, side::left);
    const int r = fs.face_at(e, side::right);
    adj[static_cast<std::size_t>(l)].push_back(r);
    adj[static_cast<std::size_t>(r)].push_back(l);
  }
  while (!queue.empty()) {
    const int f = queue.back();
    queue.pop_back();
    for (int g : adj[static_cast<std::size_t>(f)]) {
      if (mark[static_cast<std::size_t>(g)] < 0) {
        mark[static_cast<std::size_t>(g)] = 1 - mark[static_cast<std::size_t>(f)];
        queue.push_back(g);
      } else if (mark[static_cast<std::size_t>(g)] == mark[static_cast<std::size_t>(f)]) {
        fail(errc::internal_inconsistency, "face adjacency is not two-colorable");
      }
    }
  }
  std::vector<region_color> colors(static_cast<std::size_t>(fs.face_count()));
  for (std::size_t f = 0; f < colors.size(); ++f) {
    if (mark[f] < 0) fail(errc::internal_inconsistency, "face unreachable in adjacency");
    colors[f] = mark[f] == 0 ? region_color::white : region_color::black;
  }
  return colors;
}

}  // namespace detail

// Checkerboard coloring with the outer (unbounded) region white.
inline checkerboard_coloring checkerboard(const planar_curve& c) {
  checkerboard_coloring out;
  out.faces = compute_faces(c);
  out.color = detail::two_color(out.faces, c.edge_count(), out.faces.outer_face);
  return out;
}

// The alternating diagram a curve induces through its checkerboard coloring.
inline gauss_diagram induced_alternating(const planar_curve& c) {
  const int n = c.crossing_count();
  if (n == 0) fail(errc::no_crossings, "a crossingless curve induces no diagram");
  const auto col = checkerboard(c);
  const int m = 2 * n;
  const auto ix = c.index();
  std::vector<passage> passages(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p)
    passages[static_cast<std::size_t>(p)].crossing_id = c.seq()[static_cast<std::size_t>(p)];
  for (int id = 1; id <= n; ++id) {
    const int p1 = ix.pos[static_cast<std::size_t>(id - 1)][0];
    const int p2 = ix.pos[static_cast<std::size_t>(id - 1)][1];
    // Quadrants swept by the first strand's counterclockwise quarter turn:
    // left of its outgoing edge and right of its incoming edge. Both are the
    // same color; assert it.
    const bool q_out = col.is_black(col.faces.face_at(p1, side::left));
    const bool q_in = col.is_black(col.faces.face_at((p1 - 1 + m) % m, side::right));
    if (q_out != q_in)
      fail(errc::internal_inconsistency, "opposite quadrants disagree in color");
    const bool first_over = q_out == over_strand_sweeps_black;
    passages[static_cast<std::size_t>(p1)].kind = first_over ? strand::over : strand::under;
    passages[static_cast<std::size_t>(p2)].kind = first_over ? strand::under : strand::over;
  }
  gauss_diagram d(std::move(passages));
  if (n >= 2 && !classify(d).alternating)
    fail(errc::internal_inconsistency, "induced diagram is not alternating");
  return d;
}

// Standard sign of a crossing of an over/under assignment on the curve's
// shadow: +1 when the under strand passes the over strand from its right to
// its left. Reversing the whole curve's orientation negates both tangents,
// so the sign does not depend on `orientation`; the parameter is accepted to
// make that explicit at call sites.
inline int crossing_sign(const planar_curve& c, int orientation, const gauss_diagram& d,
                         int crossing_id) {
  if (orientation != 1 && orientation != -1)
    fail(errc::validation_error, "orientation must be +1 or -1");
  d.require_crossing(crossing_id);
  if (d.passage_count() != static_cast<int>(c.seq().size()))
    fail(errc::validation_error, "diagram is not an assignment on this curve's shadow");
  for (std::size_t p = 0; p < c.seq().size(); ++p)
    if (d.passages()[p].crossing_id != c.seq()[p])
      fail(errc::validation_error, "diagram is not an assignment on this curve's shadow");
  const auto ix = c.index();
  const int p1 = ix.pos[static_cast<std::size_t>(crossing_id - 1)][0];
  const bool first_over = d.at(p1).kind == strand::over;
  const bool flag_r = c.flag(crossing_id) == chirality::r;
  return first_over == flag_r ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Winding labels, splice circles and the rotation number.

struct winding_rotation {
  face_structure faces;
  std::vector<int> label;               // winding label per face, outer = 0
  std::vector<std::vector<int>> circles;  // splice circles as edge lists
  std::vector<int> circle_sign;           // +1 ccw, -1 cw
  int rot = 0;
};

namespace detail {

struct face_union {
  std::vector<int> parent;
  explicit face_union(int k) : parent(static_cast<std::size_t>(k)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace detail

inline winding_rotation winding_and_rotation_reference(const planar_curve& c) {
  winding_rotation out;
  out.faces = compute_faces(c);
  const int n = c.crossing_count();
  const int faces = out.faces.face_count();

  // Winding labels: larger on the left of each oriented edge, outer = 0.
  out.label.assign(static_cast<std::size_t>(faces), 0);
  {
    std::vector<char> set(static_cast<std::size_t>(faces), 0);
    set[static_cast<std::size_t>(out.faces.outer_face)] = 1;
    std::vector<int> queue{out.faces.outer_face};
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(faces));
    for (int e = 0; e < c.edge_count(); ++e) {
      const int l = out.faces.face_at(e, side::left);
      const int r = out.faces.face_at(e, side::right);
      adj[static_cast<std::size_t>(l)].emplace_back(r, -1);
      adj[static_cast<std::size_t>(r)].emplace_back(l, +1);
    }
    while (!queue.empty()) {
      const int f = queue.back();
      queue.pop_back();
      for (auto [g, delta] : adj[static_cast<std::size_t>(f)]) {
        const int want = out.label[static_cast<std::size_t>(f)] + delta;
        if (!set[static_cast<std::size_t>(g)]) {
          set[static_cast<std::size_t>(g)] = 1;
          out.label[static_cast<std::size_t>(g)] = want;
          queue.push_back(g);
        } else if (out.label[static_cast<std::size_t>(g)] != want) {
          fail(errc::internal_inconsistency, "winding labels are path-dependent");
        }
      }
    }
  }

  if (n == 0) {
    // One circle; counterclockwise exactly when the unbounded face lies on
    // its right.
    out.circles = {{0}};
    out.circle_sign = {c.outer_side() == side::right ? 1 : -1};
    out.rot = out.circle_sign[0];
    return out;
  }

  const int m = 2 * n;
  const auto ix = c.index();

  // Splice circles: the edge arriving at a passage continues along the edge
  // leaving the partner passage.
  std::vector<int> next_edge(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e)
    next_edge[static_cast<std::size_t>(e)] = ix.other[static_cast<std::size_t>((e + 1) % m)];
  std::vector<int> circle_of(static_cast<std::size_t>(m), -1);
  for (int e = 0; e < m; ++e) {
    if (circle_of[static_cast<std::size_t>(e)] >= 0) continue;
    const int id = static_cast<int>(out.circles.size());
    out.circles.emplace_back();
    int x = e;
    while (circle_of[static_cast<std::size_t>(x)] < 0) {
      circle_of[static_cast<std::size_t>(x)] = id;
      out.circles.back().push_back(x);
      x = next_edge[static_cast<std::size_t>(x)];
    }
  }

  // Regions of the spliced picture: each splice joins the quadrant swept from
  // the incoming to the outgoing edge of each reconnected strand; those are
  // the two opposite quadrants of the first strand (flag r) or of the second
  // strand (flag l).
  detail::face_union regions(faces);
  for (int id = 1; id <= n; ++id) {
    const int p = c.flag(id) == chirality::r ? ix.pos[static_cast<std::size_t>(id - 1)][0]
                                             : ix.pos[static_cast<std::size_t>(id - 1)][1];
    regions.unite(out.faces.face_at(p, side::left),
                  out.faces.face_at((p - 1 + m) % m, side::right));
  }

  // Merged faces must agree on their winding label.
  for (int f = 0; f < faces; ++f)
    if (out.label[static_cast<std::size_t>(f)] !=
        out.label[static_cast<std::size_t>(regions.find(f))])
      fail(errc::internal_inconsistency, "spliced regions carry distinct winding labels");

  const int circle_count = static_cast<int>(out.circles.size());

  // Each circle must see a single region on its left and a single region on
  // its right, all along it.
  std::vector<int> left_region(static_cast<std::size_t>(circle_count), -1);
  std::vector<int> right_region(static_cast<std::size_t>(circle_count), -1);
  for (int k = 0; k < circle_count; ++k) {
    for (int e : out.circles[static_cast<std::size_t>(k)]) {
      const int l = regions.find(out.faces.face_at(e, side::left));
      const int r = regions.find(out.faces.face_at(e, side::right));
      if (left_region[static_cast<std::size_t>(k)] < 0) {
        left_region[static_cast<std::size_t>(k)] = l;
        right_region[static_cast<std::size_t>(k)] = r;
      } else if (left_region[static_cast<std::size_t>(k)] != l ||
                 right_region[static_cast<std::size_t>(k)] != r) {
        fail(errc::internal_inconsistency, "splice circle borders more than one region per side");
      }
    }
  }

  // Region tree rooted at the outer region; the inner side of a circle is the
  // side away from the root.
  const int outer_region = regions.find(out.faces.outer_face);
  std::vector<int> depth(static_cast<std::size_t>(faces), -1);
  depth[static_cast<std::size_t>(outer_region)] = 0;
  std::vector<int> queue{outer_region};
  std::vector<std::vector<std::pair<int, int>>> radj(static_cast<std::size_t>(faces));
  for (int k = 0; k < circle_count; ++k) {
    const int l = left_region[static_cast<std::size_t>(k)];
    const int r = right_region[static_cast<std::size_t>(k)];
    if (l == r)
      fail(errc::internal_inconsistency, "splice circle has the same region on both sides");
    radj[static_cast<std::size_t>(l)].emplace_back(r, k);
    radj[static_cast<std::size_t>(r)].emplace_back(l, k);
  }
  while (!queue.empty()) {
    const int f = queue.back();
    queue.pop_back();
    for (auto [g, k] : radj[static_cast<std::size_t>(f)]) {
      (void)k;
      if (depth[static_cast<std::size_t>(g)] < 0) {
        depth[static_cast<std::size_t>(g)] = depth[static_cast<std::size_t>(f)] + 1;
        queue.push_back(g);
      }
    }
  }

  out.circle_sign.assign(static_cast<std::size_t>(circle_count), 0);
  out.rot = 0;
  for (int k = 0; k < circle_count; ++k) {
    const int l = left_region[static_cast<std::size_t>(k)];
    const int r = right_region[static_cast<std::size_t>(k)];
    const int inner = depth[static_cast<std::size_t>(l)] > depth[static_cast<std::size_t>(r)] ? l : r;
    const int outer = inner == l ? r : l;
    const int s = out.label[static_cast<std::size_t>(inner)] -
                  out.label[static_cast<std::size_t>(outer)];
    if (s != 1 && s != -1)
      fail(errc::internal_inconsistency, "circle sign is not +1 or -1");
    out.circle_sign[static_cast<std::size_t>(k)] = s;
    out.rot += s;
  }
  return out;
}

// Winding labels and rotation number for the curve carrying the requested
// orientation; with orientation -1 the result is expressed on the reversed
// encoding's face structure.
inline winding_rotation winding_and_rotation(const planar_curve& c, int orientation) {
  if (orientation != 1 && orientation != -1)
    fail(errc::validation_error, "orientation must be +1 or -1");
  if (orientation == 1) return winding_and_rotation_reference(c);
  return winding_and_rotation_reference(reverse_curve(c));
}

inline int rotation_number(const planar_curve& c) {
  return winding_and_rotation_reference(c).rot;
}

// ---------------------------------------------------------------------------
// Positive kinks.

struct kink_result {
  planar_curve curve;
  gauss_diagram diagram;
  int new_crossing = 0;
};

// Inserts a one-crossing curl on the given edge, lobe on the side of the
// edge bordering a black face, over/under and chirality chosen so the new
// crossing's sign is +1. The chirality also fixes the lobe side: an l-flagged
// curl carves its lobe out of the left face, an r-flagged one out of the
// right face.
inline kink_result insert_positive_kink(const planar_curve& c, const gauss_diagram& d,
                                        int edge) {
  const int n = c.crossing_count();
  if (n == 0) fail(errc::no_crossings, "kink insertion needs an existing crossing");
  if (edge < 0 || edge >= c.edge_count())
    fail(errc::index_out_of_range, "edge " + std::to_string(edge) + " out of range");
  if (d.passage_count() != static_cast<int>(c.seq().size()))
    fail(errc::validation_error, "diagram is not an assignment on this curve's shadow");

  const auto col = checkerboard(c);
  const bool black_left = col.is_black(col.faces.face_at(edge, side::left));
  const bool black_right = col.is_black(col.faces.face_at(edge, side::right));
  if (black_left == black_right)
    fail(errc::internal_inconsistency, "edge does not separate black from white");
  const chirality fl = black_left ? chirality::l : chirality::r;
  const bool first_over = fl == chirality::r;  // makes the sign +1

  const int k = n + 1;
  std::vector<int> seq = c.seq();
  seq.insert(seq.begin() + edge + 1, {k, k});
  std::vector<chirality> flags = c.flags();
  flags.push_back(fl);

  int outer_edge = c.outer_edge();
  if (outer_edge > edge) outer_edge += 2;
  // outer marker on the split edge keeps its index: the leading piece borders
  // the same faces (the lobe was carved from the black side, outer is white).

  std::vector<passage> passages = d.passages();
  passages.insert(passages.begin() + edge + 1,
                  {passage{k, first_over ? strand::over : strand::under},
                   passage{k, first_over ? strand::under : strand::over}});

  kink_result out{planar_curve(std::move(seq), std::move(flags), outer_edge, c.outer_side()),
                  gauss_diagram(std::move(passages)), k};
  if (crossing_sign(out.curve, 1, out.diagram, k) != 1)
    fail(errc::internal_inconsistency, "inserted kink is not positive");
  return out;
}

// ---------------------------------------------------------------------------
// Canonical orientations. Every procedure returns +1 for the reference
// orientation of the input encoding and -1 for its reversal, and flips its
// answer when the reference orientation is reversed.

struct orientation_choice {
  int sign = 0;
  std::string method;
};

// Even crossing number: orient so the induced alternating diagram D has
// d(D) < d(-D). The two values differ because d(D) + d(-D) = n - 1 is odd.
inline orientation_choice orient_even_warping(const planar_curve& c) {
  const int n = c.crossing_count();
  if (n == 0) fail(errc::no_crossings, "the crossingless circle is out of scope here");
  if (n % 2 != 0) fail(errc::odd_crossing_number, "needs an even crossing number");
  const gauss_diagram d = induced_alternating(c);
  const int fwd = diagram_warping_degree(d);
  const int bwd = diagram_warping_degree(reverse(d));
  if (fwd + bwd != n - 1)
    fail(errc::internal_inconsistency, "alternating equality d(D)+d(-D)=n-1 violated");
  if (fwd == bwd) fail(errc::internal_inconsistency, "warping-degree tie on even diagram");
  return orientation_choice{fwd < bwd ? 1 : -1, "warping"};
}

// Even crossing number: orient so the rotation number is positive. rot is odd
// for even n, so it is never zero.
inline orientation_choice orient_even_rotation(const planar_curve& c) {
  const int n = c.crossing_count();
  if (n % 2 != 0) fail(errc::odd_crossing_number, "needs an even crossing number");
  const int rot = rotation_number(c);
  if (rot % 2 == 0) fail(errc::internal_inconsistency, "even rotation number on even curve");
  return orientation_choice{rot > 0 ? 1 : -1, "rotation"};
}

// Odd crossing number, based: insert a positive kink on the base edge (lobe
// in the black region), then apply the even warping rule to the resulting
// alternating diagram and pull the orientation back.
inline orientation_choice orient_odd_warping(const based_planar_curve& cb) {
  const int n = cb.curve.crossing_count();
  if (n % 2 == 0) fail(errc::even_crossing_number, "needs an odd crossing number");
  const gauss_diagram d = induced_alternating(cb.curve);
  const auto kinked = insert_positive_kink(cb.curve, d, cb.base_edge);
  if (!classify(kinked.diagram).alternating)
    fail(errc::internal_inconsistency, "kinked diagram lost alternation");
  const int fwd = diagram_warping_degree(kinked.diagram);
  const int bwd = diagram_warping_degree(reverse(kinked.diagram));
  if (fwd + bwd != n) fail(errc::internal_inconsistency, "alternating equality violated");
  if (fwd == bwd) fail(errc::internal_inconsistency, "warping-degree tie after kink");
  return orientation_choice{fwd < bwd ? 1 : -1, "odd-warping"};
}

// Odd crossing number, based: orient so the black region lies on the right
// of the base edge. The two sides of an edge always have different colors.
inline orientation_choice orient_odd_black_right(const based_planar_curve& cb) {
  const int n = cb.curve.crossing_count();
  if (n % 2 == 0) fail(errc::even_crossing_number, "needs an odd crossing number");
  const auto col = checkerboard(cb.curve);
  const bool black_right = col.is_black(col.faces.face_at(cb.base_edge, side::right));
  return orientation_choice{black_right ? 1 : -1, "black-right"};
}

// ---------------------------------------------------------------------------
// The sphere variant of the coloring: no outer face; of the two proper
// 2-colorings pick the one with more black faces, well defined because n odd
// makes the face count n+2 odd.

struct sphere_coloring {
  face_structure faces;  // outer_face is -1: no marked face on the sphere
  std::vector<region_color> color;

  int black_count() const {
    return static_cast<int>(std::count(color.begin(), color.end(), region_color::black));
  }
};

inline sphere_coloring sphere_black_majority_coloring(const planar_curve& c) {
  const int n = c.crossing_count();
  if (n % 2 == 0)
    fail(errc::even_crossing_number, "majority coloring needs an odd crossing number");
  sphere_coloring out;
  out.faces = detail::trace_faces(c.seq(), c.flags());
  out.faces.outer_face = -1;
  out.color = detail::two_color(out.faces, c.edge_count(), 0);
  const int blacks = static_cast<int>(
      std::count(out.color.begin(), out.color.end(), region_color::black));
  if (2 * blacks == n + 2) fail(errc::internal_inconsistency, "even split on odd face count");
  if (2 * blacks < n + 2)
    for (auto& col : out.color)
      col = col == region_color::black ? region_color::white : region_color::black;
  return out;
}

}  // namespace warpknot
