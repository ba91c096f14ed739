#pragma once

// Warping degrees and the two diagram polynomials.
//
// Walking along the diagram from a base point, a crossing is warping if its
// first encounter is the under-passage. d(e) is the warping degree for a base
// point on edge e; the warping polynomial W_D sums t^d(e) over all 2n edges.
// Each crossing's weight is t^d(e*) for the edge e* terminating at its
// over-passage, and the warping crossing polynomial X_D sums the weights.
//
// The profile of all 2n edge degrees is computed with one definition walk
// plus the transport rule: moving the base point forward past an over-passage
// raises d by 1 and past an under-passage lowers it by 1 (the passed crossing
// flips between being met over-first and under-first). Tests cross-validate
// this against 2n independent definition walks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "warpknot/diagram.hpp"
#include "warpknot/enumerate.hpp"
#include "warpknot/errors.hpp"
#include "warpknot/polynomial.hpp"

namespace warpknot {

struct edge_degree_profile {
  // degrees[i] = d(edge i); edge i follows passage i. A crossingless diagram
  // has the single-edge profile {0}.
  std::vector<int> degrees;

  int min_degree() const {
    int m = degrees.front();
    for (int d : degrees) m = std::min(m, d);
    return m;
  }
  int max_degree() const {
    int m = degrees.front();
    for (int d : degrees) m = std::max(m, d);
    return m;
  }
};

namespace detail {

// Profile computation over raw passage data. No validation happens here: the
// harness deliberately feeds corrupted sequences through this path to confirm
// the identity checks catch them.
inline void raw_edge_degrees(const std::vector<int>& ids, const std::vector<char>& over,
                             std::vector<int>& degrees) {
  const int m = static_cast<int>(ids.size());
  degrees.assign(static_cast<std::size_t>(m == 0 ? 1 : m), 0);
  if (m == 0) return;
  // Definition walk for the edge before passage 0 (edge m-1).
  int max_id = 0;
  for (int id : ids) max_id = std::max(max_id, id);
  std::vector<char> met(static_cast<std::size_t>(max_id), 0);
  int d = 0;
  for (int p = 0; p < m; ++p) {
    char& flag = met[static_cast<std::size_t>(ids[static_cast<std::size_t>(p)] - 1)];
    if (!flag) {
      flag = 1;
      if (!over[static_cast<std::size_t>(p)]) ++d;
    }
  }
  degrees[static_cast<std::size_t>(m - 1)] = d;
  for (int e = 0; e < m - 1; ++e) {
    d += over[static_cast<std::size_t>(e)] ? 1 : -1;
    degrees[static_cast<std::size_t>(e)] = d;
  }
  // Wrap-around consistency: passing the final passage must return to the
  // starting degree. Holds for valid pairings; corrupted input may break it,
  // which is fine for the raw path.
}

inline void split_raw(const gauss_diagram& d, std::vector<int>& ids, std::vector<char>& over) {
  ids.clear();
  over.clear();
  ids.reserve(d.passages().size());
  over.reserve(d.passages().size());
  for (const auto& p : d.passages()) {
    ids.push_back(p.crossing_id);
    over.push_back(p.kind == strand::over ? 1 : 0);
  }
}

}  // namespace detail

// Number of crossings met under-first when walking forward from the given
// edge through all 2n passages. Accepts edge 0 on the crossingless circle.
inline int warping_degree_at(const gauss_diagram& d, int edge) {
  const int m = d.passage_count();
  if (m == 0) {
    if (edge != 0) fail(errc::index_out_of_range, "circle has the single edge 0");
    return 0;
  }
  if (edge < 0 || edge >= m)
    fail(errc::index_out_of_range, "edge " + std::to_string(edge) + " not in 0.." +
                                       std::to_string(m - 1));
  std::vector<char> met(static_cast<std::size_t>(d.crossing_count()), 0);
  int count = 0;
  for (int k = 1; k <= m; ++k) {
    const auto& p = d.at((edge + k) % m);
    char& flag = met[static_cast<std::size_t>(p.crossing_id - 1)];
    if (!flag) {
      flag = 1;
      if (p.kind == strand::under) ++count;
    }
  }
  return count;
}

inline edge_degree_profile edge_degrees(const gauss_diagram& d) {
  edge_degree_profile prof;
  std::vector<int> ids;
  std::vector<char> over;
  detail::split_raw(d, ids, over);
  detail::raw_edge_degrees(ids, over, prof.degrees);
  return prof;
}

// W_D(t) = sum over edges of t^d(e). The crossingless circle has W = 1.
inline int_polynomial warping_polynomial(const gauss_diagram& d) {
  const auto prof = edge_degrees(d);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(prof.max_degree()) + 1, 0);
  for (int deg : prof.degrees) ++coeffs[static_cast<std::size_t>(deg)];
  return int_polynomial(std::move(coeffs));
}

// t^d(c) with the base point on the edge terminating at the over-passage of c.
inline int_polynomial crossing_weight(const gauss_diagram& d, int crossing_id) {
  d.require_crossing(crossing_id);
  const int m = d.passage_count();
  const int o = d.over_position(crossing_id);
  const auto prof = edge_degrees(d);
  return int_polynomial::monomial(1, prof.degrees[static_cast<std::size_t>((o - 1 + m) % m)]);
}

// X_D(t) = sum of crossing weights; X_D(1) = c(D).
inline int_polynomial warping_crossing_polynomial(const gauss_diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return int_polynomial::zero();
  const int m = d.passage_count();
  const auto prof = edge_degrees(d);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(prof.max_degree()) + 1, 0);
  for (int p = 0; p < m; ++p)
    if (d.at(p).kind == strand::over)
      ++coeffs[static_cast<std::size_t>(prof.degrees[static_cast<std::size_t>((p - 1 + m) % m)])];
  return int_polynomial(std::move(coeffs));
}

// d(D): minimum of d(e) over all edges, i.e. the lowest exponent of W_D.
inline int diagram_warping_degree(const gauss_diagram& d) {
  return edge_degrees(d).min_degree();
}

struct classification {
  bool alternating = false;
  int bridge_count = 0;
  bool one_bridge = false;
};

// A bridge is a maximal cyclic run of consecutive over-passages.
inline classification classify(const gauss_diagram& d) {
  const int m = d.passage_count();
  if (m == 0) fail(errc::empty_diagram, "classification needs at least one crossing");
  classification r;
  r.alternating = true;
  for (int p = 0; p < m; ++p) {
    if (d.at(p).kind == d.at((p + 1) % m).kind) r.alternating = false;
    if (d.at(p).kind == strand::over && d.at((p - 1 + m) % m).kind == strand::under)
      ++r.bridge_count;
  }
  r.one_bridge = r.bridge_count == 1;
  return r;
}

// Splitting of the edge sum at the two passages of crossing p:
//   A = sum of t^d(e) over the edges from the under-passage to the
//       over-passage of p (the edge right after the under-passage through the
//       edge ending at the over-passage),
//   B = sum of t^(d(e)-1) over the complementary arc's edges.
// Together with the changed diagram D' these satisfy
//   X_D - t X_D' = (1-t) A,   X_D' - t X_D = (1-t) B,   X_D + X_D' = A + B.
struct change_partition {
  int_polynomial a;
  int_polynomial b;
};

inline change_partition crossing_change_partition(const gauss_diagram& d, int crossing_id) {
  d.require_crossing(crossing_id);
  const int m = d.passage_count();
  const int u = d.under_position(crossing_id);
  const int o = d.over_position(crossing_id);
  const auto prof = edge_degrees(d);
  std::vector<std::int64_t> ca, cb;
  auto bump = [](std::vector<std::int64_t>& v, int e) {
    if (e >= static_cast<int>(v.size())) v.resize(static_cast<std::size_t>(e) + 1, 0);
    ++v[static_cast<std::size_t>(e)];
  };
  for (int e = u; e != o; e = (e + 1) % m)
    bump(ca, prof.degrees[static_cast<std::size_t>(e)]);
  for (int e = o; e != u; e = (e + 1) % m) {
    const int deg = prof.degrees[static_cast<std::size_t>(e)];
    if (deg < 1)
      fail(errc::internal_inconsistency, "edge on the over-to-under arc has degree 0");
    bump(cb, deg - 1);
  }
  return change_partition{int_polynomial(std::move(ca)), int_polynomial(std::move(cb))};
}

// Shape test for warping crossing polynomials: nonzero, non-negative
// coefficients occupying a contiguous exponent block, and top exponent at
// most f(1) - 1 (the weight-base crossing is never warping, so an n-crossing
// diagram cannot reach exponent n).
inline bool realizability_check(const int_polynomial& f) {
  if (f.is_zero() || !f.all_nonnegative()) return false;
  for (int e = f.lowest_exponent(); e <= f.degree(); ++e)
    if (f.coeff(e) == 0) return false;
  return f.degree() <= static_cast<int>(f.coefficient_sum()) - 1;
}

// Exhaustive search for a diagram with X_D = f among all diagrams with
// n = f(1) crossings. Returns nothing when the search space is exhausted.
inline std::optional<gauss_diagram> realize_search(const int_polynomial& f, int max_n = 6) {
  if (f.is_zero() || !f.all_nonnegative()) return std::nullopt;
  const std::int64_t n64 = f.coefficient_sum();
  if (n64 > max_n)
    fail(errc::too_large, "searching " + std::to_string(n64) + " crossings exceeds limit " +
                              std::to_string(max_n));
  const int n = static_cast<int>(n64);
  if (f.degree() > n - 1) return std::nullopt;  // no diagram can reach that exponent

  std::vector<std::int64_t> target(static_cast<std::size_t>(n), 0);
  for (int e = 0; e <= f.degree(); ++e) target[static_cast<std::size_t>(e)] = f.coeff(e);

  std::optional<gauss_diagram> found;
  std::vector<int> degrees;
  std::vector<char> over(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(n), 0);
  for_each_pairing(n, [&](const std::vector<int>& seq) {
    if (found) return;
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < states && !found; ++mask) {
      std::uint64_t seen = 0;
      for (std::size_t p = 0; p < seq.size(); ++p) {
        const int id = seq[p];
        const std::uint64_t bit = std::uint64_t{1} << (id - 1);
        const bool first = !(seen & bit);
        seen |= bit;
        over[p] = (first == static_cast<bool>((mask >> (id - 1)) & 1u)) ? 1 : 0;
      }
      detail::raw_edge_degrees(seq, over, degrees);
      std::fill(acc.begin(), acc.end(), 0);
      bool ok = true;
      const int m = 2 * n;
      for (int p = 0; p < m && ok; ++p) {
        if (!over[static_cast<std::size_t>(p)]) continue;
        const int deg = degrees[static_cast<std::size_t>((p - 1 + m) % m)];
        if (deg >= n || ++acc[static_cast<std::size_t>(deg)] > target[static_cast<std::size_t>(deg)])
          ok = false;
      }
      if (ok && acc == target) found = gauss_diagram(passages_from_mask(seq, mask));
    }
  });
  return found;
}

// ---------------------------------------------------------------------------
// Spatial arc diagrams. An arc with n crossings has 2n+1 edges; edge i
// precedes passage i. From a base edge the traversal runs to the free end of
// the arc, so a crossing counts toward d(e) only if at least one of its
// passages lies at or after e, and it is warping when the first such passage
// is an under-passage.

struct arc_polynomials_result {
  int_polynomial w;
  int_polynomial x;
};

inline std::vector<int> arc_edge_degrees(const arc_diagram& a) {
  const int m = a.passage_count();
  const auto ix = [&] {
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(m));
    for (const auto& p : a.passages()) ids.push_back(p.crossing_id);
    return passage_index::build(ids, a.crossing_count());
  }();
  std::vector<int> degrees(static_cast<std::size_t>(m) + 1, 0);
  int d = 0;  // degree of the trailing edge is 0
  for (int p = m - 1; p >= 0; --p) {
    const bool under = a.passages()[static_cast<std::size_t>(p)].kind == strand::under;
    if (ix.other[static_cast<std::size_t>(p)] > p)
      d += under ? 1 : -1;  // crossing already counted via its later passage
    else if (under)
      d += 1;  // crossing enters the suffix for the first time
    degrees[static_cast<std::size_t>(p)] = d;
  }
  return degrees;
}

inline arc_polynomials_result arc_polynomials(const arc_diagram& a) {
  const auto degrees = arc_edge_degrees(a);
  std::vector<std::int64_t> w, x;
  auto bump = [](std::vector<std::int64_t>& v, int e) {
    if (e >= static_cast<int>(v.size())) v.resize(static_cast<std::size_t>(e) + 1, 0);
    ++v[static_cast<std::size_t>(e)];
  };
  for (int deg : degrees) bump(w, deg);
  for (int p = 0; p < a.passage_count(); ++p)
    if (a.passages()[static_cast<std::size_t>(p)].kind == strand::over)
      bump(x, degrees[static_cast<std::size_t>(p)]);
  return arc_polynomials_result{int_polynomial(std::move(w)), int_polynomial(std::move(x))};
}

}  // namespace warpknot
