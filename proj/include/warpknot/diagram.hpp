#pragma once

// Core data model for knot diagrams given as abstract Gauss sequences.
//
// A diagram is a cyclic sequence of 2n passages; each crossing id in 1..n
// appears exactly twice, once as an over-passage and once as an under-passage.
// Edges are the gaps between consecutive passages: edge i immediately follows
// passage i (0-based, cyclic), so the edge terminating at passage j is edge
// j-1 mod 2n. A base point on edge i starts its traversal at passage i+1.
//
// No embedding is implied here; planar curves live in curve.hpp.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "warpknot/errors.hpp"

namespace warpknot {

enum class strand : std::uint8_t { over, under };

struct passage {
  int crossing_id = 0;  // 1..n
  strand kind = strand::over;

  friend bool operator==(const passage&, const passage&) = default;
};

namespace detail {

// Checks that ids form a perfect pairing 1..n with each id appearing twice.
// Returns n. `txt` names the offending container in error messages.
inline int validate_pairing(const std::vector<int>& ids, const char* txt) {
  if (ids.size() % 2 != 0)
    fail(errc::validation_error, std::string(txt) + ": odd number of passages");
  const int n = static_cast<int>(ids.size() / 2);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (int id : ids) {
    if (id < 1 || id > n)
      fail(errc::validation_error,
           std::string(txt) + ": crossing id " + std::to_string(id) + " outside 1.." +
               std::to_string(n));
    if (++count[static_cast<std::size_t>(id - 1)] > 2)
      fail(errc::validation_error,
           std::string(txt) + ": crossing " + std::to_string(id) + " appears more than twice");
  }
  for (int id = 1; id <= n; ++id)
    if (count[static_cast<std::size_t>(id - 1)] != 2)
      fail(errc::validation_error,
           std::string(txt) + ": crossing " + std::to_string(id) + " does not appear twice");
  return n;
}

}  // namespace detail

// Positions of each crossing's two passages, plus the cross-reference from a
// position to the other passage of the same crossing.
struct passage_index {
  std::vector<std::array<int, 2>> pos;  // [id-1] = {first position, second position}
  std::vector<int> other;               // [position] = position of the partner passage

  template <class Seq>
  static passage_index build(const Seq& ids, int n) {
    passage_index ix;
    ix.pos.assign(static_cast<std::size_t>(n), {-1, -1});
    ix.other.assign(ids.size(), -1);
    for (int p = 0; p < static_cast<int>(ids.size()); ++p) {
      auto& slots = ix.pos[static_cast<std::size_t>(ids[static_cast<std::size_t>(p)] - 1)];
      (slots[0] < 0 ? slots[0] : slots[1]) = p;
    }
    for (const auto& slots : ix.pos) {
      ix.other[static_cast<std::size_t>(slots[0])] = slots[1];
      ix.other[static_cast<std::size_t>(slots[1])] = slots[0];
    }
    return ix;
  }
};

class gauss_diagram {
 public:
  gauss_diagram() = default;  // the crossingless circle, n = 0

  explicit gauss_diagram(std::vector<passage> passages) : passages_(std::move(passages)) {
    std::vector<int> ids;
    ids.reserve(passages_.size());
    for (const auto& p : passages_) ids.push_back(p.crossing_id);
    const int n = detail::validate_pairing(ids, "gauss diagram");
    // Over/Under must pair up at every crossing.
    std::vector<int> over_count(static_cast<std::size_t>(n), 0);
    for (const auto& p : passages_)
      if (p.kind == strand::over) ++over_count[static_cast<std::size_t>(p.crossing_id - 1)];
    for (int id = 1; id <= n; ++id)
      if (over_count[static_cast<std::size_t>(id - 1)] != 1)
        fail(errc::validation_error,
             "crossing " + std::to_string(id) + " is not once-over once-under");
  }

  int crossing_count() const noexcept { return static_cast<int>(passages_.size() / 2); }
  int passage_count() const noexcept { return static_cast<int>(passages_.size()); }
  const std::vector<passage>& passages() const noexcept { return passages_; }
  const passage& at(int position) const { return passages_[static_cast<std::size_t>(position)]; }

  passage_index index() const {
    std::vector<int> ids;
    ids.reserve(passages_.size());
    for (const auto& p : passages_) ids.push_back(p.crossing_id);
    return passage_index::build(ids, crossing_count());
  }

  // Position of the over-passage of crossing id.
  int over_position(int id) const {
    require_crossing(id);
    for (int p = 0; p < passage_count(); ++p)
      if (passages_[static_cast<std::size_t>(p)].crossing_id == id &&
          passages_[static_cast<std::size_t>(p)].kind == strand::over)
        return p;
    fail(errc::internal_inconsistency, "missing over-passage");
  }

  int under_position(int id) const {
    require_crossing(id);
    for (int p = 0; p < passage_count(); ++p)
      if (passages_[static_cast<std::size_t>(p)].crossing_id == id &&
          passages_[static_cast<std::size_t>(p)].kind == strand::under)
        return p;
    fail(errc::internal_inconsistency, "missing under-passage");
  }

  void require_crossing(int id) const {
    if (id < 1 || id > crossing_count())
      fail(errc::unknown_crossing, "crossing " + std::to_string(id) + " not in diagram");
  }

  friend bool operator==(const gauss_diagram&, const gauss_diagram&) = default;

 private:
  std::vector<passage> passages_;
};

class shadow {
 public:
  shadow() = default;

  explicit shadow(std::vector<int> ids) : ids_(std::move(ids)) {
    detail::validate_pairing(ids_, "shadow");
  }

  int crossing_count() const noexcept { return static_cast<int>(ids_.size() / 2); }
  int passage_count() const noexcept { return static_cast<int>(ids_.size()); }
  const std::vector<int>& ids() const noexcept { return ids_; }

  passage_index index() const { return passage_index::build(ids_, crossing_count()); }

  friend bool operator==(const shadow&, const shadow&) = default;

 private:
  std::vector<int> ids_;
};

// A diagram of a spatial arc: same passage data but the sequence is linear,
// not cyclic. An arc with n crossings has 2n+1 edges; edge i precedes
// passage i and edge 2n trails the last passage.
class arc_diagram {
 public:
  arc_diagram() = default;

  explicit arc_diagram(std::vector<passage> passages) : passages_(std::move(passages)) {
    gauss_diagram check(passages_);  // same pairing and over/under constraints
  }

  int crossing_count() const noexcept { return static_cast<int>(passages_.size() / 2); }
  int passage_count() const noexcept { return static_cast<int>(passages_.size()); }
  const std::vector<passage>& passages() const noexcept { return passages_; }

  friend bool operator==(const arc_diagram&, const arc_diagram&) = default;

 private:
  std::vector<passage> passages_;
};

// ---------------------------------------------------------------------------
// Elementary transforms.

// Orientation reversal: passage order reversed, over/under kept. Edge i of D
// corresponds to edge 2n-1-i of the result.
inline gauss_diagram reverse(const gauss_diagram& d) {
  std::vector<passage> v(d.passages().rbegin(), d.passages().rend());
  return gauss_diagram(std::move(v));
}

// Mirror image: every over/under flag flipped, order kept.
inline gauss_diagram mirror(const gauss_diagram& d) {
  std::vector<passage> v = d.passages();
  for (auto& p : v) p.kind = (p.kind == strand::over) ? strand::under : strand::over;
  return gauss_diagram(std::move(v));
}

inline shadow shadow_of(const gauss_diagram& d) {
  std::vector<int> ids;
  ids.reserve(d.passages().size());
  for (const auto& p : d.passages()) ids.push_back(p.crossing_id);
  return shadow(std::move(ids));
}

// State of a shadow: crossing k's first occurrence becomes an over-passage
// iff choice[k-1] is set; the second occurrence gets the complement. The
// 2^n choice vectors enumerate the 2^n states bijectively.
inline gauss_diagram assign_state(const shadow& s, const std::vector<bool>& choice) {
  const int n = s.crossing_count();
  if (static_cast<int>(choice.size()) != n)
    fail(errc::length_mismatch, "choice vector length " + std::to_string(choice.size()) +
                                    " does not match crossing count " + std::to_string(n));
  std::vector<passage> v(s.ids().size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t p = 0; p < s.ids().size(); ++p) {
    const int id = s.ids()[p];
    const bool first = !seen[static_cast<std::size_t>(id - 1)];
    seen[static_cast<std::size_t>(id - 1)] = true;
    const bool over = first == static_cast<bool>(choice[static_cast<std::size_t>(id - 1)]);
    v[p] = passage{id, over ? strand::over : strand::under};
  }
  return gauss_diagram(std::move(v));
}

inline gauss_diagram assign_state_mask(const shadow& s, std::uint64_t mask) {
  const int n = s.crossing_count();
  std::vector<bool> bits(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) bits[static_cast<std::size_t>(k)] = (mask >> k) & 1u;
  return assign_state(s, bits);
}

// Choice vector that reproduces d from its own shadow.
inline std::vector<bool> state_bits(const gauss_diagram& d) {
  const int n = d.crossing_count();
  std::vector<bool> bits(static_cast<std::size_t>(n), false);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& p : d.passages()) {
    const std::size_t k = static_cast<std::size_t>(p.crossing_id - 1);
    if (!seen[k]) {
      seen[k] = true;
      bits[k] = p.kind == strand::over;
    }
  }
  return bits;
}

// Crossing change at p: the two passages of p swap over/under.
inline gauss_diagram crossing_change(const gauss_diagram& d, int crossing_id) {
  d.require_crossing(crossing_id);
  std::vector<passage> v = d.passages();
  for (auto& p : v)
    if (p.crossing_id == crossing_id)
      p.kind = (p.kind == strand::over) ? strand::under : strand::over;
  return gauss_diagram(std::move(v));
}

// Re-encoding of the same diagram starting 2n-k positions later; used by
// canonicalization and well-definedness tests.
inline gauss_diagram rotate_encoding(const gauss_diagram& d, int k) {
  const int m = d.passage_count();
  if (m == 0) return d;
  std::vector<passage> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = d.at((i + k) % m);
  return gauss_diagram(std::move(v));
}

// Renames crossing ids to 1..n in order of first appearance.
inline gauss_diagram relabel_first_appearance(const gauss_diagram& d) {
  const int n = d.crossing_count();
  std::vector<int> name(static_cast<std::size_t>(n), 0);
  int next = 0;
  std::vector<passage> v = d.passages();
  for (auto& p : v) {
    int& slot = name[static_cast<std::size_t>(p.crossing_id - 1)];
    if (slot == 0) slot = ++next;
    p.crossing_id = slot;
  }
  return gauss_diagram(std::move(v));
}

inline shadow rotate_encoding(const shadow& s, int k) {
  const int m = s.passage_count();
  if (m == 0) return s;
  std::vector<int> v(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    v[static_cast<std::size_t>(i)] = s.ids()[static_cast<std::size_t>((i + k) % m)];
  return shadow(std::move(v));
}

inline shadow relabel_first_appearance(const shadow& s) {
  const int n = s.crossing_count();
  std::vector<int> name(static_cast<std::size_t>(n), 0);
  int next = 0;
  std::vector<int> v = s.ids();
  for (auto& id : v) {
    int& slot = name[static_cast<std::size_t>(id - 1)];
    if (slot == 0) slot = ++next;
    id = slot;
  }
  return shadow(std::move(v));
}

}  // namespace warpknot
