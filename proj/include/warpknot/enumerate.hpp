#pragma once

// Deterministic generators for the exhaustive and randomized corpora used by
// the verification harness. Nothing here is checked in as data; every corpus
// is regenerated from these routines.
//
// Gauss pairings are emitted in first-appearance normal form (crossing ids
// named 1..n in order of first visit), which already deduplicates relabeling.
// Shadows and flagged curve maps are additionally deduplicated up to cyclic
// rotation of the encoding.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "warpknot/curve.hpp"
#include "warpknot/diagram.hpp"

namespace warpknot {

// All pairings of 2n positions, as id sequences in normal form. f receives a
// reusable buffer; copy if you keep it. There are (2n-1)!! of them.
template <class F>
void for_each_pairing(int n, F&& f) {
  std::vector<int> seq(static_cast<std::size_t>(2 * n), 0);
  int next_id = 0;
  auto rec = [&](auto&& self, int filled) -> void {
    if (filled == 2 * n) {
      f(const_cast<const std::vector<int>&>(seq));
      return;
    }
    int p = 0;
    while (seq[static_cast<std::size_t>(p)] != 0) ++p;
    ++next_id;
    seq[static_cast<std::size_t>(p)] = next_id;
    for (int q = p + 1; q < 2 * n; ++q) {
      if (seq[static_cast<std::size_t>(q)] != 0) continue;
      seq[static_cast<std::size_t>(q)] = next_id;
      self(self, filled + 2);
      seq[static_cast<std::size_t>(q)] = 0;
    }
    seq[static_cast<std::size_t>(p)] = 0;
    --next_id;
  };
  if (n == 0) {
    f(const_cast<const std::vector<int>&>(seq));
    return;
  }
  rec(rec, 0);
}

// Diagram from a pairing and an over/under mask: bit k-1 set means crossing
// k's first visit is the over-passage.
inline std::vector<passage> passages_from_mask(const std::vector<int>& seq, std::uint64_t mask) {
  std::vector<passage> v(seq.size());
  std::uint64_t seen = 0;
  for (std::size_t p = 0; p < seq.size(); ++p) {
    const int id = seq[p];
    const std::uint64_t bit = std::uint64_t{1} << (id - 1);
    const bool first = !(seen & bit);
    seen |= bit;
    const bool over = first == static_cast<bool>((mask >> (id - 1)) & 1u);
    v[p] = passage{id, over ? strand::over : strand::under};
  }
  return v;
}

// All abstract Gauss diagrams with exactly n crossings, up to relabeling:
// (2n-1)!! * 2^n of them.
template <class F>
void for_each_diagram(int n, F&& f) {
  for_each_pairing(n, [&](const std::vector<int>& seq) {
    const std::uint64_t states = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < states; ++mask)
      f(gauss_diagram(passages_from_mask(seq, mask)));
  });
}

// Canonical form of a shadow under rotation + relabeling: the lexicographically
// least renormalized rotation.
inline std::vector<int> canonical_shadow_key(const std::vector<int>& seq) {
  const int m = static_cast<int>(seq.size());
  std::vector<int> best;
  for (int k = 0; k < m; ++k) {
    std::vector<int> rot(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      rot[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>((i + k) % m)];
    std::vector<int> name(static_cast<std::size_t>(m / 2), 0);
    int next = 0;
    for (auto& id : rot) {
      int& slot = name[static_cast<std::size_t>(id - 1)];
      if (slot == 0) slot = ++next;
      id = slot;
    }
    if (best.empty() || rot < best) best = std::move(rot);
  }
  return best;
}

// All shadows with n crossings, one representative per rotation/relabeling
// class.
inline std::vector<shadow> all_shadows(int n) {
  std::set<std::vector<int>> keys;
  for_each_pairing(n, [&](const std::vector<int>& seq) {
    if (n == 0) return;
    keys.insert(canonical_shadow_key(seq));
  });
  std::vector<shadow> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.emplace_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// Seeded randomness. Draws come straight off a mt19937_64 stream so results
// are reproducible from the seed alone.

class rng {
 public:
  explicit rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<int> random_pairing(rng& r, int n) {
  std::vector<int> seq(static_cast<std::size_t>(2 * n), 0);
  std::vector<int> free_pos;
  free_pos.reserve(seq.size());
  for (int i = 0; i < 2 * n; ++i) free_pos.push_back(i);
  int next_id = 0;
  while (!free_pos.empty()) {
    const int p = free_pos.front();
    free_pos.erase(free_pos.begin());
    const std::size_t j = static_cast<std::size_t>(r.below(free_pos.size()));
    const int q = free_pos[j];
    free_pos.erase(free_pos.begin() + static_cast<std::ptrdiff_t>(j));
    ++next_id;
    seq[static_cast<std::size_t>(p)] = next_id;
    seq[static_cast<std::size_t>(q)] = next_id;
  }
  return seq;
}

inline shadow random_shadow(rng& r, int n) { return shadow(random_pairing(r, n)); }

inline gauss_diagram random_diagram(rng& r, int n) {
  const auto seq = random_pairing(r, n);
  const std::uint64_t mask = n == 0 ? 0 : r.next() & ((std::uint64_t{1} << n) - 1);
  return gauss_diagram(passages_from_mask(seq, mask));
}

// ---------------------------------------------------------------------------
// Planar curve corpus.

struct curve_map {
  std::vector<int> seq;
  std::vector<chirality> flags;  // by crossing id - 1
};

namespace detail {

// Rotation of a flagged map by k with normal-form relabeling; flags flip for
// crossings whose visit order swaps.
inline curve_map rotate_map(const curve_map& m, int k) {
  const int sz = static_cast<int>(m.seq.size());
  const int n = sz / 2;
  curve_map out;
  out.seq.resize(static_cast<std::size_t>(sz));
  for (int i = 0; i < sz; ++i)
    out.seq[static_cast<std::size_t>(i)] = m.seq[static_cast<std::size_t>((i + k) % sz)];
  const auto ix = passage_index::build(m.seq, n);
  std::vector<chirality> rotated(m.flags);
  for (int id = 1; id <= n; ++id) {
    const int p1 = ix.pos[static_cast<std::size_t>(id - 1)][0];
    const int p2 = ix.pos[static_cast<std::size_t>(id - 1)][1];
    if ((p1 - k + sz) % sz > (p2 - k + sz) % sz)
      rotated[static_cast<std::size_t>(id - 1)] =
          opposite(rotated[static_cast<std::size_t>(id - 1)]);
  }
  std::vector<int> name(static_cast<std::size_t>(n), 0);
  int next = 0;
  out.flags.assign(static_cast<std::size_t>(n), chirality::l);
  for (auto& id : out.seq) {
    int& slot = name[static_cast<std::size_t>(id - 1)];
    if (slot == 0) {
      slot = ++next;
      out.flags[static_cast<std::size_t>(slot - 1)] = rotated[static_cast<std::size_t>(id - 1)];
    }
    id = slot;
  }
  return out;
}

inline std::vector<int> map_key(const curve_map& m) {
  std::vector<int> key = m.seq;
  for (auto f : m.flags) key.push_back(f == chirality::l ? 0 : 1);
  return key;
}

inline std::vector<int> canonical_map_key(const curve_map& m) {
  std::vector<int> best;
  const int sz = static_cast<int>(m.seq.size());
  for (int k = 0; k < sz; ++k) {
    auto key = map_key(rotate_map(m, k));
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace detail

// All plane-realizable flagged Gauss maps with n crossings, deduplicated up
// to rotation and relabeling. Realizability gate: the rotation system must
// trace exactly n+2 faces.
inline std::vector<curve_map> all_planar_maps(int n) {
  if (n == 0) return {curve_map{}};
  std::set<std::vector<int>> seen;
  std::vector<curve_map> out;
  for_each_pairing(n, [&](const std::vector<int>& seq) {
    const std::uint64_t combos = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
      curve_map m;
      m.seq = seq;
      m.flags.resize(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k)
        m.flags[static_cast<std::size_t>(k)] =
            ((bits >> k) & 1u) ? chirality::r : chirality::l;
      const auto fs = detail::trace_faces(m.seq, m.flags);
      if (fs.face_count() != n + 2) continue;
      auto key = detail::canonical_map_key(m);
      if (seen.insert(std::move(key)).second) out.push_back(std::move(m));
    }
  });
  return out;
}

// Every planar curve with n crossings: each planar map combined with every
// choice of outer face (marked by the face's first boundary pair).
inline std::vector<planar_curve> all_planar_curves(int n) {
  std::vector<planar_curve> out;
  for (const auto& m : all_planar_maps(n)) {
    const auto fs = detail::trace_faces(m.seq, m.flags);
    for (const auto& face : fs.faces) {
      const auto [edge, s] = face.front();
      out.emplace_back(m.seq, m.flags, edge, s);
    }
  }
  return out;
}

}  // namespace warpknot
