#pragma once

// State sums over a knot projection. A shadow with n crossings has 2^n
// states; this module enumerates them all, accumulating the sum Z of the
// warping crossing polynomials and the sum of the warping polynomials, and
// compares both against their closed forms
//
//   Z = 2n (1+t)^(n-1)        sum of W = 2n (1+t)^n.
//
// The enumeration is a pure reduction: choice masks are split into ranges,
// each worker accumulates integer coefficient arrays, and partial sums merge
// by addition, so the result is independent of the schedule.

#include <cstdint>
#include <future>
#include <thread>
#include <vector>

#include "warpknot/diagram.hpp"
#include "warpknot/errors.hpp"
#include "warpknot/polynomial.hpp"
#include "warpknot/warping.hpp"

namespace warpknot {

struct state_sum_report {
  int n = 0;
  int_polynomial z;        // sum over states of X_D
  int_polynomial w_total;  // sum over states of W_D
  bool closed_form_ok = false;
  std::uint64_t states_enumerated = 0;
};

namespace detail {

struct shadow_scratch {
  const std::vector<int>* ids = nullptr;
  std::vector<int> other;      // partner position
  std::vector<char> is_first;  // first visit of its crossing
  std::vector<char> over;
  std::vector<int> degrees;

  explicit shadow_scratch(const shadow& s) {
    ids = &s.ids();
    const auto ix = s.index();
    other = ix.other;
    is_first.assign(ids->size(), 0);
    std::vector<char> seen(static_cast<std::size_t>(s.crossing_count()), 0);
    for (std::size_t p = 0; p < ids->size(); ++p) {
      char& f = seen[static_cast<std::size_t>((*ids)[p] - 1)];
      if (!f) {
        f = 1;
        is_first[p] = 1;
      }
    }
    over.resize(ids->size());
    degrees.resize(ids->size());
  }

  void apply_mask(std::uint64_t mask) {
    for (std::size_t p = 0; p < ids->size(); ++p) {
      const bool bit = (mask >> ((*ids)[p] - 1)) & 1u;
      over[p] = (static_cast<bool>(is_first[p]) == bit) ? 1 : 0;
    }
  }

  // Accumulates this state's edge degrees into wacc and crossing-weight
  // exponents into zacc (arrays of size n+1 and n).
  void accumulate(std::vector<std::int64_t>& zacc, std::vector<std::int64_t>& wacc) {
    raw_edge_degrees(*ids, over, degrees);
    const int m = static_cast<int>(ids->size());
    for (int p = 0; p < m; ++p) {
      ++wacc[static_cast<std::size_t>(degrees[static_cast<std::size_t>(p)])];
      if (over[static_cast<std::size_t>(p)])
        ++zacc[static_cast<std::size_t>(degrees[static_cast<std::size_t>((p - 1 + m) % m)])];
    }
  }
};

}  // namespace detail

inline state_sum_report state_sum(const shadow& p, int limit = 20) {
  const int n = p.crossing_count();
  if (n == 0) fail(errc::empty_shadow, "state sum needs at least one crossing");
  if (n > limit)
    fail(errc::too_many_crossings, std::to_string(n) + " crossings exceeds the state-sum limit " +
                                       std::to_string(limit) + " (2^n states)");

  const std::uint64_t states = std::uint64_t{1} << n;
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = (n >= 12 && hw > 1) ? std::min(hw, 8u) : 1u;

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
    detail::shadow_scratch scratch(p);
    std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> acc{
        std::vector<std::int64_t>(static_cast<std::size_t>(n), 0),
        std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0)};
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      scratch.apply_mask(mask);
      scratch.accumulate(acc.first, acc.second);
    }
    return acc;
  };

  std::vector<std::int64_t> zacc(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> wacc(static_cast<std::size_t>(n) + 1, 0);
  if (workers == 1) {
    auto acc = run_range(0, states);
    zacc = std::move(acc.first);
    wacc = std::move(acc.second);
  } else {
    std::vector<std::future<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>> parts;
    const std::uint64_t chunk = (states + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(states, lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async, run_range, lo, hi));
    }
    for (auto& f : parts) {
      auto acc = f.get();
      for (std::size_t i = 0; i < zacc.size(); ++i) zacc[i] += acc.first[i];
      for (std::size_t i = 0; i < wacc.size(); ++i) wacc[i] += acc.second[i];
    }
  }

  state_sum_report rep;
  rep.n = n;
  rep.z = int_polynomial(std::move(zacc));
  rep.w_total = int_polynomial(std::move(wacc));
  rep.states_enumerated = states;
  rep.closed_form_ok = rep.z == 2 * n * int_polynomial::one_plus_t_pow(n - 1) &&
                       rep.w_total == 2 * n * int_polynomial::one_plus_t_pow(n);
  return rep;
}

// count[m] = number of states with d(edge) = m; the closed-form claim is that
// this equals binomial(n, m) for every edge.
inline std::vector<std::int64_t> edge_degree_distribution(const shadow& p, int edge,
                                                          int limit = 20) {
  const int n = p.crossing_count();
  if (n == 0) fail(errc::empty_shadow, "distribution needs at least one crossing");
  if (edge < 0 || edge >= 2 * n)
    fail(errc::index_out_of_range, "edge " + std::to_string(edge) + " not in 0.." +
                                       std::to_string(2 * n - 1));
  if (n > limit)
    fail(errc::too_many_crossings, std::to_string(n) + " crossings exceeds limit " +
                                       std::to_string(limit));
  std::vector<std::int64_t> count(static_cast<std::size_t>(n) + 1, 0);
  detail::shadow_scratch scratch(p);
  const int m = 2 * n;
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < states; ++mask) {
    scratch.apply_mask(mask);
    // definition walk for the one requested edge
    std::uint64_t met = 0;
    int d = 0;
    for (int k = 1; k <= m; ++k) {
      const int pos = (edge + k) % m;
      const std::uint64_t bit = std::uint64_t{1}
                                << ((*scratch.ids)[static_cast<std::size_t>(pos)] - 1);
      if (!(met & bit)) {
        met |= bit;
        if (!scratch.over[static_cast<std::size_t>(pos)]) ++d;
      }
    }
    ++count[static_cast<std::size_t>(d)];
  }
  return count;
}

inline int_polynomial binomial_row(int n) { return int_polynomial::one_plus_t_pow(n); }

}  // namespace warpknot
