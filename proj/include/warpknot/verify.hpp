#pragma once

// Batch verification harness. Every identity the library claims is checked
// here at the scales pinned below: small cases exhaustively, larger ones on
// seeded random corpora. Each check reports pass/fail, and a failure always
// carries a serialized counterexample so it can be replayed.

#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "warpknot/enumerate.hpp"
#include "warpknot/io.hpp"
#include "warpknot/planar.hpp"
#include "warpknot/polynomial.hpp"
#include "warpknot/statesum.hpp"
#include "warpknot/warping.hpp"

namespace warpknot {

struct verify_config {
  int max_exhaustive_n = 5;     // exhaustive diagram sweeps
  int random_samples = 10000;   // randomized diagram tier
  int random_max_n = 12;        // crossing bound for random diagrams
  std::uint64_t seed = 0;       // overridable via WARPKNOT_SEED
  int statesum_limit = 20;      // hard cap on state-sum crossing count

  void validate() const {
    if (max_exhaustive_n < 1 || random_samples < 1 || random_max_n < 1 || statesum_limit < 1)
      fail(errc::validation_error, "verify configuration values must be positive");
  }
};

struct check_result {
  std::string name;
  bool pass = true;
  std::string counterexample;  // reproducible witness when pass is false
  std::string detail;
  double seconds = 0.0;
};

struct verify_report {
  std::vector<check_result> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace verify_detail {

// Scales fixed by the acceptance gate, independent of the configurable
// exhaustive tier.
inline constexpr int k_statesum_exhaustive_n = 6;
inline constexpr int k_statesum_random_lo = 7;
inline constexpr int k_statesum_random_hi = 16;
inline constexpr int k_statesum_random_per_n = 100;
inline constexpr int k_change_sweep_n = 6;
inline constexpr int k_inequality_sweep_n = 6;
inline constexpr int k_curve_corpus_n = 6;
inline constexpr int k_binomial_sweep_n = 6;
inline constexpr int k_realize_sum = 5;

class checker {
 public:
  explicit checker(std::string name) { result_.name = std::move(name); }

  void fail_with(const std::string& counterexample, const std::string& why) {
    if (result_.pass) {
      result_.pass = false;
      result_.counterexample = counterexample;
      result_.detail = why;
    }
    ++failures_;
  }

  void require(bool ok, const std::function<std::string()>& counterexample,
               const std::string& why) {
    if (!ok) fail_with(counterexample(), why);
  }

  bool passing() const { return result_.pass; }
  long failures() const { return failures_; }

  check_result finish(const std::string& detail, double seconds) {
    if (result_.pass) result_.detail = detail;
    result_.seconds = seconds;
    return result_;
  }

 private:
  check_result result_;
  long failures_ = 0;
};

class stopwatch {
 public:
  stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string describe(const gauss_diagram& d) { return to_gauss_code(d); }

}  // namespace verify_detail

// Z_P = 2n(1+t)^(n-1) and the W-sum = 2n(1+t)^n, exhaustively for
// small shadows and on random shadows up to 16 crossings.
inline check_result check_state_sum_closed_form(const verify_config& cfg) {
  verify_detail::stopwatch clock;
  verify_detail::checker ck("state_sum_closed_form");
  long shadows_checked = 0;
  const int ex_hi = std::min(verify_detail::k_statesum_exhaustive_n, cfg.statesum_limit);
  for (int n = 1; n <= ex_hi && ck.passing(); ++n) {
    for (const auto& p : all_shadows(n)) {
      const auto rep = state_sum(p, cfg.statesum_limit);
      ++shadows_checked;
      ck.require(rep.closed_form_ok, [&] { return to_shadow_code(p); },
                 "state sum misses its closed form");
      ck.require(rep.w_total == mul_by_one_plus_t(rep.z), [&] { return to_shadow_code(p); },
                 "W-sum is not (1+t) times Z");
      ck.require(reciprocal_transform(rep.z, n) == rep.z, [&] { return to_shadow_code(p); },
                 "Z is not palindromic");
      if (n == 4)
        ck.require(rep.z == 8 * int_polynomial::one_plus_t_pow(3),
                   [&] { return to_shadow_code(p); }, "four-crossing value 8(1+t)^3 missed");
      if (!ck.passing()) break;
    }
  }
  rng r(cfg.seed + 0x5151);
  const int hi = std::min(verify_detail::k_statesum_random_hi, cfg.statesum_limit);
  for (int n = verify_detail::k_statesum_random_lo; n <= hi && ck.passing(); ++n) {
    for (int i = 0; i < verify_detail::k_statesum_random_per_n; ++i) {
      const auto p = random_shadow(r, n);
      const auto rep = state_sum(p, cfg.statesum_limit);
      ++shadows_checked;
      ck.require(rep.closed_form_ok, [&] { return to_shadow_code(p); },
                 "state sum misses its closed form");
      if (!ck.passing()) break;
    }
  }
  std::ostringstream detail;
  detail << shadows_checked << " shadows (exhaustive n<=" << ex_hi << ", "
         << verify_detail::k_statesum_random_per_n << " random each n="
         << verify_detail::k_statesum_random_lo << ".." << hi << ")";
  return ck.finish(detail.str(), clock.seconds());
}

// W_D = (1+t) X_D for every diagram, exhaustively for small n and
// on the random tier; also the structural pairing behind it: edges ending in
// over-passages carry the weight exponents, edges ending in under-passages
// carry them shifted by one.
inline check_result check_warping_quotient_identity(const verify_config& cfg) {
  verify_detail::stopwatch clock;
  verify_detail::checker ck("warping_quotient_identity");
  long diagrams = 0;
  auto test_one = [&](const gauss_diagram& d, bool structural) {
    ++diagrams;
    const auto w = warping_polynomial(d);
    const auto x = warping_crossing_polynomial(d);
    ck.require(w == mul_by_one_plus_t(x), [&] { return verify_detail::describe(d); },
               "W != (1+t) X");
    ck.require(div_exact_one_plus_t(w) == x, [&] { return verify_detail::describe(d); },
               "exact quotient disagrees with X");
    if (!structural) return;
    const auto prof = edge_degrees(d).degrees;
    const int m = d.passage_count();
    std::map<int, int> over_ends, under_ends;
    for (int p = 0; p < m; ++p) {
      const int deg = prof[static_cast<std::size_t>((p - 1 + m) % m)];
      if (d.at(p).kind == strand::over)
        ++over_ends[deg];
      else
        ++under_ends[deg - 1];
    }
    std::map<int, int> weights;
    for (int e = 0; e <= x.degree(); ++e)
      if (x.coeff(e) != 0) weights[e] = static_cast<int>(x.coeff(e));
    ck.require(over_ends == weights && under_ends == weights,
               [&] { return verify_detail::describe(d); },
               "edge-endpoint multisets do not match the weight exponents");
  };
  for (int n = 1; n <= cfg.max_exhaustive_n && ck.passing(); ++n)
    for_each_diagram(n, [&](const gauss_diagram& d) {
      if (ck.passing()) test_one(d, true);
    });
  rng r(cfg.seed + 0x7e02);
  for (int i = 0; i < cfg.random_samples && ck.passing(); ++i) {
    const int n = 1 + static_cast<int>(r.below(static_cast<std::uint64_t>(cfg.random_max_n)));
    test_one(random_diagram(r, n), false);
  }
  std::ostringstream detail;
  detail << diagrams << " diagrams (exhaustive n<=" << cfg.max_exhaustive_n << ", "
         << cfg.random_samples << " random n<=" << cfg.random_max_n << ")";
  return ck.finish(detail.str(), clock.seconds());
}

// The crossing-change identities and the span bound, both over the
// exhaustive sweep with every crossing changed once.
inline std::pair<check_result, check_result> check_crossing_change_and_span(
    const verify_config& cfg) {
  (void)cfg;
  verify_detail::stopwatch clock;
  verify_detail::checker ck("crossing_change_identities");
  verify_detail::checker sp("span_change_bound");
  long pairs = 0;
  bool bound_attained = false;
  std::string attained_witness;
  for (int n = 1; n <= verify_detail::k_change_sweep_n && (ck.passing() || sp.passing()); ++n) {
    for_each_diagram(n, [&](const gauss_diagram& d) {
      if (!ck.passing() && !sp.passing()) return;
      const auto x = warping_crossing_polynomial(d);
      for (int p = 1; p <= n; ++p) {
        ++pairs;
        const auto changed = crossing_change(d, p);
        const auto xc = warping_crossing_polynomial(changed);
        const auto [a, b] = crossing_change_partition(d, p);
        auto ce = [&] { return verify_detail::describe(d) + " @" + std::to_string(p); };
        ck.require(x - xc.shifted(1) == a - a.shifted(1), ce, "X - tX' != (1-t)A");
        ck.require(xc - x.shifted(1) == b - b.shifted(1), ce, "X' - tX != (1-t)B");
        ck.require(x + xc == a + b, ce, "X + X' != A + B");
        ck.require(mul_by_one_plus_t(x) == a + b.shifted(1), ce, "(t+1)X != A + tB");
        const int delta = std::abs(span(xc) - span(x));
        sp.require(delta <= 2, ce, "span changed by more than 2");
        if (delta == 2 && !bound_attained) {
          bound_attained = true;
          attained_witness = ce();
        }
      }
    });
  }
  sp.require(bound_attained, [] { return std::string("(none)"); },
             "no crossing change attained the span bound 2");
  std::ostringstream detail;
  detail << pairs << " (diagram, crossing) pairs, exhaustive n<="
         << verify_detail::k_change_sweep_n;
  auto ck_res = ck.finish(detail.str(), clock.seconds());
  std::ostringstream spd;
  spd << pairs << " pairs, bound attained by " << attained_witness;
  auto sp_res = sp.finish(spd.str(), 0.0);
  return {ck_res, sp_res};
}

// Reversal/mirror symmetry and the alternating/one-bridge
// characterizations with their weight corollaries, exhaustive.
inline check_result check_reversal_mirror_and_classification(const verify_config& cfg) {
  verify_detail::stopwatch clock;
  verify_detail::checker ck("reversal_mirror_and_classification");
  long diagrams = 0;
  for (int n = 1; n <= cfg.max_exhaustive_n && ck.passing(); ++n) {
    const int_polynomial ladder = [&] {  // 1 + t + ... + t^(n-1)
      std::vector<std::int64_t> c(static_cast<std::size_t>(n), 1);
      return int_polynomial(std::move(c));
    }();
    for_each_diagram(n, [&](const gauss_diagram& d) {
      if (!ck.passing()) return;
      ++diagrams;
      auto ce = [&] { return verify_detail::describe(d); };
      const auto x = warping_crossing_polynomial(d);
      const auto xr = warping_crossing_polynomial(reverse(d));
      const auto xm = warping_crossing_polynomial(mirror(d));
      const auto xt = reciprocal_transform(x, n);
      ck.require(xr == xt && xm == xt, ce, "reverse/mirror identity broken");

      const auto cls = classify(d);
      const bool monomial_form = x.span() == 0 && x.coefficient_sum() == n;
      ck.require(cls.alternating == monomial_form, ce,
                 "alternating iff X = n t^d failed");
      const bool ladder_form = x == ladder;
      ck.require(cls.one_bridge == ladder_form, ce,
                 "one-bridge iff X = 1 + ... + t^(n-1) failed");

      const auto prof = edge_degrees(d).degrees;
      const int m = 2 * n;
      std::vector<int> weight_exponents;
      for (int p = 0; p < m; ++p)
        if (d.at(p).kind == strand::over)
          weight_exponents.push_back(prof[static_cast<std::size_t>((p - 1 + m) % m)]);
      if (cls.alternating) {
        for (int w : weight_exponents)
          ck.require(w == weight_exponents.front(), ce,
                     "alternating diagram with non-constant weights");
      }
      if (cls.one_bridge) {
        std::vector<int> sorted = weight_exponents;
        std::sort(sorted.begin(), sorted.end());
        ck.require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ce,
                   "one-bridge diagram with repeated weights");
      }
    });
  }
  std::ostringstream detail;
  detail << diagrams << " diagrams, exhaustive n<=" << cfg.max_exhaustive_n;
  return ck.finish(detail.str(), clock.seconds());
}

// Realizability round trip. Over every polynomial with
// non-negative coefficients, coefficient sum n <= 5 and exponents within
// 0..n-1: the contiguous ones must be realized by some diagram found by
// exhaustive search, the gapped ones must be rejected and the search must
// confirm no witness exists.
inline check_result check_realizability_roundtrip(const verify_config& cfg) {
  verify_detail::stopwatch clock;
  verify_detail::checker ck("realizability_roundtrip");
  const int top = std::min(verify_detail::k_realize_sum, cfg.max_exhaustive_n);
  long realizable = 0, gapped = 0;
  for (int n = 1; n <= top && ck.passing(); ++n) {
    // enumerate coefficient vectors of length n summing to n
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int idx, int remaining) -> void {
      if (!ck.passing()) return;
      if (idx == n) {
        if (remaining != 0) return;
        const int_polynomial f(coeffs);
        auto ce = [&] { return to_list_string(f); };
        const bool shape = realizability_check(f);
        const auto witness = realize_search(f, n);
        if (shape) {
          ++realizable;
          ck.require(witness.has_value(), ce, "no witness found for a realizable shape");
          if (witness)
            ck.require(warping_crossing_polynomial(*witness) == f, ce,
                       "witness has the wrong polynomial");
        } else {
          ++gapped;
          ck.require(!witness.has_value(), ce,
                     "search found a witness for a rejected shape");
        }
        return;
      }
      for (int c = 0; c <= remaining; ++c) {
        coeffs[static_cast<std::size_t>(idx)] = c;
        self(self, idx + 1, remaining - c);
      }
      coeffs[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, n);
  }
  std::ostringstream detail;
  detail << realizable << " realizable shapes witnessed, " << gapped
         << " non-realizable shapes confirmed empty, sums n<=" << top;
  return ck.finish(detail.str(), clock.seconds());
}

// d(D) + d(-D) + 1 <= c(D) with equality exactly for alternating
// diagrams. The sweep covers every abstract Gauss code, so a violation here
// would be a genuine finding and is reported with its witness.
inline check_result check_warping_degree_inequality(const verify_config& cfg) {
  (void)cfg;
  verify_detail::stopwatch clock;
  verify_detail::checker ck("warping_degree_inequality");
  long diagrams = 0;
  for (int n = 1; n <= verify_detail::k_inequality_sweep_n && ck.passing(); ++n) {
    for_each_diagram(n, [&](const gauss_diagram& d) {
      if (!ck.passing()) return;
      ++diagrams;
      const int fwd = diagram_warping_degree(d);
      const int bwd = diagram_warping_degree(reverse(d));
      auto ce = [&] { return verify_detail::describe(d); };
      ck.require(fwd + bwd + 1 <= n, ce,
                 "abstract-code finding: d(D) + d(-D) + 1 > c(D)");
      ck.require((fwd + bwd + 1 == n) == classify(d).alternating, ce,
                 "abstract-code finding: equality does not match alternation");
    });
  }
  std::ostringstream detail;
  detail << diagrams << " diagrams, exhaustive n<=" << verify_detail::k_inequality_sweep_n;
  return ck.finish(detail.str(), clock.seconds());
}

// The full plane-curve pipeline over the exhaustive curve corpus.
inline check_result check_planar_pipeline(const verify_config& cfg) {
  (void)cfg;
  verify_detail::stopwatch clock;
  verify_detail::checker ck("planar_pipeline");
  long curves = 0, based = 0;
  for (int n = 0; n <= verify_detail::k_curve_corpus_n && ck.passing(); ++n) {
    for (const auto& c : all_planar_curves(n)) {
      if (!ck.passing()) break;
      ++curves;
      auto ce = [&] { return to_curve_text(c); };
      try {
        const auto fs = compute_faces(c);
        ck.require(fs.face_count() == n + 2, ce, "face count is not n+2");

        const auto col = checkerboard(c);
        ck.require(!col.is_black(col.faces.outer_face), ce, "outer face not white");
        for (int e = 0; e < c.edge_count(); ++e)
          ck.require(col.is_black(col.faces.face_at(e, side::left)) !=
                         col.is_black(col.faces.face_at(e, side::right)),
                     ce, "coloring not proper");

        const int rot = rotation_number(c);
        ck.require(((rot % 2) + 2) % 2 == (n + 1) % 2, ce, "rot parity violated");
        ck.require(rotation_number(reverse_curve(c)) == -rot, ce,
                   "rot does not flip under reversal");

        if (n >= 1) {
          const auto d = induced_alternating(c);
          ck.require(classify(d).alternating, ce, "induced diagram not alternating");
          ck.require(induced_alternating(reverse_curve(c)) == reverse(d), ce,
                     "induced diagram not orientation-equivariant");
        }

        if (n % 2 == 0) {
          const auto rotc = orient_even_rotation(c);
          ck.require(rotc.sign == orient_even_rotation(c).sign, ce,
                     "rotation orientation not deterministic");
          ck.require(orient_even_rotation(reverse_curve(c)).sign == -rotc.sign, ce,
                     "rotation orientation not equivariant");
          if (n >= 2) {
            const auto w = orient_even_warping(c);
            ck.require(w.sign == orient_even_warping(c).sign, ce,
                       "warping orientation not deterministic");
            ck.require(orient_even_warping(reverse_curve(c)).sign == -w.sign, ce,
                       "warping orientation not equivariant");
          }
        } else {
          const auto rev = reverse_curve(c);
          for (int base = 0; base < c.edge_count(); ++base) {
            ++based;
            const based_planar_curve cb(c, base);
            const based_planar_curve rb(rev, reversed_edge_index(c, base));
            const auto ow = orient_odd_warping(cb);
            ck.require(ow.sign == orient_odd_warping(cb).sign, ce,
                       "odd warping orientation not deterministic");
            ck.require(orient_odd_warping(rb).sign == -ow.sign, ce,
                       "odd warping orientation not equivariant");
            const auto ob = orient_odd_black_right(cb);
            ck.require(orient_odd_black_right(rb).sign == -ob.sign, ce,
                       "black-right orientation not equivariant");
            if (!ck.passing()) break;
          }
        }

        // well-definedness: answers survive re-encoding (spot-checked with a
        // deterministic rotation)
        if (n >= 1 && n <= 4) {
          const int k = 1 + (static_cast<int>(curves) % (2 * n));
          const auto rotated = rotate_curve_encoding(c, k);
          ck.require(rotation_number(rotated) == rot, ce, "rot not encoding-invariant");
          if (n % 2 == 0 && n >= 2)
            ck.require(orient_even_warping(rotated).sign == orient_even_warping(c).sign, ce,
                       "warping orientation not encoding-invariant");
        }
      } catch (const error& e) {
        ck.fail_with(ce(), std::string("pipeline threw: ") + e.what());
      }
    }
  }
  std::ostringstream detail;
  detail << curves << " curves, " << based << " based variants, exhaustive n<="
         << verify_detail::k_curve_corpus_n;
  return ck.finish(detail.str(), clock.seconds());
}

// The two orientation procedures of each parity are genuinely
// independent; the corpus search must produce a disagreeing witness for both
// parities.
inline check_result check_orientation_independence(const verify_config& cfg) {
  (void)cfg;
  verify_detail::stopwatch clock;
  verify_detail::checker ck("orientation_independence_witnesses");
  std::string even_witness, odd_witness;
  for (int n = 2; n <= verify_detail::k_curve_corpus_n && even_witness.empty(); n += 2)
    for (const auto& c : all_planar_curves(n)) {
      if (orient_even_warping(c).sign != orient_even_rotation(c).sign) {
        even_witness = to_curve_text(c);
        break;
      }
    }
  for (int n = 1; n <= verify_detail::k_curve_corpus_n && odd_witness.empty(); n += 2)
    for (const auto& c : all_planar_curves(n)) {
      for (int base = 0; base < c.edge_count() && odd_witness.empty(); ++base) {
        const based_planar_curve cb(c, base);
        if (orient_odd_warping(cb).sign != orient_odd_black_right(cb).sign)
          odd_witness = to_curve_text(c, base);
      }
      if (!odd_witness.empty()) break;
    }
  ck.require(!even_witness.empty(), [] { return std::string("(search exhausted)"); },
             "no even-crossing curve separates the two orientations");
  ck.require(!odd_witness.empty(), [] { return std::string("(search exhausted)"); },
             "no based odd-crossing curve separates the two orientations");
  std::ostringstream detail;
  if (!even_witness.empty() && !odd_witness.empty()) {
    auto squash = [](std::string s) {
      for (auto& ch : s)
        if (ch == '\n') ch = ';';
      return s;
    };
    detail << "even witness [" << squash(even_witness) << "] odd witness ["
           << squash(odd_witness) << "]";
  }
  return ck.finish(detail.str(), clock.seconds());
}

// For every edge of every small shadow, the number of states with
// d(e) = m is the binomial coefficient (n choose m).
inline check_result check_edge_degree_binomial(const verify_config& cfg) {
  verify_detail::stopwatch clock;
  verify_detail::checker ck("edge_degree_binomial_distribution");
  long rows = 0;
  const int hi = std::min(verify_detail::k_binomial_sweep_n, cfg.statesum_limit);
  for (int n = 1; n <= hi && ck.passing(); ++n) {
    const auto binom = binomial_row(n).coeffs();
    for (const auto& p : all_shadows(n)) {
      for (int e = 0; e < 2 * n; ++e) {
        ++rows;
        const auto row = edge_degree_distribution(p, e, cfg.statesum_limit);
        bool same = row.size() == binom.size();
        for (std::size_t m = 0; same && m < row.size(); ++m) same = row[m] == binom[m];
        ck.require(same, [&] { return to_shadow_code(p) + " edge " + std::to_string(e); },
                   "state count per degree is not the binomial row");
        if (!ck.passing()) break;
      }
      if (!ck.passing()) break;
    }
  }
  std::ostringstream detail;
  detail << rows << " (shadow, edge) rows, exhaustive n<=" << hi;
  return ck.finish(detail.str(), clock.seconds());
}

inline verify_report run_verify(const verify_config& cfg, std::ostream* log = nullptr) {
  cfg.validate();
  verify_report report;
  auto emit = [&](check_result r) {
    if (log) {
      (*log) << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << "s) "
             << r.detail << '\n';
      if (!r.pass) (*log) << "       counterexample: " << r.counterexample << '\n';
      log->flush();
    }
    report.checks.push_back(std::move(r));
  };
  // An exception escaping a check is itself a failed check.
  auto guarded = [&](const char* name, const std::function<check_result()>& run) {
    try {
      emit(run());
    } catch (const std::exception& e) {
      check_result r;
      r.name = name;
      r.pass = false;
      r.counterexample = "(exception)";
      r.detail = e.what();
      emit(std::move(r));
    }
  };
  guarded("state_sum_closed_form", [&] { return check_state_sum_closed_form(cfg); });
  guarded("warping_quotient_identity", [&] { return check_warping_quotient_identity(cfg); });
  try {
    auto [chg, spn] = check_crossing_change_and_span(cfg);
    emit(std::move(chg));
    emit(std::move(spn));
  } catch (const std::exception& e) {
    check_result r;
    r.name = "crossing_change_identities";
    r.pass = false;
    r.counterexample = "(exception)";
    r.detail = e.what();
    emit(std::move(r));
    r.name = "span_change_bound";
    emit(std::move(r));
  }
  guarded("reversal_mirror_and_classification",
          [&] { return check_reversal_mirror_and_classification(cfg); });
  guarded("realizability_roundtrip", [&] { return check_realizability_roundtrip(cfg); });
  guarded("warping_degree_inequality", [&] { return check_warping_degree_inequality(cfg); });
  guarded("planar_pipeline", [&] { return check_planar_pipeline(cfg); });
  guarded("orientation_independence_witnesses",
          [&] { return check_orientation_independence(cfg); });
  guarded("edge_degree_binomial_distribution", [&] { return check_edge_degree_binomial(cfg); });
  return report;
}

}  // namespace warpknot
