#include "warpknot/diagram.hpp"

#include <gtest/gtest.h>

#include <set>

#include "warpknot/curve.hpp"
#include "warpknot/enumerate.hpp"
#include "warpknot/errors.hpp"
#include "warpknot/io.hpp"

using namespace warpknot;

namespace {

template <class F>
errc code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return errc::internal_inconsistency;
}

}  // namespace

TEST(GaussParse, WellFormed) {
  const auto d = parse_gauss_code("O1 O2 O3 U1 U2 U3");
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.at(0), (passage{1, strand::over}));
  EXPECT_EQ(d.at(3), (passage{1, strand::under}));
  EXPECT_EQ(to_gauss_code(d), "O1 O2 O3 U1 U2 U3");

  const auto alt = parse_gauss_code("O1 U2 O3 U1 O2 U3");
  EXPECT_EQ(alt.crossing_count(), 3);
  EXPECT_EQ(to_gauss_code(alt), "O1 U2 O3 U1 O2 U3");
}

TEST(GaussParse, NormalizesIds) {
  // ids renamed by first appearance
  EXPECT_EQ(to_gauss_code(parse_gauss_code("O7 U5 U7 O5")), "O1 U2 U1 O2");
}

TEST(GaussParse, EmptyTextIsCircle) {
  const auto d = parse_gauss_code("");
  EXPECT_EQ(d.crossing_count(), 0);
  EXPECT_EQ(to_gauss_code(d), "");
}

TEST(GaussParse, Errors) {
  EXPECT_EQ(code_of([] { parse_gauss_code("O1 X2"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_gauss_code("O1 O1 U1"); }), errc::validation_error);
  EXPECT_EQ(code_of([] { parse_gauss_code("O1 U1 O2"); }), errc::validation_error);
  EXPECT_EQ(code_of([] { parse_gauss_code("O1 O1"); }), errc::validation_error);
  EXPECT_EQ(code_of([] { parse_gauss_code("O0 U0"); }), errc::syntax_error);
}

TEST(Transforms, Reverse) {
  const auto d = parse_gauss_code("O1 O2 O3 U1 U2 U3");
  EXPECT_EQ(to_gauss_code(reverse(d)), "U3 U2 U1 O3 O2 O1");
  EXPECT_EQ(reverse(reverse(d)), d);
  EXPECT_EQ(reverse(gauss_diagram{}), gauss_diagram{});
}

TEST(Transforms, ReverseIsInvolutionOnRandoms) {
  rng r(5);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(r, 1 + static_cast<int>(r.below(8)));
    EXPECT_EQ(reverse(reverse(d)), d);
    EXPECT_EQ(mirror(mirror(d)), d);
  }
}

TEST(Transforms, Mirror) {
  const auto d = parse_gauss_code("O1 U2 O3 U1 O2 U3");
  EXPECT_EQ(to_gauss_code(mirror(d)), "U1 O2 U3 O1 U2 O3");
}

TEST(Transforms, Shadow) {
  const auto d = parse_gauss_code("O1 U2 O3 U1 O2 U3");
  EXPECT_EQ(shadow_of(d), parse_shadow_code("1 2 3 1 2 3"));
  EXPECT_EQ(shadow_of(mirror(d)), shadow_of(d));
  EXPECT_EQ(shadow_of(gauss_diagram{}).crossing_count(), 0);
}

TEST(Transforms, AssignState) {
  const auto p = parse_shadow_code("1 2 1 2");
  EXPECT_EQ(assign_state(p, {true, true}), parse_gauss_code("O1 O2 U1 U2"));
  EXPECT_EQ(assign_state(p, {false, false}), mirror(assign_state(p, {true, true})));
  std::set<std::string> states;
  for (std::uint64_t mask = 0; mask < 4; ++mask)
    states.insert(to_gauss_code(assign_state_mask(p, mask)));
  EXPECT_EQ(states.size(), 4u);
  EXPECT_EQ(code_of([&] { assign_state(p, {true}); }), errc::length_mismatch);
}

TEST(Transforms, AssignStateRoundTrip) {
  rng r(77);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_diagram(r, 1 + static_cast<int>(r.below(8)));
    EXPECT_EQ(assign_state(shadow_of(d), state_bits(d)), d);
  }
}

TEST(Transforms, CrossingChange) {
  const auto d = parse_gauss_code("O1 O2 O3 U1 U2 U3");
  EXPECT_EQ(to_gauss_code(crossing_change(d, 1)), "U1 O2 O3 O1 U2 U3");
  EXPECT_EQ(crossing_change(crossing_change(d, 2), 2), d);
  auto all = d;
  for (int c = 1; c <= 3; ++c) all = crossing_change(all, c);
  EXPECT_EQ(all, mirror(d));
  EXPECT_EQ(code_of([&] { crossing_change(d, 4); }), errc::unknown_crossing);
}

TEST(ArcParse, Basics) {
  const auto a = parse_arc_code("O1 U1");
  EXPECT_EQ(a.crossing_count(), 1);
  EXPECT_EQ(to_arc_code(a), "O1 U1");
  // a crossing visited once is rejected
  EXPECT_EQ(code_of([] { parse_arc_code("O1 U1 O2"); }), errc::validation_error);
}

TEST(ShadowParse, Basics) {
  EXPECT_EQ(parse_shadow_code("1 2 1 2").crossing_count(), 2);
  EXPECT_EQ(to_shadow_code(parse_shadow_code("3 3 1 1")), "1 1 2 2");
  EXPECT_EQ(code_of([] { parse_shadow_code("1 2 1"); }), errc::validation_error);
}

// ---------------------------------------------------------------------------
// Planar curves.

namespace {

planar_curve lemniscate() { return planar_curve({1, 1}, {chirality::l}, 1, side::left); }

// Standard trefoil projection. The three double points are geometrically
// alike, but the flag encoding is tied to visit order and the curve's
// symmetry maps first visits to second visits, so the flags alternate.
planar_curve trefoil_curve() {
  return planar_curve({1, 2, 3, 1, 2, 3},
                      {chirality::l, chirality::r, chirality::l}, 5, side::right);
}

}  // namespace

TEST(PlanarCurve, LemniscateHasThreeFaces) {
  const auto fs = detail::trace_faces({1, 1}, {chirality::l});
  EXPECT_EQ(fs.face_count(), 3);
  // Hand-derived boundary structure: the first lobe is bounded by edge 0
  // alone, the second lobe by edge 1 alone, and the remaining face touches
  // both edges.
  const int f_up = fs.face_at(0, side::left);
  const int f_low = fs.face_at(1, side::right);
  const int f_mid = fs.face_at(1, side::left);
  EXPECT_EQ(fs.face_at(0, side::right), f_mid);
  EXPECT_EQ(fs.faces[static_cast<std::size_t>(f_up)].size(), 1u);
  EXPECT_EQ(fs.faces[static_cast<std::size_t>(f_low)].size(), 1u);
  EXPECT_EQ(fs.faces[static_cast<std::size_t>(f_mid)].size(), 2u);
  EXPECT_NO_THROW(lemniscate());
}

TEST(PlanarCurve, TrefoilHasFiveFaces) {
  EXPECT_NO_THROW(trefoil_curve());
  const auto fs = detail::trace_faces({1, 2, 3, 1, 2, 3},
                                      {chirality::l, chirality::r, chirality::l});
  EXPECT_EQ(fs.face_count(), 5);
  // The unbounded face touches the three petal-tip arcs on their right.
  const int outer = fs.face_at(5, side::right);
  EXPECT_EQ(fs.face_at(1, side::right), outer);
  EXPECT_EQ(fs.face_at(3, side::right), outer);
}

TEST(PlanarCurve, CircleHasTwoFaces) {
  const auto fs = detail::trace_faces({}, {});
  EXPECT_EQ(fs.face_count(), 2);
  EXPECT_NO_THROW(planar_curve({}, {}, 0, side::right));
}

TEST(PlanarCurve, InterleavedPairIsNeverPlanar) {
  // The sequence 1 2 1 2 violates the parity condition for plane curves, so
  // every chirality assignment must fail the face-count gate.
  for (auto f1 : {chirality::l, chirality::r})
    for (auto f2 : {chirality::l, chirality::r}) {
      EXPECT_EQ(code_of([&] { planar_curve({1, 2, 1, 2}, {f1, f2}, 0, side::left); }),
                errc::not_planar);
    }
}

TEST(PlanarCurve, OuterMarkerValidation) {
  EXPECT_EQ(code_of([] { planar_curve({1, 1}, {chirality::l}, 2, side::left); }),
            errc::bad_outer_face);
  EXPECT_EQ(code_of([] { planar_curve({1, 1}, {}, 0, side::left); }),
            errc::validation_error);
}

TEST(PlanarCurve, ReverseCurveInvolution) {
  for (const auto& c : {lemniscate(), trefoil_curve(), planar_curve{}}) {
    EXPECT_EQ(reverse_curve(reverse_curve(c)), c);
  }
}

TEST(PlanarCurve, RotatedEncodingStaysPlanar) {
  const auto c = trefoil_curve();
  for (int k = 0; k < 6; ++k) {
    const auto r = rotate_curve_encoding(c, k);
    EXPECT_EQ(r.crossing_count(), 3);
    EXPECT_EQ(rotate_curve_encoding(r, 6 - k), c) << "k=" << k;
  }
}

TEST(PlanarCurve, RotationFlipsStraddlingFlags) {
  const auto c = lemniscate();
  const auto r = rotate_curve_encoding(c, 1);
  // rotating by one passage swaps which visit comes first
  EXPECT_EQ(r.flag(1), chirality::r);
  EXPECT_EQ(rotate_curve_encoding(r, 1), c);
}

// ---------------------------------------------------------------------------
// Curve files.

TEST(CurveFile, ParseAndSerialize) {
  const auto cf = parse_curve_text("1 2 3 1L 2R 3L\nOUTER 5 RIGHT\n");
  EXPECT_EQ(cf.curve, trefoil_curve());
  EXPECT_FALSE(cf.base_edge.has_value());
  EXPECT_EQ(to_curve_text(cf.curve), "1 2 3 1L 2R 3L\nOUTER 5 RIGHT\n");
}

TEST(CurveFile, FlagAcceptedOnEitherVisit) {
  const auto a = parse_curve_text("1L 1\nOUTER 1 LEFT\n");
  const auto b = parse_curve_text("1 1L\nOUTER 1 LEFT\n");
  EXPECT_EQ(a.curve, b.curve);
  EXPECT_EQ(a.curve, lemniscate());
  // canonical form puts the flag on the second visit
  EXPECT_EQ(to_curve_text(a.curve), "1 1L\nOUTER 1 LEFT\n");
}

TEST(CurveFile, BaseLine) {
  const auto cf = parse_curve_text("1 1L\nOUTER 1 LEFT\nBASE 0\n");
  ASSERT_TRUE(cf.base_edge.has_value());
  EXPECT_EQ(*cf.base_edge, 0);
  EXPECT_EQ(to_curve_text(cf.curve, cf.base_edge), "1 1L\nOUTER 1 LEFT\nBASE 0\n");
}

TEST(CurveFile, CrossinglessCircle) {
  const auto cf = parse_curve_text("OUTER 0 RIGHT\n");
  EXPECT_EQ(cf.curve.crossing_count(), 0);
  EXPECT_EQ(to_curve_text(cf.curve), "OUTER 0 RIGHT\n");
}

TEST(CurveFile, CommentsAndBlanks) {
  const auto cf = parse_curve_text("# a curve\n\n1 1L  # passage line\nOUTER 1 LEFT\n");
  EXPECT_EQ(cf.curve, lemniscate());
}

TEST(CurveFile, Errors) {
  EXPECT_EQ(code_of([] { parse_curve_text(""); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_curve_text("1 1\nOUTER 0 LEFT\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_curve_text("1L 1R\nOUTER 0 LEFT\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_curve_text("1 1L\nOUTER 9 LEFT\n"); }), errc::bad_outer_face);
  EXPECT_EQ(code_of([] { parse_curve_text("1 1L\nOUTER 0 SIDEWAYS\n"); }), errc::syntax_error);
  EXPECT_EQ(code_of([] { parse_curve_text("1 1L\nOUTER 0 LEFT\nBASE 7\n"); }),
            errc::bad_base_edge);
  EXPECT_EQ(code_of([] { parse_curve_text("1 2 1L 2L\nOUTER 0 LEFT\n"); }), errc::not_planar);
}

TEST(CurveFile, SerializationFixedPoint) {
  // serialize(parse(serialize(x))) == serialize(x) over assorted curves
  for (const auto& c : {lemniscate(), trefoil_curve(), planar_curve{}}) {
    const auto text = to_curve_text(c);
    EXPECT_EQ(to_curve_text(parse_curve_text(text).curve), text);
  }
}

TEST(CurveFile, RoundTripOverCorpus) {
  for (int n = 0; n <= 4; ++n)
    for (const auto& c : all_planar_curves(n)) {
      const auto back = parse_curve_text(to_curve_text(c));
      EXPECT_EQ(back.curve, c);
      EXPECT_FALSE(back.base_edge.has_value());
      for (int base = 0; base < c.edge_count(); ++base)
        EXPECT_EQ(parse_curve_text(to_curve_text(c, base)).base_edge, base);
    }
}

TEST(GaussCode, RoundTripOnRandoms) {
  rng r(91);
  for (int i = 0; i < 300; ++i) {
    const auto d = random_diagram(r, static_cast<int>(r.below(10)));
    EXPECT_EQ(parse_gauss_code(to_gauss_code(d)), d);
    const auto s = shadow_of(d);
    EXPECT_EQ(parse_shadow_code(to_shadow_code(s)), s);
  }
}

// ---------------------------------------------------------------------------
// Enumeration helpers.

TEST(Enumerate, PairingCounts) {
  int count = 0;
  for_each_pairing(3, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 15);  // (2*3-1)!!
  count = 0;
  for_each_pairing(4, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 105);
}

TEST(Enumerate, DiagramCountAndValidity) {
  int count = 0;
  for_each_diagram(3, [&](const gauss_diagram& d) {
    ++count;
    EXPECT_EQ(d.crossing_count(), 3);
  });
  EXPECT_EQ(count, 15 * 8);
}

TEST(Enumerate, ShadowDedup) {
  // one crossing: single class "1 1"
  EXPECT_EQ(all_shadows(1).size(), 1u);
  // two crossings: "1 1 2 2" and "1 2 1 2"
  EXPECT_EQ(all_shadows(2).size(), 2u);
  for (const auto& s : all_shadows(5)) EXPECT_EQ(s.crossing_count(), 5);
}

TEST(Enumerate, RandomDiagramsAreValidAndSeedStable) {
  rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const auto d1 = random_diagram(a, 6);
    const auto d2 = random_diagram(b, 6);
    EXPECT_EQ(d1, d2);
  }
}

TEST(Enumerate, PlanarMapsSmall) {
  // Every planar map passes the face-count gate after rotation round trips.
  for (int n = 1; n <= 4; ++n) {
    const auto maps = all_planar_maps(n);
    EXPECT_FALSE(maps.empty());
    for (const auto& m : maps) {
      const auto fs = detail::trace_faces(m.seq, m.flags);
      EXPECT_EQ(fs.face_count(), n + 2);
    }
  }
  // n = 1: one class; re-reading the figure-eight from its other lobe flips
  // the flag, so the two flag encodings are the same map.
  EXPECT_EQ(all_planar_maps(1).size(), 1u);
}
