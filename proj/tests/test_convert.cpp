#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "mbf/codecs.hpp"
#include "mbf/convert.hpp"
#include "mbf/error.hpp"
#include "mbf/verify.hpp"
#include "test_helpers.hpp"

using namespace mbf;
using mbf::test::corpus;
using mbf::test::path_map;

namespace {

// 1-butterfly of the kinked unknot: path v0-v1-v2-v3-v4, anchors v1 and v3.
ButterflyDiagram path_tree() {
  return make_butterfly(path_map(4), {{0, 1, 5}});
}

// Two vertices joined by two parallel edges; both 2-gon faces are trunks
// passing over nothing (a degenerate 2-bridge presentation of the unknot).
ButterflyDiagram bigon() {
  PlanarMap m = build_map({1, 0, 3, 2}, {2, 3, 0, 1});
  return make_butterfly(std::move(m), {{0, 0, 1}, {1, 0, 1}});
}

// Two round components, the first passing over the second twice: neither
// component ever dives, so neither owns a bridge.
LinkDiagram rings_without_dives() {
  return make_link_diagram(
      {{5, 1, 6, 2}, {6, 3, 7, 2}, {7, 3, 8, 4}, {8, 1, 5, 4}}, 0);
}

std::vector<int> sorted_face_lens(const PlanarMap& m) {
  std::vector<int> lens;
  for (int f = 0; f < m.n_faces(); ++f) lens.push_back(m.face_len(f));
  std::sort(lens.begin(), lens.end());
  return lens;
}

}  // namespace

TEST_CASE("arc decomposition censuses") {
  BridgeDiagram plat = bridge_decompose(parse_pd(corpus("trefoil-plat.pd")));
  CHECK(plat.n_arcs() == 4);
  CHECK(plat.n_overarcs() == 2);
  CHECK(plat.n_simple() == 2);

  BridgeDiagram tre = bridge_decompose(parse_pd(corpus("trefoil.pd")));
  CHECK(tre.n_arcs() == 3);
  CHECK(tre.n_overarcs() == 3);
  CHECK(tre.n_simple() == 0);

  BridgeDiagram kink = bridge_decompose(parse_pd(corpus("unknot-kink.pd")));
  CHECK(kink.n_arcs() == 1);
  CHECK(kink.n_overarcs() == 1);

  BridgeDiagram bor = bridge_decompose(parse_pd(corpus("borromean.pd")));
  CHECK(bor.n_arcs() == 6);
  CHECK(bor.n_overarcs() == 6);

  BridgeDiagram unl = bridge_decompose(parse_pd(corpus("unlink2-4x.pd")));
  CHECK(unl.n_arcs() == 4);
  CHECK(unl.n_overarcs() == 2);
  CHECK(unl.n_simple() == 2);

  BridgeDiagram sol = bridge_decompose(parse_pd(corpus("solomon.pd")));
  CHECK(sol.n_arcs() == 4);
  CHECK(sol.n_overarcs() == 4);
}

TEST_CASE("one arc per crossing, overarc iff it passes over something") {
  for (auto name : {"trefoil.pd", "trefoil-plat.pd", "figure-eight.pd",
                    "borromean.pd", "unlink2-4x.pd"}) {
    BridgeDiagram bd = bridge_decompose(parse_pd(corpus(name)));
    CHECK(bd.n_arcs() == bd.link.n_crossings());
    for (const Arc& a : bd.arcs) CHECK(a.overarc == !a.overs.empty());
  }
}

TEST_CASE("decomposition rejects loops, split diagrams, undivable components") {
  try {
    bridge_decompose(parse_pd(corpus("unknot-0.pd")));
    FAIL("expected HasClosedCurve");
  } catch (const Error& e) {
    CHECK(e.code() == Err::HasClosedCurve);
  }
  try {
    // two kinked unknots side by side, no shared crossing
    bridge_decompose(make_link_diagram({{1, 1, 2, 2}, {3, 3, 4, 4}}, 0));
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == Err::Disconnected);
  }
  try {
    bridge_decompose(rings_without_dives());
    FAIL("expected ComponentWithoutBridge");
  } catch (const Error& e) {
    CHECK(e.code() == Err::ComponentWithoutBridge);
  }
}

TEST_CASE("preprocess kinks crossing-free loops") {
  LinkDiagram d = preprocess_diagram(parse_pd(corpus("unknot-0.pd")));
  CHECK(d.loops == 0);
  CHECK(d.n_crossings() == 1);
  CHECK(fingerprint(d) == fingerprint(parse_pd(corpus("unknot-0.pd"))));
}

TEST_CASE("preprocess joins split unions without changing the link") {
  LinkDiagram raw = parse_pd(corpus("split-union.pd"));
  Fingerprint before = fingerprint(raw);
  LinkDiagram d = preprocess_diagram(raw);
  CHECK(d.n_pieces == 1);
  CHECK(d.loops == 0);
  CHECK(fingerprint(d) == before);
  CHECK_NOTHROW(bridge_decompose(d));
}

TEST_CASE("preprocess gives every component a dive") {
  LinkDiagram raw = rings_without_dives();
  Fingerprint before = fingerprint(raw);
  LinkDiagram d = preprocess_diagram(raw);
  CHECK(fingerprint(d) == before);
  BridgeDiagram bd = bridge_decompose(d);
  for (int s = 0; s < (int)bd.link.strands.size(); ++s)
    CHECK_FALSE(strand_all_over(bd.link, s));
}

TEST_CASE("preprocess leaves good diagrams alone") {
  LinkDiagram d = parse_pd(corpus("trefoil.pd"));
  LinkDiagram p = preprocess_diagram(d);
  CHECK(p.n_crossings() == d.n_crossings());
  CHECK(emit_pd(p) == emit_pd(d));
}

TEST_CASE("wall butterfly of the four-crossing plat") {
  ButterflyDiagram b =
      link_to_butterfly(bridge_decompose(parse_pd(corpus("trefoil-plat.pd"))));
  CHECK(b.m() == 4);
  CHECK(b.map.n_vertices() == 14);
  CHECK(b.map.n_edges() == 16);
  CHECK(b.map.n_faces() == 4);
  VertexClasses vc = classify_vertices(b);
  CHECK(vc.count_a == 8);
  CHECK(vc.count_b == 6);
  CHECK(vc.count_e == 0);
  // simple arcs give 4-gon faces, two-underpass overarcs give 12-gons
  CHECK(sorted_face_lens(b.map) == std::vector<int>{4, 4, 12, 12});
}

TEST_CASE("wall butterfly face sizes follow overpass counts") {
  BridgeDiagram bd = bridge_decompose(parse_pd(corpus("figure-eight.pd")));
  ButterflyDiagram b = link_to_butterfly(bd);
  std::vector<int> expect;
  for (const Arc& a : bd.arcs) expect.push_back(4 * (int)a.overs.size() + 4);
  std::sort(expect.begin(), expect.end());
  CHECK(sorted_face_lens(b.map) == expect);
}

TEST_CASE("wall butterfly of the kinked unknot") {
  ButterflyDiagram b =
      link_to_butterfly(bridge_decompose(parse_pd(corpus("unknot-kink.pd"))));
  CHECK(b.m() == 1);
  CHECK(b.map.n_vertices() == 5);
  VertexClasses vc = classify_vertices(b);
  CHECK(vc.count_a == 2);
  CHECK(vc.count_b == 3);
}

TEST_CASE("wall butterfly of the standard Hopf diagram smooths to 4 vertices") {
  ButterflyDiagram b =
      link_to_butterfly(bridge_decompose(parse_pd(corpus("hopf.pd"))));
  CHECK(b.m() == 2);
  CHECK(b.map.n_vertices() == 4);
  CHECK(classify_vertices(b).count_a == 4);
  CHECK(link_components(b).count == 2);
}

TEST_CASE("wall butterfly of the borromean rings") {
  ButterflyDiagram b =
      link_to_butterfly(bridge_decompose(parse_pd(corpus("borromean.pd"))));
  CHECK(b.m() == 6);
  CHECK(b.map.n_vertices() == 20);
  CHECK(b.map.n_edges() == 24);
  VertexClasses vc = classify_vertices(b);
  CHECK(vc.count_a == 12);
  CHECK(vc.count_b == 8);
  CHECK(link_components(b).count == 3);
}

TEST_CASE("wall butterflies carry no E-vertices and certify") {
  for (auto name : {"unknot-kink.pd", "trefoil.pd", "trefoil-plat.pd",
                    "figure-eight.pd", "hopf.pd", "solomon.pd", "borromean.pd",
                    "unlink2-4x.pd", "unlink2-poke.pd"}) {
    ButterflyDiagram b =
        link_to_butterfly(bridge_decompose(parse_pd(corpus(name))));
    VertexClasses vc = classify_vertices(b);
    CHECK(vc.count_e == 0);
    CHECK(vc.count_plain == 0);
    QuotientComplex qc = quotient_cell_counts(b);
    CHECK(qc.chi() == 0);
  }
}

TEST_CASE("rational butterflies emit their classical diagrams") {
  BridgeDiagram r31 = butterfly_to_link(make_rational_butterfly(3, 1));
  CHECK(r31.link.n_crossings() == 4);
  CHECK(r31.link.n_components() == 1);
  CHECK(fingerprint(r31.link) == fingerprint(parse_pd(corpus("trefoil-plat.pd"))));
  CHECK(fingerprints_equal(fingerprint(r31.link),
                           fingerprint(parse_pd(corpus("trefoil.pd"))), true));

  BridgeDiagram r21 = butterfly_to_link(make_rational_butterfly(2, 1));
  CHECK(r21.link.n_crossings() == 2);
  CHECK(r21.link.n_components() == 2);
  CHECK(fingerprints_equal(fingerprint(r21.link),
                           fingerprint(parse_pd(corpus("hopf.pd"))), true));

  BridgeDiagram r52 = butterfly_to_link(make_rational_butterfly(5, 2));
  CHECK(r52.link.n_crossings() == 8);
  CHECK(r52.link.n_components() == 1);
  CHECK(fingerprints_equal(fingerprint(r52.link),
                           fingerprint(parse_pd(corpus("figure-eight.pd"))),
                           true));
}

TEST_CASE("emission places one crossing per chord in slot order") {
  ButterflyDiagram b = make_rational_butterfly(5, 2);
  GammaGraph g = gamma_graph(b);
  BridgeDiagram bd = butterfly_to_link(b);
  CHECK((int)g.chords.size() == bd.link.n_crossings());
  std::vector<std::vector<int>> per_face(b.m());
  for (const Chord& c : g.chords) per_face[c.face].push_back(c.k);
  for (auto& ks : per_face) {
    std::vector<int> s = ks;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    CHECK(s.size() == ks.size());  // distinct slots along each trunk
  }
}

TEST_CASE("path-tree butterfly emits the kinked unknot") {
  BridgeDiagram bd = butterfly_to_link(path_tree());
  CHECK(bd.link.n_crossings() == 1);
  CHECK_FALSE(bd.bridge_degenerate);
  CHECK(fingerprints_equal(fingerprint(bd.link),
                           fingerprint(parse_pd(corpus("unknot-0.pd"))), false));
}

TEST_CASE("butterfly from corpus file matches its constructor") {
  ButterflyDiagram file = parse_btf(corpus("rational-31.btf"));
  CHECK(butterfly_isomorphic(file, make_rational_butterfly(3, 1)));
  CHECK(fingerprint(butterfly_to_link(file).link) ==
        fingerprint(butterfly_to_link(make_rational_butterfly(3, 1)).link));
}

TEST_CASE("trunks over nothing flag the diagram and emit plain strands") {
  BridgeDiagram bd = butterfly_to_link(bigon());
  CHECK(bd.bridge_degenerate);
  CHECK(bd.link.n_crossings() == 0);
  CHECK(bd.link.loops == 1);
  CHECK(fingerprints_equal(fingerprint(bd.link),
                           fingerprint(parse_pd(corpus("unknot-0.pd"))), false));
}

TEST_CASE("conversion round trip preserves the fingerprint exactly") {
  for (auto name : {"unknot-0.pd", "unknot-kink.pd", "trefoil.pd",
                    "trefoil-plat.pd", "figure-eight.pd", "hopf.pd",
                    "solomon.pd", "borromean.pd", "split-union.pd",
                    "unlink2-4x.pd", "unlink2-poke.pd"}) {
    CAPTURE(name);
    LinkDiagram d = preprocess_diagram(parse_pd(corpus(name)));
    Fingerprint f0 = fingerprint(d);
    ButterflyDiagram b = link_to_butterfly(bridge_decompose(d));
    BridgeDiagram back = butterfly_to_link(b);
    CHECK(fingerprint(back.link) == f0);
  }
}

TEST_CASE("derived bridge count never exceeds the trunk count") {
  for (auto make : {+[] { return make_rational_butterfly(3, 1); },
                    +[] { return make_rational_butterfly(5, 2); },
                    +[] { return make_rational_butterfly(7, 3); }}) {
    ButterflyDiagram b = make();
    BridgeDiagram bd = butterfly_to_link(b);
    CHECK(bd.n_overarcs() <= b.m());
  }
}
