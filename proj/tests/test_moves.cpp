#include <string>
#include <vector>

#include "doctest.h"
#include "mbf/butterfly.hpp"
#include "mbf/codecs.hpp"
#include "mbf/convert.hpp"
#include "mbf/error.hpp"
#include "mbf/moves.hpp"
#include "mbf/verify.hpp"
#include "test_helpers.hpp"

using namespace mbf;
using mbf::test::corpus;
using mbf::test::make_lune;
using mbf::test::make_theta;

namespace {

ButterflyDiagram wall(const std::string& name) {
  return link_to_butterfly(
      bridge_decompose(preprocess_diagram(parse_pd(corpus(name)))));
}

Fingerprint fp(const ButterflyDiagram& b) {
  return fingerprint(butterfly_to_link(b).link);
}

int count_kind(const ButterflyDiagram& b, VertexKind k) {
  int n = 0;
  for (auto kk : b.classes.kind)
    if (kk == k) ++n;
  return n;
}

int first_e(const ButterflyDiagram& b) {
  for (int v = 0; v < b.map.n_vertices(); ++v)
    if (b.classes.kind[v] == VertexKind::E) return v;
  return -1;
}

int count_simple(const ButterflyDiagram& b) {
  int n = 0;
  for (int t = 0; t < b.m(); ++t)
    if (is_simple_trunk(b, t)) ++n;
  return n;
}

}  // namespace

TEST_CASE("simple trunks of walls are exactly the simple-arc trunks") {
  BridgeDiagram bd = bridge_decompose(parse_pd(corpus("trefoil-plat.pd")));
  CHECK(count_simple(link_to_butterfly(bd)) == bd.n_simple());
  CHECK(count_simple(wall("trefoil.pd")) == 0);
  CHECK(count_simple(wall("unlink2-poke.pd")) == 2);
  CHECK(count_simple(make_rational_butterfly(3, 1)) == 0);
}

TEST_CASE("expanding an E-vertex adds a trunk and keeps the link") {
  ButterflyDiagram r31 = make_rational_butterfly(3, 1);
  Fingerprint f31 = fp(r31);
  REQUIRE(count_kind(r31, VertexKind::E) == 2);

  auto [b1, rec] = trunk_expand(r31, first_e(r31));
  CHECK(b1.m() == 3);
  CHECK(rec.kind == "expand");
  CHECK(rec.m_before == 2);
  CHECK(rec.m_after == 3);
  CHECK(rec.e_vertex == first_e(r31));
  CHECK(rec.trunk >= 0);
  CHECK(rec.endpoint >= 0);
  CHECK(count_kind(b1, VertexKind::E) == 1);
  CHECK(count_kind(b1, VertexKind::Plain) == 0);
  CHECK(fp(b1).str() == f31.str());
  CHECK(is_simple_trunk(b1, rec.trunk));
  CHECK(b1.anchor_vertex_c(rec.trunk) == rec.endpoint);
}

TEST_CASE("reducing the new trunk undoes the expansion") {
  ButterflyDiagram r31 = make_rational_butterfly(3, 1);
  auto [b1, rec1] = trunk_expand(r31, first_e(r31));
  auto [b2, rec2] = trunk_reduce(b1, rec1.trunk, rec1.endpoint);
  ButterflyDiagram b2s = smooth_plain_vertices(b2);
  CHECK(rec2.kind == "reduce");
  CHECK(rec2.m_before == 3);
  CHECK(rec2.m_after == 2);
  CHECK(rec2.new_e >= 0);
  CHECK(butterfly_isomorphic(b2s, r31));
  CHECK(fp(b2s).str() == fp(r31).str());
}

TEST_CASE("a reduction mints exactly one E-vertex") {
  ButterflyDiagram w = wall("trefoil-plat.pd");
  REQUIRE(count_kind(w, VertexKind::E) == 0);
  auto [red, recs] = reduce_to_bridges(w);
  CHECK((int)recs.size() == 2);
  CHECK(count_kind(red, VertexKind::E) == 2);
  for (const MoveRecord& r : recs) {
    CHECK(r.kind == "reduce");
    CHECK(r.new_e >= 0);
    CHECK(r.m_after == r.m_before - 1);
  }
  // the record's E-vertex id is valid in the diagram the move returned
  CHECK(red.classes.kind[recs.back().new_e] == VertexKind::E);
}

TEST_CASE("eliminate_e_vertices reaches an E-free butterfly") {
  ButterflyDiagram r31 = make_rational_butterfly(3, 1);
  ButterflyDiagram full = eliminate_e_vertices(r31);
  CHECK(full.m() == 4);
  CHECK(count_kind(full, VertexKind::E) == 0);
  CHECK(fp(full).str() == fp(r31).str());

  ButterflyDiagram r52 = make_rational_butterfly(5, 2);
  ButterflyDiagram full52 = eliminate_e_vertices(r52);
  CHECK(count_kind(full52, VertexKind::E) == 0);
  CHECK(fp(full52).str() == fp(r52).str());
}

TEST_CASE("move errors: wrong trunk, wrong vertex") {
  ButterflyDiagram r31 = make_rational_butterfly(3, 1);
  try {
    trunk_reduce(r31, 0, r31.anchor_vertex_c(0));
    FAIL("expected NotSimple");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotSimple);
  }
  try {
    trunk_expand(r31, 0);  // vertex 0 is an A-vertex
    FAIL("expected NotEVertex");
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotEVertex);
  }
  try {
    trunk_reduce(r31, 99, 0);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadParameters);
  }
}

TEST_CASE("move records serialize to json") {
  ButterflyDiagram r31 = make_rational_butterfly(3, 1);
  auto [b1, rec] = trunk_expand(r31, first_e(r31));
  std::string j = rec.to_json();
  CHECK(j.find("\"kind\":\"expand\"") != std::string::npos);
  CHECK(j.find("\"e_vertex\":") != std::string::npos);
  CHECK(j.find("\"m_before\":2") != std::string::npos);
  CHECK(j.find("\"m_after\":3") != std::string::npos);
  CHECK(j.find("\"new_e\"") == std::string::npos);  // expand mints no E
  CHECK(j.front() == '{');
  CHECK(j.back() == '}');
}

TEST_CASE("reduce_to_bridges leaves minimal diagrams alone") {
  auto [red, recs] = reduce_to_bridges(make_rational_butterfly(3, 1));
  CHECK(red.m() == 2);
  CHECK(recs.empty());

  for (auto name :
       {"trefoil.pd", "solomon.pd", "unknot-kink.pd", "borromean.pd"}) {
    CAPTURE(name);
    ButterflyDiagram w = wall(name);
    auto [r, rs] = reduce_to_bridges(w);
    CHECK(r.m() == w.m());
    CHECK(rs.empty());
  }
}

TEST_CASE("plat wall reduces to the rational 2-butterfly") {
  ButterflyDiagram w = wall("trefoil-plat.pd");
  Fingerprint fw = fp(w);
  auto [red, recs] = reduce_to_bridges(w);
  CHECK(red.m() == 2);
  CHECK(recs.size() == 2);
  CHECK(fp(red).str() == fw.str());
  CHECK(butterfly_isomorphic(red, make_rational_butterfly(3, 1)));
  CHECK(count_kind(red, VertexKind::Plain) == 0);
}

TEST_CASE("walls with simple arcs drop to the overarc count") {
  for (auto name : {"unlink2-poke.pd", "unlink2-4x.pd"}) {
    CAPTURE(name);
    ButterflyDiagram w = wall(name);
    Fingerprint fw = fp(w);
    BridgeDiagram bd = bridge_decompose(preprocess_diagram(parse_pd(corpus(name))));
    auto [red, recs] = reduce_to_bridges(w);
    CHECK(red.m() == bd.n_overarcs());
    CHECK((int)recs.size() == w.m() - red.m());
    CHECK(fp(red).str() == fw.str());
  }
}

TEST_CASE("figure-eight plat wall reduces to rational(5,2)") {
  ButterflyDiagram w = wall("figure-eight-plat.pd");
  CHECK(w.m() == 8);
  auto [red, recs] = reduce_to_bridges(w);
  CHECK(red.m() == 2);
  CHECK(butterfly_isomorphic(red, make_rational_butterfly(5, 2)));
  CHECK(fp(red).str() == fp(make_rational_butterfly(5, 2)).str());
}

TEST_CASE("theta butterfly of the borromean rings") {
  ButterflyDiagram b = make_lune(10, 3, 3, 3);
  CHECK(b.m() == 3);
  CHECK(b.map.n_vertices() == 29);
  CHECK(b.map.n_edges() == 30);
  CHECK(count_kind(b, VertexKind::A) == 6);
  CHECK(count_kind(b, VertexKind::E) == 9);
  CHECK(count_kind(b, VertexKind::B) == 14);
  CHECK(link_components(b).count == 3);
  CHECK(fingerprints_equal(fp(b), fingerprint(parse_pd(corpus("borromean.pd"))),
                           false));
  BridgeDiagram em = butterfly_to_link(b);
  CHECK(em.link.n_crossings() == 12);
  CHECK(em.n_overarcs() == 3);
  CHECK(butterfly_isomorphic(parse_btf(corpus("borromean-3bfly.btf")), b));
}

TEST_CASE("twelve-arc borromean wall reduces to the theta butterfly") {
  ButterflyDiagram w = wall("borromean-12arc.pd");
  CHECK(w.m() == 12);
  CHECK(count_kind(w, VertexKind::E) == 0);
  Fingerprint fw = fp(w);
  auto [red, recs] = reduce_to_bridges(w);
  CHECK(red.m() == 3);
  CHECK(recs.size() == 9);
  CHECK(count_kind(red, VertexKind::E) == 9);
  CHECK(fp(red).str() == fw.str());
  CHECK(butterfly_isomorphic(red, make_lune(10, 3, 3, 3)));
}

TEST_CASE("expansion against an A-neighbor subdivides and stays reducible") {
  // lune E-vertices sit between A and B vertices, so expansion takes the
  // subdividing branch; eliminating all nine must still terminate exactly.
  ButterflyDiagram b = make_lune(10, 3, 3, 3);
  Fingerprint f0 = fp(b);
  ButterflyDiagram full = eliminate_e_vertices(b);
  CHECK(full.m() == 12);
  CHECK(count_kind(full, VertexKind::E) == 0);
  CHECK(fp(full).str() == f0.str());
  auto [red, recs] = reduce_to_bridges(full);
  CHECK(red.m() == 3);
  CHECK(butterfly_isomorphic(red, b));
}

TEST_CASE("non-isomorphic butterflies with the same knot") {
  ButterflyDiagram a = parse_btf(corpus("eight20-a.btf"));
  ButterflyDiagram b = parse_btf(corpus("eight20-b.btf"));
  CHECK_FALSE(butterfly_isomorphic(a, b));
  CHECK(fp(a).str() == fp(b).str());
  auto [ra, sa] = reduce_to_bridges(wall("eight20-a.pd"));
  auto [rb, sb] = reduce_to_bridges(wall("eight20-b.pd"));
  CHECK(ra.m() == 3);
  CHECK(rb.m() == 3);
  CHECK(butterfly_isomorphic(ra, a));
  CHECK(butterfly_isomorphic(rb, b));
  CHECK_FALSE(butterfly_isomorphic(ra, rb));
}

TEST_CASE("moves preserve butterfly validity certificates") {
  ButterflyDiagram b = make_lune(10, 3, 3, 3);
  ButterflyDiagram full = eliminate_e_vertices(b);
  for (const ButterflyDiagram* p : {&b, &full}) {
    QuotientComplex qc = quotient_cell_counts(*p);
    CHECK(qc.chi() == 0);
    CHECK_NOTHROW(classify_vertices(*p));
  }
}
