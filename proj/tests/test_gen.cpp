#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "mbf/butterfly.hpp"
#include "mbf/codecs.hpp"
#include "mbf/convert.hpp"
#include "mbf/error.hpp"
#include "mbf/gen.hpp"
#include "mbf/verify.hpp"
#include "test_helpers.hpp"

using namespace mbf;

namespace {

Fingerprint fp(const ButterflyDiagram& b) {
  return fingerprint(butterfly_to_link(b).link);
}

}  // namespace

TEST_CASE("same seed gives byte-identical instances") {
  for (std::uint64_t seed : {0ull, 1ull, 7ull, 123456789ull}) {
    CAPTURE(seed);
    GenConfig cfg;
    cfg.seed = seed;
    GenInstance a = random_butterfly(cfg);
    GenInstance b = random_butterfly(cfg);
    CHECK(a.source == b.source);
    CHECK(a.expansions.size() == b.expansions.size());
    CHECK(emit_btf(a.butterfly) == emit_btf(b.butterfly));
  }
}

TEST_CASE("seeds vary the instance") {
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    seen.insert(emit_btf(random_butterfly(cfg).butterfly));
  }
  CHECK(seen.size() > 5);
}

TEST_CASE("instances respect the budget and pass every certificate") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CAPTURE(seed);
    GenConfig cfg;
    cfg.seed = seed;
    GenInstance inst = random_butterfly(cfg);
    CHECK(inst.butterfly.m() <= cfg.max_m);
    CHECK((int)inst.expansions.size() <= cfg.max_expansions);
    BridgeDiagram em = butterfly_to_link(inst.butterfly);
    CHECK(em.link.n_crossings() <= cfg.max_crossings);
    CHECK_NOTHROW(classify_vertices(inst.butterfly));
    QuotientComplex qc = quotient_cell_counts(inst.butterfly);
    CHECK(qc.chi() == 0);
    CHECK_NOTHROW(gamma_graph(inst.butterfly));
  }
}

TEST_CASE("expansion stages never change the link") {
  int walks = 0;
  for (std::uint64_t seed = 0; seed < 30 && walks < 8; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    GenInstance inst = random_butterfly(cfg);
    if (inst.expansions.empty()) continue;
    ++walks;
    CAPTURE(seed);
    Fingerprint base = fp(inst.stages.front());
    for (const ButterflyDiagram& stage : inst.stages)
      CHECK(fp(stage).str() == base.str());
    for (std::size_t k = 0; k < inst.expansions.size(); ++k)
      CHECK(inst.stages[k + 1].m() == inst.stages[k].m() + 1);
  }
  CHECK(walks >= 8);
}

TEST_CASE("rational-only source yields a two-bridge butterfly") {
  GenConfig cfg;
  cfg.walk_expansions = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    cfg.seed = seed;
    GenInstance inst = random_butterfly(cfg);
    CHECK(inst.butterfly.m() == 2);
    CHECK(inst.expansions.empty());
    CHECK(inst.source.substr(0, 9) == "rational(");
  }
}

TEST_CASE("walks exhaust the E-supply and stop") {
  // rational(3,1) has two E-vertices, so its walks cap at two expansions
  GenConfig cfg;
  cfg.rational_bases = false;
  cfg.extra_bases.push_back(make_rational_butterfly(3, 1));
  cfg.max_expansions = 5;
  cfg.max_m = 10;
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    cfg.seed = seed;
    GenInstance inst = random_butterfly(cfg);
    CHECK(inst.expansions.size() <= 2);
    CHECK(inst.butterfly.m() <= 4);
  }
}

TEST_CASE("a three-step walk from rational(5,2) keeps the knot") {
  GenConfig cfg;
  cfg.rational_bases = false;
  cfg.extra_bases.push_back(make_rational_butterfly(5, 2));
  cfg.max_expansions = 3;
  cfg.max_m = 8;
  Fingerprint f52 = fp(make_rational_butterfly(5, 2));
  bool found = false;
  for (std::uint64_t seed = 0; seed < 64 && !found; ++seed) {
    cfg.seed = seed;
    GenInstance inst = random_butterfly(cfg);
    if (inst.expansions.size() != 3) continue;
    found = true;
    CHECK(inst.butterfly.m() == 5);
    CHECK(fp(inst.butterfly).str() == f52.str());
  }
  CHECK(found);
}

TEST_CASE("extra bases enter the mix") {
  GenConfig cfg;
  cfg.rational_bases = false;
  cfg.walk_expansions = false;
  cfg.extra_bases.push_back(mbf::test::make_lune(10, 3, 3, 3));
  cfg.max_crossings = 14;
  GenInstance inst = random_butterfly(cfg);
  CHECK(inst.source == "extra[0]");
  CHECK(butterfly_isomorphic(inst.butterfly, cfg.extra_bases[0]));
}

TEST_CASE("shrink walks back to the base in reverse") {
  GenInstance inst;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    inst = random_butterfly(cfg);
    if (inst.expansions.size() >= 2) break;
  }
  REQUIRE(inst.expansions.size() >= 2);
  std::vector<GenInstance> smaller = shrink(inst);
  CHECK(smaller.size() == inst.expansions.size());
  for (std::size_t i = 0; i < smaller.size(); ++i) {
    const GenInstance& s = smaller[i];
    CHECK(s.expansions.size() == inst.expansions.size() - 1 - i);
    CHECK(s.butterfly.m() == inst.butterfly.m() - 1 - (int)i);
    CHECK(emit_btf(s.butterfly) ==
          emit_btf(inst.stages[inst.stages.size() - 2 - i]));
    CHECK(fp(s.butterfly).str() == fp(inst.butterfly).str());
  }
  CHECK(smaller.back().expansions.empty());
  CHECK(shrink(smaller.back()).empty());
}

TEST_CASE("impossible budgets are rejected") {
  GenConfig cfg;
  cfg.max_m = 0;
  try {
    random_butterfly(cfg);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadParameters);
  }
  GenConfig none;
  none.rational_bases = false;
  try {
    random_butterfly(none);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Err::BadParameters);
  }
}
