#include "mbf/gen.hpp"

#include <numeric>
#include <random>
#include <utility>

#include "mbf/convert.hpp"
#include "mbf/error.hpp"

namespace mbf {

namespace {

int emitted_crossings(const ButterflyDiagram& b) {
  return butterfly_to_link(b).link.n_crossings();
}

}  // namespace

GenInstance random_butterfly(const GenConfig& cfg) {
  if (cfg.max_m < 1) fail(Err::BadParameters, "max_m must be at least 1");
  std::mt19937_64 rng(cfg.seed);

  struct Base {
    ButterflyDiagram b;
    std::string name;
  };
  std::vector<Base> bases;
  if (cfg.rational_bases) {
    for (int p = 2; p <= 8; ++p)
      for (int q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1) continue;
        if (2 * (p - 1) > cfg.max_crossings) continue;
        ButterflyDiagram b = make_rational_butterfly(p, q);
        if (b.m() > cfg.max_m) continue;
        bases.push_back({std::move(b), "rational(" + std::to_string(p) + "," +
                                           std::to_string(q) + ")"});
      }
  }
  for (std::size_t i = 0; i < cfg.extra_bases.size(); ++i) {
    const ButterflyDiagram& b = cfg.extra_bases[i];
    if (b.m() > cfg.max_m || emitted_crossings(b) > cfg.max_crossings) continue;
    bases.push_back({b, "extra[" + std::to_string(i) + "]"});
  }
  if (bases.empty())
    fail(Err::BadParameters, "budget admits no generation base");

  std::size_t pick = rng() % bases.size();
  GenInstance inst;
  inst.source = bases[pick].name;
  inst.stages.push_back(std::move(bases[pick].b));

  if (cfg.walk_expansions && cfg.max_expansions > 0) {
    int want = static_cast<int>(rng() % (std::uint64_t)(cfg.max_expansions + 1));
    for (int step = 0; step < want; ++step) {
      const ButterflyDiagram& cur = inst.stages.back();
      if (cur.m() >= cfg.max_m) break;
      std::vector<int> es;
      for (int v = 0; v < cur.map.n_vertices(); ++v)
        if (cur.classes.kind[v] == VertexKind::E) es.push_back(v);
      if (es.empty()) break;
      int e = es[rng() % es.size()];
      auto [next, rec] = trunk_expand(cur, e);
      if (emitted_crossings(next) > cfg.max_crossings) break;
      inst.stages.push_back(std::move(next));
      inst.expansions.push_back(rec);
    }
  }

  inst.butterfly = inst.stages.back();
  return inst;
}

std::vector<GenInstance> shrink(const GenInstance& inst) {
  std::vector<GenInstance> out;
  for (int keep = static_cast<int>(inst.expansions.size()) - 1; keep >= 0;
       --keep) {
    GenInstance s;
    s.source = inst.source;
    s.stages.assign(inst.stages.begin(), inst.stages.begin() + keep + 1);
    s.expansions.assign(inst.expansions.begin(),
                        inst.expansions.begin() + keep);
    s.butterfly = s.stages.back();
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace mbf
