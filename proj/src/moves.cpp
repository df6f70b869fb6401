#include "mbf/moves.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mbf/error.hpp"

namespace mbf {

std::string MoveRecord::to_json() const {
  std::string s = "{\"kind\":\"" + kind + "\"";
  auto put = [&s](const char* key, int val) {
    if (val >= 0) s += std::string(",\"") + key + "\":" + std::to_string(val);
  };
  put("trunk", trunk);
  put("e_vertex", e_vertex);
  put("endpoint", endpoint);
  put("new_e", new_e);
  s += ",\"m_before\":" + std::to_string(m_before);
  s += ",\"m_after\":" + std::to_string(m_after) + "}";
  return s;
}

bool is_simple_trunk(const ButterflyDiagram& b, int t) {
  if (t < 0 || t >= b.m())
    fail(Err::BadParameters, "no trunk " + std::to_string(t));
  const PlanarMap& m = b.map;
  if (m.face_len(t) != 4) return false;
  int pc = b.trunks[t].pos_c;
  for (int k : {1, 3}) {
    int v = m.dart_vertex[m.walk_dart(t, pc + k)];
    VertexKind kind = b.classes.kind[v];
    if (kind == VertexKind::A || kind == VertexKind::E) return false;
  }
  return true;
}

namespace {

// Sorts anchor dart pairs into a trunk table covering faces 0..m-1 exactly.
std::vector<Trunk> trunks_from_anchors(
    const PlanarMap& m, const std::vector<std::pair<int, int>>& anchors) {
  std::vector<Trunk> trunks;
  for (auto [dc, dd] : anchors) {
    assert(m.dart_face[dc] == m.dart_face[dd]);
    trunks.push_back({m.dart_face[dc], m.dart_pos[dc], m.dart_pos[dd]});
  }
  std::sort(trunks.begin(), trunks.end(),
            [](const Trunk& a, const Trunk& b) { return a.face < b.face; });
  for (int f = 0; f < (int)trunks.size(); ++f) assert(trunks[f].face == f);
  return trunks;
}

}  // namespace

std::pair<ButterflyDiagram, MoveRecord> trunk_reduce(const ButterflyDiagram& b,
                                                     int t, int endpoint) {
  const PlanarMap& m = b.map;
  if (!is_simple_trunk(b, t))
    fail(Err::NotSimple, "trunk " + std::to_string(t) + " is not simple");

  int s;
  if (endpoint == b.anchor_vertex_c(t))
    s = b.trunks[t].pos_c;
  else if (endpoint == b.anchor_vertex_d(t))
    s = b.trunks[t].pos_d;
  else
    fail(Err::BadParameters, "vertex " + std::to_string(endpoint) +
                                 " is not an endpoint of trunk " +
                                 std::to_string(t));

  int e0 = m.walk_dart(t, s);      // C -> c
  int e2 = m.walk_dart(t, s + 2);  // D -> d
  int e3 = m.walk_dart(t, s + 3);  // d -> C
  int C = m.dart_vertex[e0];
  if (m.valence(C) != 2)
    fail(Err::NoAdmissibleEndpoint,
         "endpoint " + std::to_string(C) + " has more than two edges");

  int back = m.alpha[e3];  // C's out-dart on the face behind the trunk
  int F = m.dart_face[back];
  if (F == t)
    fail(Err::SelfAdjacentFace, "the face behind endpoint " +
                                    std::to_string(C) +
                                    " is the trunk face itself");
  if (m.dart_face[m.alpha[e0]] != F)
    fail(Err::NoAdmissibleEndpoint,
         "endpoint " + std::to_string(C) +
             " does not border a single face behind the trunk");
  int pF = m.dart_pos[back];
  if (pF == b.trunks[F].pos_c || pF == b.trunks[F].pos_d)
    fail(Err::NoAdmissibleEndpoint,
         "endpoint " + std::to_string(C) + " carries a second trunk");
  int partner = m.dart_vertex[m.faces[F][pair_corner(b, F, pF)]];
  if (b.classes.kind[partner] != VertexKind::A)
    fail(Err::NoAdmissibleEndpoint,
         "mirror partner of endpoint " + std::to_string(C) +
             " is not an A-vertex");

  // Delete C together with its two edges. The 4-gon merges into F and the
  // merged face keeps F's length: the surviving trunk edges c-D and D-d
  // replace c-C and C-d at the same walk positions, so every anchor stays
  // where it was and D inherits C's mirror partner.
  std::vector<char> dead(m.n_darts(), 0);
  for (int d : {e0, m.alpha[e0], e3, back}) {
    if (dead[d])
      fail(Err::NoAdmissibleEndpoint, "trunk edges coincide at endpoint");
    dead[d] = 1;
  }
  std::vector<int> nmap(m.n_darts(), -1);
  int nn = 0;
  for (int d = 0; d < m.n_darts(); ++d)
    if (!dead[d]) nmap[d] = nn++;
  std::vector<int> alpha2(nn), sigma2(nn);
  for (int d = 0; d < m.n_darts(); ++d) {
    if (dead[d]) continue;
    alpha2[nmap[d]] = nmap[m.alpha[d]];
    int x = m.sigma[d];
    while (dead[x]) x = m.sigma[x];
    sigma2[nmap[d]] = nmap[x];
  }
  PlanarMap nm;
  try {
    nm = build_map(std::move(alpha2), std::move(sigma2));
  } catch (const Error& err) {
    if (err.code() == Err::NotConnected)
      fail(Err::WouldDisconnect,
           "deleting the trunk would disconnect the diagram");
    throw;
  }

  // Anchors sit at A-vertices; c and d are not A-vertices (the trunk is
  // simple), so no surviving anchor dart was deleted.
  std::vector<std::pair<int, int>> anchors;
  for (int u = 0; u < b.m(); ++u) {
    if (u == t) continue;
    int dc = b.anchor_dart_c(u), dd = b.anchor_dart_d(u);
    assert(!dead[dc] && !dead[dd]);
    anchors.push_back({nmap[dc], nmap[dd]});
  }
  int new_e = nm.dart_vertex[nmap[e2]];
  std::vector<Trunk> trunks = trunks_from_anchors(nm, anchors);
  ButterflyDiagram out = make_butterfly(std::move(nm), std::move(trunks));
  MoveRecord rec{"reduce", t, -1, C, new_e, b.m(), out.m()};
  return {std::move(out), rec};
}

std::pair<ButterflyDiagram, MoveRecord> trunk_expand(const ButterflyDiagram& b,
                                                     int e_vertex) {
  const PlanarMap& m0 = b.map;
  if (e_vertex < 0 || e_vertex >= m0.n_vertices() ||
      b.classes.kind[e_vertex] != VertexKind::E)
    fail(Err::NotEVertex,
         "vertex " + std::to_string(e_vertex) + " is not an E-vertex");

  // Site: prefer a corner of e whose mirror partner is an A-vertex, so the
  // new trunk can be reduced straight back at its new endpoint.
  int g = -1;
  bool g_good = false;
  std::vector<int> cands = m0.vertices[e_vertex];
  std::sort(cands.begin(), cands.end());
  for (int cand : cands) {
    int f = m0.dart_face[cand];
    int partner =
        m0.dart_vertex[m0.faces[f][pair_corner(b, f, m0.dart_pos[cand])]];
    bool good = b.classes.kind[partner] == VertexKind::A;
    if (g < 0 || (good && !g_good)) {
      g = cand;
      g_good = good;
    }
  }

  PlanarMap cur = m0;
  std::vector<std::pair<int, int>> anchors;
  for (int t = 0; t < b.m(); ++t)
    anchors.push_back({b.anchor_dart_c(t), b.anchor_dart_d(t)});

  // When a walk neighbor of e is itself an A- or E-vertex, carving next to
  // it would split a corner on a reflection axis. Subdividing the whole
  // mirror orbit of e's two edges first inserts midpoints symmetrically in
  // every face, so both carve corners land on fresh plain material.
  {
    int f = cur.dart_face[g], len = cur.face_len(f), p = cur.dart_pos[g];
    int gin = cur.faces[f][(p + len - 1) % len];
    auto ae = [&](int v) {
      return b.classes.kind[v] == VertexKind::A ||
             b.classes.kind[v] == VertexKind::E;
    };
    int c = cur.dart_vertex[gin];
    int d = cur.dart_vertex[cur.faces[f][(p + 1) % len]];
    if (ae(c) || ae(d)) {
      std::set<int> orbit;
      std::vector<int> stack = {g, cur.alpha[g], gin, cur.alpha[gin]};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (!orbit.insert(x).second) continue;
        stack.push_back(cur.alpha[x]);
        int xf = cur.dart_face[x];
        stack.push_back(cur.faces[xf][pair_side(b, xf, cur.dart_pos[x])]);
      }
      std::map<int, int> rep;  // edge -> smallest dart
      for (int x : orbit) {
        auto it = rep.find(cur.dart_edge[x]);
        if (it == rep.end() || x < it->second) rep[cur.dart_edge[x]] = x;
      }
      std::vector<int> reps;
      for (auto [e, x] : rep) reps.push_back(x);
      for (size_t i = 0; i < reps.size(); ++i) {
        Rewrite r = subdivide_edge(cur, reps[i]);
        for (size_t j = i + 1; j < reps.size(); ++j)
          reps[j] = r.dart_map[reps[j]];
        g = r.dart_map[g];
        for (auto& [a1, a2] : anchors) {
          a1 = r.dart_map[a1];
          a2 = r.dart_map[a2];
        }
        cur = std::move(r.map);
      }
    }
  }

  // Connect the corners on both sides of e's corner, then split the new
  // edge at the future endpoint C. The carved face is a 4-gon with C and e
  // antipodal; the remaining face keeps its length, with C taking over e's
  // former corner slot and hence e's mirror partner.
  int F = cur.dart_face[g], len = cur.face_len(F), p = cur.dart_pos[g];
  int nd = cur.n_darts();
  Rewrite r1 = add_edge_in_face(cur, F, (p + len - 1) % len, (p + 1) % len);
  g = r1.dart_map[g];
  for (auto& [a1, a2] : anchors) {
    a1 = r1.dart_map[a1];
    a2 = r1.dart_map[a2];
  }
  cur = std::move(r1.map);
  Rewrite r2 = subdivide_edge(cur, nd);
  g = r2.dart_map[g];
  for (auto& [a1, a2] : anchors) {
    a1 = r2.dart_map[a1];
    a2 = r2.dart_map[a2];
  }
  cur = std::move(r2.map);

  int N0 = nd + 2;  // C's out-dart toward the corner before e
  int C = cur.dart_vertex[N0];
  int e_cur = cur.dart_vertex[g];
  int Pf = cur.dart_face[g];
  assert(cur.dart_face[N0] == Pf && cur.face_len(Pf) == 4);
  assert((cur.dart_pos[N0] + 2) % 4 == cur.dart_pos[g]);
  anchors.push_back({N0, g});

  std::vector<Trunk> trunks = trunks_from_anchors(cur, anchors);
  ButterflyDiagram mid = make_butterfly(std::move(cur), std::move(trunks));
  std::vector<int> vmap;
  ButterflyDiagram out = smooth_plain_vertices(mid, &vmap);

  int new_c = vmap[C];
  int new_a = vmap[e_cur];
  assert(new_c >= 0 && new_a >= 0);
  assert(out.classes.kind[new_a] == VertexKind::A);
  int new_t = -1;
  for (int u = 0; u < out.m() && new_t < 0; ++u)
    if (out.anchor_vertex_c(u) == new_c || out.anchor_vertex_d(u) == new_c)
      new_t = u;
  assert(new_t >= 0);

  MoveRecord rec{"expand", new_t, e_vertex, new_c, -1, b.m(), out.m()};
  return {std::move(out), rec};
}

ButterflyDiagram eliminate_e_vertices(const ButterflyDiagram& b) {
  ButterflyDiagram cur = b;
  for (;;) {
    int e = -1;
    for (int v = 0; v < cur.map.n_vertices() && e < 0; ++v)
      if (cur.classes.kind[v] == VertexKind::E) e = v;
    if (e < 0) return cur;
    cur = trunk_expand(cur, e).first;
  }
}

std::pair<ButterflyDiagram, std::vector<MoveRecord>> reduce_to_bridges(
    const ButterflyDiagram& b) {
  classify_vertices(b);  // the tour needs a fully classified diagram
  ButterflyDiagram cur = b;
  std::vector<MoveRecord> recs;
  for (;;) {
    std::vector<char> simple(cur.m(), 0);
    bool any = false;
    for (int t = 0; t < cur.m(); ++t)
      if ((simple[t] = is_simple_trunk(cur, t))) any = true;
    if (!any) break;

    GammaGraph gg = gamma_graph(cur);
    LinkComponents lc = link_components(cur);
    const std::vector<std::pair<int, int>>* cyc = nullptr;
    for (const auto& c : lc.cycles) {
      for (auto [t, p] : c)
        if (simple[t]) {
          cyc = &c;
          break;
        }
      if (cyc) break;
    }
    assert(cyc);
    int L = (int)cyc->size();

    // Anchor through which the tour enters each trunk, in stored order.
    std::vector<int> enter(L);
    enter[0] = cur.anchor_vertex_c((*cyc)[0].first);
    for (int i = 0; i + 1 < L; ++i) {
      auto [t, p] = (*cyc)[i];
      int exit = cur.anchor_vertex_c(t) == enter[i] ? cur.anchor_vertex_d(t)
                                                    : cur.anchor_vertex_c(t);
      if (p < 0) {
        enter[i + 1] = exit;
      } else {
        const auto& path = gg.paths[p];
        enter[i + 1] = path.front() == exit ? path.back() : path.front();
      }
    }

    // Tour from the smallest-id non-simple trunk; reduce the first simple
    // trunk found, at its tour-backward endpoint if admissible, else the
    // forward one.
    int start = -1;
    for (int i = 0; i < L; ++i) {
      int t = (*cyc)[i].first;
      if (simple[t]) continue;
      if (start < 0 || t < (*cyc)[start].first) start = i;
    }
    if (start < 0)
      fail(Err::ComponentAllSimple,
           "a link component consists of simple trunks only");
    bool done = false;
    std::pair<ButterflyDiagram, MoveRecord> step;
    for (int k = 1; k <= L && !done; ++k) {
      int i = (start + k) % L;
      int target = (*cyc)[i].first;
      if (!simple[target]) continue;
      int v_in = enter[i];
      int v_out = cur.anchor_vertex_c(target) == v_in
                      ? cur.anchor_vertex_d(target)
                      : cur.anchor_vertex_c(target);
      for (int v : {v_in, v_out}) {
        try {
          step = trunk_reduce(cur, target, v);
          done = true;
          break;
        } catch (const Error& err) {
          if (err.code() != Err::NoAdmissibleEndpoint &&
              err.code() != Err::SelfAdjacentFace)
            throw;
        }
      }
    }
    if (!done)
      fail(Err::NoAdmissibleEndpoint,
           "no simple trunk on the component has an admissible endpoint");
    std::vector<int> vmap;
    cur = smooth_plain_vertices(step.first, &vmap);
    step.second.new_e = step.second.new_e >= 0 ? vmap[step.second.new_e] : -1;
    recs.push_back(step.second);
  }
  return {std::move(cur), std::move(recs)};
}

}  // namespace mbf
