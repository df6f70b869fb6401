#include "mbf/butterfly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mbf {

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

VertexClasses classify_tolerant(const PlanarMap& m,
                                const std::vector<Trunk>& trunks) {
  int V = m.n_vertices();
  UF uf(V);
  for (const Trunk& t : trunks) {
    int len = m.face_len(t.face);
    for (int p = 0; p < len; ++p) {
      int q = ((2 * t.pos_c - p) % len + len) % len;
      uf.unite(m.dart_vertex[m.faces[t.face][p]],
               m.dart_vertex[m.faces[t.face][q]]);
    }
  }

  VertexClasses vc;
  vc.cls.assign(V, -1);
  std::map<int, int> ids;
  for (int v = 0; v < V; ++v) {
    int r = uf.find(v);
    auto [it, fresh] = ids.try_emplace(r, (int)ids.size());
    vc.cls[v] = it->second;
    if (fresh) vc.members.emplace_back();
    vc.members[it->second].push_back(v);
  }

  std::vector<char> is_a(V, 0);
  for (const Trunk& t : trunks) {
    is_a[m.dart_vertex[m.faces[t.face][t.pos_c]]] = 1;
    is_a[m.dart_vertex[m.faces[t.face][t.pos_d]]] = 1;
  }
  int C = (int)vc.members.size();
  std::vector<char> has_a(C, 0), has_fat(C, 0);
  for (int v = 0; v < V; ++v) {
    if (is_a[v]) has_a[vc.cls[v]] = 1;
    if (m.valence(v) != 2) has_fat[vc.cls[v]] = 1;
  }
  vc.kind.assign(V, VertexKind::Plain);
  for (int v = 0; v < V; ++v) {
    int c = vc.cls[v];
    if (is_a[v]) {
      vc.kind[v] = VertexKind::A;
      ++vc.count_a;
    } else if (has_a[c]) {
      vc.kind[v] = VertexKind::E;
      ++vc.count_e;
    } else if (has_fat[c]) {
      vc.kind[v] = VertexKind::B;
      ++vc.count_b;
    } else {
      ++vc.count_plain;
    }
  }
  return vc;
}

}  // namespace

ButterflyDiagram make_butterfly(PlanarMap map, std::vector<Trunk> trunks) {
  if ((int)trunks.size() != map.n_faces())
    fail(Err::BadParameters, "need exactly one trunk per face");
  std::sort(trunks.begin(), trunks.end(),
            [](const Trunk& a, const Trunk& b) { return a.face < b.face; });
  for (int f = 0; f < (int)trunks.size(); ++f) {
    if (trunks[f].face != f)
      fail(Err::BadParameters, "trunk faces must cover every face exactly once");
    int len = map.face_len(f);
    int n = len / 2;
    Trunk& t = trunks[f];
    if (len % 2 != 0 || t.pos_c < 0 || t.pos_c >= len || t.pos_d < 0 ||
        t.pos_d >= len || (t.pos_d - t.pos_c + len) % len != n)
      fail(Err::AnchorNotAntipodal,
           "trunk anchors of face " + std::to_string(f) +
               " are not antipodal on its walk");
    if (map.dart_vertex[map.faces[f][t.pos_c]] ==
        map.dart_vertex[map.faces[f][t.pos_d]])
      fail(Err::ClosedTrunk,
           "trunk endpoints of face " + std::to_string(f) + " coincide");
  }

  ButterflyDiagram b;
  b.map = std::move(map);
  b.trunks = std::move(trunks);
  b.classes = classify_tolerant(b.map, b.trunks);
  b.map.vertex_mark.assign(b.map.n_vertices(), 0);
  for (int v = 0; v < b.map.n_vertices(); ++v)
    if (b.classes.kind[v] == VertexKind::A || b.classes.kind[v] == VertexKind::E)
      b.map.vertex_mark[v] = 1;
  return b;
}

int pair_corner(const ButterflyDiagram& b, int face, int pos) {
  int len = b.map.face_len(face);
  return ((2 * b.trunks[face].pos_c - pos) % len + len) % len;
}

int pair_side(const ButterflyDiagram& b, int face, int pos) {
  int len = b.map.face_len(face);
  return ((2 * b.trunks[face].pos_c - 1 - pos) % len + len) % len;
}

VertexClasses classify_vertices(const ButterflyDiagram& b) {
  const VertexClasses& vc = b.classes;
  for (int v = 0; v < b.map.n_vertices(); ++v) {
    if ((vc.kind[v] == VertexKind::A || vc.kind[v] == VertexKind::E) &&
        b.map.valence(v) != 2)
      fail(Err::NonBivalentAE, "vertex " + std::to_string(v) +
                                   " is A/E but has valence " +
                                   std::to_string(b.map.valence(v)));
  }
  if (vc.count_plain > 0) {
    for (int v = 0; v < b.map.n_vertices(); ++v)
      if (vc.kind[v] == VertexKind::Plain)
        fail(Err::UnclassifiableVertex,
             "vertex " + std::to_string(v) + " is none of A/E/B");
  }
  return vc;
}

GammaGraph gamma_graph(const ButterflyDiagram& b) {
  const PlanarMap& m = b.map;
  GammaGraph g;
  for (int f = 0; f < b.m(); ++f) {
    int len = m.face_len(f), n = len / 2;
    int pc = b.trunks[f].pos_c;
    for (int k = 1; k < n; ++k) {
      int pp = (pc + k) % len;
      int pm = ((pc - k) % len + len) % len;
      VertexKind kd = b.classes.kind[m.dart_vertex[m.faces[f][pp]]];
      if (kd == VertexKind::A || kd == VertexKind::E)
        g.chords.push_back({f, k, pp, pm});
    }
  }

  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (chord, other)
  for (int c = 0; c < (int)g.chords.size(); ++c) {
    const Chord& ch = g.chords[c];
    int u = m.dart_vertex[m.faces[ch.face][ch.pos_plus]];
    int v = m.dart_vertex[m.faces[ch.face][ch.pos_minus]];
    adj[u].push_back({c, v});
    adj[v].push_back({c, u});
  }

  for (int v = 0; v < m.n_vertices(); ++v) {
    int deg = adj.count(v) ? (int)adj[v].size() : 0;
    // Valence 0 is tolerated here: it happens at chord-free anchors, which
    // link_components resolves by joining trunks end to end (degenerate).
    if (b.classes.kind[v] == VertexKind::A && deg > 1)
      fail(Err::GammaNotPaths, "A-vertex " + std::to_string(v) +
                                   " has gamma valence " + std::to_string(deg));
    if (b.classes.kind[v] == VertexKind::E && deg != 2)
      fail(Err::GammaNotPaths, "E-vertex " + std::to_string(v) +
                                   " has gamma valence " + std::to_string(deg));
  }

  std::vector<char> used(g.chords.size(), 0);
  for (int v = 0; v < m.n_vertices(); ++v) {
    if (b.classes.kind[v] != VertexKind::A || adj[v].empty()) continue;
    auto [c0, w0] = adj[v][0];
    if (used[c0]) continue;
    std::vector<int> path{v}, chords;
    int cur = v;
    int chord = c0;
    while (true) {
      used[chord] = 1;
      chords.push_back(chord);
      int nxt = -1;
      for (auto [cc, ww] : adj[cur])
        if (cc == chord) nxt = ww;
      path.push_back(nxt);
      cur = nxt;
      if (b.classes.kind[cur] == VertexKind::A) break;
      chord = -1;
      for (auto [cc, ww] : adj[cur])
        if (!used[cc]) chord = cc;
      if (chord < 0)
        fail(Err::GammaNotPaths, "gamma walk stuck at vertex " + std::to_string(cur));
    }
    g.paths.push_back(std::move(path));
    g.path_chords.push_back(std::move(chords));
  }
  for (char u : used)
    if (!u) fail(Err::GammaNotPaths, "gamma contains a closed cycle of chords");
  return g;
}

LinkComponents link_components(const ButterflyDiagram& b) {
  GammaGraph g = gamma_graph(b);
  std::map<int, std::vector<int>> trunk_at, path_at;
  for (int t = 0; t < b.m(); ++t) {
    trunk_at[b.anchor_vertex_c(t)].push_back(t);
    trunk_at[b.anchor_vertex_d(t)].push_back(t);
  }
  for (int p = 0; p < (int)g.paths.size(); ++p) {
    path_at[g.paths[p].front()].push_back(p);
    path_at[g.paths[p].back()].push_back(p);
  }

  // At every anchor vertex the strand must continue uniquely: one trunk end
  // plus one underarc end (the usual case), or two trunk ends joined
  // directly (a chord-free anchor of a degenerate diagram).
  for (int v = 0; v < b.map.n_vertices(); ++v) {
    if (b.classes.kind[v] != VertexKind::A) continue;
    size_t nt = trunk_at[v].size(), np = path_at[v].size();
    if (!((nt == 1 && np == 1) || (nt == 2 && np == 0)))
      fail(Err::GammaNotPaths,
           "trunk and underarc ends do not pair at vertex " +
               std::to_string(v));
  }

  LinkComponents lc;
  std::vector<char> seen(b.m(), 0);
  for (int t0 = 0; t0 < b.m(); ++t0) {
    if (seen[t0]) continue;
    std::vector<std::pair<int, int>> cyc;
    int t = t0;
    int enter = b.anchor_vertex_c(t0);
    while (!seen[t]) {
      seen[t] = 1;
      int exit = b.anchor_vertex_c(t) == enter ? b.anchor_vertex_d(t)
                                               : b.anchor_vertex_c(t);
      if (path_at[exit].empty()) {
        // direct join: continue along the other trunk anchored here
        const auto& ts = trunk_at[exit];
        cyc.push_back({t, -1});
        t = ts[0] == t ? ts[1] : ts[0];
        enter = exit;
      } else {
        int p = path_at[exit][0];
        int far = g.paths[p].front() == exit ? g.paths[p].back()
                                             : g.paths[p].front();
        cyc.push_back({t, p});
        t = trunk_at[far][0];
        enter = far;
      }
    }
    lc.cycles.push_back(std::move(cyc));
  }
  lc.count = (int)lc.cycles.size();
  return lc;
}

ButterflyDiagram make_rational_butterfly(int p, int q) {
  if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1)
    fail(Err::BadParameters,
         "need p >= 2, 1 <= q < p, gcd(p,q) = 1; got p=" + std::to_string(p) +
             " q=" + std::to_string(q));
  int P = 2 * p;       // vertices on the equator
  int n = 2 * P;       // darts
  std::vector<int> alpha(n), sigma(n);
  for (int i = 0; i < P; ++i) {
    alpha[2 * i] = 2 * i + 1;
    alpha[2 * i + 1] = 2 * i;
  }
  for (int i = 0; i < P; ++i) {
    int fwd = 2 * i;                      // v_i -> v_{i+1}
    int back = (2 * i - 1 + n) % n;      // v_i -> v_{i-1}
    sigma[fwd] = back;
    sigma[back] = fwd;
  }
  PlanarMap m = build_map(std::move(alpha), std::move(sigma));
  // face 0 (dart 0): corners v_0, v_1, ..., v_{P-1}
  // face 1 (dart 1): corners v_1, v_0, v_{P-1}, ..., v_2 (pos j -> v_{1-j})
  Trunk north{0, 0, p};
  Trunk south{1, (1 - q + P) % P, (1 - q + p + P) % P};
  return make_butterfly(std::move(m), {north, south});
}

ButterflyDiagram smooth_plain_vertices(const ButterflyDiagram& b,
                                       std::vector<int>* vertex_map) {
  std::vector<int> track;  // one out-dart per plain vertex
  for (int v = 0; v < b.map.n_vertices(); ++v)
    if (b.classes.kind[v] == VertexKind::Plain)
      track.push_back(b.map.vertices[v][0]);
  if (track.empty()) {
    if (vertex_map) {
      vertex_map->resize(b.map.n_vertices());
      std::iota(vertex_map->begin(), vertex_map->end(), 0);
    }
    return b;
  }

  std::vector<int> reps;  // one out-dart per original vertex
  if (vertex_map)
    for (int v = 0; v < b.map.n_vertices(); ++v)
      reps.push_back(b.map.vertices[v][0]);

  PlanarMap cur = b.map;
  std::vector<std::pair<int, int>> anchors;
  for (int t = 0; t < b.m(); ++t)
    anchors.push_back({b.anchor_dart_c(t), b.anchor_dart_d(t)});

  for (size_t i = 0; i < track.size(); ++i) {
    Rewrite r = smooth_bivalent(cur, cur.dart_vertex[track[i]]);
    for (size_t j = i + 1; j < track.size(); ++j)
      track[j] = r.dart_map[track[j]];
    for (auto& [c, d] : anchors) {
      c = r.dart_map[c];
      d = r.dart_map[d];
    }
    for (int& rep : reps)
      if (rep >= 0) rep = r.dart_map[rep];
    cur = std::move(r.map);
  }

  if (vertex_map) {
    vertex_map->assign(reps.size(), -1);
    for (size_t v = 0; v < reps.size(); ++v)
      if (reps[v] >= 0) (*vertex_map)[v] = cur.dart_vertex[reps[v]];
  }

  std::vector<Trunk> trunks;
  for (auto& [c, d] : anchors)
    trunks.push_back({cur.dart_face[c], cur.dart_pos[c], cur.dart_pos[d]});
  return make_butterfly(std::move(cur), std::move(trunks));
}

namespace {

std::vector<int> canon_key(const ButterflyDiagram& b, bool reflect) {
  const PlanarMap& m = b.map;
  int n = m.n_darts();
  std::vector<int> sig;
  if (reflect) {
    sig.assign(n, 0);
    for (int d = 0; d < n; ++d) sig[m.sigma[d]] = d;
  } else {
    sig = m.sigma;
  }
  // Anchor out-darts; under reflection a corner's out-dart becomes the
  // reversal of its old in-dart.
  std::vector<std::pair<int, int>> tr;
  for (int t = 0; t < b.m(); ++t) {
    int f = b.trunks[t].face;
    if (!reflect) {
      tr.push_back({m.faces[f][b.trunks[t].pos_c], m.faces[f][b.trunks[t].pos_d]});
    } else {
      tr.push_back({m.alpha[m.walk_dart(f, b.trunks[t].pos_c - 1)],
                    m.alpha[m.walk_dart(f, b.trunks[t].pos_d - 1)]});
    }
  }

  std::vector<int> best;
  for (int root = 0; root < n; ++root) {
    std::vector<int> label = traversal_labels(sig, m.alpha, root);
    std::vector<int> inv(n);
    for (int d = 0; d < n; ++d) inv[label[d]] = d;
    std::vector<int> key;
    key.reserve(2 * n + 2 * tr.size());
    for (int l = 0; l < n; ++l) {
      key.push_back(label[sig[inv[l]]]);
      key.push_back(label[m.alpha[inv[l]]]);
    }
    std::vector<std::pair<int, int>> enc;
    for (auto [dc, dd] : tr)
      enc.push_back(std::minmax(label[dc], label[dd]));
    std::sort(enc.begin(), enc.end());
    for (auto [x, y] : enc) {
      key.push_back(x);
      key.push_back(y);
    }
    if (best.empty() || key < best) best = std::move(key);
  }
  return best;
}

}  // namespace

bool butterfly_isomorphic(const ButterflyDiagram& a, const ButterflyDiagram& b,
                          bool* orientation_reversed) {
  if (orientation_reversed) *orientation_reversed = false;
  if (a.map.n_darts() != b.map.n_darts() || a.m() != b.m()) return false;
  std::vector<int> ka = canon_key(a, false);
  if (ka == canon_key(b, false)) return true;
  if (ka == canon_key(b, true)) {
    if (orientation_reversed) *orientation_reversed = true;
    return true;
  }
  return false;
}

}  // namespace mbf
