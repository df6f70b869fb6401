#include "mbf/convert.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

namespace mbf {

namespace {

// One crossing passage collected while walking a link component of a
// butterfly. For an over passage, flip means the trunk is traversed
// D -> C; for an under passage, flip means the chord is entered from its
// pos_minus corner.
struct Pass {
  int crossing;
  bool over;
  bool flip;
};

// Cut every component at its under-passages; the pieces between
// consecutive dives are the arcs.
std::vector<Arc> cut_arcs(const LinkDiagram& d) {
  std::vector<Arc> arcs;
  for (int s = 0; s < (int)d.strands.size(); ++s) {
    const auto& ps = d.strands[s].passages;
    int n = (int)ps.size();
    std::vector<int> dives;
    for (int i = 0; i < n; ++i)
      if (!ps[i].over) dives.push_back(i);
    if (dives.empty())
      fail(Err::ComponentWithoutBridge,
           "component " + std::to_string(s) +
               " only passes over; there is no dive to cut at");
    if ((int)dives.size() == n)
      fail(Err::ComponentWithoutBridge,
           "component " + std::to_string(s) +
               " only passes under; it has no bridge");
    int nd = (int)dives.size();
    for (int i = 0; i < nd; ++i) {
      Arc a;
      a.strand = s;
      a.dive_in = ps[dives[i]].crossing;
      a.dive_out = ps[dives[(i + 1) % nd]].crossing;
      for (int j = (dives[i] + 1) % n; j != dives[(i + 1) % nd];
           j = (j + 1) % n)
        a.overs.push_back(ps[j].crossing);
      a.overarc = !a.overs.empty();
      arcs.push_back(std::move(a));
    }
  }
  return arcs;
}

}  // namespace

int BridgeDiagram::n_overarcs() const {
  int k = 0;
  for (const Arc& a : arcs) k += a.overarc;
  return k;
}

int BridgeDiagram::n_simple() const { return n_arcs() - n_overarcs(); }

BridgeDiagram bridge_decompose(LinkDiagram d) {
  if (d.loops > 0)
    fail(Err::HasClosedCurve,
         std::to_string(d.loops) +
             " crossing-free loop(s) admit no over/under cut");
  if (d.n_pieces != 1)
    fail(Err::Disconnected, "diagram splits into " +
                                std::to_string(d.n_pieces) + " pieces");
  BridgeDiagram out;
  out.arcs = cut_arcs(d);
  out.link = std::move(d);
  return out;
}

BridgeDiagram butterfly_to_link(const ButterflyDiagram& b) {
  classify_vertices(b);
  GammaGraph g = gamma_graph(b);
  LinkComponents lc = link_components(b);
  const PlanarMap& M = b.map;

  int X = (int)g.chords.size();
  // One crossing per chord: the chord dives under the trunk of its face.
  // Along a trunk (anchor C to anchor D) the dives appear in slot order.
  std::vector<std::vector<int>> face_chords(M.n_faces());
  for (int c = 0; c < X; ++c) face_chords[g.chords[c].face].push_back(c);
  for (auto& v : face_chords)
    std::sort(v.begin(), v.end(),
              [&](int x, int y) { return g.chords[x].k < g.chords[y].k; });

  auto plus_vertex = [&](int c) {
    return M.dart_vertex[M.faces[g.chords[c].face][g.chords[c].pos_plus]];
  };
  auto minus_vertex = [&](int c) {
    return M.dart_vertex[M.faces[g.chords[c].face][g.chords[c].pos_minus]];
  };

  int total = 0;
  for (const auto& cyc : lc.cycles) total += (int)cyc.size();
  if (total != b.m())
    fail(Err::BadParameters, "butterfly components do not cover all trunks");

  std::vector<std::array<int, 4>> tuples(X, {-1, -1, -1, -1});
  int next_label = 0;
  int loops = 0;

  for (const auto& cyc : lc.cycles) {
    std::vector<Pass> walk;
    int enter = b.anchor_vertex_c(cyc[0].first);
    int start = enter;
    for (const auto& [t, p] : cyc) {
      bool from_c = b.anchor_vertex_c(t) == enter;
      if (!from_c && b.anchor_vertex_d(t) != enter)
        fail(Err::BadParameters, "component walk broke at trunk " +
                                     std::to_string(t));
      const auto& chords = face_chords[t];
      int nc = (int)chords.size();
      for (int i = 0; i < nc; ++i) {
        int c = chords[from_c ? i : nc - 1 - i];
        walk.push_back({c, true, !from_c});
      }
      int exit = from_c ? b.anchor_vertex_d(t) : b.anchor_vertex_c(t);
      if (p < 0) {  // trunks joined directly at a chord-free anchor
        enter = exit;
        continue;
      }

      const auto& pv = g.paths[p];
      const auto& pc = g.path_chords[p];
      int np = (int)pc.size();
      bool fwd = pv.front() == exit;
      if (!fwd && pv.back() != exit)
        fail(Err::BadParameters, "component walk broke at path " +
                                     std::to_string(p));
      for (int i = 0; i < np; ++i) {
        int c = pc[fwd ? i : np - 1 - i];
        int before = pv[fwd ? i : np - i];
        if (before != plus_vertex(c) && before != minus_vertex(c))
          fail(Err::BadParameters, "chord walk broke at chord " +
                                       std::to_string(c));
        walk.push_back({c, false, before != plus_vertex(c)});
      }
      enter = fwd ? pv.back() : pv.front();
    }
    if (enter != start)
      fail(Err::BadParameters, "component walk did not close");

    if (walk.empty()) {  // trunks over nothing: an unknotted closed strand
      ++loops;
      continue;
    }

    // Segments along the component, one label after each passage; the
    // label after the final passage wraps around to precede the first.
    int n = (int)walk.size();
    for (int i = 0; i < n; ++i) {
      const Pass& ps = walk[i];
      int before = next_label + (i + n - 1) % n + 1;
      int after = next_label + i + 1;
      auto& T = tuples[ps.crossing];
      if (ps.over) {
        // Arms counterclockwise: under-in from the chord's +k corner, the
        // trunk's D side, under-out to -k, the trunk's C side.
        T[ps.flip ? 1 : 3] = before;
        T[ps.flip ? 3 : 1] = after;
      } else {
        T[ps.flip ? 2 : 0] = before;
        T[ps.flip ? 0 : 2] = after;
      }
    }
    next_label += n;
  }

  for (const auto& T : tuples)
    if (T[0] < 0 || T[1] < 0 || T[2] < 0 || T[3] < 0)
      fail(Err::BadParameters, "some chord was never crossed by its trunk");

  BridgeDiagram out;
  out.link = make_link_diagram(std::move(tuples), loops);
  out.arcs = cut_arcs(out.link);
  // Simple trunks cross nothing and still emit honest simple arcs; only a
  // whole component without crossings falls outside bridge-diagram rules.
  out.bridge_degenerate = loops > 0;
  return out;
}

ButterflyDiagram link_to_butterfly(const BridgeDiagram& bd) {
  const LinkDiagram& d = bd.link;
  PlanarMap rm = link_map(d);
  int X = d.n_crossings();

  // Forward dart of each segment: the out-dart at the crossing the segment
  // leaves, pointing along the component's reference orientation.
  std::vector<int> fdart(d.n_segments(), -1);
  for (const auto& st : d.strands) {
    int n = (int)st.passages.size();
    for (int g = 0; g < n; ++g) {
      const auto& P = st.passages[(g + n - 1) % n];
      int slot = P.over ? (P.forward ? 3 : 1) : (P.forward ? 2 : 0);
      fdart[st.segments[g]] = 4 * P.crossing + slot;
    }
  }

  // Junctions 2c (just before crossing c's dive) and 2c+1 (just after)
  // sit at the crossing-near ends of the dive's in- and out-segments.
  std::vector<int> j_start(d.n_segments(), -1), j_end(d.n_segments(), -1);
  for (int c = 0; c < X; ++c) {
    bool uf = d.xinfo[c].under_forward;
    j_end[d.xs[c][uf ? 0 : 2]] = 2 * c;
    j_start[d.xs[c][uf ? 2 : 0]] = 2 * c + 1;
  }

  // Junction j owns darts 4j..4j+3: 4j and 4j+2 leave j toward the hubs
  // of its left and right regions; 4j+1 and 4j+3 are the hub-side ends.
  int n_darts = 8 * X;
  std::vector<int> alpha(n_darts), sigma(n_darts, -1);
  for (int j = 0; j < 2 * X; ++j) {
    alpha[4 * j] = 4 * j + 1;
    alpha[4 * j + 1] = 4 * j;
    alpha[4 * j + 2] = 4 * j + 3;
    alpha[4 * j + 3] = 4 * j + 2;
    sigma[4 * j] = 4 * j + 2;
    sigma[4 * j + 2] = 4 * j;
  }

  // Hub rotations: spokes in region-walk order. A walk dart that runs
  // with its segment's flow has the region on the segment's left, so the
  // junctions on it contribute their left-edge spokes, start junction
  // first; against the flow, right-edge spokes, end junction first.
  for (int r = 0; r < rm.n_faces(); ++r) {
    std::vector<int> spokes;
    for (int dart : rm.faces[r]) {
      int seg = d.xs[dart / 4][dart % 4];
      if (dart == fdart[seg]) {
        if (j_start[seg] >= 0) spokes.push_back(4 * j_start[seg] + 1);
        if (j_end[seg] >= 0) spokes.push_back(4 * j_end[seg] + 1);
      } else {
        if (j_end[seg] >= 0) spokes.push_back(4 * j_end[seg] + 3);
        if (j_start[seg] >= 0) spokes.push_back(4 * j_start[seg] + 3);
      }
    }
    for (int i = 0; i < (int)spokes.size(); ++i)
      sigma[spokes[i]] = spokes[(i + 1) % (int)spokes.size()];
  }

  PlanarMap wall = build_map(std::move(alpha), std::move(sigma));

  // The trunk of an arc runs from the junction after its first dive to
  // the junction before its last; the anchor corners are the sectors
  // containing the arc's own direction at those junctions.
  std::vector<Trunk> trunks;
  trunks.reserve(bd.arcs.size());
  for (const Arc& a : bd.arcs) {
    int dc = 4 * (2 * a.dive_in + 1);
    int dd = 4 * (2 * a.dive_out) + 2;
    if (wall.dart_face[dc] != wall.dart_face[dd])
      fail(Err::BadParameters, "arc neighborhood did not close into one face");
    trunks.push_back(
        {wall.dart_face[dc], wall.dart_pos[dc], wall.dart_pos[dd]});
  }
  // Regions holding exactly two junctions yield bivalent hubs that may be
  // mere subdivision points; dissolve those so every vertex classifies.
  return smooth_plain_vertices(make_butterfly(std::move(wall), std::move(trunks)));
}

LinkDiagram preprocess_diagram(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> xs = d.crossings;
  int next = 1;
  for (const auto& t : xs)
    next = std::max({next, t[0] + 1, t[1] + 1, t[2] + 1, t[3] + 1});

  // Crossing-free loops become one-crossing curls.
  for (int i = 0; i < d.loops; ++i) {
    xs.push_back({next, next, next + 1, next + 1});
    next += 2;
  }

  // A curl on one of its segments gives an all-over or all-under component
  // an under/over transition to cut at. Occurrence [1] of the segment is
  // rerouted through the new crossing.
  auto add_curl = [&](LinkDiagram& cur, int strand) {
    int dense = cur.strands[strand].segments[0];
    int lbl = cur.labels[dense];
    auto [cx, cs] = cur.seg_occ[dense][1];
    int cont = next++, loop = next++;
    xs[cx][cs] = cont;
    xs.push_back({lbl, cont, loop, loop});
  };

  LinkDiagram cur = make_link_diagram(xs, 0);
  bool curled = false;
  for (int s = 0; s < (int)cur.strands.size(); ++s)
    if (strand_all_over(cur, s) || strand_all_under(cur, s)) {
      add_curl(cur, s);
      curled = true;
    }
  if (curled) cur = make_link_diagram(xs, 0);

  // Separate pieces are joined by poking a finger of one piece over the
  // other: two new crossings of opposite sign on fresh segments.
  while (cur.n_pieces > 1) {
    int x0 = 0;
    int x1 = -1;
    for (int x = 0; x < cur.n_crossings() && x1 < 0; ++x)
      if (cur.piece[x] != cur.piece[x0]) x1 = x;

    int da = cur.xs[x0][0], db = cur.xs[x1][0];
    int la = cur.labels[da], lb = cur.labels[db];
    auto [ax, as] = cur.seg_occ[da][1];
    auto [bx, bs] = cur.seg_occ[db][1];
    int f1 = next++, f2 = next++, g1 = next++, g2 = next++;
    xs[ax][as] = f2;  // the finger strand continues as f2 after the poke
    xs[bx][bs] = g2;  // the poked strand continues as g2
    xs.push_back({lb, f1, g1, la});
    xs.push_back({g1, f1, g2, f2});
    cur = make_link_diagram(xs, 0);
  }

  return cur;
}

}  // namespace mbf
