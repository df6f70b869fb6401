#include "mbf/link.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mbf {

LinkDiagram make_link_diagram(std::vector<std::array<int, 4>> crossings,
                              int loops) {
  if (crossings.empty() && loops == 0)
    fail(Err::BadParameters, "empty link diagram");
  if (loops < 0) fail(Err::BadParameters, "negative loop count");

  LinkDiagram d;
  d.crossings = std::move(crossings);
  d.loops = loops;

  std::map<int, int> count;
  for (auto& x : d.crossings)
    for (int s : x) ++count[s];
  for (auto& [label, c] : count)
    if (c != 2)
      fail(Err::DanglingSegment, "segment " + std::to_string(label) +
                                     " occurs " + std::to_string(c) +
                                     " times; expected 2");
  for (auto& [label, c] : count) d.labels.push_back(label);

  auto dense = [&](int label) {
    return (int)(std::lower_bound(d.labels.begin(), d.labels.end(), label) -
                 d.labels.begin());
  };
  d.seg_occ.assign(d.labels.size(), {{{-1, -1}, {-1, -1}}});
  for (int x = 0; x < d.n_crossings(); ++x) {
    std::array<int, 4> t{};
    for (int s = 0; s < 4; ++s) {
      t[s] = dense(d.crossings[x][s]);
      auto& occ = d.seg_occ[t[s]];
      (occ[0].first < 0 ? occ[0] : occ[1]) = {x, s};
    }
    d.xs.push_back(t);
  }

  // strand components
  d.seg_strand.assign(d.n_segments(), -1);
  d.xinfo.assign(d.n_crossings(), {-1, -1, false, false});
  for (int s0 = 0; s0 < d.n_segments(); ++s0) {
    if (d.seg_strand[s0] >= 0) continue;
    int sid = (int)d.strands.size();
    LinkDiagram::Strand st;
    int seg = s0;
    auto head = d.seg_occ[s0][1];  // traverse s0 from occ[0] toward occ[1]
    while (true) {
      st.segments.push_back(seg);
      d.seg_strand[seg] = sid;
      auto [x, slot] = head;
      bool over = slot % 2 == 1;
      bool forward = slot == 0 || slot == 1;  // arrived at a (under) or b (over)
      st.passages.push_back({x, over, forward});
      auto& xi = d.xinfo[x];
      if (over) {
        xi.over_strand = sid;
        xi.over_forward = forward;
      } else {
        xi.under_strand = sid;
        xi.under_forward = forward;
      }
      int exit_slot = (slot + 2) % 4;
      int nxt = d.xs[x][exit_slot];
      // we leave via (x, exit_slot); continue to nxt's other occurrence
      auto other = d.seg_occ[nxt][0] == std::make_pair(x, exit_slot)
                       ? d.seg_occ[nxt][1]
                       : d.seg_occ[nxt][0];
      if (nxt == s0 && other == d.seg_occ[s0][1]) break;
      seg = nxt;
      head = other;
    }
    d.strands.push_back(std::move(st));
  }

  // connected pieces of the 4-valent graph
  if (d.n_crossings() > 0) {
    std::vector<int> parent(d.n_crossings());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (auto& occ : d.seg_occ) parent[find(occ[0].first)] = find(occ[1].first);
    std::map<int, int> ids;
    d.piece.assign(d.n_crossings(), -1);
    for (int x = 0; x < d.n_crossings(); ++x) {
      auto [it, fresh] = ids.try_emplace(find(x), (int)ids.size());
      d.piece[x] = it->second;
    }
    d.n_pieces = (int)ids.size();

    // genus 0 per piece: V - E + F = 2 with F from phi-orbits
    int n = 4 * d.n_crossings();
    std::vector<int> alpha(n), sigma(n), phi(n);
    for (int x = 0; x < d.n_crossings(); ++x)
      for (int s = 0; s < 4; ++s) sigma[4 * x + s] = 4 * x + (s + 1) % 4;
    for (auto& occ : d.seg_occ) {
      int da = 4 * occ[0].first + occ[0].second;
      int db = 4 * occ[1].first + occ[1].second;
      alpha[da] = db;
      alpha[db] = da;
    }
    for (int dd = 0; dd < n; ++dd) phi[dd] = sigma[alpha[dd]];
    std::vector<int> faces_of_piece(d.n_pieces, 0), verts(d.n_pieces, 0),
        edges(d.n_pieces, 0);
    std::vector<char> seen(n, 0);
    for (int dd = 0; dd < n; ++dd) {
      if (seen[dd]) continue;
      ++faces_of_piece[d.piece[dd / 4]];
      for (int x = dd; !seen[x]; x = phi[x]) seen[x] = 1;
    }
    for (int x = 0; x < d.n_crossings(); ++x) ++verts[d.piece[x]];
    for (auto& occ : d.seg_occ) ++edges[d.piece[occ[0].first]];
    for (int p = 0; p < d.n_pieces; ++p)
      if (verts[p] - edges[p] + faces_of_piece[p] != 2)
        fail(Err::NonPlanarPD,
             "crossing tuples of piece " + std::to_string(p) +
                 " do not embed in the sphere");
  }
  return d;
}

int crossing_sign(const LinkDiagram& d, int crossing, unsigned strand_mask) {
  const auto& xi = d.xinfo[crossing];
  bool uf = xi.under_forward ^ ((strand_mask >> xi.under_strand) & 1);
  bool of = xi.over_forward ^ ((strand_mask >> xi.over_strand) & 1);
  // positive iff under runs a->c exactly when over runs d->b: the frames
  // (over,under) = (+x,+y) for (a->c, d->b), checked on the positive kink
  // X(1,1,2,2) whose bracket is -A^3.
  return uf != of ? 1 : -1;
}

int writhe(const LinkDiagram& d, unsigned strand_mask) {
  int w = 0;
  for (int x = 0; x < d.n_crossings(); ++x)
    w += crossing_sign(d, x, strand_mask);
  return w;
}

bool strand_all_over(const LinkDiagram& d, int s) {
  for (auto& p : d.strands[s].passages)
    if (!p.over) return false;
  return true;
}

bool strand_all_under(const LinkDiagram& d, int s) {
  for (auto& p : d.strands[s].passages)
    if (p.over) return false;
  return true;
}

PlanarMap link_map(const LinkDiagram& d) {
  if (d.n_crossings() == 0)
    fail(Err::BadParameters, "no crossings to realize");
  if (d.n_pieces != 1 || d.loops != 0)
    fail(Err::Disconnected, "diagram is not connected");
  int n = 4 * d.n_crossings();
  std::vector<int> alpha(n), sigma(n);
  for (int x = 0; x < d.n_crossings(); ++x)
    for (int s = 0; s < 4; ++s) sigma[4 * x + s] = 4 * x + (s + 1) % 4;
  for (auto& occ : d.seg_occ) {
    int da = 4 * occ[0].first + occ[0].second;
    int db = 4 * occ[1].first + occ[1].second;
    alpha[da] = db;
    alpha[db] = da;
  }
  return build_map(std::move(alpha), std::move(sigma));
}

}  // namespace mbf
