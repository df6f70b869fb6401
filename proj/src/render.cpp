#include "mbf/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <utility>
#include <vector>

#include "mbf/error.hpp"

namespace mbf {

namespace {

const double kPi = 3.14159265358979323846;

// Edges split into chains of layout-only midpoints; chain[e] runs from the
// origin of the edge's smallest dart to the origin of its partner.
struct Chains {
  int n_nodes = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> chain;
  std::vector<int> min_dart;
};

Chains subdivide(const PlanarMap& m, int depth) {
  Chains c;
  int ne = m.n_edges();
  c.n_nodes = m.n_vertices();
  c.min_dart.assign(ne, m.n_darts());
  for (int d = 0; d < m.n_darts(); ++d)
    c.min_dart[m.dart_edge[d]] = std::min(c.min_dart[m.dart_edge[d]], d);
  c.chain.resize(ne);
  for (int e = 0; e < ne; ++e) {
    int d = c.min_dart[e];
    c.chain[e].push_back(m.dart_vertex[d]);
    for (int k = 0; k < depth; ++k) c.chain[e].push_back(c.n_nodes++);
    c.chain[e].push_back(m.dart_vertex[m.alpha[d]]);
  }
  c.adj.resize(c.n_nodes);
  for (int e = 0; e < ne; ++e)
    for (std::size_t i = 0; i + 1 < c.chain[e].size(); ++i) {
      c.adj[c.chain[e][i]].push_back(c.chain[e][i + 1]);
      c.adj[c.chain[e][i + 1]].push_back(c.chain[e][i]);
    }
  return c;
}

// Node instances along the subdivided walk of face f.
std::vector<int> face_seq(const PlanarMap& m, const Chains& c, int f) {
  std::vector<int> seq;
  for (int d : m.faces[f]) {
    int e = m.dart_edge[d];
    seq.push_back(m.dart_vertex[d]);
    int interior = (int)c.chain[e].size() - 2;
    if (d == c.min_dart[e])
      for (int i = 1; i <= interior; ++i) seq.push_back(c.chain[e][i]);
    else
      for (int i = interior; i >= 1; --i) seq.push_back(c.chain[e][i]);
  }
  return seq;
}

int default_outer(const PlanarMap& m, const Chains& c) {
  int best = 0;
  std::tuple<int, int, int> best_key{-1, 0, 0};
  for (int f = 0; f < m.n_faces(); ++f) {
    std::vector<int> vs = face_seq(m, c, f);
    int len = (int)vs.size();
    std::sort(vs.begin(), vs.end());
    int distinct = (int)(std::unique(vs.begin(), vs.end()) - vs.begin());
    std::tuple<int, int, int> key{distinct, distinct - len, -f};
    if (key > best_key) {
      best_key = key;
      best = f;
    }
  }
  return best;
}

struct Coords {
  std::vector<double> x, y;
};

// One pinned-boundary relaxation pass; false when the result is unusable
// (coincident adjacent nodes or NaN).  Interior faces get a virtual center
// node joined to each corner instance, which keeps loops and other hanging
// material from collapsing onto their attachment vertices (plain barycentric
// averaging needs 3-connectivity; the centers stand in for it).  Virtual
// edges steer the relaxation only and are neither drawn nor degeneracy-
// checked.
bool layout_once(const PlanarMap& m, const Chains& c, int outer, int iters,
                 Coords& out) {
  int n = c.n_nodes;
  std::vector<std::vector<int>> adj(c.adj);
  adj.resize(n + m.n_faces());
  for (int f = 0; f < m.n_faces(); ++f) {
    if (f == outer) continue;
    int center = n + f;
    for (int v : face_seq(m, c, f)) {
      adj[center].push_back(v);
      adj[v].push_back(center);
    }
  }
  int total_nodes = n + m.n_faces();

  std::vector<int> seq = face_seq(m, c, outer);
  std::vector<double> px(total_nodes, 0.0), py(total_nodes, 0.0);
  std::vector<int> cnt(total_nodes, 0);
  int total = (int)seq.size();
  for (int i = 0; i < total; ++i) {
    double ang = 2.0 * kPi * i / total;
    px[seq[i]] += std::cos(ang);
    py[seq[i]] += std::sin(ang);
    ++cnt[seq[i]];
  }
  Coords co;
  co.x.assign(total_nodes, 0.0);
  co.y.assign(total_nodes, 0.0);
  std::vector<char> pinned(total_nodes, 0);
  for (int v = 0; v < total_nodes; ++v)
    if (cnt[v]) {
      pinned[v] = 1;
      co.x[v] = px[v] / cnt[v];
      co.y[v] = py[v] / cnt[v];
    }
  for (int it = 0; it < iters; ++it)
    for (int v = 0; v < total_nodes; ++v) {
      if (pinned[v] || adj[v].empty()) continue;
      double sx = 0.0, sy = 0.0;
      for (int u : adj[v]) {
        sx += co.x[u];
        sy += co.y[u];
      }
      co.x[v] = sx / adj[v].size();
      co.y[v] = sy / adj[v].size();
    }
  for (int v = 0; v < n; ++v)
    for (int u : c.adj[v]) {
      if (u < v) continue;
      double dx = co.x[v] - co.x[u], dy = co.y[v] - co.y[u];
      double d2 = dx * dx + dy * dy;
      if (!(d2 > 1e-8)) return false;
    }
  co.x.resize(n);
  co.y.resize(n);
  out = std::move(co);
  return true;
}

struct Solved {
  Coords co;
  Chains chains;
  int outer = 0;
};

Solved solve(const PlanarMap& m, const RenderSpec& spec, int auto_depth) {
  if (spec.outer_face >= m.n_faces())
    fail(Err::BadParameters, "outer face out of range");
  int depth = spec.subdivision >= 0 ? spec.subdivision : auto_depth;
  int iters = std::max(spec.iterations, 0);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Solved s;
    s.chains = subdivide(m, depth + attempt);
    s.outer = spec.outer_face >= 0 ? spec.outer_face
                                   : default_outer(m, s.chains);
    if (layout_once(m, s.chains, s.outer, iters, s.co)) return s;
  }
  fail(Err::DegenerateLayout, "no usable layout after subdivision retries");
}

bool has_loop(const PlanarMap& m) {
  for (int d = 0; d < m.n_darts(); ++d)
    if (m.dart_vertex[d] == m.dart_vertex[m.alpha[d]]) return true;
  return false;
}

// ---- SVG assembly ------------------------------------------------------

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

struct Page {
  double size, cx, cy, r;
  std::string body;

  explicit Page(double canvas)
      : size(canvas), cx(canvas / 2), cy(canvas / 2), r(canvas / 2 - 28) {}

  double X(double x) const { return cx + x * r; }
  double Y(double y) const { return cy - y * r; }
  std::string pt(double x, double y) const { return num(x) + "," + num(y); }

  std::string finish() const {
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) +
         "\" height=\"" + num(size) + "\" viewBox=\"0 0 " + num(size) + " " +
         num(size) + "\">\n";
    s +=
        "<style>\n"
        ".bg{fill:#ffffff}\n"
        ".edge{stroke:#444444;stroke-width:1.5;fill:none}\n"
        ".trunk{stroke:#000000;stroke-width:5;stroke-linecap:round}\n"
        ".gamma{stroke:#555555;stroke-width:1.2;stroke-dasharray:5 4;fill:none}\n"
        ".vertex-a{fill:#000000}\n"
        ".vertex-e{fill:#ffffff;stroke:#000000;stroke-width:1.5}\n"
        ".vertex-plain{fill:#999999}\n"
        ".vertex-b{font:16px sans-serif;text-anchor:middle}\n"
        ".strand{stroke:#000000;stroke-width:2.2;fill:none;stroke-linecap:round}\n"
        ".crossing{fill:none;stroke:none}\n"
        ".loop{fill:none;stroke:#000000;stroke-width:2.2}\n"
        "</style>\n";
    s += "<rect class=\"bg\" width=\"" + num(size) + "\" height=\"" +
         num(size) + "\"/>\n";
    s += body;
    s += "</svg>\n";
    return s;
  }
};

using Poly = std::vector<std::pair<double, double>>;

Poly chain_pixels(const Page& pg, const Solved& s, int e) {
  Poly p;
  for (int node : s.chains.chain[e])
    p.push_back({pg.X(s.co.x[node]), pg.Y(s.co.y[node])});
  return p;
}

double poly_len(const Poly& p) {
  double L = 0.0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    L += std::hypot(p[i + 1].first - p[i].first, p[i + 1].second - p[i].second);
  return L;
}

void trim_front(Poly& p, double gap) {
  while (p.size() >= 2) {
    double dx = p[1].first - p[0].first, dy = p[1].second - p[0].second;
    double seg = std::hypot(dx, dy);
    if (seg > gap) {
      p[0].first += dx / seg * gap;
      p[0].second += dy / seg * gap;
      return;
    }
    gap -= seg;
    p.erase(p.begin());
  }
}

void trim_back(Poly& p, double gap) {
  std::reverse(p.begin(), p.end());
  trim_front(p, gap);
  std::reverse(p.begin(), p.end());
}

std::string polyline(const Poly& p, const std::string& cls) {
  std::string s = "<polyline class=\"" + cls + "\" points=\"";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += " ";
    s += num(p[i].first) + "," + num(p[i].second);
  }
  s += "\"/>\n";
  return s;
}

}  // namespace

std::string layout_svg(const ButterflyDiagram& b, const RenderSpec& spec) {
  const PlanarMap& m = b.map;
  Solved s = solve(m, spec, has_loop(m) ? 2 : 1);
  Page pg(spec.canvas);

  pg.body += "<g class=\"edges\">\n";
  for (int e = 0; e < m.n_edges(); ++e)
    pg.body += polyline(chain_pixels(pg, s, e), "edge");
  pg.body += "</g>\n";

  pg.body += "<g class=\"trunks\">\n";
  for (int t = 0; t < b.m(); ++t) {
    int vc = b.anchor_vertex_c(t), vd = b.anchor_vertex_d(t);
    pg.body += "<line class=\"trunk\" x1=\"" + num(pg.X(s.co.x[vc])) +
               "\" y1=\"" + num(pg.Y(s.co.y[vc])) + "\" x2=\"" +
               num(pg.X(s.co.x[vd])) + "\" y2=\"" + num(pg.Y(s.co.y[vd])) +
               "\"/>\n";
  }
  pg.body += "</g>\n";

  if (spec.target == RenderTarget::ButterflyWithGamma) {
    GammaGraph g = gamma_graph(b);
    pg.body += "<g class=\"chords\">\n";
    for (const Chord& ch : g.chords) {
      int vp = m.dart_vertex[m.walk_dart(ch.face, ch.pos_plus)];
      int vm = m.dart_vertex[m.walk_dart(ch.face, ch.pos_minus)];
      pg.body += "<line class=\"gamma\" x1=\"" + num(pg.X(s.co.x[vp])) +
                 "\" y1=\"" + num(pg.Y(s.co.y[vp])) + "\" x2=\"" +
                 num(pg.X(s.co.x[vm])) + "\" y2=\"" + num(pg.Y(s.co.y[vm])) +
                 "\"/>\n";
    }
    pg.body += "</g>\n";
  }

  pg.body += "<g class=\"vertices\">\n";
  for (int v = 0; v < m.n_vertices(); ++v) {
    double x = pg.X(s.co.x[v]), y = pg.Y(s.co.y[v]);
    switch (b.classes.kind[v]) {
      case VertexKind::A:
        pg.body += "<circle class=\"vertex-a\" cx=\"" + num(x) + "\" cy=\"" +
                   num(y) + "\" r=\"4.5\"/>\n";
        break;
      case VertexKind::E:
        pg.body += "<circle class=\"vertex-e\" cx=\"" + num(x) + "\" cy=\"" +
                   num(y) + "\" r=\"4\"/>\n";
        break;
      case VertexKind::B:
        pg.body += "<text class=\"vertex-b\" x=\"" + num(x) + "\" y=\"" +
                   num(y + 5.5) + "\">*</text>\n";
        break;
      case VertexKind::Plain:
        pg.body += "<circle class=\"vertex-plain\" cx=\"" + num(x) +
                   "\" cy=\"" + num(y) + "\" r=\"2.5\"/>\n";
        break;
    }
  }
  pg.body += "</g>\n";
  return pg.finish();
}

std::string layout_svg(const LinkDiagram& d, const RenderSpec& spec) {
  if (d.n_pieces > 1)
    fail(Err::BadParameters, "split diagram: preprocess before rendering");
  Page pg(spec.canvas);

  if (d.n_crossings() > 0) {
    LinkDiagram flat = make_link_diagram(d.crossings, 0);
    PlanarMap m = link_map(flat);
    Solved s = solve(m, spec, 2);
    double gap = spec.canvas * 0.022;

    // vertex id == crossing id: crossing c's sigma cycle starts at dart 4c
    std::vector<Poly> polys(m.n_edges());
    for (int e = 0; e < m.n_edges(); ++e) polys[e] = chain_pixels(pg, s, e);
    for (int c = 0; c < flat.n_crossings(); ++c)
      for (int slot : {0, 2}) {  // under-strand ends
        int dart = 4 * c + slot;
        int e = m.dart_edge[dart];
        double g = std::min(gap, 0.4 * poly_len(polys[e]));
        if (dart == s.chains.min_dart[e])
          trim_front(polys[e], g);
        else
          trim_back(polys[e], g);
      }

    pg.body += "<g class=\"strands\">\n";
    for (int e = 0; e < m.n_edges(); ++e) pg.body += polyline(polys[e], "strand");
    pg.body += "</g>\n";

    pg.body += "<g class=\"crossings\">\n";
    for (int c = 0; c < flat.n_crossings(); ++c)
      pg.body += "<circle class=\"crossing\" cx=\"" + num(pg.X(s.co.x[c])) +
                 "\" cy=\"" + num(pg.Y(s.co.y[c])) + "\" r=\"3\"/>\n";
    pg.body += "</g>\n";
  }

  if (d.loops > 0) {
    pg.body += "<g class=\"loops\">\n";
    for (int i = 0; i < d.loops; ++i)
      pg.body += "<circle class=\"loop\" cx=\"" + num(44.0 + 38.0 * i) +
                 "\" cy=\"" + num(spec.canvas - 44.0) + "\" r=\"15\"/>\n";
    pg.body += "</g>\n";
  }
  return pg.finish();
}

}  // namespace mbf
