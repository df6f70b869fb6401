#include "mbf/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

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
  int classes() {
    int c = 0;
    for (int i = 0; i < (int)p.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

}  // namespace

QuotientComplex quotient_cell_counts(const ButterflyDiagram& b) {
  const PlanarMap& m = b.map;
  QuotientComplex q;
  q.m = b.m();
  q.v_star = (int)b.classes.members.size();

  UF edges(m.n_edges());
  for (int f = 0; f < b.m(); ++f) {
    int len = m.face_len(f);
    for (int p = 0; p < len; ++p)
      edges.unite(m.dart_edge[m.faces[f][p]],
                  m.dart_edge[m.faces[f][pair_side(b, f, p)]]);
  }
  q.e_star = edges.classes();
  return q;
}

GammaReport check_gamma_claims(const ButterflyDiagram& b) {
  GammaReport r;
  try {
    classify_vertices(b);
    GammaGraph g = gamma_graph(b);
    r.paths = (int)g.paths.size();
    if (r.paths != b.m()) {
      r.ok = false;
      r.detail = "expected " + std::to_string(b.m()) + " gamma paths, found " +
                 std::to_string(r.paths);
      return r;
    }
    // each A/E class is exactly one path's vertex set
    std::set<std::vector<int>> path_sets;
    for (auto& p : g.paths) {
      std::vector<int> s = p;
      std::sort(s.begin(), s.end());
      path_sets.insert(std::move(s));
    }
    for (auto& cls : b.classes.members) {
      if (b.classes.kind[cls.front()] != VertexKind::A &&
          b.classes.kind[cls.front()] != VertexKind::E)
        continue;
      std::vector<int> ae;
      for (int v : cls)
        if (b.classes.kind[v] == VertexKind::A ||
            b.classes.kind[v] == VertexKind::E)
          ae.push_back(v);
      if (!path_sets.count(ae)) {
        r.ok = false;
        r.detail = "an A/E class is not the vertex set of a single gamma path";
        return r;
      }
    }
  } catch (const Error& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

Laurent kauffman_bracket(const LinkDiagram& d) {
  int n = d.n_crossings();
  if (n > 16)
    fail(Err::TooManyCrossings,
         "state sum over " + std::to_string(n) + " crossings refused");
  Laurent delta = Laurent::mono(2, -1) + Laurent::mono(-2, -1);
  // delta powers up to segments + loops
  std::vector<Laurent> dpow{Laurent::mono(0)};
  for (int i = 0; i < d.n_segments() + d.loops + 1; ++i)
    dpow.push_back(dpow.back() * delta);

  Laurent sum;
  int S = d.n_segments();
  for (unsigned state = 0; state < (1u << n); ++state) {
    UF uf(std::max(S, 1));
    int a_count = 0;
    for (int x = 0; x < n; ++x) {
      const auto& t = d.xs[x];
      if ((state >> x) & 1) {  // A: join {a,b}, {c,d}
        ++a_count;
        uf.unite(t[0], t[1]);
        uf.unite(t[2], t[3]);
      } else {  // B: join {a,d}, {b,c}
        uf.unite(t[0], t[3]);
        uf.unite(t[1], t[2]);
      }
    }
    int state_loops = (S > 0 ? uf.classes() : 0) + d.loops;
    sum += Laurent::mono(2 * a_count - n) * dpow[state_loops - 1];
  }
  return sum;
}

Fingerprint Fingerprint::mirrored() const {
  Fingerprint f;
  f.components = components;
  for (auto& v : values) f.values.push_back(v.mirrored());
  std::sort(f.values.begin(), f.values.end());
  return f;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << components;
  for (auto& v : values) os << ';' << v.str();
  return os.str();
}

Fingerprint fingerprint(const LinkDiagram& d) {
  if (d.n_components() > 12)
    fail(Err::TooManyCrossings,
         "orientation multiset over " + std::to_string(d.n_components()) +
             " components refused");
  Laurent br = kauffman_bracket(d);
  Fingerprint f;
  f.components = d.n_components();
  int S = (int)d.strands.size();
  for (unsigned mask = 0; mask < (1u << S); ++mask) {
    int w = writhe(d, mask);
    // (−A³)^(−w) = (−1)^w · A^(−3w)
    Laurent norm = Laurent::mono(-3 * w, w % 2 == 0 ? 1 : -1);
    f.values.push_back(norm * br);
  }
  // loop components double the multiset without changing the values
  for (int i = 0; i < d.loops; ++i) {
    auto copy = f.values;
    f.values.insert(f.values.end(), copy.begin(), copy.end());
  }
  std::sort(f.values.begin(), f.values.end());
  return f;
}

bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b,
                        bool allow_mirror) {
  if (a == b) return true;
  return allow_mirror && a == b.mirrored();
}

}  // namespace mbf
