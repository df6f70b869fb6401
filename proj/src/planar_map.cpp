#include "mbf/planar_map.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mbf {

namespace {

void derive_orbits(PlanarMap& m) {
  int n = m.n_darts();
  m.phi.assign(n, 0);
  for (int d = 0; d < n; ++d) m.phi[d] = m.sigma[m.alpha[d]];

  m.dart_vertex.assign(n, -1);
  m.vertices.clear();
  for (int d = 0; d < n; ++d) {
    if (m.dart_vertex[d] >= 0) continue;
    int id = (int)m.vertices.size();
    std::vector<int> cyc;
    for (int x = d; m.dart_vertex[x] < 0; x = m.sigma[x]) {
      m.dart_vertex[x] = id;
      cyc.push_back(x);
    }
    m.vertices.push_back(std::move(cyc));
  }

  m.dart_face.assign(n, -1);
  m.dart_pos.assign(n, -1);
  m.faces.clear();
  for (int d = 0; d < n; ++d) {
    if (m.dart_face[d] >= 0) continue;
    int id = (int)m.faces.size();
    std::vector<int> walk;
    for (int x = d; m.dart_face[x] < 0; x = m.phi[x]) {
      m.dart_face[x] = id;
      m.dart_pos[x] = (int)walk.size();
      walk.push_back(x);
    }
    m.faces.push_back(std::move(walk));
  }

  m.dart_edge.assign(n, -1);
  int e = 0;
  for (int d = 0; d < n; ++d) {
    if (m.dart_edge[d] >= 0) continue;
    m.dart_edge[d] = m.dart_edge[m.alpha[d]] = e++;
  }

  if (m.vertex_mark.empty()) m.vertex_mark.assign(m.n_vertices(), 0);
}

}  // namespace

PlanarMap build_map(std::vector<int> alpha, std::vector<int> sigma) {
  int n = (int)alpha.size();
  if (n == 0 || n % 2 != 0 || (int)sigma.size() != n)
    fail(Err::BadParameters, "dart count must be even and positive, with matching sigma");
  for (int d = 0; d < n; ++d) {
    if (alpha[d] < 0 || alpha[d] >= n || alpha[d] == d || alpha[alpha[d]] != d)
      fail(Err::NotInvolution, "alpha is not a fixed-point-free involution at dart " + std::to_string(d));
  }
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (sigma[d] < 0 || sigma[d] >= n || seen[sigma[d]])
      fail(Err::BadParameters, "sigma is not a permutation at dart " + std::to_string(d));
    seen[sigma[d]] = 1;
  }

  PlanarMap m;
  m.alpha = std::move(alpha);
  m.sigma = std::move(sigma);
  derive_orbits(m);

  // connectivity under <alpha, sigma>
  std::vector<char> vis(n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int cnt = 0;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    ++cnt;
    for (int x : {m.alpha[d], m.sigma[d]}) {
      if (!vis[x]) {
        vis[x] = 1;
        stack.push_back(x);
      }
    }
  }
  if (cnt != n) fail(Err::NotConnected, "map is not connected");

  int euler = m.n_vertices() - m.n_edges() + m.n_faces();
  if (euler != 2)
    fail(Err::NotSphere, "V-E+F = " + std::to_string(euler) + ", expected 2");
  return m;
}

PlanarMap build_from_face_words(const std::vector<std::vector<Sym>>& words) {
  std::vector<int> base;
  int n = 0;
  for (auto& w : words) {
    base.push_back(n);
    n += (int)w.size();
  }
  if (n == 0) fail(Err::BadParameters, "no face words");

  // symbol -> (dart, sign) occurrences
  std::map<std::string, std::vector<std::pair<int, int>>> occ;
  for (int w = 0; w < (int)words.size(); ++w)
    for (int i = 0; i < (int)words[w].size(); ++i)
      occ[words[w][i].first].push_back({base[w] + i, words[w][i].second});

  std::vector<int> alpha(n, -1);
  for (auto& [name, v] : occ) {
    if (v.size() != 2 || v[0].second * v[1].second != -1)
      fail(Err::SymbolCountError,
           "symbol '" + name + "' must occur exactly twice with opposite signs");
    alpha[v[0].first] = v[1].first;
    alpha[v[1].first] = v[0].first;
  }

  // phi_raw = successor within each word; sigma = phi_raw ∘ alpha makes the
  // face walks equal the input words.
  std::vector<int> sigma(n, -1);
  for (int w = 0; w < (int)words.size(); ++w) {
    int len = (int)words[w].size();
    for (int i = 0; i < len; ++i) {
      int d = base[w] + i;
      int succ = base[w] + (i + 1) % len;
      sigma[alpha[d]] = succ;
    }
  }
  return build_map(std::move(alpha), std::move(sigma));
}

namespace {

// Rebuilds a map after deleting the darts in `gone` (sorted), with alpha and
// sigma already fixed up on the survivors in old numbering.
Rewrite compress(const PlanarMap& old, const std::vector<int>& alpha,
                 const std::vector<int>& sigma, const std::vector<char>& gone,
                 Err disconnect_as) {
  int n = (int)alpha.size();
  std::vector<int> dart_map(n, -1);
  int k = 0;
  for (int d = 0; d < n; ++d)
    if (!gone[d]) dart_map[d] = k++;
  std::vector<int> a2(k), s2(k);
  for (int d = 0; d < n; ++d) {
    if (gone[d]) continue;
    a2[dart_map[d]] = dart_map[alpha[d]];
    s2[dart_map[d]] = dart_map[sigma[d]];
  }
  Rewrite r;
  try {
    r.map = build_map(std::move(a2), std::move(s2));
  } catch (const Error& e) {
    if (e.code() == Err::NotConnected) fail(disconnect_as, "rewrite would disconnect the map");
    throw;
  }
  r.dart_map = std::move(dart_map);
  // carry vertex marks through surviving darts
  for (int d = 0; d < n; ++d)
    if (r.dart_map[d] >= 0)
      r.map.vertex_mark[r.map.dart_vertex[r.dart_map[d]]] = old.vertex_mark[old.dart_vertex[d]];
  return r;
}

}  // namespace

Rewrite smooth_bivalent(const PlanarMap& m, int v) {
  if (v < 0 || v >= m.n_vertices()) fail(Err::BadParameters, "no such vertex");
  if (m.valence(v) != 2) fail(Err::NotBivalent, "vertex " + std::to_string(v) + " is not bivalent");
  if (m.vertex_mark[v] != 0)
    fail(Err::ProtectedVertex, "vertex " + std::to_string(v) + " is protected");
  int a = m.vertices[v][0], b = m.vertices[v][1];
  if (m.alpha[a] == b)
    fail(Err::LoopAtVertex, "vertex " + std::to_string(v) + " lies on a loop edge");

  // Only alpha changes: the far halves of the two edges become one edge.
  // No surviving dart has sigma-image a or b (those appear only in v's cycle).
  std::vector<int> alpha = m.alpha;
  alpha[m.alpha[a]] = m.alpha[b];
  alpha[m.alpha[b]] = m.alpha[a];
  std::vector<char> gone(m.n_darts(), 0);
  gone[a] = gone[b] = 1;
  return compress(m, alpha, m.sigma, gone, Err::Disconnects);
}

Rewrite delete_edge(const PlanarMap& m, int d) {
  if (d < 0 || d >= m.n_darts()) fail(Err::BadParameters, "no such dart");
  int d2 = m.alpha[d];
  if (m.dart_face[d] == m.dart_face[d2])
    fail(Err::SameSideEdge, "edge has the same face on both sides");
  if (m.n_darts() == 2) fail(Err::Disconnects, "cannot delete the only edge");

  std::vector<int> sigma = m.sigma;
  // splice each removed dart out of its vertex rotation
  for (int x : {d, d2}) {
    int p = x;
    while (sigma[p] != x) p = sigma[p];
    sigma[p] = sigma[x];
  }
  std::vector<char> gone(m.n_darts(), 0);
  gone[d] = gone[d2] = 1;
  return compress(m, m.alpha, sigma, gone, Err::Disconnects);
}

Rewrite add_edge_in_face(const PlanarMap& m, int face, int pos1, int pos2) {
  if (face < 0 || face >= m.n_faces()) fail(Err::CornersNotOnFace, "no such face");
  int len = m.face_len(face);
  if (pos1 < 0 || pos1 >= len || pos2 < 0 || pos2 >= len || pos1 == pos2)
    fail(Err::CornersNotOnFace, "corner positions must be distinct and on the face walk");

  int n = m.n_darts();
  int x = m.faces[face][pos1], y = m.faces[face][pos2];
  int a = m.walk_dart(face, pos1 - 1), b = m.walk_dart(face, pos2 - 1);
  std::vector<int> alpha = m.alpha, sigma = m.sigma;
  alpha.push_back(-1);
  alpha.push_back(-1);
  sigma.push_back(-1);
  sigma.push_back(-1);
  int n1 = n, n2 = n + 1;
  alpha[n1] = n2;
  alpha[n2] = n1;
  sigma[m.alpha[a]] = n1;
  sigma[n1] = x;
  sigma[m.alpha[b]] = n2;
  sigma[n2] = y;

  Rewrite r;
  r.map = build_map(std::move(alpha), std::move(sigma));
  r.dart_map.resize(n);
  std::iota(r.dart_map.begin(), r.dart_map.end(), 0);
  for (int d = 0; d < n; ++d)
    r.map.vertex_mark[r.map.dart_vertex[d]] = m.vertex_mark[m.dart_vertex[d]];
  return r;
}

Rewrite subdivide_edge(const PlanarMap& m, int d) {
  if (d < 0 || d >= m.n_darts()) fail(Err::BadParameters, "no such dart");
  int n = m.n_darts();
  int d2 = m.alpha[d];
  std::vector<int> alpha = m.alpha, sigma = m.sigma;
  alpha.push_back(-1);
  alpha.push_back(-1);
  sigma.push_back(-1);
  sigma.push_back(-1);
  int n1 = n, n2 = n + 1;  // both originate at the new vertex
  alpha[d] = n1;
  alpha[n1] = d;
  alpha[d2] = n2;
  alpha[n2] = d2;
  sigma[n1] = n2;
  sigma[n2] = n1;

  Rewrite r;
  r.map = build_map(std::move(alpha), std::move(sigma));
  r.dart_map.resize(n);
  std::iota(r.dart_map.begin(), r.dart_map.end(), 0);
  for (int dd = 0; dd < n; ++dd)
    r.map.vertex_mark[r.map.dart_vertex[dd]] = m.vertex_mark[m.dart_vertex[dd]];
  return r;
}

std::vector<int> traversal_labels(const std::vector<int>& sigma,
                                  const std::vector<int>& alpha, int root) {
  int n = (int)sigma.size();
  std::vector<int> label(n, -1);
  std::vector<int> queue{root};
  label[root] = 0;
  int next = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    int d = queue[i];
    for (int x : {sigma[d], alpha[d]}) {
      if (label[x] < 0) {
        label[x] = next++;
        queue.push_back(x);
      }
    }
  }
  return label;
}

std::vector<int> rooted_code(const std::vector<int>& sigma,
                             const std::vector<int>& alpha, int root) {
  int n = (int)sigma.size();
  std::vector<int> label = traversal_labels(sigma, alpha, root);
  std::vector<int> inv(n);
  for (int d = 0; d < n; ++d) inv[label[d]] = d;
  std::vector<int> code;
  code.reserve(2 * n);
  for (int l = 0; l < n; ++l) {
    code.push_back(label[sigma[inv[l]]]);
    code.push_back(label[alpha[inv[l]]]);
  }
  return code;
}

}  // namespace mbf
