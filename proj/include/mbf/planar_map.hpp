#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbf/error.hpp"

namespace mbf {

// Dart-based combinatorial map on the 2-sphere.
//
// Darts are dense integers 0..n-1. alpha is a fixed-point-free involution
// (the two sides of an edge); sigma is the counterclockwise rotation of
// out-darts around each vertex. phi = sigma∘alpha traverses each face walk
// keeping the face on the LEFT.
//
// Corner convention: corner at position i of a face walk (d_0..d_{2n-1}) is
// the origin vertex of d_i, sitting between the in-dart d_{i-1} and the
// out-dart d_i. A corner is identified with its out-dart.
struct PlanarMap {
  std::vector<int> alpha;
  std::vector<int> sigma;
  std::vector<int> phi;  // phi[d] = sigma[alpha[d]]

  // Derived orbit structure (filled by build_map).
  std::vector<int> dart_vertex;
  std::vector<int> dart_edge;
  std::vector<int> dart_face;
  std::vector<int> dart_pos;                // position of dart in its face walk
  std::vector<std::vector<int>> vertices;   // sigma-cycles, starting at min dart
  std::vector<std::vector<int>> faces;      // phi-cycles, starting at min dart

  // Optional per-vertex tag; nonzero protects the vertex from smoothing.
  std::vector<int> vertex_mark;

  int n_darts() const { return (int)alpha.size(); }
  int n_edges() const { return n_darts() / 2; }
  int n_vertices() const { return (int)vertices.size(); }
  int n_faces() const { return (int)faces.size(); }
  int valence(int v) const { return (int)vertices[v].size(); }
  int face_len(int f) const { return (int)faces[f].size(); }
  // Dart at (possibly out-of-range) walk position, cyclically.
  int walk_dart(int f, int pos) const {
    int len = face_len(f);
    return faces[f][((pos % len) + len) % len];
  }
};

// Validates alpha/sigma and computes all orbit structure.
// Throws NotInvolution, BadParameters (malformed sigma), NotConnected,
// NotSphere.
PlanarMap build_map(std::vector<int> alpha, std::vector<int> sigma);

// Signed edge symbol of a face word: (name, sign), sign ∈ {+1,-1}.
using Sym = std::pair<std::string, int>;

// Glue faces from boundary words. Every symbol must occur exactly twice
// across all words, with opposite signs (SymbolCountError). Dart (w,i) gets
// index base_w + i where base_w sums the lengths of words 0..w-1; face ids
// equal word indices and each face walk starts at word position 0.
PlanarMap build_from_face_words(const std::vector<std::vector<Sym>>& words);

// Result of a local rewrite: the new map plus the old-dart -> new-dart
// mapping (-1 for deleted darts). Added darts take the highest indices and
// never renumber surviving darts unless deletions occurred (deletions
// compress indices order-preservingly).
struct Rewrite {
  PlanarMap map;
  std::vector<int> dart_map;
};

// Removes a bivalent vertex, merging its two (distinct) edges into one.
// Throws NotBivalent, ProtectedVertex (vertex_mark != 0), LoopAtVertex.
Rewrite smooth_bivalent(const PlanarMap& m, int v);

// Deletes the edge of dart d, merging the two incident faces.
// Throws SameSideEdge if the edge has the same face on both sides,
// Disconnects if removal would disconnect the map (unreachable after the
// SameSideEdge check; kept as a hard guard).
Rewrite delete_edge(const PlanarMap& m, int d);

// Adds an edge between two corners of one face walk, splitting the face.
// The new darts are n and n+1 (n = old dart count): n originates at the
// pos1 corner, n+1 at the pos2 corner. Throws CornersNotOnFace.
Rewrite add_edge_in_face(const PlanarMap& m, int face, int pos1, int pos2);

// Splits the edge of dart d with a new bivalent vertex. New darts: n pairs
// with d, n+1 pairs with the old alpha[d]; both originate at the new vertex.
Rewrite subdivide_edge(const PlanarMap& m, int d);

// Breadth-first labels from a root dart, exploring sigma then alpha; the
// canonical rooted code derived from them determines the map up to
// root-preserving isomorphism.
std::vector<int> traversal_labels(const std::vector<int>& sigma,
                                  const std::vector<int>& alpha, int root);
std::vector<int> rooted_code(const std::vector<int>& sigma,
                             const std::vector<int>& alpha, int root);

}  // namespace mbf
