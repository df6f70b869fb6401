#pragma once

#include <utility>
#include <vector>

#include "mbf/planar_map.hpp"

namespace mbf {

// A trunk folds its face onto itself; the anchors are antipodal corners of
// the face walk: pos_d == pos_c + n (mod 2n) for a walk of length 2n.
struct Trunk {
  int face;
  int pos_c;
  int pos_d;
};

enum class VertexKind { A, E, B, Plain };

// Vertex ≃-classes: transitive closure of the per-face corner pairings.
// A = trunk endpoint; E = non-A in a class containing an A; B = non-A/E in a
// class containing a non-bivalent vertex; Plain = everything else (only
// legal mid-rewrite, never in a valid butterfly).
struct VertexClasses {
  std::vector<int> cls;                    // vertex -> class id
  std::vector<std::vector<int>> members;   // class id -> sorted vertices
  std::vector<VertexKind> kind;            // per vertex
  int count_a = 0, count_e = 0, count_b = 0, count_plain = 0;
};

struct ButterflyDiagram {
  PlanarMap map;
  std::vector<Trunk> trunks;  // trunks[f].face == f, one per face
  VertexClasses classes;      // tolerant classification, cached

  int m() const { return (int)trunks.size(); }
  // Anchor corners as out-darts / vertices.
  int anchor_dart_c(int t) const { return map.faces[t][trunks[t].pos_c]; }
  int anchor_dart_d(int t) const { return map.faces[t][trunks[t].pos_d]; }
  int anchor_vertex_c(int t) const { return map.dart_vertex[anchor_dart_c(t)]; }
  int anchor_vertex_d(int t) const { return map.dart_vertex[anchor_dart_d(t)]; }
};

// Structural validation only: faces↔trunks bijection, even walks, antipodal
// anchors (AnchorNotAntipodal), distinct anchor vertices (ClosedTrunk).
// Classification validity is validate-time, not construction-time, so
// mid-move diagrams with plain vertices remain representable.
// Marks A/E vertices protected in the map and caches the classification.
ButterflyDiagram make_butterfly(PlanarMap map, std::vector<Trunk> trunks);

// Corner pairing of face f: p -> 2·pos_c - p (mod 2n). Fixes the anchors.
int pair_corner(const ButterflyDiagram& b, int face, int pos);
// Induced pairing on walk edge-sides: p -> 2·pos_c - 1 - p (mod 2n).
int pair_side(const ButterflyDiagram& b, int face, int pos);

// Throws NonBivalentAE or UnclassifiableVertex on invalid diagrams;
// otherwise returns the cached classification.
VertexClasses classify_vertices(const ButterflyDiagram& b);

// One chord per mirror corner pair occupied by A/E vertices; slot k is the
// distance from the pos_c anchor, 1 <= k <= n-1.
struct Chord {
  int face;
  int k;
  int pos_plus;   // (pos_c + k) mod 2n
  int pos_minus;  // (pos_c - k) mod 2n
};

struct GammaGraph {
  std::vector<Chord> chords;
  std::vector<std::vector<int>> paths;        // vertex lists, A ... A
  std::vector<std::vector<int>> path_chords;  // chord ids along each path
};

// Components must be simple paths bounded by two A-vertices (A monovalent,
// E bivalent); otherwise throws GammaNotPaths. Chord-free anchors (gamma
// valence 0) are tolerated and resolved by link_components.
GammaGraph gamma_graph(const ButterflyDiagram& b);

struct LinkComponents {
  int count = 0;
  // Each cycle alternates (trunk id, gamma path id), aligned pairwise:
  // trunk[i] is followed by path[i] at a shared A-vertex. Path id -1 marks
  // two trunks joined end to end at a chord-free anchor; components made
  // only of such joins are crossing-free (degenerate bridge diagrams).
  std::vector<std::vector<std::pair<int, int>>> cycles;
};

LinkComponents link_components(const ButterflyDiagram& b);

// Equatorial 2p-cycle with the north trunk at v_0, v_p and the south trunk
// at v_q, v_{q+p}. Requires p >= 2, 1 <= q < p, gcd(p,q) = 1 (otherwise the
// construction contains unclassifiable all-bivalent classes).
ButterflyDiagram make_rational_butterfly(int p, int q);

// Smooths every plain vertex (their classes are mirror-closed, so all
// anchors stay antipodal); anchors are recomputed via surviving darts.
// If vertex_map is given it receives old-id -> new-id (-1 for smoothed).
ButterflyDiagram smooth_plain_vertices(const ButterflyDiagram& b,
                                       std::vector<int>* vertex_map = nullptr);

// Planar-map isomorphism carrying trunks to trunks and anchors to anchors,
// allowing global orientation reversal; if only a reversed isomorphism
// exists, *orientation_reversed is set.
bool butterfly_isomorphic(const ButterflyDiagram& a, const ButterflyDiagram& b,
                          bool* orientation_reversed = nullptr);

}  // namespace mbf
