#pragma once

#include <array>
#include <vector>

#include "mbf/planar_map.hpp"

namespace mbf {

// PD-style link diagram. A crossing tuple (a,b,c,d) lists segment labels
// counterclockwise starting at the incoming under-segment: the under-strand
// passes a -> c, the over-strand occupies b and d (slot parity: odd = over).
// Crossing sign under chosen orientations: positive iff the under-strand
// runs a -> c exactly when the over-strand runs d -> b.
struct LinkDiagram {
  std::vector<std::array<int, 4>> crossings;  // original labels
  int loops = 0;                              // crossing-free components

  // Derived structure (filled by make_link_diagram).
  std::vector<int> labels;            // sorted distinct labels; dense id = index
  std::vector<std::array<int, 4>> xs; // crossings with dense segment ids
  std::vector<std::array<std::pair<int, int>, 2>> seg_occ;  // (crossing, slot) x2

  struct Passage {
    int crossing;
    bool over;
    bool forward;  // under: runs a->c; over: runs b->d
  };
  // A crossing-carrying component, traversed in its reference orientation:
  // passages[i] is the crossing between segments[i] and segments[i+1].
  struct Strand {
    std::vector<int> segments;
    std::vector<Passage> passages;
  };
  std::vector<Strand> strands;
  std::vector<int> seg_strand;  // dense segment -> strand index

  struct XInfo {
    int under_strand, over_strand;
    bool under_forward, over_forward;  // under the reference orientations
  };
  std::vector<XInfo> xinfo;

  std::vector<int> piece;  // crossing -> connected piece id
  int n_pieces = 0;

  int n_crossings() const { return (int)crossings.size(); }
  int n_segments() const { return (int)labels.size(); }
  int n_components() const { return (int)strands.size() + loops; }
};

// Validates (labels must occur exactly twice: DanglingSegment; each
// connected piece must embed in the sphere: NonPlanarPD) and derives all
// structure. An empty diagram (no crossings, no loops) is rejected.
LinkDiagram make_link_diagram(std::vector<std::array<int, 4>> crossings,
                              int loops);

// Crossing sign with strand s reversed iff bit s of strand_mask is set.
int crossing_sign(const LinkDiagram& d, int crossing, unsigned strand_mask);
int writhe(const LinkDiagram& d, unsigned strand_mask);

// True if the strand never passes under / never passes over.
bool strand_all_over(const LinkDiagram& d, int s);
bool strand_all_under(const LinkDiagram& d, int s);

// 4-valent planar-map realization; dart of (crossing, slot) is
// 4*crossing + slot. Requires at least one crossing, a single connected
// piece, and no crossing-free loops (Disconnected otherwise).
PlanarMap link_map(const LinkDiagram& d);

}  // namespace mbf
