#pragma once

#include <vector>

#include "mbf/butterfly.hpp"
#include "mbf/link.hpp"

namespace mbf {

// One arc of a link diagram cut at every under-passage: it starts just
// after one dive, passes over zero or more crossings, and ends just before
// the next dive along the same component.
struct Arc {
  int strand = 0;          // component (strand index) the arc lies on
  bool overarc = false;    // passes over at least one crossing
  std::vector<int> overs;  // crossings passed over, in travel order
  int dive_in = -1;        // crossing whose dive the arc leaves from
  int dive_out = -1;       // crossing whose dive the arc runs into
};

// A connected link diagram together with its division into arcs. Heights
// are implicit: arcs run on top and dive below at the cut points. Overarcs
// are the bridges; arcs that pass over nothing are simple.
struct BridgeDiagram {
  LinkDiagram link;
  std::vector<Arc> arcs;           // grouped by strand, in travel order
  bool bridge_degenerate = false;  // some trunk put no crossing on its bridge

  int n_arcs() const { return (int)arcs.size(); }
  int n_overarcs() const;
  int n_simple() const;
};

// Cuts every component at its under-passages. Throws HasClosedCurve for
// crossing-free loops, Disconnected for split diagrams, and
// ComponentWithoutBridge for components that never pass under (nowhere to
// cut) or never pass over (no bridge); preprocess_diagram repairs all of
// these.
BridgeDiagram bridge_decompose(LinkDiagram d);

// Realizes the butterfly as a bridge diagram: trunks become bridges and
// each mirror chord becomes one crossing where the chord passes under its
// face's trunk. Requires a strictly classifiable butterfly.
BridgeDiagram butterfly_to_link(const ButterflyDiagram& b);

// Builds the butterfly of a bridge diagram with one trunk per arc: a hub
// vertex is placed in every region of the diagram, each arc end is joined
// to the hubs of the two regions flanking it, and the resulting graph cuts
// the sphere into one face per arc (the arc's neighborhood). The output
// has no E-vertices, and emitting it back yields a diagram of the same
// link.
ButterflyDiagram link_to_butterfly(const BridgeDiagram& bd);

// Reidemeister-equivalent repair: puts a kink on each crossing-free loop
// and each all-over/all-under component, then joins separate pieces with
// clasp-free pokes. The result converts cleanly and keeps the input's
// fingerprint.
LinkDiagram preprocess_diagram(const LinkDiagram& d);

}  // namespace mbf
