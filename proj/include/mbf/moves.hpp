#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mbf/butterfly.hpp"

namespace mbf {

// One rewrite step. Ids refer to the diagram the move was applied to
// (before) or produced (after), as noted per field.
struct MoveRecord {
  std::string kind;   // "reduce" or "expand"
  int trunk = -1;     // reduce: deleted trunk (before); expand: new trunk (after)
  int e_vertex = -1;  // expand only: the E-vertex expanded (before)
  int endpoint = -1;  // reduce: chosen endpoint C (before); expand: new C (after)
  int new_e = -1;     // reduce only: the anchor demoted to an E-vertex (after)
  int m_before = 0;
  int m_after = 0;

  std::string to_json() const;  // single JSON object, one line
};

// True iff trunk t's face is a 4-gon whose only A/E corners are the two
// anchors. Such a trunk crosses nothing and can be traded for an E-vertex.
bool is_simple_trunk(const ButterflyDiagram& b, int t);

// Deletes simple trunk t together with its endpoint C (a vertex of t's
// face) and C's two edges; the 4-gon merges into the face F behind C, the
// other anchor D drops to an E-vertex, and m decreases by one. Requires
// C's mirror partner on F to be an A-vertex (NoAdmissibleEndpoint).
// The result may contain plain bivalent vertices; callers smooth them.
// Errors: NotSimple, NoAdmissibleEndpoint, SelfAdjacentFace,
// WouldDisconnect, BadParameters (C is not an anchor of t).
std::pair<ButterflyDiagram, MoveRecord> trunk_reduce(const ButterflyDiagram& b,
                                                     int t, int endpoint);

// Inverse move: splits a 4-gon off a face at E-vertex e, inserting a new
// bivalent vertex C and the trunk C-e; e becomes an A-vertex and m grows
// by one. The corner of e whose mirror partner is an A-vertex is preferred,
// making the new trunk immediately reducible back to the original. When a
// walk neighbor of e is itself A or E, the incident edge classes are first
// subdivided at midpoints so every A/E stays bivalent.
// Errors: NotEVertex.
std::pair<ButterflyDiagram, MoveRecord> trunk_expand(const ButterflyDiagram& b,
                                                     int e_vertex);

// Expands E-vertices until none remain; m grows by the former E-count.
ButterflyDiagram eliminate_e_vertices(const ButterflyDiagram& b);

// Tours every link component from a non-simple trunk, reducing the first
// simple trunk with an admissible endpoint (tour-backward preferred, then
// forward, then later trunks in tour order), smoothing plain vertices after
// each step. Ends with zero simple trunks; on bridge-diagram walls m equals
// the input's non-simple trunk count.
// Errors: ComponentAllSimple, NoAdmissibleEndpoint.
std::pair<ButterflyDiagram, std::vector<MoveRecord>> reduce_to_bridges(
    const ButterflyDiagram& b);

}  // namespace mbf
