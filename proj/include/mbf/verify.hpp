#pragma once

#include <string>
#include <vector>

#include "mbf/butterfly.hpp"
#include "mbf/laurent.hpp"
#include "mbf/link.hpp"

namespace mbf {

// Cell counts of the quotient space B³/≃: V* vertex classes, E* edge
// classes under the chained edge-side pairings, plus m trunk 1-cells, m
// folded 2-cells and one 3-cell. χ = V* − (E*+m) + m − 1 = V* − E* − 1,
// which is 0 exactly when the quotient is a closed-3-manifold candidate.
struct QuotientComplex {
  int v_star = 0;
  int e_star = 0;
  int m = 0;
  int chi() const { return v_star - e_star - 1; }
  bool ok() const { return chi() == 0; }
};

QuotientComplex quotient_cell_counts(const ButterflyDiagram& b);

// Structural claims about Γ: strict classification succeeds, components are
// simple paths bounded by two A-vertices, #paths = m, and each A/E ≃-class
// is exactly one path's vertex set.
struct GammaReport {
  bool ok = true;
  std::string detail;  // first failure
  int paths = 0;
};

GammaReport check_gamma_claims(const ButterflyDiagram& b);

// Standard state-sum bracket: per state A-smoothings join {a,b},{c,d} and
// B-smoothings join {a,d},{b,c}; each state contributes
// A^(#A−#B)·(−A²−A⁻²)^(loops−1). At most 16 crossings (TooManyCrossings).
Laurent kauffman_bracket(const LinkDiagram& d);

// Writhe-normalized bracket (−A³)^(−w)·⟨D⟩ per orientation assignment,
// canonicalized as a sorted multiset over all 2^components orientations,
// with the component count. Strict equality compares conventions-identical
// diagrams; allow_mirror additionally compares under A → A⁻¹.
struct Fingerprint {
  int components = 0;
  std::vector<Laurent> values;  // sorted

  Fingerprint mirrored() const;
  std::string str() const;
  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.components == b.components && a.values == b.values;
  }
};

Fingerprint fingerprint(const LinkDiagram& d);
bool fingerprints_equal(const Fingerprint& a, const Fingerprint& b,
                        bool allow_mirror);

}  // namespace mbf
