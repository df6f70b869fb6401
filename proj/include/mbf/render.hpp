#pragma once

#include <string>

#include "mbf/butterfly.hpp"
#include "mbf/link.hpp"

namespace mbf {

enum class RenderTarget { Butterfly, ButterflyWithGamma, Link };

// Layout and styling knobs.  Layout is cosmetic only: it never feeds back
// into the combinatorics, and identical input + spec gives byte-identical
// SVG (fixed iteration counts, fixed "%.2f" coordinate formatting).
struct RenderSpec {
  RenderTarget target = RenderTarget::Butterfly;
  int outer_face = -1;    // -1: face with the most distinct vertices
  int iterations = 200;   // barycentric smoothing sweeps
  double canvas = 520.0;  // square canvas edge, px
  int subdivision = -1;   // layout-only midpoints per edge; -1: auto
};

// Straight-line SVG of a butterfly: one polyline per edge, one thick line
// per trunk, dotted mirror chords when target is ButterflyWithGamma, and
// per-kind vertex glyphs (A filled, E hollow, B drawn as "*").  The layout
// pins the outer face to a convex polygon and relaxes the rest barycentric-
// style; edges are subdivided for layout only, so non-3-connected maps stay
// drawable.  Throws DegenerateLayout if no usable embedding is found after
// bumping the subdivision depth three times, BadParameters for a bad
// outer_face.
std::string layout_svg(const ButterflyDiagram& b, const RenderSpec& spec = {});

// SVG of a link diagram: one polyline per PD segment with the under-strand
// ends clipped short of each crossing (the usual under-gap), one invisible
// census marker per crossing, crossing-free loop components as circles.
// Requires a single connected piece (preprocess split diagrams first).
std::string layout_svg(const LinkDiagram& d, const RenderSpec& spec = {});

}  // namespace mbf
