#pragma once

#include <string>

#include "mbf/butterfly.hpp"
#include "mbf/link.hpp"

namespace mbf {

// .btf gluing format. Line-oriented UTF-8:
//
//   btf 1                                  (optional header)
//   face <id>: <signed symbols> ; trunk <posC> <posD>
//
// '#' starts a comment. Face ids must cover 0..F-1; every edge symbol must
// occur exactly twice with opposite signs ('-' prefix; '+' optional).
// Corners index into the face word; vertices are derived as corner orbits.
ButterflyDiagram parse_btf(const std::string& text);
std::string emit_btf(const ButterflyDiagram& b);

// .pd format. Line-oriented:
//
//   X <a> <b> <c> <d>       one crossing, counterclockwise from under-in
//   O                       one crossing-free loop component
LinkDiagram parse_pd(const std::string& text);
std::string emit_pd(const LinkDiagram& d);

// One line per component: passages "O<k><sign>" / "U<k><sign>" with 1-based
// crossing numbers and reference-orientation signs; crossing-free loop
// components emit the line "unknot".
std::string emit_gauss(const LinkDiagram& d);

}  // namespace mbf
