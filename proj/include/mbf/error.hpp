#pragma once

#include <stdexcept>
#include <string>

namespace mbf {

enum class Err {
  // planar map structure
  NotInvolution,
  NotConnected,
  NotSphere,
  NotBivalent,
  ProtectedVertex,
  LoopAtVertex,
  Disconnects,
  CornersNotOnFace,
  SameSideEdge,
  // parsing / formats
  SyntaxError,
  SymbolCountError,
  AnchorNotAntipodal,
  NonPlanarPD,
  DanglingSegment,
  // butterfly validation
  NonBivalentAE,
  UnclassifiableVertex,
  GammaNotPaths,
  BadParameters,
  ClosedTrunk,
  // diagram preprocessing / bridge decomposition
  HasClosedCurve,
  Disconnected,
  ComponentWithoutBridge,
  // moves
  NotSimple,
  NoAdmissibleEndpoint,
  SelfAdjacentFace,
  WouldDisconnect,
  NotEVertex,
  ComponentAllSimple,
  // invariants / rendering
  TooManyCrossings,
  DegenerateLayout,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::NotInvolution: return "NotInvolution";
    case Err::NotConnected: return "NotConnected";
    case Err::NotSphere: return "NotSphere";
    case Err::NotBivalent: return "NotBivalent";
    case Err::ProtectedVertex: return "ProtectedVertex";
    case Err::LoopAtVertex: return "LoopAtVertex";
    case Err::Disconnects: return "Disconnects";
    case Err::CornersNotOnFace: return "CornersNotOnFace";
    case Err::SameSideEdge: return "SameSideEdge";
    case Err::SyntaxError: return "SyntaxError";
    case Err::SymbolCountError: return "SymbolCountError";
    case Err::AnchorNotAntipodal: return "AnchorNotAntipodal";
    case Err::NonPlanarPD: return "NonPlanarPD";
    case Err::DanglingSegment: return "DanglingSegment";
    case Err::NonBivalentAE: return "NonBivalentAE";
    case Err::UnclassifiableVertex: return "UnclassifiableVertex";
    case Err::GammaNotPaths: return "GammaNotPaths";
    case Err::BadParameters: return "BadParameters";
    case Err::ClosedTrunk: return "ClosedTrunk";
    case Err::HasClosedCurve: return "HasClosedCurve";
    case Err::Disconnected: return "Disconnected";
    case Err::ComponentWithoutBridge: return "ComponentWithoutBridge";
    case Err::NotSimple: return "NotSimple";
    case Err::NoAdmissibleEndpoint: return "NoAdmissibleEndpoint";
    case Err::SelfAdjacentFace: return "SelfAdjacentFace";
    case Err::WouldDisconnect: return "WouldDisconnect";
    case Err::NotEVertex: return "NotEVertex";
    case Err::ComponentAllSimple: return "ComponentAllSimple";
    case Err::TooManyCrossings: return "TooManyCrossings";
    case Err::DegenerateLayout: return "DegenerateLayout";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg, int line = -1, int col = -1)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code), line_(line), col_(col) {}

  Err code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  Err code_;
  int line_;
  int col_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg, int line = -1,
                              int col = -1) {
  throw Error(code, msg, line, col);
}

}  // namespace mbf
