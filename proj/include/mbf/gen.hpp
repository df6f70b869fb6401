#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbf/butterfly.hpp"
#include "mbf/moves.hpp"

namespace mbf {

// Deterministic pseudo-random butterflies for property tests.  Instances are
// only ever composed from link-preserving operations (rational constructors,
// caller-supplied bases, trunk expansions), so every instance carries a
// known-correct link without external ground truth.
struct GenConfig {
  std::uint64_t seed = 0;
  int max_m = 6;            // trunk budget; walks stop before exceeding it
  int max_expansions = 4;   // longest expansion walk appended to a base
  int max_crossings = 14;   // emitted-diagram budget, keeps invariants cheap
  bool rational_bases = true;   // two-bridge bases b(p,q), p <= 8
  bool walk_expansions = true;  // follow the base with random expansions
  std::vector<ButterflyDiagram> extra_bases;  // e.g. corpus conversions
};

// A generated butterfly plus everything needed to replay or shrink it.
// stages[0] is the base; stages[k+1] is stages[k] after expansions[k].
struct GenInstance {
  ButterflyDiagram butterfly;  // == stages.back()
  std::string source;          // base description, e.g. "rational(5,2)"
  std::vector<ButterflyDiagram> stages;
  std::vector<MoveRecord> expansions;
};

// Same config (including extra_bases order) gives an identical instance.
// Errors: BadParameters when the budget admits no base at all.
GenInstance random_butterfly(const GenConfig& cfg);

// Undo expansions in reverse: instance with the last expansion removed
// first, down to the bare base last.  Empty for an unexpanded instance.
std::vector<GenInstance> shrink(const GenInstance& inst);

}  // namespace mbf
