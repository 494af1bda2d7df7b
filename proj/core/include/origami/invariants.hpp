#pragma once

// Structural checks on single states and whole construction traces. Each
// check returns human-readable violations; an empty list means the state is
// well formed.

#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

enum class Invariant {
  FaceTree,        // every face id n > 1 has its parent n/2 at an earlier step
  AreaConserved,
  CreaseOnBoundary,
  Overlap,         // superposed faces overlap
  Acyclic,
  LayerOrder,      // the stacking lists every face exactly once
};

inline constexpr Invariant kAllInvariants[] = {
    Invariant::FaceTree, Invariant::AreaConserved, Invariant::CreaseOnBoundary,
    Invariant::Overlap,  Invariant::Acyclic,       Invariant::LayerOrder};

const char* to_string(Invariant inv);

struct Violation {
  Invariant invariant;
  std::string message;
};

std::vector<Violation> check_state(const AbstractOrigami& ao);

/// Per-state checks on every flattened step plus face-id ancestry and area
/// conservation across steps.
std::vector<Violation> check_trace(const ConstructionTrace& trace);

double total_area(const AbstractOrigami& ao);

}  // namespace origami
