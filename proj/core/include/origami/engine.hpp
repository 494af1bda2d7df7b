#pragma once

// Mountain and valley folds on a layered abstract origami.
//
// Faces to the right of the fold ray move. A crossed face n is split into a
// stationary child 2n and a moving child 2n+1 joined by a new crease. Motion
// propagates through every intact crease that does not lie on the fold line;
// a fold that would separate two faces joined by such a crease is rejected.

#include <optional>
#include <set>

#include "origami/origami.hpp"

namespace origami {

struct FoldSpec {
  CreaseKind kind = CreaseKind::Valley;
  Ray ray;
  /// Faces grabbed by the fold; all faces when absent.
  std::optional<std::set<FaceId>> targets;
  /// Rotation angle in (0, pi]; anything below pi poses the origami.
  double angle = kPi;
  /// Place the moved stack directly above (valley) or below (mountain) this face.
  std::optional<FaceId> insert_face;
};

/// Faces that move under `spec`, named as they will be after splitting.
std::set<FaceId> moving_set(const AbstractOrigami& ao, const FoldSpec& spec);

AbstractOrigami fold(const AbstractOrigami& ao, const FoldSpec& spec);

/// Reverts the most recent flat fold; subdivision and creases persist.
AbstractOrigami unfold(const AbstractOrigami& ao);

/// Fold along the O2 line of p and q, oriented so that p's side moves onto q.
AbstractOrigami fold_bring(const AbstractOrigami& ao, Point p, Point q, CreaseKind kind,
                           const std::optional<std::set<FaceId>>& targets = std::nullopt);

/// The ray used by fold_bring: lies on the bisector of p and q, p on its right.
Ray bring_ray(Point p, Point q);

}  // namespace origami
