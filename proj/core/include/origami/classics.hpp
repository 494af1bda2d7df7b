#pragma once

// Classical composite folds. Each one cuts a crease, performs a fixed sequence
// of single-line folds and glues the crease back; the returned steps expose
// that decomposition.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "origami/engine.hpp"

namespace origami {

/// Pair of adjacent faces; `above` lies over `below`.
struct LayerPair {
  FaceId below;
  FaceId above;
};

struct CompositeResult {
  AbstractOrigami result;
  std::vector<TraceStep> steps;
};

/// bottom = Ray[P, Q], ridge = Ray[R, P].
CompositeResult squash_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& bottom,
                            const Ray& ridge);

CompositeResult inside_reverse_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ray);
CompositeResult outside_reverse_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ray);

/// ridge = Ray[P, Q], base = Ray[P, R], hypotenuse = Ray[P, S] with right
/// angles at R in both PQR and PRS.
CompositeResult rabbit_ear_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ridge,
                                const Ray& base, const Ray& hypotenuse);

/// Valley fold along `first`, then mountain fold along `second` applied to
/// the stack moved by the first fold.
CompositeResult pleat_fold(const AbstractOrigami& ao, const Ray& first, const Ray& second,
                           const std::optional<std::set<FaceId>>& targets = std::nullopt);

enum class CrimpVariant { Outside, Inside };

/// Cuts the origami into two halves along the crease of `divide` and pleats
/// each half; the second half uses the rays mirrored across the dividing
/// crease.
CompositeResult pleat_crimp_fold(const AbstractOrigami& ao, LayerPair divide, const Ray& first,
                                 const Ray& second, CrimpVariant variant);

/// Ray[Y, X] for Ray[X, Y].
inline Ray rev(const Ray& r) { return r.reversed(); }

}  // namespace origami
