#pragma once

// Text exports of a snapshot: SVG drawing, Graphviz graphs and an exploded
// 3D pose. All output is byte-deterministic.

#include <string>
#include <vector>

#include "origami/origami.hpp"

namespace origami {

/// Faces bottom to top (ties by id); valley creases dashed, mountain solid.
std::string to_svg(const AbstractOrigami& ao);

enum class GraphKind { Adjacency, Superposition };

std::string to_dot(const Graph& g, GraphKind kind);

struct Point3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

struct PosedFace {
  FaceId id;
  std::vector<Point3> vertices;
};

struct Pose3D {
  double gap = 0.0;
  std::vector<PosedFace> faces;  // by ascending id

  const PosedFace& face(FaceId id) const;
};

/// Longest-path depth of each face in the superposition graph.
std::map<FaceId, int> layer_depths(const AbstractOrigami& ao);

/// Layers lifted to z = depth * gap; a posed fold rotates its moved faces
/// out of the plane about the fold line. Throws Error{Precondition} for
/// gap <= 0 and Error{Cycle} for a cyclic superposition graph.
Pose3D pose3d(const AbstractOrigami& ao, double gap);

std::string export_3d(const Pose3D& pose);

/// Angle between two posed faces measured across the crease they share.
double dihedral(const AbstractOrigami& ao, const Pose3D& pose, FaceId a, FaceId b);

}  // namespace origami
