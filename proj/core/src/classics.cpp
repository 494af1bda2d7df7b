#include "origami/classics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "origami/error.hpp"

namespace origami {
namespace {

std::string point_text(Point p) {
  return "(" + format_number(p.x) + "," + format_number(p.y) + ")";
}

std::string ray_text(const Ray& r) {
  return "Ray[" + point_text(r.origin) + "," + point_text(r.through) + "]";
}

std::string faces_text(const std::optional<std::set<FaceId>>& faces) {
  if (!faces) return "";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (FaceId id : *faces) {
    os << (first ? "" : ",") << id.value;
    first = false;
  }
  os << "},";
  return os.str();
}

std::set<FaceId> descendants(const AbstractOrigami& ao, FaceId ancestor) {
  std::set<FaceId> out;
  for (const auto& [id, f] : ao.faces) {
    if (id.descends_from(ancestor)) out.insert(id);
  }
  if (out.empty()) {
    throw Error(ErrorKind::NoSuchFace, "no face descends from " + std::to_string(ancestor.value));
  }
  return out;
}

// Runs basic operations on a working snapshot and records each one.
class Recorder {
 public:
  explicit Recorder(const AbstractOrigami& ao) : ao_(ao) {}

  void cut(FaceId below, FaceId above) {
    ao_ = cut_edge(ao_, below, above);
    record("CutEdge[{" + std::to_string(below.value) + "," + std::to_string(above.value) + "}]");
  }

  void glue() {
    ao_ = glue_edges(ao_);
    record("GlueEdges");
  }

  /// Returns the faces moved by this fold.
  std::set<FaceId> fold(CreaseKind kind, const std::optional<std::set<FaceId>>& targets,
                        const Ray& ray, std::optional<FaceId> insert = std::nullopt) {
    FoldSpec spec;
    spec.kind = kind;
    spec.ray = ray;
    spec.targets = targets;
    spec.insert_face = insert;
    ao_ = origami::fold(ao_, spec);
    std::string label = std::string(kind == CreaseKind::Valley ? "ValleyFold[" : "MountainFold[") +
                        faces_text(targets) + ray_text(ray);
    if (insert) label += ",InsertFace->" + std::to_string(insert->value);
    record(label + "]");
    return ao_.last_fold->moved;
  }

  void bring(Point p, Point q, CreaseKind kind, const std::set<FaceId>& targets) {
    ao_ = fold_bring(ao_, p, q, kind, targets);
    record("HO[" + point_text(p) + "," + point_text(q) + "]");
  }

  void append(const CompositeResult& sub) {
    ao_ = sub.result;
    steps_.insert(steps_.end(), sub.steps.begin(), sub.steps.end());
  }

  const AbstractOrigami& current() const { return ao_; }

  CompositeResult finish() && { return {std::move(ao_), std::move(steps_)}; }

 private:
  void record(std::string label) { steps_.push_back({std::move(label), ao_, {}}); }

  AbstractOrigami ao_;
  std::vector<TraceStep> steps_;
};

const AdjacencyEdge& require_adjacent(const AbstractOrigami& ao, LayerPair pair) {
  const auto it = std::find_if(ao.adjacency.begin(), ao.adjacency.end(),
                               [&](const AdjacencyEdge& e) { return e.joins(pair.below, pair.above); });
  if (it == ao.adjacency.end()) {
    throw Error(ErrorKind::NoSuchEdge, "faces {" + std::to_string(pair.below.value) + "," +
                                           std::to_string(pair.above.value) + "} are not adjacent");
  }
  return *it;
}

void require_overlapping(const AbstractOrigami& ao, LayerPair pair) {
  if (overlap_area(ao.face(pair.below).polygon(), ao.face(pair.above).polygon()) <= kEps) {
    throw Error(ErrorKind::Precondition, "faces {" + std::to_string(pair.below.value) + "," +
                                             std::to_string(pair.above.value) +
                                             "} do not overlap");
  }
}

bool right_angle(Point vertex, Point a, Point b) {
  const Point u = a - vertex, v = b - vertex;
  return std::abs(dot(u, v)) <= kEps * norm(u) * norm(v);
}

CompositeResult reverse_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ray, bool inside) {
  require_adjacent(ao, pair);
  require_overlapping(ao, pair);
  Recorder rec(ao);
  rec.cut(pair.below, pair.above);
  if (inside) {
    rec.fold(CreaseKind::Mountain, descendants(rec.current(), pair.above), ray, pair.below);
    rec.fold(CreaseKind::Valley, descendants(rec.current(), pair.below), ray, pair.above);
  } else {
    rec.fold(CreaseKind::Valley, descendants(rec.current(), pair.above), ray);
    rec.fold(CreaseKind::Mountain, descendants(rec.current(), pair.below), ray);
  }
  rec.glue();
  return std::move(rec).finish();
}

CompositeResult pleat(const AbstractOrigami& ao, const Ray& first, const Ray& second,
                      const std::optional<std::set<FaceId>>& targets, CreaseKind first_kind,
                      CreaseKind second_kind) {
  Recorder rec(ao);
  const std::set<FaceId> moved = rec.fold(first_kind, targets, first);
  rec.fold(second_kind, moved, second);
  return std::move(rec).finish();
}

std::set<FaceId> component(const AbstractOrigami& ao, FaceId start) {
  std::set<FaceId> seen{start};
  std::deque<FaceId> work{start};
  while (!work.empty()) {
    const FaceId id = work.front();
    work.pop_front();
    for (const AdjacencyEdge& e : ao.adjacency) {
      if (e.a != id && e.b != id) continue;
      const FaceId other = e.a == id ? e.b : e.a;
      if (seen.insert(other).second) work.push_back(other);
    }
  }
  return seen;
}

}  // namespace

CompositeResult squash_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& bottom,
                            const Ray& ridge) {
  if (!near(bottom.origin, ridge.through)) {
    throw Error(ErrorKind::Precondition, "squash rays must share their point P");
  }
  require_adjacent(ao, pair);
  const Point r = ridge.origin;
  const Point q = bottom.through;

  Recorder rec(ao);
  rec.cut(pair.below, pair.above);
  rec.fold(CreaseKind::Valley, descendants(rec.current(), pair.below), bottom);
  const std::set<FaceId> flap = rec.fold(CreaseKind::Valley, descendants(rec.current(), pair.above), ridge);
  rec.bring(r, q, CreaseKind::Valley, flap);
  rec.glue();
  return std::move(rec).finish();
}

CompositeResult inside_reverse_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ray) {
  return reverse_fold(ao, pair, ray, true);
}

CompositeResult outside_reverse_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ray) {
  return reverse_fold(ao, pair, ray, false);
}

CompositeResult rabbit_ear_fold(const AbstractOrigami& ao, LayerPair pair, const Ray& ridge,
                                const Ray& base, const Ray& hypotenuse) {
  const Point p = ridge.origin;
  if (!near(base.origin, p) || !near(hypotenuse.origin, p)) {
    throw Error(ErrorKind::Precondition, "rabbit-ear rays must share their origin");
  }
  const Point q = ridge.through, r = base.through, s = hypotenuse.through;
  if (!right_angle(r, q, p) || !right_angle(r, s, p)) {
    throw Error(ErrorKind::Precondition,
                "rabbit-ear rays must form right triangles PQR and PRS with the right angle at R");
  }
  require_adjacent(ao, pair);

  Recorder rec(ao);
  rec.cut(pair.below, pair.above);
  rec.fold(CreaseKind::Valley, descendants(rec.current(), pair.below), rev(ridge));
  rec.fold(CreaseKind::Valley, std::nullopt, base);
  rec.fold(CreaseKind::Valley, std::nullopt, rev(hypotenuse));
  rec.fold(CreaseKind::Valley, std::nullopt, ridge);
  rec.glue();
  return std::move(rec).finish();
}

CompositeResult pleat_fold(const AbstractOrigami& ao, const Ray& first, const Ray& second,
                           const std::optional<std::set<FaceId>>& targets) {
  return pleat(ao, first, second, targets, CreaseKind::Valley, CreaseKind::Mountain);
}

CompositeResult pleat_crimp_fold(const AbstractOrigami& ao, LayerPair divide, const Ray& first,
                                 const Ray& second, CrimpVariant variant) {
  const AdjacencyEdge divider = require_adjacent(ao, divide);
  const Line paper_line = line_through(divider.crease.a, divider.crease.b);

  Recorder rec(ao);
  rec.cut(divide.below, divide.above);
  // every other piece of the dividing crease is cut too
  for (const AdjacencyEdge& e : ao.adjacency) {
    if (e.joins(divide.below, divide.above)) continue;
    if (paper_line.contains(e.crease.a) && paper_line.contains(e.crease.b)) rec.cut(e.a, e.b);
  }
  const std::set<FaceId> half_a = component(rec.current(), divide.below);
  if (half_a.count(divide.above)) {
    throw Error(ErrorKind::Precondition, "dividing crease does not separate the origami");
  }
  const std::set<FaceId> half_b = component(rec.current(), divide.above);

  // mirror across the dividing crease as drawn on the sheet
  const Isometry mirror = ao.face(divide.above).placement * Isometry::reflection(paper_line) *
                          ao.face(divide.below).placement.inverse();
  auto mirrored = [&](const Ray& r) {
    const Ray m{mirror.apply(r.origin), mirror.apply(r.through)};
    return mirror.determinant() < 0 ? m.reversed() : m;
  };

  rec.append(pleat(rec.current(), first, second, half_a, CreaseKind::Valley, CreaseKind::Mountain));
  const bool inside = variant == CrimpVariant::Inside;
  rec.append(pleat(rec.current(), mirrored(first), mirrored(second), half_b,
                   inside ? CreaseKind::Mountain : CreaseKind::Valley,
                   inside ? CreaseKind::Valley : CreaseKind::Mountain));
  rec.glue();
  return std::move(rec).finish();
}

}  // namespace origami
