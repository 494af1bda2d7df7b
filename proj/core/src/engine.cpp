#include "origami/engine.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "origami/error.hpp"
#include "origami/rules.hpp"

namespace origami {
namespace {

enum class Placement { Left, Right, Crossed };

Placement classify(const Polygon& poly, const Ray& r) {
  bool left = false, right = false;
  for (const Point& p : poly.vertices) {
    const Side s = side(r, p);
    left |= s == Side::Left;
    right |= s == Side::Right;
  }
  if (left && right) return Placement::Crossed;
  return right ? Placement::Right : Placement::Left;
}

struct FoldPlan {
  Line line{1, 0, 0};
  int right_sign = 1;  // sign of Line::signed_distance on the ray's right
  std::set<FaceId> split;
  std::set<FaceId> moving;
};

bool on_line(const Line& l, const Segment& s) { return l.contains(s.a) && l.contains(s.b); }

// a clipped crease piece that only grazes the line within tolerance is dropped
bool significant(const std::optional<Segment>& piece, const Line& l, int sign) {
  if (!piece || piece->length() <= kMinPiece) return false;
  return std::max(sign * l.signed_distance(piece->a), sign * l.signed_distance(piece->b)) > kEps;
}

std::string face_name(FaceId id) { return std::to_string(id.value); }

FoldPlan plan_fold(const AbstractOrigami& ao, const FoldSpec& spec) {
  if (ao.posed) throw Error(ErrorKind::Posed, "fold is not allowed on a posed origami");
  if (!(spec.angle > 0.0) || spec.angle > kPi + 1e-12) {
    throw Error(ErrorKind::Precondition, "fold angle must lie in (0, pi]");
  }
  const Ray ray = Ray::make(spec.ray.origin, spec.ray.through);
  if (spec.insert_face && !ao.has_face(*spec.insert_face)) {
    throw Error(ErrorKind::NoSuchFace, "insert face " + face_name(*spec.insert_face) + " does not exist");
  }

  FoldPlan plan;
  plan.line = ray.line();
  plan.right_sign = dot(ray.direction(), plan.line.direction()) > 0 ? 1 : -1;

  std::deque<FaceId> work;
  if (spec.targets) {
    for (FaceId id : *spec.targets) {
      if (!ao.has_face(id)) {
        throw Error(ErrorKind::NoSuchFace, "target face " + face_name(id) + " does not exist");
      }
      work.push_back(id);
    }
  } else {
    for (const auto& [id, f] : ao.faces) work.push_back(id);
  }

  std::set<FaceId> seen;
  while (!work.empty()) {
    const FaceId id = work.front();
    work.pop_front();
    if (!seen.insert(id).second) continue;

    Placement where = classify(ao.face(id).polygon(), ray);
    if (where == Placement::Crossed) {
      // a sliver below tolerance on one side counts as uncrossed
      const SplitResult parts = split_polygon(ao.face(id).polygon(), ray);
      if (!parts.right) where = Placement::Left;
      else if (!parts.left) where = Placement::Right;
    }
    if (where == Placement::Left) continue;
    if (where == Placement::Crossed) {
      plan.split.insert(id);
      plan.moving.insert(id.moving_child());
    } else {
      plan.moving.insert(id);
    }

    for (const AdjacencyEdge& e : ao.adjacency) {
      if (e.a != id && e.b != id) continue;
      const FaceId other = e.a == id ? e.b : e.a;
      if (seen.count(other)) continue;
      const Segment crease = ao.current_crease(e);
      if (on_line(plan.line, crease)) continue;  // hinge
      if (where == Placement::Crossed) {
        if (!significant(clip_segment(crease, plan.line, plan.right_sign, 0.0), plan.line, plan.right_sign)) {
          continue;
        }
      }
      work.push_back(other);
    }
  }
  if (plan.moving.empty()) {
    throw Error(ErrorKind::EmptyMovingSet, "fold line leaves no face to move");
  }
  return plan;
}

std::vector<FaceId> expand_order(const std::vector<FaceId>& order, const std::set<FaceId>& split) {
  std::vector<FaceId> out;
  out.reserve(order.size() + split.size());
  for (FaceId id : order) {
    if (split.count(id)) {
      out.push_back(id.stationary_child());
      out.push_back(id.moving_child());
    } else {
      out.push_back(id);
    }
  }
  return out;
}

}  // namespace

std::set<FaceId> moving_set(const AbstractOrigami& ao, const FoldSpec& spec) {
  return plan_fold(ao, spec).moving;
}

AbstractOrigami fold(const AbstractOrigami& ao, const FoldSpec& spec) {
  const FoldPlan plan = plan_fold(ao, spec);
  const Ray ray{spec.ray.origin, spec.ray.through};
  const bool flat = spec.angle >= kPi - 1e-12;

  AbstractOrigami out = ao;
  out.last_fold.reset();
  out.adjacency.clear();

  FoldRecord record;
  record.line = plan.line;
  record.moved = plan.moving;
  record.prior_order = ao.layer_order;

  for (FaceId id : plan.split) {
    const Face& parent = ao.face(id);
    const Isometry to_paper = parent.placement.inverse();
    const SplitResult parts = split_polygon(parent.polygon(), ray);
    const FaceId low = id.stationary_child(), high = id.moving_child();
    out.faces.erase(id);
    out.faces.emplace(low, Face{low, cleanup(to_paper.apply(*parts.left)), parent.placement});
    out.faces.emplace(high, Face{high, cleanup(to_paper.apply(*parts.right)), parent.placement});
    if (!parts.seam) throw Error(ErrorKind::Degenerate, "split without a seam");
    out.adjacency.push_back(AdjacencyEdge::make(low, high, to_paper.apply(*parts.seam), spec.kind));
    record.splits.emplace(id, std::pair{low, high});
  }

  // existing creases follow the split of their faces
  for (const AdjacencyEdge& e : ao.adjacency) {
    const bool sa = plan.split.count(e.a) != 0, sb = plan.split.count(e.b) != 0;
    if (!sa && !sb) {
      out.adjacency.push_back(e);
      continue;
    }
    struct Part {
      FaceId id;
      int sign;  // 0: whole face
    };
    auto parts_of = [&](FaceId f, bool split) -> std::vector<Part> {
      if (!split) return {{f, 0}};
      return {{f.stationary_child(), -plan.right_sign}, {f.moving_child(), plan.right_sign}};
    };
    const Segment crease = ao.current_crease(e);
    const Isometry to_paper = ao.face(e.a).placement.inverse();
    for (const Part& pa : parts_of(e.a, sa)) {
      for (const Part& pb : parts_of(e.b, sb)) {
        std::optional<Segment> piece = crease;
        if (pa.sign && pb.sign && pa.sign != pb.sign) continue;  // opposite sides meet only on the line
        const int sign = pa.sign ? pa.sign : pb.sign;
        if (pa.sign) piece = clip_segment(*piece, plan.line, pa.sign, 0.0);
        if (piece && pb.sign) piece = clip_segment(*piece, plan.line, pb.sign, 0.0);
        if (sign ? !significant(piece, plan.line, sign) : (!piece || piece->length() <= kMinPiece)) continue;
        out.adjacency.push_back(AdjacencyEdge::make(pa.id, pb.id, to_paper.apply(*piece), e.kind));
      }
    }
  }

  for (const AdjacencyEdge& e : out.adjacency) {
    const bool ma = plan.moving.count(e.a) != 0, mb = plan.moving.count(e.b) != 0;
    if (ma != mb && !on_line(plan.line, out.current_crease(e))) {
      throw Error(ErrorKind::Tear, "fold would tear the crease between faces " +
                                       face_name(e.a) + " and " + face_name(e.b));
    }
  }

  std::vector<FaceId> order = expand_order(ao.layer_order, plan.split);
  if (flat) {
    const Isometry mirror = Isometry::reflection(plan.line);
    for (FaceId id : plan.moving) {
      Face& f = out.faces.at(id);
      f.placement = mirror * f.placement;
    }

    std::vector<FaceId> stationary, moved;
    for (FaceId id : order) (plan.moving.count(id) ? moved : stationary).push_back(id);
    std::reverse(moved.begin(), moved.end());

    auto at = spec.kind == CreaseKind::Valley ? stationary.end() : stationary.begin();
    if (spec.insert_face) {
      FaceId anchor = *spec.insert_face;
      if (plan.split.count(anchor)) anchor = anchor.stationary_child();
      if (plan.moving.count(anchor)) {
        throw Error(ErrorKind::Precondition, "insert face " + face_name(anchor) + " moves with the fold");
      }
      at = std::find(stationary.begin(), stationary.end(), anchor);
      if (spec.kind == CreaseKind::Valley) ++at;
    }
    stationary.insert(at, moved.begin(), moved.end());
    out.layer_order = std::move(stationary);
    out.last_fold = std::move(record);
  } else {
    out.layer_order = std::move(order);
    out.posed = true;
    out.posed_fold = PosedFold{plan.line, plan.moving, spec.angle, spec.kind};
  }

  out.sort_adjacency();
  out.refresh_superposition();
  if (!check_superposition_acyclic(out)) {
    throw Error(ErrorKind::Cycle, "fold produces a cyclic superposition relation");
  }
  return out;
}

AbstractOrigami unfold(const AbstractOrigami& ao) {
  if (ao.posed) throw Error(ErrorKind::Posed, "unfold is not allowed on a posed origami");
  if (!ao.last_fold) {
    throw Error(ErrorKind::NotUnfoldable, "the last step is not a flat fold");
  }
  const FoldRecord& record = *ao.last_fold;
  AbstractOrigami out = ao;
  const Isometry mirror = Isometry::reflection(record.line);
  for (FaceId id : record.moved) {
    Face& f = out.faces.at(id);
    f.placement = mirror * f.placement;
  }
  std::set<FaceId> split;
  for (const auto& [parent, children] : record.splits) split.insert(parent);
  out.layer_order = expand_order(record.prior_order, split);
  out.last_fold.reset();
  out.refresh_superposition();
  return out;
}

Ray bring_ray(Point p, Point q) {
  const Line l = rules::o2(p, q).front();
  const Point m = midpoint(p, q);
  const Ray r{m, m + l.direction()};
  return side(r, p) == Side::Right ? r : r.reversed();
}

AbstractOrigami fold_bring(const AbstractOrigami& ao, Point p, Point q, CreaseKind kind,
                           const std::optional<std::set<FaceId>>& targets) {
  FoldSpec spec;
  spec.kind = kind;
  spec.ray = bring_ray(p, q);
  spec.targets = targets;
  return fold(ao, spec);
}

}  // namespace origami
