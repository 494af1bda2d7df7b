#include "origami/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace origami {
namespace {

constexpr double kBoundaryTol = 1e-8;

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(p, a + d * t);
}

bool on_boundary(const Segment& s, const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n];
    if (point_segment_distance(s.a, a, b) <= kBoundaryTol &&
        point_segment_distance(s.b, a, b) <= kBoundaryTol) {
      return true;
    }
  }
  return false;
}

std::string id_text(FaceId id) { return std::to_string(id.value); }

}  // namespace

const char* to_string(Invariant inv) {
  switch (inv) {
    case Invariant::FaceTree: return "face-id tree";
    case Invariant::AreaConserved: return "area conservation";
    case Invariant::CreaseOnBoundary: return "creases on face boundaries";
    case Invariant::Overlap: return "superposed faces overlap";
    case Invariant::Acyclic: return "superposition acyclic";
    case Invariant::LayerOrder: return "layer order complete";
  }
  return "";
}

double total_area(const AbstractOrigami& ao) {
  double sum = 0.0;
  for (const auto& [id, f] : ao.faces) sum += area(f.paper);
  return sum;
}

std::vector<Violation> check_state(const AbstractOrigami& ao) {
  std::vector<Violation> out;
  for (const AdjacencyEdge& e : ao.adjacency) {
    if (!ao.has_face(e.a) || !ao.has_face(e.b)) {
      out.push_back({Invariant::CreaseOnBoundary, "adjacency " + id_text(e.a) + "-" + id_text(e.b) + " names a missing face"});
      continue;
    }
    const Segment s = ao.current_crease(e);
    if (!on_boundary(s, ao.face(e.a).polygon()) || !on_boundary(s, ao.face(e.b).polygon())) {
      out.push_back({Invariant::CreaseOnBoundary, "crease " + id_text(e.a) + "-" + id_text(e.b) + " is not on both boundaries"});
    }
  }
  for (const SuperpositionPair& p : ao.superposition) {
    if (p.upper == p.lower) {
      out.push_back({Invariant::Overlap, "face " + id_text(p.upper) + " lies over itself"});
      continue;
    }
    if (overlap_area(ao.face(p.upper).polygon(), ao.face(p.lower).polygon()) <= kEps) {
      out.push_back({Invariant::Overlap, "superposed faces " + id_text(p.upper) + " and " + id_text(p.lower) +
                    " do not overlap"});
    }
  }
  if (!check_superposition_acyclic(ao)) out.push_back({Invariant::Acyclic, "superposition relation has a cycle"});
  std::set<FaceId> ordered(ao.layer_order.begin(), ao.layer_order.end());
  if (ordered != ao.face_ids() || ordered.size() != ao.layer_order.size()) {
    out.push_back({Invariant::LayerOrder, "layer order does not list every face once"});
  }
  return out;
}

std::vector<Violation> check_trace(const ConstructionTrace& trace) {
  std::vector<Violation> out;
  const auto steps = trace.flattened();
  if (steps.empty()) return out;

  const double initial = total_area(steps.front()->snapshot);
  std::set<FaceId> seen;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const AbstractOrigami& ao = steps[k]->snapshot;
    const std::string where = "step " + std::to_string(k + 1) + " (" + steps[k]->label + "): ";
    for (Violation v : check_state(ao)) {
      v.message = where + v.message;
      out.push_back(std::move(v));
    }
    for (FaceId id : ao.face_ids()) {
      if (id.value > 1 && !seen.count(id.parent()) && !seen.count(id)) {
        out.push_back({Invariant::FaceTree, where + "face " + id_text(id) + " has no earlier parent"});
      }
    }
    for (FaceId id : ao.face_ids()) seen.insert(id);
    if (std::abs(total_area(ao) - initial) > kEps * static_cast<double>(k + 1)) {
      out.push_back({Invariant::AreaConserved, where + "total face area changed"});
    }
  }
  return out;
}

}  // namespace origami
