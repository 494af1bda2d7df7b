#include "origami/render.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "origami/error.hpp"

namespace origami {
namespace {

std::string num(double v) { return format_number(v); }

// SVG has y pointing down; paper coordinates have it pointing up.
std::string svg_point(Point p) { return num(p.x) + "," + num(-p.y); }

struct DrawKey {
  int depth;
  FaceId id;
  friend auto operator<=>(const DrawKey&, const DrawKey&) = default;
};

}  // namespace

std::map<FaceId, int> layer_depths(const AbstractOrigami& ao) {
  if (!check_superposition_acyclic(ao)) {
    throw Error(ErrorKind::Cycle, "superposition graph has a cycle");
  }
  std::map<FaceId, std::vector<FaceId>> lower;
  for (const SuperpositionPair& p : ao.superposition) lower[p.upper].push_back(p.lower);
  std::map<FaceId, int> depth;
  std::function<int(FaceId)> visit = [&](FaceId id) {
    if (const auto it = depth.find(id); it != depth.end()) return it->second;
    int d = 0;
    for (FaceId below : lower[id]) d = std::max(d, visit(below) + 1);
    depth[id] = d;
    return d;
  };
  for (FaceId id : ao.face_ids()) visit(id);
  return depth;
}

std::string to_svg(const AbstractOrigami& ao) {
  double min_x = std::numeric_limits<double>::infinity(), min_y = min_x;
  double max_x = -min_x, max_y = -min_x;
  std::map<FaceId, Polygon> polys;
  for (const auto& [id, f] : ao.faces) {
    polys[id] = f.polygon();
    for (const Point& p : polys[id].vertices) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, -p.y);
      max_y = std::max(max_y, -p.y);
    }
  }
  const double w = max_x - min_x, h = max_y - min_y;
  const double pad_x = 0.05 * (w > 0 ? w : 1.0), pad_y = 0.05 * (h > 0 ? h : 1.0);
  const double stroke = 0.004 * std::max({w, h, 1e-6});

  const std::map<FaceId, int> depth = layer_depths(ao);
  std::vector<DrawKey> order;
  for (const auto& [id, d] : depth) order.push_back({d, id});
  std::sort(order.begin(), order.end());
  std::map<FaceId, DrawKey> key_of;
  for (const DrawKey& k : order) key_of[k.id] = k;

  // a crease is drawn with the later of its two faces
  std::map<FaceId, std::vector<const AdjacencyEdge*>> creases;
  for (const AdjacencyEdge& e : ao.adjacency) {
    creases[std::max(key_of[e.a], key_of[e.b]).id].push_back(&e);
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
     << num(min_x - pad_x) << " " << num(min_y - pad_y) << " " << num(w + 2 * pad_x) << " "
     << num(h + 2 * pad_y) << "\">\n";
  for (const DrawKey& k : order) {
    os << "  <polygon id=\"face-" << k.id.value << "\" points=\"";
    const Polygon& poly = polys[k.id];
    for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << svg_point(poly[i]);
    os << "\" fill=\"#f6efe1\" stroke=\"#333333\" stroke-width=\"" << num(stroke) << "\"/>\n";
    for (const AdjacencyEdge* e : creases[k.id]) {
      const Segment s = ao.current_crease(*e);
      os << "  <line class=\"" << to_string(e->kind) << "\" x1=\"" << num(s.a.x) << "\" y1=\""
         << num(-s.a.y) << "\" x2=\"" << num(s.b.x) << "\" y2=\"" << num(-s.b.y)
         << "\" stroke=\"#1f4e9c\" stroke-width=\"" << num(stroke);
      if (e->kind == CreaseKind::Valley) {
        os << "\" stroke-dasharray=\"" << num(4 * stroke) << " " << num(3 * stroke);
      }
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string to_dot(const Graph& g, GraphKind kind) {
  const bool directed = kind == GraphKind::Superposition;
  std::ostringstream os;
  os << (directed ? "digraph superposition {\n" : "graph adjacency {\n");
  for (FaceId id : g.nodes) os << "  " << id.value << ";\n";
  for (const auto& [u, v] : g.edges) {
    os << "  " << u.value << (directed ? " -> " : " -- ") << v.value << ";\n";
  }
  os << "}\n";
  return os.str();
}

const PosedFace& Pose3D::face(FaceId id) const {
  const auto it = std::find_if(faces.begin(), faces.end(),
                               [&](const PosedFace& f) { return f.id == id; });
  if (it == faces.end()) throw Error(ErrorKind::NoSuchFace, "no face " + std::to_string(id.value));
  return *it;
}

Pose3D pose3d(const AbstractOrigami& ao, double gap) {
  if (!(gap > 0.0)) throw Error(ErrorKind::Precondition, "layer gap must be positive");
  const std::map<FaceId, int> depth = layer_depths(ao);
  Pose3D pose;
  pose.gap = gap;
  for (const auto& [id, f] : ao.faces) {
    PosedFace pf{id, {}};
    const double z = depth.at(id) * gap;
    for (const Point& p : f.polygon().vertices) pf.vertices.push_back({p.x, p.y, z});
    pose.faces.push_back(std::move(pf));
  }
  if (!ao.posed_fold) return pose;

  const PosedFold& pf = *ao.posed_fold;
  const Line& l = pf.line;
  // unit normal pointing into the moved side
  double side_sign = 1.0;
  for (FaceId id : pf.moved) {
    double s = 0.0;
    for (const Point& p : ao.face(id).polygon().vertices) s += l.signed_distance(p);
    side_sign = s < 0 ? -1.0 : 1.0;
    break;
  }
  const Point n = side_sign * l.normal();
  const double phi = kPi - pf.angle;
  const double up = pf.kind == CreaseKind::Valley ? 1.0 : -1.0;

  double axis_z = 0.0;
  for (const AdjacencyEdge& e : ao.adjacency) {
    const bool ma = pf.moved.count(e.a) != 0, mb = pf.moved.count(e.b) != 0;
    if (ma != mb) {
      axis_z = depth.at(ma ? e.b : e.a) * gap;
      break;
    }
  }

  for (PosedFace& face : pose.faces) {
    if (!pf.moved.count(face.id)) continue;
    for (Point3& v : face.vertices) {
      const Point p{v.x, v.y};
      const double s = side_sign * l.signed_distance(p);
      const Point foot = p - s * n;
      const double offset = v.z - axis_z;
      const Point in_plane = foot + (s * std::cos(phi) - offset * up * std::sin(phi)) * n;
      v = {in_plane.x, in_plane.y, axis_z + up * s * std::sin(phi) + offset * std::cos(phi)};
    }
  }
  return pose;
}

std::string export_3d(const Pose3D& pose) {
  std::ostringstream os;
  os << "{\"faces\": [";
  for (std::size_t i = 0; i < pose.faces.size(); ++i) {
    const PosedFace& f = pose.faces[i];
    os << (i ? ",\n  " : "\n  ") << "{\"id\": " << f.id.value << ", \"vertices3d\": [";
    for (std::size_t j = 0; j < f.vertices.size(); ++j) {
      const Point3& v = f.vertices[j];
      os << (j ? ", " : "") << "[" << num(v.x) << ", " << num(v.y) << ", " << num(v.z) << "]";
    }
    os << "]}";
  }
  os << "\n]}\n";
  return os.str();
}

namespace {

Point3 sub(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Point3 add(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Point3 scale(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot3(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Affine image of a planar point under the face's 2D -> 3D vertex map.
Point3 lift(const Polygon& poly, const PosedFace& face, Point p) {
  const Point e1 = poly[1] - poly[0], e2 = poly[2] - poly[0], r = p - poly[0];
  const double det = cross(e1, e2);
  const double alpha = cross(r, e2) / det, beta = cross(e1, r) / det;
  const Point3 v0 = face.vertices[0];
  return add(v0, add(scale(alpha, sub(face.vertices[1], v0)), scale(beta, sub(face.vertices[2], v0))));
}

// Unit vector from the crease line into the face, perpendicular to the crease.
Point3 inward(const Polygon& poly, const PosedFace& face, const Segment& crease) {
  const Point3 a = lift(poly, face, crease.a), b = lift(poly, face, crease.b);
  Point3 c{0, 0, 0};
  for (const Point3& v : face.vertices) c = add(c, v);
  c = scale(1.0 / static_cast<double>(face.vertices.size()), c);
  const Point3 d = sub(b, a);
  const Point3 r = sub(c, a);
  const Point3 perp = sub(r, scale(dot3(r, d) / dot3(d, d), d));
  return scale(1.0 / std::sqrt(dot3(perp, perp)), perp);
}

}  // namespace

double dihedral(const AbstractOrigami& ao, const Pose3D& pose, FaceId a, FaceId b) {
  const auto it = std::find_if(ao.adjacency.begin(), ao.adjacency.end(),
                               [&](const AdjacencyEdge& e) { return e.joins(a, b); });
  if (it == ao.adjacency.end()) {
    throw Error(ErrorKind::NoSuchEdge, "faces " + std::to_string(a.value) + " and " +
                                           std::to_string(b.value) + " share no crease");
  }
  const Segment crease = ao.current_crease(*it);
  const Point3 u = inward(ao.face(a).polygon(), pose.face(a), crease);
  const Point3 v = inward(ao.face(b).polygon(), pose.face(b), crease);
  return std::acos(std::clamp(dot3(u, v), -1.0, 1.0));
}

}  // namespace origami
