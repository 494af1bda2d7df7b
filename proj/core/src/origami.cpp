#include "origami/origami.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

FaceId FaceId::stationary_child() const {
  if (value > std::numeric_limits<std::uint64_t>::max() / 2 - 1) {
    throw Error(ErrorKind::Precondition, "face id overflow");
  }
  return {value * 2};
}

FaceId FaceId::moving_child() const { return {stationary_child().value + 1}; }

bool FaceId::descends_from(FaceId ancestor) const {
  std::uint64_t v = value;
  while (v > ancestor.value) v /= 2;
  return v == ancestor.value;
}

const char* to_string(CreaseKind k) {
  return k == CreaseKind::Valley ? "valley" : "mountain";
}

AdjacencyEdge AdjacencyEdge::make(FaceId x, FaceId y, Segment crease, CreaseKind kind) {
  if (x == y) throw Error(ErrorKind::Precondition, "adjacency edge needs two faces");
  if (y < x) std::swap(x, y);
  return {x, y, crease, kind};
}

bool AdjacencyEdge::joins(FaceId x, FaceId y) const {
  return (a == x && b == y) || (a == y && b == x);
}

const Face& AbstractOrigami::face(FaceId id) const {
  const auto it = faces.find(id);
  if (it == faces.end()) {
    throw Error(ErrorKind::NoSuchFace, "no face " + std::to_string(id.value));
  }
  return it->second;
}

std::set<FaceId> AbstractOrigami::face_ids() const {
  std::set<FaceId> ids;
  for (const auto& [id, f] : faces) ids.insert(id);
  return ids;
}

Segment AbstractOrigami::current_crease(const AdjacencyEdge& e) const {
  return face(e.a).placement.apply(e.crease);
}

double AbstractOrigami::crease_angle(const AdjacencyEdge& e) const {
  if (!posed_fold) return kPi;
  const bool ma = posed_fold->moved.count(e.a) != 0;
  const bool mb = posed_fold->moved.count(e.b) != 0;
  if (ma == mb) return kPi;
  return posed_fold->angle;
}

void AbstractOrigami::refresh_superposition() {
  superposition.clear();
  const std::size_t n = layer_order.size();
  std::vector<Polygon> polys;
  polys.reserve(n);
  for (FaceId id : layer_order) polys.push_back(face(id).polygon());

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::vector<Point> common = convex_intersection(polys[i], polys[j]);
      if (common.size() < 3) continue;
      const Polygon region = cleanup(Polygon{common});
      if (region.size() < 3 || area(region) <= kEps) continue;
      bool covered = true;
      for (std::size_t m = i + 1; m < j && covered; ++m) {
        if (overlap_area(region, polys[m]) > kEps) covered = false;
      }
      if (covered) superposition.push_back({layer_order[j], layer_order[i]});
    }
  }
  std::sort(superposition.begin(), superposition.end());
}

void AbstractOrigami::sort_adjacency() {
  std::sort(adjacency.begin(), adjacency.end(),
            [](const AdjacencyEdge& x, const AdjacencyEdge& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
}

AbstractOrigami init_polygon(const Polygon& sheet) {
  validate_polygon(sheet);
  if (!is_convex(sheet)) {
    throw Error(ErrorKind::Degenerate, "paper must be convex");
  }
  AbstractOrigami ao;
  const FaceId root{1};
  ao.faces.emplace(root, Face{root, sheet, Isometry{}});
  ao.layer_order = {root};
  return ao;
}

AbstractOrigami init_square(const std::optional<std::array<Point, 4>>& coords) {
  const std::array<Point, 4> pts =
      coords.value_or(std::array<Point, 4>{Point{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  return init_polygon(Polygon{{pts.begin(), pts.end()}});
}

Graph adjacency_graph(const AbstractOrigami& ao) {
  Graph g;
  g.nodes = ao.face_ids();
  for (const AdjacencyEdge& e : ao.adjacency) g.edges.insert({e.a, e.b});
  return g;
}

Graph superposition_graph(const AbstractOrigami& ao) {
  Graph g;
  g.directed = true;
  g.nodes = ao.face_ids();
  for (const SuperpositionPair& p : ao.superposition) g.edges.insert({p.upper, p.lower});
  return g;
}

bool graph_equal(const Graph& g1, const Graph& g2) { return g1 == g2; }

bool has_cycle(const Graph& g) {
  if (!g.directed) return false;
  std::map<FaceId, std::vector<FaceId>> out;
  for (const auto& [u, v] : g.edges) out[u].push_back(v);
  enum class Mark { White, Grey, Black };
  std::map<FaceId, Mark> mark;
  std::function<bool(FaceId)> visit = [&](FaceId u) {
    mark[u] = Mark::Grey;
    for (FaceId v : out[u]) {
      const Mark m = mark.count(v) ? mark[v] : Mark::White;
      if (m == Mark::Grey) return true;
      if (m == Mark::White && visit(v)) return true;
    }
    mark[u] = Mark::Black;
    return false;
  };
  std::set<FaceId> all = g.nodes;
  for (const auto& [u, v] : g.edges) {
    all.insert(u);
    all.insert(v);
  }
  for (FaceId u : all) {
    if ((!mark.count(u) || mark[u] == Mark::White) && visit(u)) return true;
  }
  return false;
}

bool check_superposition_acyclic(const AbstractOrigami& ao) {
  return !has_cycle(superposition_graph(ao));
}

namespace {

void require_flat(const AbstractOrigami& ao, const char* op) {
  if (ao.posed) {
    throw Error(ErrorKind::Posed, std::string(op) + " is not allowed on a posed origami");
  }
}

std::string pair_name(FaceId a, FaceId b) {
  return "{" + std::to_string(a.value) + "," + std::to_string(b.value) + "}";
}

}  // namespace

AbstractOrigami cut_edge(const AbstractOrigami& ao, FaceId below, FaceId above) {
  require_flat(ao, "cut");
  for (const AdjacencyEdge& e : ao.cut_register) {
    if (e.joins(below, above)) {
      throw Error(ErrorKind::AlreadyCut, "edge " + pair_name(below, above) + " is already cut");
    }
  }
  const auto it = std::find_if(ao.adjacency.begin(), ao.adjacency.end(),
                               [&](const AdjacencyEdge& e) { return e.joins(below, above); });
  if (it == ao.adjacency.end()) {
    throw Error(ErrorKind::NoSuchEdge, "faces " + pair_name(below, above) + " are not adjacent");
  }
  AbstractOrigami out = ao;
  out.cut_register.push_back(*it);
  out.adjacency.erase(out.adjacency.begin() + (it - ao.adjacency.begin()));
  out.last_fold.reset();
  return out;
}

AbstractOrigami glue_edges(const AbstractOrigami& ao) {
  require_flat(ao, "glue");
  AbstractOrigami out = ao;
  out.last_fold.reset();
  if (ao.cut_register.empty()) return out;

  // process in LIFO order
  for (auto rit = ao.cut_register.rbegin(); rit != ao.cut_register.rend(); ++rit) {
    const AdjacencyEdge& cut = *rit;
    std::vector<FaceId> side_a, side_b;
    for (const auto& [id, f] : ao.faces) {
      if (id.descends_from(cut.a)) side_a.push_back(id);
      if (id.descends_from(cut.b)) side_b.push_back(id);
    }
    double covered = 0.0;
    for (FaceId da : side_a) {
      const Face& fa = ao.face(da);
      const auto in_a = clip_segment(cut.crease, fa.paper);
      if (!in_a || in_a->length() <= kMinPiece) continue;
      for (FaceId db : side_b) {
        const Face& fb = ao.face(db);
        const auto piece = clip_segment(*in_a, fb.paper);
        if (!piece || piece->length() <= kMinPiece) continue;
        const Segment pa = fa.placement.apply(*piece);
        const Segment pb = fb.placement.apply(*piece);
        if (!near(pa.a, pb.a) || !near(pa.b, pb.b)) {
          throw Error(ErrorKind::GlueMismatch,
                      "cannot glue " + pair_name(da, db) +
                          ": separated boundaries do not coincide");
        }
        covered += piece->length();
        const bool exists =
            std::any_of(out.adjacency.begin(), out.adjacency.end(),
                        [&](const AdjacencyEdge& e) { return e.joins(da, db); });
        if (!exists) out.adjacency.push_back(AdjacencyEdge::make(da, db, *piece, cut.kind));
      }
    }
    if (std::abs(covered - cut.crease.length()) > 1e-7) {
      throw Error(ErrorKind::GlueMismatch,
                  "cannot glue " + pair_name(cut.a, cut.b) + ": crease no longer shared");
    }
  }
  out.cut_register.clear();
  out.sort_adjacency();
  return out;
}

std::vector<const TraceStep*> ConstructionTrace::flattened() const {
  std::vector<const TraceStep*> out;
  for (const TraceStep& s : steps) {
    if (s.substeps.empty()) {
      out.push_back(&s);
    } else {
      for (const TraceStep& sub : s.substeps) out.push_back(&sub);
    }
  }
  return out;
}

std::string format_number(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

namespace {

void write_edge_list(std::ostringstream& os, const std::vector<AdjacencyEdge>& edges) {
  os << "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ", ";
    os << "[" << edges[i].a.value << ", " << edges[i].b.value << ", \""
       << to_string(edges[i].kind) << "\"]";
  }
  os << "]";
}

}  // namespace

std::string to_json(const AbstractOrigami& ao) {
  std::ostringstream os;
  os << "{\n  \"faces\": [";
  bool first = true;
  for (const auto& [id, f] : ao.faces) {
    os << (first ? "\n" : ",\n") << "    {\"id\": " << id.value << ", \"polygon\": [";
    first = false;
    const Polygon poly = f.polygon();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) os << ", ";
      os << "[" << format_number(poly[i].x) << ", " << format_number(poly[i].y) << "]";
    }
    os << "]}";
  }
  os << "\n  ],\n  \"adjacency\": ";
  write_edge_list(os, ao.adjacency);
  os << ",\n  \"superposition\": [";
  for (std::size_t i = 0; i < ao.superposition.size(); ++i) {
    if (i) os << ", ";
    os << "[" << ao.superposition[i].upper.value << ", " << ao.superposition[i].lower.value
       << "]";
  }
  os << "],\n  \"cut_register\": ";
  write_edge_list(os, ao.cut_register);
  os << ",\n  \"posed\": " << (ao.posed ? "true" : "false") << "\n}\n";
  return os.str();
}

}  // namespace origami
