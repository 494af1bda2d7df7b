#pragma once

// The abstract origami structure: faces, the adjacency relation, the
// superposition relation, the cut register and the construction trace.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

/// Face identifier. The root face is 1; splitting face n yields 2n and 2n+1.
struct FaceId {
  std::uint64_t value = 1;

  FaceId stationary_child() const;  // 2n
  FaceId moving_child() const;      // 2n + 1
  FaceId parent() const { return {value / 2}; }
  /// True when this id equals `ancestor` or descends from it.
  bool descends_from(FaceId ancestor) const;

  friend auto operator<=>(FaceId, FaceId) = default;
};

enum class CreaseKind { Mountain, Valley };

const char* to_string(CreaseKind k);

/// A face of the origami.
///
/// `paper` is the face's region in the coordinates of the unfolded sheet;
/// `placement` maps those coordinates to the current folded position.
struct Face {
  FaceId id;
  Polygon paper;
  Isometry placement;

  Polygon polygon() const { return placement.apply(paper); }
};

/// Unordered face pair joined by a crease. The crease is stored in sheet
/// coordinates, so both faces map it to the same place while the edge is
/// intact.
struct AdjacencyEdge {
  FaceId a;  // a < b
  FaceId b;
  Segment crease;
  CreaseKind kind = CreaseKind::Valley;

  static AdjacencyEdge make(FaceId x, FaceId y, Segment crease, CreaseKind kind);
  bool joins(FaceId x, FaceId y) const;
};

struct SuperpositionPair {
  FaceId upper;
  FaceId lower;

  friend auto operator<=>(const SuperpositionPair&, const SuperpositionPair&) = default;
};

/// Bookkeeping of the most recent flat fold; enough to undo it.
struct FoldRecord {
  Line line{1, 0, 0};
  std::set<FaceId> moved;
  std::map<FaceId, std::pair<FaceId, FaceId>> splits;  // parent -> (2n, 2n+1)
  std::vector<FaceId> prior_order;                      // bottom to top
};

/// A fold by an angle strictly less than pi; the origami is frozen after it.
struct PosedFold {
  Line line{1, 0, 0};
  std::set<FaceId> moved;
  double angle = kPi;
  CreaseKind kind = CreaseKind::Valley;
};

/// One snapshot of the abstract origami (Pi, adjacency, superposition).
///
/// Values are treated as immutable; engine operations return new snapshots.
/// `layer_order` is a bottom-to-top linear extension of the stacking, and
/// `superposition` holds its immediate covers among overlapping faces.
struct AbstractOrigami {
  std::map<FaceId, Face> faces;
  std::vector<AdjacencyEdge> adjacency;
  std::vector<SuperpositionPair> superposition;
  std::vector<AdjacencyEdge> cut_register;
  std::vector<FaceId> layer_order;
  bool posed = false;
  std::optional<PosedFold> posed_fold;
  std::optional<FoldRecord> last_fold;

  const Face& face(FaceId id) const;
  bool has_face(FaceId id) const { return faces.count(id) != 0; }
  std::set<FaceId> face_ids() const;
  /// Crease of the edge in current coordinates (as seen from face a).
  Segment current_crease(const AdjacencyEdge& e) const;
  /// Fold angle of an intact crease; pi unless posed by a partial fold.
  double crease_angle(const AdjacencyEdge& e) const;

  /// Recomputes `superposition` from `layer_order` and the face polygons.
  void refresh_superposition();
  /// Keeps adjacency sorted by (a, b) so dumps are deterministic.
  void sort_adjacency();
};

/// Builds the initial origami ({1}, {}, {}). With no coordinates the sheet is
/// the unit square A(0,0) B(1,0) C(1,1) D(0,1). Throws Error{Degenerate} for
/// coordinates that are not a convex counter-clockwise quadrilateral.
AbstractOrigami init_square(const std::optional<std::array<Point, 4>>& coords = std::nullopt);
AbstractOrigami init_polygon(const Polygon& sheet);

struct Graph {
  bool directed = false;
  std::set<FaceId> nodes;
  std::set<std::pair<FaceId, FaceId>> edges;  // (min,max) when undirected

  friend bool operator==(const Graph&, const Graph&) = default;
};

Graph adjacency_graph(const AbstractOrigami& ao);
Graph superposition_graph(const AbstractOrigami& ao);
/// Labeled equality: same node set and same edge set.
bool graph_equal(const Graph& g1, const Graph& g2);
bool has_cycle(const Graph& g);
bool check_superposition_acyclic(const AbstractOrigami& ao);

/// Moves the edge between the two faces from the adjacency relation to the
/// cut register.
AbstractOrigami cut_edge(const AbstractOrigami& ao, FaceId below, FaceId above);
/// Re-inserts every registered edge after checking that the two separated
/// boundaries coincide again; the crease is redistributed over the faces that
/// now carry it.
AbstractOrigami glue_edges(const AbstractOrigami& ao);

struct TraceStep {
  std::string label;
  AbstractOrigami snapshot;
  /// Decomposition of a composite step into basic operations.
  std::vector<TraceStep> substeps;
};

/// The construction sequence O1 -> O2 -> ... -> On.
struct ConstructionTrace {
  std::vector<TraceStep> steps;

  const AbstractOrigami& current() const { return steps.back().snapshot; }
  /// Steps with composite operations expanded into their decomposition.
  std::vector<const TraceStep*> flattened() const;
};

/// JSON dump with stable key order and 12 significant digits.
std::string to_json(const AbstractOrigami& ao);

/// Number formatting shared by every text exporter (12 significant digits,
/// no negative zero).
std::string format_number(double v);

}  // namespace origami
