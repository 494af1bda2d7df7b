#pragma once

// The .ori construction language.
//
// One statement per line, `#` starts a comment. Points are named in the
// plane of the folded state; `image(P)` is P reflected across the most
// recent fold line. After every flat `fold` statement each named point P
// carried by the moving faces also gets its image under the name P' (more
// ticks are added while the name is taken).
//
//   paper square A B C D [at (x,y) (x,y) (x,y) (x,y)]
//   point N = (x,y) | midpoint(P,Q) | intersect(L1,L2) | image(P)
//   line N via O1(..) .. O7(..) [pick k]
//   fold valley|mountain [faces {n,..}] along RAY [angle EXPR] [insert n]
//   fold bring P to Q [valley|mountain] [faces {n,..}]
//   cut {a,b} | glue | unfold
//   squash {a,b} bottom RAY ridge RAY
//   inside_reverse {a,b} along RAY | outside_reverse {a,b} along RAY
//   rabbit_ear {a,b} ridge RAY base RAY hyp RAY
//   pleat [faces {n,..}] first RAY second RAY
//   pleat_crimp {a,b} first RAY second RAY outside|inside
//   assert faces {n,..} | assert adjacency_preserved_since k
//
//   RAY  = ray(P,Q) | line(L) | rev(RAY)
//   EXPR = number or pi combined with * and /

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "origami/error.hpp"
#include "origami/origami.hpp"

namespace origami::script {

struct Location {
  int line = 1;
  int column = 1;

  friend bool operator==(const Location&, const Location&) = default;
};

/// A diagnostic tied to a place in the script text. Engine failures keep
/// their original kind.
class ScriptError : public Error {
 public:
  ScriptError(Location loc, const std::string& message, ErrorKind kind = ErrorKind::Script);
  Location location() const { return loc_; }
  const std::string& message() const { return message_; }

 private:
  Location loc_;
  std::string message_;
};

struct RayExpr {
  bool from_line = false;  // line(L) instead of ray(P,Q)
  std::string first;
  std::string second;
  bool reversed = false;

  friend bool operator==(const RayExpr&, const RayExpr&) = default;
};

struct AngleExpr {
  std::string text;
  double value = 0.0;

  friend bool operator==(const AngleExpr&, const AngleExpr&) = default;
};

using FaceList = std::vector<std::uint64_t>;

struct PaperDecl {
  std::array<std::string, 4> names;
  std::optional<std::array<Point, 4>> coords;

  friend bool operator==(const PaperDecl&, const PaperDecl&) = default;
};

struct PointDef {
  enum class Kind { Literal, Midpoint, Intersect, Image };
  std::string name;
  Kind kind = Kind::Literal;
  Point literal;
  std::vector<std::string> args;

  friend bool operator==(const PointDef&, const PointDef&) = default;
};

struct LineDef {
  std::string name;
  int rule = 1;  // 1..7
  std::vector<std::string> args;
  std::optional<int> pick;  // 1-based

  friend bool operator==(const LineDef&, const LineDef&) = default;
};

struct FoldStmt {
  CreaseKind kind = CreaseKind::Valley;
  std::optional<FaceList> faces;
  RayExpr ray;
  std::optional<AngleExpr> angle;
  std::optional<std::uint64_t> insert;

  friend bool operator==(const FoldStmt&, const FoldStmt&) = default;
};

struct BringStmt {
  std::string from;
  std::string to;
  CreaseKind kind = CreaseKind::Valley;
  std::optional<FaceList> faces;

  friend bool operator==(const BringStmt&, const BringStmt&) = default;
};

struct CutStmt {
  std::uint64_t below = 0;
  std::uint64_t above = 0;

  friend bool operator==(const CutStmt&, const CutStmt&) = default;
};

struct GlueStmt {
  friend bool operator==(const GlueStmt&, const GlueStmt&) = default;
};

struct UnfoldStmt {
  friend bool operator==(const UnfoldStmt&, const UnfoldStmt&) = default;
};

struct CompositeStmt {
  enum class Op { Squash, InsideReverse, OutsideReverse, RabbitEar, Pleat, PleatCrimp };
  Op op = Op::Squash;
  std::optional<std::array<std::uint64_t, 2>> pair;
  std::optional<FaceList> faces;  // pleat only
  std::vector<RayExpr> rays;
  bool inside = false;  // pleat_crimp only

  friend bool operator==(const CompositeStmt&, const CompositeStmt&) = default;
};

struct AssertStmt {
  enum class Kind { Faces, AdjacencyPreservedSince };
  Kind kind = Kind::Faces;
  FaceList faces;
  int step = 0;

  friend bool operator==(const AssertStmt&, const AssertStmt&) = default;
};

using StatementBody = std::variant<PaperDecl, PointDef, LineDef, FoldStmt, BringStmt, CutStmt,
                                   GlueStmt, UnfoldStmt, CompositeStmt, AssertStmt>;

struct Statement {
  Location loc;
  StatementBody body;

  /// Locations are not part of statement identity.
  friend bool operator==(const Statement& x, const Statement& y) { return x.body == y.body; }
};

struct Script {
  std::vector<Statement> statements;

  friend bool operator==(const Script&, const Script&) = default;
};

/// Throws ScriptError with a 1-based location.
Script parse(std::string_view text);

/// Canonical text of a statement; parsing it gives the statement back.
std::string to_text(const Statement& s);
std::string to_text(const Script& s);

/// Executes the script. Statements that change the origami (paper, folds,
/// cut, glue, unfold, composites) append one trace step labeled with the
/// statement text; composite steps carry their decomposition as substeps.
/// Definitions and assertions append nothing.
ConstructionTrace run(const Script& script);

}  // namespace origami::script
