#include <map>

#include "origami/classics.hpp"
#include "origami/engine.hpp"
#include "origami/rules.hpp"
#include "origami/script.hpp"

namespace origami::script {
namespace {

bool inside(const Polygon& poly, Point p) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n];
    if (cross(b - a, p - a) < -kEps * norm(b - a)) return false;
  }
  return true;
}

std::set<FaceId> to_ids(const FaceList& list) {
  std::set<FaceId> out;
  for (std::uint64_t v : list) out.insert(FaceId{v});
  return out;
}

std::string faces_text(const std::set<FaceId>& ids) {
  std::string s = "{";
  bool first = true;
  for (FaceId id : ids) {
    s += (first ? "" : ",") + std::to_string(id.value);
    first = false;
  }
  return s + "}";
}

class Interpreter {
 public:
  ConstructionTrace run(const Script& script) {
    for (const Statement& st : script.statements) {
      loc_ = st.loc;
      try {
        std::visit([&](const auto& body) { exec(st, body); }, st.body);
      } catch (const ScriptError&) {
        throw;
      } catch (const Error& e) {
        throw ScriptError(loc_, e.what(), e.kind());
      }
    }
    return std::move(trace_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ScriptError(loc_, msg); }

  const AbstractOrigami& current() const { return trace_.current(); }

  void push(const Statement& st, AbstractOrigami ao, std::vector<TraceStep> substeps = {}) {
    trace_.steps.push_back({to_text(st), std::move(ao), std::move(substeps)});
  }

  Point point(const std::string& name) const {
    const auto it = points_.find(name);
    if (it == points_.end()) fail("unknown point '" + name + "'");
    return it->second;
  }

  Line line(const std::string& name) const {
    const auto it = lines_.find(name);
    if (it == lines_.end()) fail("unknown line '" + name + "'");
    return it->second;
  }

  void define(const std::string& name, Point p) {
    if (points_.count(name) || lines_.count(name)) fail("name '" + name + "' is already defined");
    points_.emplace(name, p);
    point_order_.push_back(name);
  }

  Ray ray(const RayExpr& r) const {
    Ray out;
    if (r.from_line) {
      const Line l = line(r.first);
      out = Ray{l.anchor(), l.anchor() + l.direction()};
    } else {
      out = Ray::make(point(r.first), point(r.second));
    }
    return r.reversed ? out.reversed() : out;
  }

  void exec(const Statement& st, const PaperDecl& d) {
    for (const std::string& n : d.names) define(n, {});
    const std::array<Point, 4> pts =
        d.coords.value_or(std::array<Point, 4>{Point{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    for (std::size_t i = 0; i < 4; ++i) points_[d.names[i]] = pts[i];
    push(st, init_square(pts));
  }

  void exec(const Statement&, const PointDef& d) {
    Point p;
    switch (d.kind) {
      case PointDef::Kind::Literal:
        p = d.literal;
        break;
      case PointDef::Kind::Midpoint:
        p = midpoint(point(d.args[0]), point(d.args[1]));
        break;
      case PointDef::Kind::Intersect: {
        const auto x = intersect(line(d.args[0]), line(d.args[1]));
        if (!x) fail("lines " + d.args[0] + " and " + d.args[1] + " do not intersect");
        p = *x;
        break;
      }
      case PointDef::Kind::Image:
        if (!last_line_) fail("image() needs a preceding fold");
        p = reflect(point(d.args[0]), *last_line_);
        break;
    }
    define(d.name, p);
  }

  void exec(const Statement&, const LineDef& d) {
    auto P = [&](std::size_t i) { return point(d.args[i]); };
    auto L = [&](std::size_t i) { return line(d.args[i]); };
    std::vector<Line> sols;
    switch (d.rule) {
      case 1: sols = rules::o1(P(0), P(1)); break;
      case 2: sols = rules::o2(P(0), P(1)); break;
      case 3: sols = rules::o3(L(0), L(1)); break;
      case 4: sols = rules::o4(P(0), L(1)); break;
      case 5: sols = rules::o5(P(0), L(1), P(2)); break;
      case 6: sols = rules::o6(P(0), L(1), P(2), L(3)); break;
      case 7: sols = rules::o7(P(0), L(1), L(2)); break;
    }
    const std::string rule = "O" + std::to_string(d.rule);
    if (sols.empty()) fail(rule + " has no solution");
    std::size_t index = 0;
    if (d.pick) {
      if (static_cast<std::size_t>(*d.pick) > sols.size()) {
        fail("pick " + std::to_string(*d.pick) + " but " + rule + " has " +
             std::to_string(sols.size()) + " solution(s)");
      }
      index = static_cast<std::size_t>(*d.pick) - 1;
    } else if (sols.size() > 1) {
      fail(rule + " has " + std::to_string(sols.size()) + " solutions; choose one with pick k");
    }
    if (points_.count(d.name) || lines_.count(d.name)) fail("name '" + d.name + "' is already defined");
    lines_.emplace(d.name, sols[index]);
  }

  void after_flat_fold(const Ray& r) {
    const AbstractOrigami& ao = current();
    if (!ao.last_fold) return;
    const Line l = ao.last_fold->line;
    last_line_ = l;
    const std::vector<std::string> names = point_order_;
    for (const std::string& n : names) {
      const Point p = points_.at(n);
      if (side(r, p) != Side::Right) continue;
      const Point img = reflect(p, l);
      bool carried = false;
      for (FaceId id : ao.last_fold->moved) carried |= inside(ao.face(id).polygon(), img);
      if (!carried) continue;
      std::string fresh = n + "'";
      while (points_.count(fresh) || lines_.count(fresh)) fresh += "'";
      define(fresh, img);
    }
  }

  void exec(const Statement& st, const FoldStmt& f) {
    FoldSpec spec;
    spec.kind = f.kind;
    spec.ray = ray(f.ray);
    if (f.faces) spec.targets = to_ids(*f.faces);
    if (f.angle) spec.angle = f.angle->value;
    if (f.insert) spec.insert_face = FaceId{*f.insert};
    push(st, fold(current(), spec));
    after_flat_fold(spec.ray);
  }

  void exec(const Statement& st, const BringStmt& b) {
    const Point p = point(b.from), q = point(b.to);
    if (near(p, q)) fail("cannot bring a point onto itself");
    std::optional<std::set<FaceId>> targets;
    if (b.faces) targets = to_ids(*b.faces);
    push(st, fold_bring(current(), p, q, b.kind, targets));
    after_flat_fold(bring_ray(p, q));
  }

  void exec(const Statement& st, const CutStmt& c) {
    push(st, cut_edge(current(), FaceId{c.below}, FaceId{c.above}));
  }

  void exec(const Statement& st, const GlueStmt&) { push(st, glue_edges(current())); }

  void exec(const Statement& st, const UnfoldStmt&) {
    if (current().last_fold) last_line_ = current().last_fold->line;
    push(st, unfold(current()));
  }

  void exec(const Statement& st, const CompositeStmt& c) {
    using Op = CompositeStmt::Op;
    std::vector<Ray> rays;
    for (const RayExpr& r : c.rays) rays.push_back(ray(r));
    LayerPair pair{};
    if (c.pair) pair = {FaceId{(*c.pair)[0]}, FaceId{(*c.pair)[1]}};
    CompositeResult res;
    switch (c.op) {
      case Op::Squash: res = squash_fold(current(), pair, rays[0], rays[1]); break;
      case Op::InsideReverse: res = inside_reverse_fold(current(), pair, rays[0]); break;
      case Op::OutsideReverse: res = outside_reverse_fold(current(), pair, rays[0]); break;
      case Op::RabbitEar: res = rabbit_ear_fold(current(), pair, rays[0], rays[1], rays[2]); break;
      case Op::Pleat: {
        std::optional<std::set<FaceId>> targets;
        if (c.faces) targets = to_ids(*c.faces);
        res = pleat_fold(current(), rays[0], rays[1], targets);
        break;
      }
      case Op::PleatCrimp:
        res = pleat_crimp_fold(current(), pair, rays[0], rays[1],
                               c.inside ? CrimpVariant::Inside : CrimpVariant::Outside);
        break;
    }
    push(st, std::move(res.result), std::move(res.steps));
  }

  void exec(const Statement&, const AssertStmt& a) {
    const std::string step = "step " + std::to_string(trace_.steps.size());
    if (a.kind == AssertStmt::Kind::Faces) {
      const std::set<FaceId> want = to_ids(a.faces), have = current().face_ids();
      if (want != have) {
        fail("assertion failed at " + step + ": faces are " + faces_text(have) + ", expected " +
             faces_text(want));
      }
      return;
    }
    if (static_cast<std::size_t>(a.step) > trace_.steps.size()) {
      fail("step " + std::to_string(a.step) + " does not exist yet");
    }
    if (!graph_equal(adjacency_graph(trace_.steps[a.step - 1].snapshot), adjacency_graph(current()))) {
      fail("assertion failed at " + step + ": adjacency differs from step " + std::to_string(a.step));
    }
  }

  ConstructionTrace trace_;
  std::map<std::string, Point> points_;
  std::vector<std::string> point_order_;
  std::map<std::string, Line> lines_;
  std::optional<Line> last_line_;
  Location loc_;
};

}  // namespace

ConstructionTrace run(const Script& script) { return Interpreter{}.run(script); }

}  // namespace origami::script
