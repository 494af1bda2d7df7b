#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "origami/engine.hpp"
#include "origami/error.hpp"
#include "origami/render.hpp"
#include "support.hpp"

using namespace origami;
using origami::testing::fixture_path;
using origami::testing::read_file;
using origami::testing::run_fixture;
using origami::testing::step;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

AbstractOrigami folded_once() {
  FoldSpec s;
  s.ray = Ray{{0.5, 0}, {0.5, 1}};
  return fold(init_square(), s);
}

std::set<long long> z_levels(const Pose3D& pose) {
  std::set<long long> zs;
  for (const PosedFace& f : pose.faces) {
    for (const Point3& v : f.vertices) zs.insert(std::llround(v.z * 1e9));
  }
  return zs;
}

}  // namespace

TEST(Svg, InitialSquare) {
  const std::string svg = to_svg(init_square());
  EXPECT_EQ(count(svg, "<polygon"), 1u);
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
}

TEST(Svg, OneValleyFold) {
  const std::string svg = to_svg(folded_once());
  EXPECT_EQ(count(svg, "<polygon"), 2u);
  EXPECT_EQ(count(svg, "<line"), 1u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 1u);
  // the upper face is drawn last
  EXPECT_LT(svg.find("face-2"), svg.find("face-3"));
}

TEST(Svg, MountainCreaseIsSolid) {
  FoldSpec s;
  s.kind = CreaseKind::Mountain;
  s.ray = Ray{{0.5, 0}, {0.5, 1}};
  const std::string svg = to_svg(fold(init_square(), s));
  EXPECT_EQ(count(svg, "class=\"mountain\""), 1u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 0u);
}

TEST(Svg, SquashGoldenSilhouette) {
  const ConstructionTrace t = run_fixture("squash.ori");
  const auto flat = t.flattened();
  ASSERT_GE(flat.size(), 10u);
  EXPECT_EQ(to_svg(flat[9]->snapshot), read_file(fixture_path("golden/squash_o10.svg")));
}

TEST(Dot, InitialAo) {
  EXPECT_EQ(to_dot(adjacency_graph(init_square()), GraphKind::Adjacency), "graph adjacency {\n  1;\n}\n");
}

TEST(Dot, OneValleyFold) {
  const std::string dot = to_dot(superposition_graph(folded_once()), GraphKind::Superposition);
  EXPECT_EQ(dot.rfind("digraph superposition {", 0), 0u);
  EXPECT_NE(dot.find("  3 -> 2;\n"), std::string::npos);
}

TEST(Dot, SquashO5Adjacency) {
  const AbstractOrigami o5 = step(run_fixture("squash.ori"), 5);
  const std::string dot = to_dot(adjacency_graph(o5), GraphKind::Adjacency);
  for (const char* node : {"  4;\n", "  6;\n", "  10;\n", "  11;\n", "  14;\n", "  15;\n"}) {
    EXPECT_NE(dot.find(node), std::string::npos) << node;
  }
  EXPECT_EQ(count(dot, ";\n") - count(dot, " -- "), 6u);
  EXPECT_NE(dot.find("  10 -- 11;\n"), std::string::npos);
}

TEST(Pose, FlatTwoLayers) {
  const Pose3D pose = pose3d(folded_once(), 0.1);
  const auto zs = z_levels(pose);
  EXPECT_EQ(zs, (std::set<long long>{0, 100000000}));
}

TEST(Pose, SquashO5HasFourLevels) {
  const AbstractOrigami o5 = step(run_fixture("squash.ori"), 5);
  EXPECT_EQ(z_levels(pose3d(o5, 0.05)).size(), 4u);
}

TEST(Pose, DepthsRespectSuperposition) {
  for (const char* name : origami::testing::kCompositeFixtures) {
    SCOPED_TRACE(name);
    const ConstructionTrace t = run_fixture(name);
    for (const TraceStep* s : t.flattened()) {
      const auto depth = layer_depths(s->snapshot);
      for (const SuperpositionPair& p : s->snapshot.superposition) {
        EXPECT_GT(depth.at(p.upper), depth.at(p.lower));
      }
    }
  }
}

TEST(Pose, FlatProjectionReproducesPolygons) {
  const AbstractOrigami o5 = step(run_fixture("squash.ori"), 5);
  const Pose3D pose = pose3d(o5, 0.05);
  for (const auto& [id, f] : o5.faces) {
    const Polygon poly = f.polygon();
    const PosedFace& pf = pose.face(id);
    ASSERT_EQ(pf.vertices.size(), poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      EXPECT_NEAR(pf.vertices[i].x, poly[i].x, 1e-12);
      EXPECT_NEAR(pf.vertices[i].y, poly[i].y, 1e-12);
    }
  }
}

TEST(Pose, RejectsNonPositiveGap) {
  try {
    pose3d(init_square(), 0);
    FAIL() << "zero gap accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Pose, RabbitEarStandsUpright) {
  const ConstructionTrace t = run_fixture("rabbit_ear.ori");
  const AbstractOrigami& ao = t.current();
  ASSERT_TRUE(ao.posed);
  const Pose3D pose = pose3d(ao, 0.05);
  int checked = 0;
  for (const AdjacencyEdge& e : ao.adjacency) {
    const bool ma = ao.posed_fold->moved.count(e.a) != 0, mb = ao.posed_fold->moved.count(e.b) != 0;
    if (ma == mb) continue;
    EXPECT_NEAR(dihedral(ao, pose, e.a, e.b), kPi / 2, 1e-6);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(Pose, FlatDihedralIsZeroAcrossFold) {
  const AbstractOrigami ao = folded_once();
  EXPECT_NEAR(dihedral(ao, pose3d(ao, 0.05), FaceId{2}, FaceId{3}), 0, 0.1);
}

TEST(Export3d, Format) {
  const std::string json = export_3d(pose3d(folded_once(), 0.05));
  EXPECT_EQ(json.rfind("{\"faces\": [", 0), 0u);
  EXPECT_NE(json.find("\"vertices3d\""), std::string::npos);
  EXPECT_EQ(json, export_3d(pose3d(folded_once(), 0.05)));
}
