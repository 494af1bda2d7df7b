#pragma once

// Randomized suites shared by the acceptance runner. Each returns a list of
// failure descriptions; empty means the suite passed.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "origami/engine.hpp"
#include "origami/error.hpp"
#include "origami/invariants.hpp"
#include "origami/rules.hpp"

namespace origami::testing {

struct RuleGen {
  std::mt19937 rng;
  std::uniform_real_distribution<double> u{-2, 2};

  explicit RuleGen(unsigned seed) : rng(seed) {}

  Point point() { return {u(rng), u(rng)}; }
  Line line() {
    Point a = point(), b = point();
    while (distance(a, b) < 0.2) b = point();
    return line_through(a, b);
  }
  Point off(const Line& l) {
    Point p = point();
    while (std::abs(l.signed_distance(p)) < 0.05) p = point();
    return p;
  }
};

/// Real roots from the companion matrix; nothing when the instance sits too
/// close to a repeated or complex-pair root to count reliably.
inline std::optional<std::size_t> companion_real_root_count(const rules::Cubic& f) {
  const double scale = std::max({std::abs(f.c0), std::abs(f.c1), std::abs(f.c2), std::abs(f.c3)});
  if (std::abs(f.c3) < 1e-3 * scale) return std::nullopt;
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = -f.c0 / f.c3;
  c(1, 2) = -f.c1 / f.c3;
  c(2, 2) = -f.c2 / f.c3;
  const Eigen::EigenSolver<Eigen::Matrix3d> es(c, false);
  std::size_t real = 0;
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> z = es.eigenvalues()[i];
    if (std::abs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z))) ++real;
    else if (std::abs(z.imag()) < 1e-3) return std::nullopt;
    for (int j = i + 1; j < 3; ++j) {
      if (std::abs(z - std::complex<double>(es.eigenvalues()[j])) < 1e-3) return std::nullopt;
    }
  }
  return real;
}

inline std::vector<std::string> huzita_justin_suite(int per_rule = 1000, int oracle_instances = 100) {
  using namespace rules;
  constexpr double tol = 1e-9;
  std::vector<std::string> fails;
  auto on = [&](const Line& l, Point p) { return std::abs(l.signed_distance(p)) <= tol; };
  auto fail = [&](const std::string& rule, int i, const std::string& what) {
    if (fails.size() < 20) fails.push_back(rule + " instance " + std::to_string(i) + ": " + what);
  };

  RuleGen g(101);
  for (int i = 0; i < per_rule; ++i) {
    const Point p = g.point(), q = g.off(line_through(p, p + Point{1, 0}));
    for (const Line& l : o1(p, q)) {
      if (!on(l, p) || !on(l, q)) fail("O1", i, "points not on line");
    }
    const auto l2 = o2(p, q);
    if (l2.size() != 1 || !near(reflect(p, l2[0]), q, tol)) fail("O2", i, "p does not land on q");
  }
  for (int i = 0; i < per_rule; ++i) {
    const Line l = g.line(), m = g.line();
    if (l.approx_equal(m, 1e-6)) continue;
    const Point a = l.anchor(), b = a + l.direction();
    const auto ls = o3(l, m);
    if (ls.empty() || ls.size() > 2) fail("O3", i, "solution count");
    for (const Line& f : ls) {
      if (!on(m, reflect(a, f)) || !on(m, reflect(b, f))) fail("O3", i, "l does not land on m");
    }
  }
  for (int i = 0; i < per_rule; ++i) {
    const Point p = g.point();
    const Line l = g.line();
    const auto ls = o4(p, l);
    const Point a = l.anchor(), b = a + l.direction();
    if (ls.size() != 1 || !on(ls[0], p) || !on(l, reflect(a, ls[0])) || !on(l, reflect(b, ls[0]))) {
      fail("O4", i, "not a perpendicular through p");
    }
  }
  for (int i = 0; i < per_rule; ++i) {
    const Line m = g.line();
    const Point p = g.off(m), q = g.point();
    if (distance(p, q) < 1e-3) continue;
    const auto ls = o5(p, m, q);
    if (ls.size() > 2) fail("O5", i, "more than 2 solutions");
    for (const Line& l : ls) {
      if (!on(l, q) || !on(m, reflect(p, l))) fail("O5", i, "reflect-check");
    }
  }
  for (int i = 0; i < per_rule; ++i) {
    const Line m = g.line(), n = g.line();
    const Point p = g.off(m), q = g.off(n);
    const auto ls = o6(p, m, q, n);
    if (ls.size() > 3) fail("O6", i, "more than 3 solutions");
    for (const Line& l : ls) {
      if (!on(m, reflect(p, l)) || !on(n, reflect(q, l))) fail("O6", i, "reflect-check");
    }
  }
  for (int i = 0; i < per_rule; ++i) {
    const Line m = g.line(), n = g.line();
    const Point p = g.off(m);
    const auto ls = o7(p, m, n);
    if (ls.size() > 1) fail("O7", i, "more than 1 solution");
    for (const Line& l : ls) {
      if (std::abs(dot(l.direction(), n.direction())) > tol || !on(m, reflect(p, l))) {
        fail("O7", i, "reflect-check");
      }
    }
  }

  int checked = 0;
  for (int i = 0; checked < oracle_instances && i < 100000; ++i) {
    const Line m = g.line(), n = g.line();
    const Point p = g.off(m), q = g.off(n);
    const auto expected = companion_real_root_count(o6_polynomial(p, m, q, n));
    if (!expected) continue;
    ++checked;
    const std::size_t got = o6(p, m, q, n).size();
    if (got != *expected) {
      fail("O6 oracle", i, std::to_string(got) + " lines, oracle " + std::to_string(*expected) + " roots");
    }
  }
  if (checked < oracle_instances) fails.push_back("O6 oracle: too few countable instances");
  return fails;
}

inline Polygon random_convex_sheet(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(0, 2 * kPi), radius(0.5, 2.0);
  const int n = std::uniform_int_distribution<int>(3, 8)(rng);
  std::vector<double> as(n);
  for (double& a : as) a = angle(rng);
  std::sort(as.begin(), as.end());
  Polygon poly;
  const double r = radius(rng);
  for (double a : as) poly.vertices.push_back({r * std::cos(a), r * std::sin(a)});
  return cleanup(poly);
}

inline Ray random_ray_through(std::mt19937& rng, const Polygon& poly) {
  std::uniform_real_distribution<double> w(0.05, 1.0);
  auto interior = [&] {
    Point sum{0, 0};
    double total = 0;
    for (const Point& v : poly.vertices) {
      const double k = w(rng);
      sum = sum + k * v;
      total += k;
    }
    return (1.0 / total) * sum;
  };
  Point a = interior(), b = interior();
  while (distance(a, b) < 1e-2) b = interior();
  return Ray{a, b};
}

inline bool same_polygon(const Polygon& p, const Polygon& q, double tol) {
  if (p.size() != q.size()) return false;
  for (std::size_t shift = 0; shift < p.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = near(p[i], q[(i + shift) % q.size()], tol);
    if (ok) return true;
  }
  return false;
}

/// Fold/unfold round trips on random convex sheets, checking geometry and
/// the child-id convention.
inline std::vector<std::string> round_trip_suite(int trips = 500) {
  std::vector<std::string> fails;
  std::mt19937 rng(202);
  int done = 0;
  for (int trial = 0; done < trips && trial < 10 * trips; ++trial) {
    AbstractOrigami ao = init_polygon(random_convex_sheet(rng));
    const int prep = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < prep; ++k) {
      const FaceId f = ao.layer_order[std::uniform_int_distribution<std::size_t>(0, ao.layer_order.size() - 1)(rng)];
      ao = fold(ao, FoldSpec{CreaseKind::Valley, random_ray_through(rng, ao.face(f).polygon())});
    }
    const FaceId f = ao.layer_order[std::uniform_int_distribution<std::size_t>(0, ao.layer_order.size() - 1)(rng)];
    FoldSpec spec;
    spec.kind = std::bernoulli_distribution(0.5)(rng) ? CreaseKind::Valley : CreaseKind::Mountain;
    spec.ray = random_ray_through(rng, ao.face(f).polygon());
    const AbstractOrigami folded = fold(ao, spec);
    ++done;

    for (const auto& [parent, children] : folded.last_fold->splits) {
      if (children.first != parent.stationary_child() || children.second != parent.moving_child() ||
          folded.has_face(parent)) {
        fails.push_back("trip " + std::to_string(done) + ": split of " + std::to_string(parent.value) +
                        " breaks the {2n, 2n+1} convention");
      }
    }
    const AbstractOrigami back = unfold(folded);
    for (const auto& [id, face] : back.faces) {
      const FaceId source = ao.has_face(id) ? id : id.parent();
      if (!ao.has_face(source) ||
          !same_polygon(face.polygon(), ao.face(source).placement.apply(face.paper), 1e-9)) {
        fails.push_back("trip " + std::to_string(done) + ": face " + std::to_string(id.value) +
                        " not restored");
      }
    }
    if (std::abs(total_area(back) - total_area(ao)) > 1e-9) {
      fails.push_back("trip " + std::to_string(done) + ": area changed");
    }
    if (fails.size() > 20) break;
  }
  if (done < trips) fails.push_back("only " + std::to_string(done) + " round trips completed");
  return fails;
}

}  // namespace origami::testing
