#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "origami/error.hpp"
#include "origami/rules.hpp"

using namespace origami;
using namespace origami::rules;

namespace {

constexpr double kCheck = 1e-9;
constexpr int kInstances = 1000;

struct Gen {
  std::mt19937 rng;
  std::uniform_real_distribution<double> u{-2, 2};

  explicit Gen(unsigned seed) : rng(seed) {}

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

bool same_line(const Line& l, const Line& m) { return l.approx_equal(m, 1e-9); }

bool on(const Line& l, Point p) { return std::abs(l.signed_distance(p)) <= kCheck; }

bool sorted_canonically(const std::vector<Line>& ls) {
  return std::is_sorted(ls.begin(), ls.end(), canonical_less);
}

// Real roots of c0 + c1 t + c2 t^2 + c3 t^3 from the eigenvalues of the
// companion matrix. Returns nothing when the instance is too close to a
// multiple or complex-pair boundary to count reliably.
std::optional<std::vector<double>> companion_roots(const Cubic& f) {
  const double scale = std::max({std::abs(f.c0), std::abs(f.c1), std::abs(f.c2), std::abs(f.c3)});
  if (std::abs(f.c3) < 1e-3 * scale) return std::nullopt;
  Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = -f.c0 / f.c3;
  c(1, 2) = -f.c1 / f.c3;
  c(2, 2) = -f.c2 / f.c3;
  const Eigen::EigenSolver<Eigen::Matrix3d> es(c, false);
  std::vector<double> real;
  std::vector<std::complex<double>> all;
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> z = es.eigenvalues()[i];
    all.push_back(z);
    if (std::abs(z.imag()) < 1e-9 * std::max(1.0, std::abs(z))) real.push_back(z.real());
    else if (std::abs(z.imag()) < 1e-3) return std::nullopt;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (std::abs(all[i] - all[j]) < 1e-3) return std::nullopt;
    }
  }
  std::sort(real.begin(), real.end());
  return real;
}

}  // namespace

TEST(O1, Examples) {
  const auto ls = o1({0, 0}, {1, 1});
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_TRUE(same_line(ls[0], Line(1, -1, 0)));
  EXPECT_THROW(o1({1, 1}, {1, 1}), Error);
}

TEST(O2, Examples) {
  const auto ls = o2({0, 0}, {2, 0});
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_TRUE(same_line(ls[0], Line(1, 0, 1)));
  EXPECT_THROW(o2({0, 0}, {0, 0}), Error);
}

TEST(O3, Examples) {
  const auto ls = o3(Line(0, 1, 0), Line(1, 0, 0));
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_TRUE(same_line(ls[0], Line(1, -1, 0)) || same_line(ls[1], Line(1, -1, 0)));
  EXPECT_TRUE(same_line(ls[0], Line(1, 1, 0)) || same_line(ls[1], Line(1, 1, 0)));
  EXPECT_TRUE(sorted_canonically(ls));
  const auto par = o3(Line(0, 1, 0), Line(0, 1, 2));
  ASSERT_EQ(par.size(), 1u);
  EXPECT_TRUE(same_line(par[0], Line(0, 1, 1)));
  EXPECT_THROW(o3(Line(0, 1, 0), Line(0, 2, 0)), Error);
}

TEST(O4, Examples) {
  const auto ls = o4({1, 1}, Line(0, 1, 0));
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_TRUE(same_line(ls[0], Line(1, 0, 1)));
}

TEST(O5, Examples) {
  const auto ls = o5({0, 1}, Line(0, 1, 0), {0, 0});
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_TRUE(same_line(ls[0], Line(1, -1, 0)) || same_line(ls[1], Line(1, -1, 0)));
  EXPECT_TRUE(same_line(ls[0], Line(1, 1, 0)) || same_line(ls[1], Line(1, 1, 0)));
  EXPECT_TRUE(o5({0, 5}, Line(0, 1, 0), {0, 4.5}).empty());
  EXPECT_THROW(o5({1, 0}, Line(0, 1, 0), {0, 0}), Error);
}

TEST(O7, Examples) {
  const auto ls = o7({0, 1}, Line(0, 1, 0), Line(1, 0, 0));
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_TRUE(same_line(ls[0], Line(0, 1, 0.5)));
  EXPECT_TRUE(o7({0, 1}, Line(0, 1, 0), Line(0, 1, 3)).empty());
}

TEST(O6, KnownInstance) {
  // p=(0,1) onto y=-1 and q=(1,0) onto x=-1: the diagonal fold y=-x works
  const auto ls = o6({0, 1}, Line(0, 1, -1), {1, 0}, Line(1, 0, -1));
  ASSERT_GE(ls.size(), 1u);
  ASSERT_LE(ls.size(), 3u);
  for (const Line& l : ls) {
    EXPECT_TRUE(on(Line(0, 1, -1), reflect({0, 1}, l)));
    EXPECT_TRUE(on(Line(1, 0, -1), reflect({1, 0}, l)));
  }
}

TEST(RealRoots, Examples) {
  const auto r = real_roots({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 1, 1e-12);
  EXPECT_NEAR(r[1], 2, 1e-12);
  EXPECT_NEAR(r[2], 3, 1e-12);
  EXPECT_EQ(real_roots({1, 0, 1, 0}).size(), 0u);
  EXPECT_EQ(real_roots({-4, 0, 1, 0}).size(), 2u);
  EXPECT_THROW(real_roots({0, 0, 0, 0}), Error);
}

TEST(Property, O1ReflectCheck) {
  Gen g(1);
  for (int i = 0; i < kInstances; ++i) {
    const Point p = g.point(), q = g.point();
    if (distance(p, q) < 1e-3) continue;
    for (const Line& l : o1(p, q)) {
      EXPECT_TRUE(on(l, p) && on(l, q));
      EXPECT_TRUE(near(reflect(p, l), p, kCheck));
    }
  }
}

TEST(Property, O2ReflectCheck) {
  Gen g(2);
  for (int i = 0; i < kInstances; ++i) {
    const Point p = g.point(), q = g.point();
    if (distance(p, q) < 1e-3) continue;
    const auto ls = o2(p, q);
    ASSERT_EQ(ls.size(), 1u);
    EXPECT_TRUE(near(reflect(p, ls[0]), q, kCheck));
  }
}

TEST(Property, O3ReflectCheck) {
  Gen g(3);
  for (int i = 0; i < kInstances; ++i) {
    const Line l = g.line(), m = g.line();
    if (l.approx_equal(m, 1e-6)) continue;
    const auto ls = o3(l, m);
    ASSERT_GE(ls.size(), 1u);
    ASSERT_LE(ls.size(), 2u);
    EXPECT_TRUE(sorted_canonically(ls));
    const Point a = l.anchor(), b = a + l.direction();
    for (const Line& f : ls) {
      EXPECT_TRUE(on(m, reflect(a, f)));
      EXPECT_TRUE(on(m, reflect(b, f)));
    }
  }
}

TEST(Property, O4ReflectCheck) {
  Gen g(4);
  for (int i = 0; i < kInstances; ++i) {
    const Point p = g.point();
    const Line l = g.line();
    const auto ls = o4(p, l);
    ASSERT_EQ(ls.size(), 1u);
    EXPECT_TRUE(on(ls[0], p));
    // l folds onto itself
    const Point a = l.anchor(), b = a + l.direction();
    EXPECT_TRUE(on(l, reflect(a, ls[0])));
    EXPECT_TRUE(on(l, reflect(b, ls[0])));
  }
}

TEST(Property, O5ReflectCheckAndCap) {
  Gen g(5);
  int nonempty = 0;
  for (int i = 0; i < kInstances; ++i) {
    const Line m = g.line();
    const Point p = g.off(m), q = g.point();
    if (distance(p, q) < 1e-3) continue;
    const auto ls = o5(p, m, q);
    ASSERT_LE(ls.size(), 2u);
    EXPECT_TRUE(sorted_canonically(ls));
    nonempty += !ls.empty();
    for (const Line& l : ls) {
      EXPECT_TRUE(on(l, q));
      EXPECT_TRUE(on(m, reflect(p, l)));
    }
  }
  EXPECT_GT(nonempty, kInstances / 4);
}

TEST(Property, O6ReflectCheckAndCap) {
  Gen g(6);
  int nonempty = 0;
  for (int i = 0; i < kInstances; ++i) {
    const Line m = g.line(), n = g.line();
    const Point p = g.off(m), q = g.off(n);
    const auto ls = o6(p, m, q, n);
    ASSERT_LE(ls.size(), 3u);
    EXPECT_TRUE(sorted_canonically(ls));
    nonempty += !ls.empty();
    for (const Line& l : ls) {
      EXPECT_TRUE(on(m, reflect(p, l)));
      EXPECT_TRUE(on(n, reflect(q, l)));
    }
  }
  EXPECT_GT(nonempty, kInstances / 2);
}

TEST(Property, O7ReflectCheckAndCap) {
  Gen g(7);
  for (int i = 0; i < kInstances; ++i) {
    const Line m = g.line(), n = g.line();
    const Point p = g.off(m);
    const auto ls = o7(p, m, n);
    ASSERT_LE(ls.size(), 1u);
    for (const Line& l : ls) {
      EXPECT_NEAR(std::abs(dot(l.direction(), n.direction())), 0, kCheck);
      EXPECT_TRUE(on(m, reflect(p, l)));
    }
  }
}

TEST(Property, O6RootCountMatchesCompanionOracle) {
  Gen g(8);
  int checked = 0;
  for (int i = 0; checked < 100 && i < 100000; ++i) {
    const Line m = g.line(), n = g.line();
    const Point p = g.off(m), q = g.off(n);
    const Cubic f = o6_polynomial(p, m, q, n);
    const auto oracle = companion_roots(f);
    if (!oracle) continue;
    ++checked;
    const auto roots = real_roots(f);
    ASSERT_EQ(roots.size(), oracle->size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      EXPECT_NEAR(roots[k], (*oracle)[k], 1e-6 * std::max(1.0, std::abs(roots[k])));
    }
    EXPECT_EQ(o6(p, m, q, n).size(), oracle->size());
  }
  EXPECT_EQ(checked, 100);
}
