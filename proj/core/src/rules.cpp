#include "origami/rules.hpp"

#include <algorithm>
#include <cmath>

#include "origami/error.hpp"

namespace origami::rules {
namespace {

constexpr double kDedup = 1e-7;

bool lands_on(Point p, const Line& fold, const Line& target) {
  return target.contains(reflect(p, fold));
}

std::vector<Line> finish(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end(), canonical_less);
  std::vector<Line> out;
  for (const Line& l : lines) {
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const Line& m) { return m.approx_equal(l, kDedup); });
    if (!dup) out.push_back(l);
  }
  return out;
}

void require_distinct(Point p, Point q, const char* rule) {
  if (near(p, q)) {
    throw Error(ErrorKind::Degenerate, std::string(rule) + ": coincident points");
  }
}

bool parallel(const Line& l, const Line& m) {
  return std::abs(cross(l.normal(), m.normal())) <= kEps;
}

}  // namespace

std::vector<Line> o1(Point p, Point q) {
  require_distinct(p, q, "O1");
  return {line_through(p, q)};
}

std::vector<Line> o2(Point p, Point q) {
  require_distinct(p, q, "O2");
  return {perpendicular_bisector(p, q)};
}

std::vector<Line> o3(const Line& l, const Line& m) {
  if (l.approx_equal(m)) throw Error(ErrorKind::Degenerate, "O3: identical lines");
  std::vector<Line> out;
  if (parallel(l, m)) {
    // orient m like l, then take the midline
    const double s = dot(l.normal(), m.normal()) < 0 ? -1.0 : 1.0;
    out.emplace_back(l.a(), l.b(), (l.c() + s * m.c()) / 2);
  } else {
    out.emplace_back(l.a() + m.a(), l.b() + m.b(), l.c() + m.c());
    out.emplace_back(l.a() - m.a(), l.b() - m.b(), l.c() - m.c());
  }
  return finish(std::move(out));
}

std::vector<Line> o4(Point p, const Line& l) {
  const Point d = l.direction();
  return {Line(d.x, d.y, dot(d, p))};
}

std::vector<Line> o5(Point p, const Line& m, Point q) {
  require_distinct(p, q, "O5");
  if (m.contains(p)) throw Error(ErrorKind::Degenerate, "O5: point already on target line");
  // images of p on m at distance |qp| from q
  const double r = distance(p, q);
  const double h = m.signed_distance(q);
  std::vector<Line> out;
  if (std::abs(h) > r + kEps) return out;
  const double half = std::sqrt(std::max(0.0, r * r - h * h));
  const Point foot = q - h * m.normal();
  for (double s : {-1.0, 1.0}) {
    const Point image = foot + (s * half) * m.direction();
    if (near(image, p)) continue;
    const Line fold = perpendicular_bisector(p, image);
    if (fold.contains(q) && lands_on(p, fold, m)) out.push_back(fold);
  }
  return finish(std::move(out));
}

Cubic o6_polynomial(Point p, const Line& m, Point q, const Line& n) {
  // w(t) = image(t) - p = w0 + t d
  const Point d = m.direction();
  const Point w0 = m.anchor() - p;
  const Point nn = n.normal();
  const double a0 = dot(w0, w0), a1 = 2 * dot(w0, d), a2 = dot(d, d);
  const double n0 = dot(nn, w0), n1 = dot(nn, d);
  const Point qp = q - p;
  const double q0 = dot(qp, w0), q1 = dot(qp, d);
  const double k = n.signed_distance(q);
  // k |w|^2 - 2 ((q-p).w)(n.w) + |w|^2 (n.w) = 0
  Cubic f;
  f.c3 = a2 * n1;
  f.c2 = k * a2 - 2 * q1 * n1 + a1 * n1 + a2 * n0;
  f.c1 = k * a1 - 2 * (q0 * n1 + q1 * n0) + a0 * n1 + a1 * n0;
  f.c0 = k * a0 - 2 * q0 * n0 + a0 * n0;
  return f;
}

namespace {

std::vector<double> quadratic_roots(double a, double b, double c) {
  std::vector<double> out;
  if (a == 0.0) {
    if (b != 0.0) out.push_back(-c / b);
    return out;
  }
  const double disc = b * b - 4 * a * c;
  const double scale = std::max({b * b, std::abs(4 * a * c), 1e-300});
  if (disc < -1e-12 * scale) return out;
  if (disc <= 1e-12 * scale) {
    out.push_back(-b / (2 * a));
    return out;
  }
  const double sq = std::sqrt(disc);
  const double qq = -0.5 * (b + (b >= 0 ? sq : -sq));
  out.push_back(qq / a);
  if (qq != 0.0) out.push_back(c / qq);
  return out;
}

double polish(const Cubic& f, double t) {
  for (int i = 0; i < 50; ++i) {
    const double v = f(t);
    const double dv = (3 * f.c3 * t + 2 * f.c2) * t + f.c1;
    if (dv == 0.0) break;
    const double step = v / dv;
    const double next = t - step;
    if (!std::isfinite(next)) break;
    if (std::abs(f(next)) > std::abs(v)) break;
    t = next;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
  }
  return t;
}

}  // namespace

std::vector<double> real_roots(const Cubic& f) {
  const double scale = std::max({std::abs(f.c0), std::abs(f.c1), std::abs(f.c2), std::abs(f.c3)});
  if (scale == 0.0) throw Error(ErrorKind::Degenerate, "identically zero polynomial");
  std::vector<double> roots;
  if (std::abs(f.c3) <= 1e-12 * scale) {
    const double a = std::abs(f.c2) <= 1e-12 * scale ? 0.0 : f.c2;
    roots = quadratic_roots(a, f.c1, f.c0);
  } else {
    // depressed cubic t = x - b/3
    const double b = f.c2 / f.c3, c = f.c1 / f.c3, d = f.c0 / f.c3;
    const double p = c - b * b / 3;
    const double q = 2 * b * b * b / 27 - b * c / 3 + d;
    const double shift = -b / 3;
    const double disc = q * q / 4 + p * p * p / 27;
    const double tol = 1e-14 * std::max({1.0, q * q, std::abs(p * p * p)});
    if (disc > tol) {
      const double s = std::sqrt(disc);
      roots.push_back(std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s) + shift);
    } else if (disc >= -tol && std::abs(p) <= 1e-12) {
      roots.push_back(shift);
    } else if (disc >= -tol) {
      // double root
      const double u = std::cbrt(-q / 2);
      roots.push_back(2 * u + shift);
      roots.push_back(-u + shift);
    } else {
      const double r = std::sqrt(-p / 3);
      const double phi = std::acos(std::clamp(-q / (2 * r * r * r), -1.0, 1.0));
      for (int k = 0; k < 3; ++k) {
        roots.push_back(2 * r * std::cos((phi - 2 * kPi * k) / 3) + shift);
      }
    }
  }
  for (double& t : roots) t = polish(f, t);
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double t : roots) {
    if (out.empty() || std::abs(t - out.back()) > kDedup * std::max(1.0, std::abs(t))) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<Line> o6(Point p, const Line& m, Point q, const Line& n) {
  if (near(p, q) && m.approx_equal(n)) {
    throw Error(ErrorKind::Degenerate, "O6: coincident points and identical lines");
  }
  if (m.contains(p)) throw Error(ErrorKind::Degenerate, "O6: point already on its target line");
  const Cubic f = o6_polynomial(p, m, q, n);
  std::vector<Line> out;
  for (double t : real_roots(f)) {
    const Point image = m.anchor() + t * m.direction();
    if (near(image, p)) continue;
    const Line fold = perpendicular_bisector(p, image);
    if (lands_on(p, fold, m) && lands_on(q, fold, n)) out.push_back(fold);
  }
  return finish(std::move(out));
}

std::vector<Line> o7(Point p, const Line& m, const Line& n) {
  // fold normal u runs along n
  const Point u = n.direction();
  const double mu = dot(m.normal(), u);
  if (std::abs(mu) <= kEps) {
    if (m.contains(p)) {
      throw Error(ErrorKind::Degenerate, "O7: every perpendicular fold works");
    }
    return {};
  }
  const double c = dot(u, p) - m.signed_distance(p) / (2 * mu);
  const Line fold(u.x, u.y, c);
  std::vector<Line> out;
  if (lands_on(p, fold, m)) out.push_back(fold);
  return out;
}

}  // namespace origami::rules
