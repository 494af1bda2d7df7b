#include "origami/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "origami/error.hpp"

namespace origami {

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point v) { return std::hypot(v.x, v.y); }
double distance(Point a, Point b) { return norm(a - b); }
bool near(Point a, Point b, double tol) { return distance(a, b) <= tol; }
Point midpoint(Point p, Point q) { return {(p.x + q.x) / 2, (p.y + q.y) / 2}; }

Line::Line(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > 0.0) || !std::isfinite(n) || !std::isfinite(c)) {
    throw Error(ErrorKind::Degenerate, "line with zero normal");
  }
  a /= n;
  b /= n;
  c /= n;
  // tolerance on the sign test keeps near-vertical lines canonical
  if (a < -kEps || (std::abs(a) <= kEps && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  a_ = a;
  b_ = b;
  c_ = c;
}

bool Line::contains(Point p, double tol) const {
  return std::abs(signed_distance(p)) <= tol;
}

bool Line::approx_equal(const Line& other, double tol) const {
  return std::abs(a_ - other.a_) <= tol && std::abs(b_ - other.b_) <= tol &&
         std::abs(c_ - other.c_) <= tol;
}

bool canonical_less(const Line& l, const Line& m) {
  if (l.a() != m.a()) return l.a() < m.a();
  if (l.b() != m.b()) return l.b() < m.b();
  return l.c() < m.c();
}

Ray Ray::make(Point origin, Point through) {
  if (distance(origin, through) <= kEps) {
    throw Error(ErrorKind::Degenerate, "ray with coincident points");
  }
  return {origin, through};
}

Line Ray::line() const { return line_through(origin, through); }

Line line_through(Point p, Point q) {
  if (distance(p, q) <= kEps) {
    throw Error(ErrorKind::Degenerate, "line through coincident points");
  }
  const Point d = q - p;
  // normal (d.y, -d.x)
  return Line(d.y, -d.x, d.y * p.x - d.x * p.y);
}

Line perpendicular_bisector(Point p, Point q) {
  if (distance(p, q) <= kEps) {
    throw Error(ErrorKind::Degenerate, "bisector of coincident points");
  }
  const Point d = q - p;
  const Point m = midpoint(p, q);
  return Line(d.x, d.y, dot(d, m));
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const double det = l1.a() * l2.b() - l1.b() * l2.a();
  if (std::abs(det) <= kEps) return std::nullopt;
  return Point{(l1.c() * l2.b() - l1.b() * l2.c()) / det,
               (l1.a() * l2.c() - l1.c() * l2.a()) / det};
}

Point reflect(Point p, const Line& l) {
  const double d = l.signed_distance(p);
  return {p.x - 2 * d * l.a(), p.y - 2 * d * l.b()};
}

Side side(const Ray& r, Point p) {
  const Point d = r.direction();
  const Point v = p - r.origin;
  const double c = cross(d, v) / norm(d);
  if (c < -kEps) return Side::Right;
  if (c > kEps) return Side::Left;
  return Side::On;
}

double signed_area(const Polygon& poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    s += cross(poly[i], poly[(i + 1) % n]);
  }
  return s / 2;
}

double area(const Polygon& poly) { return std::abs(signed_area(poly)); }

namespace {

bool segments_cross(Point p1, Point p2, Point q1, Point q2) {
  auto orient = [](Point a, Point b, Point c) {
    const double v = cross(b - a, c - a);
    return v > kEps ? 1 : (v < -kEps ? -1 : 0);
  };
  const int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    return true;
  }
  auto on_seg = [](Point a, Point b, Point c) {
    return std::min(a.x, b.x) - kEps <= c.x && c.x <= std::max(a.x, b.x) + kEps &&
           std::min(a.y, b.y) - kEps <= c.y && c.y <= std::max(a.y, b.y) + kEps;
  };
  return (o1 == 0 && on_seg(p1, p2, q1)) || (o2 == 0 && on_seg(p1, p2, q2)) ||
         (o3 == 0 && on_seg(q1, q2, p1)) || (o4 == 0 && on_seg(q1, q2, p2));
}

}  // namespace

void validate_polygon(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) throw Error(ErrorKind::Degenerate, "polygon needs at least 3 vertices");
  for (const Point& p : poly.vertices) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorKind::Degenerate, "non-finite polygon vertex");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (near(poly[i], poly[(i + 1) % n])) {
      throw Error(ErrorKind::Degenerate, "repeated polygon vertex");
    }
  }
  if (signed_area(poly) <= kEps) {
    throw Error(ErrorKind::Degenerate, "polygon is not counter-clockwise with positive area");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
        throw Error(ErrorKind::Degenerate, "self-intersecting polygon");
      }
    }
  }
}

bool is_convex(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n], c = poly[(i + 2) % n];
    if (cross(b - a, c - b) < -kEps) return false;
  }
  return true;
}

Polygon cleanup(const Polygon& poly) {
  std::vector<Point> pts;
  for (const Point& p : poly.vertices) {
    if (pts.empty() || !near(pts.back(), p)) pts.push_back(p);
  }
  while (pts.size() > 1 && near(pts.front(), pts.back())) pts.pop_back();

  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Point prev = pts[(i + pts.size() - 1) % pts.size()];
      const Point next = pts[(i + 1) % pts.size()];
      const double len = distance(prev, next);
      const bool collinear =
          len <= kEps || std::abs(cross(next - prev, pts[i] - prev)) / len <= kEps;
      if (collinear) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return Polygon{std::move(pts)};
}

SplitResult split_polygon(const Polygon& poly, const Line& l) {
  const std::size_t n = poly.size();
  std::vector<double> d(n);
  bool any_left = false, any_right = false;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = l.signed_distance(poly[i]);
    any_left |= d[i] < -kEps;
    any_right |= d[i] > kEps;
  }
  SplitResult out;
  if (!any_right) {
    if (any_left) out.left = poly;
    return out;
  }
  if (!any_left) {
    out.right = poly;
    return out;
  }

  std::vector<Point> left, right, on;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    const Point p = poly[i];
    if (d[i] <= kEps) left.push_back(p);
    if (d[i] >= -kEps) right.push_back(p);
    if (std::abs(d[i]) <= kEps) on.push_back(p);
    if ((d[i] < -kEps && d[j] > kEps) || (d[i] > kEps && d[j] < -kEps)) {
      const double t = d[i] / (d[i] - d[j]);
      const Point x = p + t * (poly[j] - p);
      left.push_back(x);
      right.push_back(x);
      on.push_back(x);
    }
  }
  Polygon lp = cleanup(Polygon{std::move(left)});
  Polygon rp = cleanup(Polygon{std::move(right)});
  if (lp.size() >= 3 && area(lp) > kEps) out.left = std::move(lp);
  if (rp.size() >= 3 && area(rp) > kEps) out.right = std::move(rp);
  if (out.left && out.right && on.size() >= 2) {
    const Point dir = l.direction();
    auto by_dir = [&](Point a, Point b) { return dot(a, dir) < dot(b, dir); };
    const auto [lo, hi] = std::minmax_element(on.begin(), on.end(), by_dir);
    out.seam = Segment{*lo, *hi};
  }
  return out;
}

SplitResult split_polygon(const Polygon& poly, const Ray& r) {
  const Line l = r.line();
  SplitResult s = split_polygon(poly, l);
  if (dot(r.direction(), l.direction()) < 0) {
    std::swap(s.left, s.right);
    if (s.seam) std::swap(s.seam->a, s.seam->b);
  }
  return s;
}

std::vector<Point> convex_intersection(const Polygon& a, const Polygon& b) {
  std::vector<Point> out = a.vertices;
  const std::size_t m = b.size();
  for (std::size_t e = 0; e < m && !out.empty(); ++e) {
    const Point e0 = b[e], e1 = b[(e + 1) % m];
    const Point ed = e1 - e0;
    const double len = norm(ed);
    auto inside = [&](Point p) { return cross(ed, p - e0) / len; };
    std::vector<Point> next;
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Point p = out[i], q = out[(i + 1) % k];
      const double dp = inside(p), dq = inside(q);
      if (dp >= 0) next.push_back(p);
      if ((dp >= 0) != (dq >= 0)) {
        const double t = dp / (dp - dq);
        next.push_back(p + t * (q - p));
      }
    }
    out = std::move(next);
  }
  return out;
}

double overlap_area(const Polygon& a, const Polygon& b) {
  const std::vector<Point> pts = convex_intersection(a, b);
  if (pts.size() < 3) return 0.0;
  return area(Polygon{pts});
}

std::optional<Segment> clip_segment(const Segment& s, const Line& l, int sign,
                                    double tol) {
  // keep points with sign * signed_distance >= -tol
  const double da = sign * l.signed_distance(s.a);
  const double db = sign * l.signed_distance(s.b);
  if (da < -tol && db < -tol) return std::nullopt;
  if (da >= -tol && db >= -tol) return s;
  const double t = (da + tol) / (da - db);
  const Point x = s.a + t * (s.b - s.a);
  if (da >= -tol) return Segment{s.a, x};
  return Segment{x, s.b};
}

std::optional<Segment> clip_segment(const Segment& s, const Polygon& poly,
                                    double tol) {
  double t0 = 0.0, t1 = 1.0;
  const Point d = s.b - s.a;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = poly[i], e1 = poly[(i + 1) % n];
    const Point ed = e1 - e0;
    const double len = norm(ed);
    // inside: cross(ed, p - e0) / len >= -tol
    const double f0 = cross(ed, s.a - e0) / len + tol;
    const double fd = cross(ed, d) / len;
    if (std::abs(fd) < 1e-300) {
      if (f0 < 0) return std::nullopt;
      continue;
    }
    const double t = -f0 / fd;
    if (fd > 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return std::nullopt;
  }
  return Segment{s.a + t0 * d, s.a + t1 * d};
}

Isometry Isometry::reflection(const Line& l) {
  Isometry r;
  const double a = l.a(), b = l.b(), c = l.c();
  r.m_ = {1 - 2 * a * a, -2 * a * b, -2 * a * b, 1 - 2 * b * b};
  r.t_ = {2 * a * c, 2 * b * c};
  return r;
}

Point Isometry::apply(Point p) const {
  return {m_[0] * p.x + m_[1] * p.y + t_.x, m_[2] * p.x + m_[3] * p.y + t_.y};
}

Polygon Isometry::apply(const Polygon& poly) const {
  Polygon out;
  out.vertices.reserve(poly.size());
  for (const Point& p : poly.vertices) out.vertices.push_back(apply(p));
  if (determinant() < 0) std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

Line Isometry::apply(const Line& l) const {
  const Point p = l.anchor();
  return line_through(apply(p), apply(p + l.direction()));
}

Isometry Isometry::inverse() const {
  // orthogonal: inverse matrix is the transpose
  Isometry r;
  r.m_ = {m_[0], m_[2], m_[1], m_[3]};
  r.t_ = {-(r.m_[0] * t_.x + r.m_[1] * t_.y), -(r.m_[2] * t_.x + r.m_[3] * t_.y)};
  return r;
}

Isometry Isometry::operator*(const Isometry& o) const {
  Isometry r;
  r.m_ = {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
          m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
  r.t_ = apply(o.t_);
  return r;
}

bool Isometry::is_identity(double tol) const {
  return std::abs(m_[0] - 1) <= tol && std::abs(m_[1]) <= tol &&
         std::abs(m_[2]) <= tol && std::abs(m_[3] - 1) <= tol &&
         std::abs(t_.x) <= tol && std::abs(t_.y) <= tol;
}

}  // namespace origami
