#pragma once

// Planar primitives for fold computations. All comparisons use the single
// global tolerance kEps (paper units).

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace origami {

inline constexpr double kEps = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;
/// Shorter crease pieces are clipping noise, not creases.
inline constexpr double kMinPiece = 1e-7;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
  friend bool operator==(Point, Point) = default;
};

double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point v);
double distance(Point a, Point b);
bool near(Point a, Point b, double tol = kEps);
Point midpoint(Point p, Point q);

/// a*x + b*y = c with a^2 + b^2 = 1 and the first nonzero of (a, b) positive.
///
/// The canonical direction of a line is (-b, a); points with a*x + b*y < c lie
/// on its left.
class Line {
 public:
  /// Normalizes (a, b, c). Throws Error{Degenerate} when (a, b) = (0, 0).
  Line(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  Point normal() const { return {a_, b_}; }
  Point direction() const { return {-b_, a_}; }
  /// Positive on the right of the canonical direction.
  double signed_distance(Point p) const { return a_ * p.x + b_ * p.y - c_; }
  bool contains(Point p, double tol = kEps) const;
  /// Some point on the line (the foot of the origin).
  Point anchor() const { return {a_ * c_, b_ * c_}; }

  bool approx_equal(const Line& other, double tol = kEps) const;

 private:
  double a_, b_, c_;
};

/// Lexicographic order on (a, b, c); used to sort rule solutions.
bool canonical_less(const Line& l, const Line& m);

enum class Side { Left, Right, On };

/// Directed line from origin through `through`.
struct Ray {
  Point origin;
  Point through;

  /// Throws Error{Degenerate} when origin and through coincide.
  static Ray make(Point origin, Point through);

  Line line() const;
  Point direction() const { return through - origin; }
  Ray reversed() const { return {through, origin}; }
};

struct Segment {
  Point a;
  Point b;

  double length() const { return distance(a, b); }
};

/// Counter-clockwise simple polygon.
struct Polygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  const Point& operator[](std::size_t i) const { return vertices[i]; }
};

/// Throws Error{Degenerate} unless poly has >= 3 vertices, positive area,
/// no repeated consecutive vertices and is simple.
void validate_polygon(const Polygon& poly);
bool is_convex(const Polygon& poly);

double signed_area(const Polygon& poly);
double area(const Polygon& poly);

Point reflect(Point p, const Line& l);
Side side(const Ray& r, Point p);

Line line_through(Point p, Point q);
Line perpendicular_bisector(Point p, Point q);
std::optional<Point> intersect(const Line& l1, const Line& l2);

/// Removes consecutive duplicate and collinear vertices.
Polygon cleanup(const Polygon& poly);

struct SplitResult {
  std::optional<Polygon> left;
  std::optional<Polygon> right;
  std::optional<Segment> seam;
};

/// Splits a convex polygon by a line. "left" is the side with negative
/// signed distance (left of the line's canonical direction).
SplitResult split_polygon(const Polygon& poly, const Line& l);
/// Same split, oriented by the ray: left/right as seen walking the ray.
SplitResult split_polygon(const Polygon& poly, const Ray& r);

/// Intersection of two convex polygons (empty when they do not overlap).
std::vector<Point> convex_intersection(const Polygon& a, const Polygon& b);
double overlap_area(const Polygon& a, const Polygon& b);

/// Part of segment s inside the closed convex polygon (grown by tol).
std::optional<Segment> clip_segment(const Segment& s, const Polygon& poly,
                                    double tol = kEps);
/// Part of segment s with l.signed_distance <= tol (sign = -1) or >= -tol
/// (sign = +1).
std::optional<Segment> clip_segment(const Segment& s, const Line& l, int sign,
                                    double tol = kEps);

/// Rigid motion of the plane: p -> m * p + t with m orthogonal.
class Isometry {
 public:
  Isometry() = default;

  static Isometry reflection(const Line& l);

  Point apply(Point p) const;
  Segment apply(const Segment& s) const { return {apply(s.a), apply(s.b)}; }
  /// Maps the polygon and restores counter-clockwise order.
  Polygon apply(const Polygon& poly) const;
  Line apply(const Line& l) const;

  Isometry inverse() const;
  /// (this * other)(p) = this(other(p)).
  Isometry operator*(const Isometry& other) const;
  double determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  bool is_identity(double tol = kEps) const;

  const std::array<double, 4>& matrix() const { return m_; }
  Point translation() const { return t_; }

 private:
  std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};  // row-major 2x2
  Point t_{0.0, 0.0};
};

}  // namespace origami
