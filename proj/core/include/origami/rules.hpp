#pragma once

// Huzita-Justin fold-line constructors. Each rule returns every fold line
// satisfying its incidence, sorted canonically by (a, b, c). Every returned
// line has been verified by reflecting the rule's points onto their targets.

#include <vector>

#include "origami/geometry.hpp"

namespace origami::rules {

/// Line through p and q.
std::vector<Line> o1(Point p, Point q);
/// Fold placing p onto q: the perpendicular bisector.
std::vector<Line> o2(Point p, Point q);
/// Folds placing line l onto line m: one line when parallel, two otherwise.
std::vector<Line> o3(const Line& l, const Line& m);
/// Fold through p perpendicular to l.
std::vector<Line> o4(Point p, const Line& l);
/// Folds through q placing p onto m (0-2 solutions).
std::vector<Line> o5(Point p, const Line& m, Point q);
/// Folds placing p onto m and q onto n simultaneously (0-3 solutions).
std::vector<Line> o6(Point p, const Line& m, Point q, const Line& n);
/// Folds perpendicular to n placing p onto m (0-1 solutions).
std::vector<Line> o7(Point p, const Line& m, const Line& n);

/// Coefficients c0 + c1 t + c2 t^2 + c3 t^3 of the O6 condition, where t
/// parametrizes the image of p along m (image = anchor(m) + t * dir(m)).
struct Cubic {
  double c0 = 0, c1 = 0, c2 = 0, c3 = 0;

  double operator()(double t) const { return ((c3 * t + c2) * t + c1) * t + c0; }
};
Cubic o6_polynomial(Point p, const Line& m, Point q, const Line& n);

/// Real roots of a polynomial of degree <= 3, ascending, Newton-polished.
std::vector<double> real_roots(const Cubic& f);

}  // namespace origami::rules
