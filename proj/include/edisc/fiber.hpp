#pragma once

#include "edisc/tuples.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace edisc {

/// A polytope known only through its support function h(w) = min over P of w.x and a point attaining it.
struct SupportOracle {
    int dim = 0;
    std::function<Rational(const QVec&)> support;
    std::function<QVec(const QVec&)> point;
};

/// Grows the hull of oracle vertices until every facet is tight.
Polytope polytope_from_oracle(const SupportOracle& o);

/// Measure on the base: Lebesgue measure of R^n, or the lattice-normalized measure of the image's own span.
enum class BaseMeasure { Ambient, Image };

/// Support function of the fiber polytope of conv(pts) over the first n coordinates.
Rational fiber_support(const std::vector<QVec>& pts, int ambient, int n, const QVec& w, BaseMeasure m);
/// Point of the fiber polytope minimizing w: the integral of a section along the lower envelope.
QVec fiber_point(const std::vector<QVec>& pts, int ambient, int n, const QVec& w, BaseMeasure m);

/// Integral of the fibers over the image of the projection to the first n coordinates.
Polytope fiber_polytope(const Polytope& h, int n);

/// Polarization of (n+1)! times the fiber polytope; takes n+1 polytopes in R^n x R^m.
Polytope mixed_fiber_polytope(const std::vector<Polytope>& hs, int n);
SupportOracle mixed_fiber_oracle(const std::vector<Polytope>& hs, int n);

/// Sum of mixed fiber polytopes over positive compositions of n+1; members live in Z^n x Z^m.
Polytope newton_E_pi(const Tuple& h, int n);
SupportOracle newton_E_pi_oracle(const Tuple& h, int n);

/// Whether newton_E_pi is a point, decided by injectivity of the projection.
bool is_point_criterion(const Tuple& h, int n);

/// Each monomial of each member gets its own parameter coordinate: A_i lifted into Z^n x Z^N.
Tuple universal_lift(const Tuple& a);

/// Translate so that the lexicographically smallest vertex is the origin.
Polytope translate_to_origin(const Polytope& p);

/// Signed Minkowski combination, stored through its piecewise-linear support function.
struct VirtualPolytope {
    int ambient = 0;
    std::vector<std::pair<Rational, Polytope>> terms;
    std::vector<QVec> directions;  // one interior covector per maximal cone of the common refinement
    std::vector<QVec> pieces;      // support(w) = pieces[c] . w on cone c
    bool convex = false;

    Rational support(const QVec& w) const;
    /// The polytope when the combination is convex; throws otherwise.
    Polytope polytope() const;
};

VirtualPolytope signed_combination(const std::vector<std::pair<Rational, Polytope>>& terms, int ambient);

}  // namespace edisc
