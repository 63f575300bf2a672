#pragma once

#include "edisc/polytope.hpp"

#include <vector>

namespace edisc {

/// Dimension of the affine span; -1 for an empty set.
int affine_dim(const std::vector<QVec>& pts, int ambient);

/// Normalized mixed volume; zero unless the sum of the arguments spans exactly as many dimensions as there are arguments.
Rational mixed_volume(const std::vector<Polytope>& ps, int ambient);

/// Mixed volume of a polytope list given with multiplicities.
Rational mixed_volume(const std::vector<Polytope>& ps, const std::vector<int>& mult, int ambient);

/// Polarized moment; takes ambient + 1 arguments, diagonal value (n+1)! times the moment.
QVec mixed_moment(const std::vector<Polytope>& ps, int ambient);
QVec mixed_moment(const std::vector<Polytope>& ps, const std::vector<int>& mult, int ambient);

/// Index of the difference lattice of the points inside its saturation.
Integer lattice_index(const std::vector<QVec>& pts, int ambient);
Integer lattice_index(const PointConfiguration& c);

/// Quotient map along the affine span of a point set.
struct Projection {
    int ambient = 0;
    QMat map;  // rows: a basis of the integer covectors vanishing on the span directions

    int target_dim() const { return static_cast<int>(map.rows()); }
    QVec operator()(const QVec& x) const { return map * x; }
};

Projection projection_along(const std::vector<QVec>& pts, int ambient);

PointConfiguration project_along(const PointConfiguration& x, const PointConfiguration& s);
PointConfiguration project_points(const Projection& p, const std::vector<QVec>& pts);

}  // namespace edisc
