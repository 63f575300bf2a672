#pragma once

#include "edisc/tuples.hpp"

#include <vector>

namespace edisc {

struct Triangulation {
    PointConfiguration config;
    std::vector<std::vector<int>> simplices;  // sorted index lists into config.points
    std::vector<Rational> heights;            // lift inducing the simplices

    bool operator==(const Triangulation& o) const { return simplices == o.simplices; }
    bool operator<(const Triangulation& o) const { return simplices < o.simplices; }
};

/// Volume of the simplex in the lattice of the affine span of the whole configuration.
Rational simplex_volume(const PointConfiguration& c, const std::vector<int>& simplex);

/// Cells of a subdivision that are all simplices covering the hull.
bool is_triangulation(const PointConfiguration& c, const std::vector<std::vector<int>>& cells);

/// Lower faces of the lifted configuration project exactly onto the simplices.
bool verify_lift(const Triangulation& t);

/// Inequalities h . row >= 0 cutting out the closed cone of heights inducing t.
std::vector<QVec> secondary_cone(const Triangulation& t);

/// All regular triangulations, found by walking across the walls of the secondary fan.
std::vector<Triangulation> coherent_triangulations(const PointConfiguration& h);

/// Distinct triangulations induced by seeded random heights, for configurations too large to enumerate.
std::vector<Triangulation> sampled_triangulations(const PointConfiguration& h, int count, unsigned seed);

/// Coordinate of (member i, point j of A_i) in the flattened coefficient space.
std::vector<int> coefficient_offsets(const Tuple& a);

/// Exponents of the coefficients in the monomial of a triangulation of the full Cayley configuration.
std::vector<Integer> triangulation_monomial(const Tuple& a, const Triangulation& t);

/// Sum of the exponents of each member.
std::vector<Integer> group_degrees(const Tuple& a, const std::vector<Integer>& monomial);

/// Distinct triangulation monomials, sorted; no relevance check.
std::vector<std::vector<Integer>> secondary_vertices(const Tuple& a);

Polytope mixed_secondary_polytope(const Tuple& a);
Polytope mixed_secondary_polytope_unchecked(const Tuple& a);

}  // namespace edisc
