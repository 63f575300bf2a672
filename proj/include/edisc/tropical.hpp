#pragma once

#include "edisc/lp.hpp"
#include "edisc/polytope.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace edisc {

/// Rational polyhedral cone { x : ge . x >= 0, eq . x = 0 }, normalized so that eq holds all implicit equalities.
struct Cone {
    int ambient = 0;
    std::vector<QVec> ge;
    std::vector<QVec> eq;
    int dim = 0;
    QVec interior;  // relative interior point
    IMat lattice;   // saturated integer basis of the linear span, as columns

    bool contains(const QVec& x) const;
    bool contains_in_relint(const QVec& x) const;
    bool same_as(const Cone& o) const;
};

Cone make_cone(int ambient, const std::vector<QVec>& ge, const std::vector<QVec>& eq);
Cone intersect(const Cone& a, const Cone& b);
/// Generic point of the relative interior.
QVec sample_point(const Cone& c, std::mt19937_64& rng);

struct WeightedFan {
    int ambient = 0;
    std::vector<Cone> cones;  // maximal cones
    std::vector<Rational> weights;

    bool empty() const { return cones.empty(); }
    int dim() const { return cones.empty() ? -1 : cones[0].dim; }
};

/// Normal cones of the edges of p, weighted by lattice length; empty for a point.
WeightedFan dual_fan(const Polytope& p);

/// Sum of the weights of the maximal cones through x.
Rational weight_at(const WeightedFan& f, const QVec& x);
/// Same support and weights, possibly with different subdivisions.
bool equivalent(const WeightedFan& f, const WeightedFan& g);
bool is_balanced(const WeightedFan& f);
/// Every positive-dimensional maximal cone contains a nonzero vector.
bool is_unbounded(const WeightedFan& f);

/// Fan displacement rule for one fixed displacement vector.
WeightedFan stable_intersection(const WeightedFan& f, const WeightedFan& g, const QVec& displacement);
/// Two seeded displacements that must agree; throws Contradiction when three attempts disagree.
WeightedFan stable_intersection(const WeightedFan& f, const WeightedFan& g, std::uint64_t seed = 1);
WeightedFan stable_intersection(const std::vector<WeightedFan>& fs, int ambient, std::uint64_t seed = 1);
QVec displacement_vector(int ambient, std::uint64_t seed);

/// Weight of the origin in the stable intersection of the dual fans; the codimensions must add to the ambient dimension.
Rational tropical_multiplicity(const std::vector<Polytope>& ps, int ambient);

struct DegenerateOffset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Intersection number with offset + span(basis); throws DegenerateOffset when the offset is not generic.
Rational tropical_intersection_number(const WeightedFan& f, const std::vector<QVec>& basis, const QVec& offset);

/// Pushforward under an integer matrix; cones whose image drops dimension are discarded.
WeightedFan stable_image(const WeightedFan& f, const QMat& map);

/// Relatively open polyhedron: closure plus a strictness flag per inequality.
struct OpenPolyhedron {
    Polyhedron closure;
    std::vector<bool> strict;
};

OpenPolyhedron open_simplex(int ambient, const std::vector<QVec>& vertices);
OpenPolyhedron open_polyhedron(const Polyhedron& closure);

struct PurityComponent {
    int pieces = 0;
    int dim = 0;
    int affine_hull_dim = 0;
    bool in_affine_subspace = false;
};

struct PurityReport {
    int ambient = 0;
    int fan_dim = -1;
    int polyhedron_dim = -1;
    int k = 0;
    int intersection_dim = -1;  // -1 when empty
    int boundary_dim = -1;
    std::vector<PurityComponent> components;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

PurityReport purity_check(const WeightedFan& t, const OpenPolyhedron& p);

struct PurityTrial {
    std::uint64_t seed = 0;
    std::vector<Polytope> polytopes;
    WeightedFan fan;
    std::vector<QVec> simplex;
    PurityReport report;
};

/// One seeded trial: stable intersection of dual fans of random lattice polytopes against a random simplex.
PurityTrial purity_trial(std::uint64_t seed, int max_dim, int max_points, int max_coord);

}  // namespace edisc
