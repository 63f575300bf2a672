#pragma once

#include "edisc/linalg.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace edisc {

using Bits = boost::dynamic_bitset<>;

/// Finite set of points of Z^n (or Q^n for derived sets), kept sorted and free of duplicates.
struct PointConfiguration {
    int dim = 0;
    std::vector<QVec> points;

    PointConfiguration() = default;
    PointConfiguration(int d, std::vector<QVec> pts);

    size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool is_lattice() const;
    int index_of(const QVec& p) const;  // -1 if absent
    bool operator==(const PointConfiguration& o) const;
    bool operator<(const PointConfiguration& o) const;
};

PointConfiguration make_config(int dim, const std::vector<std::vector<long>>& pts);

/// Inner facet: normal . x >= offset, tight exactly on `incident`.
struct Facet {
    QVec normal;       // ambient covector
    Rational offset;
    QVec span_normal;  // covector in frame coordinates
    Rational span_offset;
    Bits incident;     // over Hull::points
};

struct Hull {
    int ambient = 0;
    int dim = -1;
    std::vector<QVec> points;
    std::vector<QVec> local;  // frame coordinates of points
    Frame frame;
    std::vector<Facet> facets;
    Bits vertex_mask;
    std::vector<int> vertices;
    mutable std::optional<Rational> volume;  // filled on first use
};

Hull compute_hull(int ambient, const std::vector<QVec>& pts);

struct Polytope {
    int ambient = 0;
    std::vector<QVec> vertices;  // sorted
    std::shared_ptr<const Hull> hull;

    int dim() const { return hull ? hull->dim : -1; }
    bool is_point() const { return vertices.size() == 1; }
    bool operator==(const Polytope& o) const;
};

Polytope convex_hull(int ambient, const std::vector<QVec>& pts);
Polytope convex_hull(const PointConfiguration& c);

/// Points of `pts` minimizing gamma.
std::vector<int> minimizers(const std::vector<QVec>& pts, const QVec& gamma);

PointConfiguration support_face(const PointConfiguration& c, const QVec& gamma);
Polytope support_face(const Polytope& p, const QVec& gamma);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope minkowski_sum(const std::vector<Polytope>& ps, int ambient);
Polytope scale(const Polytope& p, const Rational& s);
Polytope translate(const Polytope& p, const QVec& t);
Polytope point_polytope(const QVec& p);

/// Point sets: all sums a + b.
std::vector<QVec> pointwise_sum(const std::vector<QVec>& a, const std::vector<QVec>& b);

struct Face {
    Bits points;  // over Hull::points
    int dim = 0;
    QVec witness;  // relative interior of the normal cone; zero for the whole polytope
};

/// Every nonempty face, the polytope itself first, then by decreasing dimension.
std::vector<Face> enumerate_faces(const Hull& h);

/// Triangulation by pulling vertices; simplices are lists of indices into Hull::points.
std::vector<std::vector<int>> pulling_triangulation(const Hull& h);

/// Volume normalized to 1 on unimodular simplices, measured in the lattice of the affine span.
Rational normalized_volume(const Polytope& p);

/// Euclidean volume in the ambient space; zero unless full-dimensional.
Rational euclidean_volume(const Polytope& p);

/// Integral of x over p in the ambient space; zero unless full-dimensional.
QVec moment(const Polytope& p);

/// Regular subdivision induced by heights; cells are point-index sets (all points on the cell).
std::vector<std::vector<int>> regular_subdivision(const std::vector<QVec>& pts, int ambient,
                                                  const std::vector<Rational>& heights);

std::vector<int> bits_to_indices(const Bits& b);

}  // namespace edisc
