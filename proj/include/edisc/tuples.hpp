#pragma once

#include "edisc/lattice.hpp"

#include <vector>

namespace edisc {

/// Subsets of the index set of a tuple, as bit masks.
using Mask = unsigned;

std::vector<int> mask_indices(Mask m);
Mask indices_mask(const std::vector<int>& idx);

struct Tuple {
    int dim = 0;
    std::vector<PointConfiguration> members;

    Tuple() = default;
    Tuple(int d, std::vector<PointConfiguration> m);

    int size() const { return static_cast<int>(members.size()); }
    Mask full() const { return size() == 0 ? 0u : (~0u >> (32 - size())); }
    Tuple sub(Mask J) const;
    /// Minkowski sum of the members in J as a point set ({0} for the empty set).
    std::vector<QVec> sum_points(Mask J) const;
    bool operator==(const Tuple& o) const;
    bool operator<(const Tuple& o) const;
};

/// Dimension of the convex hull of the sum of the members in J.
int sum_dim(const Tuple& a, Mask J);
int tuple_dim(const Tuple& a, Mask J);
inline int tuple_dim(const Tuple& a) { return tuple_dim(a, a.full()); }
int min_dim(const Tuple& a);
Mask maximal_essential_subtuple(const Tuple& a);
bool is_essential(const Tuple& a);
bool is_relevant(const Tuple& a);
/// Relevance inside the affine span of the sum instead of the ambient space.
bool is_relevant_in_span(const Tuple& a);
bool is_linearly_independent(const Tuple& a);

/// A face of a tuple: member-wise support faces for one covector.
struct TupleFace {
    Tuple face;
    QVec witness;

    bool is_face_of(const TupleFace& o) const;
};

/// One entry per face of the hull of the sum; the tuple itself comes first.
std::vector<TupleFace> enumerate_faces(const Tuple& a);

/// Points (e_i, a) for i in I, a in A_i, in Z^{|I|} x Z^n; I listed in increasing order.
PointConfiguration cayley_config(const Tuple& a, const std::vector<int>& I);

struct Facing {
    std::vector<int> support;
    std::vector<PointConfiguration> parts;  // aligned with support
    QVec witness;                           // covector on Z^{k+1} x Z^n

    Tuple as_tuple(int dim) const { return Tuple(dim, parts); }
    std::vector<QVec> sum_points(int dim) const;
    bool is_trivial(const Tuple& a) const;
    bool operator==(const Facing& o) const { return support == o.support && parts == o.parts; }
    bool operator<(const Facing& o) const;
};

/// Faces of the Cayley configuration, grouped by support.
std::vector<Facing> enumerate_facings(const Tuple& a);

/// Same set, built as the union over nonempty I of the faces of the subtuple AI.
std::vector<Facing> enumerate_facings_by_subtuples(const Tuple& a);

bool is_facing(const Tuple& a, const Facing& g);

/// Literal importance test: a face G' of the tuple restricting to the facing with no smaller-dimensional extension.
bool is_important(const Tuple& a, const Facing& g);
bool is_important(const Tuple& a, const Facing& g, const std::vector<TupleFace>& faces);

struct EssentialFacing {
    std::vector<int> support;
    std::vector<PointConfiguration> parts;
    int dim = 0;
    bool trivial = false;
    std::vector<int> provenance;  // faces whose maximal essential subtuple this is

    bool same_as(const EssentialFacing& o) const { return support == o.support && parts == o.parts; }
};

struct EssentialStructure {
    Tuple tuple;
    std::vector<TupleFace> faces;
    std::vector<EssentialFacing> facings;
    std::vector<std::vector<bool>> adjacent;  // adjacent[e][f]: e is adjacent to f

    int trivial_index() const;
};

EssentialStructure essential_facings(const Tuple& a);

/// Chain E_1, ..., E_k ending in e with consecutive adjacency and dim E_i = -i; throws Contradiction if none exists.
std::vector<int> dimension_chain(const EssentialStructure& s, int e);

/// Maximal fiber dimension of conv(sum of v-faces of H) over the first n coordinates.
int covector_dimension(const Tuple& h, int n, const QVec& v);

}  // namespace edisc
