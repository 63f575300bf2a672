#pragma once

#include "edisc/fiber.hpp"
#include "edisc/tuples.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edisc {

Facing trivial_facing(const Tuple& a);
bool is_trivial_facing(const Tuple& a, const Facing& g);

/// Index of the lattice spanned by differences of the Cayley points of the facing.
Integer facing_index(const Tuple& a, const Facing& g);

/// Mixed-volume difference at the facing; 1 at the tuple itself.
Integer milnor_number(const Tuple& a, const Facing& g);
Integer milnor_number_unchecked(const Tuple& a, const Facing& g);
/// Same with the compositions summing to space - dim of the facing sum, for tuples spanning fewer dimensions.
Integer milnor_number_in(const Tuple& a, const Facing& g, int space);

struct MilnorDatum {
    Facing facing;
    Integer milnor;
    Integer index;
    Integer jump;  // signed change of the Euler characteristic
};

MilnorDatum milnor_datum(const Tuple& a, const Facing& g);

/// Milnor number of the Cayley configuration at the lifted facing, and the sum over J containing the support of the Milnor numbers of AJ.
std::pair<Integer, Integer> cayley_milnor_sides(const Tuple& a, const Facing& g);

/// Facing of a facing, re-indexed inside the facing's own tuple; nothing if it is not one.
std::optional<Facing> restrict_facing(const Facing& outer, const Facing& inner);

struct DivisorComponent {
    Facing facing;
    Integer multiplicity;       // i * c
    Rational factor_degree;     // total degree of the mixed discriminant of the facing; 0 when it is constant
};

struct EulerDivisor {
    int sign_exponent = 0;  // n - k
    std::vector<DivisorComponent> components;

    Rational total_degree() const;
};

EulerDivisor euler_divisor(const Tuple& a);

Integer generic_euler_characteristic(const Tuple& a);

/// Homogeneity degree in the coefficients of member i.
Integer degree(const Tuple& a, int i);
/// Same, for a tuple whose sum spans fewer dimensions than the ambient space.
Integer degree_in_span(const Tuple& a, int i);
Integer total_degree(const Tuple& a);
Rational quasidegree(const Tuple& a, const QVec& v);

/// Exponent of each Cayley principal determinant in the factorization; support sets in increasing order.
std::vector<std::pair<std::vector<int>, Integer>> decomposition_exponents(const Tuple& a);
/// Degree of the reduced principal determinant of the Cayley configuration on I.
Integer cayley_factor_degree(const Tuple& a, const std::vector<int>& I);
/// Total degree of the principal determinant rebuilt from its Cayley factors.
Integer decomposition_degree(const Tuple& a);

struct ObstructionTable {
    std::vector<Facing> facings;  // increasing (dim of sum, support size, parts)
    std::vector<Integer> index;
    IMat matrix;                  // matrix(g, b) = i_g * c^g_b
    QMat inverse;
    int tuple_position = -1;      // column of the tuple itself

    Rational obstruction(int g) const { return inverse(g, tuple_position); }
};

ObstructionTable obstruction_table(const Tuple& a);

/// Degree of the mixed discriminant in the coefficients of member i, from the obstruction table.
Rational discriminant_degree(const Tuple& a, int i);
Rational discriminant_degree(const ObstructionTable& t, const Tuple& a, int i);
/// Total degree of the mixed discriminant of a tuple taken in the span of its sum; 0 unless relevant there.
Rational discriminant_total_degree(const Tuple& a);

/// Newton polytope of the mixed discriminant: obstruction-weighted sum of the facings' mixed secondary polytopes.
VirtualPolytope newton_delta(const Tuple& a);

int resultant_codim(const Tuple& a);

struct BifurcationVerdict {
    bool empty = false;
    std::string reason;
    int codim = 0;
};

/// Members live in Z^n x Z^m; the first n coordinates are the variables.
BifurcationVerdict bifurcation_emptiness(const Tuple& h, int n);
Tuple project_tuple(const Tuple& h, int n);
bool projection_injective(const std::vector<QVec>& pts, int ambient, int n);

}  // namespace edisc
