#pragma once

#include "edisc/rational.hpp"

#include <optional>
#include <vector>

namespace edisc {

using IMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m);

int rank(QMat m);
int rank_of_rows(const std::vector<QVec>& rows, int dim);

/// Basis of the rational null space of m (as columns).
QMat nullspace(const QMat& m);

/// Solves m x = b, returning nothing when the system is inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);

Rational determinant(QMat m);

QMat inverse(const QMat& m);

/// Diagonal form U * M * V = D with U, V unimodular.
struct SmithForm {
    IMat U, Uinv, V;
    std::vector<Integer> diagonal;  // nonzero diagonal entries, length = rank
    int rank = 0;
};

SmithForm smith_form(const IMat& m);

/// Saturated integer basis (columns) of { x in Z^n : m x = 0 }.
IMat integer_kernel(const IMat& m);

/// Index of the lattice spanned by the columns of m inside its saturation.
Integer saturation_index(const IMat& m);

/// Row-style Hermite normal form of an integer matrix with independent rows.
IMat hermite_rows(IMat m);

IMat to_imat(const std::vector<QVec>& cols, int dim);

/// Affine frame of a finite set of rational points: a base point and a
/// unimodular change of coordinates carrying the lattice of the affine span
/// onto the first `rank` coordinate axes.
struct Frame {
    int ambient = 0;
    int rank = 0;
    QVec base;
    QMat U, Uinv;

    QVec coords(const QVec& x) const;
    QVec point(const QVec& c) const;
    QVec lift_covector(const QVec& w) const;
    /// Covectors vanishing on the direction space, as rows.
    QMat annihilator() const;
};

Frame make_frame(const std::vector<QVec>& pts, int ambient);

}  // namespace edisc
