#include "edisc/linalg.hpp"

#include <utility>

namespace edisc {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    const int R = static_cast<int>(m.rows()), C = static_cast<int>(m.cols());
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        int p = -1;
        for (int i = row; i < R; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != row) m.row(p).swap(m.row(row));
        Rational inv = Rational(1) / m(row, c);
        for (int j = c; j < C; ++j) m(row, j) *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == row || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (int j = c; j < C; ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

int rank_of_rows(const std::vector<QVec>& rows, int dim) {
    if (rows.empty()) return 0;
    QMat m(rows.size(), dim);
    for (size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
    return rank(std::move(m));
}

QMat nullspace(const QMat& m) {
    QMat r = m;
    auto piv = rref(r);
    const int C = static_cast<int>(m.cols());
    std::vector<bool> is_pivot(C, false);
    for (int p : piv) is_pivot[p] = true;
    QMat basis = QMat::Zero(C, C - static_cast<int>(piv.size()));
    int col = 0;
    for (int f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        basis(f, col) = 1;
        for (size_t i = 0; i < piv.size(); ++i) basis(piv[i], col) = -r(i, f);
        ++col;
    }
    return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    const int C = static_cast<int>(m.cols());
    QMat aug(m.rows(), C + 1);
    aug.leftCols(C) = m;
    aug.col(C) = b;
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == C) return std::nullopt;
    QVec x = QVec::Zero(C);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, C);
    return x;
}

Rational determinant(QMat m) {
    const int n = static_cast<int>(m.rows());
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) { m.row(p).swap(m.row(c)); det = -det; }
        det *= m(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            Rational f = m(i, c) / m(c, c);
            for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

QMat inverse(const QMat& m) {
    const int n = static_cast<int>(m.rows());
    QMat aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = QMat::Identity(n, n);
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] >= n) throw Contradiction("singular matrix");
    return aug.rightCols(n);
}

namespace {

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

struct SmithWork {
    IMat D, U, Uinv, V;

    void swap_rows(int a, int b) {
        if (a == b) return;
        D.row(a).swap(D.row(b));
        U.row(a).swap(U.row(b));
        Uinv.col(a).swap(Uinv.col(b));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        D.col(a).swap(D.col(b));
        V.col(a).swap(V.col(b));
    }
    // row i -= q * row t
    void row_sub(int i, int t, const Integer& q) {
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        Uinv.col(t) += q * Uinv.col(i);
    }
    void col_sub(int j, int t, const Integer& q) {
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
    }
    void negate_row(int i) {
        D.row(i) = -D.row(i);
        U.row(i) = -U.row(i);
        Uinv.col(i) = -Uinv.col(i);
    }
};

}  // namespace

SmithForm smith_form(const IMat& m) {
    const int R = static_cast<int>(m.rows()), C = static_cast<int>(m.cols());
    SmithWork w{m, IMat::Identity(R, R), IMat::Identity(R, R), IMat::Identity(C, C)};
    int t = 0;
    for (; t < std::min(R, C); ++t) {
        int bi = -1, bj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j)
                if (w.D(i, j) != 0 && (bi < 0 || iabs(w.D(i, j)) < iabs(w.D(bi, bj)))) { bi = i; bj = j; }
        if (bi < 0) break;
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        for (;;) {
            for (int i = t + 1; i < R; ++i)
                if (w.D(i, t) != 0) w.row_sub(i, t, Integer(w.D(i, t) / w.D(t, t)));
            for (int j = t + 1; j < C; ++j)
                if (w.D(t, j) != 0) w.col_sub(j, t, Integer(w.D(t, j) / w.D(t, t)));
            int si = -1, sj = -1;
            for (int i = t + 1; i < R; ++i)
                if (w.D(i, t) != 0 && (si < 0 || iabs(w.D(i, t)) < iabs(w.D(si, t)))) si = i;
            for (int j = t + 1; j < C; ++j)
                if (w.D(t, j) != 0 && (sj < 0 || iabs(w.D(t, j)) < iabs(w.D(t, sj)))) sj = j;
            if (si < 0 && sj < 0) break;
            if (si >= 0) w.swap_rows(t, si);
            else w.swap_cols(t, sj);
        }
        if (w.D(t, t) < 0) w.negate_row(t);
    }
    SmithForm s;
    s.U = std::move(w.U);
    s.Uinv = std::move(w.Uinv);
    s.V = std::move(w.V);
    s.rank = t;
    for (int i = 0; i < t; ++i) s.diagonal.push_back(w.D(i, i));
    return s;
}

IMat integer_kernel(const IMat& m) {
    auto s = smith_form(m);
    return s.V.rightCols(m.cols() - s.rank);
}

Integer saturation_index(const IMat& m) {
    auto s = smith_form(m);
    Integer p = 1;
    for (auto& d : s.diagonal) p *= d;
    return p;
}

IMat hermite_rows(IMat m) {
    const int R = static_cast<int>(m.rows()), C = static_cast<int>(m.cols());
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        for (;;) {
            int p = -1;
            for (int i = row; i < R; ++i)
                if (m(i, c) != 0 && (p < 0 || iabs(m(i, c)) < iabs(m(p, c)))) p = i;
            if (p < 0) break;
            if (p != row) m.row(p).swap(m.row(row));
            bool clean = true;
            for (int i = row + 1; i < R; ++i) {
                if (m(i, c) == 0) continue;
                m.row(i) -= Integer(m(i, c) / m(row, c)) * m.row(row);
                if (m(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (m(row, c) == 0) continue;
        if (m(row, c) < 0) m.row(row) = -m.row(row);
        for (int i = 0; i < row; ++i) {
            Integer q = m(i, c) / m(row, c);
            if (m(i, c) - q * m(row, c) < 0) q -= 1;
            m.row(i) -= q * m.row(row);
        }
        ++row;
    }
    return m;
}

IMat to_imat(const std::vector<QVec>& cols, int dim) {
    IMat m(dim, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        QVec p = primitive(cols[j]);
        for (int i = 0; i < dim; ++i) m(i, j) = numerator(p[i]);
    }
    return m;
}

namespace {

QMat to_qmat(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

}  // namespace

QVec Frame::coords(const QVec& x) const { return U.topRows(rank) * (x - base); }

QVec Frame::point(const QVec& c) const { return base + Uinv.leftCols(rank) * c; }

QVec Frame::lift_covector(const QVec& w) const { return U.topRows(rank).transpose() * w; }

QMat Frame::annihilator() const { return U.bottomRows(ambient - rank); }

Frame make_frame(const std::vector<QVec>& pts, int ambient) {
    if (pts.empty()) throw InputError("frame of an empty point set");
    Frame f;
    f.ambient = ambient;
    f.base = pts.front();
    // a spanning subset of the differences; the saturated lattice depends only on the span
    std::vector<QVec> diffs, echelon;
    std::vector<int> lead;
    for (size_t i = 1; i < pts.size() && static_cast<int>(diffs.size()) < ambient; ++i) {
        QVec d = pts[i] - f.base, e = d;
        for (size_t k = 0; k < echelon.size(); ++k)
            if (!e[lead[k]].is_zero()) e -= echelon[k] * (e[lead[k]] / echelon[k][lead[k]]);
        int l = 0;
        while (l < ambient && e[l].is_zero()) ++l;
        if (l == ambient) continue;
        diffs.push_back(d);
        echelon.push_back(e);
        lead.push_back(l);
    }
    if (diffs.empty()) {
        f.U = QMat::Identity(ambient, ambient);
        f.Uinv = f.U;
        return f;
    }
    auto s = smith_form(to_imat(diffs, ambient));
    f.rank = s.rank;
    f.U = to_qmat(s.U);
    f.Uinv = to_qmat(s.Uinv);
    if (f.rank < ambient) {
        IMat ann = hermite_rows(s.U.bottomRows(ambient - f.rank));
        f.U.bottomRows(ambient - f.rank) = to_qmat(ann);
        f.Uinv = inverse(f.U);
    }
    return f;
}

}  // namespace edisc
