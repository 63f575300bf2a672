#include "edisc/lattice.hpp"

#include <map>

namespace edisc {

int affine_dim(const std::vector<QVec>& pts, int ambient) {
    if (pts.empty()) return -1;
    std::vector<QVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    return rank_of_rows(diffs, ambient);
}

namespace {

Rational binomial(int n, int k) {
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// Sum over all sub-multisets c <= mult of sign * prod binom(mult_j, c_j) * f(sum c_j P_j).
template <class T, class F>
T polarize(const std::vector<Polytope>& ps, const std::vector<int>& mult, int ambient, int total, T zero, F f) {
    const size_t t = ps.size();
    std::vector<int> c(t, 0);
    // each partial sum extends one visited earlier by a dilate of its first summand
    std::map<std::vector<int>, Polytope> sums;
    sums.emplace(c, point_polytope(QVec::Zero(ambient)));
    T acc = zero;
    for (;;) {
        size_t j = 0;
        while (j < t && c[j] == mult[j]) c[j++] = 0;
        if (j == t) break;
        ++c[j];
        int size = 0;
        Rational weight = 1;
        size_t first = t;
        for (size_t k = 0; k < t; ++k) {
            size += c[k];
            weight *= binomial(mult[k], c[k]);
            if (c[k] > 0 && first == t) first = k;
        }
        auto prev = c;
        prev[first] = 0;
        std::vector<QVec> dilate;
        for (auto& v : ps[first].vertices) dilate.push_back(v * Rational(c[first]));
        Polytope sum = convex_hull(ambient, pointwise_sum(sums.at(prev).vertices, dilate));
        if ((total - size) % 2) weight = -weight;
        acc = acc + f(sum) * weight;
        sums.emplace(c, std::move(sum));
    }
    return acc;
}

}  // namespace

Rational mixed_volume(const std::vector<Polytope>& ps, const std::vector<int>& mult, int ambient) {
    int m = 0;
    for (size_t k = 0; k < ps.size(); ++k) {
        if (ps[k].ambient != ambient) throw InputError("mixed volume: ambient dimension mismatch");
        if (mult[k] < 0) throw InputError("mixed volume: negative multiplicity");
        m += mult[k];
    }
    if (m == 0) return 1;
    std::vector<QVec> sum{QVec::Zero(ambient)};
    for (size_t k = 0; k < ps.size(); ++k)
        if (mult[k] > 0) sum = convex_hull(ambient, pointwise_sum(sum, ps[k].vertices)).vertices;
    if (affine_dim(sum, ambient) != m) return 0;
    Rational v = polarize(ps, mult, ambient, m, Rational(0), [&](const Polytope& q) {
        return q.dim() == m ? normalized_volume(q) : Rational(0);
    });
    return v / factorial(m);
}

Rational mixed_volume(const std::vector<Polytope>& ps, int ambient) {
    return mixed_volume(ps, std::vector<int>(ps.size(), 1), ambient);
}

QVec mixed_moment(const std::vector<Polytope>& ps, const std::vector<int>& mult, int ambient) {
    int m = 0;
    for (size_t k = 0; k < ps.size(); ++k) {
        if (ps[k].ambient != ambient) throw InputError("mixed moment: ambient dimension mismatch");
        m += mult[k];
    }
    if (m != ambient + 1) throw InputError("mixed moment takes ambient dimension + 1 arguments");
    return polarize(ps, mult, ambient, m, QVec(QVec::Zero(ambient)), [](const Polytope& q) { return moment(q); });
}

QVec mixed_moment(const std::vector<Polytope>& ps, int ambient) {
    return mixed_moment(ps, std::vector<int>(ps.size(), 1), ambient);
}

Integer lattice_index(const std::vector<QVec>& pts, int ambient) {
    if (pts.empty()) throw InputError("lattice index of an empty set");
    std::vector<QVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        QVec d = pts[i] - pts[0];
        for (Eigen::Index k = 0; k < d.size(); ++k)
            if (!is_integer(d[k])) throw InputError("lattice index needs lattice points");
        diffs.push_back(d);
    }
    if (diffs.empty()) return 1;
    IMat m(ambient, diffs.size());
    for (size_t j = 0; j < diffs.size(); ++j)
        for (int i = 0; i < ambient; ++i) m(i, j) = numerator(diffs[j][i]);
    return saturation_index(m);
}

Integer lattice_index(const PointConfiguration& c) { return lattice_index(c.points, c.dim); }

Projection projection_along(const std::vector<QVec>& pts, int ambient) {
    Projection p;
    p.ambient = ambient;
    if (pts.empty()) {
        p.map = QMat::Identity(ambient, ambient);
        return p;
    }
    p.map = make_frame(pts, ambient).annihilator();
    return p;
}

PointConfiguration project_points(const Projection& p, const std::vector<QVec>& pts) {
    std::vector<QVec> out;
    for (auto& x : pts) out.push_back(p(x));
    return PointConfiguration(p.target_dim(), std::move(out));
}

PointConfiguration project_along(const PointConfiguration& x, const PointConfiguration& s) {
    if (x.dim != s.dim) throw InputError("project_along: ambient dimension mismatch");
    return project_points(projection_along(s.points, s.dim), x.points);
}

}  // namespace edisc
