#include "edisc/secondary.hpp"

#include "edisc/lp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>

namespace edisc {

namespace {

struct Local {
    int rank = 0;
    std::vector<QVec> coords;
};

Local local_coords(const PointConfiguration& c) {
    Frame fr = make_frame(c.points, c.dim);
    Local l;
    l.rank = fr.rank;
    for (auto& p : c.points) l.coords.push_back(fr.coords(p));
    return l;
}

Rational simplex_det(const Local& l, const std::vector<int>& s) {
    const int r = l.rank;
    if (static_cast<int>(s.size()) != r + 1) return 0;
    QMat m(r, r);
    for (int j = 0; j < r; ++j) m.col(j) = l.coords[s[j + 1]] - l.coords[s[0]];
    return abs(determinant(m));
}

// Affine coefficients of p on the vertices of s.
QVec barycentric(const Local& l, const std::vector<int>& s, const QVec& p) {
    const int r = l.rank;
    QMat m(r + 1, r + 1);
    QVec b(r + 1);
    for (int j = 0; j <= r; ++j) {
        m.block(0, j, r, 1) = l.coords[s[j]];
        m(r, j) = 1;
    }
    b.head(r) = p;
    b[r] = 1;
    auto x = solve(m, b);
    if (!x) throw Contradiction("degenerate simplex");
    return *x;
}

QVec normalized_row(QVec r) {
    for (Eigen::Index i = 0; i < r.size(); ++i)
        if (r[i].sign() != 0) return r / abs(r[i]);
    return r;
}

std::vector<Rational> generic_heights(size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> d(0, 1000000);
    std::vector<Rational> h(n);
    for (auto& x : h) x = d(rng);
    return h;
}

bool cone_contains(const std::vector<QVec>& rows, const QVec& h) {
    for (auto& r : rows)
        if (r.dot(h).sign() < 0) return false;
    return true;
}

std::vector<Rational> as_heights(const QVec& v) { return std::vector<Rational>(v.begin(), v.end()); }

bool covers(const Local& l, size_t n, const Rational& volume, const std::vector<std::vector<int>>& cells) {
    Rational total = 0;
    for (auto& s : cells) {
        if (static_cast<int>(s.size()) != l.rank + 1) return false;
        for (int i : s)
            if (i < 0 || i >= static_cast<int>(n)) return false;
        Rational v = simplex_det(l, s);
        if (v.sign() == 0) return false;
        total += v;
    }
    return total == volume;
}

}  // namespace

Rational simplex_volume(const PointConfiguration& c, const std::vector<int>& simplex) {
    return simplex_det(local_coords(c), simplex);
}

bool is_triangulation(const PointConfiguration& c, const std::vector<std::vector<int>>& cells) {
    return covers(local_coords(c), c.size(), normalized_volume(convex_hull(c)), cells);
}

bool verify_lift(const Triangulation& t) {
    if (t.heights.size() != t.config.size()) return false;
    return regular_subdivision(t.config.points, t.config.dim, t.heights) == t.simplices;
}

std::vector<QVec> secondary_cone(const Triangulation& t) {
    Local l = local_coords(t.config);
    const int n = static_cast<int>(t.config.size());
    std::set<QVec, LexLess> rows;
    auto add = [&](const std::vector<int>& s, int a) {
        QVec lam = barycentric(l, s, l.coords[a]);
        QVec row = QVec::Zero(n);
        row[a] = 1;
        for (size_t j = 0; j < s.size(); ++j) row[s[j]] -= lam[j];
        rows.insert(normalized_row(row));
    };
    // adjacent simplices: the opposite vertex lies above the other's affine lift
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> ridges;
    for (size_t k = 0; k < t.simplices.size(); ++k) {
        auto& s = t.simplices[k];
        for (size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<int> r;
            for (size_t j = 0; j < s.size(); ++j)
                if (j != drop) r.push_back(s[j]);
            ridges[r].push_back({static_cast<int>(k), s[drop]});
        }
    }
    for (auto& [r, sides] : ridges)
        if (sides.size() == 2) add(t.simplices[sides[0].first], sides[1].second);
    // points left out of every simplex lie above the lift
    std::vector<bool> used(n, false);
    for (auto& s : t.simplices)
        for (int i : s) used[i] = true;
    for (int a = 0; a < n; ++a) {
        if (used[a]) continue;
        for (auto& s : t.simplices) {
            QVec lam = barycentric(l, s, l.coords[a]);
            if (std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return x.sign() >= 0; })) {
                add(s, a);
                break;
            }
        }
    }
    return {rows.begin(), rows.end()};
}

std::vector<Triangulation> coherent_triangulations(const PointConfiguration& h) {
    if (h.empty()) throw InputError("triangulations of an empty configuration");
    const Local l = local_coords(h);
    const Rational volume = normalized_volume(convex_hull(h));
    auto good = [&](const std::vector<std::vector<int>>& cells) { return covers(l, h.size(), volume, cells); };
    std::mt19937_64 rng(0);
    Triangulation start;
    start.config = h;
    for (;;) {
        start.heights = generic_heights(h.size(), rng);
        start.simplices = regular_subdivision(h.points, h.dim, start.heights);
        if (good(start.simplices)) break;
    }
    std::set<Triangulation> seen{start};
    std::deque<Triangulation> todo{start};
    const int n = static_cast<int>(h.size());
    while (!todo.empty()) {
        Triangulation t = todo.front();
        todo.pop_front();
        auto rows = secondary_cone(t);
        for (size_t f = 0; f < rows.size(); ++f) {
            Polyhedron wall(n);
            wall.eq(rows[f], 0);
            for (size_t g = 0; g < rows.size(); ++g)
                if (g != f) wall.ge(rows[g], 0);
            // strict on the others: relative interior of a facet
            auto p = strictly_feasible_point(wall);
            if (!p) continue;
            Rational step = 1;
            for (int tries = 0;; ++tries) {
                if (tries > 200) throw Contradiction("no triangulation across a wall of the secondary fan");
                QVec q = *p - rows[f] * step;
                step /= 2;
                Triangulation nb;
                nb.config = h;
                nb.heights = as_heights(q);
                nb.simplices = regular_subdivision(h.points, h.dim, nb.heights);
                if (!good(nb.simplices) || nb == t) continue;
                if (!cone_contains(secondary_cone(nb), *p)) continue;
                if (seen.insert(nb).second) todo.push_back(nb);
                break;
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Triangulation> sampled_triangulations(const PointConfiguration& h, int count, unsigned seed) {
    if (h.empty()) throw InputError("triangulations of an empty configuration");
    const Local l = local_coords(h);
    const Rational volume = normalized_volume(convex_hull(h));
    std::mt19937_64 rng(seed);
    std::set<Triangulation> out;
    for (int i = 0; i < count; ++i) {
        Triangulation t;
        t.config = h;
        t.heights = generic_heights(h.size(), rng);
        t.simplices = regular_subdivision(h.points, h.dim, t.heights);
        if (covers(l, h.size(), volume, t.simplices)) out.insert(t);
    }
    return {out.begin(), out.end()};
}

std::vector<int> coefficient_offsets(const Tuple& a) {
    std::vector<int> off{0};
    for (auto& m : a.members) off.push_back(off.back() + static_cast<int>(m.size()));
    return off;
}

std::vector<Integer> triangulation_monomial(const Tuple& a, const Triangulation& t) {
    std::vector<int> all(a.size());
    for (int i = 0; i < a.size(); ++i) all[i] = i;
    auto cay = cayley_config(a, all);
    if (!(t.config == cay)) throw InputError("triangulation is not of the Cayley configuration");
    if (!is_triangulation(cay, t.simplices)) throw InputError("not a triangulation of the Cayley configuration");
    auto off = coefficient_offsets(a);
    const int k1 = a.size();
    std::vector<int> group(cay.size()), coord(cay.size());
    for (size_t p = 0; p < cay.size(); ++p) {
        const QVec& x = cay.points[p];
        int g = 0;
        while (x[g].is_zero()) ++g;
        group[p] = g;
        coord[p] = off[g] + a.members[g].index_of(x.tail(a.dim));
    }
    Local l = local_coords(cay);
    std::vector<Integer> mono(off.back(), 0);
    for (auto& s : t.simplices) {
        Integer vol = numerator(simplex_det(l, s));
        std::vector<int> count(k1, 0);
        for (int p : s) ++count[group[p]];
        for (int p : s) {
            bool ok = true;
            for (int j = 0; j < k1 && ok; ++j)
                if (j != group[p] && count[j] < 2) ok = false;
            if (ok) mono[coord[p]] += vol;
        }
    }
    return mono;
}

std::vector<Integer> group_degrees(const Tuple& a, const std::vector<Integer>& monomial) {
    auto off = coefficient_offsets(a);
    std::vector<Integer> d(a.size(), 0);
    for (int i = 0; i < a.size(); ++i)
        for (int j = off[i]; j < off[i + 1]; ++j) d[i] += monomial.at(j);
    return d;
}

std::vector<std::vector<Integer>> secondary_vertices(const Tuple& a) {
    std::vector<int> all(a.size());
    for (int i = 0; i < a.size(); ++i) all[i] = i;
    std::set<std::vector<Integer>> out;
    for (auto& t : coherent_triangulations(cayley_config(a, all))) out.insert(triangulation_monomial(a, t));
    return {out.begin(), out.end()};
}

Polytope mixed_secondary_polytope_unchecked(const Tuple& a) {
    std::vector<QVec> pts;
    for (auto& m : secondary_vertices(a)) {
        QVec v(m.size());
        for (size_t i = 0; i < m.size(); ++i) v[i] = Rational(m[i]);
        pts.push_back(v);
    }
    return convex_hull(coefficient_offsets(a).back(), pts);
}

Polytope mixed_secondary_polytope(const Tuple& a) {
    if (!is_relevant(a)) throw InputError("mixed secondary polytope needs a relevant tuple");
    return mixed_secondary_polytope_unchecked(a);
}

}  // namespace edisc
