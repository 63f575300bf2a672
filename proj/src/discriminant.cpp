#include "edisc/discriminant.hpp"

#include "edisc/secondary.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace edisc {

namespace {

// All a in N^len with |a| = total, optionally with every part positive.
void compositions(int len, int total, bool positive, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len - 1) {
        int rest = total;
        for (int x : cur) rest -= x;
        if (rest < (positive ? 1 : 0)) return;
        cur.push_back(rest);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int x = positive ? 1 : 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(len, total, positive, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> compositions(int len, int total, bool positive) {
    std::vector<std::vector<int>> out;
    if (len == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    compositions(len, total, positive, cur, out);
    return out;
}

Integer as_integer(const Rational& q, const char* what) {
    if (!is_integer(q)) throw Contradiction(std::string(what) + " is not an integer: " + q.str());
    return numerator(q);
}

std::vector<Polytope> member_hulls(const Tuple& a) {
    std::vector<Polytope> out;
    for (auto& m : a.members) out.push_back(convex_hull(m));
    return out;
}

}  // namespace

Facing trivial_facing(const Tuple& a) {
    Facing g;
    for (int i = 0; i < a.size(); ++i) g.support.push_back(i);
    g.parts = a.members;
    g.witness = QVec::Zero(a.size() + a.dim);
    return g;
}

bool is_trivial_facing(const Tuple& a, const Facing& g) { return g.is_trivial(a); }

Integer facing_index(const Tuple& a, const Facing& g) {
    Tuple t(a.dim, g.parts);
    std::vector<int> all(t.size());
    for (int i = 0; i < t.size(); ++i) all[i] = i;
    return lattice_index(cayley_config(t, all));
}

Integer milnor_number_in(const Tuple& a, const Facing& g, int space) {
    const Mask I = indices_mask(g.support);
    const auto gamma_sum = g.sum_points(a.dim);
    const auto full_sum = a.sum_points(I);
    std::vector<QVec> rest;
    std::set_difference(full_sum.begin(), full_sum.end(), gamma_sum.begin(), gamma_sum.end(), std::back_inserter(rest),
                        LexLess{});
    Projection p = projection_along(gamma_sum, a.dim);
    const int d = p.target_dim();
    auto project = [&](const std::vector<QVec>& pts) { return convex_hull(project_points(p, pts)); };
    Polytope psi0 = project(full_sum);
    std::optional<Polytope> psi;
    if (!rest.empty()) psi = project(rest);
    std::vector<Polytope> others;
    for (int j = 0; j < a.size(); ++j)
        if (!((I >> j) & 1u)) others.push_back(project(a.members[j].points));
    const int total = space - affine_dim(gamma_sum, a.dim);
    Rational c = 0;
    for (int a0 = 0; a0 <= total; ++a0) {
        for (auto comp : compositions(static_cast<int>(others.size()), total - a0, true)) {
            comp.insert(comp.begin(), a0);
            std::vector<Polytope> ps{psi0};
            ps.insert(ps.end(), others.begin(), others.end());
            c += mixed_volume(ps, comp, d);
            if (psi) {
                ps[0] = *psi;
                c -= mixed_volume(ps, comp, d);
            }
        }
    }
    if (c.sign() < 0) throw Contradiction("negative Milnor number");
    return as_integer(c, "Milnor number");
}

Integer milnor_number_unchecked(const Tuple& a, const Facing& g) { return milnor_number_in(a, g, a.dim); }

Integer milnor_number(const Tuple& a, const Facing& g) {
    if (!is_facing(a, g)) throw InputError("not a facing of the tuple");
    return milnor_number_unchecked(a, g);
}

MilnorDatum milnor_datum(const Tuple& a, const Facing& g) {
    MilnorDatum m;
    m.facing = g;
    m.milnor = milnor_number(a, g);
    m.index = facing_index(a, g);
    m.jump = m.index * m.milnor;
    if ((a.dim - (a.size() - 1)) % 2) m.jump = -m.jump;
    return m;
}

std::pair<Integer, Integer> cayley_milnor_sides(const Tuple& a, const Facing& g) {
    std::vector<int> all(a.size());
    for (int i = 0; i < a.size(); ++i) all[i] = i;
    auto cay = cayley_config(a, all);
    Tuple whole(cay.dim, {cay});
    std::vector<QVec> lifted;
    for (size_t p = 0; p < g.support.size(); ++p)
        for (auto& x : g.parts[p].points) {
            QVec y = QVec::Zero(cay.dim);
            y[g.support[p]] = 1;
            y.tail(a.dim) = x;
            lifted.push_back(y);
        }
    Facing lg;
    lg.support = {0};
    lg.parts = {PointConfiguration(cay.dim, std::move(lifted))};
    Integer lhs = milnor_number_in(whole, lg, sum_dim(whole, 1u));
    Integer rhs = 0;
    const Mask I = indices_mask(g.support);
    for (Mask J = I;; J = (J + 1) | I) {
        auto jdx = mask_indices(J);
        Facing h;
        h.parts = g.parts;
        for (int s : g.support) h.support.push_back(static_cast<int>(std::find(jdx.begin(), jdx.end(), s) - jdx.begin()));
        rhs += milnor_number_unchecked(a.sub(J), h);
        if (J == a.full()) break;
    }
    return {lhs, rhs};
}

std::optional<Facing> restrict_facing(const Facing& outer, const Facing& inner) {
    Facing out;
    out.parts = inner.parts;
    out.witness = inner.witness;
    for (size_t p = 0; p < inner.support.size(); ++p) {
        auto it = std::find(outer.support.begin(), outer.support.end(), inner.support[p]);
        if (it == outer.support.end()) return std::nullopt;
        out.support.push_back(static_cast<int>(it - outer.support.begin()));
    }
    const int dim = outer.parts.front().dim;
    if (!is_facing(outer.as_tuple(dim), out)) return std::nullopt;
    return out;
}

EulerDivisor euler_divisor(const Tuple& a) {
    if (!is_relevant(a)) throw InputError("Euler divisor needs a relevant tuple");
    EulerDivisor e;
    e.sign_exponent = a.dim - (a.size() - 1);
    auto faces = enumerate_faces(a);
    for (auto& g : enumerate_facings(a)) {
        Integer c = milnor_number_unchecked(a, g);
        bool important = is_important(a, g, faces);
        if (important != (c > 0)) throw Contradiction("importance and Milnor number disagree");
        if (c > 0) e.components.push_back({g, facing_index(a, g) * c, discriminant_total_degree(g.as_tuple(a.dim))});
    }
    return e;
}

Rational EulerDivisor::total_degree() const {
    Rational t = 0;
    for (auto& c : components) t += Rational(c.multiplicity) * c.factor_degree;
    return t;
}

Integer generic_euler_characteristic(const Tuple& a) {
    if (sum_dim(a, a.full()) != a.dim) throw InputError("Euler characteristic needs a full-dimensional sum");
    auto hulls = member_hulls(a);
    Rational s = 0;
    for (auto& comp : compositions(a.size(), a.dim, true)) s += mixed_volume(hulls, comp, a.dim);
    Integer e = as_integer(s, "Euler characteristic");
    return (a.dim - a.size()) % 2 ? -e : e;
}

Integer degree_in_span(const Tuple& a, int i) {
    if (i < 0 || i >= a.size()) throw InputError("member index out of range");
    const int d = sum_dim(a, a.full());
    auto hulls = member_hulls(a);
    Rational s = 0;
    for (auto comp : compositions(a.size(), d + 1, true)) {
        if (comp[i] == 0) continue;
        int w = comp[i]--;
        s += w * mixed_volume(hulls, comp, a.dim);
    }
    return as_integer(s, "degree");
}

Integer degree(const Tuple& a, int i) {
    if (!is_relevant(a)) throw InputError("degree needs a relevant tuple");
    return degree_in_span(a, i);
}

Integer total_degree(const Tuple& a) {
    Integer t = 0;
    for (int i = 0; i < a.size(); ++i) t += degree(a, i);
    return t;
}

Rational quasidegree(const Tuple& a, const QVec& v) {
    if (!is_relevant(a)) throw InputError("quasidegree needs a relevant tuple");
    if (v.size() != a.dim) throw InputError("covector has wrong length");
    auto hulls = member_hulls(a);
    QVec s = QVec::Zero(a.dim);
    for (auto& comp : compositions(a.size(), a.dim + 1, true)) s += mixed_moment(hulls, comp, a.dim);
    return v.dot(s);
}

std::vector<std::pair<std::vector<int>, Integer>> decomposition_exponents(const Tuple& a) {
    if (!is_relevant(a)) throw InputError("decomposition needs a relevant tuple");
    std::vector<std::pair<std::vector<int>, Integer>> out;
    const int k1 = a.size();
    for (Mask I = 1; I <= a.full() && I != 0; ++I) {
        auto idx = mask_indices(I);
        auto cay = cayley_config(a, idx);
        std::vector<QVec> pts = cay.points;
        if (rank_of_rows(pts, cay.dim) != cay.dim) continue;
        IMat m(cay.dim, pts.size());
        for (size_t j = 0; j < pts.size(); ++j)
            for (int r = 0; r < cay.dim; ++r) m(r, j) = numerator(pts[j][r]);
        Integer ix = saturation_index(m);
        if ((k1 - static_cast<int>(idx.size())) % 2) ix = -ix;
        out.emplace_back(idx, ix);
    }
    return out;
}

Integer cayley_factor_degree(const Tuple& a, const std::vector<int>& I) {
    auto cay = cayley_config(a, I);
    Polytope p = convex_hull(cay);
    Rational d = Rational(p.dim() + 1) * normalized_volume(p) / Rational(lattice_index(cay));
    return as_integer(d, "principal determinant degree");
}

Integer decomposition_degree(const Tuple& a) {
    Integer t = 0;
    for (auto& [I, e] : decomposition_exponents(a)) t += e * cayley_factor_degree(a, I);
    return t;
}

ObstructionTable obstruction_table(const Tuple& a) {
    if (!is_relevant_in_span(a)) throw InputError("obstruction table needs a relevant tuple");
    ObstructionTable t;
    t.facings = enumerate_facings(a);
    std::vector<int> dims;
    auto key = [&](const Facing& g) { return std::make_tuple(affine_dim(g.sum_points(a.dim), a.dim), g.support.size()); };
    std::stable_sort(t.facings.begin(), t.facings.end(), [&](const Facing& x, const Facing& y) {
        auto kx = key(x), ky = key(y);
        if (kx != ky) return kx < ky;
        return x < y;
    });
    const int F = static_cast<int>(t.facings.size());
    std::map<std::pair<std::vector<int>, std::vector<PointConfiguration>>, int> pos;
    for (int f = 0; f < F; ++f) {
        pos[{t.facings[f].support, t.facings[f].parts}] = f;
        t.index.push_back(facing_index(a, t.facings[f]));
        if (t.facings[f].is_trivial(a)) t.tuple_position = f;
    }
    t.matrix = IMat::Zero(F, F);
    for (int b = 0; b < F; ++b) {
        const Facing& outer = t.facings[b];
        Tuple tb = outer.as_tuple(a.dim);
        for (auto& inner : enumerate_facings(tb)) {
            std::vector<int> sup;
            for (int s : inner.support) sup.push_back(outer.support[s]);
            auto it = pos.find({sup, inner.parts});
            if (it == pos.end()) throw Contradiction("facing of a facing is not a facing");
            const int g = it->second;
            if (g > b) throw Contradiction("obstruction matrix is not triangular");
            t.matrix(g, b) = t.index[g] * milnor_number_in(tb, inner, sum_dim(tb, tb.full()));
        }
    }
    QMat q(F, F);
    for (int r = 0; r < F; ++r)
        for (int c = 0; c < F; ++c) q(r, c) = Rational(t.matrix(r, c));
    t.inverse = inverse(q);
    return t;
}

Rational discriminant_degree(const ObstructionTable& t, const Tuple& a, int i) {
    Rational s = 0;
    for (size_t g = 0; g < t.facings.size(); ++g) {
        auto& f = t.facings[g];
        auto it = std::find(f.support.begin(), f.support.end(), i);
        if (it == f.support.end()) continue;
        Rational e = t.obstruction(static_cast<int>(g));
        if (e.sign() == 0) continue;
        s += e * Rational(degree_in_span(f.as_tuple(a.dim), static_cast<int>(it - f.support.begin())));
    }
    return s;
}

Rational discriminant_degree(const Tuple& a, int i) { return discriminant_degree(obstruction_table(a), a, i); }

Rational discriminant_total_degree(const Tuple& a) {
    if (!is_relevant_in_span(a)) return 0;
    auto t = obstruction_table(a);
    Rational s = 0;
    for (int i = 0; i < a.size(); ++i) s += discriminant_degree(t, a, i);
    return s;
}

VirtualPolytope newton_delta(const Tuple& a) {
    if (!is_relevant(a)) throw InputError("discriminant Newton polytope needs a relevant tuple");
    auto t = obstruction_table(a);
    auto off = coefficient_offsets(a);
    const int N = off.back();
    std::vector<std::pair<Rational, Polytope>> terms;
    for (size_t f = 0; f < t.facings.size(); ++f) {
        Rational e = t.obstruction(static_cast<int>(f));
        if (e.sign() == 0) continue;
        const Facing& g = t.facings[f];
        std::vector<int> place;
        for (size_t p = 0; p < g.support.size(); ++p)
            for (auto& x : g.parts[p].points) place.push_back(off[g.support[p]] + a.members[g.support[p]].index_of(x));
        std::vector<QVec> verts;
        for (auto& m : secondary_vertices(g.as_tuple(a.dim))) {
            QVec v = QVec::Zero(N);
            for (size_t j = 0; j < m.size(); ++j) v[place[j]] = Rational(m[j]);
            verts.push_back(v);
        }
        terms.push_back({e, convex_hull(N, verts)});
    }
    return signed_combination(terms, N);
}

int resultant_codim(const Tuple& a) { return std::max(0, -min_dim(a)); }

Tuple project_tuple(const Tuple& h, int n) {
    if (n < 0 || n > h.dim) throw InputError("split does not match the ambient dimension");
    std::vector<PointConfiguration> m;
    for (auto& c : h.members) {
        std::vector<QVec> pts;
        for (auto& p : c.points) pts.push_back(p.head(n));
        m.emplace_back(n, std::move(pts));
    }
    return Tuple(n, std::move(m));
}

bool projection_injective(const std::vector<QVec>& pts, int ambient, int n) {
    std::vector<QVec> base;
    for (auto& p : pts) base.push_back(p.head(n));
    return affine_dim(pts, ambient) == affine_dim(base, n);
}

BifurcationVerdict bifurcation_emptiness(const Tuple& h, int n) {
    Tuple a = project_tuple(h, n);
    const int c = -min_dim(a);
    BifurcationVerdict v;
    if (c == 0) {
        v.empty = projection_injective(h.sum_points(h.full()), h.dim, n);
        v.reason = v.empty ? "sum projects injectively" : "sum has a positive-dimensional fiber";
        v.codim = v.empty ? 0 : 1;
        return v;
    }
    for (Mask J = 1; J <= a.full() && J != 0; ++J) {
        if (!is_essential(a.sub(J))) continue;
        if (projection_injective(h.sum_points(J), h.dim, n)) {
            v.empty = true;
            v.reason = "essential subtuple projects injectively";
            return v;
        }
    }
    v.reason = "no essential subtuple projects injectively";
    v.codim = c;
    return v;
}

}  // namespace edisc
