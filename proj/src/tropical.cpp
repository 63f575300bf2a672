#include "edisc/tropical.hpp"

#include "edisc/lattice.hpp"
#include "edisc/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace edisc {

namespace {

QMat to_qmat(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

bool is_zero(const QVec& v) {
    for (auto& x : v)
        if (x != 0) return false;
    return true;
}

IMat rows_imat(const std::vector<QVec>& rows, int n) {
    IMat m(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) {
        QVec p = primitive(rows[i]);
        for (int j = 0; j < n; ++j) m(i, j) = numerator(p[j]);
    }
    return m;
}

IMat span_lattice(const std::vector<QVec>& eq, int n) {
    if (eq.empty()) {
        IMat id = IMat::Zero(n, n);
        for (int i = 0; i < n; ++i) id(i, i) = 1;
        return id;
    }
    return integer_kernel(rows_imat(eq, n));
}

IMat hcat(const IMat& a, const IMat& b) {
    IMat m(a.rows(), a.cols() + b.cols());
    m << a, b;
    return m;
}

Integer index_of(const IMat& m) { return m.cols() == 0 ? Integer(1) : saturation_index(m); }

int rank_of(const IMat& m) { return m.cols() == 0 ? 0 : rank(to_qmat(m)); }

std::vector<QVec> row_basis(const std::vector<QVec>& rows, int n) {
    if (rows.empty()) return {};
    QMat m(rows.size(), n);
    for (size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
    auto piv = rref(m);
    std::vector<QVec> out;
    for (size_t i = 0; i < piv.size(); ++i) out.push_back(primitive(QVec(m.row(i).transpose())));
    return out;
}

Polyhedron cone_polyhedron(const Cone& c) {
    Polyhedron p(c.ambient);
    for (auto& r : c.ge) p.le(-r, 0);
    for (auto& r : c.eq) p.eq(r, 0);
    return p;
}

void add_cone_rows(Polyhedron& p, const Cone& c, int offset) {
    for (auto& r : c.ge) {
        QVec w = QVec::Zero(p.dim);
        w.segment(offset, c.ambient) = -r;
        p.le(w, 0);
    }
    for (auto& r : c.eq) {
        QVec w = QVec::Zero(p.dim);
        w.segment(offset, c.ambient) = r;
        p.eq(w, 0);
    }
}

// A is contained in B.
bool cone_inside(const Cone& a, const Cone& b) {
    const QMat basis = to_qmat(a.lattice);
    for (auto& r : b.eq)
        if (!is_zero(QVec(basis.transpose() * r))) return false;
    for (auto& r : b.ge) {
        LinearProgram<Rational> lp;
        lp.vars = a.ambient;
        for (auto& g : a.ge) lp.le(-g, Rational(0));
        for (auto& e : a.eq) lp.eq(e, Rational(0));
        for (int i = 0; i < a.ambient; ++i) {
            QVec u = QVec::Zero(a.ambient);
            u[i] = 1;
            lp.le(u, Rational(1));
            lp.le(-u, Rational(1));
        }
        lp.objective = -r;
        auto res = solve_lp(lp);
        if (res.status != LPStatus::Optimal || res.value > 0) return false;
    }
    return true;
}

void add_weighted(WeightedFan& f, const Cone& c, const Rational& w) {
    for (size_t i = 0; i < f.cones.size(); ++i)
        if (f.cones[i].same_as(c)) {
            f.weights[i] += w;
            return;
        }
    f.cones.push_back(c);
    f.weights.push_back(w);
}

// s in a, t in b, s - t = v.
bool displaced_meet(const Cone& a, const Cone& b, const QVec& v) {
    const int n = a.ambient;
    Polyhedron p(2 * n);
    add_cone_rows(p, a, 0);
    add_cone_rows(p, b, n);
    for (int i = 0; i < n; ++i) {
        QVec r = QVec::Zero(2 * n);
        r[i] = 1;
        r[n + i] = -1;
        p.eq(r, v[i]);
    }
    return find_point(p).has_value();
}

Rational lattice_length(const QVec& d) {
    QVec p = primitive(d);
    for (Eigen::Index i = 0; i < d.size(); ++i)
        if (p[i] != 0) return d[i] / p[i];
    return 0;
}

void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
    }
    if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
    g = r0, x = s0, y = t0;
}

// Lattice vector of the span of c on which the primitive row r takes its least positive value.
QVec facet_normal(const Cone& c, const QVec& r) {
    QVec pr = primitive(r);
    const int d = static_cast<int>(c.lattice.cols());
    std::vector<Integer> coef(d, 0);
    Integer g = 0;
    for (int j = 0; j < d; ++j) {
        Integer v = 0;
        for (int i = 0; i < c.ambient; ++i) v += numerator(pr[i]) * c.lattice(i, j);
        Integer ng, x, y;
        ext_gcd(g, v, ng, x, y);
        for (int i = 0; i < j; ++i) coef[i] *= x;
        coef[j] = y;
        g = ng;
    }
    QVec u = QVec::Zero(c.ambient);
    for (int j = 0; j < d; ++j) u += Rational(coef[j]) * to_qmat(c.lattice.col(j));
    return u;
}

Rational random_rational(std::mt19937_64& rng, long range, long den) {
    std::uniform_int_distribution<long> d(-range, range);
    return Rational(d(rng)) / Rational(den);
}

}  // namespace

bool Cone::contains(const QVec& x) const {
    for (auto& r : ge)
        if (r.dot(x) < 0) return false;
    for (auto& r : eq)
        if (r.dot(x) != 0) return false;
    return true;
}

bool Cone::contains_in_relint(const QVec& x) const {
    for (auto& r : ge)
        if (r.dot(x) <= 0) return false;
    for (auto& r : eq)
        if (r.dot(x) != 0) return false;
    return true;
}

bool Cone::same_as(const Cone& o) const {
    if (ambient != o.ambient || dim != o.dim) return false;
    if (!o.contains(interior) || !contains(o.interior)) return false;
    return cone_inside(*this, o) && cone_inside(o, *this);
}

Cone make_cone(int ambient, const std::vector<QVec>& ge, const std::vector<QVec>& eq) {
    std::vector<QVec> g;
    for (auto& r : ge)
        if (!is_zero(r)) g.push_back(primitive(r));
    std::sort(g.begin(), g.end(), LexLess{});
    g.erase(std::unique(g.begin(), g.end(), [](const QVec& a, const QVec& b) { return vec_equal(a, b); }), g.end());
    Polyhedron p(ambient);
    for (auto& r : g) p.le(-r, 0);
    std::vector<QVec> eqs;
    for (auto& r : eq)
        if (!is_zero(r)) {
            eqs.push_back(primitive(r));
            p.eq(eqs.back(), 0);
        }
    std::vector<bool> fixed(g.size(), false);
    for (int i : implicit_equalities(p)) fixed[i] = true;
    Cone c;
    c.ambient = ambient;
    for (size_t i = 0; i < g.size(); ++i) (fixed[i] ? eqs : c.ge).push_back(g[i]);
    c.eq = row_basis(eqs, ambient);
    c.lattice = span_lattice(c.eq, ambient);
    c.dim = static_cast<int>(c.lattice.cols());
    c.interior = *relative_interior_point(cone_polyhedron(c));
    return c;
}

Cone intersect(const Cone& a, const Cone& b) {
    std::vector<QVec> ge = a.ge, eq = a.eq;
    ge.insert(ge.end(), b.ge.begin(), b.ge.end());
    eq.insert(eq.end(), b.eq.begin(), b.eq.end());
    return make_cone(a.ambient, ge, eq);
}

QVec sample_point(const Cone& c, std::mt19937_64& rng) {
    QVec dir = QVec::Zero(c.ambient);
    const QMat basis = to_qmat(c.lattice);
    for (Eigen::Index j = 0; j < basis.cols(); ++j) dir += random_rational(rng, 1000, 997) * basis.col(j);
    Rational t = 1;
    for (;;) {
        QVec x = c.interior + t * dir;
        if (c.contains_in_relint(x)) return x;
        t /= 2;
    }
}

WeightedFan dual_fan(const Polytope& p) {
    WeightedFan f;
    f.ambient = p.ambient;
    if (!p.hull || p.dim() <= 0) return f;
    const Hull& h = *p.hull;
    for (auto& face : enumerate_faces(h)) {
        if (face.dim != 1) continue;
        auto idx = bits_to_indices(face.points);
        QVec a = h.points[idx[0]], b = h.points[idx[0]];
        for (int i : idx) {
            if (lex_less(h.points[i], a)) a = h.points[i];
            if (lex_less(b, h.points[i])) b = h.points[i];
        }
        std::vector<QVec> ge;
        for (int v : h.vertices)
            if (!face.points[v]) ge.push_back(h.points[v] - a);
        f.cones.push_back(make_cone(p.ambient, ge, {QVec(b - a)}));
        f.weights.push_back(lattice_length(b - a));
    }
    return f;
}

Rational weight_at(const WeightedFan& f, const QVec& x) {
    Rational w = 0;
    for (size_t i = 0; i < f.cones.size(); ++i)
        if (f.cones[i].contains(x)) w += f.weights[i];
    return w;
}

bool equivalent(const WeightedFan& f, const WeightedFan& g) {
    if (f.ambient != g.ambient) return false;
    if (f.empty() || g.empty()) return f.empty() && g.empty();
    if (f.dim() != g.dim()) return false;
    std::mt19937_64 rng(7);
    auto agree = [&](const WeightedFan& a, const WeightedFan& b) {
        for (auto& c : a.cones) {
            QVec x = sample_point(c, rng);
            if (weight_at(a, x) != weight_at(b, x)) return false;
        }
        return true;
    };
    return agree(f, g) && agree(g, f);
}

bool is_balanced(const WeightedFan& f) {
    struct Wall {
        Cone cone;
        QVec sum;
    };
    std::vector<Wall> walls;
    for (size_t s = 0; s < f.cones.size(); ++s) {
        const Cone& c = f.cones[s];
        std::vector<Cone> seen;
        for (auto& r : c.ge) {
            std::vector<QVec> eq = c.eq;
            eq.push_back(r);
            Cone tau = make_cone(f.ambient, c.ge, eq);
            if (tau.dim != c.dim - 1) continue;
            if (std::any_of(seen.begin(), seen.end(), [&](const Cone& o) { return o.same_as(tau); })) continue;
            seen.push_back(tau);
            QVec u = f.weights[s] * facet_normal(c, r);
            auto it = std::find_if(walls.begin(), walls.end(), [&](const Wall& w) { return w.cone.same_as(tau); });
            if (it == walls.end())
                walls.push_back({tau, u});
            else
                it->sum += u;
        }
    }
    for (auto& w : walls) {
        if (is_zero(w.sum)) continue;
        QMat m(f.ambient, w.cone.dim + 1);
        m << to_qmat(w.cone.lattice), w.sum;
        if (rank(m) != w.cone.dim) return false;
    }
    return true;
}

bool is_unbounded(const WeightedFan& f) {
    for (auto& c : f.cones) {
        if (c.dim == 0) continue;
        QVec x = is_zero(c.interior) ? QVec(to_qmat(c.lattice.col(0))) : c.interior;
        if (is_zero(x) || !c.contains(x) || !c.contains(QVec(x * Rational(1000)))) return false;
    }
    return true;
}

QVec displacement_vector(int ambient, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 12345);
    QVec v(ambient);
    for (auto& x : v) {
        do x = random_rational(rng, 1000000, 999983);
        while (x == 0);
    }
    return v;
}

WeightedFan stable_intersection(const WeightedFan& f, const WeightedFan& g, const QVec& displacement) {
    if (f.ambient != g.ambient) throw InputError("stable intersection of fans in different spaces");
    const int n = f.ambient;
    WeightedFan out;
    out.ambient = n;
    if (f.empty() || g.empty()) return out;
    const int target = f.dim() + g.dim() - n;
    if (target < 0) return out;
    for (size_t i = 0; i < f.cones.size(); ++i)
        for (size_t j = 0; j < g.cones.size(); ++j) {
            const Cone &a = f.cones[i], &b = g.cones[j];
            IMat both = hcat(a.lattice, b.lattice);
            if (rank_of(both) != n) continue;
            Cone rho = intersect(a, b);
            if (rho.dim != target) continue;
            if (!displaced_meet(a, b, displacement)) continue;
            add_weighted(out, rho, f.weights[i] * g.weights[j] * Rational(index_of(both)));
        }
    return out;
}

WeightedFan stable_intersection(const WeightedFan& f, const WeightedFan& g, std::uint64_t seed) {
    for (int attempt = 0; attempt < 3; ++attempt) {
        auto a = stable_intersection(f, g, displacement_vector(f.ambient, seed + 2 * attempt));
        auto b = stable_intersection(f, g, displacement_vector(f.ambient, seed + 2 * attempt + 1));
        if (equivalent(a, b)) return a;
    }
    throw Contradiction("stable intersection depends on the displacement");
}

WeightedFan stable_intersection(const std::vector<WeightedFan>& fs, int ambient, std::uint64_t seed) {
    WeightedFan acc;
    acc.ambient = ambient;
    acc.cones.push_back(make_cone(ambient, {}, {}));
    acc.weights.push_back(1);
    for (auto& f : fs) {
        acc = stable_intersection(acc, f, seed);
        if (acc.empty()) break;
    }
    return acc;
}

Rational tropical_multiplicity(const std::vector<Polytope>& ps, int ambient) {
    if (static_cast<int>(ps.size()) != ambient) throw InputError("need as many polytopes as the ambient dimension");
    std::vector<WeightedFan> fans;
    for (auto& p : ps) {
        if (p.ambient != ambient) throw InputError("polytope in the wrong space");
        fans.push_back(dual_fan(p));
    }
    WeightedFan t = stable_intersection(fans, ambient);
    return t.empty() ? Rational(0) : weight_at(t, QVec::Zero(ambient));
}

Rational tropical_intersection_number(const WeightedFan& f, const std::vector<QVec>& basis, const QVec& offset) {
    const int n = f.ambient;
    std::vector<QVec> b;
    {
        std::vector<QVec> rows = row_basis(basis, n);
        b = rows;
    }
    const int ldim = static_cast<int>(b.size());
    if (f.empty()) return 0;
    if (ldim + f.dim() != n) throw InputError("subspace is not of complementary dimension");
    QMat bm(n, ldim);
    for (int j = 0; j < ldim; ++j) bm.col(j) = b[j];
    std::vector<QVec> ann;
    if (ldim > 0) {
        QMat k = nullspace(QMat(bm.transpose()));
        for (Eigen::Index j = 0; j < k.cols(); ++j) ann.push_back(k.col(j));
    } else {
        for (int i = 0; i < n; ++i) {
            QVec e = QVec::Zero(n);
            e[i] = 1;
            ann.push_back(e);
        }
    }
    IMat lat = span_lattice(ann, n);
    Rational total = 0;
    for (size_t s = 0; s < f.cones.size(); ++s) {
        const Cone& c = f.cones[s];
        IMat both = hcat(c.lattice, lat);
        if (rank_of(both) == n) {
            QMat m(n, n);
            m << to_qmat(c.lattice), -bm;
            QVec y = *solve(m, offset);
            QVec x = to_qmat(c.lattice) * y.head(c.dim);
            if (c.contains_in_relint(x))
                total += f.weights[s] * Rational(index_of(both));
            else if (c.contains(x))
                throw DegenerateOffset("offset meets the boundary of a cone");
        } else {
            Polyhedron p = cone_polyhedron(c);
            for (auto& a : ann) p.eq(a, a.dot(offset));
            if (find_point(p)) throw DegenerateOffset("subspace meets a cone non-transversally");
        }
    }
    return total;
}

WeightedFan stable_image(const WeightedFan& f, const QMat& map) {
    const int m = static_cast<int>(map.rows());
    if (map.cols() != f.ambient) throw InputError("map does not match the fan's space");
    for (Eigen::Index i = 0; i < map.rows(); ++i)
        for (Eigen::Index j = 0; j < map.cols(); ++j)
            if (!is_integer(map(i, j))) throw InputError("stable image needs an integer map");
    struct Piece {
        Cone cone;
        Rational weight;
    };
    std::vector<Piece> images;
    for (size_t s = 0; s < f.cones.size(); ++s) {
        const Cone& c = f.cones[s];
        const QMat b = to_qmat(c.lattice);
        const QMat mb = map * b;
        if (c.dim > 0 && rank(mb) != c.dim) continue;
        std::vector<QVec> ge, eq;
        Integer idx = 1;
        if (c.dim > 0) {
            IMat mbi(m, c.dim);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < c.dim; ++j) mbi(i, j) = numerator(mb(i, j));
            idx = index_of(mbi);
            const QMat left = inverse(QMat(mb.transpose() * mb)) * mb.transpose();
            for (auto& r : c.ge) ge.push_back(QVec((r.transpose() * b * left).transpose()));
            QMat k = nullspace(QMat(mb.transpose()));
            for (Eigen::Index j = 0; j < k.cols(); ++j) eq.push_back(k.col(j));
        } else {
            for (int i = 0; i < m; ++i) {
                QVec e = QVec::Zero(m);
                e[i] = 1;
                eq.push_back(e);
            }
        }
        images.push_back({make_cone(m, ge, eq), f.weights[s] * Rational(idx)});
    }
    WeightedFan out;
    out.ambient = m;
    std::vector<bool> done(images.size(), false);
    std::mt19937_64 rng(11);
    for (size_t i = 0; i < images.size(); ++i) {
        if (done[i]) continue;
        std::vector<size_t> group;
        for (size_t j = i; j < images.size(); ++j) {
            if (done[j] || images[j].cone.dim != images[i].cone.dim) continue;
            if (rank_of(hcat(images[i].cone.lattice, images[j].cone.lattice)) != images[i].cone.dim) continue;
            group.push_back(j);
            done[j] = true;
        }
        if (group.size() == 1) {
            add_weighted(out, images[i].cone, images[i].weight);
            continue;
        }
        std::vector<QVec> walls;
        for (size_t j : group) walls.insert(walls.end(), images[j].cone.ge.begin(), images[j].cone.ge.end());
        for (size_t j : group) {
            std::vector<Cone> cells{images[j].cone};
            for (auto& h : walls) {
                std::vector<Cone> next;
                for (auto& cell : cells) {
                    std::vector<QVec> plus = cell.ge, minus = cell.ge;
                    plus.push_back(h);
                    minus.push_back(-h);
                    Cone a = make_cone(m, plus, cell.eq), b = make_cone(m, minus, cell.eq);
                    if (a.dim == cell.dim && b.dim == cell.dim) {
                        next.push_back(a);
                        next.push_back(b);
                    } else {
                        next.push_back(cell);
                    }
                }
                cells = std::move(next);
            }
            for (auto& cell : cells) {
                if (std::any_of(out.cones.begin(), out.cones.end(), [&](const Cone& c) { return c.same_as(cell); }))
                    continue;
                QVec x = sample_point(cell, rng);
                Rational w = 0;
                for (size_t k : group)
                    if (images[k].cone.contains(x)) w += images[k].weight;
                out.cones.push_back(cell);
                out.weights.push_back(w);
            }
        }
    }
    return out;
}

OpenPolyhedron open_simplex(int ambient, const std::vector<QVec>& vertices) {
    if (vertices.empty()) throw InputError("simplex needs vertices");
    Hull h = compute_hull(ambient, vertices);
    if (h.dim != static_cast<int>(vertices.size()) - 1) throw InputError("simplex vertices are affinely dependent");
    Polyhedron p(ambient);
    for (auto& f : h.facets) p.ge(f.normal, f.offset);
    QMat ann = h.frame.annihilator();
    for (Eigen::Index i = 0; i < ann.rows(); ++i) {
        QVec r = ann.row(i).transpose();
        p.eq(r, r.dot(vertices[0]));
    }
    return open_polyhedron(p);
}

OpenPolyhedron open_polyhedron(const Polyhedron& closure) {
    return {closure, std::vector<bool>(closure.A.size(), true)};
}

PurityReport purity_check(const WeightedFan& t, const OpenPolyhedron& p) {
    const int n = t.ambient;
    if (p.closure.dim != n) throw InputError("polyhedron and fan live in different spaces");
    if (p.strict.size() != p.closure.A.size()) throw InputError("one strictness flag per inequality");
    for (bool s : p.strict)
        if (!s) throw InputError("purity check needs a relatively open polyhedron");
    PurityReport r;
    r.ambient = n;
    r.fan_dim = t.dim();
    r.polyhedron_dim = dimension(p.closure);
    if (r.polyhedron_dim < 0) throw InputError("empty polyhedron");
    if (t.empty()) {
        r.k = -1;
        return r;
    }
    r.k = r.polyhedron_dim + r.fan_dim - n;
    if (r.k < 0) throw InputError("dimensions of the fan and the polyhedron add up to less than the ambient dimension");

    std::vector<QVec> directions;  // of the affine span of P
    {
        std::vector<QVec> rows = p.closure.E;
        for (int i : implicit_equalities(p.closure)) rows.push_back(p.closure.A[i]);
        if (rows.empty()) {
            for (int i = 0; i < n; ++i) {
                QVec e = QVec::Zero(n);
                e[i] = 1;
                directions.push_back(e);
            }
        } else {
            QMat m(rows.size(), n);
            for (size_t i = 0; i < rows.size(); ++i) m.row(i) = rows[i].transpose();
            QMat k = nullspace(m);
            for (Eigen::Index j = 0; j < k.cols(); ++j) directions.push_back(k.col(j));
        }
    }
    const int rows = static_cast<int>(p.closure.A.size());
    auto with_cone = [&](const Cone& c) {
        Polyhedron q = p.closure;
        add_cone_rows(q, c, 0);
        return q;
    };
    auto strict_flags = [&](const Polyhedron& q) {
        std::vector<bool> s(q.A.size(), false);
        for (int i = 0; i < rows; ++i) s[i] = true;
        return s;
    };

    struct Piece {
        Polyhedron closure;
        int dim;
    };
    std::vector<Piece> pieces;
    for (auto& c : t.cones) {
        QMat span(n, c.dim + directions.size());
        span << to_qmat(c.lattice), QMat::Zero(n, directions.size());
        for (size_t j = 0; j < directions.size(); ++j) span.col(c.dim + j) = directions[j];
        if (rank(span) != n) continue;
        Polyhedron q = with_cone(c);
        if (!point_strict_on(q, strict_flags(q))) continue;
        int d = dimension(q);
        if (d != c.dim + r.polyhedron_dim - n) continue;
        pieces.push_back({q, d});
    }
    for (auto& pc : pieces) r.intersection_dim = std::max(r.intersection_dim, pc.dim);
    if (!pieces.empty() && r.intersection_dim != r.k)
        r.violations.push_back("stable intersection has dimension " + std::to_string(r.intersection_dim) +
                               ", expected " + std::to_string(r.k));
    for (auto& pc : pieces)
        if (pc.dim != r.k) r.violations.push_back("stable intersection is not pure");

    for (auto& pc : pieces)
        for (int i = 0; i < rows; ++i) {
            Polyhedron q = pc.closure;
            q.eq(p.closure.A[i], p.closure.b[i]);
            r.boundary_dim = std::max(r.boundary_dim, dimension(q));
        }
    if (r.boundary_dim != -1 && r.boundary_dim != r.k - 1)
        r.violations.push_back("boundary trace has dimension " + std::to_string(r.boundary_dim) + ", expected " +
                               std::to_string(r.k - 1) + " or empty");

    std::vector<int> parent(pieces.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            Polyhedron q = pieces[i].closure;
            Polyhedron extra = pieces[j].closure;
            q.A.insert(q.A.end(), extra.A.begin() + rows, extra.A.end());
            q.b.insert(q.b.end(), extra.b.begin() + rows, extra.b.end());
            q.E.insert(q.E.end(), extra.E.begin(), extra.E.end());
            q.e.insert(q.e.end(), extra.e.begin(), extra.e.end());
            if (point_strict_on(q, strict_flags(q))) parent[root(i)] = root(j);
        }
    bool all_in_subspace = true;
    for (size_t c = 0; c < pieces.size(); ++c) {
        if (root(c) != static_cast<int>(c)) continue;
        PurityComponent comp;
        QVec base;
        std::vector<QVec> dirs;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (root(i) != static_cast<int>(c)) continue;
            ++comp.pieces;
            comp.dim = std::max(comp.dim, pieces[i].dim);
            const Polyhedron& q = pieces[i].closure;
            QVec x = *relative_interior_point(q);
            if (base.size() == 0)
                base = x;
            else
                dirs.push_back(x - base);
            std::vector<QVec> eqs = q.E;
            for (int k : implicit_equalities(q)) eqs.push_back(q.A[k]);
            QMat m(eqs.size(), n);
            for (size_t k = 0; k < eqs.size(); ++k) m.row(k) = eqs[k].transpose();
            QMat ker = eqs.empty() ? QMat(QMat::Identity(n, n)) : nullspace(m);
            for (Eigen::Index k = 0; k < ker.cols(); ++k) dirs.push_back(ker.col(k));
        }
        comp.affine_hull_dim = rank_of_rows(dirs, n);
        comp.in_affine_subspace = true;
        for (int i = 0; i < rows; ++i) {
            const QVec& a = p.closure.A[i];
            bool flat = std::all_of(dirs.begin(), dirs.end(), [&](const QVec& d) { return a.dot(d) == 0; });
            if (!flat || a.dot(base) >= p.closure.b[i]) comp.in_affine_subspace = false;
        }
        all_in_subspace = all_in_subspace && comp.in_affine_subspace;
        r.components.push_back(comp);
    }
    if ((r.boundary_dim == -1) != all_in_subspace)
        r.violations.push_back(std::string("boundary trace is ") + (r.boundary_dim == -1 ? "empty" : "nonempty") +
                               " but components " + (all_in_subspace ? "all" : "do not all") +
                               " lie in affine subspaces inside the polyhedron");
    return r;
}

PurityTrial purity_trial(std::uint64_t seed, int max_dim, int max_points, int max_coord) {
    if (max_dim < 1 || max_points < 1 || max_coord < 1) throw InputError("fuzz bounds must be positive");
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    PurityTrial trial;
    trial.seed = seed;
    const int n = uniform(1, max_dim);
    const int c = uniform(1, n);
    std::vector<WeightedFan> fans;
    for (int i = 0; i < c; ++i) {
        std::vector<std::vector<long>> pts(uniform(std::min(2, max_points), max_points), std::vector<long>(n));
        for (auto& x : pts)
            for (auto& v : x) v = uniform(0, max_coord);
        trial.polytopes.push_back(convex_hull(make_config(n, pts)));
        fans.push_back(dual_fan(trial.polytopes.back()));
    }
    trial.fan = stable_intersection(fans, n, seed);
    const int pd = uniform(c, n);
    QVec center = QVec::Zero(n);
    if (!trial.fan.empty()) {
        const Cone& cone = trial.fan.cones[uniform(0, static_cast<int>(trial.fan.cones.size()) - 1)];
        center = sample_point(cone, rng) * Rational(uniform(1, 6), 2);
    }
    for (;;) {
        trial.simplex.clear();
        for (int v = 0; v <= pd; ++v) {
            QVec x = center;
            for (auto& y : x) y += random_rational(rng, 2000, 997);
            trial.simplex.push_back(x);
        }
        if (affine_dim(trial.simplex, n) == pd) break;
    }
    trial.report = purity_check(trial.fan, open_simplex(n, trial.simplex));
    return trial;
}

}  // namespace edisc
