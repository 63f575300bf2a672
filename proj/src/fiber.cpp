#include "edisc/fiber.hpp"

#include "edisc/discriminant.hpp"

#include <functional>
#include <map>
#include <memory>
#include <random>

namespace edisc {

namespace {

struct Envelope {
    Rational support;
    QVec point;
};

Rational factorial_of(int r) {
    Rational f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    return f;
}

// Integral over the base of the lower envelope of (x, w.y), together with the section along it.
Envelope envelope(const std::vector<QVec>& pts, int ambient, int n, const QVec& w, BaseMeasure measure) {
    const int m = ambient - n;
    if (n < 0 || m < 0) throw InputError("split does not match the ambient dimension");
    if (w.size() != m) throw InputError("covector has wrong length");
    if (pts.empty()) throw InputError("fiber polytope of an empty set");
    std::map<QVec, std::pair<Rational, QVec>, LexLess> low;
    for (auto& p : pts) {
        QVec x = p.head(n), y = p.tail(m);
        Rational h = w.dot(y);
        auto it = low.find(x);
        if (it == low.end())
            low.emplace(x, std::make_pair(h, y));
        else if (h < it->second.first || (h == it->second.first && lex_less(y, it->second.second)))
            it->second = {h, y};
    }
    std::vector<QVec> base;
    for (auto& [x, hy] : low) base.push_back(x);
    Frame fr = make_frame(base, n);
    const int r = fr.rank;
    Envelope e{0, QVec::Zero(m)};
    if (measure == BaseMeasure::Ambient && r < n) return e;
    if (r == 0) {
        e.support = low.begin()->second.first;
        e.point = low.begin()->second.second;
        return e;
    }
    std::vector<QVec> local;
    std::vector<Rational> heights;
    std::map<QVec, int, LexLess> back;
    for (auto& [x, hy] : low) {
        back[fr.coords(x)] = static_cast<int>(local.size());
        local.push_back(fr.coords(x));
        heights.push_back(hy.first);
    }
    const Rational rf = factorial_of(r);
    std::vector<const std::pair<Rational, QVec>*> data;
    for (auto& [x, hy] : low) data.push_back(&hy);
    for (auto& cell : regular_subdivision(local, r, heights)) {
        std::vector<QVec> cp;
        for (int i : cell) cp.push_back(local[i]);
        Hull ch = compute_hull(r, cp);
        for (auto& s : pulling_triangulation(ch)) {
            QMat d(r, r);
            for (int j = 0; j < r; ++j) d.col(j) = ch.points[s[j + 1]] - ch.points[s[0]];
            Rational vol = abs(determinant(d)) / rf;
            Rational hs = 0;
            QVec ys = QVec::Zero(m);
            for (int j : s) {
                auto* hy = data[back.at(ch.points[j])];
                hs += hy->first;
                ys += hy->second;
            }
            e.support += vol * hs / Rational(r + 1);
            e.point += ys * (vol / Rational(r + 1));
        }
    }
    return e;
}

QVec generic_direction(int dim) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-997, 997);
    QVec g(dim);
    for (int i = 0; i < dim; ++i) g[i] = d(rng);
    return g;
}

QVec vertex_toward(const SupportOracle& o, const QVec& u, const QVec& g) {
    const Rational hu = o.support(u);
    Rational delta = 1;
    for (int t = 0; t < 200; ++t) {
        QVec v = o.point(u + g * delta);
        if (u.dot(v) == hu) return v;
        delta /= 16;
    }
    throw Contradiction("support oracle has no point on the face");
}

struct Weighted {
    Rational coef;
    std::vector<QVec> pts;
};

SupportOracle weighted_oracle(std::vector<Weighted> terms, int ambient, int n) {
    SupportOracle o;
    o.dim = ambient - n;
    auto shared = std::make_shared<std::vector<Weighted>>(std::move(terms));
    o.support = [shared, ambient, n](const QVec& w) {
        Rational s = 0;
        for (auto& t : *shared) s += t.coef * fiber_support(t.pts, ambient, n, w, BaseMeasure::Ambient);
        return s;
    };
    o.point = [shared, ambient, n](const QVec& w) {
        QVec s = QVec::Zero(ambient - n);
        for (auto& t : *shared) s += fiber_point(t.pts, ambient, n, w, BaseMeasure::Ambient) * t.coef;
        return s;
    };
    return o;
}

// The oracle agrees with the reconstructed polytope in a spread of directions.
void check_convex(const SupportOracle& o, const Polytope& p) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int t = 0; t < 2 * o.dim + 6; ++t) {
        QVec w(o.dim);
        for (int i = 0; i < o.dim; ++i) w[i] = d(rng);
        Rational best = w.dot(p.vertices.front());
        for (auto& v : p.vertices) best = std::min(best, Rational(w.dot(v)));
        if (best != o.support(w)) throw Contradiction("mixed fiber polytope combination is not convex");
    }
}

Integer binomial(int n, int k) {
    Integer b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

void positive_compositions(int len, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len - 1) {
        if (total >= 1) {
            cur.push_back(total);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int v = 1; v <= total - (len - 1 - static_cast<int>(cur.size())); ++v) {
        cur.push_back(v);
        positive_compositions(len, total - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

Polytope polytope_from_oracle(const SupportOracle& o) {
    const QVec g = generic_direction(o.dim);
    std::vector<QVec> pts{vertex_toward(o, QVec::Zero(o.dim), g)};
    for (;;) {
        Hull h = compute_hull(o.dim, pts);
        bool grew = false;
        if (h.dim < o.dim) {
            QMat ann = h.frame.annihilator();
            for (Eigen::Index r = 0; r < ann.rows() && !grew; ++r)
                for (int s : {1, -1}) {
                    QVec u = ann.row(r).transpose() * Rational(s);
                    if (o.support(u) < u.dot(pts.front())) {
                        pts.push_back(vertex_toward(o, u, g));
                        grew = true;
                        break;
                    }
                }
        }
        if (!grew)
            for (auto& f : h.facets)
                if (o.support(f.normal) < f.offset) {
                    pts.push_back(vertex_toward(o, f.normal, g));
                    grew = true;
                }
        if (!grew) return convex_hull(o.dim, pts);
    }
}

Rational fiber_support(const std::vector<QVec>& pts, int ambient, int n, const QVec& w, BaseMeasure m) {
    return envelope(pts, ambient, n, w, m).support;
}

QVec fiber_point(const std::vector<QVec>& pts, int ambient, int n, const QVec& w, BaseMeasure m) {
    return envelope(pts, ambient, n, w, m).point;
}

Polytope fiber_polytope(const Polytope& h, int n) {
    const int ambient = h.ambient;
    auto pts = std::make_shared<std::vector<QVec>>(h.vertices);
    SupportOracle o;
    o.dim = ambient - n;
    if (o.dim < 0 || n < 0) throw InputError("split does not match the ambient dimension");
    o.support = [=](const QVec& w) { return fiber_support(*pts, ambient, n, w, BaseMeasure::Image); };
    o.point = [=](const QVec& w) { return fiber_point(*pts, ambient, n, w, BaseMeasure::Image); };
    return polytope_from_oracle(o);
}

SupportOracle mixed_fiber_oracle(const std::vector<Polytope>& hs, int n) {
    if (static_cast<int>(hs.size()) != n + 1) throw InputError("mixed fiber polytope takes n+1 polytopes");
    const int ambient = hs.front().ambient;
    for (auto& h : hs)
        if (h.ambient != ambient) throw InputError("polytopes live in different spaces");
    if (ambient < n) throw InputError("split does not match the ambient dimension");
    std::vector<Weighted> terms;
    const unsigned full = (1u << (n + 1)) - 1;
    for (unsigned S = 1; S <= full; ++S) {
        std::vector<Polytope> part;
        for (int i = 0; i <= n; ++i)
            if ((S >> i) & 1u) part.push_back(hs[i]);
        const int sz = static_cast<int>(part.size());
        terms.push_back({(n + 1 - sz) % 2 ? Rational(-1) : Rational(1), minkowski_sum(part, ambient).vertices});
    }
    return weighted_oracle(std::move(terms), ambient, n);
}

Polytope mixed_fiber_polytope(const std::vector<Polytope>& hs, int n) {
    auto o = mixed_fiber_oracle(hs, n);
    Polytope p = polytope_from_oracle(o);
    check_convex(o, p);
    return p;
}

SupportOracle newton_E_pi_oracle(const Tuple& h, int n) {
    if (n < 0 || n >= h.dim) throw InputError("split does not match the ambient dimension");
    if (!is_relevant(project_tuple(h, n))) throw InputError("projected tuple is not relevant");
    const int k1 = h.size();
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    positive_compositions(k1, n + 1, cur, comps);
    std::map<std::vector<int>, Integer> coef;
    for (auto& a : comps) {
        std::vector<int> b(k1, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == k1) {
                int size = 0;
                Integer c = 1;
                for (int j = 0; j < k1; ++j) {
                    size += b[j];
                    c *= binomial(a[j], b[j]);
                }
                if (size == 0) return;
                coef[b] += (n + 1 - size) % 2 ? Integer(-c) : c;
                return;
            }
            for (b[i] = 0; b[i] <= a[i]; ++b[i]) rec(i + 1);
            b[i] = 0;
        };
        rec(0);
    }
    std::vector<Polytope> hulls;
    for (auto& m : h.members) hulls.push_back(convex_hull(m));
    std::vector<Weighted> terms;
    for (auto& [b, c] : coef) {
        if (c == 0) continue;
        std::vector<Polytope> part;
        for (int j = 0; j < k1; ++j)
            if (b[j] > 0) part.push_back(scale(hulls[j], b[j]));
        terms.push_back({Rational(c), minkowski_sum(part, h.dim).vertices});
    }
    return weighted_oracle(std::move(terms), h.dim, n);
}

Polytope newton_E_pi(const Tuple& h, int n) {
    auto o = newton_E_pi_oracle(h, n);
    Polytope p = polytope_from_oracle(o);
    check_convex(o, p);
    return p;
}

bool is_point_criterion(const Tuple& h, int n) {
    Tuple a = project_tuple(h, n);
    if (!is_relevant(a)) throw InputError("projected tuple is not relevant");
    const Mask I = min_dim(a) < 0 ? maximal_essential_subtuple(a) : a.full();
    return projection_injective(h.sum_points(I), h.dim, n);
}

Tuple universal_lift(const Tuple& a) {
    int N = 0;
    for (auto& m : a.members) N += static_cast<int>(m.size());
    std::vector<PointConfiguration> out;
    int off = 0;
    for (auto& m : a.members) {
        std::vector<QVec> pts;
        for (auto& p : m.points) {
            QVec x = QVec::Zero(a.dim + N);
            x.head(a.dim) = p;
            x[a.dim + off++] = 1;
            pts.push_back(x);
        }
        out.emplace_back(a.dim + N, std::move(pts));
    }
    return Tuple(a.dim + N, std::move(out));
}

Polytope translate_to_origin(const Polytope& p) { return translate(p, -p.vertices.front()); }

Rational VirtualPolytope::support(const QVec& w) const {
    Rational s = 0;
    for (auto& [c, p] : terms) {
        Rational best = w.dot(p.vertices.front());
        for (auto& v : p.vertices) best = std::min(best, Rational(w.dot(v)));
        s += c * best;
    }
    return s;
}

Polytope VirtualPolytope::polytope() const {
    if (!convex) throw InputError("signed combination is not a polytope");
    return convex_hull(ambient, pieces);
}

VirtualPolytope signed_combination(const std::vector<std::pair<Rational, Polytope>>& terms, int ambient) {
    VirtualPolytope v;
    v.ambient = ambient;
    std::vector<Polytope> mags;
    for (auto& [c, p] : terms) {
        if (p.ambient != ambient) throw InputError("polytopes live in different spaces");
        if (c.sign() == 0) continue;
        v.terms.push_back({c, p});
        mags.push_back(scale(p, abs(c)));
    }
    if (mags.empty()) mags.push_back(point_polytope(QVec::Zero(ambient)));
    Polytope refine = minkowski_sum(mags, ambient);
    for (auto& f : enumerate_faces(*refine.hull)) {
        if (f.dim != 0) continue;
        QVec piece = QVec::Zero(ambient);
        for (auto& [c, p] : v.terms) piece += p.vertices[minimizers(p.vertices, f.witness).front()] * c;
        v.directions.push_back(f.witness);
        v.pieces.push_back(piece);
    }
    v.convex = true;
    for (size_t s = 0; s < v.pieces.size() && v.convex; ++s)
        for (size_t t = 0; t < v.pieces.size(); ++t)
            if (v.pieces[s].dot(v.directions[t]) < v.pieces[t].dot(v.directions[t])) {
                v.convex = false;
                break;
            }
    return v;
}

}  // namespace edisc
