#include "edisc/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <type_traits>
#include <unordered_map>

namespace edisc {

namespace {

std::vector<QVec> sorted_unique(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end(), LexLess{});
    pts.erase(std::unique(pts.begin(), pts.end(), [](const QVec& a, const QVec& b) { return vec_equal(a, b); }),
              pts.end());
    return pts;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct Overflow {};

long z_mul(long a, long b) {
    long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long z_sub(long a, long b) {
    long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long z_add(long a, long b) {
    long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
long z_gcd(long a, long b) { return std::gcd(a, b); }
int z_sign(long a) { return (a > 0) - (a < 0); }
long z_from(const Integer& x) {
    if (boost::multiprecision::abs(x) > Integer(1) << 62) throw Overflow{};
    return x.convert_to<long>();
}
long z_div(long a, long g) { return a / g; }

Integer z_mul(const Integer& a, const Integer& b) { return a * b; }
Integer z_sub(const Integer& a, const Integer& b) { return a - b; }
Integer z_add(const Integer& a, const Integer& b) { return a + b; }
Integer z_gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
int z_sign(const Integer& a) { return a.sign(); }
Integer z_div(const Integer& a, const Integer& g) { return a / g; }

template <class Z>
struct Ray {
    std::vector<Z> v;
    Bits zero;
};

template <class Z>
void make_primitive(std::vector<Z>& v) {
    Z g = 0;
    for (auto& x : v) g = z_gcd(g, x);
    if (g == 0 || g == 1) return;
    for (auto& x : v) x = z_div(x, g);
}

template <class Z>
Z z_dot(const std::vector<Z>& a, const std::vector<Z>& b) {
    Z s = 0;
    for (size_t k = 0; k < a.size(); ++k) s = z_add(s, z_mul(a[k], b[k]));
    return s;
}

// Extreme rays of {x : c_i . x >= 0}, grown one constraint at a time from the simplicial cone of the basis rows.
template <class Z>
std::vector<Ray<Z>> double_description(const std::vector<std::vector<Integer>>& cons, const std::vector<int>& basis,
                                       const std::vector<std::vector<Integer>>& start, int r) {
    const int N = static_cast<int>(cons.size());
    auto convert = [](const std::vector<Integer>& x) {
        std::vector<Z> out;
        for (auto& y : x) {
            if constexpr (std::is_same_v<Z, long>) out.push_back(z_from(y));
            else out.push_back(y);
        }
        return out;
    };
    std::vector<std::vector<Z>> c;
    for (auto& x : cons) c.push_back(convert(x));
    std::vector<Ray<Z>> rays;
    Bits done(N);
    for (int k = 0; k <= r; ++k) {
        Ray<Z> ray{convert(start[k]), Bits(N)};
        for (int j = 0; j <= r; ++j)
            if (j != k) ray.zero.set(basis[j]);
        rays.push_back(std::move(ray));
    }
    for (int b : basis) done.set(b);

    for (int i = 0; i < N; ++i) {
        if (done.test(i)) continue;
        std::vector<Z> val(rays.size());
        std::vector<int> pos, neg, zer;
        for (size_t k = 0; k < rays.size(); ++k) {
            val[k] = z_dot(c[i], rays[k].v);
            int s = z_sign(val[k]);
            (s > 0 ? pos : s < 0 ? neg : zer).push_back(static_cast<int>(k));
        }
        done.set(i);
        if (neg.empty()) {
            for (int k : zer) rays[k].zero.set(i);
            continue;
        }
        std::vector<Ray<Z>> next;
        for (int p : pos) next.push_back(rays[p]);
        for (int z : zer) {
            next.push_back(rays[z]);
            next.back().zero.set(i);
        }
        for (int p : pos) {
            for (int q : neg) {
                Bits common = rays[p].zero & rays[q].zero;
                if (static_cast<int>(common.count()) < r - 1) continue;
                bool adjacent = true;
                for (size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (static_cast<int>(k) == p || static_cast<int>(k) == q) continue;
                    if (common.is_subset_of(rays[k].zero)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray<Z> nr{std::vector<Z>(r + 1), common};
                for (int k = 0; k <= r; ++k) nr.v[k] = z_sub(z_mul(val[p], rays[q].v[k]), z_mul(val[q], rays[p].v[k]));
                make_primitive(nr.v);
                nr.zero.set(i);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }
    return rays;
}

std::vector<Integer> integral(const QVec& v) {
    QVec p = primitive(v);
    std::vector<Integer> out;
    for (auto& x : p) out.push_back(numerator(x));
    return out;
}

// Facets of conv(pts) for points with affinely independent frame coordinates; pts must be distinct.
Hull build_hull(int ambient, std::vector<QVec> pts) {
    Hull h;
    h.ambient = ambient;
    h.points = std::move(pts);
    const int N = static_cast<int>(h.points.size());
    h.frame = make_frame(h.points, ambient);
    const int r = h.frame.rank;
    h.dim = r;
    h.local.reserve(N);
    for (auto& p : h.points) h.local.push_back(h.frame.coords(p));
    h.vertex_mask = Bits(N);
    if (r == 0) {
        h.vertex_mask.set(0);
        h.vertices = {0};
        return h;
    }

    auto constraint = [&](int i) {
        QVec c(r + 1);
        c.head(r) = h.local[i];
        c[r] = 1;
        return c;
    };

    std::vector<int> basis, lead;
    std::vector<QVec> rows, echelon;
    for (int i = 0; i < N && static_cast<int>(basis.size()) < r + 1; ++i) {
        QVec c = constraint(i), e = c;
        for (size_t k = 0; k < echelon.size(); ++k)
            if (!e[lead[k]].is_zero()) e -= echelon[k] * (e[lead[k]] / echelon[k][lead[k]]);
        int l = 0;
        while (l <= r && e[l].is_zero()) ++l;
        if (l > r) continue;
        basis.push_back(i);
        rows.push_back(c);
        echelon.push_back(e);
        lead.push_back(l);
    }
    QMat M(r + 1, r + 1);
    for (int k = 0; k <= r; ++k) M.row(k) = rows[k].transpose();
    QMat Minv = inverse(M);

    // positive rescaling keeps each constraint's sign pattern
    std::vector<std::vector<Integer>> cons, start;
    for (int i = 0; i < N; ++i) cons.push_back(integral(constraint(i)));
    for (int k = 0; k <= r; ++k) start.push_back(integral(QVec(Minv.col(k))));
    std::vector<std::pair<QVec, Bits>> rays;
    auto collect = [&](auto&& found) {
        for (auto& ray : found) {
            QVec v(r + 1);
            for (int k = 0; k <= r; ++k) v[k] = Rational(Integer(ray.v[k]));
            rays.emplace_back(v, ray.zero);
        }
    };
    try {
        collect(double_description<long>(cons, basis, start, r));
    } catch (const Overflow&) {
        collect(double_description<Integer>(cons, basis, start, r));
    }

    for (auto& [ray, zero] : rays) {
        Facet f;
        QVec a = ray.head(r);
        QVec ap = primitive(a);
        int nz = 0;
        while (a[nz].is_zero()) ++nz;
        Rational s = ap[nz] / a[nz];
        f.span_normal = ap;
        f.span_offset = -ray[r] * s;
        f.normal = h.frame.lift_covector(ap);
        f.offset = f.normal.dot(h.frame.base) + f.span_offset;
        f.incident = zero;
        h.facets.push_back(std::move(f));
    }
    std::sort(h.facets.begin(), h.facets.end(),
              [](const Facet& x, const Facet& y) { return lex_less(x.normal, y.normal); });

    for (int i = 0; i < N; ++i) {
        Bits meet(N);
        meet.set();
        for (auto& f : h.facets)
            if (f.incident.test(i)) meet &= f.incident;
        if (meet.count() == 1) {
            h.vertex_mask.set(i);
            h.vertices.push_back(i);
        }
    }
    return h;
}

int face_dim(const Hull& h, const Bits& pts) {
    std::vector<int> idx = bits_to_indices(pts);
    std::vector<QVec> diffs;
    for (size_t k = 1; k < idx.size(); ++k) diffs.push_back(h.local[idx[k]] - h.local[idx[0]]);
    return rank_of_rows(diffs, h.dim);
}

}  // namespace

std::vector<int> bits_to_indices(const Bits& b) {
    std::vector<int> out;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
    return out;
}

PointConfiguration::PointConfiguration(int d, std::vector<QVec> pts) : dim(d) {
    for (auto& p : pts)
        if (p.size() != d) throw InputError("point has wrong ambient dimension");
    points = sorted_unique(std::move(pts));
}

bool PointConfiguration::is_lattice() const {
    for (auto& p : points)
        for (Eigen::Index i = 0; i < p.size(); ++i)
            if (!is_integer(p[i])) return false;
    return true;
}

int PointConfiguration::index_of(const QVec& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p, LexLess{});
    if (it != points.end() && vec_equal(*it, p)) return static_cast<int>(it - points.begin());
    return -1;
}

bool PointConfiguration::operator==(const PointConfiguration& o) const {
    if (dim != o.dim || points.size() != o.points.size()) return false;
    for (size_t i = 0; i < points.size(); ++i)
        if (!vec_equal(points[i], o.points[i])) return false;
    return true;
}

bool PointConfiguration::operator<(const PointConfiguration& o) const {
    if (dim != o.dim) return dim < o.dim;
    return std::lexicographical_compare(points.begin(), points.end(), o.points.begin(), o.points.end(), LexLess{});
}

PointConfiguration make_config(int dim, const std::vector<std::vector<long>>& pts) {
    std::vector<QVec> q;
    for (auto& p : pts) {
        QVec v(p.size());
        for (size_t i = 0; i < p.size(); ++i) v[i] = p[i];
        q.push_back(v);
    }
    return PointConfiguration(dim, std::move(q));
}

Hull compute_hull(int ambient, const std::vector<QVec>& pts) {
    if (pts.empty()) throw InputError("convex hull of an empty configuration");
    return build_hull(ambient, sorted_unique(pts));
}

bool Polytope::operator==(const Polytope& o) const {
    if (ambient != o.ambient || vertices.size() != o.vertices.size()) return false;
    for (size_t i = 0; i < vertices.size(); ++i)
        if (!vec_equal(vertices[i], o.vertices[i])) return false;
    return true;
}

namespace {

// recent hulls by point set; Minkowski sums recur across mixed-volume terms
class HullCache {
public:
    std::optional<Polytope> find(const std::string& key) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void put(const std::string& key, const Polytope& p) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (map_.size() >= 200000) map_.clear();
        map_.emplace(key, p);
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::string, Polytope> map_;
};

HullCache& hull_cache() {
    static HullCache cache;
    return cache;
}

std::string point_key(int ambient, const std::vector<QVec>& pts) {
    std::string key = std::to_string(ambient);
    for (auto& p : pts) {
        key += ';';
        for (auto& x : p) {
            key += x.str();
            key += ',';
        }
    }
    return key;
}

Polytope hull_of_sorted(int ambient, std::vector<QVec> pts) {
    auto full = std::make_shared<Hull>(build_hull(ambient, std::move(pts)));
    std::vector<QVec> verts;
    for (int v : full->vertices) verts.push_back(full->points[v]);
    Polytope p;
    p.ambient = ambient;
    if (verts.size() == full->points.size()) {
        p.vertices = verts;
        p.hull = full;
    } else {
        p.vertices = verts;
        p.hull = std::make_shared<Hull>(build_hull(ambient, verts));
    }
    return p;
}

}  // namespace

Polytope convex_hull(int ambient, const std::vector<QVec>& pts) {
    if (pts.empty()) throw InputError("convex hull of an empty configuration");
    auto sorted = sorted_unique(pts);
    const std::string key = point_key(ambient, sorted);
    if (auto hit = hull_cache().find(key)) return *hit;
    Polytope p = hull_of_sorted(ambient, std::move(sorted));
    hull_cache().put(key, p);
    return p;
}

Polytope convex_hull(const PointConfiguration& c) { return convex_hull(c.dim, c.points); }

std::vector<int> minimizers(const std::vector<QVec>& pts, const QVec& gamma) {
    std::vector<int> out;
    Rational best;
    for (size_t i = 0; i < pts.size(); ++i) {
        Rational v = gamma.dot(pts[i]);
        if (out.empty() || v < best) {
            out = {static_cast<int>(i)};
            best = v;
        } else if (v == best) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

PointConfiguration support_face(const PointConfiguration& c, const QVec& gamma) {
    std::vector<QVec> pts;
    for (int i : minimizers(c.points, gamma)) pts.push_back(c.points[i]);
    return PointConfiguration(c.dim, std::move(pts));
}

Polytope support_face(const Polytope& p, const QVec& gamma) {
    std::vector<QVec> pts;
    for (int i : minimizers(p.vertices, gamma)) pts.push_back(p.vertices[i]);
    return convex_hull(p.ambient, pts);
}

std::vector<QVec> pointwise_sum(const std::vector<QVec>& a, const std::vector<QVec>& b) {
    std::vector<QVec> out;
    out.reserve(a.size() * b.size());
    for (auto& x : a)
        for (auto& y : b) out.push_back(x + y);
    return sorted_unique(std::move(out));
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
    return convex_hull(a.ambient, pointwise_sum(a.vertices, b.vertices));
}

Polytope minkowski_sum(const std::vector<Polytope>& ps, int ambient) {
    Polytope acc = point_polytope(QVec::Zero(ambient));
    for (auto& p : ps) acc = minkowski_sum(acc, p);
    return acc;
}

Polytope scale(const Polytope& p, const Rational& s) {
    std::vector<QVec> v;
    for (auto& x : p.vertices) v.push_back(x * s);
    return convex_hull(p.ambient, v);
}

Polytope translate(const Polytope& p, const QVec& t) {
    std::vector<QVec> v;
    for (auto& x : p.vertices) v.push_back(x + t);
    return convex_hull(p.ambient, v);
}

Polytope point_polytope(const QVec& p) { return convex_hull(static_cast<int>(p.size()), {p}); }

std::vector<Face> enumerate_faces(const Hull& h) {
    const int N = static_cast<int>(h.points.size());
    std::vector<Face> out;
    Bits all(N);
    all.set();
    out.push_back({all, h.dim, QVec::Zero(h.ambient)});
    std::map<Bits, int> seen;
    seen[all] = 0;
    std::vector<Bits> queue;
    for (auto& f : h.facets)
        if (!seen.count(f.incident)) {
            seen[f.incident] = 0;
            queue.push_back(f.incident);
        }
    for (size_t q = 0; q < queue.size(); ++q) {
        for (auto& f : h.facets) {
            Bits meet = queue[q] & f.incident;
            if (meet.none() || seen.count(meet)) continue;
            seen[meet] = 0;
            queue.push_back(meet);
        }
    }
    for (auto& s : queue) {
        Face face{s, face_dim(h, s), QVec::Zero(h.ambient)};
        for (auto& f : h.facets)
            if (s.is_subset_of(f.incident)) face.witness += f.normal;
        out.push_back(std::move(face));
    }
    std::stable_sort(out.begin() + 1, out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return bits_to_indices(a.points) < bits_to_indices(b.points);
    });
    return out;
}

std::vector<std::vector<int>> pulling_triangulation(const Hull& h) {
    if (h.dim == 0) return {{h.vertices[0]}};
    auto faces = enumerate_faces(h);
    std::vector<std::vector<std::vector<int>>> memo(faces.size());
    std::vector<bool> ready(faces.size(), false);
    std::function<const std::vector<std::vector<int>>&(size_t)> tri = [&](size_t fi) -> const auto& {
        if (ready[fi]) return memo[fi];
        const Face& F = faces[fi];
        Bits fv = F.points & h.vertex_mask;
        int v = static_cast<int>(fv.find_first());
        if (F.dim == 0) {
            memo[fi] = {{v}};
        } else {
            for (size_t gi = 0; gi < faces.size(); ++gi) {
                const Face& G = faces[gi];
                if (G.dim != F.dim - 1 || G.points.test(v) || !G.points.is_subset_of(F.points)) continue;
                for (auto s : tri(gi)) {
                    s.push_back(v);
                    memo[fi].push_back(std::move(s));
                }
            }
        }
        ready[fi] = true;
        return memo[fi];
    };
    return tri(0);
}

namespace {

Rational simplex_det(const Hull& h, const std::vector<int>& s) {
    const int r = h.dim;
    QMat m(r, r);
    for (int k = 1; k <= r; ++k) m.col(k - 1) = h.local[s[k]] - h.local[s[0]];
    return abs(determinant(m));
}

}  // namespace

Rational normalized_volume(const Polytope& p) {
    const Hull& h = *p.hull;
    if (h.dim == 0) return 1;
    if (h.volume) return *h.volume;
    Rational v = 0;
    for (auto& s : pulling_triangulation(h)) v += simplex_det(h, s);
    h.volume = v;
    return v;
}

Rational euclidean_volume(const Polytope& p) {
    if (p.dim() < p.ambient) return 0;
    return normalized_volume(p) / factorial(p.ambient);
}

QVec moment(const Polytope& p) {
    QVec m = QVec::Zero(p.ambient);
    if (p.dim() < p.ambient) return m;
    const Hull& h = *p.hull;
    Rational nf = factorial(p.ambient);
    for (auto& s : pulling_triangulation(h)) {
        Rational vol = simplex_det(h, s) / nf;
        QVec c = QVec::Zero(p.ambient);
        for (int i : s) c += h.points[i];
        m += c * (vol / Rational(p.ambient + 1));
    }
    return m;
}

std::vector<std::vector<int>> regular_subdivision(const std::vector<QVec>& pts, int ambient,
                                                  const std::vector<Rational>& heights) {
    Frame fr = make_frame(pts, ambient);
    const int r = fr.rank;
    std::vector<QVec> lifted;
    for (size_t i = 0; i < pts.size(); ++i) {
        QVec l(r + 1);
        l.head(r) = fr.coords(pts[i]);
        l[r] = heights[i];
        lifted.push_back(l);
    }
    Hull h = build_hull(r + 1, lifted);
    std::vector<std::vector<int>> cells;
    if (h.dim == r) {
        std::vector<int> all(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
        cells.push_back(all);
        return cells;
    }
    for (auto& f : h.facets)
        if (f.normal[r].sign() > 0) cells.push_back(bits_to_indices(f.incident));
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace edisc
