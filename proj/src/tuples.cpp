#include "edisc/tuples.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace edisc {

std::vector<int> mask_indices(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

Mask indices_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= 1u << i;
    return m;
}

Tuple::Tuple(int d, std::vector<PointConfiguration> m) : dim(d), members(std::move(m)) {
    if (members.size() > 30) throw InputError("too many tuple members");
    for (auto& c : members) {
        if (c.dim != d) throw InputError("tuple member has wrong ambient dimension");
        if (c.empty()) throw InputError("tuple member is empty");
    }
}

Tuple Tuple::sub(Mask J) const {
    std::vector<PointConfiguration> m;
    for (int j : mask_indices(J)) m.push_back(members.at(j));
    return Tuple(dim, std::move(m));
}

std::vector<QVec> Tuple::sum_points(Mask J) const {
    std::vector<QVec> acc{QVec::Zero(dim)};
    for (int j : mask_indices(J)) acc = pointwise_sum(acc, members.at(j).points);
    return acc;
}

bool Tuple::operator==(const Tuple& o) const { return dim == o.dim && members == o.members; }

bool Tuple::operator<(const Tuple& o) const {
    if (dim != o.dim) return dim < o.dim;
    return members < o.members;
}

int sum_dim(const Tuple& a, Mask J) {
    std::vector<QVec> dirs;
    for (int j : mask_indices(J)) {
        auto& pts = a.members.at(j).points;
        for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - pts[0]);
    }
    return rank_of_rows(dirs, a.dim);
}

int tuple_dim(const Tuple& a, Mask J) { return sum_dim(a, J) - std::popcount(J); }

int min_dim(const Tuple& a) {
    int best = 0;
    for (Mask J = 1; J <= a.full() && J != 0; ++J) best = std::min(best, tuple_dim(a, J));
    return best;
}

Mask maximal_essential_subtuple(const Tuple& a) {
    int best = min_dim(a);
    Mask meet = a.full();
    for (Mask J = 0;; ++J) {
        if (tuple_dim(a, J) == best) meet &= J;
        if (J == a.full()) break;
    }
    return meet;
}

bool is_essential(const Tuple& a) {
    int best = min_dim(a);
    for (Mask J = 0; J < a.full(); ++J)
        if (tuple_dim(a, J) == best) return false;
    return tuple_dim(a) == best;
}

bool is_relevant_in_span(const Tuple& a) {
    if (a.size() == 0) return false;
    for (Mask J = 1; J <= a.full() && J != 0; ++J)
        if (sum_dim(a, J) < std::popcount(J) - 1) return false;
    return true;
}

bool is_relevant(const Tuple& a) { return is_relevant_in_span(a) && sum_dim(a, a.full()) == a.dim; }

bool is_linearly_independent(const Tuple& a) { return min_dim(a) == 0; }

bool TupleFace::is_face_of(const TupleFace& o) const {
    for (size_t i = 0; i < face.members.size(); ++i) {
        auto& small = face.members[i].points;
        auto& big = o.face.members[i].points;
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end(), LexLess{})) return false;
    }
    return true;
}

std::vector<TupleFace> enumerate_faces(const Tuple& a) {
    std::vector<QVec> sum{QVec::Zero(a.dim)};
    for (auto& m : a.members) sum = convex_hull(a.dim, pointwise_sum(sum, convex_hull(m).vertices)).vertices;
    Hull h = compute_hull(a.dim, sum);
    std::vector<TupleFace> out;
    for (auto& f : enumerate_faces(h)) {
        TupleFace tf;
        tf.witness = f.witness;
        std::vector<PointConfiguration> parts;
        for (auto& m : a.members) parts.push_back(support_face(m, f.witness));
        tf.face = Tuple(a.dim, std::move(parts));
        out.push_back(std::move(tf));
    }
    return out;
}

PointConfiguration cayley_config(const Tuple& a, const std::vector<int>& I) {
    if (I.empty()) throw InputError("Cayley configuration of an empty index set");
    const int k = static_cast<int>(I.size());
    std::vector<QVec> pts;
    for (int pos = 0; pos < k; ++pos) {
        for (auto& p : a.members.at(I[pos]).points) {
            QVec c = QVec::Zero(k + a.dim);
            c[pos] = 1;
            c.tail(a.dim) = p;
            pts.push_back(c);
        }
    }
    return PointConfiguration(k + a.dim, std::move(pts));
}

std::vector<QVec> Facing::sum_points(int dim) const {
    std::vector<QVec> acc{QVec::Zero(dim)};
    for (auto& p : parts) acc = pointwise_sum(acc, p.points);
    return acc;
}

bool Facing::is_trivial(const Tuple& a) const {
    if (static_cast<int>(support.size()) != a.size()) return false;
    for (size_t i = 0; i < support.size(); ++i)
        if (!(parts[i] == a.members[support[i]])) return false;
    return true;
}

bool Facing::operator<(const Facing& o) const {
    if (support != o.support) return support < o.support;
    return parts < o.parts;
}

std::vector<Facing> enumerate_facings(const Tuple& a) {
    std::vector<int> all(a.size());
    for (int i = 0; i < a.size(); ++i) all[i] = i;
    auto cay = cayley_config(a, all);
    const int k1 = a.size();
    Hull h = compute_hull(cay.dim, cay.points);
    std::vector<Facing> out;
    for (auto& f : enumerate_faces(h)) {
        std::vector<std::vector<QVec>> groups(k1);
        for (int idx : bits_to_indices(f.points)) {
            const QVec& p = h.points[idx];
            int g = 0;
            while (p[g].is_zero()) ++g;
            groups[g].push_back(p.tail(a.dim));
        }
        Facing fc;
        fc.witness = f.witness;
        for (int i = 0; i < k1; ++i) {
            if (groups[i].empty()) continue;
            fc.support.push_back(i);
            fc.parts.emplace_back(a.dim, std::move(groups[i]));
        }
        out.push_back(std::move(fc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Facing> enumerate_facings_by_subtuples(const Tuple& a) {
    std::vector<Facing> out;
    for (Mask I = 1; I <= a.full() && I != 0; ++I) {
        Tuple sub = a.sub(I);
        auto idx = mask_indices(I);
        for (auto& tf : enumerate_faces(sub)) {
            Facing fc;
            fc.support = idx;
            fc.parts = tf.face.members;
            fc.witness = QVec::Zero(a.size() + a.dim);
            fc.witness.tail(a.dim) = tf.witness;
            for (int j = 0; j < a.size(); ++j) {
                Rational lo = tf.witness.dot(a.members[j].points[minimizers(a.members[j].points, tf.witness)[0]]);
                fc.witness[j] = -lo + ((I >> j) & 1u ? 0 : 1);
            }
            out.push_back(std::move(fc));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_facing(const Tuple& a, const Facing& g) {
    auto all = enumerate_facings(a);
    return std::binary_search(all.begin(), all.end(), g);
}

bool is_important(const Tuple& a, const Facing& g, const std::vector<TupleFace>& faces) {
    const Mask I = indices_mask(g.support);
    const int gdim = affine_dim(g.sum_points(a.dim), a.dim) - static_cast<int>(g.support.size());
    for (auto& tf : faces) {
        bool restricts = true;
        for (size_t p = 0; p < g.support.size() && restricts; ++p)
            restricts = tf.face.members[g.support[p]] == g.parts[p];
        if (!restricts) continue;
        bool ok = true;
        for (Mask J = I;; J = (J + 1) | I) {
            if (gdim > tuple_dim(tf.face, J)) { ok = false; break; }
            if (J == a.full()) break;
        }
        if (ok) return true;
    }
    return false;
}

bool is_important(const Tuple& a, const Facing& g) {
    if (!is_facing(a, g)) throw InputError("not a facing of the tuple");
    return is_important(a, g, enumerate_faces(a));
}

int EssentialStructure::trivial_index() const {
    for (size_t e = 0; e < facings.size(); ++e)
        for (int p : facings[e].provenance)
            if (p == 0) return static_cast<int>(e);
    return -1;
}

EssentialStructure essential_facings(const Tuple& a) {
    EssentialStructure s;
    s.tuple = a;
    s.faces = enumerate_faces(a);
    for (size_t f = 0; f < s.faces.size(); ++f) {
        const Tuple& b = s.faces[f].face;
        Mask J = maximal_essential_subtuple(b);
        EssentialFacing e;
        e.support = mask_indices(J);
        for (int j : e.support) e.parts.push_back(b.members[j]);
        e.dim = tuple_dim(b, J);
        e.trivial = true;
        for (int j : e.support)
            if (!(b.members[j] == a.members[j])) e.trivial = false;
        auto it = std::find_if(s.facings.begin(), s.facings.end(), [&](const EssentialFacing& o) { return o.same_as(e); });
        if (it == s.facings.end()) {
            e.provenance.push_back(static_cast<int>(f));
            s.facings.push_back(std::move(e));
        } else {
            it->provenance.push_back(static_cast<int>(f));
        }
    }
    const size_t F = s.faces.size(), E = s.facings.size();
    std::vector<std::vector<bool>> below(F, std::vector<bool>(F, false));
    for (size_t p = 0; p < F; ++p)
        for (size_t q = 0; q < F; ++q) below[p][q] = s.faces[p].is_face_of(s.faces[q]);
    s.adjacent.assign(E, std::vector<bool>(E, false));
    for (size_t e = 0; e < E; ++e)
        for (size_t f = 0; f < E; ++f)
            for (int p : s.facings[e].provenance) {
                for (int q : s.facings[f].provenance)
                    if (below[p][q]) { s.adjacent[e][f] = true; break; }
                if (s.adjacent[e][f]) break;
            }
    return s;
}

std::vector<int> dimension_chain(const EssentialStructure& s, int e) {
    if (s.facings.at(e).dim >= 0) throw InputError("dimension chain needs a negative-dimensional facing");
    std::vector<int> path{e};
    std::function<bool(int)> climb = [&](int cur) {
        if (s.facings[cur].dim == -1) return true;
        for (size_t f = 0; f < s.facings.size(); ++f) {
            if (!s.adjacent[cur][f] || s.facings[f].dim != s.facings[cur].dim + 1) continue;
            path.push_back(static_cast<int>(f));
            if (climb(static_cast<int>(f))) return true;
            path.pop_back();
        }
        return false;
    };
    if (!climb(e)) throw Contradiction("no adjacency chain for an essential facing");
    std::reverse(path.begin(), path.end());
    return path;
}

int covector_dimension(const Tuple& h, int n, const QVec& v) {
    if (n < 0 || n > h.dim) throw InputError("split does not match the ambient dimension");
    if (v.size() != h.dim) throw InputError("covector has wrong length");
    std::vector<QVec> acc{QVec::Zero(h.dim)};
    for (auto& m : h.members) acc = pointwise_sum(acc, support_face(m, v).points);
    std::vector<QVec> base;
    for (auto& p : acc) base.push_back(p.head(n));
    return affine_dim(acc, h.dim) - affine_dim(base, n);
}

}  // namespace edisc
