#include "edisc/lattice.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace edisc;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v(xs.size());
    int i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

Polytope hull_of(int dim, const std::vector<std::vector<long>>& pts) { return convex_hull(make_config(dim, pts)); }

using P2 = std::pair<long, long>;

// twice the area of the convex hull, by monotone chain and shoelace
long twice_area(std::vector<P2> p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) return 0;
    auto cross = [](P2 o, P2 a, P2 b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    std::vector<P2> h(2 * p.size());
    size_t k = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    for (size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    long a = 0;
    for (size_t i = 0; i < h.size(); ++i) {
        auto& u = h[i];
        auto& v = h[(i + 1) % h.size()];
        a += u.first * v.second - v.first * u.second;
    }
    return std::abs(a);
}

std::vector<P2> sum2(const std::vector<P2>& a, const std::vector<P2>& b) {
    std::vector<P2> out;
    for (auto& x : a)
        for (auto& y : b) out.push_back({x.first + y.first, x.second + y.second});
    return out;
}

Polytope from_pairs(const std::vector<P2>& p) {
    std::vector<std::vector<long>> v;
    for (auto& x : p) v.push_back({x.first, x.second});
    return hull_of(2, v);
}

}  // namespace

TEST(MixedVolume, UnitCell) {
    auto sx = hull_of(2, {{0, 0}, {1, 0}});
    auto sy = hull_of(2, {{0, 0}, {0, 1}});
    EXPECT_EQ(mixed_volume({sx, sy}, 2), 1);
    EXPECT_EQ(mixed_volume({sx, sx}, 2), 0);
}

TEST(MixedVolume, TriangleAndDouble) {
    auto t = hull_of(2, {{0, 0}, {1, 0}, {0, 1}});
    auto t2 = hull_of(2, {{0, 0}, {2, 0}, {0, 2}});
    EXPECT_EQ(mixed_volume({t, t2}, 2), 2);
    EXPECT_EQ(mixed_volume({t}, {2}, 2), 1);
}

TEST(MixedVolume, LowerArityInsideSpan) {
    auto seg = hull_of(3, {{0, 0, 0}, {1, 1, 0}});
    EXPECT_EQ(mixed_volume({seg}, 3), 1);
    auto seg3 = hull_of(3, {{0, 0, 0}, {3, 3, 0}});
    EXPECT_EQ(mixed_volume({seg3}, 3), 3);
}

TEST(MixedVolume, AgreesWithShoelaceOracleAndProperties) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(0, 3);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<P2> a, b, d;
        for (int i = 0; i < 3; ++i) a.push_back({c(rng), c(rng)});
        for (int i = 0; i < 3; ++i) b.push_back({c(rng), c(rng)});
        for (int i = 0; i < 2; ++i) d.push_back({c(rng), c(rng)});
        long oracle = twice_area(sum2(a, b)) - twice_area(a) - twice_area(b);
        auto pa = from_pairs(a), pb = from_pairs(b), pd = from_pairs(d);
        Rational mv = mixed_volume({pa, pb}, 2);
        EXPECT_EQ(mv * 2, oracle);
        EXPECT_EQ(mv, mixed_volume({pb, pa}, 2));
        EXPECT_EQ(mixed_volume({minkowski_sum(pa, pd), pb}, 2),
                  mixed_volume({pa, pb}, 2) + mixed_volume({pd, pb}, 2));
        EXPECT_GE(mixed_volume({minkowski_sum(pa, pd), pb}, 2), mv);
        if (pa.dim() == 2) EXPECT_EQ(mixed_volume({pa, pa}, 2), normalized_volume(pa));
    }
}

TEST(MixedMoment, UnivariateValues) {
    auto b2 = hull_of(1, {{0}, {2}});
    EXPECT_EQ(mixed_moment({b2, b2}, 1)[0], 4);
    auto b3 = hull_of(1, {{0}, {3}});
    EXPECT_EQ(mixed_moment({b3}, {2}, 1)[0], 9);
    auto pt = hull_of(2, {{1, 1}});
    EXPECT_TRUE(mixed_moment({pt}, {3}, 2).isZero());
}

TEST(LatticeIndex, Examples) {
    EXPECT_EQ(lattice_index(make_config(1, {{0}, {1}})), 1);
    EXPECT_EQ(lattice_index(make_config(1, {{0}, {2}})), 2);
    EXPECT_EQ(lattice_index(make_config(2, {{0, 0}, {2, 0}, {0, 2}})), 4);
    EXPECT_EQ(lattice_index(make_config(2, {{5, 5}})), 1);
    EXPECT_THROW(lattice_index(PointConfiguration(2, {})), InputError);
}

TEST(LatticeIndex, InvariantUnderTranslationAndUnimodularMaps) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> c(-2, 2);
    QMat u(3, 3);
    u << 1, 2, 0, 0, 1, 1, 1, 3, 2;  // determinant 1
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<QVec> pts, moved, mapped;
        QVec t = qv({c(rng), c(rng), c(rng)});
        for (int i = 0; i < 3; ++i) {
            QVec p = qv({c(rng), c(rng), c(rng)});
            pts.push_back(p);
            moved.push_back(p + t);
            mapped.push_back(u * p);
        }
        auto base = lattice_index(pts, 3);
        EXPECT_EQ(lattice_index(moved, 3), base);
        EXPECT_EQ(lattice_index(mapped, 3), base);
    }
}

TEST(ProjectAlong, Examples) {
    auto sq = make_config(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto p = project_along(sq, make_config(2, {{0, 0}, {1, 0}}));
    EXPECT_EQ(p, make_config(1, {{0}, {1}}));
    EXPECT_EQ(project_along(sq, make_config(2, {{3, 4}})), sq);
    auto diag = make_config(2, {{0, 0}, {1, 1}, {2, 2}});
    EXPECT_EQ(project_along(diag, make_config(2, {{0, 0}, {1, 1}})).size(), 1u);
}
