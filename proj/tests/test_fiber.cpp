#include "edisc/discriminant.hpp"
#include "edisc/fiber.hpp"
#include "edisc/secondary.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edisc;

namespace {

using Pts = std::vector<std::vector<long>>;

QVec qv(std::initializer_list<Rational> xs) {
    QVec v(xs.size());
    int i = 0;
    for (auto& x : xs) v[i++] = x;
    return v;
}

Polytope poly(int dim, const Pts& pts) { return convex_hull(make_config(dim, pts)); }

Tuple tuple_of(int dim, const std::vector<Pts>& members) {
    std::vector<PointConfiguration> m;
    for (auto& p : members) m.push_back(make_config(dim, p));
    return Tuple(dim, m);
}

Pts interval(int d) {
    Pts p;
    for (int i = 0; i <= d; ++i) p.push_back({i});
    return p;
}

Polytope segment(const Rational& a, const Rational& b) { return convex_hull(1, {qv({a}), qv({b})}); }

Pts random_pts(std::mt19937& rng, int dim, int count, int max_coord) {
    std::uniform_int_distribution<int> coord(0, max_coord);
    Pts p;
    for (int j = 0; j < count; ++j) {
        std::vector<long> x(dim);
        for (auto& v : x) v = coord(rng);
        p.push_back(x);
    }
    return p;
}

Polytope lift_base(const Polytope& mp, int n) {
    std::vector<QVec> pts;
    for (auto& v : mp.vertices) {
        QVec x = QVec::Zero(n + v.size());
        x.tail(v.size()) = v;
        pts.push_back(x);
    }
    return convex_hull(n + static_cast<int>(mp.ambient), pts);
}

}  // namespace

TEST(FiberPolytope, Square) {
    EXPECT_EQ(fiber_polytope(poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 1), segment(0, 1));
}

TEST(FiberPolytope, Triangle) {
    EXPECT_EQ(fiber_polytope(poly(2, {{0, 0}, {1, 0}, {0, 1}}), 1), segment(0, Rational(1, 2)));
}

TEST(FiberPolytope, Graph) {
    Polytope p = fiber_polytope(poly(2, {{0, 0}, {1, 1}}), 1);
    EXPECT_TRUE(p.is_point());
    EXPECT_EQ(p.vertices[0], qv({Rational(1, 2)}));
}

TEST(FiberPolytope, LowerDimensionalImage) {
    // image is a point: the fiber itself
    EXPECT_EQ(fiber_polytope(poly(2, {{0, 0}, {0, 3}}), 1), segment(0, 3));
}

TEST(FiberPolytope, TrivialBase) {
    Polytope h = poly(2, {{0, 0}, {2, 1}, {1, 2}});
    EXPECT_EQ(fiber_polytope(h, 0), h);
}

TEST(FiberPolytope, SplitMismatch) {
    EXPECT_THROW(fiber_polytope(poly(2, {{0, 0}}), 3), InputError);
}

TEST(MixedFiber, SquareDiagonal) {
    Polytope sq = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    EXPECT_EQ(mixed_fiber_polytope({sq, sq}, 1), segment(0, 2));
}

TEST(MixedFiber, Graphs) {
    Polytope g0 = poly(2, {{0, 0}, {1, 1}}), g1 = poly(2, {{0, 0}, {2, 2}});
    EXPECT_TRUE(mixed_fiber_polytope({g0, g1}, 1).is_point());
}

TEST(MixedFiber, VerticalAndHorizontal) {
    Polytope v = poly(2, {{0, 0}, {0, 1}}), h = poly(2, {{0, 0}, {1, 0}});
    EXPECT_EQ(mixed_fiber_polytope({v, h}, 1), segment(0, 1));
}

TEST(MixedFiber, WrongArity) {
    Polytope sq = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    EXPECT_THROW(mixed_fiber_polytope({sq}, 1), InputError);
}

TEST(MixedFiber, DiagonalSymmetryIntegrality) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + trial % 2, m = 1 + (trial / 2) % 2;
        std::vector<Polytope> hs;
        for (int i = 0; i <= n; ++i) hs.push_back(convex_hull(make_config(n + m, random_pts(rng, n + m, 4, 2))));
        Polytope h = hs[0];
        if (affine_dim(h.vertices, n + m) >= 0) {
            std::vector<Polytope> same(n + 1, h);
            Rational f = 1;
            for (int i = 2; i <= n + 1; ++i) f *= i;
            std::vector<QVec> base;
            for (auto& v : h.vertices) base.push_back(v.head(n));
            Polytope want = affine_dim(base, n) == n ? scale(fiber_polytope(h, n), f) : convex_hull(m, {QVec::Zero(m)});
            EXPECT_EQ(mixed_fiber_polytope(same, n), want);
        }
        Polytope mp = mixed_fiber_polytope(hs, n);
        for (auto& v : mp.vertices)
            for (auto& x : v) EXPECT_TRUE(is_integer(x));
        std::vector<Polytope> rev(hs.rbegin(), hs.rend());
        EXPECT_EQ(mixed_fiber_polytope(rev, n), mp);
    }
}

TEST(MixedFiber, TranslationCovariance) {
    Polytope a = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 2}}), b = poly(2, {{0, 0}, {2, 1}, {1, 1}});
    Polytope mp = mixed_fiber_polytope({a, b}, 1);
    // shifting one argument by t in the fiber moves MP by (n)! * vol(base of the other) * t
    Polytope shifted = mixed_fiber_polytope({translate(a, qv({0, 3})), b}, 1);
    EXPECT_EQ(shifted, translate(mp, qv({3 * 2})));
}

TEST(MixedFiber, SegmentBatteries) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1, m = 2;
        std::vector<Polytope> hs;
        for (int i = 0; i <= n; ++i) hs.push_back(convex_hull(make_config(n + m, random_pts(rng, n + m, 3, 2))));
        Polytope mp = mixed_fiber_polytope(hs, n);
        for (int s = 0; s < 4; ++s) {
            QVec d(m);
            for (auto& x : d) x = coord(rng);
            Polytope seg = convex_hull(m, {QVec::Zero(m), d});
            std::vector<Polytope> lhs{mp, seg};
            std::vector<Polytope> rhs = hs;
            rhs.push_back(lift_base(seg, n));
            EXPECT_EQ(mixed_volume(lhs, m), mixed_volume(rhs, n + m));
        }
    }
}

TEST(NewtonEPi, LinearParameter) {
    // a0 + a1 t + (b0 + b1 t) x: E = (a0 + a1 t)(b0 + b1 t), two atypical values
    Tuple h = tuple_of(2, {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}});
    EXPECT_EQ(newton_E_pi(h, 1), segment(0, 2));
    EXPECT_FALSE(is_point_criterion(h, 1));
}

TEST(NewtonEPi, ConstantCoefficients) {
    Tuple h = tuple_of(2, {{{0, 0}, {1, 0}, {2, 0}}});
    EXPECT_TRUE(newton_E_pi(h, 1).is_point());
    EXPECT_TRUE(is_point_criterion(h, 1));
}

TEST(NewtonEPi, UniversalQuadratic) {
    Tuple a = tuple_of(1, {interval(2)});
    Tuple h = universal_lift(a);
    EXPECT_EQ(translate_to_origin(newton_E_pi(h, 1)), translate_to_origin(mixed_secondary_polytope(a)));
}

TEST(NewtonEPi, UniversalMatchesSecondary) {
    std::vector<Tuple> cases{
        tuple_of(1, {interval(3)}),
        tuple_of(1, {interval(1), interval(2)}),
        tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}}),
        tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {1, 1}}}),
    };
    for (auto& a : cases) {
        Tuple h = universal_lift(a);
        EXPECT_EQ(translate_to_origin(newton_E_pi(h, a.dim)), translate_to_origin(mixed_secondary_polytope(a)));
    }
}

TEST(NewtonEPi, RejectsIrrelevant) {
    Tuple h = tuple_of(3, {{{0, 0, 0}, {1, 0, 1}}, {{0, 0, 0}, {1, 0, 0}}, {{0, 0, 0}, {1, 0, 2}}});
    EXPECT_THROW(newton_E_pi(h, 2), InputError);
    EXPECT_THROW(is_point_criterion(h, 2), InputError);
}

TEST(NewtonEPi, PointCriterionAgrees) {
    std::mt19937 rng(21);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 25; ++trial) {
        const int n = 1, m = 1 + trial % 2, members = 1 + trial % 2;
        std::vector<Pts> ms;
        for (int i = 0; i < members; ++i) ms.push_back(random_pts(rng, n + m, 1 + trial % 3, 1));
        Tuple h = tuple_of(n + m, ms);
        if (!is_relevant(project_tuple(h, n))) continue;
        ++checked;
        EXPECT_EQ(newton_E_pi(h, n).is_point(), is_point_criterion(h, n)) << trial;
    }
    EXPECT_GE(checked, 10);
}

TEST(Virtual, Difference) {
    Polytope sq = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), seg = poly(2, {{0, 0}, {1, 0}});
    auto v = signed_combination({{1, sq}, {-1, seg}}, 2);
    EXPECT_TRUE(v.convex);
    EXPECT_EQ(v.polytope(), poly(2, {{0, 0}, {0, 1}}));
    EXPECT_EQ(v.support(qv({0, -1})), -1);
}

TEST(Virtual, NonConvex) {
    Polytope sq = poly(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), seg = poly(2, {{0, 0}, {1, 0}});
    auto v = signed_combination({{1, seg}, {-1, sq}}, 2);
    EXPECT_FALSE(v.convex);
    EXPECT_THROW(v.polytope(), InputError);
}

TEST(NewtonDelta, Quadratic) {
    auto v = newton_delta(tuple_of(1, {interval(2)}));
    ASSERT_TRUE(v.convex);
    EXPECT_EQ(v.polytope(), poly(3, {{0, 2, 0}, {1, 0, 1}}));
}

TEST(NewtonDelta, Cubic) {
    // frozen from tests/oracles/univariate.py
    auto v = newton_delta(tuple_of(1, {interval(3)}));
    ASSERT_TRUE(v.convex);
    EXPECT_EQ(v.polytope(), poly(4, {{0, 2, 2, 0}, {0, 3, 0, 1}, {1, 0, 3, 0}, {2, 0, 0, 2}}));
}

TEST(NewtonDelta, UnimodularSimplex) {
    auto v = newton_delta(tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}}}));
    ASSERT_TRUE(v.convex);
    EXPECT_TRUE(v.polytope().is_point());
}

TEST(NewtonDelta, DegreeMatchesObstructionSum) {
    for (int d = 2; d <= 4; ++d) {
        Tuple a = tuple_of(1, {interval(d)});
        auto v = newton_delta(a);
        ASSERT_TRUE(v.convex);
        for (auto& p : v.pieces) EXPECT_EQ(p.sum(), discriminant_total_degree(a)) << d;
        EXPECT_EQ(discriminant_total_degree(a), 2 * d - 2);
    }
}
