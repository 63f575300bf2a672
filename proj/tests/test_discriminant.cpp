#include "edisc/discriminant.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace edisc;

namespace {

using Pts = std::vector<std::vector<long>>;

QVec qv(std::initializer_list<long> xs) {
    QVec v(xs.size());
    int i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

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

const Pts square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const Pts seg_x{{0, 0}, {1, 0}};
const Pts seg_y{{0, 0}, {0, 1}};

Tuple intro_example() { return tuple_of(2, {square, {{0, 0}, {1, 0}, {2, 0}}}); }

Facing find_facing(const Tuple& a, const std::vector<int>& support, const std::vector<Pts>& parts) {
    std::vector<PointConfiguration> want;
    for (auto& p : parts) want.push_back(make_config(a.dim, p));
    for (auto& g : enumerate_facings(a))
        if (g.support == support && g.parts == want) return g;
    ADD_FAILURE() << "facing not found";
    return {};
}

Tuple random_relevant(std::mt19937& rng, int dim, int members) {
    std::uniform_int_distribution<int> npts(1, 4), coord(0, 2);
    for (;;) {
        std::vector<Pts> ms;
        for (int i = 0; i < members; ++i) {
            Pts p;
            int c = npts(rng);
            for (int j = 0; j < c; ++j) {
                std::vector<long> x(dim);
                for (auto& v : x) v = coord(rng);
                p.push_back(x);
            }
            ms.push_back(p);
        }
        Tuple a = tuple_of(dim, ms);
        if (is_relevant(a)) return a;
    }
}

// frozen from tests/oracles/univariate.py
const std::vector<std::pair<int, int>> principal_degree{{2, 4}, {3, 6}, {4, 8}};
const std::vector<std::pair<int, int>> discriminant_degree_oracle{{2, 2}, {3, 4}};

}  // namespace

TEST(Milnor, VertexOfInterval) {
    for (int d = 1; d <= 4; ++d) {
        Tuple a = tuple_of(1, {interval(d)});
        EXPECT_EQ(milnor_number(a, find_facing(a, {0}, {{{0}}})), 1) << d;
        EXPECT_EQ(milnor_number(a, find_facing(a, {0}, {{{d}}})), 1) << d;
    }
}

TEST(Milnor, EvenSupport) {
    Tuple a = tuple_of(1, {{{0}, {2}}});
    EXPECT_EQ(milnor_number(a, find_facing(a, {0}, {{{0}}})), 2);
}

TEST(Milnor, TrivialFacingIsOne) {
    Tuple a = intro_example();
    EXPECT_EQ(milnor_number(a, trivial_facing(a)), 1);
    EXPECT_TRUE(is_trivial_facing(a, trivial_facing(a)));
}

TEST(Milnor, IntroBottomEdge) {
    Tuple a = intro_example();
    Facing g = find_facing(a, {0, 1}, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {2, 0}}});
    auto m = milnor_datum(a, g);
    EXPECT_EQ(m.milnor, 1);
    EXPECT_EQ(m.index, 1);
    EXPECT_EQ(m.jump, -1);
    EXPECT_TRUE(is_important(a, g));
}

TEST(Milnor, RejectsNonFacing) {
    Tuple a = tuple_of(1, {interval(2)});
    Facing g;
    g.support = {0};
    g.parts = {make_config(1, {{1}})};
    EXPECT_THROW(milnor_number(a, g), InputError);
}

TEST(Milnor, FacingIndex) {
    Tuple a = tuple_of(1, {{{0}, {2}}});
    EXPECT_EQ(facing_index(a, trivial_facing(a)), 2);
    EXPECT_EQ(facing_index(a, find_facing(a, {0}, {{{2}}})), 1);
    Tuple b = tuple_of(2, {seg_x, seg_y});
    EXPECT_EQ(facing_index(b, trivial_facing(b)), 1);
}

TEST(Milnor, RestrictFacing) {
    Tuple a = intro_example();
    Facing outer = find_facing(a, {0, 1}, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {2, 0}}});
    Facing inner = find_facing(a, {1}, {{{2, 0}}});
    auto r = restrict_facing(outer, inner);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->support, std::vector<int>{1});
    Facing off = find_facing(a, {0}, {{{0, 1}}});
    EXPECT_FALSE(restrict_facing(outer, off).has_value());
}

TEST(Divisor, Quadratic) {
    Tuple a = tuple_of(1, {interval(2)});
    auto e = euler_divisor(a);
    EXPECT_EQ(e.sign_exponent, 1);
    ASSERT_EQ(e.components.size(), 3u);
    for (auto& c : e.components) EXPECT_EQ(c.multiplicity, 1);
    EXPECT_EQ(e.total_degree(), 4);
}

TEST(Divisor, EvenSupport) {
    Tuple a = tuple_of(1, {{{0}, {2}}});
    auto e = euler_divisor(a);
    ASSERT_EQ(e.components.size(), 3u);
    int points = 0;
    for (auto& c : e.components) {
        if (c.facing.is_trivial(a)) {
            EXPECT_EQ(c.multiplicity, 2);
            EXPECT_EQ(c.factor_degree, 0);
        } else {
            ++points;
            EXPECT_EQ(c.multiplicity, 2);
            EXPECT_EQ(c.factor_degree, 1);
        }
    }
    EXPECT_EQ(points, 2);
    EXPECT_EQ(e.total_degree(), 4);
}

TEST(Divisor, UnivariateLadder) {
    for (auto [d, deg] : principal_degree) {
        Tuple a = tuple_of(1, {interval(d)});
        EXPECT_EQ(euler_divisor(a).total_degree(), deg) << d;
        EXPECT_EQ(total_degree(a), deg) << d;
        EXPECT_EQ(decomposition_degree(a), deg) << d;
    }
}

TEST(Divisor, IntroExample) {
    Tuple a = intro_example();
    auto e = euler_divisor(a);
    Facing edge = find_facing(a, {0, 1}, {{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}, {2, 0}}});
    bool saw_edge = false, saw_trivial = false;
    for (auto& c : e.components) {
        EXPECT_GT(c.multiplicity, 0);
        if (c.facing == edge) {
            saw_edge = true;
            EXPECT_EQ(c.multiplicity, 1);
        }
        if (c.facing.is_trivial(a)) {
            saw_trivial = true;
            EXPECT_EQ(c.multiplicity, 1);
        }
    }
    EXPECT_TRUE(saw_edge);
    EXPECT_TRUE(saw_trivial);
}

TEST(Divisor, RejectsIrrelevant) {
    Tuple a = tuple_of(2, {seg_x, seg_x, seg_x});
    EXPECT_THROW(euler_divisor(a), InputError);
}

TEST(EulerCharacteristic, Examples) {
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(generic_euler_characteristic(tuple_of(1, {interval(d)})), d);
    EXPECT_EQ(generic_euler_characteristic(tuple_of(2, {square})), -2);
    EXPECT_EQ(generic_euler_characteristic(tuple_of(2, {square, square})), 2);
    EXPECT_THROW(generic_euler_characteristic(tuple_of(2, {seg_x})), InputError);
}

TEST(Degree, Univariate) {
    EXPECT_EQ(degree(tuple_of(1, {interval(2)}), 0), 4);
    for (int d = 1; d <= 5; ++d) EXPECT_EQ(degree(tuple_of(1, {interval(d)}), 0), 2 * d);
    EXPECT_EQ(degree(tuple_of(1, {{{0}, {2}}}), 0), 4);
}

TEST(Degree, Quasidegree) {
    // weighted sums of the oracle's Newton vertices
    EXPECT_EQ(quasidegree(tuple_of(1, {interval(2)}), qv({1})), 4);
    EXPECT_EQ(quasidegree(tuple_of(1, {interval(3)}), qv({1})), 9);
    EXPECT_EQ(quasidegree(tuple_of(1, {interval(4)}), qv({1})), 16);
}

TEST(Degree, Resultant) {
    Tuple a = tuple_of(1, {{{0}, {1}}, {{0}, {1}}});
    EXPECT_EQ(degree(a, 0), 1);
    EXPECT_EQ(degree(a, 1), 1);
    EXPECT_EQ(decomposition_degree(a), 2);
    auto ex = decomposition_exponents(a);
    ASSERT_EQ(ex.size(), 3u);
    EXPECT_EQ(ex[0].first, std::vector<int>{0});
    EXPECT_EQ(ex[0].second, -1);
    EXPECT_EQ(ex[1].second, -1);
    EXPECT_EQ(ex[2].second, 1);
}

TEST(Degree, DecompositionSingleMember) {
    auto ex = decomposition_exponents(tuple_of(1, {{{0}, {2}}}));
    ASSERT_EQ(ex.size(), 1u);
    EXPECT_EQ(ex[0].first, std::vector<int>{0});
    EXPECT_EQ(ex[0].second, 2);
    EXPECT_EQ(cayley_factor_degree(tuple_of(1, {{{0}, {2}}}), {0}), 2);
}

TEST(Degree, DecompositionSkipsDegenerate) {
    Tuple a = intro_example();
    for (auto& [I, e] : decomposition_exponents(a)) {
        auto cay = cayley_config(a, I);
        EXPECT_EQ(affine_dim(cay.points, cay.dim), cay.dim - 1);
        EXPECT_EQ(e * e, 1);
    }
}

TEST(Obstruction, UnitInterval) {
    Tuple a = tuple_of(1, {{{0}, {1}}});
    auto t = obstruction_table(a);
    ASSERT_EQ(t.facings.size(), 3u);
    EXPECT_EQ(t.tuple_position, 2);
    IMat want(3, 3);
    want << 1, 0, 1, 0, 1, 1, 0, 0, 1;
    EXPECT_EQ(t.matrix, want);
    EXPECT_EQ(t.obstruction(2), 1);
    EXPECT_EQ(t.obstruction(0), -1);
    EXPECT_EQ(t.obstruction(1), -1);
}

TEST(Obstruction, IntroTable) {
    Tuple a = intro_example();
    auto t = obstruction_table(a);
    const int F = static_cast<int>(t.facings.size());
    QMat m(F, F);
    for (int r = 0; r < F; ++r)
        for (int c = 0; c < F; ++c) m(r, c) = Rational(t.matrix(r, c));
    EXPECT_EQ(m * t.inverse, QMat::Identity(F, F));
    for (int f = 0; f < F; ++f) {
        EXPECT_EQ(t.matrix(f, f), t.index[f]);
        for (int g = f + 1; g < F; ++g) EXPECT_EQ(t.matrix(g, f), 0);
    }
}

TEST(Obstruction, DiscriminantDegrees) {
    for (auto [d, deg] : discriminant_degree_oracle)
        EXPECT_EQ(discriminant_total_degree(tuple_of(1, {interval(d)})), deg) << d;
    for (int d = 2; d <= 5; ++d) EXPECT_EQ(discriminant_degree(tuple_of(1, {interval(d)}), 0), 2 * d - 2);
    EXPECT_EQ(discriminant_total_degree(tuple_of(1, {{{0}, {2}}})), 0);
    EXPECT_EQ(discriminant_total_degree(tuple_of(2, {{{0, 0}, {1, 0}, {0, 1}}})), 0);
    EXPECT_EQ(discriminant_degree(tuple_of(1, {{{0}, {1}}, {{0}, {1}}}), 0), 1);
}

TEST(Codim, Examples) {
    EXPECT_EQ(resultant_codim(tuple_of(2, {seg_x, seg_y})), 0);
    EXPECT_EQ(resultant_codim(tuple_of(1, {{{3}}})), 1);
    EXPECT_EQ(resultant_codim(tuple_of(2, {seg_x, seg_x, seg_x})), 2);
}

TEST(Bifurcation, ConstantCoefficients) {
    Tuple h = tuple_of(2, {{{0, 0}, {1, 0}, {2, 0}}});
    auto v = bifurcation_emptiness(h, 1);
    EXPECT_TRUE(v.empty);
}

TEST(Bifurcation, VerticalSegment) {
    Tuple h = tuple_of(2, {{{0, 0}, {0, 1}, {1, 0}}});
    auto v = bifurcation_emptiness(h, 1);
    EXPECT_FALSE(v.empty);
    EXPECT_EQ(v.codim, 1);
}

TEST(Bifurcation, Overdetermined) {
    Tuple moving = tuple_of(2, {{{0, 0}, {0, 1}}});
    auto v = bifurcation_emptiness(moving, 1);
    EXPECT_FALSE(v.empty);
    EXPECT_EQ(v.codim, 1);
    Tuple fixed = tuple_of(2, {{{0, 0}}, {{0, 0}, {1, 0}}});
    EXPECT_TRUE(bifurcation_emptiness(fixed, 1).empty);
}

TEST(Bifurcation, SplitMismatch) {
    EXPECT_THROW(bifurcation_emptiness(tuple_of(1, {{{0}}}), 2), InputError);
}

TEST(DiscriminantProperties, RandomRelevantTuples) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = 1 + trial % 2, members = 1 + (trial / 2) % (dim + 1);
        Tuple a = random_relevant(rng, dim, members);
        auto faces = enumerate_faces(a);
        for (auto& g : enumerate_facings(a)) {
            Integer c = milnor_number_unchecked(a, g);
            EXPECT_GE(c, 0);
            EXPECT_EQ(c > 0, is_important(a, g, faces));
            auto [lhs, rhs] = cayley_milnor_sides(a, g);
            EXPECT_EQ(lhs, rhs);
            auto m = milnor_datum(a, g);
            if (m.milnor > 0) EXPECT_EQ(m.jump > 0, (a.dim - a.size() + 1) % 2 == 0);
        }
        auto e = euler_divisor(a);
        for (auto& c : e.components) EXPECT_GT(c.multiplicity, 0);
        Rational deg = Rational(total_degree(a));
        EXPECT_EQ(e.total_degree(), deg);
        EXPECT_EQ(Rational(decomposition_degree(a)), deg);
        for (int i = 0; i < a.size(); ++i) EXPECT_GE(degree(a, i), 0);
    }
}
