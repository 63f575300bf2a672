#include "edisc/tuples.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

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

const Pts square{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
const Pts seg_x{{0, 0}, {1, 0}};
const Pts seg_y{{0, 0}, {0, 1}};

Tuple intro_example() { return tuple_of(2, {square, {{0, 0}, {1, 0}, {2, 0}}}); }

Tuple random_tuple(std::mt19937& rng, int dim, int members, int max_points, int max_coord) {
    std::uniform_int_distribution<int> npts(1, max_points), coord(0, max_coord);
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
    return tuple_of(dim, ms);
}

std::set<std::vector<PointConfiguration>> face_set(const std::vector<TupleFace>& fs) {
    std::set<std::vector<PointConfiguration>> out;
    for (auto& f : fs) out.insert(f.face.members);
    return out;
}

int find_facing(const EssentialStructure& s, const std::vector<int>& support, const std::vector<PointConfiguration>& parts) {
    for (size_t e = 0; e < s.facings.size(); ++e)
        if (s.facings[e].support == support && s.facings[e].parts == parts) return static_cast<int>(e);
    return -1;
}

}  // namespace

TEST(Tuples, DimensionsOfSimplePairs) {
    auto a = tuple_of(2, {seg_x, seg_y});
    EXPECT_EQ(sum_dim(a, 3u), 2);
    EXPECT_EQ(tuple_dim(a), 0);
    EXPECT_EQ(min_dim(a), 0);
    EXPECT_TRUE(is_relevant(a));
    EXPECT_TRUE(is_linearly_independent(a));
    auto b = tuple_of(2, {seg_x, seg_x});
    EXPECT_FALSE(is_relevant(b));
    EXPECT_EQ(min_dim(b), -1);
    EXPECT_EQ(maximal_essential_subtuple(b), 3u);
    EXPECT_TRUE(is_essential(b));
}

TEST(Tuples, IntroExampleIsRelevant) { EXPECT_TRUE(is_relevant(intro_example())); }

TEST(Tuples, SquareHasNineFaces) {
    auto a = tuple_of(2, {square});
    auto fs = enumerate_faces(a);
    EXPECT_EQ(fs.size(), 9u);
    EXPECT_EQ(fs.front().face, a);
}

TEST(Tuples, IntroExampleFaceAtUpwardCovector) {
    auto a = intro_example();
    bool found = false;
    for (auto& f : enumerate_faces(a)) {
        if (f.face.members[0] == make_config(2, {{0, 0}, {1, 0}}) && f.face.members[1] == a.members[1]) found = true;
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(support_face(a.members[0], qv({0, 1})), make_config(2, {{0, 0}, {1, 0}}));
}

TEST(Tuples, FacesMatchCovectorSweep) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_tuple(rng, 2, 2, 4, 2);
        std::set<std::vector<PointConfiguration>> swept;
        for (long x = -3; x <= 3; ++x)
            for (long y = -3; y <= 3; ++y) {
                std::vector<PointConfiguration> parts;
                for (auto& m : a.members) parts.push_back(support_face(m, qv({x, y})));
                swept.insert(parts);
            }
        EXPECT_EQ(face_set(enumerate_faces(a)), swept) << "trial " << trial;
    }
}

TEST(Tuples, SingleMemberFacingsAreFaces) {
    auto a = tuple_of(2, {square});
    auto fc = enumerate_facings(a);
    EXPECT_EQ(fc.size(), 9u);
    for (auto& f : fc) EXPECT_EQ(f.support, std::vector<int>{0});
}

TEST(Tuples, LoneVertexFacingOfCrossedSegments) {
    auto a = tuple_of(2, {seg_x, seg_y});
    Facing g;
    g.support = {0};
    g.parts = {make_config(2, {{0, 0}})};
    EXPECT_TRUE(is_facing(a, g));
}

TEST(Tuples, IntroExampleFacingExists) {
    auto a = intro_example();
    Facing g;
    g.support = {0, 1};
    g.parts = {make_config(2, {{0, 0}, {1, 0}}), a.members[1]};
    EXPECT_TRUE(is_facing(a, g));
}

TEST(Tuples, FacingEnumerationsAgree) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 1 + trial % 2;
        auto a = random_tuple(rng, dim, 1 + trial % 3, 3, 2);
        auto x = enumerate_facings(a), y = enumerate_facings_by_subtuples(a);
        y.erase(std::unique(y.begin(), y.end()), y.end());
        EXPECT_EQ(x, y) << "trial " << trial;
    }
}

TEST(Tuples, FacingWitnessSelectsFacing) {
    auto a = intro_example();
    std::vector<int> all{0, 1};
    auto cay = cayley_config(a, all);
    for (auto& f : enumerate_facings(a)) {
        auto face = support_face(cay, f.witness);
        size_t total = 0;
        for (auto& p : f.parts) total += p.size();
        EXPECT_EQ(face.size(), total);
    }
}

TEST(Tuples, ImportanceExamples) {
    auto a = intro_example();
    Facing triv;
    triv.support = {0, 1};
    triv.parts = a.members;
    EXPECT_TRUE(is_important(a, triv));
    Facing edge;
    edge.support = {0, 1};
    edge.parts = {make_config(2, {{0, 0}, {1, 0}}), a.members[1]};
    EXPECT_TRUE(is_important(a, edge));
    Facing bogus;
    bogus.support = {0};
    bogus.parts = {make_config(2, {{2, 2}})};
    EXPECT_THROW(is_important(a, bogus), InputError);
}

TEST(Tuples, SubmodularSumDimensions) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_tuple(rng, 1 + trial % 3, 3, 3, 2);
        for (Mask I = 0; I <= a.full(); ++I)
            for (Mask J = 0; J <= a.full(); ++J)
                EXPECT_GE(sum_dim(a, I) + sum_dim(a, J), sum_dim(a, I | J) + sum_dim(a, I & J));
    }
}

TEST(Tuples, MaximalEssentialSubtupleCharacterizations) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_tuple(rng, 1 + trial % 3, 1 + trial % 3, 3, 2);
        Mask m = maximal_essential_subtuple(a);
        int best = min_dim(a);
        EXPECT_EQ(tuple_dim(a, m), best);
        for (Mask J = 0; J <= a.full(); ++J) {
            if (tuple_dim(a, J) == best) EXPECT_EQ(J & m, m);
            if (J != 0 && is_essential(a.sub(J))) EXPECT_EQ(J & m, J);
        }
        if (m != 0) EXPECT_TRUE(is_essential(a.sub(m)));
    }
}

TEST(Tuples, EssentialSquareTopExample) {
    const Pts top{{0, 1}, {1, 1}};
    auto a = tuple_of(2, {square, top, top});
    auto s = essential_facings(a);
    auto tp = make_config(2, top);
    int e = find_facing(s, {0, 1, 2}, {tp, tp, tp});
    int e2 = find_facing(s, {1, 2}, {tp, tp});
    ASSERT_GE(e, 0);
    ASSERT_GE(e2, 0);
    EXPECT_EQ(s.facings[e].dim, -2);
    EXPECT_EQ(s.facings[e2].dim, -1);
    EXPECT_TRUE(s.facings[e2].trivial);
    EXPECT_EQ(s.trivial_index(), e2);
    EXPECT_TRUE(s.adjacent[e][e2]);
    EXPECT_TRUE(s.adjacent[e2][e2]);
    EXPECT_EQ(dimension_chain(s, e), (std::vector<int>{e2, e}));
}

TEST(Tuples, AdjacencyIsNotTransitive) {
    const Pts cube{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    const Pts tri{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    auto a = tuple_of(3, {cube, tri, tri, tri});
    auto s = essential_facings(a);
    auto o = make_config(3, {{0, 0, 0}});
    auto edge = make_config(3, {{0, 0, 0}, {0, 1, 2}});
    int v = find_facing(s, {0, 1, 2, 3}, {o, o, o, o});
    int e = find_facing(s, {1, 2, 3}, {o, o, o});
    int e2 = find_facing(s, {1, 2, 3}, {edge, edge, edge});
    ASSERT_GE(v, 0);
    ASSERT_GE(e, 0);
    ASSERT_GE(e2, 0);
    EXPECT_TRUE(s.adjacent[v][e]);
    EXPECT_TRUE(s.adjacent[e][e2]);
    EXPECT_FALSE(s.adjacent[v][e2]);
}

TEST(Tuples, ParallelPairChain) {
    auto a = tuple_of(2, {seg_x, seg_x, seg_y});
    auto s = essential_facings(a);
    auto o = make_config(2, {{0, 0}});
    int e = find_facing(s, {0, 1}, {o, o});
    ASSERT_GE(e, 0);
    EXPECT_EQ(s.facings[e].dim, -2);
    auto chain = dimension_chain(s, e);
    ASSERT_EQ(chain.size(), 2u);
    EXPECT_EQ(chain[0], s.trivial_index());
    EXPECT_EQ(dimension_chain(s, s.trivial_index()), std::vector<int>{s.trivial_index()});
}

TEST(Tuples, EssentialFacingProperties) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_tuple(rng, 2, 2 + trial % 2, 3, 2);
        auto s = essential_facings(a);
        int md = min_dim(a);
        for (size_t e = 0; e < s.facings.size(); ++e) {
            auto& f = s.facings[e];
            if (f.trivial) {
                EXPECT_EQ(f.dim, md);
                continue;
            }
            EXPECT_LT(f.dim, md);
            bool up = false;
            for (size_t g = 0; g < s.facings.size(); ++g)
                if (s.adjacent[e][g] && s.facings[g].dim == f.dim + 1) up = true;
            EXPECT_TRUE(up) << "trial " << trial;
            bool witnessed = false;
            for (auto& tf : s.faces) {
                auto& b = tf.face;
                if (witnessed || tuple_dim(b) != min_dim(b) || tuple_dim(b) != 1 + f.dim) continue;
                auto sb = essential_facings(b);
                for (auto& g : sb.facings)
                    if (!g.trivial && g.support == f.support && g.parts == f.parts) witnessed = true;
            }
            EXPECT_TRUE(witnessed) << "trial " << trial;
        }
    }
}

TEST(Tuples, CovectorDimension) {
    auto graph = tuple_of(2, {{{0, 0}, {1, 3}}});
    EXPECT_EQ(covector_dimension(graph, 1, qv({0, 0})), 0);
    auto sq = tuple_of(2, {square});
    EXPECT_EQ(covector_dimension(sq, 1, qv({0, 0})), 1);
    const Pts sys{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 0, 1}};
    auto h = tuple_of(3, {sys, sys});
    EXPECT_EQ(covector_dimension(h, 1, qv({0, 1, 1})), 0);
    EXPECT_EQ(covector_dimension(h, 1, qv({0, 0, 0})), 2);
    EXPECT_THROW(covector_dimension(h, 4, qv({0, 0, 0})), InputError);
}
