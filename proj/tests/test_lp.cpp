#include "edisc/lp.hpp"

#include <gtest/gtest.h>

using namespace edisc;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v(xs.size());
    int i = 0;
    for (long x : xs) v[i++] = x;
    return v;
}

}  // namespace

TEST(LinearProgram, SmallMaximum) {
    LinearProgram<Rational> lp;
    lp.vars = 2;
    lp.le(qv({1, 1}), Rational(4));
    lp.le(qv({1, 3}), Rational(6));
    lp.le(qv({-1, 0}), Rational(0));
    lp.le(qv({0, -1}), Rational(0));
    lp.objective = qv({1, 2});
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_EQ(r.value, 5);
}

TEST(LinearProgram, InfeasibleAndUnbounded) {
    LinearProgram<Rational> lp;
    lp.vars = 1;
    lp.le(qv({1}), Rational(-1));
    lp.le(qv({-1}), Rational(-1));
    EXPECT_EQ(solve_lp(lp).status, LPStatus::Infeasible);
    LinearProgram<Rational> u;
    u.vars = 1;
    u.le(qv({-1}), Rational(0));
    u.objective = qv({1});
    EXPECT_EQ(solve_lp(u).status, LPStatus::Unbounded);
}

TEST(LinearProgram, LexRightHandSide) {
    // max x subject to x <= 1 + eps, x <= 1 + 2 eps
    LinearProgram<Lex> lp;
    lp.vars = 1;
    lp.le(qv({1}), Lex(1, 1));
    lp.le(qv({1}), Lex(1, 2));
    lp.objective = qv({1});
    auto r = solve_lp(lp);
    ASSERT_EQ(r.status, LPStatus::Optimal);
    EXPECT_TRUE(r.value == Lex(1, 1));
}

TEST(Polyhedron, DimensionDetectsHiddenEqualities) {
    Polyhedron p(3);
    p.le(qv({1, 0, 0}), Rational(1));
    p.ge(qv({1, 0, 0}), Rational(1));
    p.le(qv({0, 1, 0}), Rational(2));
    p.ge(qv({0, 1, 0}), Rational(0));
    EXPECT_EQ(dimension(p), 2);
    auto imp = implicit_equalities(p);
    EXPECT_EQ(imp.size(), 2u);
    auto x = relative_interior_point(p);
    ASSERT_TRUE(x);
    EXPECT_GT((*x)[1], 0);
    EXPECT_LT((*x)[1], 2);
    EXPECT_FALSE(strictly_feasible_point(p));
    p.le(qv({0, 0, 0}), Rational(-1));
    EXPECT_EQ(dimension(p), -1);
}
