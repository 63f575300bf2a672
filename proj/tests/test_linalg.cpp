#include "edisc/linalg.hpp"

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

TEST(Linalg, RankAndSolve) {
    QMat m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    EXPECT_EQ(rank(m), 1);
    auto x = solve(m, qv({1, 2}));
    ASSERT_TRUE(x);
    EXPECT_TRUE(vec_equal(QVec(m * *x), qv({1, 2})));
    EXPECT_FALSE(solve(m, qv({1, 3})));
}

TEST(Linalg, SmithTransformsAreConsistent) {
    IMat m(3, 3);
    m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
    auto s = smith_form(m);
    IMat d = s.U * m * s.V;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) EXPECT_EQ(d(i, j), 0);
    EXPECT_EQ(IMat(s.U * s.Uinv), IMat::Identity(3, 3));
    Integer prod = 1;
    for (auto& x : s.diagonal) prod *= x;
    EXPECT_EQ(prod, 2 * 6 * 12);
}

TEST(Linalg, FrameOfDiagonal) {
    std::vector<QVec> pts{qv({1, 1}), qv({3, 3})};
    auto f = make_frame(pts, 2);
    EXPECT_EQ(f.rank, 1);
    QVec c = f.coords(qv({3, 3}));
    EXPECT_EQ(abs(c[0]), 2);
    EXPECT_TRUE(vec_equal(f.point(c), qv({3, 3})));
    QVec ann = f.annihilator().row(0).transpose();
    EXPECT_EQ(ann[0] + ann[1], 0);
}
