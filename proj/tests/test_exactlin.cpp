#include <gtest/gtest.h>

#include <random>

#include "angleforge/matrix.hpp"

using namespace angleforge;
using Q = Rational;

namespace {

Mat<Q> qmat(std::vector<std::vector<int>> rows) {
    std::vector<std::vector<Q>> r;
    for (auto& row : rows) {
        r.emplace_back();
        for (int x : row) r.back().push_back(Q(x));
    }
    return Mat<Q>::from_rows(r);
}

// Fraction-free elimination mod p: rows are combined by cross-multiplication,
// never by division.
std::size_t oracle_rank_mod_p(std::vector<std::vector<long long>> a, long long p) {
    std::size_t rank = 0, rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t r = rank;
        while (r < rows && a[r][c] % p == 0) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            long long f = a[i][c], g = a[rank][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] = ((a[i][j] * g - a[rank][j] * f) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

template <class K>
Mat<K> random_mat(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Mat<K> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = K(d(rng));
    return m;
}

}  // namespace

TEST(Rref, DependentRows) {
    auto r = rref(qmat({{1, 2}, {2, 4}}));
    EXPECT_EQ(r.rank, 1u);
}

TEST(Rref, IdentityIsFixed) {
    auto id = Mat<Q>::identity(3);
    auto r = rref(id);
    EXPECT_EQ(r.rank, 3u);
    EXPECT_EQ(r.reduced, id);
}

TEST(Rref, RandomModPMatchesFractionFreeOracle) {
    Fp::set_modulus(32003);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        // low-rank products make the comparison meaningful
        std::size_t k = 1 + trial % 6;
        auto a = random_mat<Fp>(rng, 6, k, 0, 32002) * random_mat<Fp>(rng, k, 6, 0, 32002);
        std::vector<std::vector<long long>> raw(6, std::vector<long long>(6));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) raw[i][j] = (long long)a(i, j).value();
        auto r = rref(a);
        EXPECT_EQ(r.rank, oracle_rank_mod_p(raw, 32003));
        EXPECT_EQ(r.transform * a, r.reduced);
        EXPECT_EQ(rank(r.transform), 6u);
    }
}

TEST(Rref, TransformIsInvertibleAndReproduces) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_mat<Q>(rng, 3 + trial % 4, 2 + trial % 5, -3, 3);
        auto r = rref(a);
        EXPECT_EQ(r.transform * a, r.reduced);
        EXPECT_EQ(rank(r.transform), a.rows());
        for (std::size_t k = 0; k < r.rank; ++k) EXPECT_EQ(r.reduced(k, r.pivots[k]), Q(1));
    }
}

TEST(Solve, IdentityGivesRhs) {
    auto b = qmat({{3, 1}, {-2, 5}, {7, 0}});
    auto s = solve(Mat<Q>::identity(3), b);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->particular, b);
    EXPECT_EQ(s->kernel.rows(), 0u);
}

TEST(Solve, ZeroSystemHasFullKernel) {
    auto s = solve(Mat<Q>(2, 2), Mat<Q>(2, 1));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->kernel.rows(), 2u);
}

TEST(Solve, InconsistentSystem) {
    auto s = solve(qmat({{1}, {1}}), qmat({{0}, {1}}));
    EXPECT_FALSE(s);
}

TEST(Solve, SubstitutionReproducesRhs) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_mat<Q>(rng, 5, 4, -2, 2);
        auto x = random_mat<Q>(rng, 4, 2, -4, 4);
        auto b = a * x;
        auto s = solve(a, b);
        ASSERT_TRUE(s);
        EXPECT_EQ(a * s->particular, b);
        for (std::size_t k = 0; k < s->kernel.rows(); ++k)
            EXPECT_TRUE((a * s->kernel.select_rows({k}).transpose()).is_zero());
        EXPECT_EQ(s->kernel.rows(), 4 - rank(a));
    }
}

TEST(Subspace, CoordinateAxes) {
    auto r = subspace_ops(qmat({{1, 0}}), qmat({{0, 1}}));
    EXPECT_EQ(r.intersection.rows(), 0u);
    EXPECT_EQ(r.sum.rows(), 2u);
    EXPECT_EQ(r.quotient.rows(), 1u);
}

TEST(Subspace, EqualSubspaces) {
    auto u = qmat({{1, 2, 3}, {0, 1, 1}});
    auto r = subspace_ops(u, u);
    EXPECT_EQ(r.intersection, row_space(u));
    EXPECT_EQ(r.quotient.rows(), 0u);
}

TEST(Subspace, GrassmannOnRandomSubspaces) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto u = random_mat<Q>(rng, 3, 6, -2, 2);
        auto v = random_mat<Q>(rng, 4, 6, -2, 2);
        if (trial % 3 == 0) v.set_block(0, 0, u.block(0, 0, 2, 6));  // force overlap
        auto r = subspace_ops(u, v);
        // oracle: ranks of stacked bases
        std::size_t du = rank(u), dv = rank(v), dsum = rank(vstack(u, v));
        EXPECT_EQ(r.sum.rows(), dsum);
        EXPECT_EQ(r.intersection.rows(), du + dv - dsum);
        EXPECT_TRUE(contained_in(r.intersection, u));
        EXPECT_TRUE(contained_in(r.intersection, v));
        EXPECT_EQ(r.quotient.rows(), du - r.intersection.rows());
    }
}

TEST(Subspace, AmbientMismatchThrows) {
    EXPECT_THROW(subspace_ops(qmat({{1, 0}}), qmat({{1, 0, 0}})), Error);
}

TEST(LinearCoordinates, RoundTrip) {
    std::mt19937 rng(9);
    auto basis = row_space(random_mat<Q>(rng, 3, 7, -3, 3));
    LinearCoordinates<Q> lc(basis);
    std::vector<Q> c = {Q(2), Q(-1, 3), Q(5)};
    auto v = lc.combine(c);
    EXPECT_EQ(lc.coords(v), c);
    std::vector<Q> outside(7, Q(0));
    for (std::size_t j = 0; j < 7; ++j) outside[j] = Q(int(j * j + 1));
    if (!contained_in(Mat<Q>::row_vector(outside), basis)) {
        EXPECT_FALSE(lc.checked_coords(outside));
    }
}

TEST(Scalar, ExactArithmetic) {
    Q a(7, 3), b(3, 7);
    EXPECT_EQ(a * b, Q(1));
    Fp::set_modulus(32003);
    Fp x(12345);
    EXPECT_EQ(x * x.inverse(), Fp(1));
    EXPECT_EQ(parse_scalar<Q>("-4/6"), Q(-2, 3));
}
