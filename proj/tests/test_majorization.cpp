#include <gtest/gtest.h>

#include <random>

#include "incpoly/majorization.hpp"
#include "oracles.hpp"

using namespace incpoly;
using cd = std::complex<double>;

namespace {

const cd I(0, 1);

SortedRoots<double> sorted(std::initializer_list<cd> values)
{
    return sort_desc_modulus(oracle::to_roots(std::vector<cd>(values)));
}

} // namespace

TEST(ProductMajorization, PaddedZeroGivesInfiniteLogMargin)
{
    const auto rep = product_majorization(sorted({1.0}), sorted({1.0, 1.0}));
    EXPECT_TRUE(rep.holds());
    ASSERT_EQ(rep.per_k_margin.size(), 2u);
    EXPECT_EQ(rep.per_k_margin[0], 0.0);
    EXPECT_TRUE(std::isinf(rep.per_k_margin[1]) && rep.per_k_margin[1] > 0);
    EXPECT_EQ(rep.left_moduli, (std::vector<double>{1.0, 0.0}));
}

TEST(ProductMajorization, TriangleCriticalPoints)
{
    RootList<double> r(3);
    r << 0.0, 1.0, I;
    const auto w = zeros_of_combination(r, Weights<double>::uniform(3));
    const auto rep = product_majorization(w, sort_desc_modulus(r));
    EXPECT_TRUE(rep.holds());

    // Oracle: explicit prefix products.
    const std::vector<double> zm{1.0, 1.0, 0.0};
    std::vector<double> wm{std::abs(w[0]), std::abs(w[1]), 0.0};
    double lp = 1, rp = 1;
    for (int k = 0; k < 3; ++k) {
        lp *= wm[std::size_t(k)];
        rp *= zm[std::size_t(k)];
        EXPECT_LE(lp, rp + 1e-12);
    }
}

TEST(ProductMajorization, FabricatedViolation)
{
    const auto rep = product_majorization(sorted({2.0}), sorted({1.0}));
    EXPECT_FALSE(rep.holds());
    EXPECT_EQ(rep.violated_at, Index(1));
    EXPECT_NEAR(rep.relative_margin[0], -1.0, 1e-15);
}

TEST(ProductMajorization, SmallViolationInsideLowProducts)
{
    // Right prefix 0.5 * 0.5, left 0.6 * 0.5: violated at k = 1 by 0.1.
    const auto rep = product_majorization(sorted({0.6, 0.5}), sorted({0.5, 0.5}));
    EXPECT_EQ(rep.violated_at, Index(1));
}

TEST(ProductMajorization, ZeroOnRightRequiresZeroOnLeft)
{
    const auto ok = product_majorization(sorted({1.0, 0.0}), sorted({2.0, 0.0}));
    EXPECT_TRUE(ok.holds());
    const auto bad = product_majorization(sorted({1.0, 0.5}), sorted({2.0, 0.0}));
    EXPECT_EQ(bad.violated_at, Index(2));
}

TEST(ProductMajorization, Errors)
{
    EXPECT_THROW(product_majorization(sorted({1.0, 1.0}), sorted({1.0})), InvalidArgument);
    SortedRoots<double> unsorted = sorted({1.0, 2.0});
    std::swap(unsorted.roots[0], unsorted.roots[1]);
    EXPECT_THROW(product_majorization(sorted({1.0}), unsorted), InvalidArgument);
}

TEST(PhiSumMajorization, IdentityOnTwoRoots)
{
    RootList<double> r(2);
    r << 0.0, 1.0;
    const auto w = zeros_of_combination(r, Weights<double>::uniform(2));
    const auto rep = phi_sum_majorization(w, sort_desc_modulus(r), ScalarTransform<double>::identity(), 1);
    EXPECT_TRUE(rep.holds());
    EXPECT_NEAR(rep.per_k_margin[0], 0.5, 1e-15);
}

TEST(PhiSumMajorization, SquaresOnSeededDegreeEight)
{
    std::mt19937_64 gen(8);
    const auto pts = oracle::random_disc_points(gen, 9);
    const auto g = oracle::random_simplex(gen, 9);
    const RootList<double> r = oracle::to_roots(pts);
    const Weights<double> w(Eigen::Map<const RealVector<double>>(g.data(), 9));
    const auto zeros = zeros_of_combination(r, w);
    const auto zs = sort_desc_modulus(r);
    const auto rep = phi_sum_majorization(zeros, zs, ScalarTransform<double>::power(2.0));
    EXPECT_TRUE(rep.holds());
    double ls = 0, rs = 0;
    for (Index k = 0; k < 9; ++k) {
        ls += k < zeros.size() ? std::norm(zeros[k]) : 0.0;
        rs += std::norm(zs[k]);
        EXPECT_NEAR(rep.per_k_margin[std::size_t(k)], rs - ls, 1e-12);
    }
}

TEST(PhiSumMajorization, PowersOnDoublePairExample)
{
    RootList<double> r(4);
    r << 0.0, 0.0, I, I;
    const auto w = zeros_of_combination(r, Weights<double>::uniform(4));
    const auto z = sort_desc_modulus(r);
    for (double p : {1.0, 2.0, 3.0}) {
        const auto rep = phi_sum_majorization(w, z, ScalarTransform<double>::power(p));
        EXPECT_TRUE(rep.holds()) << "p = " << p;
        // Zeros are {i, i/2, 0} against {i, i, 0, 0}.
        EXPECT_NEAR(rep.per_k_margin[1], 1.0 - std::pow(0.5, p), 1e-9);
    }
}

TEST(PhiSumMajorization, FabricatedViolation)
{
    const auto rep = phi_sum_majorization(sorted({3.0, 1.0}), sorted({2.0, 2.0}), ScalarTransform<double>::power(1.5));
    EXPECT_EQ(rep.violated_at, Index(1));
}

TEST(ScalarTransform, RejectsInvalidPhi)
{
    const ScalarTransform<double> decreasing{"-t", [](double t) { return -t; }};
    EXPECT_THROW(decreasing.validate(), InvalidArgument);
    // Increasing, but phi(exp(t)) grows like log t.
    const ScalarTransform<double> concave{"loglog", [](double t) { return std::log1p(std::log1p(t)); }};
    EXPECT_THROW(concave.validate(), InvalidArgument);
    EXPECT_THROW(phi_sum_majorization(sorted({1.0}), sorted({1.0}), concave), InvalidArgument);
    EXPECT_NO_THROW(ScalarTransform<double>::power(1.5).validate());
    EXPECT_NO_THROW(ScalarTransform<double>::power(4.0).validate());
}

TEST(CompareWithAbsolute, TwoRootClosedForm)
{
    RootList<double> r(2);
    r << I, -1.0;
    const auto rep = compare_with_absolute(r, Weights<double>::uniform(2));
    EXPECT_TRUE(rep.holds());
    ASSERT_EQ(rep.left_moduli.size(), 1u);
    EXPECT_NEAR(rep.left_moduli[0], std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(rep.right_moduli[0], 1.0, 1e-15);
}

TEST(CompareWithAbsolute, NonnegativeRealRootsCoincide)
{
    RootList<double> r(4);
    r << 0.5, 2.0, 0.0, 1.25;
    const auto rep = compare_with_absolute(r, Weights<double>{0.1, 0.2, 0.3, 0.4});
    EXPECT_TRUE(rep.holds());
    for (double m : rep.per_k_margin)
        EXPECT_NEAR(m, 0.0, 1e-12);
}

TEST(CompareWithAbsolute, SeededDegreeTen)
{
    std::mt19937_64 gen(10);
    const auto pts = oracle::random_disc_points(gen, 11);
    const auto g = oracle::random_simplex(gen, 11);
    const RootList<double> r = oracle::to_roots(pts);
    const Weights<double> w(Eigen::Map<const RealVector<double>>(g.data(), 11));
    const auto rep = compare_with_absolute(r, w);
    EXPECT_TRUE(rep.holds());
    EXPECT_EQ(rep.per_k_margin.size(), 10u);
    for (double p : {1.0, 1.5, 2.0, 4.0})
        EXPECT_TRUE(compare_with_absolute(r, w, ScalarTransform<double>::power(p)).holds());
}
