#include <gtest/gtest.h>

#include <random>

#include "incpoly/roots.hpp"
#include "oracles.hpp"

using namespace incpoly;
using cd = std::complex<double>;
using P = Polynomial<double>;

namespace {

const cd I(0, 1);

}

TEST(FindRoots, QuadraticFromEscapingExample)
{
    const RootList<double> r = find_roots(P{-1.0 / 3, -I, 1.0});
    ASSERT_EQ(r.size(), 2);
    RootList<double> expected(2);
    expected << 0.5 * I + 1.0 / (2 * std::sqrt(3.0)), 0.5 * I - 1.0 / (2 * std::sqrt(3.0));
    EXPECT_LE(multiset_distance(r, expected), 1e-12);
}

TEST(FindRoots, Linear)
{
    const cd c(2.5, -1.0);
    const RootList<double> r = find_roots(P{-c, 1.0});
    ASSERT_EQ(r.size(), 1);
    EXPECT_LE(std::abs(r[0] - c), 1e-15);
}

TEST(FindRoots, RecoversConstructionRoots)
{
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = oracle::random_disc_points(gen, 9);
        const RootList<double> truth = oracle::to_roots(pts);
        const RootList<double> found = find_roots(from_roots(truth));
        EXPECT_LE(multiset_distance(found, truth), 1e-7 * scale_of(truth));
    }
}

TEST(FindRoots, ResidualBoundUpToDegree64)
{
    std::mt19937_64 gen(100);
    for (std::size_t d : {1u, 5u, 17u, 33u, 64u}) {
        const auto pts = oracle::random_disc_points(gen, d, 1.0);
        const P p = from_roots(oracle::to_roots(pts));
        const RootList<double> found = find_roots(p);
        ASSERT_EQ(found.size(), Index(d));
        for (Index i = 0; i < found.size(); ++i)
            EXPECT_LE(std::abs(p(found[i])),
                      1e-9 * p.max_abs_coeff() * std::pow(1 + std::abs(found[i]), double(d)));
    }
}

TEST(FindRoots, MultipleRootsFormClusters)
{
    RootList<double> truth(5);
    truth << 1.0, 1.0, I, I, -2.0;
    const RootList<double> found = find_roots(from_roots(truth));
    EXPECT_LE(multiset_distance(found, truth), 1e-6);
}

TEST(FindRoots, ExactZeroRoots)
{
    RootList<double> truth(4);
    truth << 0.0, 0.0, 1.0, I;
    const RootList<double> found = find_roots(from_roots(truth));
    EXPECT_LE(multiset_distance(found, truth), 1e-12);
    int exact = 0;
    for (Index i = 0; i < 4; ++i)
        exact += found[i] == cd(0);
    EXPECT_EQ(exact, 2);
}

TEST(FindRoots, Errors)
{
    EXPECT_THROW(find_roots(P{1.0}), InvalidArgument);
    EXPECT_THROW(find_roots(P(ComplexVector<double>::Ones(66))), InvalidArgument);
}

TEST(SortDescModulus, TieBrokenByArgument)
{
    RootList<double> r(3);
    r << 1.0, I, -2.0;
    const auto s = sort_desc_modulus(r);
    EXPECT_EQ(s[0], cd(-2.0));
    EXPECT_EQ(s[1], cd(1.0));
    EXPECT_EQ(s[2], I);
    EXPECT_EQ(s.source, (std::vector<Index>{2, 0, 1}));
}

TEST(SortDescModulus, Empty)
{
    EXPECT_EQ(sort_desc_modulus(RootList<double>()).size(), 0);
}

TEST(SortDescModulus, AgreesWithNaiveSort)
{
    std::mt19937_64 gen(2024);
    auto pts = oracle::random_disc_points(gen, 100);
    // Force exact modulus ties.
    pts[10] = cd(1, 0);
    pts[11] = cd(0, 1);
    pts[12] = cd(-1, 0);
    pts[13] = cd(1, 0);
    const auto s = sort_desc_modulus(oracle::to_roots(pts));
    const auto order = oracle::naive_modulus_order(pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        EXPECT_EQ(s.source[i], Index(order[i]));
}

TEST(SortDescModulus, PaddingAppendsExactZeros)
{
    RootList<double> r(2);
    r << 3.0, I;
    const auto s = sort_desc_modulus(r).padded(4);
    ASSERT_EQ(s.size(), 4);
    EXPECT_EQ(s[3], cd(0));
    EXPECT_EQ(s[2], cd(0));
    EXPECT_EQ(s.source[3], -1);
    EXPECT_THROW(sort_desc_modulus(r).padded(1), InvalidArgument);
}

TEST(MultisetDistance, Bottleneck)
{
    RootList<double> a(3), b(3);
    a << 0.0, 1.0, 2.0;
    b << 2.1, 0.05, 1.0;
    EXPECT_NEAR(multiset_distance(a, b), 0.1, 1e-12);
    EXPECT_TRUE(std::isinf(multiset_distance(a, RootList<double>(RootList<double>::Zero(2)))));
}

TEST(ZerosOfCombination, TwoRoots)
{
    RootList<double> r(2);
    r << 0.0, 1.0;
    const auto z = zeros_of_combination(r, Weights<double>{0.5, 0.5});
    ASSERT_EQ(z.size(), 1);
    EXPECT_LE(std::abs(z[0] - 0.5), 1e-15);
}

TEST(ZerosOfCombination, UniformIsCriticalPoints)
{
    RootList<double> r(4);
    r << 0.0, 0.0, I, I;
    const auto z = zeros_of_combination(r, Weights<double>::uniform(4));
    // A_4' / 4 = z^3 - (3/2) i z^2 - (1/2) z = z (z - i)(z - i/2)
    const RootList<double> crit = find_roots(derivative(from_roots(r)));
    EXPECT_LE(multiset_distance(z.roots, crit), 1e-9);
    RootList<double> exact(3);
    exact << 0.0, I, 0.5 * I;
    EXPECT_LE(multiset_distance(z.roots, exact), 1e-9);
}

TEST(ZerosOfCombination, HitsRecoveredPoint)
{
    RootList<double> r(3);
    r << 0.0, 1.0, I;
    const auto z = zeros_of_combination(r, Weights<double>{1.0 / 6, 5.0 / 12, 5.0 / 12});
    double best = 1;
    for (Index i = 0; i < z.size(); ++i)
        best = std::min(best, std::abs(z[i] - (1.0 + I) / 3.0));
    EXPECT_LE(best, 1e-9);
}

TEST(ZerosOfCombination, SortedAndCrossChecked)
{
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 11;
        const auto g = oracle::random_simplex(gen, n);
        const RootList<double> r = oracle::to_roots(oracle::random_disc_points(gen, n));
        const Weights<double> w(Eigen::Map<const RealVector<double>>(g.data(), Index(n)));
        for (Index pivot = 0; pivot < Index(n); pivot += 3) {
            const auto cz = combination_zeros(r, w, pivot);
            EXPECT_LE(cz.cross_check_distance, cz.cross_check_tolerance);
            for (Index i = 1; i < cz.zeros.size(); ++i)
                EXPECT_GE(std::abs(cz.zeros[i - 1]), std::abs(cz.zeros[i]));
        }
    }
}

TEST(FindRoots, LongDoubleInstantiation)
{
    RootList<long double> r(3);
    r << 1.0L, std::complex<long double>(0, 1), -2.0L;
    const auto found = find_roots(from_roots(r));
    EXPECT_LE(multiset_distance(found, r), 1e-15L);
}

TEST(ZerosOfCombination, ClusteredRealRootsStayReal)
{
    // Modulus instance whose monomial coefficients lose about three digits.
    RootList<double> r(11);
    r << 1.9117576870634503, 1.5586735064065103, 1.7357189218884195, 1.9033647618727207, 1.2256493770021823,
        1.9228392184083154, 0.69201017158685507, 1.5536960388731307, 1.3996335425443558, 1.8862254812960972,
        1.6804788550057186;
    const Weights<double> w{0.29137094820128451, 0.011076655119915329, 0.056365947945555141, 0.091483814566321583,
                            0.04423222047648908, 0.074115409296865553, 0.032533581340298164, 0.22344177156141351,
                            0.068606017751518825, 0.063739608467180228, 0.043034025273158041};
    const auto cz = combination_zeros(r, w, 10);
    EXPECT_LE(cz.cross_check_distance, 1e-12);
    for (Index i = 0; i < cz.zeros.size(); ++i)
        EXPECT_LE(std::abs(cz.zeros[i].imag()), 1e-12);
}

TEST(DerivativeZeros, RealRootedClusterGivesRealZeros)
{
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> u(1.7, 1.95);
    for (int trial = 0; trial < 10; ++trial) {
        RootList<double> r(12);
        for (Index i = 0; i < 12; ++i)
            r[i] = u(gen);
        for (Index k = 1; k < 12; ++k) {
            const auto z = derivative_zeros(r, k);
            ASSERT_EQ(z.size(), 12 - k);
            for (Index i = 0; i < z.size(); ++i) {
                EXPECT_LE(std::abs(z[i].imag()), 1e-9);
                EXPECT_GE(z[i].real(), r.real().minCoeff() - 1e-9);
                EXPECT_LE(z[i].real(), r.real().maxCoeff() + 1e-9);
            }
        }
    }
}

TEST(DerivativeZeros, MatchesCriticalPoints)
{
    RootList<double> r(4);
    r << 0.0, 0.0, I, I;
    RootList<double> exact(3);
    exact << 0.0, I, 0.5 * I;
    EXPECT_LE(multiset_distance(derivative_zeros(r, 1).roots, exact), 1e-9);
    EXPECT_THROW(derivative_zeros(r, 4), InvalidArgument);
}

TEST(SecondOrderZeros, ResidualAgainstExplicitSum)
{
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + trial % 10;
        const auto pts = oracle::random_disc_points(gen, n);
        const auto g = oracle::random_simplex(gen, n);
        const RootList<double> r = oracle::to_roots(pts);
        const Weights<double> w(Eigen::Map<const RealVector<double>>(g.data(), Index(n)));
        const auto z = second_order_zeros(r, w);
        ASSERT_EQ(z.size(), Index(n - 2));
        const auto ref = oracle::explicit_second_order_sum(pts, g);
        for (Index i = 0; i < z.size(); ++i) {
            oracle::cld v = 0, mag = 0;
            for (std::size_t k = ref.size(); k-- > 0;) {
                v = v * oracle::cld(z[i]) + ref[k];
                mag = mag * std::abs(oracle::cld(z[i])) + std::abs(ref[k]);
            }
            EXPECT_LE(std::abs(v), 1e-10 * std::abs(mag));
        }
    }
}

TEST(PairwiseZeros, EscapingExample)
{
    RootList<double> r(4);
    r << 0.0, 0.0, I, I;
    const std::vector<PairWeight> pairs{{0, 1, 1.0 / 3}, {0, 3, 1.0 / 3}, {2, 3, 1.0 / 3}};
    RootList<double> expected(2);
    expected << 0.5 * I + 1.0 / (2 * std::sqrt(3.0)), 0.5 * I - 1.0 / (2 * std::sqrt(3.0));
    EXPECT_LE(multiset_distance(pairwise_zeros(r, pairs).roots, expected), 1e-14);
}
