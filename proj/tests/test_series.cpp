#include <gtest/gtest.h>

#include "support.hpp"

using namespace ncfree;
using namespace ncfree::testing;

TEST(Coef, DistinguishedSeries) {
    const auto z = zeta(3, 5);
    for (const auto& w : words_up_to(3, 5)) EXPECT_EQ(z.coef(w), 1);
    const auto s = sum_series(2, 4);
    EXPECT_EQ(s.coef({1}), 1);
    EXPECT_EQ(s.coef({2}), 1);
    EXPECT_EQ(s.coef({1, 2}), 0);
    EXPECT_EQ(s.coef({2, 2, 1, 1}), 0);
    EXPECT_EQ(moeb(2, 4).coef({1, 2, 1}), 2);
}

TEST(Coef, Errors) {
    const auto z = zeta(2, 3);
    EXPECT_THROW(z.coef({3}), invalid_argument);
    EXPECT_THROW(z.coef({0}), invalid_argument);
    EXPECT_THROW(z.coef(Word{}), invalid_argument);
    EXPECT_THROW(z.coef({1, 1, 1, 1}), truncation_exceeded);
    EXPECT_THROW(NCSeries(0, 3), invalid_argument);
    EXPECT_THROW(NCSeries(2, 0), invalid_argument);
}

TEST(CoefPi, BlockFactorisation) {
    Rng rng(11);
    const auto f = random_series(rng, 3, 4, 1000);
    const Word w{2, 1, 3, 3};
    EXPECT_EQ(coef_pi(f, w, NCPartition::coarsest(4)), f.coef(w));
    EXPECT_EQ(coef_pi(f, w, NCPartition(4, {{1, 3}, {2}, {4}})), f.coef({2, 3}) * f.coef({1}) * f.coef({3}));
    for (const auto& pi : enumerate_nc(4)) EXPECT_EQ(coef_pi(zeta(3, 4), w, pi), 1);
    EXPECT_THROW(coef_pi(f, w, NCPartition::coarsest(3)), invalid_argument);
}

TEST(Boxstar, FastPathMatchesDefinition) {
    Rng rng(1);
    for (int n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 3; ++rep) {
            const auto f = random_series(rng, n, 5), g = random_series(rng, n, 5);
            EXPECT_EQ(boxstar(f, g), boxstar_by_definition(f, g));
        }
}

TEST(Boxstar, OneVariableDegreeTwo) {
    NCSeries f(1, 2);
    f.set({1}, 1);
    f.set({1, 1}, 1);
    EXPECT_EQ(boxstar(f, f).coef({1, 1}), 2);
}

TEST(Boxstar, Associativity) {
    Rng rng(2);
    int triples = 0;
    for (int n = 1; n <= 3; ++n)
        for (int rep = 0; rep < 18; ++rep) {
            const int d = n == 3 ? 4 : 5;
            const auto f = random_series(rng, n, d), g = random_series(rng, n, d), h = random_series(rng, n, d);
            EXPECT_EQ(boxstar(boxstar(f, g), h), boxstar(f, boxstar(g, h)));
            ++triples;
        }
    EXPECT_GE(triples, 50);
}

TEST(Boxstar, SumIsNeutral) {
    Rng rng(3);
    for (int n = 1; n <= 3; ++n) {
        const auto f = random_series(rng, n, 5);
        EXPECT_EQ(boxstar(f, sum_series(n, 5)), f);
        EXPECT_EQ(boxstar(sum_series(n, 5), f), f);
    }
}

TEST(Boxstar, ZetaMoebInverseThroughDegreeEight) {
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(boxstar(zeta(n, 8), moeb(n, 8)), sum_series(n, 8));
        EXPECT_EQ(boxstar(moeb(n, 8), zeta(n, 8)), sum_series(n, 8));
    }
}

TEST(Boxstar, MoebCoefficients) {
    const std::vector<int> expected{1, -1, 2, -5, 14, -42};
    const auto m = moeb(1, 6);
    for (int k = 1; k <= 6; ++k) EXPECT_EQ(m.coef(power(1, k)), expected[static_cast<std::size_t>(k - 1)]);
}

TEST(Boxstar, ZetaAndMoebAreCentral) {
    Rng rng(4);
    for (int n = 1; n <= 3; ++n) {
        const auto f = random_series(rng, n, 5);
        EXPECT_EQ(boxstar(zeta(n, 5), f), boxstar(f, zeta(n, 5)));
        EXPECT_EQ(boxstar(moeb(n, 5), f), boxstar(f, moeb(n, 5)));
    }
}

TEST(Boxstar, CommutativeOnlyInOneVariable) {
    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = random_series(rng, 1, 6), g = random_series(rng, 1, 6);
        EXPECT_EQ(boxstar(f, g), boxstar(g, f));
    }
    // Degrees 1 and 2 are always symmetric; the first asymmetry is at degree 3.
    NCSeries f(2, 3), g(2, 3);
    f.set({1}, 1);
    f.set({2}, 1);
    f.set({1, 2}, 1);
    g.set({1}, 1);
    g.set({2}, 1);
    g.set({2, 1}, 1);
    EXPECT_NE(boxstar(f, g), boxstar(g, f));
}

TEST(Boxstar, DegreeAndZeroHandling) {
    Rng rng(6);
    const auto f = random_series(rng, 2, 5), g = random_series(rng, 2, 3);
    const auto h = boxstar(f, g);
    EXPECT_EQ(h.max_degree(), 3);
    EXPECT_EQ(h, boxstar(truncate(f, 3), g));
    EXPECT_TRUE(boxstar(NCSeries(2, 4), f).is_zero());
    EXPECT_TRUE(boxstar(f, NCSeries(2, 4)).is_zero());
    EXPECT_THROW(boxstar(zeta(1, 3), zeta(2, 3)), invalid_argument);
}

TEST(Boxstar, TruncationStability) {
    Rng rng(7);
    const auto f = random_series(rng, 2, 6), g = random_series(rng, 2, 6);
    const auto full = boxstar(f, g);
    for (int d = 1; d < 6; ++d) EXPECT_EQ(truncate(full, d), boxstar(truncate(f, d), truncate(g, d)));
}

TEST(CoefPiStar, RelativeProduct) {
    Rng rng(8);
    const auto f = random_series(rng, 2, 4), g = random_series(rng, 2, 4);
    const auto h = boxstar(f, g);
    for (const auto& w : words_up_to(2, 3))
        for (const auto& rho : enumerate_nc(static_cast<int>(w.size())))
            EXPECT_EQ(coef_pi_star(f, g, w, rho), coef_pi(h, w, rho));
    const Word w{1, 2, 2, 1};
    EXPECT_EQ(coef_pi_star(f, g, w, NCPartition::coarsest(4)), h.coef(w));
    Scalar prod(1);
    for (int x : w) prod *= f.coef({x}) * g.coef({x});
    EXPECT_EQ(coef_pi_star(f, g, w, NCPartition::finest(4)), prod);
    EXPECT_THROW(coef_pi_star(f, g, w, NCPartition::finest(3)), invalid_argument);
}

TEST(Inverse, Examples) {
    EXPECT_EQ(boxstar_inverse(sum_series(2, 5)), sum_series(2, 5));
    EXPECT_EQ(boxstar_inverse(zeta(1, 8)), moeb(1, 8));
    EXPECT_EQ(boxstar_inverse(zeta(2, 6)), moeb(2, 6));
    for (int k = 1; k <= 8; ++k) {
        // (-1)^(k+1) (2k-2)! / ((k-1)! k!) from factorials.
        mpz_class a, b, c;
        mpz_fac_ui(a.get_mpz_t(), 2 * k - 2);
        mpz_fac_ui(b.get_mpz_t(), k - 1);
        mpz_fac_ui(c.get_mpz_t(), k);
        Scalar expected(a / (b * c));
        if (k % 2 == 0) expected = -expected;
        EXPECT_EQ(boxstar_inverse(zeta(1, 8)).coef(power(1, k)), expected);
    }
}

TEST(Inverse, RandomTwoSided) {
    Rng rng(9);
    for (int rep = 0; rep < 5; ++rep) {
        const auto f = random_invertible_series(rng, 2, 5);
        const auto g = boxstar_inverse(f);
        EXPECT_EQ(boxstar(f, g), sum_series(2, 5));
        EXPECT_EQ(boxstar(g, f), sum_series(2, 5));
    }
}

TEST(Inverse, VanishingLinearTerm) {
    NCSeries f = zeta(2, 3);
    f.set({2}, 0);
    EXPECT_THROW(boxstar_inverse(f), not_invertible);
}

TEST(Dilate, Laws) {
    Rng rng(10);
    const auto f = random_series(rng, 2, 4), g = random_series(rng, 2, 4);
    EXPECT_EQ(dilate(f, 1), f);
    EXPECT_TRUE(dilate(f, 0).is_zero());
    const Scalar s(2, 3);
    const auto dz = dilate(zeta(2, 4), s);
    for (const auto& w : words_up_to(2, 4)) EXPECT_EQ(dz.coef(w), pow(s, static_cast<unsigned>(w.size())));
    const Scalar r(2, 3);
    EXPECT_EQ(boxstar(dilate(f, r), g), dilate(boxstar(f, g), r));
    EXPECT_EQ(boxstar(f, dilate(g, r)), dilate(boxstar(f, g), r));
}

TEST(Scale, Laws) {
    Rng rng(12);
    const auto f = random_series(rng, 2, 4), g = random_series(rng, 2, 4);
    EXPECT_TRUE(scale(f, 0).is_zero());
    const Scalar r(3);
    EXPECT_EQ(boxstar(scale(f, r), scale(g, r)), dilate(scale(boxstar(f, g), r), r));
    const Scalar h(1, 2);
    EXPECT_EQ(scale(boxstar(f, scale(g, h)), 1 / h), boxstar(dilate(scale(f, 1 / h), h), g));
    EXPECT_EQ(add(f, scale(f, -1)), NCSeries(2, 4));
    EXPECT_THROW(add(f, zeta(2, 3)), invalid_argument);
    EXPECT_THROW(add(f, zeta(1, 4)), invalid_argument);
}

TEST(Lift, DiagonalSeries) {
    EXPECT_EQ(lift_diagonal(zeta(1, 6), 3), zeta(3, 6));
    EXPECT_EQ(lift_diagonal(moeb(1, 6), 2), moeb(2, 6));
    NCSeries q(1, 4);
    const Scalar s(9, 4);
    q.set({1, 1}, s);
    const auto lifted = lift_diagonal(q, 3);
    for (const auto& w : words_up_to(3, 4)) EXPECT_EQ(lifted.coef(w), w.size() == 2 ? s : Scalar(0));
    EXPECT_THROW(lift_diagonal(zeta(2, 3), 2), invalid_argument);
}

TEST(Lift, IsHomomorphism) {
    Rng rng(13);
    for (int rep = 0; rep < 3; ++rep) {
        const auto f = random_series(rng, 1, 5), g = random_series(rng, 1, 5);
        EXPECT_EQ(boxstar(lift_diagonal(f, 2), lift_diagonal(g, 2)), lift_diagonal(boxstar(f, g), 2));
    }
}

TEST(Sqsum, Coefficients) {
    const auto s = sqsum(1);
    EXPECT_EQ(s.n(), 2);
    for (const auto& w : words_of_length(2, 2)) EXPECT_EQ(s.coef(w), 1);
    const auto s3 = sqsum(1, 3);
    EXPECT_EQ(s3.coef({1}), 0);
    EXPECT_EQ(s3.coef({1, 2, 1}), 0);
    NCSeries zsq(1, 4);
    zsq.set({1, 1}, 1);
    EXPECT_EQ(sqsum(2, 4), lift_diagonal(zsq, 4));
    EXPECT_THROW(sqsum(0), invalid_argument);
}
