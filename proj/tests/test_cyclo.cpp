#include "coxfs/cyclotomic.hpp"
#include "coxfs/golden.hpp"
#include "coxfs/matrix.hpp"
#include "coxfs/poly.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <random>

using namespace coxfs;

namespace {

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

Cyclo random_cyclo(std::mt19937& rng)
{
    static const long orders[] = {1, 3, 4, 5, 8, 12, 15, 20};
    long n = orders[rng() % 8];
    Cyclo x;
    for (int k = 0; k < 3; ++k) {
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + static_cast<long>(rng() % 3);
        x += Cyclo(Rational(num, den)) * Cyclo::zeta(n, static_cast<long>(rng() % n));
    }
    return x;
}

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_EQ(Rational::parse("4/-2"), Rational(-2));
    EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, Binomial)
{
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(3, 4), 0);
    EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Cyclo, ConductorReduction)
{
    Cyclo z6 = Cyclo::zeta(6);
    EXPECT_EQ(z6.conductor(), 3);
    EXPECT_EQ(z6, Cyclo(1) + Cyclo::zeta(3));
    EXPECT_EQ(z6.str(), "1+E(3)");
    EXPECT_TRUE((Cyclo::zeta(4) * Cyclo::zeta(4)).is_rational());
    EXPECT_EQ(Cyclo::zeta(4) * Cyclo::zeta(4), Cyclo(-1));
    EXPECT_EQ(Cyclo::zeta(12, 3), Cyclo::zeta(4));
    EXPECT_EQ(Cyclo::zeta(10, 2).conductor(), 5);
    EXPECT_EQ(Cyclo::zeta(2), Cyclo(-1));
}

TEST(Cyclo, Sqrt5AndSqrt3)
{
    Cyclo r5 = sqrt5();
    EXPECT_EQ(r5 * r5, Cyclo(5));
    EXPECT_EQ(r5.conductor(), 5);
    EXPECT_GT(r5.to_complex().real(), 2.2);
    EXPECT_EQ(Cyclo::zeta(5) + Cyclo::zeta(5, 4), (r5 - Cyclo(1)) / Cyclo(2));
    Cyclo r3 = Cyclo::zeta(12) + Cyclo::zeta(12, 11);
    EXPECT_EQ(r3.conductor(), 12);
    EXPECT_EQ(r3 * r3, Cyclo(3));
    EXPECT_EQ(r3.real_sign(), 1);
}

TEST(Cyclo, FieldAxiomsAgainstComplexOracle)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Cyclo a = random_cyclo(rng), b = random_cyclo(rng);
        EXPECT_TRUE(close((a + b).to_complex(), a.to_complex() + b.to_complex()));
        EXPECT_TRUE(close((a * b).to_complex(), a.to_complex() * b.to_complex()));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) {
            EXPECT_TRUE(close((a / b).to_complex(), a.to_complex() / b.to_complex()));
            EXPECT_EQ(b * b.inverse(), Cyclo(1));
        }
        EXPECT_TRUE(close(a.conj().to_complex(), std::conj(a.to_complex())));
    }
}

TEST(Cyclo, CanonicalRepresentationIsUnique)
{
    // the same number reached through different conductors
    Cyclo a = Cyclo::zeta(15, 5) + Cyclo::zeta(15, 10);
    EXPECT_EQ(a, Cyclo(-1));
    Cyclo b = Cyclo::zeta(20, 4) * Cyclo::zeta(20, 8);
    EXPECT_EQ(b, Cyclo::zeta(5, 3));
    EXPECT_EQ(b.conductor(), 5);
}

TEST(Cyclo, ParseRoundTrip)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Cyclo a = random_cyclo(rng);
        EXPECT_EQ(Cyclo::parse(a.str()), a) << a.str();
    }
    EXPECT_EQ(Cyclo::parse("-1/2*E(5)^2+E(5)^3"), Cyclo(Rational(-1, 2)) * Cyclo::zeta(5, 2) + Cyclo::zeta(5, 3));
    EXPECT_EQ(Cyclo::parse("E(4)^2"), Cyclo(-1));
    EXPECT_EQ(Cyclo::parse("(E(5) + E(5)^4)*2 + 1"), sqrt5());
    EXPECT_EQ(Cyclo::parse("E(8)^-1"), Cyclo::zeta(8, 7));
    EXPECT_THROW(Cyclo::parse("E(0)"), std::invalid_argument);
    EXPECT_THROW(Cyclo::parse("1+"), std::invalid_argument);
    EXPECT_THROW(Cyclo::parse("E5"), std::invalid_argument);
    EXPECT_THROW(Cyclo::parse("1/0"), std::invalid_argument);
}

TEST(Cyclo, GaloisAction)
{
    EXPECT_EQ(Cyclo::zeta(5).galois(2), Cyclo::zeta(5, 2));
    EXPECT_EQ(sqrt5().galois(2), -sqrt5());
    EXPECT_EQ(Cyclo::zeta(7).conj(), Cyclo::zeta(7, 6));
    EXPECT_TRUE(two_cos(7, 2).is_real());
    EXPECT_FALSE(Cyclo::zeta(3).is_real());
}

TEST(Golden, MatchesCyclotomicEmbedding)
{
    GoldenRational x(Rational(1, 3), Rational(-2, 5)), y(Rational(2), Rational(1));
    EXPECT_EQ((x * y).to_cyclo(), x.to_cyclo() * y.to_cyclo());
    EXPECT_EQ((x / y).to_cyclo(), x.to_cyclo() / y.to_cyclo());
    EXPECT_EQ(GoldenRational::phi() * GoldenRational::phi(), GoldenRational::phi() + GoldenRational(1));
    EXPECT_EQ(GoldenRational(Rational(-2), Rational(1)).sign(), 1);
    EXPECT_EQ(GoldenRational(Rational(-3), Rational(1)).sign(), -1);
    EXPECT_EQ(GoldenRational(Rational(3), Rational(-1)).sign(), 1);
}

TEST(Poly, ArithmeticAndDivision)
{
    RatPoly x = RatPoly::x();
    RatPoly p = x * x * x - RatPoly(1);
    RatPoly q = x - RatPoly(1);
    auto [quot, rem] = divmod(p, q);
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(quot, x * x + x + RatPoly(1));
    EXPECT_EQ(quot.str(), "1+x+x^2");
    EXPECT_THROW(exact_div(p, x), std::domain_error);
    EXPECT_EQ(RatPoly().degree(), -1);
    EXPECT_EQ((x * x + x).valuation(), 1);
}

TEST(Poly, Reverse)
{
    RatPoly x = RatPoly::x();
    RatPoly p = x + RatPoly(Rational(3)) * x * x;
    EXPECT_EQ(reverse(p, 4), RatPoly(Rational(3)) * x * x + x * x * x);
    EXPECT_EQ(reverse(reverse(p, 5), 5), p);
    EXPECT_THROW(reverse(p, 1), std::invalid_argument);
}

TEST(Matrix, DetOneMinusX)
{
    // companion matrix of a rotation by 2pi/5
    Matrix<Cyclo> r(2, 2);
    r(0, 0) = Cyclo(0);
    r(0, 1) = Cyclo(-1);
    r(1, 0) = Cyclo(1);
    r(1, 1) = two_cos(5, 1);
    CycloPoly d = det_one_minus_x(r);
    EXPECT_EQ(d, CycloPoly(std::vector<Cyclo>{Cyclo(1), -two_cos(5, 1), Cyclo(1)}));
    Matrix<Rational> m(3, 3);
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(2, 2) = -1;
    EXPECT_EQ(rank(m + Matrix<Rational>::identity(3)), 1u);
    EXPECT_EQ(determinant(m), Rational(1));
}
