#include "hcf/gaussian.hpp"

#include <doctest.h>

#include <random>

using namespace hcf;

namespace {
GaussianRational gr(long nr, long ni, long d) {
    return GaussianRational(GaussianInt(nr, ni), BigInt(d));
}
} // namespace

TEST_CASE("canonical form") {
    GaussianRational q(GaussianInt(2, -4), BigInt(-6));
    CHECK(q.den() == 3);
    CHECK(q.num().re == -1);
    CHECK(q.num().im == 2);
    CHECK(GaussianRational(GaussianInt(0, 0), BigInt(7)) == GaussianRational::zero());
}

TEST_CASE("division and reciprocal follow rational arithmetic") {
    // Oracle: multiply by the conjugate and reduce by hand.
    // (9+8i)/(2+i) = (9+8i)(2-i)/5 = (26+7i)/5.
    GaussianRational a = gr(9, 8, 1), b = gr(2, 1, 1);
    CHECK(gauss_arith(a, b, '/') == gr(26, 7, 5));
    // (2+i)/(9+8i) = (26-7i)/145
    CHECK(gauss_arith(b, a, '/') == gr(26, -7, 145));
    // ((1+2i)/5)^{-1} = 1-2i
    CHECK(gr(1, 2, 5).inverse() == gr(1, -2, 1));
    // identity
    GaussianRational q = gr(-3, 11, 7);
    CHECK(gauss_arith(gr(1, 0, 1), q, '*') == q);
    CHECK_THROWS_AS(gauss_arith(q, GaussianRational::zero(), '/'), error);
}

TEST_CASE("arithmetic round trips on random values") {
    std::mt19937_64 rng(42);
    auto rnd = [&] {
        auto s = [&](long m) { return static_cast<long>(rng() % (2 * m + 1)) - m; };
        return GaussianRational(GaussianInt(s(50), s(50)), BigInt(1 + static_cast<long>(rng() % 30)));
    };
    for (int it = 0; it < 300; ++it) {
        GaussianRational a = rnd(), b = rnd();
        CHECK((a + b) - b == a);
        if (!a.is_zero()) CHECK(a.inverse() * a == GaussianRational::one());
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(a.norm() == (a * a.conj()).re());
    }
}

TEST_CASE("floor of rationals") {
    CHECK(floor_rational(Rational(7, 2)) == 3);
    CHECK(floor_rational(Rational(-7, 2)) == -4);
    CHECK(floor_rational(Rational(-6, 2)) == -3);
    CHECK(floor_rational(Rational(0)) == 0);
}
