#include "hcf/field.hpp"

#include <doctest.h>

#include <random>

using namespace hcf;

TEST_CASE("field type classification") {
    auto f = QuadraticField::make(2, 1);
    CHECK(f->type() == FieldType::A);

    auto f6 = QuadraticField::make(0, 3);
    CHECK(f6->type() == FieldType::B);
    CHECK(f6->l() == 6);

    // -4+3i = i(2+i)^2, sqrt(-4+3i) = +-(1+3i)sqrt(2)/2.  Oracle: square the
    // stored factorization exactly.
    auto fb = QuadraticField::make(-4, 3);
    CHECK(fb->type() == FieldType::B);
    CHECK(fb->l() == 2);
    GaussianRational sq = fb->unit() * fb->unit() * GaussianRational(GaussianInt(fb->l(), 0));
    CHECK(sq == GaussianRational(GaussianInt(-4, 3)));

    CHECK(QuadraticField::make(2, 0)->l() == 2);
    CHECK(QuadraticField::make(-3, 0)->l() == 3);
    CHECK(QuadraticField::make(0, 5)->l() == 10);
}

TEST_CASE("squares in Z[i] are rejected") {
    CHECK_THROWS_WITH_AS(QuadraticField::make(3, 4), "square in Z[i]", error);
    CHECK_THROWS_AS(QuadraticField::make(0, 2), error);  // (1+i)^2
    CHECK_THROWS_AS(QuadraticField::make(-4, 0), error); // (2i)^2
    CHECK_THROWS_AS(QuadraticField::make(9, 0), error);
    CHECK(gaussian_sqrt(3, 4).value() == GaussianInt(2, 1));
    CHECK(!gaussian_sqrt(2, 1));
}

TEST_CASE("type-B factorizations square back for every nonsquare in range") {
    for (long m = -9; m <= 9; ++m)
        for (long n = -9; n <= 9; ++n) {
            if ((m == 0 && n == 0) || gaussian_sqrt(m, n)) continue;
            auto f = QuadraticField::make(m, n);
            if (f->type() != FieldType::B) continue;
            GaussianRational sq =
                f->principal_unit() * f->principal_unit() * GaussianRational(GaussianInt(f->l(), 0));
            CHECK(sq == GaussianRational(GaussianInt(m, n)));
            BigInt s = boost::multiprecision::sqrt(f->l());
            CHECK(s * s != f->l());
        }
}

TEST_CASE("element arithmetic") {
    auto f2 = QuadraticField::make(2, 0);
    FieldElement r2 = FieldElement::sqrt_d(f2);
    FieldElement v = r2 - GaussianInt(1, 0); // sqrt(2)-1

    // Oracle: (sqrt2-1)(sqrt2+1) = 1, so the inverse must be sqrt2+1.
    CHECK(v.inverse() == r2 + GaussianInt(1, 0));
    CHECK(v.inverse() * v == FieldElement(1L));

    auto f = QuadraticField::make(2, 1);
    FieldElement a = FieldElement::sqrt_d(f) - GaussianInt(2, 0);
    // Oracle for the inverse: product-equals-one.
    CHECK(a.inverse() * a == FieldElement(1L));
    CHECK(a + FieldElement(0L) == a);

    CHECK_THROWS_AS(FieldElement::sqrt_d(f) + FieldElement::sqrt_d(f2), error);
    CHECK_THROWS_AS(a / FieldElement(0L), error);
}

TEST_CASE("demotion soundness") {
    auto f2 = QuadraticField::make(2, 0);
    FieldElement r2 = FieldElement::sqrt_d(f2);
    FieldElement z = r2 - r2;
    CHECK(z.is_rational());
    CHECK(z == FieldElement(0L));
    FieldElement prod = r2 * r2; // exactly 2
    CHECK(prod.is_rational());
    CHECK(prod == FieldElement(2L));
}

TEST_CASE("galois conjugation") {
    auto f = QuadraticField::make(2, 1);
    FieldElement a = FieldElement::sqrt_d(f) - GaussianInt(2, 0);
    FieldElement ac = galois_conjugate(a);
    CHECK(ac == -FieldElement::sqrt_d(f) - FieldElement(2L));
    CHECK(galois_conjugate(ac) == a);
    CHECK_THROWS_WITH_AS(galois_conjugate(FieldElement(3L)), "no nontrivial conjugate", error);

    auto f2 = QuadraticField::make(2, 0);
    FieldElement b = FieldElement::sqrt_d(f2) - GaussianInt(1, 0);
    CHECK(galois_conjugate(galois_conjugate(b)) == b);
}

TEST_CASE("random round trips in a quadratic field") {
    std::mt19937_64 rng(7);
    auto f = QuadraticField::make(1, 2);
    auto rnd = [&] {
        auto s = [&](long m) { return static_cast<long>(rng() % (2 * m + 1)) - m; };
        return GaussianRational(GaussianInt(s(12), s(12)), BigInt(1 + static_cast<long>(rng() % 12)));
    };
    for (int it = 0; it < 200; ++it) {
        FieldElement a(f, rnd(), rnd());
        FieldElement b(f, rnd(), rnd());
        CHECK((a + b) - b == a);
        if (!a.is_zero()) CHECK(a.inverse() * a == FieldElement(1L));
        CHECK(elem_arith(a, b, '*') == elem_arith(b, a, '*'));
    }
}
