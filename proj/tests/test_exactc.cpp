#include "hcf/exactc.hpp"

#include <doctest.h>

#include <random>

using namespace hcf;

namespace {
FieldElement sqrt_of(long m, long n) {
    return FieldElement::sqrt_d(QuadraticField::make(m, n));
}

bool overlaps(const Rational& mid, const Rational& radius, const Rational& lo, const Rational& hi) {
    return mid + radius >= lo && mid - radius <= hi;
}
} // namespace

TEST_CASE("real_sign on exact expressions") {
    // |z|^2 - 1 for z = sqrt2 - 1: sign(2 - 2 sqrt2) = -1.  Oracle: 8 > 4
    // so 2*sqrt2 > 2 by squaring.
    FieldElement z = sqrt_of(2, 0) - GaussianInt(1, 0);
    ExactComplex e(z);
    CHECK((e.norm2() - ExactComplex(Rational(1))).sign() == -1);

    CHECK(ExactComplex(FieldElement(0L)).sign() == 0);
    ExactComplex diff = ExactComplex(sqrt_of(2, 1)) - ExactComplex(sqrt_of(2, 1));
    CHECK(diff.sign() == 0);

    // Type-A u-coordinate against a half-integer is never zero.
    FieldElement a = sqrt_of(2, 1) - GaussianInt(2, 0);
    auto [u, v] = uv_coords(ExactComplex(a));
    CHECK((u - ExactComplex(Rational(1, 2))).sign() != 0);
    CHECK((v - ExactComplex(Rational(1, 2))).sign() != 0);

    CHECK_THROWS_AS(ExactComplex(sqrt_of(2, 1)).sign(), error); // not real
}

TEST_CASE("exact floors") {
    CHECK(ExactComplex(Rational(3, 2)).floor() == 1);
    ExactComplex r2 = ExactComplex(sqrt_of(2, 0)).real_part();
    CHECK(r2.floor() == 1);
    CHECK((-r2).floor() == -2);
    // A quadratic-tagged value that is exactly an integer.
    ExactComplex four = (r2 + r2) * (r2 + r2) * ExactComplex(Rational(1, 2));
    CHECK(four.floor() == 4);
}

TEST_CASE("embed reproduces the worked numeric value") {
    // sqrt(2+i)-2 = (-0.54465...) + (0.34356...)i
    CertifiedApprox ca = embed(sqrt_of(2, 1) - GaussianInt(2, 0), 30);
    CHECK(ca.radius <= Rational(1, BigInt(1) << 30));
    CHECK(overlaps(ca.mid_re, ca.radius, Rational(-54466, 100000), Rational(-54465, 100000)));
    CHECK(overlaps(ca.mid_im, ca.radius, Rational(34356, 100000), Rational(34357, 100000)));
}

TEST_CASE("embed is exact on dyadic rationals") {
    CertifiedApprox ca = embed(FieldElement(GaussianRational(Rational(3, 2), Rational(0))), 16);
    CHECK(ca.radius == 0);
    CHECK(ca.mid_re == Rational(3, 2));
    CHECK(ca.mid_im == 0);
}

TEST_CASE("embed sqrt(-3)-2i against an integer-sqrt oracle") {
    CertifiedApprox ca = embed(sqrt_of(-3, 0) - GaussianInt(0, 2), 20);
    QInterval s3 = sqrt_enclosure(Rational(3), 64);
    CHECK(overlaps(ca.mid_im, ca.radius, s3.lo - 2, s3.hi - 2));
    CHECK(overlaps(ca.mid_re, ca.radius, Rational(0), Rational(0)));
}

TEST_CASE("type-B factorization agrees with the direct nested-radical embedding") {
    for (long m = -6; m <= 6; ++m)
        for (long n = -6; n <= 6; ++n) {
            if ((m == 0 && n == 0) || gaussian_sqrt(m, n)) continue;
            auto f = QuadraticField::make(m, n);
            if (f->type() != FieldType::B) continue;
            CertifiedApprox ca = embed(FieldElement::sqrt_d(f), 128);
            // Independent oracle: principal sqrt(m+ni) = a+bi with
            // a = sqrt((k+m)/2), b = sign(n) sqrt((k-m)/2), k = |m+ni|.
            QInterval k = sqrt_enclosure(Rational(m * m + n * n), 160);
            QInterval a = sqrt_enclosure((k + QInterval(Rational(m))) * QInterval(Rational(1, 2)), 160);
            QInterval b = sqrt_enclosure((k - QInterval(Rational(m))) * QInterval(Rational(1, 2)), 160);
            if (n < 0) b = -b;
            if (n == 0 && m < 0) std::swap(a, b); // pure imaginary root
            CHECK(overlaps(ca.mid_re, ca.radius, a.lo, a.hi));
            CHECK(overlaps(ca.mid_im, ca.radius, b.lo, b.hi));
        }
}

TEST_CASE("rational linear relations transfer to the Galois conjugate (type B)") {
    std::mt19937_64 rng(11);
    auto f = QuadraticField::make(3, 0);
    auto s = [&](long m) { return static_cast<long>(rng() % (2 * m + 1)) - m; };
    for (int it = 0; it < 100; ++it) {
        Rational a(s(9), 1 + (rng() % 7)), b(s(9), 1 + (rng() % 7));
        Rational c(s(9), 1 + (rng() % 7)), d(s(9), 1 + (rng() % 7));
        if (c == 0 && d == 0) continue;
        FieldElement w(f, GaussianRational(a, b), GaussianRational(c, d));
        // k1 Re + k2 Im + k3 = 0 with (k1,k2,k3) = (d, -c, cb - da).
        Rational k1 = d, k2 = -c, k3 = c * b - d * a;
        auto relation = [&](const FieldElement& v) {
            ExactComplex e(v);
            return (ExactComplex(k1) * e.real_part() + ExactComplex(k2) * e.imag_part() +
                    ExactComplex(k3))
                .sign();
        };
        CHECK(relation(w) == 0);
        CHECK(relation(galois_conjugate(w)) == 0);
    }
}

TEST_CASE("no rational linear relation exists for type-A elements") {
    std::mt19937_64 rng(13);
    auto f = QuadraticField::make(2, 1);
    auto s = [&](long m) { return static_cast<long>(rng() % (2 * m + 1)) - m; };
    for (int it = 0; it < 25; ++it) {
        GaussianRational x(Rational(s(9), 1 + (rng() % 5)), Rational(s(9), 1 + (rng() % 5)));
        GaussianRational y(Rational(s(9), 1 + (rng() % 5)), Rational(s(9), 1 + (rng() % 5)));
        if (y.is_zero()) continue;
        FieldElement w(f, x, y);
        ExactComplex e(w);
        ExactComplex re = e.real_part(), im = e.imag_part();
        for (long p = -3; p <= 3; ++p)
            for (long q = -3; q <= 3; ++q)
                for (long r = -3; r <= 3; ++r) {
                    if (p == 0 && q == 0 && r == 0) continue;
                    CHECK((ExactComplex(Rational(p)) * re + ExactComplex(Rational(q)) * im +
                           ExactComplex(Rational(r)))
                              .sign() != 0);
                }
    }
}

TEST_CASE("real_sign is never contradicted by a 256-bit certified interval") {
    std::mt19937_64 rng(17);
    auto fa = QuadraticField::make(3, 3);
    auto fb = QuadraticField::make(0, 5);
    auto s = [&](long m) { return static_cast<long>(rng() % (2 * m + 1)) - m; };
    for (int it = 0; it < 120; ++it) {
        const auto& f = it % 2 ? fa : fb;
        GaussianRational x(Rational(s(20), 1 + (rng() % 9)), Rational(s(20), 1 + (rng() % 9)));
        GaussianRational y(Rational(s(20), 1 + (rng() % 9)), Rational(s(20), 1 + (rng() % 9)));
        FieldElement w = y.is_zero() ? FieldElement(x) : FieldElement(f, x, y);
        ExactComplex probe = ExactComplex(w).norm2() - ExactComplex(Rational(s(40), 7));
        int sg = probe.sign();
        QInterval iv = probe.enclose(256).re;
        if (iv.lo > 0) CHECK(sg == 1);
        if (iv.hi < 0) CHECK(sg == -1);
        if (sg == 0) CHECK(iv.contains_zero());
    }
}
