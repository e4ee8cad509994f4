#pragma once

#include "hcf/field.hpp"

namespace hcf {

// Closed interval with exact rational endpoints.  Addition, subtraction and
// multiplication are exact; only square roots widen.
struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational v) : lo(v), hi(std::move(v)) {}
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    Rational width() const { return hi - lo; }

    QInterval operator-() const { return {-hi, -lo}; }
    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return *this + (-o); }
    QInterval operator*(const QInterval& o) const;
};

// sqrt enclosure of a nonnegative rational to p fractional bits.
QInterval sqrt_enclosure(const Rational& v, unsigned bits);
QInterval sqrt_enclosure(const QInterval& v, unsigned bits);

struct QBox {
    QInterval re, im;

    QBox() = default;
    QBox(QInterval r, QInterval i) : re(std::move(r)), im(std::move(i)) {}
    explicit QBox(const GaussianRational& q) : re(q.re()), im(q.im()) {}

    QBox operator+(const QBox& o) const { return {re + o.re, im + o.im}; }
    QBox operator-(const QBox& o) const { return {re - o.re, im - o.im}; }
    QBox operator*(const QBox& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Rational max_halfwidth() const;
};

// Exact complex number in a conjugation-closed algebra over Q(i):
//  - Rational: an element of Q(i);
//  - TypeB:    X + Y*sqrt(l), X, Y in Q(i), l a positive integer (real root);
//  - TypeA:    c0 + ca*A + cb*B + cg*A*B with A = sqrt(m+ni) principal,
//              B = sqrt(m-ni) = complex conjugate of A, and {1, A, B, AB}
//              a Q(i)-basis (type-A fields only).
// Supports ring arithmetic, complex conjugation, exact zero tests, exact
// sign of real values, exact floors, and certified enclosures.
class ExactComplex {
  public:
    ExactComplex() : tag_(Tag::Rat) {}
    ExactComplex(GaussianRational q) : tag_(Tag::Rat), c0_(std::move(q)) {}
    ExactComplex(const Rational& r) : tag_(Tag::Rat), c0_(GaussianRational(r, Rational(0))) {}
    ExactComplex(long n) : tag_(Tag::Rat), c0_(GaussianRational(n)) {}
    explicit ExactComplex(const FieldElement& v);

    bool is_zero() const;
    bool is_real() const;

    ExactComplex conj() const;
    ExactComplex operator-() const;
    ExactComplex operator+(const ExactComplex& o) const;
    ExactComplex operator-(const ExactComplex& o) const;
    ExactComplex operator*(const ExactComplex& o) const;

    ExactComplex real_part() const; // (z + conj z)/2
    ExactComplex imag_part() const; // (z - conj z)/(2i)
    ExactComplex norm2() const;     // z * conj z, always real

    // Certified enclosure; leaf square roots evaluated to `bits` bits.
    QBox enclose(unsigned bits) const;

    // Exact sign of a real value: certified-interval refinement with the
    // coordinatewise zero test the first time an interval straddles zero.
    int sign() const;
    // Exact floor of a real value.
    BigInt floor() const;

  private:
    enum class Tag { Rat, TypeB, TypeA };
    Tag tag_;
    GaussianRational c0_, ca_, cb_, cg_; // Rat/TypeB use c0_ (X) and ca_ (Y)
    BigInt p1_, p2_;                     // TypeB: l in p1_; TypeA: (m, n)

    static ExactComplex promote(const ExactComplex& v, Tag tag, const BigInt& p1, const BigInt& p2);
    static void align(ExactComplex& a, ExactComplex& b);
};

// Convenience: sign of |z - c|^2 - rho2 for exact z.
int sign_norm2_minus(const ExactComplex& z, const GaussianRational& center, const Rational& rho2);

// Coordinates of z in the basis (1+i), (1-i): u = (Re+Im)/2, v = (Re-Im)/2.
struct UVCoords {
    ExactComplex u, v;
};
UVCoords uv_coords(const ExactComplex& z);

// Certified complex approximation: |true value - (mid_re + i*mid_im)| <= radius,
// with dyadic components and radius <= 2^-precision_bits.
struct CertifiedApprox {
    Rational mid_re;
    Rational mid_im;
    Rational radius;
};

CertifiedApprox embed(const FieldElement& v, unsigned precision_bits);
QBox enclose(const FieldElement& v, unsigned bits);

} // namespace hcf
