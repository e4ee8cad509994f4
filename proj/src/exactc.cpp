#include "hcf/exactc.hpp"

#include <algorithm>

namespace hcf {

QInterval QInterval::operator*(const QInterval& o) const {
    Rational p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

QInterval sqrt_enclosure(const Rational& v, unsigned bits) {
    if (v <= 0) return QInterval(Rational(0));
    BigInt scale = BigInt(1) << (2 * bits);
    Rational scaled = v * Rational(scale);
    BigInt fl = floor_rational(scaled);
    BigInt cl = -floor_rational(-scaled);
    BigInt slo = boost::multiprecision::sqrt(fl);
    BigInt shi = boost::multiprecision::sqrt(cl) + 1;
    BigInt den = BigInt(1) << bits;
    return {Rational(slo, den), Rational(shi, den)};
}

QInterval sqrt_enclosure(const QInterval& v, unsigned bits) {
    Rational lo = v.lo < 0 ? Rational(0) : v.lo;
    return {sqrt_enclosure(lo, bits).lo, sqrt_enclosure(v.hi, bits).hi};
}

Rational QBox::max_halfwidth() const {
    return std::max(re.width(), im.width()) / 2;
}

ExactComplex::ExactComplex(const FieldElement& v) : tag_(Tag::Rat) {
    if (v.is_rational()) {
        c0_ = v.rational();
        return;
    }
    const QuadraticField& f = *v.field();
    if (f.type() == FieldType::B) {
        tag_ = Tag::TypeB;
        c0_ = v.x();
        ca_ = v.y() * f.principal_unit();
        p1_ = f.l();
    } else {
        tag_ = Tag::TypeA;
        c0_ = v.x();
        ca_ = v.y();
        p1_ = f.m();
        p2_ = f.n();
    }
}

ExactComplex ExactComplex::promote(const ExactComplex& v, Tag tag, const BigInt& p1, const BigInt& p2) {
    if (v.tag_ == tag) {
        if (tag != Tag::Rat && (v.p1_ != p1 || (tag == Tag::TypeA && v.p2_ != p2)))
            throw internal_error("ExactComplex: mixed extensions");
        return v;
    }
    if (v.tag_ != Tag::Rat) throw internal_error("ExactComplex: mixed extensions");
    ExactComplex r = v;
    r.tag_ = tag;
    r.p1_ = p1;
    r.p2_ = p2;
    return r;
}

void ExactComplex::align(ExactComplex& a, ExactComplex& b) {
    if (a.tag_ == b.tag_ && a.tag_ == Tag::Rat) return;
    if (b.tag_ == Tag::Rat || (a.tag_ != Tag::Rat)) {
        b = promote(b, a.tag_, a.p1_, a.p2_);
        a = promote(a, a.tag_, a.p1_, a.p2_);
    } else {
        a = promote(a, b.tag_, b.p1_, b.p2_);
    }
}

bool ExactComplex::is_zero() const {
    // Coordinatewise in the appropriate basis: {1} / {1, sqrt(l)} over Q(i)
    // / {1, A, B, AB} over Q(i) (linearly independent for type A).
    return c0_.is_zero() && ca_.is_zero() && cb_.is_zero() && cg_.is_zero();
}

bool ExactComplex::is_real() const {
    switch (tag_) {
        case Tag::Rat: return c0_.is_real();
        case Tag::TypeB: return c0_.is_real() && ca_.is_real();
        case Tag::TypeA: return c0_.is_real() && cg_.is_real() && cb_ == ca_.conj();
    }
    return false;
}

ExactComplex ExactComplex::conj() const {
    ExactComplex r = *this;
    switch (tag_) {
        case Tag::Rat:
            r.c0_ = c0_.conj();
            break;
        case Tag::TypeB: // sqrt(l) is real
            r.c0_ = c0_.conj();
            r.ca_ = ca_.conj();
            break;
        case Tag::TypeA: // conj(A) = B since Re(A) > 0 for type A
            r.c0_ = c0_.conj();
            r.ca_ = cb_.conj();
            r.cb_ = ca_.conj();
            r.cg_ = cg_.conj();
            break;
    }
    return r;
}

ExactComplex ExactComplex::operator-() const {
    ExactComplex r = *this;
    r.c0_ = -c0_;
    r.ca_ = -ca_;
    r.cb_ = -cb_;
    r.cg_ = -cg_;
    return r;
}

ExactComplex ExactComplex::operator+(const ExactComplex& o) const {
    ExactComplex a = *this, b = o;
    align(a, b);
    a.c0_ = a.c0_ + b.c0_;
    a.ca_ = a.ca_ + b.ca_;
    a.cb_ = a.cb_ + b.cb_;
    a.cg_ = a.cg_ + b.cg_;
    return a;
}

ExactComplex ExactComplex::operator-(const ExactComplex& o) const {
    return *this + (-o);
}

ExactComplex ExactComplex::operator*(const ExactComplex& o) const {
    ExactComplex a = *this, b = o;
    align(a, b);
    ExactComplex r = a;
    switch (a.tag_) {
        case Tag::Rat:
            r.c0_ = a.c0_ * b.c0_;
            break;
        case Tag::TypeB: {
            GaussianRational l{GaussianInt(a.p1_, 0)};
            r.c0_ = a.c0_ * b.c0_ + a.ca_ * b.ca_ * l;
            r.ca_ = a.c0_ * b.ca_ + a.ca_ * b.c0_;
            break;
        }
        case Tag::TypeA: {
            // A^2 = D, B^2 = conj(D), AB = G, AG = D*B, BG = conj(D)*A,
            // G^2 = |D|^2.
            GaussianRational d{GaussianInt(a.p1_, a.p2_)};
            GaussianRational dc = d.conj();
            GaussianRational nn = d * dc;
            r.c0_ = a.c0_ * b.c0_ + a.ca_ * b.ca_ * d + a.cb_ * b.cb_ * dc + a.cg_ * b.cg_ * nn;
            r.ca_ = a.c0_ * b.ca_ + a.ca_ * b.c0_ + (a.cb_ * b.cg_ + a.cg_ * b.cb_) * dc;
            r.cb_ = a.c0_ * b.cb_ + a.cb_ * b.c0_ + (a.ca_ * b.cg_ + a.cg_ * b.ca_) * d;
            r.cg_ = a.c0_ * b.cg_ + a.cg_ * b.c0_ + a.ca_ * b.cb_ + a.cb_ * b.ca_;
            break;
        }
    }
    return r;
}

ExactComplex ExactComplex::real_part() const {
    static const GaussianRational half(GaussianInt(1, 0), 2);
    return (*this + conj()) * ExactComplex(half);
}

ExactComplex ExactComplex::imag_part() const {
    // (z - conj z) * (-i/2)
    static const GaussianRational mhalf_i(GaussianInt(0, -1), 2);
    return (*this - conj()) * ExactComplex(mhalf_i);
}

ExactComplex ExactComplex::norm2() const {
    return *this * conj();
}

QBox ExactComplex::enclose(unsigned bits) const {
    switch (tag_) {
        case Tag::Rat:
            return QBox(c0_);
        case Tag::TypeB: {
            QInterval s = sqrt_enclosure(Rational(p1_), bits);
            return QBox(c0_) + QBox(ca_) * QBox(s, QInterval(Rational(0)));
        }
        case Tag::TypeA: {
            // A = a + b*i with a = sqrt((K+m)/2), b = sign(n)*sqrt((K-m)/2),
            // K = sqrt(m^2+n^2); B = conj(A); G = AB = K.
            Rational m(p1_), n(p2_);
            QInterval k = sqrt_enclosure(Rational(p1_ * p1_ + p2_ * p2_), bits);
            Rational half(1, 2);
            QInterval a = sqrt_enclosure((k + QInterval(m)) * QInterval(half), bits);
            QInterval b = sqrt_enclosure((k - QInterval(m)) * QInterval(half), bits);
            if (p2_ < 0) b = -b;
            QBox alpha(a, b), beta(a, -b), gamma(k, QInterval(Rational(0)));
            return QBox(c0_) + QBox(ca_) * alpha + QBox(cb_) * beta + QBox(cg_) * gamma;
        }
    }
    throw internal_error("unreachable");
}

int ExactComplex::sign() const {
    if (!is_real()) throw error("sign test on a non-real value");
    if (tag_ == Tag::Rat) {
        const BigInt& r = c0_.num().re;
        return r == 0 ? 0 : (r > 0 ? 1 : -1);
    }
    bool zero_tested = false;
    for (unsigned bits = 64;; bits *= 2) {
        QInterval iv = enclose(bits).re;
        if (!iv.contains_zero()) return iv.lo > 0 ? 1 : -1;
        if (!zero_tested) {
            if (is_zero()) return 0;
            zero_tested = true;
        }
        if (bits > (1u << 22)) throw internal_error("sign refinement did not converge");
    }
}

BigInt ExactComplex::floor() const {
    if (!is_real()) throw error("floor of a non-real value");
    if (tag_ == Tag::Rat) return floor_rational(c0_.re());
    for (unsigned bits = 64;; bits *= 2) {
        QInterval iv = enclose(bits).re;
        BigInt fl = floor_rational(iv.lo);
        if (iv.hi < Rational(fl + 1)) return fl;
        // Interval straddles fl+1: decide against the exact boundary.
        int s = (*this - ExactComplex(Rational(fl + 1))).sign();
        if (s == 0) return fl + 1;
        if (s < 0) return fl;
        if (bits > (1u << 22)) throw internal_error("floor refinement did not converge");
    }
}

int sign_norm2_minus(const ExactComplex& z, const GaussianRational& center, const Rational& rho2) {
    ExactComplex d = z - ExactComplex(center);
    return (d.norm2() - ExactComplex(rho2)).sign();
}

UVCoords uv_coords(const ExactComplex& z) {
    static const GaussianRational half(GaussianInt(1, 0), 2);
    ExactComplex re = z.real_part(), im = z.imag_part();
    return {(re + im) * ExactComplex(half), (re - im) * ExactComplex(half)};
}

QBox enclose(const FieldElement& v, unsigned bits) {
    return ExactComplex(v).enclose(bits);
}

namespace {
bool is_dyadic(const Rational& q) {
    BigInt d = denominator(q);
    return (d & (d - 1)) == 0;
}

Rational round_to_dyadic(const Rational& q, unsigned bits) {
    BigInt den = BigInt(1) << bits;
    return Rational(floor_rational(q * Rational(den) + Rational(1, 2)), den);
}
} // namespace

CertifiedApprox embed(const FieldElement& v, unsigned precision_bits) {
    if (precision_bits < 1) throw error("embed: precision must be >= 1");
    ExactComplex z(v);
    Rational target = Rational(1, BigInt(1) << precision_bits);
    for (unsigned bits = precision_bits + 8;; bits *= 2) {
        QBox box = z.enclose(bits);
        Rational mre = (box.re.lo + box.re.hi) / 2;
        Rational mim = (box.im.lo + box.im.hi) / 2;
        if (box.max_halfwidth() == 0 && is_dyadic(mre) && is_dyadic(mim))
            return {mre, mim, Rational(0)};
        Rational dre = round_to_dyadic(mre, bits);
        Rational dim = round_to_dyadic(mim, bits);
        Rational slack = std::max(std::max(abs(dre - Rational(box.re.lo)), abs(Rational(box.re.hi) - dre)),
                                  std::max(abs(dim - Rational(box.im.lo)), abs(Rational(box.im.hi) - dim)));
        // Radius rounded up to a dyadic.
        Rational radius = Rational(-floor_rational(-(slack * Rational(BigInt(1) << bits))), BigInt(1) << bits);
        if (radius <= target) return {dre, dim, radius};
        if (bits > (1u << 22)) throw internal_error("embed refinement did not converge");
    }
}

} // namespace hcf
