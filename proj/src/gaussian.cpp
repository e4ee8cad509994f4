#include "hcf/gaussian.hpp"

namespace hcf {

namespace {
BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    using boost::multiprecision::gcd;
    return gcd(gcd(a, b), c);
}
} // namespace

GaussianRational::GaussianRational(GaussianInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw error("GaussianRational: zero denominator");
    canonicalize();
}

GaussianRational::GaussianRational(const Rational& re, const Rational& im) {
    BigInt dr = denominator(re), di = denominator(im);
    using boost::multiprecision::gcd;
    BigInt g = gcd(dr, di);
    BigInt d = dr / g * di;
    num_ = GaussianInt(numerator(re) * (d / dr), numerator(im) * (d / di));
    den_ = d;
    canonicalize();
}

void GaussianRational::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd3(abs(num_.re), abs(num_.im), den_);
    if (g > 1) {
        num_.re /= g;
        num_.im /= g;
        den_ /= g;
    }
}

GaussianRational GaussianRational::operator+(const GaussianRational& o) const {
    return GaussianRational(num_ * GaussianInt(o.den_, 0) + o.num_ * GaussianInt(den_, 0),
                            den_ * o.den_);
}

GaussianRational GaussianRational::operator-(const GaussianRational& o) const {
    return *this + (-o);
}

GaussianRational GaussianRational::operator*(const GaussianRational& o) const {
    return GaussianRational(num_ * o.num_, den_ * o.den_);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw error("division by zero in Q(i)");
    // 1/(n/d) = d*conj(n) / |n|^2
    return GaussianRational(num_.conj() * GaussianInt(den_, 0), num_.norm());
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    return *this * o.inverse();
}

GaussianRational gauss_arith(const GaussianRational& a, const GaussianRational& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: throw error(std::string("unknown operator '") + op + "'");
    }
}

BigInt floor_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

} // namespace hcf
