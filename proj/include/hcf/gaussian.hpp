#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace hcf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (tiling uniqueness, domain assertions, ...).
struct internal_error : error {
    using error::error;
};

// Element of Z[i].
struct GaussianInt {
    BigInt re;
    BigInt im;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianInt(long r) : re(r), im(0) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    // "even" = in (1+i)Z[i]; equivalently re+im is even.
    bool is_even() const { return (re + im) % 2 == 0; }

    GaussianInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    // Multiply by i^k (k taken mod 4).
    GaussianInt mul_i_pow(int k) const {
        switch (((k % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return {-im, re};
            case 2: return {-re, -im};
            default: return {im, -re};
        }
    }

    bool operator==(const GaussianInt& o) const = default;
    auto operator<=>(const GaussianInt& o) const = default;
};

// Element of Q(i) in canonical form: num/den with den > 0 and
// gcd(num.re, num.im, den) = 1.  Canonical form makes equality and
// ordering componentwise, which is what orbit cycle detection keys on.
class GaussianRational {
  public:
    GaussianRational() : num_(0, 0), den_(1) {}
    GaussianRational(GaussianInt num, BigInt den);
    GaussianRational(const GaussianInt& g) : num_(g), den_(1) {}
    GaussianRational(long n) : num_(n, 0), den_(1) {}
    GaussianRational(const Rational& re, const Rational& im);

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(GaussianInt(0, 1)); }

    const GaussianInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    Rational re() const { return Rational(num_.re, den_); }
    Rational im() const { return Rational(num_.im, den_); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_real() const { return num_.im == 0; }
    bool is_gaussian_int() const { return den_ == 1; }

    GaussianRational conj() const { return GaussianRational(num_.conj(), den_); }
    // |q|^2, exact.
    Rational norm() const { return Rational(num_.norm(), den_ * den_); }

    GaussianRational operator-() const { return GaussianRational(-num_, den_); }
    GaussianRational operator+(const GaussianRational& o) const;
    GaussianRational operator-(const GaussianRational& o) const;
    GaussianRational operator*(const GaussianRational& o) const;
    GaussianRational operator/(const GaussianRational& o) const;
    GaussianRational inverse() const;
    GaussianRational mul_i_pow(int k) const { return GaussianRational(num_.mul_i_pow(k), den_); }

    bool operator==(const GaussianRational& o) const = default;
    auto operator<=>(const GaussianRational& o) const = default;

  private:
    GaussianInt num_;
    BigInt den_;
    void canonicalize();
};

GaussianRational gauss_arith(const GaussianRational& a, const GaussianRational& b, char op);

// Floor of an exact rational.
BigInt floor_rational(const Rational& q);

} // namespace hcf
