#pragma once

#include "hcf/gaussian.hpp"

#include <memory>
#include <optional>

namespace hcf {

enum class FieldType { A, B };

// Descriptor of Q(i, sqrt(m+ni)) with sqrt(m+ni) not in Q(i).
//
// Type B (sqrt(m^2+n^2) a positive integer) carries a factorization of the
// principal branch: sqrt(m+ni) = eps * sqrt(l) * unit with l a positive
// integer whose square root is irrational, unit in Q(i), eps in {+1,-1}.
// No square-free reduction of l is performed; only sqrt(l) irrational is
// guaranteed.
class QuadraticField {
  public:
    static std::shared_ptr<const QuadraticField> make(const BigInt& m, const BigInt& n);

    const BigInt& m() const { return m_; }
    const BigInt& n() const { return n_; }
    FieldType type() const { return type_; }
    BigInt norm() const { return m_ * m_ + n_ * n_; }
    GaussianRational d() const { return GaussianRational(GaussianInt(m_, n_)); }

    // Type B only.
    const BigInt& l() const;
    const GaussianRational& unit() const;
    int eps() const;
    // eps * unit, so that sqrt(m+ni) = sqrt(l) * principal_unit() exactly.
    GaussianRational principal_unit() const;

    bool same_as(const QuadraticField& o) const { return m_ == o.m_ && n_ == o.n_; }

  private:
    BigInt m_, n_;
    FieldType type_ = FieldType::A;
    BigInt l_;
    GaussianRational unit_;
    int eps_ = 1;
};

using FieldPtr = std::shared_ptr<const QuadraticField>;

// Exact square root in Z[i] if m+ni is a perfect square there.
std::optional<GaussianInt> gaussian_sqrt(const BigInt& m, const BigInt& n);

// Exact element of Q(i) or of a quadratic extension Q(i, sqrt(m+ni)):
// value = x + y * sqrt(D) under the principal branch of sqrt(D)
// (Re > 0, or Re = 0 and Im > 0).  y = 0 is always demoted to the
// rational variant, so the representation is canonical and equality is
// componentwise.  Values are immutable.
class FieldElement {
  public:
    FieldElement() : x_(GaussianRational::zero()) {}
    FieldElement(GaussianRational q) : x_(std::move(q)) {}
    FieldElement(long n) : x_(GaussianRational(n)) {}
    FieldElement(FieldPtr field, GaussianRational x, GaussianRational y);

    static FieldElement sqrt_d(const FieldPtr& field) {
        return FieldElement(field, GaussianRational::zero(), GaussianRational::one());
    }

    bool is_rational() const { return !field_; }
    bool is_quadratic() const { return static_cast<bool>(field_); }
    bool is_zero() const { return !field_ && x_.is_zero(); }
    bool is_gaussian_int() const { return !field_ && x_.is_gaussian_int(); }

    const GaussianRational& x() const { return x_; }
    const GaussianRational& y() const { return y_; }
    const FieldPtr& field() const { return field_; }
    // Rational variant accessor; throws on quadratic values.
    const GaussianRational& rational() const;
    GaussianInt gaussian_int() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement mul_i_pow(int k) const;

    FieldElement operator+(const GaussianInt& g) const { return *this + FieldElement(GaussianRational(g)); }
    FieldElement operator-(const GaussianInt& g) const { return *this - FieldElement(GaussianRational(g)); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Total order usable as a map key (field descriptors compared by (m,n)).
    bool less(const FieldElement& o) const;

  private:
    FieldPtr field_; // null <=> rational
    GaussianRational x_;
    GaussianRational y_;

    static FieldPtr common_field(const FieldElement& a, const FieldElement& b);
};

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, char op);

// x + y*sqrt(D) -> x - y*sqrt(D); errors on rational input.
FieldElement galois_conjugate(const FieldElement& a);

struct FieldElementLess {
    bool operator()(const FieldElement& a, const FieldElement& b) const { return a.less(b); }
};

} // namespace hcf
