#include "hcf/field.hpp"

namespace hcf {

namespace {
BigInt isqrt(const BigInt& v) {
    return boost::multiprecision::sqrt(v);
}
} // namespace

std::optional<GaussianInt> gaussian_sqrt(const BigInt& m, const BigInt& n) {
    if (n == 0) {
        if (m >= 0) {
            BigInt s = isqrt(m);
            if (s * s == m) return GaussianInt(s, 0);
            return std::nullopt;
        }
        BigInt s = isqrt(-m);
        if (s * s == -m) return GaussianInt(0, s);
        return std::nullopt;
    }
    // (a+bi)^2 = m+ni needs a^2 = (k+m)/2 with k = |m+ni|.
    BigInt k2 = m * m + n * n;
    BigInt k = isqrt(k2);
    if (k * k != k2) return std::nullopt;
    BigInt a2 = k + m;
    if (a2 % 2 != 0) return std::nullopt;
    a2 /= 2;
    BigInt a = isqrt(a2);
    if (a * a != a2 || a == 0) return std::nullopt;
    if (n % (2 * a) != 0) return std::nullopt;
    BigInt b = n / (2 * a);
    if (a * a - b * b != m) return std::nullopt;
    return GaussianInt(a, b);
}

std::shared_ptr<const QuadraticField> QuadraticField::make(const BigInt& m, const BigInt& n) {
    if (gaussian_sqrt(m, n)) throw error("square in Z[i]");

    auto f = std::make_shared<QuadraticField>();
    f->m_ = m;
    f->n_ = n;

    BigInt k2 = m * m + n * n;
    BigInt k = isqrt(k2);
    if (k * k != k2) {
        f->type_ = FieldType::A;
        return f;
    }
    f->type_ = FieldType::B;

    if (n == 0) {
        f->l_ = abs(m);
        f->unit_ = m > 0 ? GaussianRational::one() : GaussianRational::i();
    } else if (m == 0) {
        // sqrt(ni) = sqrt(2|n|) * (1 +- i)/2
        f->l_ = 2 * abs(n);
        f->unit_ = GaussianRational(GaussianInt(1, n > 0 ? 1 : -1), 2);
    } else {
        using boost::multiprecision::gcd;
        BigInt l0 = gcd(abs(m), abs(n));
        BigInt m1 = m / l0, n1 = n / l0, k1 = k / l0;
        if (k1 * l0 != k || m1 * m1 + n1 * n1 != k1 * k1)
            throw internal_error("type-B norm factorization failed");
        if (n1 % 2 == 0) {
            // m1 + n1*i = (u+vi)^2
            BigInt u2 = (k1 + m1) / 2;
            BigInt u = isqrt(u2);
            if (u * u != u2 || u == 0 || n1 % (2 * u) != 0)
                throw internal_error("type-B unit solve failed (n1 even)");
            BigInt v = n1 / (2 * u);
            f->l_ = l0;
            f->unit_ = GaussianRational(GaussianInt(u, v));
        } else {
            // m1 even: m1 + n1*i = i*(u+vi)^2 with (u+vi)^2 = n1 - m1*i,
            // and sqrt(i) = (1+i)/sqrt(2) folds into l = 2*l0.
            BigInt u2 = (k1 + n1) / 2;
            BigInt u = isqrt(u2);
            if (u * u != u2 || u == 0 || m1 % (2 * u) != 0)
                throw internal_error("type-B unit solve failed (m1 even)");
            BigInt v = -m1 / (2 * u);
            f->l_ = 2 * l0;
            f->unit_ = GaussianRational(GaussianInt(u - v, u + v), 2);
        }
    }

    // Self-certify: l * unit^2 == m + ni exactly.
    GaussianRational sq = f->unit_ * f->unit_ * GaussianRational(GaussianInt(f->l_, 0));
    if (sq != GaussianRational(GaussianInt(m, n)))
        throw internal_error("type-B factorization does not square back to m+ni");
    BigInt ls = isqrt(f->l_);
    if (ls * ls == f->l_) throw internal_error("type-B l is a perfect square");

    // Principal branch: Re > 0, or Re = 0 and Im > 0.
    if (f->unit_.num().re != 0)
        f->eps_ = f->unit_.num().re > 0 ? 1 : -1;
    else
        f->eps_ = f->unit_.num().im > 0 ? 1 : -1;
    return f;
}

const BigInt& QuadraticField::l() const {
    if (type_ != FieldType::B) throw error("l() requires a type-B field");
    return l_;
}

const GaussianRational& QuadraticField::unit() const {
    if (type_ != FieldType::B) throw error("unit() requires a type-B field");
    return unit_;
}

int QuadraticField::eps() const {
    if (type_ != FieldType::B) throw error("eps() requires a type-B field");
    return eps_;
}

GaussianRational QuadraticField::principal_unit() const {
    return eps() == 1 ? unit() : -unit();
}

FieldElement::FieldElement(FieldPtr field, GaussianRational x, GaussianRational y)
    : field_(std::move(field)), x_(std::move(x)), y_(std::move(y)) {
    if (!field_) throw error("FieldElement: null field");
    if (y_.is_zero()) field_.reset(); // demote to rational
}

const GaussianRational& FieldElement::rational() const {
    if (field_) throw error("not a rational value");
    return x_;
}

GaussianInt FieldElement::gaussian_int() const {
    if (!is_gaussian_int()) throw error("not a Gaussian integer");
    return x_.num();
}

FieldPtr FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ && b.field_) {
        if (!a.field_->same_as(*b.field_)) throw error("mismatched field descriptors");
        return a.field_;
    }
    return a.field_ ? a.field_ : b.field_;
}

FieldElement FieldElement::operator-() const {
    if (!field_) return FieldElement(-x_);
    return FieldElement(field_, -x_, -y_);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    FieldPtr f = common_field(*this, o);
    if (!f) return FieldElement(x_ + o.x_);
    return FieldElement(f, x_ + o.x_, y_ + o.y_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    FieldPtr f = common_field(*this, o);
    if (!f) return FieldElement(x_ * o.x_);
    // (x1 + y1 s)(x2 + y2 s) = x1 x2 + y1 y2 D + (x1 y2 + x2 y1) s
    GaussianRational d = f->d();
    return FieldElement(f, x_ * o.x_ + y_ * o.y_ * d, x_ * o.y_ + o.x_ * y_);
}

FieldElement FieldElement::inverse() const {
    if (!field_) return FieldElement(x_.inverse());
    // 1/(x + y s) = (x - y s)/(x^2 - D y^2); the norm is nonzero because
    // sqrt(D) is not in Q(i).
    GaussianRational nrm = x_ * x_ - y_ * y_ * field_->d();
    if (nrm.is_zero()) throw internal_error("zero norm for quadratic element");
    return FieldElement(field_, x_ / nrm, -y_ / nrm);
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (o.is_zero()) throw error("division by zero");
    return *this * o.inverse();
}

FieldElement FieldElement::mul_i_pow(int k) const {
    if (!field_) return FieldElement(x_.mul_i_pow(k));
    return FieldElement(field_, x_.mul_i_pow(k), y_.mul_i_pow(k));
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (static_cast<bool>(field_) != static_cast<bool>(o.field_)) return false;
    if (field_ && !field_->same_as(*o.field_)) return false;
    return x_ == o.x_ && y_ == o.y_;
}

bool FieldElement::less(const FieldElement& o) const {
    if (static_cast<bool>(field_) != static_cast<bool>(o.field_)) return !field_;
    if (field_) {
        if (field_->m() != o.field_->m()) return field_->m() < o.field_->m();
        if (field_->n() != o.field_->n()) return field_->n() < o.field_->n();
    }
    if (x_ != o.x_) return x_ < o.x_;
    return y_ < o.y_;
}

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, char op) {
    switch (op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/': return a / b;
        default: throw error(std::string("unknown operator '") + op + "'");
    }
}

FieldElement galois_conjugate(const FieldElement& a) {
    if (a.is_rational()) throw error("no nontrivial conjugate");
    return FieldElement(a.field(), a.x(), -a.y());
}

} // namespace hcf
