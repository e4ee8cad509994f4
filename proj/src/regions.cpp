#include "hcf/regions.hpp"

namespace hcf {

namespace {

const Rational kHalf{1, 2};
const ExactComplex kHalfC{kHalf};

// i^k * (1+i)/2
GaussianRational half_corner(int k) {
    return GaussianRational(GaussianInt(1, 1), 2).mul_i_pow(k);
}
// i^k * (1-i)/2
GaussianRational half_corner_conj(int k) {
    return GaussianRational(GaussianInt(1, -1), 2).mul_i_pow(k);
}
// i^k * (1-i)
GaussianRational corner_conj(int k) {
    return GaussianRational(GaussianInt(1, -1)).mul_i_pow(k);
}

struct BoxSigns {
    int u_lo, u_hi, v_lo, v_hi; // signs of u+1/2, u-1/2, v+1/2, v-1/2
};

BoxSigns box_signs(const ExactComplex& z) {
    auto [u, v] = uv_coords(z);
    return {(u + kHalfC).sign(), (u - kHalfC).sign(), (v + kHalfC).sign(), (v - kHalfC).sign()};
}

bool in_x_open_signs(const BoxSigns& s) {
    return s.u_lo >= 0 && s.u_hi < 0 && s.v_lo >= 0 && s.v_hi < 0;
}

bool in_x_closure_signs(const BoxSigns& s) {
    return s.u_lo >= 0 && s.u_hi <= 0 && s.v_lo >= 0 && s.v_hi <= 0;
}

int sign_abs2_minus_one(const ExactComplex& z) {
    return (z.norm2() - ExactComplex(Rational(1))).sign();
}

} // namespace

LClass l_class(const GaussianInt& w) {
    if (w.is_zero()) throw error("l_class: zero");
    if (!w.is_even()) throw error("l_class: not in (1+i)Z[i]");
    for (int k = 0; k < 4; ++k) {
        GaussianInt r = w.mul_i_pow(4 - k); // w * i^{-k}
        BigInt m = (r.re + r.im) / 2, l = (r.re - r.im) / 2;
        if (m > 0 && l == 0) return {k, true};
        if (m > 0 && l > 0) return {k, false};
    }
    throw internal_error("l_class: no class matched");
}

RegionId region_X(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::X1) + (j - 1)); }
RegionId region_XC(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::XC1) + (j - 1)); }
RegionId region_W(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::W1) + (j - 1)); }
RegionId region_WC(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::WC1) + (j - 1)); }
RegionId region_K(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::K1) + (j - 1)); }
RegionId region_KP(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::KP1) + (j - 1)); }
RegionId region_Y(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::Y1) + (j - 1)); }
RegionId region_YP(int j) { return static_cast<RegionId>(static_cast<int>(RegionId::YP1) + (j - 1)); }

std::string region_name(RegionId r) {
    int v = static_cast<int>(r);
    auto idx = [&](RegionId base) { return std::to_string(v - static_cast<int>(base) + 1); };
    if (r >= RegionId::X1 && r <= RegionId::X8) return "X" + idx(RegionId::X1);
    if (r >= RegionId::XC1 && r <= RegionId::XC8) return "cl(X" + idx(RegionId::XC1) + ")";
    if (r >= RegionId::W1 && r <= RegionId::W8) return "W" + idx(RegionId::W1);
    if (r >= RegionId::WC1 && r <= RegionId::WC8) return "cl(W" + idx(RegionId::WC1) + ")";
    if (r >= RegionId::K1 && r <= RegionId::K4) return "K" + idx(RegionId::K1);
    if (r >= RegionId::KP1 && r <= RegionId::KP4) return "K'" + idx(RegionId::KP1);
    if (r >= RegionId::Y1 && r <= RegionId::Y4) return "Y" + idx(RegionId::Y1);
    if (r >= RegionId::YP1 && r <= RegionId::YP4) return "Y'" + idx(RegionId::YP1);
    if (r == RegionId::Xopen) return "X";
    if (r == RegionId::Xclosure) return "cl(X)";
    return "D";
}

bool in_region(const FieldElement& zf, RegionId r) {
    ExactComplex z(zf);
    int v = static_cast<int>(r);

    auto x_j = [&](int j, bool closure) {
        BoxSigns s = box_signs(z);
        if (closure ? !in_x_closure_signs(s) : !in_x_open_signs(s)) return false;
        if (j <= 4) {
            for (int k = 0; k <= 2; ++k) {
                int sg = sign_norm2_minus(z, half_corner(k + j - 1), kHalf);
                if (closure ? sg < 0 : sg <= 0) return false;
            }
        } else {
            for (int k = 0; k <= 1; ++k) {
                int sg = sign_norm2_minus(z, half_corner_conj(k + (j - 4) - 1), kHalf);
                if (closure ? sg > 0 : sg >= 0) return false;
            }
        }
        return true;
    };

    auto w_j = [&](int j, bool closure) {
        int s0 = sign_abs2_minus_one(z);
        if (closure ? s0 < 0 : s0 <= 0) return false;
        if (j <= 4) {
            return sign_norm2_minus(z, corner_conj(j - 1), Rational(1)) >= 0;
        }
        for (int k = 0; k <= 1; ++k)
            if (sign_norm2_minus(z, corner_conj(k + (j - 4) - 1), Rational(1)) < 0) return false;
        return true;
    };

    auto k_j = [&](int j, bool outer) {
        if (sign_norm2_minus(z, half_corner_conj(j - 1), kHalf) != 0) return false;
        int s0 = sign_abs2_minus_one(z);
        return outer ? s0 > 0 : s0 <= 0;
    };

    // Y_j = { i^{j-1}(s - it) : s + t = 1, 0 <= s <= 1 },
    // Y'_j the s <= 0, t >= 1 extension.
    auto y_j = [&](int j, bool prime) {
        ExactComplex w = ExactComplex(zf.mul_i_pow(4 - ((j - 1) % 4)));
        ExactComplex s = w.real_part(), t = -w.imag_part();
        if (!(s + t - ExactComplex(Rational(1))).is_zero()) return false;
        int ss = s.sign();
        if (!prime) return ss >= 0 && (s - ExactComplex(Rational(1))).sign() <= 0;
        return ss <= 0 && (t - ExactComplex(Rational(1))).sign() >= 0;
    };

    if (r >= RegionId::X1 && r <= RegionId::X8) return x_j(v - static_cast<int>(RegionId::X1) + 1, false);
    if (r >= RegionId::XC1 && r <= RegionId::XC8) return x_j(v - static_cast<int>(RegionId::XC1) + 1, true);
    if (r >= RegionId::W1 && r <= RegionId::W8) return w_j(v - static_cast<int>(RegionId::W1) + 1, false);
    if (r >= RegionId::WC1 && r <= RegionId::WC8) return w_j(v - static_cast<int>(RegionId::WC1) + 1, true);
    if (r >= RegionId::K1 && r <= RegionId::K4) return k_j(v - static_cast<int>(RegionId::K1) + 1, false);
    if (r >= RegionId::KP1 && r <= RegionId::KP4) return k_j(v - static_cast<int>(RegionId::KP1) + 1, true);
    if (r >= RegionId::Y1 && r <= RegionId::Y4) return y_j(v - static_cast<int>(RegionId::Y1) + 1, false);
    if (r >= RegionId::YP1 && r <= RegionId::YP4) return y_j(v - static_cast<int>(RegionId::YP1) + 1, true);
    if (r == RegionId::Xopen) return in_x_open_signs(box_signs(z));
    if (r == RegionId::Xclosure) return in_x_closure_signs(box_signs(z));
    return sign_abs2_minus_one(z) >= 0; // UnitDiskComplement
}

bool in_Q_w(const FieldElement& z, const GaussianInt& w) {
    if (w.is_zero()) return in_region(z, RegionId::Xclosure);
    if (!w.is_even()) throw error("in_Q_w: w must be 0 or in (1+i)Z[i]");
    LClass cls = l_class(w);
    // Coordinates of (z - w) in the frame rotated by i^k.
    FieldElement d = (z - w).mul_i_pow(4 - cls.k);
    BoxSigns s = box_signs(ExactComplex(d));
    if (s.u_lo > 0 && s.u_hi < 0 && s.v_lo > 0 && s.v_hi < 0) return true; // X^o + w
    if (cls.diag) {
        if (s.v_lo == 0 && s.u_lo > 0 && s.u_hi <= 0) return true;  // u in (-1/2,1/2], v = -1/2
        if (s.u_hi == 0 && s.v_lo >= 0 && s.v_hi <= 0) return true; // u = 1/2, v in [-1/2,1/2]
        if (s.v_hi == 0 && s.u_lo > 0 && s.u_hi <= 0) return true;  // u in (-1/2,1/2], v = 1/2
        return false;
    }
    if (s.v_hi == 0 && s.u_lo > 0 && s.u_hi <= 0) return true; // u in (-1/2,1/2], v = 1/2
    if (s.u_hi == 0 && s.v_lo > 0 && s.v_hi <= 0) return true; // u = 1/2, v in (-1/2,1/2]
    return false;
}

bool in_S_w(const FieldElement& zf, const GaussianInt& w) {
    ExactComplex z(zf);
    if (w.is_zero()) return sign_abs2_minus_one(z) < 0;
    if (!w.is_even()) throw error("in_S_w: w must be 0 or in (1+i)Z[i]");
    LClass cls = l_class(w);
    if (sign_norm2_minus(z, GaussianRational(w), Rational(1)) >= 0) return false;
    GaussianInt e1 = w - GaussianInt(1, 1).mul_i_pow(cls.k);
    if (sign_norm2_minus(z, GaussianRational(e1), Rational(1)) < 0) return false;
    if (!cls.diag) {
        GaussianInt e2 = w - GaussianInt(1, -1).mul_i_pow(cls.k);
        if (sign_norm2_minus(z, GaussianRational(e2), Rational(1)) < 0) return false;
    }
    return true;
}

namespace {
std::pair<BigInt, BigInt> box_coords(const FieldElement& z) {
    auto [u, v] = uv_coords(ExactComplex(z));
    BigInt m = (u + kHalfC).floor();
    BigInt l = (v + kHalfC).floor();
    return {m, l};
}

GaussianInt lattice_point(const BigInt& m, const BigInt& l) {
    return GaussianInt(m + l, m - l);
}
} // namespace

GaussianInt floor_T(const FieldElement& z) {
    auto [m, l] = box_coords(z);
    return lattice_point(m, l);
}

GaussianInt floor_H(const FieldElement& z) {
    if (z.is_gaussian_int()) return z.gaussian_int();
    auto [m0, l0] = box_coords(z);
    GaussianInt hit;
    int hits = 0;
    for (int dm = -1; dm <= 1; ++dm)
        for (int dl = -1; dl <= 1; ++dl) {
            GaussianInt w = lattice_point(m0 + dm, l0 + dl);
            if (in_Q_w(z, w)) {
                hit = w;
                ++hits;
            }
        }
    if (hits != 1) throw internal_error("Q-tiling uniqueness violated (" + std::to_string(hits) + " hits)");
    return hit;
}

GaussianInt floor_dual(const FieldElement& z) {
    if (z.is_gaussian_int()) return z.gaussian_int();
    auto [m0, l0] = box_coords(z);
    GaussianInt hit;
    int hits = 0;
    for (int dm = -1; dm <= 1; ++dm)
        for (int dl = -1; dl <= 1; ++dl) {
            GaussianInt w = lattice_point(m0 + dm, l0 + dl);
            if (in_S_w(z, w)) {
                hit = w;
                ++hits;
            }
        }
    if (hits != 1) throw internal_error("S-tiling uniqueness violated (" + std::to_string(hits) + " hits)");
    return hit;
}

} // namespace hcf
