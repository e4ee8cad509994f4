#pragma once

#include "hcf/exactc.hpp"

#include <string>

namespace hcf {

// Class of a nonzero element of (1+i)Z[i]:
//   diag: L(i^k(1+i)) = i^k(1+i)Z_{>0}
//   axis: L(i^k*2)   = { i^k(m(1+i)+l(1-i)) : m,l > 0 }
struct LClass {
    int k = 0; // 0..3
    bool diag = false;

    bool operator==(const LClass&) const = default;
};

LClass l_class(const GaussianInt& w);

enum class RegionId {
    X1, X2, X3, X4, X5, X6, X7, X8,
    // closures of X_j
    XC1, XC2, XC3, XC4, XC5, XC6, XC7, XC8,
    W1, W2, W3, W4, W5, W6, W7, W8,
    // closures of W_j
    WC1, WC2, WC3, WC4, WC5, WC6, WC7, WC8,
    K1, K2, K3, K4,
    KP1, KP2, KP3, KP4, // K'_j
    Y1, Y2, Y3, Y4,
    YP1, YP2, YP3, YP4, // Y'_j
    Xopen,              // the half-open fundamental square X
    Xclosure,
    UnitDiskComplement, // |z| >= 1
};

RegionId region_X(int j);  // 1..8
RegionId region_XC(int j); // 1..8
RegionId region_W(int j);  // 1..8
RegionId region_WC(int j); // 1..8
RegionId region_K(int j);  // 1..4
RegionId region_KP(int j); // 1..4
RegionId region_Y(int j);  // 1..4
RegionId region_YP(int j); // 1..4
std::string region_name(RegionId r);

bool in_region(const FieldElement& z, RegionId r);

// Literal transcription of the Q_w edge-inclusion rules (three half-open or
// closed edges for diag classes, two for axis classes, interior always);
// Q_0 is the closure of X.  w must be 0 or in (1+i)Z[i].
bool in_Q_w(const FieldElement& z, const GaussianInt& w);

// S_w disk cells of the dual floor; S_0 is the open unit disk.
bool in_S_w(const FieldElement& z, const GaussianInt& w);

// floor_T: nearest even lattice point under the [-1/2,1/2) box convention.
GaussianInt floor_T(const FieldElement& z);

// floor_H: Gaussian integers map to themselves; otherwise the unique even w
// with z in Q_w.  Throws internal_error if tiling uniqueness is violated.
GaussianInt floor_H(const FieldElement& z);

// floor_dual: Gaussian integers map to themselves; otherwise the unique even
// w with z in S_w.
GaussianInt floor_dual(const FieldElement& z);

} // namespace hcf
