#pragma once

#include "hcf/cfengine.hpp"

namespace hcf {

// Point of the natural-extension product domain; an empty second coordinate
// is the symbol infinity.
struct ExtPoint {
    FieldElement z;
    std::optional<FieldElement> w;

    bool operator==(const ExtPoint& o) const {
        if (w.has_value() != o.w.has_value()) return false;
        if (!(z == o.z)) return false;
        return !w || *w == *o.w;
    }
};

// Xhat = U cl(X_i) x (cl(W_i) u {inf});  Xtilde uses cl(X_i) only for
// i <= 4, open X_i for i >= 5, and open W_i throughout.
bool in_Xhat(const ExtPoint& p);
bool in_Xtilde(const ExtPoint& p);

struct ExtStep {
    ExtPoint next;
    PartialQuotient quotient;
};

// (z, w) -> (T(z), 1/w - a(z)) with 1/inf = 0.  The input must lie in the
// matching extension domain (Xtilde for H, Xhat for T); the output is
// asserted back in-domain.
ExtStep ext_step(const ExtPoint& p, Algorithm algo);

// Exact rational check of h(T(z,w)) = h(z,w) * |z|^4 |w|^4 for the density
// h = C2/|z-w|^4 (C2 cancels).  Preconditions: (z,w) in Xhat, z,w nonzero,
// z != w.
bool density_identity_check(const GaussianRational& z, const GaussianRational& w);

struct InjectivityReport {
    size_t pairs = 0;
    size_t collisions = 0;
    std::vector<std::pair<size_t, size_t>> colliding_indices;
};

// Asserts no two distinct pairs map to the same exact output under one
// ext_step; duplicate inputs are not counted as collisions.
InjectivityReport injectivity_sample(const std::vector<ExtPoint>& pairs, Algorithm algo);

} // namespace hcf
