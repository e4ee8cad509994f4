#include "hcf/natext.hpp"

#include <map>

namespace hcf {

namespace {
bool second_in(const std::optional<FieldElement>& w, RegionId r) {
    return !w || in_region(*w, r);
}
} // namespace

bool in_Xhat(const ExtPoint& p) {
    for (int i = 1; i <= 8; ++i)
        if (in_region(p.z, region_XC(i)) && second_in(p.w, region_WC(i))) return true;
    return false;
}

bool in_Xtilde(const ExtPoint& p) {
    for (int i = 1; i <= 4; ++i)
        if (in_region(p.z, region_XC(i)) && second_in(p.w, region_W(i))) return true;
    for (int i = 5; i <= 8; ++i)
        if (in_region(p.z, region_X(i)) && second_in(p.w, region_W(i))) return true;
    return false;
}

ExtStep ext_step(const ExtPoint& p, Algorithm algo) {
    if (algo == Algorithm::D) throw error("ext_step: H or T only");
    if (p.z.is_zero()) throw error("ext_step: z = 0");
    bool h = algo == Algorithm::H;
    if (h ? !in_Xtilde(p) : !in_Xhat(p)) throw error("ext_step: point outside extension domain");

    auto [a, znext] = h ? step_H(p.z) : step_T(p.z);
    FieldElement wnext = p.w ? p.w->inverse() - a.value : FieldElement(GaussianRational(-a.value));
    ExtStep r{{znext, wnext}, a};
    if (h ? !in_Xtilde(r.next) : !in_Xhat(r.next))
        throw internal_error("ext_step: image left the extension domain");
    return r;
}

bool density_identity_check(const GaussianRational& z, const GaussianRational& w) {
    if (z.is_zero() || w.is_zero()) throw error("density_identity_check: zero coordinate");
    if (z == w) throw error("density_identity_check: z = w is a pole of the density");
    ExtPoint p{FieldElement(z), FieldElement(w)};
    if (!in_Xhat(p)) throw error("density_identity_check: pair not in the extension domain");

    GaussianRational zi = z.inverse();
    GaussianInt a = floor_T(FieldElement(zi));
    GaussianRational zn = zi - GaussianRational(a);
    GaussianRational wn = w.inverse() - GaussianRational(a);

    // |z'-w'|^4 * |z|^4 * |w|^4 == |z-w|^4, all exact rationals.
    Rational d1 = (zn - wn).norm(), d0 = (z - w).norm();
    Rational lhs = d1 * d1 * z.norm() * z.norm() * w.norm() * w.norm();
    Rational rhs = d0 * d0;
    return lhs == rhs;
}

namespace {
struct ExtPointLess {
    bool operator()(const ExtPoint& a, const ExtPoint& b) const {
        if (a.w.has_value() != b.w.has_value()) return !a.w.has_value();
        if (a.z.less(b.z)) return true;
        if (b.z.less(a.z)) return false;
        if (!a.w) return false;
        return a.w->less(*b.w);
    }
};
} // namespace

InjectivityReport injectivity_sample(const std::vector<ExtPoint>& pairs, Algorithm algo) {
    InjectivityReport rep;
    std::map<ExtPoint, size_t, ExtPointLess> inputs;  // dedupe equal inputs
    std::map<ExtPoint, size_t, ExtPointLess> outputs; // output -> input index
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [it, fresh] = inputs.emplace(pairs[i], i);
        if (!fresh) continue;
        ++rep.pairs;
        ExtPoint out = ext_step(pairs[i], algo).next;
        auto [oit, ofresh] = outputs.emplace(out, i);
        if (!ofresh) {
            ++rep.collisions;
            rep.colliding_indices.emplace_back(oit->second, i);
        }
    }
    return rep;
}

} // namespace hcf
