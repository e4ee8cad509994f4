#include "hcf/cfengine.hpp"

#include <map>

namespace hcf {

PartialQuotient make_quotient(const GaussianInt& a) {
    if (a.is_zero()) return {a, QuotientKind::Zero, std::nullopt};
    if (a.is_even()) return {a, QuotientKind::Even, l_class(a)};
    return {a, QuotientKind::OddFinal, std::nullopt};
}

namespace {
void require_domain(const FieldElement& z, Algorithm algo, const char* who) {
    bool ok = true;
    switch (algo) {
        case Algorithm::H: ok = in_region(z, RegionId::Xclosure); break;
        case Algorithm::T: ok = in_region(z, RegionId::Xopen); break;
        case Algorithm::D: ok = in_region(z, RegionId::UnitDiskComplement); break;
    }
    if (!ok) throw error(std::string(who) + ": value outside the algorithm domain");
}
} // namespace

std::pair<PartialQuotient, FieldElement> step_H(const FieldElement& z) {
    if (z.is_zero()) throw error("step_H: z = 0");
    require_domain(z, Algorithm::H, "step_H");
    FieldElement r = z.inverse();
    if (r.is_gaussian_int()) return {make_quotient(r.gaussian_int()), FieldElement(0L)};
    GaussianInt a = floor_H(r);
    FieldElement next = r - a;
    require_domain(next, Algorithm::H, "step_H (post)");
    return {make_quotient(a), next};
}

std::pair<PartialQuotient, FieldElement> step_T(const FieldElement& z) {
    if (z.is_zero()) throw error("step_T: z = 0");
    require_domain(z, Algorithm::T, "step_T");
    FieldElement r = z.inverse();
    GaussianInt a = floor_T(r);
    FieldElement next = r - a;
    require_domain(next, Algorithm::T, "step_T (post)");
    return {make_quotient(a), next};
}

std::pair<PartialQuotient, std::optional<FieldElement>> step_D(const FieldElement& z) {
    require_domain(z, Algorithm::D, "step_D");
    if (z.is_gaussian_int()) return {make_quotient(z.gaussian_int()), std::nullopt};
    GaussianInt a = floor_dual(z);
    FieldElement next = (z - a).inverse();
    require_domain(next, Algorithm::D, "step_D (post)");
    return {make_quotient(a), next};
}

Orbit run_orbit(const FieldElement& alpha, Algorithm algo, size_t max_steps) {
    Orbit orbit;
    orbit.expansion.algorithm = algo;

    if (algo == Algorithm::D) {
        require_domain(alpha, Algorithm::D, "expand");
        std::map<FieldElement, size_t, FieldElementLess> seen;
        FieldElement z = alpha;
        orbit.states.push_back(z);
        seen.emplace(z, 0);
        std::vector<PartialQuotient> quots;
        while (true) {
            if (quots.size() >= max_steps) {
                orbit.expansion.status = ExpansionStatus::Truncated;
                orbit.expansion.preperiod = quots;
                return orbit;
            }
            auto [a, next] = step_D(z);
            quots.push_back(a);
            if (!next) { // reached infinity
                orbit.expansion.status = ExpansionStatus::Finite;
                orbit.expansion.preperiod = quots;
                return orbit;
            }
            z = *next;
            auto it = seen.find(z);
            if (it != seen.end()) {
                size_t i = it->second;
                orbit.expansion.status = ExpansionStatus::Periodic;
                orbit.expansion.preperiod.assign(quots.begin(), quots.begin() + i);
                orbit.expansion.period.assign(quots.begin() + i, quots.end());
                orbit.preperiod_len = i;
                return orbit;
            }
            orbit.states.push_back(z);
            seen.emplace(z, orbit.states.size() - 1);
        }
    }

    require_domain(alpha, algo, "expand");
    const FieldElement minus_one(-1L);
    std::map<FieldElement, size_t, FieldElementLess> seen;
    std::vector<PartialQuotient> quots;
    FieldElement z = alpha;
    while (true) {
        if (z.is_zero()) {
            orbit.expansion.status = ExpansionStatus::Finite;
            orbit.expansion.preperiod = quots;
            return orbit;
        }
        if (algo == Algorithm::T && z == minus_one) {
            // -1 is an exact fixed point of T_T with quotient 0.
            orbit.expansion.status = ExpansionStatus::MinusOneTail;
            orbit.expansion.preperiod = quots;
            orbit.expansion.period = {make_quotient(GaussianInt(0, 0))};
            orbit.preperiod_len = orbit.states.size();
            orbit.states.push_back(z);
            return orbit;
        }
        auto it = seen.find(z);
        if (it != seen.end()) {
            size_t i = it->second;
            orbit.expansion.status = ExpansionStatus::Periodic;
            orbit.expansion.preperiod.assign(quots.begin(), quots.begin() + i);
            orbit.expansion.period.assign(quots.begin() + i, quots.end());
            orbit.preperiod_len = i;
            return orbit;
        }
        orbit.states.push_back(z);
        seen.emplace(z, orbit.states.size() - 1);
        if (quots.size() >= max_steps) {
            orbit.expansion.status = ExpansionStatus::Truncated;
            orbit.expansion.preperiod = quots;
            return orbit;
        }
        auto [a, next] = algo == Algorithm::H ? step_H(z) : step_T(z);
        quots.push_back(a);
        z = next;
    }
}

Expansion expand(const FieldElement& alpha, Algorithm algo, size_t max_steps) {
    return run_orbit(alpha, algo, max_steps).expansion;
}

std::pair<GaussianInt, FieldElement> normalize_input(const FieldElement& alpha, Algorithm algo) {
    switch (algo) {
        case Algorithm::H: {
            GaussianInt a0 = floor_H(alpha);
            return {a0, alpha - a0};
        }
        case Algorithm::T: {
            GaussianInt a0 = floor_T(alpha);
            return {a0, alpha - a0};
        }
        case Algorithm::D:
            // The dual algorithm emits its own integer part as the first
            // quotient; inputs are used as-is.
            return {GaussianInt(0, 0), alpha};
    }
    throw internal_error("unreachable");
}

FieldElement evaluate_finite(const Expansion& e) {
    if (e.status != ExpansionStatus::Finite) throw error("evaluate_finite: expansion is not finite");
    const auto& q = e.preperiod;
    if (e.algorithm == Algorithm::D) {
        if (q.empty()) throw error("evaluate_finite: empty dual expansion");
        FieldElement w{GaussianRational(q.back().value)};
        for (size_t j = q.size() - 1; j-- > 0;)
            w = FieldElement(GaussianRational(q[j].value)) + w.inverse();
        return w;
    }
    FieldElement w(0L);
    for (size_t j = q.size(); j-- > 0;) {
        FieldElement d = FieldElement(GaussianRational(q[j].value)) + w;
        if (d.is_zero()) throw error("evaluate_finite: zero tail");
        w = d.inverse();
    }
    return FieldElement(GaussianRational(e.initial)) + w;
}

bool periodic_fixpoint_check(const Expansion& e, const FieldElement& alpha) {
    if (e.status != ExpansionStatus::Periodic) throw error("periodic_fixpoint_check: not periodic");
    if (e.algorithm == Algorithm::D) throw error("periodic_fixpoint_check: H/T only");
    FieldElement s = alpha - e.initial;
    for (const auto& pq : e.preperiod) {
        auto [a, next] = e.algorithm == Algorithm::H ? step_H(s) : step_T(s);
        if (!(a == pq)) return false;
        s = next;
    }
    FieldElement y = s;
    for (size_t j = e.period.size(); j-- > 0;) {
        FieldElement d = FieldElement(GaussianRational(e.period[j].value)) + y;
        if (d.is_zero()) return false;
        y = d.inverse();
    }
    return y == s;
}

} // namespace hcf
