#include "hcf/classify.hpp"

namespace hcf {

namespace {
bool in_N_impl(const FieldElement& alpha, bool n2, std::vector<NPairWitness>* witness) {
    if (!alpha.is_quadratic()) throw error("not quadratic over Q(i)");
    FieldElement conj = galois_conjugate(alpha);
    bool found = false;
    auto try_pair = [&](RegionId a, RegionId b) {
        if (found && !witness) return;
        bool m = in_region(alpha, a) && in_region(conj, b);
        if (witness) witness->push_back({a, b, m});
        found = found || m;
    };
    for (int i = 1; i <= 8 && (!found || witness); ++i) try_pair(region_X(i), region_W(i));
    for (int i = (n2 ? 3 : 1); i <= 4 && (!found || witness); ++i) try_pair(region_Y(i), region_YP(i));
    for (int i = 1; i <= (n2 ? 2 : 4) && (!found || witness); ++i) try_pair(region_K(i), region_KP(i));
    return found;
}
} // namespace

bool in_N1(const FieldElement& alpha) { return in_N_impl(alpha, false, nullptr); }
bool in_N2(const FieldElement& alpha) { return in_N_impl(alpha, true, nullptr); }
bool in_N1(const FieldElement& alpha, std::vector<NPairWitness>& w) { return in_N_impl(alpha, false, &w); }
bool in_N2(const FieldElement& alpha, std::vector<NPairWitness>& w) { return in_N_impl(alpha, true, &w); }

std::pair<bool, size_t> purely_periodic_oracle(const FieldElement& alpha, Algorithm algo,
                                               size_t max_steps) {
    if (!alpha.is_quadratic()) throw error("not quadratic over Q(i)");
    if (algo == Algorithm::D) throw error("oracle is for H/T");
    Expansion e = expand(alpha, algo, max_steps);
    if (e.status == ExpansionStatus::Truncated) throw error("orbit truncated; inconclusive");
    if (e.status != ExpansionStatus::Periodic)
        throw internal_error("quadratic orbit did not cycle");
    return {e.preperiod.empty(), e.period.size()};
}

bool verify_dual_reversal(const FieldElement& alpha, size_t max_steps) {
    Orbit orbit = run_orbit(alpha, Algorithm::H, max_steps);
    if (!orbit.expansion.purely_periodic())
        throw error("verify_dual_reversal: H-orbit is not purely periodic");
    const size_t m = orbit.states.size();
    std::vector<FieldElement> conj;
    conj.reserve(m);
    for (const auto& s : orbit.states) conj.push_back(galois_conjugate(s));

    // |(alpha_(m))'| > 1, exactly.
    ExactComplex last(conj[m - 1]);
    if ((last.norm2() - ExactComplex(Rational(1))).sign() <= 0) return false;

    FieldElement cur = conj[m - 1];
    for (size_t r = 1; r < 2 * m; ++r) {
        auto [a, next] = step_D(cur);
        (void)a;
        if (!next) return false;
        cur = *next;
        const FieldElement& want = conj[(m - 1 + m - (r % m)) % m];
        if (!(cur == want)) return false;
    }
    return true;
}

FieldElement sqrt_reduced(const BigInt& m, const BigInt& n, Algorithm algo) {
    FieldPtr field = QuadraticField::make(m, n);
    FieldElement root = FieldElement::sqrt_d(field);
    GaussianInt a0 = algo == Algorithm::T ? floor_T(root) : floor_H(root);
    return root - a0;
}

PurePeriodicityReport classify_pure_periodicity(const FieldElement& alpha, Algorithm algo,
                                                size_t max_steps) {
    PurePeriodicityReport rep;
    rep.algorithm = algo;
    rep.predicate_result = algo == Algorithm::H ? in_N1(alpha, rep.witness) : in_N2(alpha, rep.witness);
    auto [pure, len] = purely_periodic_oracle(alpha, algo, max_steps);
    rep.oracle_result = pure;
    if (pure) rep.period_length = len;
    return rep;
}

} // namespace hcf
