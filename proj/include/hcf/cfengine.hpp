#pragma once

#include "hcf/regions.hpp"

#include <optional>
#include <vector>

namespace hcf {

enum class Algorithm { H, T, D };

enum class QuotientKind { Zero, Even, OddFinal };

struct PartialQuotient {
    GaussianInt value;
    QuotientKind kind = QuotientKind::Zero;
    std::optional<LClass> klass; // set iff kind == Even

    bool operator==(const PartialQuotient& o) const { return value == o.value; }
};

PartialQuotient make_quotient(const GaussianInt& a);

enum class ExpansionStatus { Finite, Periodic, MinusOneTail, Truncated };

struct Expansion {
    Algorithm algorithm = Algorithm::H;
    GaussianInt initial;
    std::vector<PartialQuotient> preperiod;
    std::vector<PartialQuotient> period;
    ExpansionStatus status = ExpansionStatus::Finite;

    bool purely_periodic() const {
        return status == ExpansionStatus::Periodic && preperiod.empty();
    }
};

// One step of each map.  Domain membership of both input and output is
// asserted exactly.
std::pair<PartialQuotient, FieldElement> step_H(const FieldElement& z);
std::pair<PartialQuotient, FieldElement> step_T(const FieldElement& z);
// Dual step; empty optional = infinity (z was a Gaussian integer).
std::pair<PartialQuotient, std::optional<FieldElement>> step_D(const FieldElement& z);

inline constexpr size_t kDefaultMaxSteps = 10000;

// Full orbit with exact states; cycle detection keys on canonical exact
// state values.
struct Orbit {
    Expansion expansion;
    std::vector<FieldElement> states; // alpha_(1), alpha_(2), ...
    size_t preperiod_len = 0;         // for Periodic: states[preperiod_len..] is one period
};

Orbit run_orbit(const FieldElement& alpha, Algorithm algo, size_t max_steps = kDefaultMaxSteps);

Expansion expand(const FieldElement& alpha, Algorithm algo, size_t max_steps = kDefaultMaxSteps);

// a0 and the in-domain remainder for the initial step of an expansion.
std::pair<GaussianInt, FieldElement> normalize_input(const FieldElement& alpha, Algorithm algo);

// Back-substitution of a finite expansion; must reproduce the input exactly.
FieldElement evaluate_finite(const Expansion& e);

// For a periodic expansion of alpha: replays the preperiod (checking emitted
// quotients) and verifies that the period's Moebius composition fixes the
// post-preperiod state exactly.
bool periodic_fixpoint_check(const Expansion& e, const FieldElement& alpha);

} // namespace hcf
