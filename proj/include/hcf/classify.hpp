#pragma once

#include "hcf/cfengine.hpp"

#include <tuple>

namespace hcf {

// One tested product-set membership: (role of the pair, region of alpha,
// region of alpha', did the pair match).
struct NPairWitness {
    RegionId first;
    RegionId second;
    bool matched = false;
};

// N1 = U (X_i x W_i) u U (Y_i x Y'_i) u U (K_i x K'_i), i as in the region
// atlas; N2 restricts to Y_3..Y_4 and K_1..K_2.  The predicate evaluates the
// pair (alpha, alpha') with exact region tests.
bool in_N1(const FieldElement& alpha);
bool in_N2(const FieldElement& alpha);
bool in_N1(const FieldElement& alpha, std::vector<NPairWitness>& witness);
bool in_N2(const FieldElement& alpha, std::vector<NPairWitness>& witness);

// True iff the first repeated exact orbit state is the initial state.
// Throws on rational input or a truncated orbit.
std::pair<bool, size_t> purely_periodic_oracle(const FieldElement& alpha, Algorithm algo,
                                               size_t max_steps = kDefaultMaxSteps);

// For a purely periodic H-orbit of period m: checks |(alpha_(m))'| > 1
// exactly, then replays the dual algorithm from (alpha_(m))' for 2m steps
// and compares against the reversed conjugate states.
bool verify_dual_reversal(const FieldElement& alpha, size_t max_steps = kDefaultMaxSteps);

// sqrt(m+ni) - floor(sqrt(m+ni)) under the floor matching the algorithm.
FieldElement sqrt_reduced(const BigInt& m, const BigInt& n, Algorithm algo);

struct PurePeriodicityReport {
    Algorithm algorithm = Algorithm::H;
    bool predicate_result = false;
    bool oracle_result = false;
    std::optional<size_t> period_length;
    std::vector<NPairWitness> witness;

    bool consistent() const { return predicate_result == oracle_result; }
};

PurePeriodicityReport classify_pure_periodicity(const FieldElement& alpha, Algorithm algo,
                                                size_t max_steps = kDefaultMaxSteps);

} // namespace hcf
