#pragma once

#include "hcf/classify.hpp"
#include "hcf/natext.hpp"

#include <cstdint>
#include <map>

namespace hcf {

inline constexpr uint64_t kDefaultSeed = 1;

struct SuiteResult {
    std::string name;
    struct Counter {
        size_t checks = 0;
        size_t failures = 0;
    };
    std::map<std::string, Counter> parts;
    std::vector<std::string> failure_notes;
    std::vector<std::string> notes;

    void tally(const std::string& part, bool ok, const std::string& detail_on_fail = "");
    size_t checks() const;
    size_t failures() const;
    bool ok() const { return failures() == 0; }
};

// Deterministic quadratic-irrational population over both field types,
// including exact boundary constructions on the K arcs and Y segments.
std::vector<FieldElement> quadratic_population(uint64_t seed, size_t count);

// Quadratic irrationals exactly on K_1 u K_2 (inside X), resp. Y_3 u Y_4.
std::vector<FieldElement> arc_points_K12(uint64_t seed, size_t count);
std::vector<FieldElement> arc_points_Y34(uint64_t seed, size_t count);

SuiteResult suite_tilings(uint64_t seed, size_t count);     // default 1000
SuiteResult suite_lemmas(uint64_t seed, size_t count);      // default 50 per arc family
SuiteResult suite_periodicity(uint64_t seed, size_t count); // default 320 quadratics
SuiteResult suite_dual(uint64_t seed, size_t count);
SuiteResult suite_natext(uint64_t seed, size_t count); // default 10000 pairs
SuiteResult suite_sqrt_sweep();

// name in {tilings, lemmas, periodicity, dual, natext, sqrt-sweep, all};
// count 0 = per-suite default.
std::vector<SuiteResult> run_suites(const std::string& name, uint64_t seed, size_t count);

} // namespace hcf
