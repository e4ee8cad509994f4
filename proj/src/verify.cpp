#include "hcf/verify.hpp"

#include "hcf/format.hpp"

#include <array>
#include <random>

namespace hcf {

void SuiteResult::tally(const std::string& part, bool ok, const std::string& detail_on_fail) {
    Counter& c = parts[part];
    ++c.checks;
    if (!ok) {
        ++c.failures;
        if (failure_notes.size() < 32)
            failure_notes.push_back(part + (detail_on_fail.empty() ? "" : ": " + detail_on_fail));
    }
}

size_t SuiteResult::checks() const {
    size_t n = 0;
    for (const auto& [k, c] : parts) n += c.checks;
    return n;
}

size_t SuiteResult::failures() const {
    size_t n = 0;
    for (const auto& [k, c] : parts) n += c.failures;
    return n;
}

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    // [lo, hi], avoiding std distributions for cross-build determinism
    long range(long lo, long hi) {
        return lo + static_cast<long>(eng() % static_cast<uint64_t>(hi - lo + 1));
    }
    Rational rat(long max_abs_num, long max_den) {
        return Rational(range(-max_abs_num, max_abs_num), range(1, max_den));
    }
    GaussianRational gauss(long max_abs_num, long max_den) {
        return GaussianRational(rat(max_abs_num, max_den), rat(max_abs_num, max_den));
    }
};

// i^k (1-i)/2, the K-circle centers.
GaussianRational k_center(int j) {
    return GaussianRational(GaussianInt(1, -1), 2).mul_i_pow(j - 1);
}

// Exact point on the circle |z - c_j| = sqrt(2)/2 over Q(i, sqrt 2):
// z = c_j + sqrt(2) * ((1-t^2) + 2t i) / (2(1+t^2)).
FieldElement k_circle_point(const FieldPtr& f2, int j, const Rational& t) {
    Rational den = 2 * (1 + t * t);
    GaussianRational y((1 - t * t) / den, 2 * t / den);
    return FieldElement(f2, k_center(j), y);
}

// Exact point on the Y_j line with s = sigma + tau*sqrt(l):
// z = i^{j-1} ((s) - (1-s) i).
FieldElement y_line_point(const FieldPtr& fl, int j, const Rational& sigma, const Rational& tau) {
    GaussianRational x = GaussianRational(sigma, sigma - 1).mul_i_pow(j - 1);
    GaussianRational y = GaussianRational(tau, tau).mul_i_pow(j - 1);
    return FieldElement(fl, x, y);
}

const std::array<std::pair<long, long>, 7> kPopulationFields = {
    {{2, 1}, {1, 2}, {-3, 0}, {0, 5}, {3, 3}, {2, 0}, {3, 0}}};

bool in_any(const FieldElement& z, std::initializer_list<RegionId> regions) {
    for (RegionId r : regions)
        if (in_region(z, r)) return true;
    return false;
}

FieldElement fold(const FieldElement& alpha, Algorithm algo) {
    return normalize_input(alpha, algo).second;
}

GaussianRational random_point_in_X(Rng& rng, long max_den) {
    long qd = rng.range(2, max_den);
    Rational u(rng.range(-qd, qd - 1), 2 * qd);
    long qd2 = rng.range(2, max_den);
    Rational v(rng.range(-qd2, qd2 - 1), 2 * qd2);
    // z = u(1+i) + v(1-i)
    return GaussianRational(u + v, u - v);
}

int x_region_index(const FieldElement& z) {
    for (int i = 1; i <= 8; ++i)
        if (in_region(z, region_X(i))) return i;
    return 0;
}

} // namespace

std::vector<FieldElement> arc_points_K12(uint64_t seed, size_t count) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
    FieldPtr f2 = QuadraticField::make(2, 0);
    std::vector<FieldElement> out;
    int j = 1;
    while (out.size() < count) {
        Rational t = rng.rat(24, 12);
        FieldElement z = k_circle_point(f2, j, t);
        if (in_region(z, region_K(j)) && in_region(z, RegionId::Xopen)) {
            out.push_back(z);
            j = j == 1 ? 2 : 1;
        }
    }
    return out;
}

std::vector<FieldElement> arc_points_Y34(uint64_t seed, size_t count) {
    Rng rng(seed ^ 0x2545f4914f6cdd1dull);
    FieldPtr f2 = QuadraticField::make(2, 0);
    FieldPtr f3 = QuadraticField::make(3, 0);
    std::vector<FieldElement> out;
    int j = 3;
    while (out.size() < count) {
        bool use3 = out.size() % 2 == 1;
        long q = rng.range(4, 12);
        Rational sigma(rng.range((q + 3) / 4, 3 * q / 4), q);
        Rational tau(rng.range(0, 1) ? 1 : -1, rng.range(8, 64));
        FieldElement z = y_line_point(use3 ? f3 : f2, j, sigma, tau);
        if (in_region(z, region_Y(j)) && in_region(z, RegionId::Xopen)) {
            out.push_back(z);
            j = j == 3 ? 4 : 3;
        }
    }
    return out;
}

std::vector<FieldElement> quadratic_population(uint64_t seed, size_t count) {
    Rng rng(seed);
    std::vector<FieldPtr> fields;
    for (auto [m, n] : kPopulationFields) fields.push_back(QuadraticField::make(m, n));
    std::vector<FieldElement> out;
    out.reserve(count);

    size_t boundary = count / 4;
    std::vector<FieldElement> karc = arc_points_K12(seed, boundary / 2 + boundary % 2);
    std::vector<FieldElement> yseg = arc_points_Y34(seed, boundary / 2);
    // K' and Y'-side entries come for free: the Galois conjugate of a K-arc
    // point lies on the same circle, so the population sees both sides.
    for (size_t i = 0; i < karc.size(); ++i) out.push_back(karc[i]);
    for (size_t i = 0; i < yseg.size(); ++i) out.push_back(yseg[i]);

    size_t idx = 0;
    while (out.size() < count) {
        const FieldPtr& f = fields[idx++ % fields.size()];
        GaussianRational x = rng.gauss(12, 12);
        GaussianRational y = rng.gauss(12, 12);
        if (y.is_zero()) continue;
        out.emplace_back(f, x, y);
    }
    return out;
}

SuiteResult suite_tilings(uint64_t seed, size_t count) {
    if (count == 0) count = 1000;
    SuiteResult res;
    res.name = "tilings";
    Rng rng(seed);

    for (size_t it = 0; it < count; ++it) {
        FieldElement z;
        switch (rng.range(0, 9)) {
            case 0: case 1: { // exactly on a box edge
                long m = rng.range(-3, 3), l = rng.range(-3, 3);
                int k = static_cast<int>(rng.range(0, 3));
                long tq = rng.range(1, 12);
                Rational t(rng.range(-tq, tq), 2 * tq); // in [-1/2, 1/2]
                Rational a, b;
                if (rng.range(0, 1)) {
                    a = t;
                    b = Rational(rng.range(0, 1) ? 1 : -1, 2);
                } else {
                    a = Rational(rng.range(0, 1) ? 1 : -1, 2);
                    b = t;
                }
                GaussianRational off = GaussianRational(a + b, a - b).mul_i_pow(k);
                z = FieldElement(GaussianRational(GaussianInt(m + l, m - l)) + off);
                break;
            }
            case 2: { // Gaussian-integer vertex (odd or even)
                long m = rng.range(-3, 3), l = rng.range(-3, 3);
                long odd = rng.range(0, 1);
                z = FieldElement(GaussianRational(GaussianInt(m + l + odd, m - l)));
                break;
            }
            default:
                z = FieldElement(rng.gauss(40, 9));
        }

        auto [u, v] = uv_coords(ExactComplex(z));
        BigInt m0 = (u + ExactComplex(Rational(1, 2))).floor();
        BigInt l0 = (v + ExactComplex(Rational(1, 2))).floor();
        int q_hits = 0, s_hits = 0;
        for (long dm = -2; dm <= 2; ++dm)
            for (long dl = -2; dl <= 2; ++dl) {
                GaussianInt w(m0 + dm + l0 + dl, m0 + dm - (l0 + dl));
                if (in_Q_w(z, w)) ++q_hits;
                if (in_S_w(z, w)) ++s_hits;
            }
        res.tally("Q-uniqueness", q_hits == 1,
                  format_field_element(z) + " has " + std::to_string(q_hits) + " Q hits");
        bool odd_point = z.is_gaussian_int() && !z.gaussian_int().is_even();
        if (odd_point)
            res.tally("S-odd-excluded", s_hits == 0,
                      format_field_element(z) + " has " + std::to_string(s_hits) + " S hits");
        else
            res.tally("S-uniqueness", s_hits == 1,
                      format_field_element(z) + " has " + std::to_string(s_hits) + " S hits");
    }
    return res;
}

namespace {

// Agreement pattern of the two maps along four steps, per the arc lemmas.
void check_arc_pattern(SuiteResult& res, const FieldElement& u, bool from_k) {
    std::array<FieldElement, 5> h, t;
    h[0] = u;
    t[0] = u;
    for (int s = 1; s <= 4; ++s) {
        h[s] = step_H(h[s - 1]).second;
        t[s] = step_T(t[s - 1]).second;
    }
    const char* part = from_k ? "letuin-K" : "letuin-Y";
    std::string who = format_field_element(u);
    if (from_k) {
        bool pat = !(h[1] == t[1]) && !(h[2] == t[2]) && h[3] == t[3] && h[4] == t[4];
        res.tally(part, pat, who);
        res.tally("letuin-K-return", h[4] == t[4] && in_any(h[4], {RegionId::K1, RegionId::K2}), who);
        // First disagreement: the H image sits on the far boundary edges
        // (Y1 u Y2), the T image on Y3 u Y4, and both maps rejoin in
        // K1 u K2 after four steps.
        res.tally("split-images", in_any(h[1], {RegionId::Y1, RegionId::Y2}) &&
                                      in_any(t[1], {RegionId::Y3, RegionId::Y4}),
                  who);
    } else {
        bool pat = h[1] == t[1] && !(h[2] == t[2]) && !(h[3] == t[3]) && h[4] == t[4];
        res.tally(part, pat, who);
        res.tally("letuin-Y-return", h[4] == t[4] && in_any(h[4], {RegionId::Y3, RegionId::Y4}), who);
        res.tally("split-images", in_any(h[2], {RegionId::Y1, RegionId::Y2}) &&
                                      in_any(t[2], {RegionId::Y3, RegionId::Y4}),
                  who);
        // The step after the rejoin point lands back on K1 u K2.
        FieldElement h5 = step_H(h[4]).second, t5 = step_T(t[4]).second;
        res.tally("backslash-return", h5 == t5 && in_any(h5, {RegionId::K1, RegionId::K2}), who);
    }
}

} // namespace

SuiteResult suite_lemmas(uint64_t seed, size_t count) {
    if (count == 0) count = 50;
    SuiteResult res;
    res.name = "lemmas";

    for (const FieldElement& u : arc_points_K12(seed, count)) check_arc_pattern(res, u, true);
    for (const FieldElement& u : arc_points_Y34(seed, count)) check_arc_pattern(res, u, false);

    // Membership direction of T_H(Y_j) = K_{5-j} (indices mod the lemma's
    // table), T_H(K_j), T_T(Y_j), T_T(K_j), sampled.
    Rng rng(seed ^ 0xa5a5a5a5ull);
    FieldPtr f2 = QuadraticField::make(2, 0);
    static const int h_from_y[5] = {0, 4, 3, 2, 1}; // T_H(Y_j) in K_...
    static const int h_from_k[5] = {0, 2, 1, 4, 3}; // T_H(K_j) in Y_...
    static const int t_from_k[5] = {0, 4, 3, 4, 3}; // T_T(K_j) in Y_...
    for (int j = 1; j <= 4; ++j) {
        size_t made = 0;
        while (made < 6) {
            Rational t = rng.rat(24, 12);
            FieldElement u = k_circle_point(f2, j, t);
            if (!in_region(u, region_K(j))) continue;
            ++made;
            res.tally("T_H(K)", in_region(step_H(u).second, region_Y(h_from_k[j])),
                      "j=" + std::to_string(j));
            if (in_region(u, RegionId::Xopen))
                res.tally("T_T(K)", in_region(step_T(u).second, region_Y(t_from_k[j])),
                          "j=" + std::to_string(j));
        }
        made = 0;
        while (made < 6) {
            long q = rng.range(4, 12);
            Rational sigma(rng.range((q + 3) / 4, 3 * q / 4), q);
            Rational tau(rng.range(0, 1) ? 1 : -1, rng.range(8, 64));
            FieldElement u = y_line_point(f2, j, sigma, tau);
            if (!in_region(u, region_Y(j))) continue;
            ++made;
            res.tally("T_H(Y)", in_region(step_H(u).second, region_K(h_from_y[j])),
                      "j=" + std::to_string(j));
            if (j >= 3)
                res.tally("T_T(Y)", in_region(step_T(u).second, region_K(h_from_y[j])),
                          "j=" + std::to_string(j));
        }
    }

    // Lemma: for 1 <= k <= 4, a in L(i^{k-1}(1+i)) maps W_k u {inf} into
    // S_{-a} under z -> 1/z - a; axis classes use W_{k+4}.
    for (int k = 1; k <= 4; ++k) {
        std::vector<GaussianInt> diag, axis;
        for (long nmul = 1; nmul <= 3; ++nmul)
            diag.push_back(GaussianInt(nmul, nmul).mul_i_pow(k - 1));
        for (auto [mm, ll] : {std::pair<long, long>{1, 1}, {2, 1}, {1, 2}})
            axis.push_back(GaussianInt(mm + ll, mm - ll).mul_i_pow(k - 1));
        for (bool is_diag : {true, false})
            for (const GaussianInt& a : is_diag ? diag : axis) {
                int wj = is_diag ? k : k + 4;
                size_t made = 0;
                while (made < 4) {
                    GaussianRational w = rng.gauss(30, 7);
                    FieldElement wf{w};
                    if (!in_region(wf, region_W(wj))) continue;
                    ++made;
                    FieldElement img = wf.inverse() - a;
                    res.tally("For1", in_S_w(img, -a), format_gaussian_int(a));
                }
                res.tally("For1-inf", in_S_w(FieldElement(GaussianRational(-a)), -a),
                          format_gaussian_int(a));
            }
    }
    return res;
}

SuiteResult suite_periodicity(uint64_t seed, size_t count) {
    if (count == 0) count = 320;
    SuiteResult res;
    res.name = "periodicity";

    std::vector<FieldElement> pop = quadratic_population(seed, count);
    size_t negation_done = 0;
    for (const FieldElement& raw : pop) {
        FieldElement ah = fold(raw, Algorithm::H);
        FieldElement at = fold(raw, Algorithm::T);
        std::string who = format_field_element(ah);

        bool n1 = in_N1(ah);
        auto [pure_h, len_h] = purely_periodic_oracle(ah, Algorithm::H);
        (void)len_h;
        res.tally("equivalence-H", n1 == pure_h,
                  who + " N1=" + std::to_string(n1) + " oracle=" + std::to_string(pure_h));

        bool n2 = in_N2(at);
        auto [pure_t, len_t] = purely_periodic_oracle(at, Algorithm::T);
        (void)len_t;
        res.tally("equivalence-T", n2 == pure_t,
                  format_field_element(at) + " N2=" + std::to_string(n2) +
                      " oracle=" + std::to_string(pure_t));

        // Necessity side of the Xtilde characterization.
        ExtPoint pair{ah, galois_conjugate(ah)};
        bool xt = in_Xtilde(pair);
        if (n1) res.tally("N1-implies-Xtilde", xt, who);
        if (pure_h) res.tally("pure-implies-Xtilde", xt, who);
        if (xt && !n1 && res.notes.size() < 8)
            res.notes.push_back("pair in Xtilde \\ N1: " + who);

        if (negation_done < 50) {
            ++negation_done;
            Expansion e1 = expand(ah, Algorithm::H);
            Expansion e2 = expand(-ah, Algorithm::H);
            bool same = e1.status == e2.status && e1.preperiod.size() == e2.preperiod.size() &&
                        e1.period.size() == e2.period.size();
            if (same) {
                for (size_t i = 0; i < e1.preperiod.size(); ++i)
                    same = same && e2.preperiod[i].value == -e1.preperiod[i].value;
                for (size_t i = 0; i < e1.period.size(); ++i)
                    same = same && e2.period[i].value == -e1.period[i].value;
            }
            res.tally("negation", same, who);
        }
    }

    // Rational behavior: H terminates with exact reconstruction; T is
    // finite or ends in the -1 tail.
    Rng rng(seed ^ 0xdeadbeefull);
    for (int it = 0; it < 200; ++it) {
        GaussianRational q = rng.gauss(9999, 9999);
        FieldElement alpha{q};
        auto [a0h, zh] = normalize_input(alpha, Algorithm::H);
        Expansion eh = expand(zh, Algorithm::H);
        eh.initial = a0h;
        bool okh = eh.status == ExpansionStatus::Finite;
        if (okh) okh = evaluate_finite(eh) == alpha;
        res.tally("rational-H", okh, format_gaussian_rational(q));

        auto [a0t, zt] = normalize_input(alpha, Algorithm::T);
        (void)a0t;
        Expansion et = expand(zt, Algorithm::T);
        res.tally("rational-T",
                  et.status == ExpansionStatus::Finite || et.status == ExpansionStatus::MinusOneTail,
                  format_gaussian_rational(q));
    }

    // Reconstruction and fixpoint checks on a slice of the population.
    size_t done = 0;
    for (const FieldElement& raw : pop) {
        if (done++ >= 60) break;
        FieldElement ah = fold(raw, Algorithm::H);
        Expansion e = expand(ah, Algorithm::H);
        if (e.status == ExpansionStatus::Periodic)
            res.tally("fixpoint", periodic_fixpoint_check(e, ah), format_field_element(ah));
    }
    return res;
}

SuiteResult suite_dual(uint64_t seed, size_t count) {
    if (count == 0) count = 320;
    SuiteResult res;
    res.name = "dual";
    size_t found = 0;
    for (const FieldElement& raw : quadratic_population(seed, count)) {
        FieldElement ah = fold(raw, Algorithm::H);
        auto [pure, len] = purely_periodic_oracle(ah, Algorithm::H);
        (void)len;
        if (!pure) continue;
        ++found;
        FieldElement conj_last = galois_conjugate(run_orbit(ah, Algorithm::H).states.back());
        res.tally("conjugate-modulus",
                  (ExactComplex(conj_last).norm2() - ExactComplex(Rational(1))).sign() > 0,
                  format_field_element(ah));
        res.tally("dual-reversal", verify_dual_reversal(ah), format_field_element(ah));
    }
    res.notes.push_back("purely periodic instances: " + std::to_string(found));
    return res;
}

SuiteResult suite_natext(uint64_t seed, size_t count) {
    if (count == 0) count = 10000;
    SuiteResult res;
    res.name = "natext";
    Rng rng(seed ^ 0x777ull);

    for (size_t it = 0; it < count; ++it) {
        GaussianRational z;
        int xi = 0;
        do {
            z = random_point_in_X(rng, 24);
            if (z.is_zero()) continue;
            xi = x_region_index(FieldElement(z));
        } while (xi == 0);

        bool use_inf = it % 20 == 19;
        ExtPoint p{FieldElement(z), std::nullopt};
        if (!use_inf) {
            GaussianRational w;
            int tries = 0;
            do {
                w = rng.gauss(3 * 24, 24);
                ++tries;
            } while ((w == z || !in_region(FieldElement(w), region_W(xi))) && tries < 400);
            if (w == z || !in_region(FieldElement(w), region_W(xi))) continue;
            p.w = FieldElement(w);
            res.tally("density", density_identity_check(z, w),
                      format_gaussian_rational(z) + " , " + format_gaussian_rational(w));
        }

        try {
            ExtStep step = ext_step(p, Algorithm::T);
            res.tally("domain-preservation", true);
            res.tally("For1-landing", in_S_w(*step.next.w, -step.quotient.value),
                      format_gaussian_rational(z));
        } catch (const error& e) {
            res.tally("domain-preservation", false,
                      format_gaussian_rational(z) + ": " + e.what());
        }
    }

    // Injectivity of the H extension on irrational pairs.
    std::vector<ExtPoint> pairs;
    std::vector<FieldElement> pop = quadratic_population(seed ^ 0x1234ull, 700);
    Rng wrng(seed ^ 0x4321ull);
    for (const FieldElement& raw : pop) {
        if (pairs.size() >= 500) break;
        FieldElement zq = fold(raw, Algorithm::H);
        int xi = 0;
        for (int i = 1; i <= 4 && !xi; ++i)
            if (in_region(zq, region_XC(i))) xi = i;
        for (int i = 5; i <= 8 && !xi; ++i)
            if (in_region(zq, region_X(i))) xi = i;
        if (!xi) continue;
        FieldElement w;
        bool got = false;
        for (int tries = 0; tries < 200 && !got; ++tries) {
            GaussianRational wx = wrng.gauss(36, 12);
            GaussianRational wy = wrng.gauss(6, 12);
            if (wy.is_zero()) continue;
            w = FieldElement(zq.field(), wx, wy);
            got = in_region(w, region_W(xi));
        }
        if (!got) continue;
        pairs.push_back({zq, w});
    }
    InjectivityReport inj = injectivity_sample(pairs, Algorithm::H);
    res.tally("injectivity", inj.collisions == 0,
              std::to_string(inj.collisions) + " collisions among " + std::to_string(inj.pairs));
    res.notes.push_back("injectivity pairs: " + std::to_string(inj.pairs));

    // Purely periodic pairs close up exactly under the pair map.
    size_t closures = 0;
    for (const FieldElement& raw : pop) {
        if (closures >= 25) break;
        FieldElement ah = fold(raw, Algorithm::H);
        Orbit orbit = run_orbit(ah, Algorithm::H);
        if (!orbit.expansion.purely_periodic()) continue;
        ++closures;
        ExtPoint p{ah, galois_conjugate(ah)};
        ExtPoint cur = p;
        size_t m = orbit.expansion.period.size();
        bool ok = true;
        for (size_t s = 0; s < m; ++s) cur = ext_step(cur, Algorithm::H).next;
        ok = cur == p;
        res.tally("pair-closure", ok, format_field_element(ah));
    }
    return res;
}

SuiteResult suite_sqrt_sweep() {
    SuiteResult res;
    res.name = "sqrt-sweep";
    for (long m = -6; m <= 6; ++m)
        for (long n = -6; n <= 6; ++n) {
            if ((m == 0 && n == 0) || gaussian_sqrt(m, n)) continue;
            std::string who = "sqrt(" + format_gaussian_int(GaussianInt(m, n)) + ")";

            FieldElement ah = sqrt_reduced(m, n, Algorithm::H);
            auto [pure_h, len_h] = purely_periodic_oracle(ah, Algorithm::H);
            (void)len_h;
            res.tally("pure-H", pure_h, who);

            FieldElement at = sqrt_reduced(m, n, Algorithm::T);
            auto [pure_t, len_t] = purely_periodic_oracle(at, Algorithm::T);
            (void)len_t;
            res.tally("pure-T", pure_t, who);

            // sqrt(m+ni) + a + bi avoids every K_j.
            FieldPtr f = QuadraticField::make(m, n);
            FieldElement root = FieldElement::sqrt_d(f);
            bool avoid = true;
            for (long a = -3; a <= 3 && avoid; ++a)
                for (long b = -3; b <= 3 && avoid; ++b) {
                    FieldElement z = root + GaussianInt(a, b);
                    for (int j = 1; j <= 4 && avoid; ++j) avoid = !in_region(z, region_K(j));
                }
            res.tally("K-avoidance", avoid, who);

            if (std::max(std::abs(m), std::abs(n)) >= 4) {
                GaussianInt a0 = floor_H(root);
                ExactComplex c(-root - a0);
                res.tally("conjugate-bound",
                          (c.norm2() - ExactComplex(Rational(8))).sign() > 0, who);
            }
        }
    return res;
}

std::vector<SuiteResult> run_suites(const std::string& name, uint64_t seed, size_t count) {
    std::vector<SuiteResult> out;
    auto want = [&](const char* s) { return name == "all" || name == s; };
    if (want("tilings")) out.push_back(suite_tilings(seed, count));
    if (want("lemmas")) out.push_back(suite_lemmas(seed, count));
    if (want("periodicity")) out.push_back(suite_periodicity(seed, count));
    if (want("dual")) out.push_back(suite_dual(seed, count));
    if (want("natext")) out.push_back(suite_natext(seed, count));
    if (want("sqrt-sweep")) out.push_back(suite_sqrt_sweep());
    if (out.empty()) throw error("unknown suite: " + name);
    return out;
}

} // namespace hcf
