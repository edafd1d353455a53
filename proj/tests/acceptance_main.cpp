// Acceptance gate: ten end-to-end checks with frozen golden values and
// timing budgets.  Prints one PASS/FAIL line per check and exits nonzero
// if any of them fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <lipsat/lipsat.hpp>

#include "support/fixtures.hpp"

using lipsat::Description;
using lipsat::Exponent;
using lipsat::NumericalSemigroup;
using lipsat::SaturationReport;

namespace {

struct Criterion {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok || !passed) return; // keep the first failure only
        passed = false;
        detail = what;
    }

    template <typename T>
    void require_eq(const std::vector<T>& got, const std::vector<T>& want,
                    const std::string& what) {
        require(got == want, what + " mismatch");
    }
};

template <typename F> double timed_ms(F&& work) {
    const auto start = std::chrono::steady_clock::now();
    work();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

int g_failures = 0;

void report(int id, const char* name, const Criterion& c, double ms, double limit_ms) {
    bool pass = c.passed;
    std::string detail = c.detail;
    if (pass && limit_ms > 0 && ms > limit_ms) {
        pass = false;
        detail = "time limit exceeded";
    }
    std::printf("%s %2d  %-52s", pass ? "PASS" : "FAIL", id, name);
    if (limit_ms > 0)
        std::printf("  [%9.2f ms / limit %.0f ms]", ms, limit_ms);
    else
        std::printf("  [%9.2f ms]", ms);
    if (!pass && !detail.empty()) std::printf("  -- %s", detail.c_str());
    std::printf("\n");
    if (!pass) ++g_failures;
}

std::vector<Exponent> set_minus(const std::vector<Exponent>& a,
                                const std::vector<Exponent>& b) {
    std::vector<Exponent> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Deterministic corpus used by checks 6 and 7: up to five generators, each
// at most 60, patched to overall gcd 1 before normalization.
std::vector<NumericalSemigroup> random_corpus(std::size_t count, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size_dist(2, 5);
    std::uniform_int_distribution<Exponent> value_dist(2, 60);
    std::vector<NumericalSemigroup> corpus;
    corpus.reserve(count);
    while (corpus.size() < count) {
        std::vector<Exponent> gens(static_cast<std::size_t>(size_dist(rng)));
        for (Exponent& g : gens) g = value_dist(rng);
        Exponent d = 0;
        for (Exponent g : gens) d = std::gcd(d, g);
        if (d > 1)
            for (Exponent v = 2; v <= 60; ++v)
                if (std::gcd(v, d) == 1) {
                    gens.push_back(v);
                    break;
                }
        corpus.push_back(lipsat::normalize_generators(gens));
    }
    return corpus;
}

} // namespace

int main() {
    // 1. <6, 25>: gap list, adjoined window, minimal new generators.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            const NumericalSemigroup s = lipsat::normalize_generators(fixtures::kGens_6_25);
            const lipsat::GapProfile gp = lipsat::gaps(s);
            c.require(gp.gaps.size() == 60, "gap count != 60");
            c.require_eq(gp.gaps, fixtures::kGaps_6_25, "gap set");
            const SaturationReport rep = lipsat::saturate(s);
            c.require(rep.r == fixtures::kR_6_25, "saturation index");
            c.require_eq(rep.new_exponents, fixtures::kNewExponents_6_25, "adjoined exponents");
            c.require_eq(set_minus(rep.algebra_generators_minimal, s.generators()),
                         fixtures::kNewGenerators_6_25, "minimal new generators");
        });
        report(1, "golden case <6,25>", c, ms, 10.0);
    }

    // 2. <9, 12, 22>: gap list, strata, final generators.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            const NumericalSemigroup s =
                lipsat::normalize_generators(fixtures::kGens_9_12_22);
            const lipsat::GapProfile gp = lipsat::gaps(s);
            c.require(gp.gaps.size() == 30, "gap count != 30");
            c.require_eq(gp.gaps, fixtures::kGaps_9_12_22, "gap set");
            const SaturationReport rep = lipsat::saturate(s);
            c.require(rep.r == fixtures::kR_9_12_22, "saturation index");
            c.require_eq(rep.strata.L, fixtures::kL_9_12_22, "strata");
            c.require_eq(rep.L_tilde_r, std::vector<Exponent>{23, 25, 26, 28, 29},
                         "stage-r window");
            c.require_eq(set_minus(rep.algebra_generators_minimal, s.generators()),
                         fixtures::kNewGenerators_9_12_22, "final generators");
        });
        report(2, "golden case <9,12,22>", c, ms, 0.0);
    }

    // 3. <18, 24, 39, 55>: strata and the one redundant adjoined exponent.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            const NumericalSemigroup s =
                lipsat::normalize_generators(fixtures::kGens_18_24_39_55);
            const SaturationReport rep = lipsat::saturate(s);
            c.require_eq(rep.strata.L, fixtures::kL_18_24_39_55, "strata");
            c.require_eq(rep.strata.L_trunc, fixtures::kLTrunc_18_24_39_55,
                         "truncated strata");
            c.require_eq(rep.L_tilde_r, fixtures::kLTildeR_18_24_39_55, "stage-r window");
            c.require_eq(rep.new_exponents, fixtures::kNewExponents_18_24_39_55,
                         "adjoined exponents");
            c.require_eq(set_minus(rep.new_exponents,
                                   set_minus(rep.algebra_generators_minimal, s.generators())),
                         std::vector<Exponent>{69}, "dropped adjoined exponent");
            c.require_eq(rep.algebra_generators_minimal, fixtures::kSaturatedGens_18_24_39_55,
                         "minimal generators");
        });
        report(3, "golden case <18,24,39,55>", c, ms, 0.0);
    }

    // 4. <40, 60, 70, 85, 103>: gcd profile, L_4, 34-element window, drop of 135.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            const NumericalSemigroup s =
                lipsat::normalize_generators(fixtures::kGens_40_60_70_85_103);
            c.require_eq(lipsat::partial_gcds(s), fixtures::kPartialGcds_40_60_70_85_103,
                         "gcd profile");
            const SaturationReport rep = lipsat::saturate(s);
            c.require(rep.r == fixtures::kR_40_60_70_85_103, "saturation index");
            c.require_eq(rep.strata.L[3], std::vector<Exponent>{90, 95}, "L_4");
            c.require(rep.L_tilde_r.size() == 34, "stage-r window size != 34");
            c.require_eq(rep.L_tilde_r, fixtures::kLTildeR_40_60_70_85_103, "stage-r window");
            c.require_eq(set_minus(rep.new_exponents,
                                   set_minus(rep.algebra_generators_minimal, s.generators())),
                         std::vector<Exponent>{135}, "dropped adjoined exponent");
            c.require_eq(set_minus(rep.algebra_generators_minimal, s.generators()),
                         fixtures::kNewGenerators_40_60_70_85_103, "final generators");
        });
        report(4, "golden case <40,60,70,85,103>", c, ms, 100.0);
    }

    // 5. <12, 18, 22, 29, 35, 49>: adjoined set and the drop of 38.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            const NumericalSemigroup s =
                lipsat::normalize_generators(fixtures::kGens_12_18_22_29_35_49);
            const SaturationReport rep = lipsat::saturate(s);
            c.require(rep.r == fixtures::kR_12_18_22_29_35_49, "saturation index");
            c.require_eq(rep.new_exponents, fixtures::kNewExponents_12_18_22_29_35_49,
                         "adjoined exponents");
            // of the adjoined exponents exactly 38 = 12 + 26 is redundant
            c.require_eq(set_minus(rep.new_exponents,
                                   set_minus(rep.algebra_generators_minimal, s.generators())),
                         std::vector<Exponent>{38}, "dropped adjoined exponent");
            c.require_eq(rep.algebra_generators_minimal,
                         fixtures::kSaturatedGens_12_18_22_29_35_49, "minimal generators");
        });
        report(5, "golden case <12,18,22,29,35,49>", c, ms, 0.0);
    }

    // 6 + 7. Random corpus: the three descriptions coincide and are closed
    // under addition up to the bound; saturating a saturation is a no-op.
    std::vector<NumericalSemigroup> saturated;
    {
        Criterion c;
        const double ms = timed_ms([&] {
            const std::vector<NumericalSemigroup> corpus = random_corpus(500, 20260815u);
            saturated.reserve(corpus.size());
            for (const NumericalSemigroup& s : corpus) {
                const SaturationReport rep = lipsat::saturate(s);
                saturated.push_back(rep.saturated_semigroup);
                const Exponent bound =
                    2 * rep.saturated_semigroup.conductor() + s.generators().back();
                const std::vector<Exponent> via_r =
                    lipsat::exponent_set(rep, Description::r_module, bound);
                const std::vector<Exponent> via_a =
                    lipsat::exponent_set(rep, Description::a_module, bound);
                const std::vector<Exponent> via_alg =
                    lipsat::exponent_set(rep, Description::algebra, bound);
                c.require(via_r == via_a && via_a == via_alg,
                          "descriptions disagree for <" +
                              lipsat::detail::join(s.generators(), ", ") + ">");
                std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
                for (Exponent v : via_alg) in[static_cast<std::size_t>(v)] = true;
                for (Exponent a : via_alg) {
                    if (!c.passed) break;
                    for (Exponent b : via_alg) {
                        if (b > a) break; // unordered pairs once
                        if (a + b > bound) break;
                        if (!in[static_cast<std::size_t>(a + b)]) {
                            c.require(false, "not closed under addition for <" +
                                                 lipsat::detail::join(s.generators(), ", ") +
                                                 ">");
                            break;
                        }
                    }
                }
            }
        });
        report(6, "description equivalence on 500 random semigroups", c, ms, 60000.0);
    }
    {
        Criterion c;
        const double ms = timed_ms([&] {
            for (const NumericalSemigroup& s : saturated) {
                const SaturationReport rep = lipsat::saturate(s);
                c.require(rep.is_saturated, "re-saturation changed <" +
                                                lipsat::detail::join(s.generators(), ", ") +
                                                ">");
            }
        });
        report(7, "saturation is idempotent on the same corpus", c, ms, 0.0);
    }

    // 8. Smallest generator 2: every <2, odd> is already saturated.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            for (Exponent odd = 3; odd <= 99; odd += 2) {
                const NumericalSemigroup s = lipsat::normalize_generators({2, odd});
                c.require(lipsat::is_lipschitz_saturated(s),
                          "<2, " + std::to_string(odd) + "> not reported saturated");
            }
        });
        report(8, "multiplicity-two semigroups are saturated", c, ms, 1000.0);
    }

    // 9. Witness suite: recurrence identities, product-rule factorizations,
    //    and the divisibility filter against its polynomial counterpart.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            for (Exponent alpha = 1; alpha <= 10 && c.passed; ++alpha)
                for (Exponent d = 1; d <= 10 && c.passed; ++d)
                    for (Exponent s = 0; s <= 8; ++s) {
                        const lipsat::MembershipWitness w =
                            lipsat::recurrence_witness(alpha, d, s);
                        if (!w.verify()) {
                            c.require(false, "recurrence witness failed at alpha=" +
                                                 std::to_string(alpha) + " d=" +
                                                 std::to_string(d) + " s=" +
                                                 std::to_string(s));
                            break;
                        }
                    }

            const std::vector<std::vector<Exponent>> families = {
                fixtures::kGens_6_25, fixtures::kGens_9_12_22, fixtures::kGens_18_24_39_55,
                fixtures::kGens_40_60_70_85_103, fixtures::kGens_12_18_22_29_35_49};
            for (const std::vector<Exponent>& gens : families) {
                if (!c.passed) break;
                const NumericalSemigroup s = lipsat::normalize_generators(gens);
                for (Exponent l = 0; l <= s.conductor(); ++l) {
                    if (!s.contains(l)) continue;
                    if (!lipsat::leibniz_witness(s, l).verify()) {
                        c.require(false, "product-rule witness failed at " +
                                             std::to_string(l) + " in <" +
                                             lipsat::detail::join(gens, ", ") + ">");
                        break;
                    }
                }
            }

            for (Exponent d = 1; d <= 30 && c.passed; ++d)
                for (Exponent l = 0; l <= 500; ++l) {
                    // throws on internal disagreement of the two methods
                    const bool divides = lipsat::cyclotomic_filter_check(d, l);
                    if (divides != (l % d == 0)) {
                        c.require(false, "filter check wrong at d=" + std::to_string(d) +
                                             " l=" + std::to_string(l));
                        break;
                    }
                }
        });
        report(9, "witness suite (recurrence, product rule, filter)", c, ms, 30000.0);
    }

    // 10. Two-generator closed forms for the largest gap and the gap count.
    {
        Criterion c;
        const double ms = timed_ms([&] {
            std::mt19937 rng(6251u);
            std::uniform_int_distribution<Exponent> dist(2, 100);
            int done = 0;
            while (done < 200) {
                const Exponent a = dist(rng);
                const Exponent b = dist(rng);
                if (a == b || std::gcd(a, b) != 1) continue;
                ++done;
                const NumericalSemigroup s = lipsat::normalize_generators({a, b});
                const lipsat::GapProfile gp = lipsat::gaps(s);
                if (gp.frobenius != a * b - a - b ||
                    gp.count != (a - 1) * (b - 1) / 2) {
                    c.require(false, "closed form failed for <" + std::to_string(a) +
                                         ", " + std::to_string(b) + ">");
                    break;
                }
            }
        });
        report(10, "two-generator gap count and largest gap", c, ms, 0.0);
    }

    std::printf("acceptance: %d/10 passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
