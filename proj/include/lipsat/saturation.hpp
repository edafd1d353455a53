#pragma once

/// Gap strata and Lipschitz saturation of a monomial curve algebra
/// A = R[[t^g1, ..., t^gn]] (or its polynomial / analytic analogue).  The
/// saturation A*_{B,R} is again a monomial algebra; this file computes the
/// exponents that have to be adjoined, the saturated semigroup, and the
/// three equivalent descriptions of the saturation's exponent set.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lipsat/error.hpp"
#include "lipsat/semigroup.hpp"
#include "lipsat/types.hpp"

namespace lipsat {

/// Smallest r >= 2 with gcd(g1, ..., gr) = 1.  Exists for every nontrivial
/// normalized semigroup; throws trivial_semigroup for <1> (there is no
/// second generator to reach).
inline int saturation_index(const NumericalSemigroup& s) {
    if (s.trivial())
        throw error(errc::trivial_semigroup,
                    "saturation index is undefined for the trivial semigroup <1>");
    const std::vector<Exponent> ds = partial_gcds(s);
    for (std::size_t j = 1; j < ds.size(); ++j)
        if (ds[j] == 1) return static_cast<int>(j) + 1;
    throw error(errc::internal_inconsistency, "partial gcds never reached 1");
}

/// The gap strata of a semigroup with generators g1 < ... < gn:
///   L[j-1]      = L_j      = gaps l with g_j < l < g_{j+1} and d_j | l
///   L_trunc[j-1]            = the part of L_j with l <= g_j + g1 - 1
///   L_tilde[m-2] = Lt(m)   = gaps l with g_m + 1 <= l <= g_m + g1 - 1
/// for j in 1..n-1 and m in 2..n.  L_1 is always empty (every multiple of
/// d_1 = g1 is a member) but is kept so L[j-1] lines up with L_j.
struct GapStrata {
    std::vector<std::vector<Exponent>> L;
    std::vector<std::vector<Exponent>> L_trunc;
    std::vector<std::vector<Exponent>> L_tilde;
};

inline GapStrata compute_strata(const NumericalSemigroup& s) {
    GapStrata strata;
    const std::vector<Exponent>& g = s.generators();
    const std::size_t n = g.size();
    if (n < 2) return strata; // trivial semigroup: no strata

    const std::vector<Exponent> ds = partial_gcds(s);
    for (std::size_t j = 1; j < n; ++j) {
        std::vector<Exponent> stratum, truncated;
        const Exponent window_end = checked_add(g[j - 1], g.front()) - 1;
        // Walk the multiples of d_j strictly between g_j and g_{j+1}.
        Exponent first = (g[j - 1] / ds[j - 1] + 1) * ds[j - 1];
        for (Exponent l = first; l < g[j]; l += ds[j - 1]) {
            if (s.contains(l)) continue;
            stratum.push_back(l);
            if (l <= window_end) truncated.push_back(l);
        }
        strata.L.push_back(std::move(stratum));
        strata.L_trunc.push_back(std::move(truncated));
    }
    for (std::size_t m = 2; m <= n; ++m) {
        std::vector<Exponent> window;
        const Exponent lo = checked_add(g[m - 1], 1);
        const Exponent hi = checked_add(g[m - 1], g.front()) - 1;
        for (Exponent l = lo; l <= hi; ++l)
            if (!s.contains(l)) window.push_back(l);
        strata.L_tilde.push_back(std::move(window));
    }
    return strata;
}

/// True iff t^l survives every divisibility stage of the saturation filter:
/// for each j in 1..n-1 with l < g_{j+1}, d_j must divide l.  Exponents at
/// or above g_n face no condition.
inline bool gap_filter(const NumericalSemigroup& s, Exponent l) {
    const std::vector<Exponent>& g = s.generators();
    const std::vector<Exponent> ds = partial_gcds(s);
    for (std::size_t j = 1; j < g.size(); ++j)
        if (l < g[j] && l % ds[j - 1] != 0) return false;
    return true;
}

/// Everything the saturation computation produces in one pass.
struct SaturationReport {
    NumericalSemigroup base;
    int r = 1;                   // saturation index used (1 only for <1>)
    GapStrata strata;
    std::vector<Exponent> r_module_gaps; // union of L_j, j < r
    std::vector<Exponent> a_module_gaps; // union of L_trunc_j, j < r
    std::vector<Exponent> L_tilde_r;     // Lt(r)
    std::vector<Exponent> new_exponents; // a_module_gaps union Lt(r); empty iff saturated
    std::vector<Exponent> algebra_generators_full;    // generators union new_exponents
    std::vector<Exponent> algebra_generators_minimal; // minimal subset of the above
    NumericalSemigroup saturated_semigroup;
    bool is_saturated = true;
};

namespace detail {

inline std::vector<Exponent> sorted_union(std::vector<Exponent> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace detail

/// Computes the saturation of the monomial algebra attached to `s`.  The
/// optional `r_override` forces a larger saturation index r' >= r (the
/// result is unchanged, only the strata bookkeeping moves); values below the
/// intrinsic index or outside 2..n are rejected with invalid_r_override.
/// The trivial semigroup <1> yields a degenerate already-saturated report.
inline SaturationReport saturate(const NumericalSemigroup& s,
                                 std::optional<int> r_override = std::nullopt) {
    if (s.trivial()) {
        if (r_override)
            throw error(errc::invalid_r_override,
                        "the trivial semigroup admits no saturation index override",
                        *r_override);
        return SaturationReport{s, 1, {}, {}, {}, {}, {}, {1}, {1}, s, true};
    }

    const int intrinsic = saturation_index(s);
    const int n = static_cast<int>(s.generators().size());
    int r = intrinsic;
    if (r_override) {
        if (*r_override < intrinsic || *r_override > n)
            throw error(errc::invalid_r_override,
                        "saturation index override " + std::to_string(*r_override) +
                            " is outside [" + std::to_string(intrinsic) + ", " +
                            std::to_string(n) + "]",
                        *r_override);
        r = *r_override;
    }

    SaturationReport rep{s, r, compute_strata(s),
                         {}, {}, {}, {}, {}, {}, s, true};
    for (int j = 1; j < r; ++j) {
        const auto& full = rep.strata.L[static_cast<std::size_t>(j - 1)];
        const auto& trunc = rep.strata.L_trunc[static_cast<std::size_t>(j - 1)];
        rep.r_module_gaps.insert(rep.r_module_gaps.end(), full.begin(), full.end());
        rep.a_module_gaps.insert(rep.a_module_gaps.end(), trunc.begin(), trunc.end());
    }
    rep.r_module_gaps = detail::sorted_union(std::move(rep.r_module_gaps));
    rep.a_module_gaps = detail::sorted_union(std::move(rep.a_module_gaps));
    rep.L_tilde_r = rep.strata.L_tilde[static_cast<std::size_t>(r - 2)];

    rep.new_exponents = rep.a_module_gaps;
    rep.new_exponents.insert(rep.new_exponents.end(), rep.L_tilde_r.begin(),
                             rep.L_tilde_r.end());
    rep.new_exponents = detail::sorted_union(std::move(rep.new_exponents));

    rep.algebra_generators_full = s.generators();
    rep.algebra_generators_full.insert(rep.algebra_generators_full.end(),
                                       rep.new_exponents.begin(),
                                       rep.new_exponents.end());
    rep.algebra_generators_full = detail::sorted_union(std::move(rep.algebra_generators_full));
    rep.algebra_generators_minimal = minimal_generators(rep.algebra_generators_full);
    rep.saturated_semigroup = normalize_generators(rep.algebra_generators_minimal);
    rep.is_saturated = rep.new_exponents.empty();
    return rep;
}

/// True iff the monomial algebra of `s` is already Lipschitz saturated,
/// without building the full report.
inline bool is_lipschitz_saturated(const NumericalSemigroup& s) {
    if (s.trivial()) return true;
    const int r = saturation_index(s);
    const GapStrata strata = compute_strata(s);
    for (int j = 1; j < r; ++j)
        if (!strata.L_trunc[static_cast<std::size_t>(j - 1)].empty()) return false;
    return strata.L_tilde[static_cast<std::size_t>(r - 2)].empty();
}

/// Which of the three equivalent presentations of the saturation's exponent
/// set to materialize.
enum class Description {
    r_module, // semigroup members, plus the L_j strata (j < r), plus members + Lt(r)
    a_module, // semigroup members, plus members + truncated strata, plus members + Lt(r)
    algebra,  // the monoid generated by the generators and the new exponents
};

/// All exponents of the saturated algebra in [0, bound], materialized from
/// one of the three descriptions.  They agree for every input; the
/// independent constructions exist so that agreement can be *checked*.
/// Throws bound_too_small if the bound does not reach the saturated
/// conductor (truncation would hide the eventual structure).
inline std::vector<Exponent> exponent_set(const SaturationReport& rep, Description desc,
                                          Exponent bound) {
    if (bound < rep.saturated_semigroup.conductor())
        throw error(errc::bound_too_small,
                    "bound " + std::to_string(bound) +
                        " is below the saturated conductor " +
                        std::to_string(rep.saturated_semigroup.conductor()),
                    bound);
    if (checked_add(bound, 1) > detail::kMaxTableSize)
        throw error(errc::overflow, "bound too large to materialize", bound);

    const NumericalSemigroup& base = rep.base;
    std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
    auto add_member_translates = [&](Exponent l) {
        // marks l + (members of base) up to the bound
        for (Exponent v = 0; v + l <= bound; ++v)
            if (base.contains(v)) in[static_cast<std::size_t>(v + l)] = true;
    };

    switch (desc) {
    case Description::r_module:
        for (Exponent v = 0; v <= bound; ++v)
            if (base.contains(v)) in[static_cast<std::size_t>(v)] = true;
        for (Exponent l : rep.r_module_gaps)
            if (l <= bound) in[static_cast<std::size_t>(l)] = true;
        for (Exponent l : rep.L_tilde_r) add_member_translates(l);
        break;
    case Description::a_module:
        for (Exponent v = 0; v <= bound; ++v)
            if (base.contains(v)) in[static_cast<std::size_t>(v)] = true;
        for (Exponent l : rep.a_module_gaps) add_member_translates(l);
        for (Exponent l : rep.L_tilde_r) add_member_translates(l);
        break;
    case Description::algebra: {
        std::vector<bool> monoid =
            detail::representable_table(rep.algebra_generators_full, checked_add(bound, 1));
        in = std::move(monoid);
        break;
    }
    }

    std::vector<Exponent> out;
    for (Exponent v = 0; v <= bound; ++v)
        if (in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

/// Base rings the CLI can describe: an integral domain of a given
/// characteristic, or a reduced ring with a list of residue-field
/// characteristics.
enum class RingKind { domain, reduced };

enum class AlgebraKind { polynomial, power_series, analytic, other };

struct RingDescriptor {
    RingKind kind = RingKind::domain;
    std::vector<Exponent> characteristics; // each 0 or a prime
    AlgebraKind algebra = AlgebraKind::other;
};

/// Three-valued outcome for hypothesis checks that are not always decidable
/// from the CLI-level description of R.
enum class Tristate { yes, no, unknown };

struct HypothesisReport {
    Tristate gamma1_nice = Tristate::unknown;  // no listed characteristic divides g1
    Tristate gamma_b_closed = Tristate::unknown; // the ambient algebra B is closed enough
    bool noetherian_assumed = true;            // taken on faith from the descriptor
};

namespace detail {

inline bool is_prime(Exponent p) {
    if (p < 2) return false;
    for (Exponent q = 2; q <= p / q; ++q)
        if (p % q == 0) return false;
    return true;
}

} // namespace detail

/// Checks the standing hypotheses of the saturation description against a
/// ring descriptor.  Characteristics must each be 0 or a prime (else
/// invalid_characteristic); a domain carries exactly one characteristic.
inline HypothesisReport check_hypotheses(const NumericalSemigroup& s,
                                         const RingDescriptor& ring) {
    for (Exponent c : ring.characteristics)
        if (c != 0 && !detail::is_prime(c))
            throw error(errc::invalid_characteristic,
                        "characteristic " + std::to_string(c) + " is neither 0 nor prime", c);
    if (ring.kind == RingKind::domain && ring.characteristics.size() != 1)
        throw error(errc::invalid_characteristic,
                    "a domain has exactly one characteristic (got " +
                        std::to_string(ring.characteristics.size()) + ")",
                    static_cast<long long>(ring.characteristics.size()));

    HypothesisReport rep;
    const Exponent g1 = s.generators().front();
    bool bad = std::any_of(ring.characteristics.begin(), ring.characteristics.end(),
                           [g1](Exponent c) { return c != 0 && g1 % c == 0; });
    rep.gamma1_nice = bad ? Tristate::no : Tristate::yes;

    switch (ring.algebra) {
    case AlgebraKind::polynomial:
    case AlgebraKind::power_series:
    case AlgebraKind::analytic:
        rep.gamma_b_closed = Tristate::yes;
        break;
    case AlgebraKind::other:
        rep.gamma_b_closed = Tristate::unknown;
        break;
    }
    rep.noetherian_assumed = true;
    return rep;
}

} // namespace lipsat
