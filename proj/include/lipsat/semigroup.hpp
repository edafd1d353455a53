#pragma once

/// Numerical semigroups <g1, ..., gn>: normalization of generating sets,
/// membership tables, gaps, Frobenius number / conductor, partial gcds and
/// minimal generating sets.  All higher layers (gap strata, saturation,
/// witnesses) sit on top of this file.

#include <algorithm>
#include <numeric>
#include <vector>

#include "lipsat/error.hpp"
#include "lipsat/types.hpp"

namespace lipsat {

namespace detail {

// Hard cap on membership-table length.  Anything larger cannot be allocated
// sensibly and signals an input far outside the intended range.
inline constexpr Exponent kMaxTableSize = Exponent(1) << 31;

// Coin-problem DP: table[v] == true iff v is a nonnegative integer
// combination of `gens`, for v in [0, size).
inline std::vector<bool> representable_table(const std::vector<Exponent>& gens, Exponent size) {
    if (size > kMaxTableSize)
        throw error(errc::overflow, "membership table would exceed the supported size", size);
    std::vector<bool> table(static_cast<std::size_t>(size), false);
    table[0] = true;
    for (Exponent g : gens)
        for (Exponent v = g; v < size; ++v)
            if (table[static_cast<std::size_t>(v - g)])
                table[static_cast<std::size_t>(v)] = true;
    return table;
}

} // namespace detail

/// A numerical semigroup, stored as its normalized generators plus a
/// membership table covering [0, conductor + max generator].  Construct via
/// `normalize_generators`; the class itself performs no input checking.
class NumericalSemigroup {
public:
    const std::vector<Exponent>& generators() const noexcept { return generators_; }

    /// Largest integer not in the semigroup; -1 for the trivial semigroup <1>
    /// (every nonnegative integer is a member).
    Exponent frobenius() const noexcept { return frobenius_; }

    /// Smallest c with [c, infinity) contained in the semigroup.
    Exponent conductor() const noexcept { return frobenius_ + 1; }

    bool trivial() const noexcept { return generators_.size() == 1 && generators_[0] == 1; }

    bool contains(Exponent value) const noexcept {
        if (value < 0) return false;
        if (value >= conductor()) return true;
        return members_[static_cast<std::size_t>(value)];
    }

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
        return a.generators_ == b.generators_;
    }

private:
    friend NumericalSemigroup normalize_generators(std::vector<Exponent> raw);

    NumericalSemigroup(std::vector<Exponent> gens, std::vector<bool> members, Exponent frob)
        : generators_(std::move(gens)), members_(std::move(members)), frobenius_(frob) {}

    std::vector<Exponent> generators_;
    std::vector<bool> members_;
    Exponent frobenius_;
};

/// Validates and normalizes a raw generator list (sort, dedup, drop entries
/// divisible by a smaller kept entry), checks gcd = 1, and builds the
/// membership table.  Throws `error` with code empty_input,
/// invalid_generator, non_coprime (detail = gcd) or overflow.
inline NumericalSemigroup normalize_generators(std::vector<Exponent> raw) {
    if (raw.empty())
        throw error(errc::empty_input, "no generators supplied");
    for (Exponent g : raw)
        if (g <= 0)
            throw error(errc::invalid_generator,
                        "generators must be positive (got " + std::to_string(g) + ")", g);

    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

    // Reject before any table arithmetic can wrap: gn^2 must fit.
    checked_mul(raw.back(), raw.back());

    // Keep an entry only if no smaller kept entry divides it.
    std::vector<Exponent> gens;
    for (Exponent g : raw) {
        bool redundant = std::any_of(gens.begin(), gens.end(),
                                     [g](Exponent k) { return g % k == 0; });
        if (!redundant) gens.push_back(g);
    }

    Exponent d = 0;
    for (Exponent g : gens) d = std::gcd(d, g);
    if (d != 1)
        throw error(errc::non_coprime,
                    "generators have common divisor " + std::to_string(d), d);

    if (gens[0] == 1) {
        // Trivial semigroup <1>: every nonnegative integer is a member.
        return NumericalSemigroup{{1}, {true, true}, -1};
    }

    // The Frobenius number is found by growing the DP table until the final
    // all-member stretch of length g1 is visible *after* the last gap; that
    // stretch proves nothing beyond it is missing (adding g1 repeatedly
    // covers every larger value), so the last gap seen is the Frobenius.
    const Exponent g1 = gens.front();
    const Exponent gn = gens.back();
    Exponent size = checked_add(checked_mul(g1, gn), checked_add(gn, 1));
    for (;;) {
        std::vector<bool> table = detail::representable_table(gens, size);
        Exponent frob = -1;
        for (Exponent v = size - 1; v >= 0; --v) {
            if (!table[static_cast<std::size_t>(v)]) { frob = v; break; }
        }
        // frob >= 1 always here: g1 >= 2, so 1 is a gap.
        if (checked_add(frob, g1) < size) {
            table.resize(static_cast<std::size_t>(checked_add(frob + 1, gn)) + 1, true);
            return NumericalSemigroup{std::move(gens), std::move(table), frob};
        }
        size = checked_mul(size, 2); // stabilization not visible yet; rare
    }
}

inline bool is_member(const NumericalSemigroup& s, Exponent value) {
    return s.contains(value);
}

struct GapProfile {
    std::vector<Exponent> gaps; // ascending
    Exponent frobenius = -1;
    Exponent count = 0;
};

inline GapProfile gaps(const NumericalSemigroup& s) {
    GapProfile p;
    p.frobenius = s.frobenius();
    for (Exponent v = 1; v < s.conductor(); ++v)
        if (!s.contains(v)) p.gaps.push_back(v);
    p.count = static_cast<Exponent>(p.gaps.size());
    return p;
}

/// d_j = gcd(g1, ..., gj) for j = 1..n.  Weakly decreasing, d_n = 1.
inline std::vector<Exponent> partial_gcds(const NumericalSemigroup& s) {
    std::vector<Exponent> ds;
    Exponent d = 0;
    for (Exponent g : s.generators()) {
        d = std::gcd(d, g);
        ds.push_back(d);
    }
    return ds;
}

/// Smallest subset of `exps` generating the same additive monoid: an element
/// is kept iff it is not a sum of two nonzero monoid elements.  Input need
/// not have gcd 1.  Throws on empty or nonpositive input.
inline std::vector<Exponent> minimal_generators(std::vector<Exponent> exps) {
    if (exps.empty())
        throw error(errc::empty_input, "no exponents supplied");
    for (Exponent e : exps)
        if (e <= 0)
            throw error(errc::invalid_generator,
                        "exponents must be positive (got " + std::to_string(e) + ")", e);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

    std::vector<bool> monoid = detail::representable_table(exps, checked_add(exps.back(), 1));
    std::vector<Exponent> minimal;
    for (Exponent e : exps) {
        bool decomposable = false;
        for (Exponent a = 1; a <= e / 2 && !decomposable; ++a)
            if (monoid[static_cast<std::size_t>(a)] && monoid[static_cast<std::size_t>(e - a)])
                decomposable = true;
        if (!decomposable) minimal.push_back(e);
    }
    return minimal;
}

} // namespace lipsat
