#pragma once

/// Membership certificates.  Each witness is an explicit polynomial
/// identity   target = sum_i coefficient[i] * basis[i]   that can be
/// re-verified by exact expansion, independently of the table-based
/// computations that suggested it.  Two families are produced:
///
///  * recurrence witnesses express x^(a+s*d) - y^(a+s*d) over the basis
///    {x^a - y^a, x^(a+d) - y^(a+d)} via the two-term recurrence with
///    multiplier coefficients -x^d*y^d and x^d + y^d;
///  * difference witnesses ("Leibniz" style) expand t1^l - t2^l over the
///    generator differences t1^g - t2^g using a product rule, following a
///    deterministic factorization of l in the semigroup.
///
/// A third, structurally unrelated check reduces X^l - 1 modulo cyclotomic
/// polynomials and compares with plain divisibility.

#include <algorithm>
#include <string>
#include <vector>

#include "lipsat/bivariate_polynomial.hpp"
#include "lipsat/error.hpp"
#include "lipsat/saturation.hpp"
#include "lipsat/semigroup.hpp"
#include "lipsat/types.hpp"
#include "lipsat/univariate_polynomial.hpp"

namespace lipsat {

struct MembershipWitness {
    BivariatePolynomial target;
    std::vector<BivariatePolynomial> basis;
    std::vector<BivariatePolynomial> coefficients;
    std::string var1 = "x";
    std::string var2 = "y";

    /// Re-checks the identity by expanding everything; does not trust any
    /// intermediate state of the construction.
    bool verify() const {
        if (basis.size() != coefficients.size()) return false;
        BivariatePolynomial acc;
        for (std::size_t i = 0; i < basis.size(); ++i)
            acc += coefficients[i] * basis[i];
        return acc == target;
    }

    /// Deterministic plain-text rendering (one line per component).
    std::string to_text() const {
        std::string out = "target = " + target.str(var1, var2) + "\n";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            out += "basis[" + std::to_string(i) + "] = " + basis[i].str(var1, var2) + "\n";
            out += "coefficient[" + std::to_string(i) + "] = " +
                   coefficients[i].str(var1, var2) + "\n";
        }
        return out;
    }
};

namespace detail {

inline BivariatePolynomial power_difference(Exponent e) {
    return BivariatePolynomial::monomial(e, 0) - BivariatePolynomial::monomial(0, e);
}

} // namespace detail

/// Witness for x^(a+s*d) - y^(a+s*d) over {x^a - y^a, x^(a+d) - y^(a+d)}.
/// s = 0 and s = 1 give identity witnesses; larger s iterates the
/// recurrence  f_k = (x^d + y^d) f_{k-1} - x^d y^d f_{k-2}.
inline MembershipWitness recurrence_witness(Exponent alpha, Exponent d, Exponent s) {
    if (alpha < 1) throw error(errc::invalid_argument, "alpha must be >= 1", alpha);
    if (d < 1) throw error(errc::invalid_argument, "d must be >= 1", d);
    if (s < 0) throw error(errc::invalid_argument, "s must be >= 0", s);

    const BivariatePolynomial sum =
        BivariatePolynomial::monomial(d, 0) + BivariatePolynomial::monomial(0, d);
    const BivariatePolynomial neg_prod = -BivariatePolynomial::monomial(d, d);

    // (P_k, Q_k) with f_k = P_k f_0 + Q_k f_1.
    BivariatePolynomial p_prev = BivariatePolynomial::constant(1), q_prev; // k = 0
    BivariatePolynomial p_cur, q_cur = BivariatePolynomial::constant(1);   // k = 1
    if (s == 0) {
        p_cur = p_prev;
        q_cur = q_prev;
    }
    for (Exponent k = 2; k <= s; ++k) {
        BivariatePolynomial p_next = sum * p_cur + neg_prod * p_prev;
        BivariatePolynomial q_next = sum * q_cur + neg_prod * q_prev;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
    }

    MembershipWitness w;
    w.target = detail::power_difference(checked_add(alpha, checked_mul(s, d)));
    w.basis = {detail::power_difference(alpha), detail::power_difference(checked_add(alpha, d))};
    w.coefficients = {std::move(p_cur), std::move(q_cur)};
    return w;
}

/// Deterministic factorization l = sum_i m_i * g_i of a member: from the
/// largest generator downward, take the largest multiple whose remainder is
/// still representable by the smaller generators.  Throws not_a_member if l
/// is not in the semigroup.
inline std::vector<Exponent> factorize_member(const NumericalSemigroup& s, Exponent l) {
    if (!s.contains(l))
        throw error(errc::not_a_member,
                    std::to_string(l) + " is not in the semigroup", l);
    const std::vector<Exponent>& g = s.generators();
    const std::size_t n = g.size();

    // prefix[i][v]: v representable by g_1..g_{i+1}
    std::vector<std::vector<bool>> prefix;
    prefix.reserve(n);
    std::vector<Exponent> cur;
    for (std::size_t i = 0; i < n; ++i) {
        cur.push_back(g[i]);
        prefix.push_back(detail::representable_table(cur, checked_add(l, 1)));
    }

    std::vector<Exponent> mult(n, 0);
    Exponent rem = l;
    for (std::size_t i = n; i-- > 1;) {
        for (Exponent k = rem / g[i]; k >= 0; --k) {
            if (prefix[i - 1][static_cast<std::size_t>(rem - k * g[i])]) {
                mult[i] = k;
                rem -= k * g[i];
                break;
            }
        }
    }
    // Remainder lies in <g_1> by the loop invariant.
    mult[0] = rem / g[0];
    return mult;
}

/// Product-rule witness for t1^l - t2^l over the generator differences
/// t1^g_i - t2^g_i, built by the update rule
///   D(t^(u+g)) = t1^u * D(t^g) + t2^g * D(t^u)
/// along the factorization of l (copies of smaller generators first).
/// basis[i] / coefficients[i] follow generator order; generators that do
/// not occur in the factorization are omitted.
inline MembershipWitness leibniz_witness(const NumericalSemigroup& s, Exponent l) {
    const std::vector<Exponent> mult = factorize_member(s, l); // throws if not a member
    const std::vector<Exponent>& g = s.generators();

    std::vector<BivariatePolynomial> coeff(g.size());
    Exponent partial = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (Exponent copy = 0; copy < mult[i]; ++copy) {
            const BivariatePolynomial shift = BivariatePolynomial::monomial(0, g[i]);
            for (auto& c : coeff) c = shift * c;
            coeff[i] += BivariatePolynomial::monomial(partial, 0);
            partial = checked_add(partial, g[i]);
        }
    }

    MembershipWitness w;
    w.var1 = "t1";
    w.var2 = "t2";
    w.target = detail::power_difference(l);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        w.basis.push_back(detail::power_difference(g[i]));
        w.coefficients.push_back(std::move(coeff[i]));
    }
    return w;
}

/// Answers "does d divide l" twice: by integer arithmetic and by testing
/// whether the d-th cyclotomic polynomial divides X^l - 1.  The two routes
/// must agree; a mismatch throws internal_inconsistency.
inline bool cyclotomic_filter_check(Exponent d, Exponent l) {
    if (d < 1) throw error(errc::invalid_argument, "modulus must be >= 1", d);
    if (l < 0) throw error(errc::invalid_argument, "exponent must be >= 0", l);

    const bool divides = (l % d == 0);
    const auto dm = divmod(UnivariatePolynomial::x_power_minus_one(l), cyclotomic(d));
    const bool vanishes = dm.remainder.is_zero();
    if (divides != vanishes)
        throw error(errc::internal_inconsistency,
                    "divisibility and cyclotomic reduction disagree for d = " +
                        std::to_string(d) + ", l = " + std::to_string(l));
    return divides;
}

struct CheckResult {
    bool passed = true;
    long long checked = 0;
    std::string counterexample; // empty when passed
};

/// Result of re-deriving a saturation report's claims by independent means.
struct ValidationSummary {
    Exponent bound = 0;
    CheckResult membership_witnesses; // product-rule witnesses for sampled members
    CheckResult filter_checks;        // saturation exponents vs the cyclotomic filter
    CheckResult stratum_witnesses;    // recurrence witnesses for every stratum element

    bool all_passed() const {
        return membership_witnesses.passed && filter_checks.passed &&
               stratum_witnesses.passed;
    }
};

/// Cross-checks a saturation report:
///  1. product-rule witnesses for an evenly spaced sample of members (up to
///     `sample_size` of them, deterministic) are built and re-verified;
///  2. every truncated exponent of the saturated semigroup that is not in
///     the base semigroup is pushed through the cyclotomic filter at every
///     applicable stage (it must pass, and the two filter routes must agree);
///  3. every stratum element gets its recurrence witness re-verified.
inline ValidationSummary cross_validate(const NumericalSemigroup& s,
                                        const SaturationReport& rep, Exponent bound,
                                        int sample_size = 32) {
    if (bound < 0) throw error(errc::invalid_argument, "bound must be >= 0", bound);
    if (sample_size < 1) throw error(errc::invalid_argument, "sample size must be >= 1");
    ValidationSummary out;
    out.bound = bound;

    // 1. Membership witnesses on a deterministic sample.
    {
        std::vector<Exponent> members;
        for (Exponent v = 0; v <= bound; ++v)
            if (s.contains(v)) members.push_back(v);
        std::vector<Exponent> sample;
        if (!members.empty()) {
            const std::size_t n = members.size();
            const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(sample_size), n);
            for (std::size_t k = 0; k < want; ++k)
                sample.push_back(members[k * (n - 1) / (want > 1 ? want - 1 : 1)]);
            sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
        }
        for (Exponent l : sample) {
            MembershipWitness w = leibniz_witness(s, l);
            ++out.membership_witnesses.checked;
            if (!w.verify() || !(w.target == detail::power_difference(l))) {
                out.membership_witnesses.passed = false;
                out.membership_witnesses.counterexample = "member " + std::to_string(l);
                break;
            }
        }
    }

    // 2. Cyclotomic filter on the adjoined part of the saturation.
    {
        const NumericalSemigroup& sat = rep.saturated_semigroup;
        const std::vector<Exponent>& g = s.generators();
        const std::vector<Exponent> ds = partial_gcds(s);
        for (Exponent v = 0; v <= bound && out.filter_checks.passed; ++v) {
            if (!sat.contains(v) || s.contains(v)) continue;
            for (std::size_t j = 1; j < g.size(); ++j) {
                if (v >= g[j]) continue; // stage imposes no condition
                ++out.filter_checks.checked;
                if (!cyclotomic_filter_check(ds[j - 1], v)) {
                    out.filter_checks.passed = false;
                    out.filter_checks.counterexample =
                        "exponent " + std::to_string(v) + " fails stage j = " +
                        std::to_string(j) + " (d = " + std::to_string(ds[j - 1]) + ")";
                    break;
                }
            }
        }
    }

    // 3. Recurrence witnesses for all stratum elements.
    {
        const std::vector<Exponent>& g = s.generators();
        const std::vector<Exponent> ds = partial_gcds(s);
        for (std::size_t j = 1; j <= rep.strata.L.size() && out.stratum_witnesses.passed; ++j) {
            for (Exponent l : rep.strata.L[j - 1]) {
                const Exponent step = (l - g[j - 1]) / ds[j - 1];
                MembershipWitness w = recurrence_witness(g[j - 1], ds[j - 1], step);
                ++out.stratum_witnesses.checked;
                if (!w.verify()) {
                    out.stratum_witnesses.passed = false;
                    out.stratum_witnesses.counterexample =
                        "stratum element " + std::to_string(l) + " (j = " +
                        std::to_string(j) + ")";
                    break;
                }
            }
        }
    }

    return out;
}

} // namespace lipsat
