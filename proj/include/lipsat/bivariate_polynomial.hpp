#pragma once

/// Exact bivariate polynomials over the integers, used as certificate
/// coefficients: every membership witness is an identity between such
/// polynomials and is re-checked by expanding it, so the arithmetic here
/// must be exact (coefficients grow fast; they are arbitrary precision).

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lipsat/types.hpp"

namespace lipsat {

using BigInt = boost::multiprecision::cpp_int;

class BivariatePolynomial {
public:
    // (exponent of first variable, exponent of second variable) -> coefficient.
    // Invariant: no stored coefficient is zero.
    using Term = std::pair<Exponent, Exponent>;
    using TermMap = std::map<Term, BigInt>;

    BivariatePolynomial() = default;

    static BivariatePolynomial monomial(Exponent i, Exponent j, BigInt coeff = 1) {
        BivariatePolynomial p;
        if (coeff != 0) p.terms_[{i, j}] = std::move(coeff);
        return p;
    }

    static BivariatePolynomial constant(BigInt c) { return monomial(0, 0, std::move(c)); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Total degree, or -1 for the zero polynomial.
    Exponent degree() const {
        Exponent d = -1;
        for (const auto& [t, c] : terms_) d = std::max(d, t.first + t.second);
        return d;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }

    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (const auto& [t, c] : o.terms_) add_term(t, -c);
        return *this;
    }

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }

    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        a -= b;
        return a;
    }

    friend BivariatePolynomial operator-(const BivariatePolynomial& a) {
        BivariatePolynomial r;
        for (const auto& [t, c] : a.terms_) r.terms_[t] = -c;
        return r;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                         const BivariatePolynomial& b) {
        BivariatePolynomial r;
        for (const auto& [ta, ca] : a.terms_)
            for (const auto& [tb, cb] : b.terms_)
                r.add_term({checked_add(ta.first, tb.first),
                            checked_add(ta.second, tb.second)},
                           ca * cb);
        return r;
    }

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Human-readable rendering, terms in descending total degree (ties by
    /// descending first-variable exponent):  "x^3*y - 2*y^4 + 1".
    std::string str(const std::string& var1 = "x", const std::string& var2 = "y") const {
        if (terms_.empty()) return "0";
        // Collect and sort by (total degree desc, first exponent desc).
        std::vector<std::pair<Term, const BigInt*>> ordered;
        ordered.reserve(terms_.size());
        for (const auto& [t, c] : terms_) ordered.emplace_back(t, &c);
        std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
            const Exponent da = a.first.first + a.first.second;
            const Exponent db = b.first.first + b.first.second;
            if (da != db) return da > db;
            return a.first.first > b.first.first;
        });

        std::string out;
        bool first = true;
        for (const auto& [t, c] : ordered) {
            const bool negative = *c < 0;
            BigInt mag = negative ? BigInt(-*c) : *c;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;

            std::string mono = format_power(var1, t.first);
            std::string mono2 = format_power(var2, t.second);
            if (!mono.empty() && !mono2.empty()) mono += "*" + mono2;
            else if (mono.empty()) mono = mono2;

            if (mono.empty())
                out += mag.str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.str() + "*" + mono;
        }
        return out;
    }

private:
    static std::string format_power(const std::string& var, Exponent e) {
        if (e == 0) return "";
        if (e == 1) return var;
        return var + "^" + std::to_string(e);
    }

    void add_term(const Term& t, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) {
            terms_.emplace(t, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    TermMap terms_;
};

} // namespace lipsat
