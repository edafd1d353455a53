#pragma once

/// Dense univariate polynomials over the integers, just enough to build
/// cyclotomic polynomials and reduce X^l - 1 modulo them.  This provides a
/// second, structurally different route to the divisibility questions the
/// gap filter answers with plain integer arithmetic.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lipsat/error.hpp"
#include "lipsat/types.hpp"

namespace lipsat {

class UnivariatePolynomial {
public:
    // coeffs_[k] is the coefficient of X^k.  Invariant: empty (the zero
    // polynomial) or the leading coefficient is nonzero.
    using BigInt = boost::multiprecision::cpp_int;

    UnivariatePolynomial() = default;

    explicit UnivariatePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static UnivariatePolynomial x_power_minus_one(Exponent m) {
        if (m < 0) throw error(errc::invalid_argument, "negative exponent", m);
        if (m == 0) return UnivariatePolynomial{}; // X^0 - 1 = 0
        std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
        c[0] = -1;
        c.back() = 1;
        return UnivariatePolynomial{std::move(c)};
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    Exponent degree() const noexcept { return static_cast<Exponent>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                          const UnivariatePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UnivariatePolynomial{std::move(c)};
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

struct DivMod {
    UnivariatePolynomial quotient;
    UnivariatePolynomial remainder;
};

/// Quotient and remainder by a *monic* divisor (all divisors here are
/// cyclotomic, hence monic, so integer division is exact step by step).
inline DivMod divmod(const UnivariatePolynomial& num, const UnivariatePolynomial& den) {
    using BigInt = UnivariatePolynomial::BigInt;
    if (den.is_zero() || den.coefficients().back() != 1)
        throw error(errc::invalid_argument, "division requires a monic divisor");
    std::vector<BigInt> rem = num.coefficients();
    const std::size_t dd = den.coefficients().size() - 1;
    if (rem.size() <= dd) return {UnivariatePolynomial{}, num};
    std::vector<BigInt> quot(rem.size() - dd);
    for (std::size_t lead = rem.size(); lead-- > dd;) {
        if (rem[lead] == 0) continue;
        const BigInt factor = rem[lead];
        quot[lead - dd] = factor;
        for (std::size_t i = 0; i <= dd; ++i)
            rem[lead - dd + i] -= factor * den.coefficients()[i];
    }
    return {UnivariatePolynomial{std::move(quot)}, UnivariatePolynomial{std::move(rem)}};
}

/// The m-th cyclotomic polynomial, computed exactly by repeatedly dividing
/// X^d - 1 by the cyclotomic polynomials of the proper divisors of d.
inline UnivariatePolynomial cyclotomic(Exponent m) {
    if (m < 1) throw error(errc::invalid_argument, "cyclotomic index must be >= 1", m);
    std::vector<Exponent> divisors;
    for (Exponent d = 1; d <= m; ++d)
        if (m % d == 0) divisors.push_back(d);

    std::vector<UnivariatePolynomial> table(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        UnivariatePolynomial f = UnivariatePolynomial::x_power_minus_one(divisors[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (divisors[i] % divisors[j] != 0) continue;
            auto dm = divmod(f, table[j]);
            if (!dm.remainder.is_zero())
                throw error(errc::internal_inconsistency,
                            "cyclotomic division left a remainder");
            f = std::move(dm.quotient);
        }
        table[i] = std::move(f);
    }
    return table.back();
}

} // namespace lipsat
