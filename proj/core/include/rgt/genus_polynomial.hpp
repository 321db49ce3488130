#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "rgt/errors.hpp"

namespace rgt {

/// Exact sparse polynomial in z with arbitrary-precision integer
/// coefficients. Kept canonical: zero coefficients are never stored, so
/// equality is map equality.
class GenusPolynomial {
public:
    using Int = boost::multiprecision::cpp_int;

    GenusPolynomial() = default;

    static GenusPolynomial constant(Int c);
    static GenusPolynomial monomial(unsigned exponent, Int coefficient);
    /// Build from (exponent, coefficient) pairs; repeated exponents add.
    static GenusPolynomial of(std::initializer_list<std::pair<unsigned, long long>> terms);

    bool is_zero() const { return terms_.empty(); }
    Int coefficient(unsigned exponent) const;
    unsigned degree() const;  // throws PreconditionError on zero
    const std::map<unsigned, Int>& terms() const { return terms_; }

    GenusPolynomial& operator+=(const GenusPolynomial& rhs);
    friend GenusPolynomial operator+(GenusPolynomial a, const GenusPolynomial& b) {
        a += b;
        return a;
    }
    GenusPolynomial operator*(const GenusPolynomial& rhs) const;

    /// coefficient * z^exponent * (*this)
    GenusPolynomial scale_monomial(unsigned exponent, const Int& coefficient) const;

    Int evaluate(const Int& z) const;
    Int coefficient_sum() const { return evaluate(1); }

    /// Exponents of the nonzero terms, ascending.
    std::vector<unsigned> support() const;

    /// True iff every support exponent is even (0 counts as even).
    /// The zero polynomial is vacuously both even and odd.
    bool is_even_polynomial() const;
    bool is_odd_polynomial() const;

    /// True iff the support is a contiguous integer interval.
    /// Undefined on the zero polynomial (throws PreconditionError).
    bool is_interpolating() const;

    /// True iff the support equals all even integers of some interval.
    /// Undefined on the zero polynomial (throws PreconditionError).
    bool is_even_interpolating() const;

    /// Canonical rendering, ascending exponents: "2 + 30*z^2 + 96*z^8".
    /// The zero polynomial renders as "0".
    std::string to_string() const;

    bool operator==(const GenusPolynomial&) const = default;

private:
    std::map<unsigned, Int> terms_;

    void add_term(unsigned exponent, const Int& coefficient);
};

}  // namespace rgt
