#include <doctest.h>

#include <random>

#include "rgt/genus_polynomial.hpp"

using rgt::GenusPolynomial;
using Int = GenusPolynomial::Int;

TEST_CASE("ring arithmetic") {
    const auto k3 = GenusPolynomial::of({{0, 2}, {2, 6}});

    // (6z^2+2) + 2z^2 * 2
    auto p = k3;
    p += GenusPolynomial::constant(2).scale_monomial(2, 2);
    CHECK(p == GenusPolynomial::of({{0, 2}, {2, 10}}));

    // (1+2z)*2 + z^2*2
    auto q = GenusPolynomial::of({{0, 1}, {1, 2}}) * GenusPolynomial::constant(2);
    q += GenusPolynomial::constant(2).scale_monomial(2, 1);
    CHECK(q == GenusPolynomial::of({{0, 2}, {1, 4}, {2, 2}}));

    // (4+4z^2)^2, cross-checked by evaluation
    const auto f = GenusPolynomial::of({{0, 4}, {2, 4}});
    const auto sq = f * f;
    CHECK(sq == GenusPolynomial::of({{0, 16}, {2, 32}, {4, 16}}));
    CHECK(sq.evaluate(1) == f.evaluate(1) * f.evaluate(1));
    CHECK(sq.evaluate(2) == f.evaluate(2) * f.evaluate(2));
}

TEST_CASE("support and parity") {
    const auto sec3 = GenusPolynomial::of({{2, 8}, {4, 48}, {5, 32}, {6, 40}});
    CHECK(sec3.support() == std::vector<unsigned>{2, 4, 5, 6});
    CHECK_FALSE(sec3.is_even_polynomial());
    CHECK_FALSE(sec3.is_odd_polynomial());

    const auto k3 = GenusPolynomial::of({{0, 2}, {2, 6}});
    CHECK(k3.support() == std::vector<unsigned>{0, 2});
    CHECK(k3.is_even_polynomial());

    const GenusPolynomial zero;
    CHECK(zero.support().empty());
    CHECK(zero.is_even_polynomial());  // vacuous, by convention
    CHECK(zero.is_odd_polynomial());
    CHECK(zero.to_string() == "0");
}

TEST_CASE("interpolation predicates") {
    const auto ex21 =
        GenusPolynomial::of({{0, 2}, {2, 30}, {4, 144}, {6, 240}, {8, 96}});
    CHECK_FALSE(ex21.is_interpolating());

    CHECK(GenusPolynomial::of({{2, 1}, {3, 1}, {4, 1}}).is_interpolating());

    // the sec-3 family at n=1 misses exponent 3
    const auto fam1 = GenusPolynomial::of(
        {{2, 8}, {4, 48}, {5, 32}, {6, 104}, {7, 32}, {8, 16}});
    CHECK_FALSE(fam1.is_interpolating());
    CHECK(fam1.support() == std::vector<unsigned>{2, 4, 5, 6, 7, 8});

    CHECK(GenusPolynomial::of({{0, 4}, {2, 4}}).is_even_interpolating());
    CHECK_FALSE(GenusPolynomial::of({{0, 1}, {4, 1}}).is_even_interpolating());
    CHECK(GenusPolynomial::constant(16).is_even_interpolating());

    const GenusPolynomial zero;
    CHECK_THROWS_AS(zero.is_interpolating(), rgt::PreconditionError);
    CHECK_THROWS_AS(zero.is_even_interpolating(), rgt::PreconditionError);
}

TEST_CASE("rendering") {
    CHECK(GenusPolynomial::of({{0, 2}, {2, 30}, {4, 144}, {6, 240}, {8, 96}})
              .to_string() == "2 + 30*z^2 + 144*z^4 + 240*z^6 + 96*z^8");
    CHECK(GenusPolynomial::of({{0, 1}, {4, 1}}).to_string() == "1 + 1*z^4");
    CHECK(GenusPolynomial::of({{1, 4}}).to_string() == "4*z^1");
}

TEST_CASE("algebra properties on random inputs") {
    std::mt19937_64 rng(5);
    auto random_poly = [&]() {
        GenusPolynomial p;
        const unsigned terms = 1 + rng() % 5;
        for (unsigned i = 0; i < terms; ++i)
            p += GenusPolynomial::monomial(rng() % 9,
                                           Int(static_cast<long long>(rng() % 41)) - 20);
        return p;
    };
    for (int t = 0; t < 60; ++t) {
        const auto a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b).evaluate(1) == a.evaluate(1) + b.evaluate(1));
        CHECK((a * b).evaluate(3) == a.evaluate(3) * b.evaluate(3));
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
        if (!a.is_zero() && a.is_even_interpolating())
            CHECK(a.is_even_polynomial());
    }
}

TEST_CASE("big coefficients stay exact") {
    // 2^{n+6}-24 style coefficients for large n
    const Int big = (Int(1) << 120) - 24;
    const auto p = GenusPolynomial::monomial(6, big);
    CHECK(p.coefficient(6) == big);
    CHECK((p + p).coefficient(6) == 2 * big);
    CHECK(p.evaluate(1) == big);
}
