#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rcb/cyclotomic.hpp"
#include "rcb/linear_exponent.hpp"
#include "rcb/multipoly.hpp"
#include "rcb/rational.hpp"

using namespace rcb;

TEST_CASE("rational canonical form") {
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(BigInt(0), BigInt(7)).denominator() == 1);
    CHECK(Rational::parse("-10/4") == Rational(BigInt(-5), BigInt(2)));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("cyclotomic polynomials") {
    auto as_longs = [](const IntPoly& p) {
        std::vector<long> v;
        for (const auto& c : p) v.push_back(c.get_si());
        return v;
    };
    CHECK(as_longs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(as_longs(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
    CHECK(as_longs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
    CHECK(as_longs(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 30; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("canonicalization examples") {
    auto f4 = make_cyclotomic_field(4);
    auto f3 = make_cyclotomic_field(3);
    CHECK(Cyclotomic::zeta_power(f4, 2) == Cyclotomic(f4, Rational(-1)));
    CHECK(cyclo_canonicalize(f3, {0, 0, 1}) == Cyclotomic::parse(f3, "-1 - z"));
    CHECK(cyclo_canonicalize(f3, {}).is_zero());
    CHECK(Cyclotomic::zeta_power(f3, -1) == Cyclotomic::zeta_power(f3, 2));
}

TEST_CASE("inversion examples") {
    auto f4 = make_cyclotomic_field(4);
    auto f3 = make_cyclotomic_field(3);
    CHECK(cyclo_invert(Cyclotomic::one(f4)) == Cyclotomic::one(f4));
    CHECK(cyclo_invert(Cyclotomic::parse(f4, "z")) == Cyclotomic::parse(f4, "-z"));
    CHECK(cyclo_invert(Cyclotomic::parse(f3, "1 - z")) == Cyclotomic::parse(f3, "2/3 + 1/3*z"));
    CHECK_THROWS_AS(cyclo_invert(Cyclotomic::zero(f3)), DivisionByZero);
}

TEST_CASE("literal grammar round trip") {
    auto f = make_cyclotomic_field(5);
    for (const char* s : {"0", "1", "-z", "1/3 + 2/3*z", "z^2 - 3*z^3", "-1/2*z"}) {
        const auto c = Cyclotomic::parse(f, s);
        CHECK(Cyclotomic::parse(f, c.to_string()) == c);
    }
    CHECK(Cyclotomic::parse(f, "z^5") == Cyclotomic::one(f));
    CHECK(Cyclotomic::parse(f, "z^-1") == Cyclotomic::zeta_power(f, 4));
    CHECK_THROWS(Cyclotomic::parse(f, "2*"));
    CHECK_THROWS(Cyclotomic::parse(f, "1/0"));
    CHECK_THROWS(Cyclotomic::parse(f, "y"));
    const auto c = Cyclotomic::parse(f, "1/2 - z^3");
    CHECK(Cyclotomic::from_json(f, c.to_json()) == c);
    CHECK(c.to_json()["order"] == 5);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(20240611);
    for (int n = 1; n <= 12; ++n) {
        auto f = make_cyclotomic_field(n);
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = oracle::random_cyclotomic(rng, f);
            const auto b = oracle::random_cyclotomic(rng, f);
            const auto c = oracle::random_cyclotomic(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * cyclo_invert(a) == Cyclotomic::one(f));
        }
    }
}

TEST_CASE("roots of unity") {
    for (int n = 1; n <= 12; ++n) {
        auto f = make_cyclotomic_field(n);
        CHECK(Cyclotomic::zeta_power(f, n) == Cyclotomic::one(f));
    }
    for (int p : {2, 3, 5, 7, 11}) {
        auto f = make_cyclotomic_field(p);
        Cyclotomic s = Cyclotomic::zero(f);
        for (int k = 0; k < p; ++k) s += Cyclotomic::zeta_power(f, k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("canonicalization is an idempotent ring map from raw polynomials") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int n : {3, 4, 5, 8, 9, 12}) {
        auto f = make_cyclotomic_field(n);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> p, q;
            for (int k = 0; k < 2 * n; ++k) {
                p.emplace_back(coef(rng));
                q.emplace_back(coef(rng));
            }
            std::vector<Rational> prod(p.size() + q.size(), Rational(0));
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < q.size(); ++j) prod[i + j] += p[i] * q[j];
            const auto cp = cyclo_canonicalize(f, p);
            CHECK(cyclo_canonicalize(f, cp.coeffs()) == cp);
            CHECK(cyclo_canonicalize(f, prod) == cp * cyclo_canonicalize(f, q));
        }
    }
}

TEST_CASE("multipoly t-divisibility") {
    auto ring = make_poly_ring(make_cyclotomic_field(2), {"t", "kappa", "c1"});
    const auto t = MultiPoly::variable(ring, "t");
    const auto k = MultiPoly::variable(ring, "kappa");
    const auto c1 = MultiPoly::variable(ring, "c1");
    CHECK(poly_is_t_divisible(t * k + t * t));
    CHECK_FALSE(poly_is_t_divisible(t + c1));
    CHECK(poly_is_t_divisible(MultiPoly(ring)));
    CHECK((t - t).is_zero());
}

TEST_CASE("multipoly arithmetic agrees with evaluation") {
    std::mt19937 rng(99);
    auto f = make_cyclotomic_field(3);
    auto ring = make_poly_ring(f, {"t", "kappa", "c1", "c2"});
    auto random_poly = [&] {
        MultiPoly p(ring);
        std::uniform_int_distribution<int> e(0, 2);
        for (int i = 0; i < 4; ++i) p.add_term({e(rng), e(rng), e(rng), e(rng)}, oracle::random_cyclotomic(rng, f));
        return p;
    };
    for (int trial = 0; trial < 25; ++trial) {
        const auto p = random_poly();
        const auto q = random_poly();
        std::vector<Cyclotomic> at;
        for (int v = 0; v < 4; ++v) at.push_back(oracle::random_cyclotomic(rng, f));
        CHECK((p * q).evaluate(at) == p.evaluate(at) * q.evaluate(at));
        CHECK((p + q).evaluate(at) == p.evaluate(at) + q.evaluate(at));
    }
}

TEST_CASE("linear exponents") {
    LinearExponent a(1, {1, 0});
    LinearExponent b(-1, {0, 1});
    CHECK((a + b) == LinearExponent(0, {1, 1}));
    CHECK((a - a) == LinearExponent::zero(3));
    CHECK(LinearExponent::zero(3).to_string() == "0");
    CHECK(LinearExponent(-1, {1, 1}).to_string() == "H1 + H2 - kappa");
    CHECK(std::hash<LinearExponent>{}(a) == std::hash<LinearExponent>{}(LinearExponent(1, {1, 0})));
}
