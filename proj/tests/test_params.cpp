#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rcb/params.hpp"

using namespace rcb;

namespace {

ParamSpec numeric(int m, int order, const std::string& kappa, const std::vector<std::string>& c) {
    auto f = make_cyclotomic_field(order);
    std::vector<Cyclotomic> cv;
    for (const auto& s : c) cv.push_back(Cyclotomic::parse(f, s));
    return ParamSpec::numeric(m, Cyclotomic::parse(f, kappa), cv);
}

ParamSpec random_spec(std::mt19937& rng, int m, int order) {
    auto f = make_cyclotomic_field(order);
    std::vector<Cyclotomic> c;
    for (int l = 1; l < m; ++l) c.push_back(oracle::random_cyclotomic(rng, f));
    return ParamSpec::numeric(m, oracle::random_cyclotomic(rng, f), c);
}

std::vector<std::string> strings(const std::vector<Cyclotomic>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.to_string());
    return s;
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(numeric(2, 2, "1", {}), InvalidParameters);
    CHECK_THROWS_AS(numeric(2, 3, "1", {"1"}), InvalidParameters);
    CHECK_THROWS_AS(ParamSpec::generic(4, 3), InvalidParameters);
    CHECK_THROWS_AS(ParamSpec::generic(0), InvalidParameters);
    CHECK_THROWS_AS(ParamSpec::generic(2).kappa(), std::logic_error);
    CHECK(numeric(1, 1, "2", {}).c_values().empty());
}

TEST_CASE("c to H examples") {
    const auto d = c_to_H(numeric(2, 2, "1", {"1"}));
    CHECK(strings(d.H) == std::vector<std::string>{"-1", "1"});
    CHECK(strings(d.a) == std::vector<std::string>{"0", "1"});
    CHECK(d.C.to_string() == "-1");
    CHECK(d.h.to_string() == "-1");

    const auto z = c_to_H(numeric(4, 4, "3", {"0", "0", "0"}));
    for (const auto& h : z.H) CHECK(h.is_zero());
    for (const auto& a : z.a) CHECK(a.is_zero());
    CHECK(z.C.is_zero());

    const auto m1 = c_to_H(numeric(1, 1, "1", {}));
    CHECK(m1.H.size() == 1);
    CHECK(m1.H[0].is_zero());
    CHECK(m1.C.is_zero());
}

TEST_CASE("c to H agrees with a brute-force linear solve") {
    std::mt19937 rng(31337);
    for (int m = 2; m <= 6; ++m)
        for (int trial = 0; trial < 5; ++trial) {
            const auto spec = random_spec(rng, m, m);
            const auto d = c_to_H(spec);
            CHECK(d.H == oracle::H_by_linear_solve(m, spec.c_values(), spec.field()));
        }
    const auto spec = numeric(3, 3, "1", {"1", "1"});
    CHECK(c_to_H(spec).H == oracle::H_by_linear_solve(3, spec.c_values(), spec.field()));
}

TEST_CASE("derived parameter invariants") {
    std::mt19937 rng(5);
    for (int m = 1; m <= 6; ++m) {
        const auto d = c_to_H(random_spec(rng, m, 2 * m));
        Cyclotomic sum = Cyclotomic::zero(d.C.field());
        for (const auto& h : d.H) sum += h;
        CHECK(sum.is_zero());
        CHECK(d.a[0].is_zero());
        for (int i = 1; i < m; ++i) CHECK(d.a[static_cast<std::size_t>(i)] == d.a[static_cast<std::size_t>(i - 1)] + d.H[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("H to c") {
    auto f = make_cyclotomic_field(2);
    auto h = [&](const char* a, const char* b) {
        return std::vector<Cyclotomic>{Cyclotomic::parse(f, a), Cyclotomic::parse(f, b)};
    };
    CHECK(strings(H_to_c(h("-1", "1"))) == std::vector<std::string>{"1"});
    CHECK(strings(H_to_c(h("-5/2", "5/2"))) == std::vector<std::string>{"5/2"});
    CHECK(H_to_c(h("0", "0"))[0].is_zero());
    CHECK_THROWS_AS(H_to_c(h("1", "1")), InvalidParameters);
    CHECK_THROWS_AS(H_to_c({Cyclotomic::zero(f)}), InvalidParameters);
}

TEST_CASE("round trip c -> H -> c on random specs") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 2 + trial % 5;
        const auto spec = random_spec(rng, m, m * (1 + trial % 2));
        CHECK(H_to_c(c_to_H(spec).H) == spec.c_values());
    }
}

TEST_CASE("beta identity") {
    const auto s = numeric(2, 2, "1", {"1"});
    CHECK(check_beta_identity(s, 0));
    CHECK(check_beta_identity(s, 1));
    CHECK(check_beta_identity(numeric(3, 3, "0", {"0", "0"}), 2));
    CHECK_THROWS_AS(check_beta_identity(s, 2), InvalidParameters);
    std::mt19937 rng(11);
    for (int m = 1; m <= 6; ++m)
        for (int trial = 0; trial < 10; ++trial) {
            const auto spec = random_spec(rng, m, m);
            for (int beta = 0; beta < m; ++beta) CHECK(check_beta_identity(spec, beta));
        }
}

TEST_CASE("scaling") {
    const auto s = numeric(2, 2, "1", {"1"});
    const auto f = s.field();
    CHECK(scale_params(s, Cyclotomic::one(f)) == s);
    CHECK(scale_params(s, Cyclotomic(f, Rational(2))) == numeric(2, 2, "2", {"2"}));
    const auto neg = Cyclotomic(f, Rational(-1));
    CHECK(scale_params(scale_params(s, neg), neg) == s);
    CHECK_THROWS_AS(scale_params(s, Cyclotomic::zero(f)), InvalidParameters);
}

TEST_CASE("generic exponent") {
    CHECK(generic_exponent(0, 0, 2) == LinearExponent::zero(2));
    CHECK(generic_exponent(1, 0, 2) == LinearExponent(0, {1}));
    CHECK(generic_exponent(2, -1, 3) == LinearExponent(1, {1, 1}));
    CHECK_THROWS_AS(generic_exponent(3, 0, 3), InvalidParameters);
}

TEST_CASE("admissible parameters give periodic H and a") {
    std::mt19937 rng(4242);
    for (int m = 1; m <= 8; ++m)
        for (int d = 1; d <= m; ++d) {
            if (m % d) continue;
            const int p = m / d;
            auto f = make_cyclotomic_field(m);
            std::vector<Cyclotomic> c;
            for (int l = 1; l < m; ++l)
                c.push_back(l % d == 0 ? oracle::random_cyclotomic(rng, f) : Cyclotomic::zero(f));
            const auto spec = ParamSpec::numeric(m, oracle::random_cyclotomic(rng, f), c);
            CHECK(is_admissible_for(spec, d));
            const auto dp = c_to_H(spec);
            for (int j = 0; j < m; ++j) {
                CHECK(dp.H[static_cast<std::size_t>((j + p) % m)] == dp.H[static_cast<std::size_t>(j)]);
                CHECK(dp.a[static_cast<std::size_t>((j + p) % m)] == dp.a[static_cast<std::size_t>(j)]);
            }
        }
    CHECK_FALSE(is_admissible_for(numeric(2, 2, "1", {"1"}), 2));
    CHECK(is_admissible_for(ParamSpec::generic(4, 2), 2));
    CHECK_FALSE(is_admissible_for(ParamSpec::generic(4, 1), 2));
}

TEST_CASE("derived params json") {
    const auto j = c_to_H(numeric(2, 2, "1", {"1"})).to_json();
    CHECK(j["H"] == nlohmann::json({"-1", "1"}));
    CHECK(j["a"] == nlohmann::json({"0", "1"}));
    CHECK(j["C"] == "-1");
}
