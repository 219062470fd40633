#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rcb/blocks.hpp"

using namespace rcb;

namespace {

Multipartition mp(std::vector<std::vector<int>> comps) {
    std::vector<Partition> ps;
    for (auto& c : comps) ps.emplace_back(std::move(c));
    return Multipartition(std::move(ps));
}

std::vector<std::vector<int>> parts_of(const Multipartition& l) {
    std::vector<std::vector<int>> out;
    for (const auto& p : l.components()) out.push_back(p.parts());
    return out;
}

ParamSpec spec(int m, int order, const std::string& kappa, const std::vector<std::string>& c) {
    auto f = make_cyclotomic_field(order);
    std::vector<Cyclotomic> cv;
    for (const auto& s : c) cv.push_back(Cyclotomic::parse(f, s));
    return ParamSpec::numeric(m, Cyclotomic::parse(f, kappa), cv);
}

ParamSpec random_spec(std::mt19937& rng, int m, int d = 1) {
    auto f = make_cyclotomic_field(m);
    std::vector<Cyclotomic> c;
    for (int l = 1; l < m; ++l) c.push_back(l % d == 0 ? oracle::random_cyclotomic(rng, f, 2) : Cyclotomic::zero(f));
    return ParamSpec::numeric(m, oracle::random_cyclotomic(rng, f, 2), c);
}

// Set partition as a set of sets of label strings.
std::set<std::set<std::string>> as_sets(const BlockPartition& bp) {
    std::set<std::set<std::string>> out;
    for (const auto& cls : bp.classes) {
        std::set<std::string> s;
        for (auto i : cls) s.insert(label_to_string(bp.labels[i]));
        out.insert(s);
    }
    return out;
}

// Classes built by brute force from an arbitrary key on multipartitions.
template <class Key>
std::set<std::set<std::string>> group_by(int m, int n, Key key) {
    std::map<decltype(key(std::declval<Multipartition>())), std::set<std::string>> g;
    for (const auto& l : enumerate_multipartitions(m, n)) g[key(l)].insert(l.to_string());
    std::set<std::set<std::string>> out;
    for (auto& [k, s] : g) out.insert(s);
    return out;
}

bool refines(const BlockPartition& fine, const BlockPartition& coarse) {
    std::map<std::string, std::size_t> owner;
    for (std::size_t k = 0; k < coarse.classes.size(); ++k)
        for (auto i : coarse.classes[k]) owner[label_to_string(coarse.labels[i])] = k;
    for (const auto& cls : fine.classes) {
        std::set<std::size_t> seen;
        for (auto i : cls) seen.insert(owner.at(label_to_string(fine.labels[i])));
        if (seen.size() != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("invariant examples") {
    const auto p = spec(2, 2, "1", {"1"});
    CHECK(block_invariant(mp({{2}, {}}), p).to_string() == "{-1, 0}");
    CHECK(block_invariant(mp({{}, {2}}), p).to_string() == "{0, 1}");
    const auto g = block_invariant(mp({{1}, {1}}), ParamSpec::generic(2));
    REQUIRE(g.generic.size() == 2);
    CHECK(g.generic[0] == LinearExponent::zero(2));
    CHECK(g.generic[1] == LinearExponent(0, {1}));
    CHECK_THROWS_AS(block_invariant(mp({{1}}), p), InvalidParameters);
}

TEST_CASE("invariant matches the box-enumeration oracle") {
    std::mt19937 rng(17);
    for (int m = 1; m <= 3; ++m)
        for (int trial = 0; trial < 3; ++trial) {
            const auto p = random_spec(rng, m);
            const auto H = c_to_H(p).H;
            for (int n = 0; n <= 4; ++n)
                for (const auto& l : enumerate_multipartitions(m, n)) {
                    const auto inv = block_invariant(l, p);
                    CHECK(static_cast<int>(inv.size()) == n);
                    CHECK(std::is_sorted(inv.numeric.begin(), inv.numeric.end()));
                    std::map<Cyclotomic, int> got;
                    for (const auto& v : inv.numeric) ++got[v];
                    CHECK(got == oracle::invariant_counts(parts_of(l), H, p.kappa()));
                }
        }
}

TEST_CASE("same block examples") {
    const auto p = spec(2, 2, "1", {"1"});
    const auto l = mp({{1, 1}, {}});
    CHECK(same_block(l, l, p));
    CHECK(same_block(l, mp({{1}, {1}}), p));
    CHECK_FALSE(same_block(mp({{2}, {}}), mp({{}, {1, 1}}), p));
    CHECK_THROWS_AS(same_block(l, mp({{1}, {}}), p), InvalidParameters);
}

TEST_CASE("same block is an equivalence relation") {
    std::mt19937 rng(3);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            const auto p = m == 1 ? spec(1, 1, "0", {}) : spec(m, m, "1", std::vector<std::string>(static_cast<std::size_t>(m - 1), "0"));
            const auto all = enumerate_multipartitions(m, n);
            for (const auto& a : all) {
                CHECK(same_block(a, a, p));
                for (const auto& b : all) {
                    if (!same_block(a, b, p)) continue;
                    CHECK(same_block(b, a, p));
                    for (const auto& c : all)
                        if (same_block(b, c, p)) CHECK(same_block(a, c, p));
                }
            }
        }
}

TEST_CASE("golden block partition") {
    const auto bp = block_partition_g_m_1_n(2, 2, spec(2, 2, "1", {"1"}));
    const std::set<std::set<std::string>> want{
        {"((2),())"}, {"((),(1,1))"}, {"((1,1),())", "((1),(1))", "((),(2))"}};
    CHECK(as_sets(bp) == want);
    CHECK(bp.labels.size() == 5);
    const auto j = bp.to_json();
    CHECK(j["blocks"].size() == 3);
    CHECK(j["group"]["m"] == 2);
}

TEST_CASE("m = 1 with nonzero kappa gives singletons") {
    for (int n = 1; n <= 8; ++n) {
        const auto bp = block_partition_g_m_1_n(1, n, spec(1, 1, "1", {}));
        CHECK(bp.classes.size() == bp.labels.size());
        const auto bq = block_partition_g_m_1_n(1, n, spec(1, 1, "-3/7", {}));
        CHECK(bq.classes.size() == bq.labels.size());
    }
}

TEST_CASE("generic parameters give singletons") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 5; ++n) {
            const auto bp = block_partition_g_m_1_n(m, n, ParamSpec::generic(m));
            CHECK(bp.classes.size() == oracle::multipartition_count(m, n));
            CHECK(bp.mode == ParamMode::generic);
        }
}

TEST_CASE("kappa = 0 classes are size-vector fibers weighted by a") {
    std::mt19937 rng(8);
    for (int m = 2; m <= 3; ++m)
        for (int trial = 0; trial < 4; ++trial) {
            auto f = make_cyclotomic_field(m);
            std::vector<Cyclotomic> c;
            for (int l = 1; l < m; ++l) c.push_back(oracle::random_cyclotomic(rng, f, 2));
            if (trial == 0) std::fill(c.begin(), c.end(), Cyclotomic::zero(f));
            const auto p = ParamSpec::numeric(m, Cyclotomic::zero(f), c);
            const auto a = c_to_H(p).a;
            for (int n = 1; n <= 4; ++n) {
                const auto want = group_by(m, n, [&](const Multipartition& l) {
                    std::map<Cyclotomic, int> weight;
                    const auto sizes = l.size_vector();
                    for (int i = 0; i < m; ++i)
                        if (sizes[static_cast<std::size_t>(i)]) weight[a[static_cast<std::size_t>(i)]] += sizes[static_cast<std::size_t>(i)];
                    return weight;
                });
                CHECK(as_sets(block_partition_g_m_1_n(m, n, p)) == want);
            }
        }
}

TEST_CASE("scaling leaves the partition unchanged") {
    std::mt19937 rng(12);
    for (int m = 1; m <= 3; ++m)
        for (int trial = 0; trial < 4; ++trial) {
            const auto p = random_spec(rng, m);
            auto s = oracle::random_cyclotomic(rng, p.field(), 2);
            if (s.is_zero()) s = Cyclotomic::one(p.field());
            for (int n = 1; n <= 4; ++n)
                CHECK(as_sets(block_partition_g_m_1_n(m, n, p)) ==
                      as_sets(block_partition_g_m_1_n(m, n, scale_params(p, s))));
        }
}

TEST_CASE("numeric partitions are coarsenings of the generic one") {
    std::mt19937 rng(21);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            const auto gen = block_partition_g_m_1_n(m, n, ParamSpec::generic(m));
            const auto num = block_partition_g_m_1_n(m, n, random_spec(rng, m));
            CHECK(refines(gen, num));
        }
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937 rng(99);
    for (int m = 1; m <= 3; ++m) {
        const auto p = random_spec(rng, m);
        const auto all = enumerate_multipartitions(m, 5);
        const auto s = compute_invariants_serial(all, p);
        CHECK(s == compute_invariants_parallel(all, p));
        CHECK(s == compute_invariants_parallel(all, p, 2));
        const auto g = ParamSpec::generic(m);
        CHECK(compute_invariants_serial(all, g) == compute_invariants_parallel(all, g));
        PartitionOptions serial{false, 0};
        CHECK(block_partition_g_m_1_n(m, 5, p, serial).to_json() == block_partition_g_m_1_n(m, 5, p).to_json());
    }
}

TEST_CASE("baby Verma eigenvalues") {
    const auto p = spec(2, 2, "1", {"1"});
    const auto l = mp({{2}, {}});
    const auto tabs = enumerate_standard_tableaux(l);
    REQUIRE(tabs.size() == 1);
    const auto ev = baby_verma_eigenvalues(l, tabs[0], p);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].to_string() == "-1");
    CHECK(ev[1].to_string() == "-3");
    CHECK_THROWS_AS(baby_verma_eigenvalues(mp({{1, 1}, {}}), tabs[0], p), InvalidParameters);
    for (const auto& v : baby_verma_eigenvalues(l, tabs[0], spec(2, 2, "0", {"0"}))) CHECK(v.is_zero());
}

TEST_CASE("eigenvalue multisets are tableau independent") {
    std::mt19937 rng(77);
    for (int m = 1; m <= 3; ++m) {
        const auto p = random_spec(rng, m);
        const auto d = c_to_H(p);
        const Rational mm(m);
        for (int n = 1; n <= 4; ++n)
            for (const auto& l : enumerate_multipartitions(m, n)) {
                std::vector<Cyclotomic> want;
                for (const auto& b : boxes(l))
                    want.push_back(d.C + d.a[static_cast<std::size_t>(b.component)] * mm -
                                   p.kappa() * Rational(m * content(b)));
                std::sort(want.begin(), want.end());
                CHECK(eigenvalue_multiset_from_residues(l, p) == want);
                for (const auto& t : enumerate_standard_tableaux(l)) {
                    auto ev = baby_verma_eigenvalues(l, t, p);
                    std::sort(ev.begin(), ev.end());
                    CHECK(ev == want);
                }
            }
    }
}

TEST_CASE("eigenvalue classes agree with invariant classes") {
    const auto p = spec(2, 2, "1", {"1"});
    CHECK(scaled_invariant_classes_agree(mp({{1, 1}, {}}), mp({{1}, {1}}), p));
    CHECK(scaled_invariant_classes_agree(mp({{2}, {}}), mp({{}, {1, 1}}), p));
    std::mt19937 rng(5);
    for (int m = 1; m <= 3; ++m) {
        const auto q = random_spec(rng, m);
        const auto all = enumerate_multipartitions(m, 3);
        for (const auto& a : all)
            for (const auto& b : all) CHECK(scaled_invariant_classes_agree(a, b, q));
    }
}

TEST_CASE("G(m,d,n) with d = 1 is G(m,1,n)") {
    std::mt19937 rng(6);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            const auto p = random_spec(rng, m);
            const auto a = block_partition_g_m_1_n(m, n, p);
            const auto b = block_partition_g_m_d_n(m, 1, n, p);
            CHECK(a.classes == b.classes);
            CHECK(as_sets(a) == as_sets(b));
        }
}

TEST_CASE("stuttering orbit splits by epsilon") {
    const auto bp = block_partition_g_m_d_n(2, 2, 4, spec(2, 2, "1", {"0"}));
    std::optional<std::size_t> c0, c1;
    for (std::size_t k = 0; k < bp.classes.size(); ++k)
        for (auto i : bp.classes[k]) {
            const auto& lab = std::get<OrbitLabel>(bp.labels[i]);
            if (lab.representative != mp({{1, 1}, {1, 1}})) continue;
            (lab.epsilon == 0 ? c0 : c1) = k;
            CHECK(bp.classes[k].size() == 1);
        }
    REQUIRE(c0);
    REQUIRE(c1);
    CHECK(*c0 != *c1);

    const auto g = block_partition_g_m_d_n(2, 2, 4, ParamSpec::generic(2, 2));
    CHECK(g.classes.size() < g.labels.size());
}

TEST_CASE("kappa = 0 collapses G(2,2,4) into one block") {
    const auto bp = block_partition_g_m_d_n(2, 2, 4, spec(2, 2, "0", {"0"}));
    CHECK(bp.classes.size() == 1);
    CHECK(bp.classes[0].size() == bp.labels.size());
    std::size_t stuttering = 0;
    for (const auto& l : bp.labels)
        if (std::get<OrbitLabel>(l).epsilon == 1) ++stuttering;
    CHECK(stuttering == 2);
}

TEST_CASE("invariants are constant on orbits") {
    std::mt19937 rng(2024);
    for (int m = 1; m <= 8; ++m)
        for (int d = 1; d <= m; ++d) {
            if (m % d) continue;
            const auto p = random_spec(rng, m, d);
            for (const auto& l : enumerate_multipartitions(m, m <= 4 ? 3 : 2))
                CHECK(block_invariant(delta_action(l, d), p) == block_invariant(l, p));
        }
}

TEST_CASE("G(m,d,n) rejects excluded inputs") {
    const auto p = spec(2, 2, "1", {"0"});
    CHECK_THROWS_AS(block_partition_g_m_d_n(2, 2, 2, p), UnsupportedGroup);
    CHECK_THROWS_AS(block_partition_g_m_d_n(2, 2, 1, p), UnsupportedGroup);
    CHECK_THROWS_AS(block_partition_g_m_d_n(4, 3, 3, spec(4, 4, "1", {"0", "0", "0"})), NotADivisor);
    CHECK_THROWS_AS(block_partition_g_m_d_n(2, 2, 3, spec(2, 2, "1", {"1"})), InvalidParameters);
    CHECK_NOTHROW(block_partition_g_m_d_n(3, 3, 2, spec(3, 3, "1", {"0", "0"})));
}
