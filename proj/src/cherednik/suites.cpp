#include <algorithm>
#include <exception>
#include <functional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcb/verify.hpp"

namespace rcb {

bool Report::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

std::vector<std::string> Report::failures() const {
    std::vector<std::string> out;
    for (const auto& c : cases)
        if (!c.pass) out.push_back(c.id);
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cases) arr.push_back({{"id", c.id}, {"pass", c.pass}});
    return {{"suite", suite}, {"cases", arr}, {"all_pass", all_pass()}};
}

Report& Report::append(const Report& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
    return *this;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"hecke", "gamma",   "zcomm", "plemmas",
                                                "central", "euler", "psi",   "do-equality"};
    return names;
}

namespace {

struct Case {
    std::string id;
    std::function<bool()> check;
};

std::string idx(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string s = "[";
    bool first = true;
    for (const auto& [k, v] : kv) {
        s += (first ? "" : ",") + std::string(k) + "=" + std::to_string(v);
        first = false;
    }
    return s + "]";
}

std::string set_str(const std::vector<int>& J) {
    std::string s = "{";
    for (std::size_t i = 0; i < J.size(); ++i) s += (i ? "," : "") + std::to_string(J[i]);
    return s + "}";
}

Report run_cases(const std::string& suite, const std::vector<Case>& cases, const SuiteOptions& opts) {
    Report rep;
    rep.suite = suite;
    rep.cases.resize(cases.size());
    std::vector<std::exception_ptr> resource_errors(cases.size());
    const long count = static_cast<long>(cases.size());

    auto run_one = [&](long i) {
        auto& out = rep.cases[static_cast<std::size_t>(i)];
        out.id = cases[static_cast<std::size_t>(i)].id;
        try {
            out.pass = cases[static_cast<std::size_t>(i)].check();
        } catch (const ResourceLimitExceeded&) {
            resource_errors[static_cast<std::size_t>(i)] = std::current_exception();
        } catch (const std::exception& e) {
            out.pass = false;
            out.error = e.what();
        }
    };

    if (opts.parallel) {
#ifdef _OPENMP
        const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
        for (long i = 0; i < count; ++i) run_one(i);
    } else {
        for (long i = 0; i < count; ++i) run_one(i);
    }
    for (const auto& e : resource_errors)
        if (e) std::rethrow_exception(e);
    return rep;
}

// Shared, read-only data for one (m, n).
struct Context {
    AlgebraPtr alg;
    std::vector<Element> z;                   // z[i], 1-based
    std::vector<std::vector<Element>> gam;    // gam[i][j], i != j

    explicit Context(AlgebraPtr a) : alg(std::move(a)) {
        const int n = alg->n();
        z.push_back(alg->zero());
        for (int i = 1; i <= n; ++i) z.push_back(dunkl_opdam_z(*alg, i));
        gam.assign(static_cast<std::size_t>(n + 1), std::vector<Element>(static_cast<std::size_t>(n + 1), alg->zero()));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) gam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gamma(*alg, i, j);
    }
    int n() const { return alg->n(); }
    int m() const { return alg->m(); }
    const Element& Z(int i) const { return z[static_cast<std::size_t>(i)]; }
    const Element& G(int i, int j) const { return gam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    // gamma_j = gamma_{1j}
    const Element& G(int j) const { return G(1, j); }
    // sum_{lo < t < hi} gamma_t
    Element gsum(int lo, int hi) const {
        Element s = alg->zero();
        for (int t = std::max(lo + 1, 2); t < hi; ++t) s += G(t);
        return s;
    }
};

std::vector<Case> hecke_cases(const std::shared_ptr<Context>& ctx) {
    std::vector<Case> cases;
    const int n = ctx->n();
    const auto& A = *ctx->alg;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            cases.push_back({"z_commute" + idx({{"i", i}, {"j", j}}),
                             [ctx, i, j] { return commutator(ctx->Z(i), ctx->Z(j)).is_zero(); }});
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k)
            for (int l = 1; l < ctx->m(); ++l)
                cases.push_back({"z_torus_commute" + idx({{"i", i}, {"k", k}, {"l", l}}), [ctx, i, k, l] {
                                     return commutator(ctx->Z(i), ctx->alg->g(k, l)).is_zero();
                                 }});
    for (int i = 1; i < n; ++i)
        cases.push_back({"z_simple_reflection" + idx({{"i", i}}), [ctx, i, &A] {
                             const Element s = A.s(i, i + 1);
                             return ctx->Z(i) * s == s * ctx->Z(i + 1) - A.kappa() * xi(A, i, i + 1);
                         }});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < n; ++j) {
            if (i == j || i == j + 1) continue;
            cases.push_back({"z_far_reflection" + idx({{"i", i}, {"j", j}}), [ctx, i, j] {
                                 const Element s = ctx->alg->s(j, j + 1);
                                 return ctx->Z(i) * s == s * ctx->Z(i);
                             }});
        }
    return cases;
}

std::vector<Case> gamma_cases(const std::shared_ptr<Context>& ctx) {
    std::vector<Case> cases;
    const int n = ctx->n();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            cases.push_back({"gamma_symmetric" + idx({{"i", i}, {"j", j}}),
                             [ctx, i, j] { return ctx->G(i, j) == ctx->G(j, i); }});

    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
    int perm_index = 0;
    do {
        const WElement w = WElement::from_permutation(sigma);
        const std::vector<int> sig = sigma;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                cases.push_back({"gamma_conjugation" + idx({{"perm", perm_index}, {"i", i}, {"j", j}}),
                                 [ctx, w, sig, i, j] {
                                     const auto& A = *ctx->alg;
                                     const Element lhs = A.group(w) * ctx->G(i, j) * A.group(w_inverse(w, A.m()));
                                     return lhs == ctx->G(sig[static_cast<std::size_t>(i - 1)],
                                                          sig[static_cast<std::size_t>(j - 1)]);
                                 }});
        ++perm_index;
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    // gamma_u z_v, u > 1
    for (int u = 2; u <= n; ++u)
        for (int v = 1; v <= n; ++v)
            cases.push_back({"gamma_z_exchange" + idx({{"u", u}, {"v", v}}), [ctx, u, v] {
                                 const auto& c = *ctx;
                                 const Element lhs = c.G(u) * c.Z(v);
                                 Element rhs = c.alg->zero();
                                 if (v == 1)
                                     rhs = c.Z(u) * c.G(u) + c.G(u) * c.gsum(1, u + 1);
                                 else if (u < v)
                                     rhs = c.Z(v) * c.G(u);
                                 else if (u == v)
                                     rhs = (c.Z(1) - c.gsum(1, u + 1)) * c.G(u);
                                 else
                                     rhs = c.Z(v) * c.G(u) + c.G(v) * c.G(u) - c.G(u) * c.G(v);
                                 return lhs == rhs;
                             }});

    // u, v != 1
    for (int u = 2; u <= n; ++u)
        for (int v = 2; v <= n; ++v) {
            cases.push_back({"gamma_shift_left" + idx({{"u", u}, {"v", v}}), [ctx, u, v] {
                                 const auto& c = *ctx;
                                 const Element lhs = c.G(u) * (c.Z(v) + c.G(v));
                                 if (u < v) return lhs == (c.Z(v) + c.G(u, v)) * c.G(u);
                                 if (u == v) return lhs == (c.Z(1) - c.gsum(1, u)) * c.G(u);
                                 return lhs == (c.Z(v) + c.G(v)) * c.G(u);
                             }});
            cases.push_back({"gamma_shift_right" + idx({{"u", u}, {"v", v}}), [ctx, u, v] {
                                 const auto& c = *ctx;
                                 const Element lhs = (c.Z(v) + c.G(v)) * c.G(u);
                                 if (u < v) return lhs == c.G(u) * (c.Z(v) + c.G(u, v));
                                 if (u == v) return lhs == c.G(u) * (c.Z(1) - c.gsum(1, u));
                                 return lhs == c.G(u) * (c.Z(v) + c.G(v));
                             }});
        }

    // Tail-sum consequence, 1 <= k < u.
    for (int u = 2; u <= n; ++u)
        for (int k = 1; k < u; ++k)
            cases.push_back({"gamma_tail_sum" + idx({{"k", k}, {"u", u}}), [ctx, u, k] {
                                 const auto& c = *ctx;
                                 const Element zu = c.Z(u) + c.G(u);
                                 const Element lhs = zu * c.gsum(k, u + 1);
                                 const Element mid = c.G(u) * (c.Z(1) - c.gsum(1, u)) + zu * c.gsum(k, u);
                                 const Element rhs = c.G(u) * c.Z(1) - c.G(u) * c.gsum(1, k + 1) + c.gsum(k, u) * c.Z(u);
                                 return lhs == mid && lhs == rhs;
                             }});
    return cases;
}

std::vector<Case> zcomm_cases(const std::shared_ptr<Context>& ctx) {
    std::vector<Case> cases;
    const int n = ctx->n();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            cases.push_back({"x_z_commutator" + idx({{"i", i}, {"j", j}}), [ctx, i, j] {
                                 const auto& c = *ctx;
                                 const auto& A = *c.alg;
                                 const Element x = A.x(i);
                                 Element rhs = A.zero();
                                 if (i == j) {
                                     rhs -= A.t() * x;
                                     for (int k = 1; k < i; ++k) rhs -= x * c.G(k, i);
                                     for (int k = i + 1; k <= c.n(); ++k) rhs -= c.G(i, k) * x;
                                 } else if (i < j) {
                                     rhs = c.G(i, j) * x;
                                 } else {
                                     rhs = x * c.G(i, j);
                                 }
                                 return commutator(x, c.Z(j)) == rhs;
                             }});
            cases.push_back({"y_z_commutator" + idx({{"i", i}, {"j", j}}), [ctx, i, j] {
                                 const auto& c = *ctx;
                                 const auto& A = *c.alg;
                                 const Element y = A.y(i);
                                 Element rhs = A.zero();
                                 if (i == j) {
                                     rhs += A.t() * y;
                                     for (int k = 1; k < i; ++k) rhs += c.G(k, i) * y;
                                     for (int k = i + 1; k <= c.n(); ++k) rhs += y * c.G(i, k);
                                 } else if (i < j) {
                                     rhs = -(y * c.G(i, j));
                                 } else {
                                     rhs = -(c.G(i, j) * y);
                                 }
                                 return commutator(y, c.Z(j)) == rhs;
                             }});
        }
    return cases;
}

void for_each_subset(int lo, int hi, int size, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == size) {
            f(cur);
            return;
        }
        for (int v = start; v <= hi; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(lo);
}

Element z_product(const Context& c, const std::vector<int>& J) {
    Element r = c.alg->one();
    for (int j : J) r = r * c.Z(j);
    return r;
}

Element p_sum(const Context& c, const std::vector<int>& J, bool allow_no_gamma) {
    Element total = c.alg->zero();
    const std::size_t r = J.size();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        // bit set -> index goes to the gamma factors
        if (mask == 0 && !allow_no_gamma) continue;
        Element term = c.alg->one();
        for (std::size_t i = 0; i < r; ++i)
            if (!(mask & (1u << i))) term = term * c.Z(J[i]);
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (1u << i)) term = term * c.G(J[i]);
        total += term;
    }
    return total;
}

std::vector<Case> p_subset_cases(const std::shared_ptr<Context>& ctx, int r) {
    std::vector<Case> cases;
    for_each_subset(2, ctx->n(), r, [&](const std::vector<int>& J) {
        const std::string tag = "[J=" + set_str(J) + "]";
        cases.push_back({"tilde_P_split" + tag, [ctx, J] {
                             const auto& c = *ctx;
                             return p_sum(c, J, true) == p_sum(c, J, false) + z_product(c, J);
                         }});
        cases.push_back({"tilde_P_factorization" + tag, [ctx, J] {
                             const auto& c = *ctx;
                             Element prod = c.alg->one();
                             for (int j : J) prod = prod * (c.Z(j) + c.G(j));
                             return p_sum(c, J, true) == prod;
                         }});
        cases.push_back({"P_recursion" + tag, [ctx, J] {
                             const auto& c = *ctx;
                             const std::vector<int> rest(J.begin() + 1, J.end());
                             const Element rest_p = rest.empty() ? c.alg->zero() : p_sum(c, rest, false);
                             const Element rhs = (c.Z(J[0]) + c.G(J[0])) * rest_p + c.G(J[0]) * z_product(c, rest);
                             return p_sum(c, J, false) == rhs;
                         }});
        cases.push_back({"x1_commutator_P" + tag, [ctx, J] {
                             const auto& c = *ctx;
                             const Element x1 = c.alg->x(1);
                             return commutator(x1, z_product(c, J)) == p_sum(c, J, false) * x1;
                         }});
        cases.push_back({"x1_commutator_tilde_P" + tag, [ctx, J] {
                             const auto& c = *ctx;
                             const Element x1 = c.alg->x(1);
                             return x1 * z_product(c, J) == p_sum(c, J, true) * x1;
                         }});
    });
    return cases;
}

Case key_sum_case(const std::shared_ptr<Context>& ctx, int r, int k) {
    return {"key_sum_identity" + idx({{"r", r}, {"k", k}}), [ctx, r, k] {
                const auto& c = *ctx;
                const auto& A = *c.alg;
                const int n = c.n();
                const Element head = c.Z(1) - c.gsum(k, n + 1);
                const Element low = c.gsum(1, k + 1);
                Element lhs = A.zero();
                Element rhs = A.zero();
                for_each_subset(k + 1, n, r, [&](const std::vector<int>& J) {
                    lhs += head * p_sum(c, J, true);
                    rhs += c.Z(1) * z_product(c, J);
                    rhs += low * p_sum(c, J, false);
                });
                for_each_subset(k + 1, n, r + 1, [&](const std::vector<int>& J) { rhs -= p_sum(c, J, false); });
                return lhs == rhs;
            }};
}

void check_rk(int n, int r, int k) {
    if (r < 1 || r > n - 1) throw std::invalid_argument("r must satisfy 1 <= r <= n-1");
    if (k < 1 || k >= n) throw std::invalid_argument("k must satisfy 1 <= k < n");
}

std::vector<Case> plemma_cases(const std::shared_ptr<Context>& ctx, const SuiteOptions& opts) {
    const int n = ctx->n();
    if (opts.r) check_rk(n, *opts.r, opts.k.value_or(1));
    if (opts.k) check_rk(n, opts.r.value_or(1), *opts.k);
    std::vector<Case> cases;
    for (int r = 1; r <= n - 1; ++r) {
        if (opts.r && *opts.r != r) continue;
        for (auto& c : p_subset_cases(ctx, r)) cases.push_back(std::move(c));
        for (int k = 1; k < n; ++k)
            if (!opts.k || *opts.k == k) cases.push_back(key_sum_case(ctx, r, k));
    }
    return cases;
}

std::vector<Case> central_cases(const std::shared_ptr<Context>& ctx, const SuiteOptions& opts) {
    const int n = ctx->n();
    if (opts.r && (*opts.r < 1 || *opts.r > n)) throw std::invalid_argument("r must satisfy 1 <= r <= n");
    std::vector<Case> cases;
    for (int r = 1; r <= n; ++r) {
        if (opts.r && *opts.r != r) continue;
        auto S = std::make_shared<Element>(sym_poly_S(*ctx->alg, r));
        const auto& A = *ctx->alg;
        cases.push_back({"x1_commutator_t_divisible" + idx({{"r", r}}),
                         [ctx, S] { return commutator(ctx->alg->x(1), *S).is_t_divisible(); }});
        for (int i = 1; i <= n && A.m() > 1; ++i)
            cases.push_back({"torus_commutes" + idx({{"r", r}, {"i", i}}),
                             [ctx, S, i] { return commutator(ctx->alg->g(i), *S).is_zero(); }});
        for (int i = 1; i < n; ++i)
            cases.push_back({"reflection_commutes" + idx({{"r", r}, {"i", i}}),
                             [ctx, S, i] { return commutator(ctx->alg->s(i, i + 1), *S).is_zero(); }});
        for (int i = 1; i <= n; ++i) {
            cases.push_back({"x_commutator_t_divisible" + idx({{"r", r}, {"i", i}}),
                             [ctx, S, i] { return commutator(ctx->alg->x(i), *S).is_t_divisible(); }});
            cases.push_back({"y_commutator_t_divisible" + idx({{"r", r}, {"i", i}}),
                             [ctx, S, i] { return commutator(ctx->alg->y(i), *S).is_t_divisible(); }});
        }
    }
    return cases;
}

std::vector<Case> euler_cases(const std::shared_ptr<Context>& ctx) {
    std::vector<Case> cases;
    cases.push_back({"sum_z_equals_euler", [ctx] {
                         Element s = ctx->alg->zero();
                         for (int i = 1; i <= ctx->n(); ++i) s += ctx->Z(i);
                         return s == euler_element(*ctx->alg);
                     }});
    for (int i = 1; i <= ctx->n(); ++i)
        for (int l = 1; l < ctx->m(); ++l)
            cases.push_back({"z_torus_coefficient" + idx({{"i", i}, {"l", l}}), [ctx, i, l] {
                                 const auto& A = *ctx->alg;
                                 PBWMonomial mono;
                                 mono.w = WElement::g(A.n(), A.m(), i, l);
                                 return ctx->Z(i).coefficient(mono) == -(A.c(l) * A.eta_pow(-l));
                             }});
    return cases;
}

std::vector<Case> psi_cases(const std::shared_ptr<Context>& ctx) {
    std::vector<Case> cases;
    const auto& A = *ctx->alg;
    const int n = A.n();
    std::vector<std::pair<std::string, Element>> gens;
    for (int i = 1; i <= n; ++i) gens.emplace_back("x" + std::to_string(i), A.x(i));
    for (int i = 1; i <= n; ++i) gens.emplace_back("y" + std::to_string(i), A.y(i));
    for (int i = 1; i <= n && A.m() > 1; ++i) gens.emplace_back("g" + std::to_string(i), A.g(i));
    for (int i = 1; i < n; ++i) gens.emplace_back("s" + std::to_string(i), A.s(i, i + 1));
    std::vector<std::pair<std::string, Element>> params;
    params.emplace_back("t", A.scalar(A.t()));
    params.emplace_back("kappa", A.scalar(A.kappa()));
    for (int l = 1; l < A.m(); ++l) params.emplace_back("c" + std::to_string(l), A.scalar(A.c(l)));

    for (const auto& [name, e] : gens)
        cases.push_back({"psi_squared[" + name + "]", [e] { return psi(psi(e)) == e; }});
    for (const auto& [name, e] : params)
        cases.push_back({"psi_squared[" + name + "]", [e] { return psi(psi(e)) == e; }});
    cases.push_back({"psi_t", [ctx] {
                         const auto& B = *ctx->alg;
                         return psi(B.scalar(B.t())) == B.scalar(-B.t());
                     }});
    for (int i = 1; i <= n; ++i)
        cases.push_back({"psi_z" + idx({{"i", i}}), [ctx, i, n] { return psi(ctx->Z(i)) == ctx->Z(n - i + 1); }});
    for (const auto& [na, a] : gens)
        for (const auto& [nb, b] : gens)
            cases.push_back({"psi_multiplicative[" + na + "," + nb + "]",
                             [a, b] { return psi(a * b) == psi(a) * psi(b); }});
    return cases;
}

std::vector<Case> do_cases(const std::shared_ptr<Context>& ctx) {
    std::vector<Case> cases;
    for (int i = 1; i <= ctx->n(); ++i)
        cases.push_back({"do_forms_agree" + idx({{"i", i}}),
                         [ctx, i] { return ctx->Z(i) == dunkl_opdam_z_alt(*ctx->alg, i); }});
    return cases;
}

}  // namespace

Report run_suite(const std::string& name, int m, int n, const SuiteOptions& opts) {
    auto ctx = std::make_shared<Context>(CherednikAlgebra::create(m, n));
    std::vector<Case> cases;
    if (name == "hecke")
        cases = hecke_cases(ctx);
    else if (name == "gamma")
        cases = gamma_cases(ctx);
    else if (name == "zcomm")
        cases = zcomm_cases(ctx);
    else if (name == "plemmas")
        cases = plemma_cases(ctx, opts);
    else if (name == "central")
        cases = central_cases(ctx, opts);
    else if (name == "euler")
        cases = euler_cases(ctx);
    else if (name == "psi")
        cases = psi_cases(ctx);
    else if (name == "do-equality")
        cases = do_cases(ctx);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    return run_cases(name, cases, opts);
}

Report check_relation_suite(int m, int n, const SuiteOptions& opts) {
    Report rep = run_suite("hecke", m, n, opts);
    rep.append(run_suite("gamma", m, n, opts));
    rep.append(run_suite("zcomm", m, n, opts));
    rep.suite = "relations";
    return rep;
}

Report p_lemma_report(int m, int n, int r, int k, const SuiteOptions& opts) {
    check_rk(n, r, k);
    SuiteOptions o = opts;
    o.r = r;
    o.k = k;
    return run_suite("plemmas", m, n, o);
}

bool check_P_lemmas(int m, int n, int r, int k) { return p_lemma_report(m, n, r, k).all_pass(); }

Element p_element(const CherednikAlgebra& alg, const std::vector<int>& J) {
    Context c(alg.shared_from_this());
    return J.empty() ? c.alg->zero() : p_sum(c, J, false);
}

Element p_tilde_element(const CherednikAlgebra& alg, const std::vector<int>& J) {
    Context c(alg.shared_from_this());
    return p_sum(c, J, true);
}

}  // namespace rcb
