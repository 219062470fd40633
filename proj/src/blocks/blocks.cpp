#include "rcb/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rcb {

std::strong_ordering operator<=>(const BlockInvariant& a, const BlockInvariant& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    if (auto c = std::lexicographical_compare_three_way(a.numeric.begin(), a.numeric.end(), b.numeric.begin(),
                                                        b.numeric.end());
        c != 0)
        return c;
    return std::lexicographical_compare_three_way(a.generic.begin(), a.generic.end(), b.generic.begin(),
                                                  b.generic.end());
}

nlohmann::json BlockInvariant::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    if (mode == ParamMode::numeric)
        for (const auto& e : numeric) arr.push_back(e.to_string());
    else
        for (const auto& e : generic) arr.push_back(e.to_string());
    return arr;
}

std::string BlockInvariant::to_string() const {
    std::string out = "{";
    const auto arr = to_json();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) out += ", ";
        out += arr[i].get<std::string>();
    }
    return out + "}";
}

// --- invariants -----------------------------------------------------------

InvariantEvaluator::InvariantEvaluator(const ParamSpec& params) : params_(params) {
    if (params_.is_numeric()) a_ = c_to_H(params_).a;
}

BlockInvariant InvariantEvaluator::operator()(const Multipartition& lambda) const {
    const int m = params_.m();
    if (lambda.m() != m)
        throw InvalidParameters("multipartition has " + std::to_string(lambda.m()) + " components but m=" +
                                std::to_string(m));
    BlockInvariant inv;
    inv.mode = params_.mode();
    if (params_.is_numeric()) {
        const Cyclotomic& kappa = params_.kappa();
        for (const Box& b : boxes(lambda))
            inv.numeric.push_back(a_[static_cast<std::size_t>(b.component)] - kappa * Rational(content(b)));
        std::sort(inv.numeric.begin(), inv.numeric.end());
    } else {
        // H_{j+p} = H_j on the restricted subspace, so a_beta = a_{beta mod p}.
        const int period = m / params_.generic_divisor();
        for (const Box& b : boxes(lambda))
            inv.generic.push_back(generic_exponent(b.component % period, content(b), m));
        std::sort(inv.generic.begin(), inv.generic.end());
    }
    return inv;
}

BlockInvariant block_invariant(const Multipartition& lambda, const ParamSpec& params) {
    return InvariantEvaluator(params)(lambda);
}

bool same_block(const Multipartition& lambda, const Multipartition& mu, const ParamSpec& params) {
    if (lambda.size() != mu.size())
        throw InvalidParameters("same_block: sizes differ (" + std::to_string(lambda.size()) + " vs " +
                                std::to_string(mu.size()) + ")");
    InvariantEvaluator eval(params);
    return eval(lambda) == eval(mu);
}

std::vector<BlockInvariant> compute_invariants_serial(std::span<const Multipartition> lambdas,
                                                      const ParamSpec& params) {
    InvariantEvaluator eval(params);
    std::vector<BlockInvariant> out;
    out.reserve(lambdas.size());
    for (const auto& lambda : lambdas) out.push_back(eval(lambda));
    return out;
}

std::vector<BlockInvariant> compute_invariants_parallel(std::span<const Multipartition> lambdas,
                                                        const ParamSpec& params, int threads) {
    InvariantEvaluator eval(params);
    for (const auto& lambda : lambdas)
        if (lambda.m() != params.m()) throw InvalidParameters("multipartition component count does not match m");
    std::vector<BlockInvariant> out(lambdas.size());
    const long count = static_cast<long>(lambdas.size());
#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
#else
    (void)threads;
#endif
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = eval(lambdas[static_cast<std::size_t>(i)]);
    return out;
}

// --- partitions -----------------------------------------------------------

nlohmann::json label_to_json(const ModuleLabel& label) {
    if (const auto* mp = std::get_if<Multipartition>(&label)) return mp->to_json();
    const auto& ol = std::get<OrbitLabel>(label);
    return {{"orbit_rep", ol.representative.to_json()}, {"epsilon", ol.epsilon}};
}

std::string label_to_string(const ModuleLabel& label) {
    if (const auto* mp = std::get_if<Multipartition>(&label)) return mp->to_string();
    const auto& ol = std::get<OrbitLabel>(label);
    return "({" + ol.representative.to_string() + "}, " + std::to_string(ol.epsilon) + ")";
}

nlohmann::json BlockPartition::to_json() const {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& cls : classes) {
        nlohmann::json b = nlohmann::json::array();
        for (std::size_t idx : cls) b.push_back(label_to_json(labels[idx]));
        blocks.push_back(b);
    }
    return {{"group", {{"m", group.m}, {"d", group.d}, {"n", group.n}}},
            {"mode", mode == ParamMode::numeric ? "numeric" : "generic"},
            {"blocks", blocks}};
}

namespace {

std::vector<BlockInvariant> invariants_for(std::span<const Multipartition> lambdas, const ParamSpec& params,
                                           const PartitionOptions& opts) {
    return opts.parallel ? compute_invariants_parallel(lambdas, params, opts.threads)
                         : compute_invariants_serial(lambdas, params);
}

// Class id per entry, ids assigned in order of first appearance.
std::vector<std::size_t> class_ids(const std::vector<BlockInvariant>& invs, std::size_t& num_classes) {
    std::map<BlockInvariant, std::size_t> ids;
    std::vector<std::size_t> out;
    out.reserve(invs.size());
    for (const auto& inv : invs) {
        auto [it, inserted] = ids.try_emplace(inv, ids.size());
        out.push_back(it->second);
    }
    num_classes = ids.size();
    return out;
}

void check_m_n(int m, int n) {
    if (m < 1) throw InvalidParameters("m must be >= 1");
    if (n < 0) throw InvalidParameters("n must be >= 0");
}

}  // namespace

BlockPartition block_partition_g_m_1_n(int m, int n, const ParamSpec& params, const PartitionOptions& opts) {
    check_m_n(m, n);
    if (params.m() != m) throw InvalidParameters("parameters were given for m=" + std::to_string(params.m()));
    const auto lambdas = enumerate_multipartitions(m, n);
    const auto invs = invariants_for(lambdas, params, opts);
    std::size_t num_classes = 0;
    const auto ids = class_ids(invs, num_classes);

    BlockPartition bp;
    bp.group = {m, 1, n};
    bp.mode = params.mode();
    bp.labels.assign(lambdas.begin(), lambdas.end());
    bp.classes.resize(num_classes);
    for (std::size_t i = 0; i < ids.size(); ++i) bp.classes[ids[i]].push_back(i);
    return bp;
}

BlockPartition block_partition_g_m_d_n(int m, int d, int n, const ParamSpec& params, const PartitionOptions& opts) {
    check_m_n(m, n);
    if (d < 1 || m % d != 0)
        throw NotADivisor("d=" + std::to_string(d) + " does not divide m=" + std::to_string(m));
    if (d == 1) return block_partition_g_m_1_n(m, n, params, opts);
    if (n < 2)
        throw UnsupportedGroup("n=" + std::to_string(n) + " is excluded for d > 1; G(m,d,n) blocks require n > 2, "
                               "or n = 2 and d odd");
    if (n == 2 && d % 2 == 0)
        throw UnsupportedGroup("n=2 with even d is excluded; G(m,d,n) blocks require n > 2, or n = 2 and d odd");
    if (params.m() != m) throw InvalidParameters("parameters were given for m=" + std::to_string(params.m()));

    ParamSpec effective = params.is_numeric() ? params : ParamSpec::generic(m, d);
    if (params.is_numeric()) {
        for (int l = 1; l < m; ++l) {
            if (l % d != 0 && !params.c(l).is_zero())
                throw InvalidParameters("c_" + std::to_string(l) + " = " + params.c(l).to_string() +
                                        " must be 0 for G(" + std::to_string(m) + "," + std::to_string(d) + "," +
                                        std::to_string(n) + ") because d does not divide " + std::to_string(l));
        }
    }

    const auto lambdas = enumerate_multipartitions(m, n);
    const auto invs = invariants_for(lambdas, effective, opts);
    std::size_t num_classes = 0;
    const auto ids = class_ids(invs, num_classes);
    std::vector<std::size_t> class_size(num_classes, 0);
    for (std::size_t id : ids) ++class_size[id];

    std::map<Multipartition, std::size_t> index_of;
    for (std::size_t i = 0; i < lambdas.size(); ++i) index_of.emplace(lambdas[i], i);

    // Representatives are trusted only after checking the invariant is constant on orbits.
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const std::size_t j = index_of.at(delta_action(lambdas[i], d));
        if (!(invs[j] == invs[i]))
            throw std::logic_error("block invariant is not constant on the C_d-orbit of " + lambdas[i].to_string());
    }

    BlockPartition bp;
    bp.group = {m, d, n};
    bp.mode = params.mode();
    // Class key: the G(m,1,n) class id, plus epsilon+1 for labels that split by epsilon.
    std::map<std::pair<std::size_t, int>, std::size_t> class_of_key;
    std::map<Multipartition, bool> seen_rep;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        const Orbit orbit = orbit_and_stabilizer(lambdas[i], d);
        if (!seen_rep.try_emplace(orbit.representative(), true).second) continue;
        const std::size_t cls = ids[i];
        const bool splits = is_d_stuttering(lambdas[i], d) && class_size[cls] == 1;
        for (int eps = 0; eps < orbit.stabilizer_order; ++eps) {
            const std::size_t label_index = bp.labels.size();
            bp.labels.emplace_back(OrbitLabel{orbit.representative(), eps});
            const std::pair<std::size_t, int> key{cls, splits ? eps + 1 : 0};
            auto [it, inserted] = class_of_key.try_emplace(key, bp.classes.size());
            if (inserted) bp.classes.emplace_back();
            bp.classes[it->second].push_back(label_index);
        }
    }
    return bp;
}

// --- eigenvalues ----------------------------------------------------------

std::vector<Cyclotomic> baby_verma_eigenvalues(const Multipartition& lambda, const StandardTableau& t,
                                               const ParamSpec& params) {
    if (!(t.shape == lambda)) throw InvalidParameters("tableau is not on " + lambda.to_string());
    if (lambda.m() != params.m()) throw InvalidParameters("multipartition/parameter m mismatch");
    const int m = params.m();
    const Cyclotomic eta = params.eta();
    const Cyclotomic& kappa = params.kappa();
    std::vector<Cyclotomic> out;
    for (int i = 1; i <= t.size(); ++i) {
        const BoxData bd = tableau_box_data(t, i);
        Cyclotomic ev = -(kappa * Rational(static_cast<long>(m) * bd.content));
        for (int l = 1; l < m; ++l) ev -= params.c(l) * eta.pow(static_cast<long>(l) * bd.component);
        out.push_back(std::move(ev));
    }
    return out;
}

std::vector<Cyclotomic> eigenvalue_multiset_from_residues(const Multipartition& lambda, const ParamSpec& params) {
    if (lambda.m() != params.m()) throw InvalidParameters("multipartition/parameter m mismatch");
    const int m = params.m();
    const DerivedParams dp = c_to_H(params);
    std::vector<Cyclotomic> out;
    for (const Box& b : boxes(lambda)) {
        out.push_back(dp.C + dp.a[static_cast<std::size_t>(b.component)] * Rational(m) -
                      params.kappa() * Rational(static_cast<long>(m) * content(b)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool scaled_invariant_classes_agree(const Multipartition& lambda, const Multipartition& mu, const ParamSpec& params) {
    auto eigen = [&](const Multipartition& x) {
        auto ev = baby_verma_eigenvalues(x, enumerate_standard_tableaux(x).front(), params);
        std::sort(ev.begin(), ev.end());
        return ev;
    };
    const bool eigen_equal = eigen(lambda) == eigen(mu);
    return eigen_equal == same_block(lambda, mu, params);
}

}  // namespace rcb
