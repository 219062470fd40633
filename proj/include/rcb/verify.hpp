#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcb/cherednik.hpp"

namespace rcb {

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string error;  // set when the case threw instead of evaluating
};

struct Report {
    std::string suite;
    std::vector<CaseResult> cases;

    bool all_pass() const;
    std::vector<std::string> failures() const;
    /// {"suite": ..., "cases": [{"id": ..., "pass": ...}], "all_pass": ...}
    nlohmann::json to_json() const;
    Report& append(const Report& other);
};

struct SuiteOptions {
    bool parallel = true;
    int threads = 0;
    std::optional<int> r;
    std::optional<int> k;
};

/// hecke, gamma, zcomm, plemmas, central, euler, psi, do-equality.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or out-of-range r/k,
/// ResourceLimitExceeded when (m, n) is past the engine caps.
Report run_suite(const std::string& name, int m, int n, const SuiteOptions& opts = {});

/// hecke + gamma + zcomm.
Report check_relation_suite(int m, int n, const SuiteOptions& opts = {});

/// Requires 1 <= r <= n-1 and 1 <= k < n.
Report p_lemma_report(int m, int n, int r, int k, const SuiteOptions& opts = {});
bool check_P_lemmas(int m, int n, int r, int k);

/// P_J and its t = 0 extension for J a strictly increasing subset of {2..n}.
Element p_element(const CherednikAlgebra& alg, const std::vector<int>& J);
Element p_tilde_element(const CherednikAlgebra& alg, const std::vector<int>& J);

}  // namespace rcb
