#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rcb/combin.hpp"
#include "rcb/cyclotomic.hpp"
#include "rcb/linear_exponent.hpp"
#include "rcb/params.hpp"

namespace rcb {

/// Thrown for (m, d, n) combinations outside the supported range.
class UnsupportedGroup : public InvalidParameters {
public:
    using InvalidParameters::InvalidParameters;
};

/// The sorted multiset {a_{beta(b)} - kappa*ct(b) : b a box of lambda}. Two
/// baby Vermas share a block exactly when their invariants are equal.
struct BlockInvariant {
    ParamMode mode = ParamMode::numeric;
    std::vector<Cyclotomic> numeric;       // sorted, numeric mode
    std::vector<LinearExponent> generic;   // sorted, generic mode

    std::size_t size() const { return mode == ParamMode::numeric ? numeric.size() : generic.size(); }
    friend bool operator==(const BlockInvariant&, const BlockInvariant&) = default;
    friend std::strong_ordering operator<=>(const BlockInvariant& a, const BlockInvariant& b);

    /// Array of exponent strings, ascending.
    nlohmann::json to_json() const;
    std::string to_string() const;
};

/// Precomputes the a-vector once so invariants for many multipartitions are cheap.
class InvariantEvaluator {
public:
    explicit InvariantEvaluator(const ParamSpec& params);
    BlockInvariant operator()(const Multipartition& lambda) const;
    const ParamSpec& params() const { return params_; }

private:
    ParamSpec params_;
    std::vector<Cyclotomic> a_;  // numeric mode only
};

BlockInvariant block_invariant(const Multipartition& lambda, const ParamSpec& params);

/// Block invariant equality; both multipartitions must have the same size.
bool same_block(const Multipartition& lambda, const Multipartition& mu, const ParamSpec& params);

/// Serial reference kernel.
std::vector<BlockInvariant> compute_invariants_serial(std::span<const Multipartition> lambdas,
                                                      const ParamSpec& params);
/// OpenMP kernel; identical output to the serial one. threads <= 0 uses the runtime default.
std::vector<BlockInvariant> compute_invariants_parallel(std::span<const Multipartition> lambdas,
                                                        const ParamSpec& params, int threads = 0);

struct GroupDescriptor {
    int m = 1;
    int d = 1;
    int n = 0;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

using ModuleLabel = std::variant<Multipartition, OrbitLabel>;

nlohmann::json label_to_json(const ModuleLabel& label);
std::string label_to_string(const ModuleLabel& label);

struct BlockPartition {
    GroupDescriptor group;
    ParamMode mode = ParamMode::numeric;
    std::vector<ModuleLabel> labels;
    /// Indices into labels; classes are ordered by their first label.
    std::vector<std::vector<std::size_t>> classes;

    /// {"group": {...}, "mode": ..., "blocks": [[label, ...], ...]}
    nlohmann::json to_json() const;
};

struct PartitionOptions {
    bool parallel = true;
    int threads = 0;
};

/// Groups P(m,n) by equal block invariant.
BlockPartition block_partition_g_m_1_n(int m, int n, const ParamSpec& params, const PartitionOptions& opts = {});

/// Blocks for G(m,d,n). Numeric parameters must satisfy c_l = 0 whenever d does
/// not divide l; generic parameters are restricted to that subspace.
BlockPartition block_partition_g_m_d_n(int m, int d, int n, const ParamSpec& params,
                                       const PartitionOptions& opts = {});

/// Entry i-1 is the eigenvalue of z_{n-i+1} on w_0 (1 (x) v_T):
/// -kappa*m*ct(T(i)) - sum_l c_l eta^{l beta_T(i)}.
std::vector<Cyclotomic> baby_verma_eigenvalues(const Multipartition& lambda, const StandardTableau& t,
                                               const ParamSpec& params);

/// Sorted {C + m*a_beta - m*kappa*ct : b in lambda}.
std::vector<Cyclotomic> eigenvalue_multiset_from_residues(const Multipartition& lambda, const ParamSpec& params);

/// (eigenvalue multisets equal) == (block invariants equal).
bool scaled_invariant_classes_agree(const Multipartition& lambda, const Multipartition& mu, const ParamSpec& params);

}  // namespace rcb
