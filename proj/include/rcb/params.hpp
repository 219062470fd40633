#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "rcb/cyclotomic.hpp"
#include "rcb/linear_exponent.hpp"

namespace rcb {

/// Thrown for parameter specifications that violate a precondition.
class InvalidParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ParamMode { numeric, generic };

/// t = 0 parameters (kappa; c_1, ..., c_{m-1}) for G(m,1,n), either as exact
/// values in one Q(zeta_N) with m | N, or as formal symbols.
///
/// Generic mode treats kappa and H_1..H_{m-1} as free symbols. A generic spec
/// may be restricted to the G(m,d,n) parameter subspace (c_l = 0 for d not
/// dividing l), in which H is periodic with period m/d.
class ParamSpec {
public:
    static ParamSpec numeric(int m, Cyclotomic kappa, std::vector<Cyclotomic> c);
    static ParamSpec generic(int m, int d = 1);

    int m() const { return m_; }
    ParamMode mode() const { return mode_; }
    bool is_numeric() const { return mode_ == ParamMode::numeric; }

    /// Numeric accessors; throw std::logic_error in generic mode.
    const FieldPtr& field() const;
    const Cyclotomic& kappa() const;
    /// c_1 .. c_{m-1}; c(l) is c_l.
    const std::vector<Cyclotomic>& c_values() const;
    const Cyclotomic& c(int l) const { return c_values().at(static_cast<std::size_t>(l - 1)); }
    /// eta = zeta_N^{N/m}.
    Cyclotomic eta() const;

    /// Generic mode: the divisor d the free symbols are restricted for.
    int generic_divisor() const { return generic_d_; }

    friend bool operator==(const ParamSpec& a, const ParamSpec& b);

private:
    ParamSpec() = default;
    void require_numeric() const;

    int m_ = 1;
    ParamMode mode_ = ParamMode::generic;
    int generic_d_ = 1;
    std::optional<Cyclotomic> kappa_;
    std::vector<Cyclotomic> c_;
};

struct DerivedParams {
    std::vector<Cyclotomic> H;  // H_0 .. H_{m-1}, summing to zero
    std::vector<Cyclotomic> a;  // a_0 = 0, a_i = H_1 + ... + H_i
    Cyclotomic C;               // sum_{j=1}^{m-1} (j - m) H_j
    Cyclotomic h;               // -kappa

    /// {"H": [...], "a": [...], "C": ..., "h": ...} with literal-grammar strings.
    nlohmann::json to_json() const;
};

/// Solves -c_l(1 - eta^{-l}) = sum_j eta^{-lj} H_j by discrete Fourier inversion.
DerivedParams c_to_H(const ParamSpec& spec);

/// Inverse map; H must sum to zero and have m >= 2 entries.
std::vector<Cyclotomic> H_to_c(const std::vector<Cyclotomic>& H);

/// -sum_{l=1}^{m-1} c_l eta^{beta l} == C + m a_beta, evaluated exactly.
bool check_beta_identity(const ParamSpec& spec, int beta);

/// Multiplies kappa and every c_l by a nonzero scalar.
ParamSpec scale_params(const ParamSpec& spec, const Cyclotomic& a);

/// a_beta - kappa*ct as the form: kappa_coeff = -ct, h_coeffs[j-1] = 1 for 1 <= j <= beta.
LinearExponent generic_exponent(int beta, int ct, int m);

/// True iff c_l = 0 whenever d does not divide l.
bool is_admissible_for(const ParamSpec& spec, int d);

}  // namespace rcb
