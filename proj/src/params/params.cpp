#include "rcb/params.hpp"

#include <string>

namespace rcb {

ParamSpec ParamSpec::numeric(int m, Cyclotomic kappa, std::vector<Cyclotomic> c) {
    if (m < 1) throw InvalidParameters("m must be >= 1");
    if (static_cast<int>(c.size()) != m - 1)
        throw InvalidParameters("expected exactly m-1 = " + std::to_string(m - 1) + " c values, got " +
                                std::to_string(c.size()));
    const int order = kappa.order();
    if (order % m != 0)
        throw InvalidParameters("zeta order " + std::to_string(order) + " is not a multiple of m=" + std::to_string(m));
    for (const auto& v : c)
        if (v.order() != order) throw InvalidParameters("all parameters must live in the same Q(zeta_N)");
    ParamSpec s;
    s.m_ = m;
    s.mode_ = ParamMode::numeric;
    s.kappa_ = std::move(kappa);
    s.c_ = std::move(c);
    return s;
}

ParamSpec ParamSpec::generic(int m, int d) {
    if (m < 1) throw InvalidParameters("m must be >= 1");
    if (d < 1 || m % d != 0)
        throw InvalidParameters("d=" + std::to_string(d) + " does not divide m=" + std::to_string(m));
    ParamSpec s;
    s.m_ = m;
    s.mode_ = ParamMode::generic;
    s.generic_d_ = d;
    return s;
}

void ParamSpec::require_numeric() const {
    if (mode_ != ParamMode::numeric) throw std::logic_error("parameter values requested from a generic spec");
}

const FieldPtr& ParamSpec::field() const {
    require_numeric();
    return kappa_->field();
}

const Cyclotomic& ParamSpec::kappa() const {
    require_numeric();
    return *kappa_;
}

const std::vector<Cyclotomic>& ParamSpec::c_values() const {
    require_numeric();
    return c_;
}

Cyclotomic ParamSpec::eta() const {
    require_numeric();
    return Cyclotomic::zeta_power(field(), field()->order() / m_);
}

bool operator==(const ParamSpec& a, const ParamSpec& b) {
    if (a.m_ != b.m_ || a.mode_ != b.mode_) return false;
    if (a.mode_ == ParamMode::generic) return a.generic_d_ == b.generic_d_;
    return *a.kappa_ == *b.kappa_ && a.c_ == b.c_;
}

nlohmann::json DerivedParams::to_json() const {
    auto strings = [](const std::vector<Cyclotomic>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& x : v) arr.push_back(x.to_string());
        return arr;
    };
    return {{"H", strings(H)}, {"a", strings(a)}, {"C", C.to_string()}, {"h", h.to_string()}};
}

namespace {

DerivedParams derive_from_H(std::vector<Cyclotomic> H, const Cyclotomic& kappa) {
    const int m = static_cast<int>(H.size());
    const FieldPtr& field = kappa.field();
    std::vector<Cyclotomic> a;
    Cyclotomic running = Cyclotomic::zero(field);
    a.push_back(running);
    for (int i = 1; i < m; ++i) {
        running += H[static_cast<std::size_t>(i)];
        a.push_back(running);
    }
    Cyclotomic C = Cyclotomic::zero(field);
    for (int j = 1; j < m; ++j) C += H[static_cast<std::size_t>(j)] * Rational(j - m);
    return {std::move(H), std::move(a), std::move(C), -kappa};
}

}  // namespace

DerivedParams c_to_H(const ParamSpec& spec) {
    const int m = spec.m();
    const FieldPtr& field = spec.field();
    const int step = field->order() / m;  // eta^k = zeta_N^{k*step}
    auto eta_pow = [&](long k) { return Cyclotomic::zeta_power(field, k * step); };

    std::vector<Cyclotomic> b(static_cast<std::size_t>(m), Cyclotomic::zero(field));
    for (int l = 1; l < m; ++l) b[static_cast<std::size_t>(l)] = -(spec.c(l) * (Cyclotomic::one(field) - eta_pow(-l)));

    std::vector<Cyclotomic> H;
    const Rational inv_m(1, m);
    for (int j = 0; j < m; ++j) {
        Cyclotomic acc = Cyclotomic::zero(field);
        for (int l = 1; l < m; ++l) acc += eta_pow(static_cast<long>(l) * j) * b[static_cast<std::size_t>(l)];
        H.push_back(acc * inv_m);
    }
    return derive_from_H(std::move(H), spec.kappa());
}

std::vector<Cyclotomic> H_to_c(const std::vector<Cyclotomic>& H) {
    const int m = static_cast<int>(H.size());
    if (m < 2) throw InvalidParameters("H_to_c needs m >= 2");
    const FieldPtr& field = H.front().field();
    if (field->order() % m != 0) throw InvalidParameters("H values must live in a field containing eta");
    Cyclotomic total = Cyclotomic::zero(field);
    for (const auto& h : H) total += h;
    if (!total.is_zero()) throw InvalidParameters("H must sum to zero, got " + total.to_string());

    const int step = field->order() / m;
    auto eta_pow = [&](long k) { return Cyclotomic::zeta_power(field, k * step); };
    std::vector<Cyclotomic> c;
    for (int l = 1; l < m; ++l) {
        Cyclotomic acc = Cyclotomic::zero(field);
        for (int j = 0; j < m; ++j) acc += eta_pow(-static_cast<long>(l) * j) * H[static_cast<std::size_t>(j)];
        c.push_back(-(acc / (Cyclotomic::one(field) - eta_pow(-l))));
    }
    return c;
}

bool check_beta_identity(const ParamSpec& spec, int beta) {
    const int m = spec.m();
    if (beta < 0 || beta >= m) throw InvalidParameters("beta must lie in [0, m-1]");
    const DerivedParams d = c_to_H(spec);
    const Cyclotomic eta = spec.eta();
    Cyclotomic lhs = Cyclotomic::zero(spec.field());
    for (int l = 1; l < m; ++l) lhs -= spec.c(l) * eta.pow(static_cast<long>(beta) * l);
    const Cyclotomic rhs = d.C + d.a[static_cast<std::size_t>(beta)] * Rational(m);
    return lhs == rhs;
}

ParamSpec scale_params(const ParamSpec& spec, const Cyclotomic& a) {
    if (a.is_zero()) throw InvalidParameters("scaling factor must be nonzero");
    std::vector<Cyclotomic> c;
    for (const auto& v : spec.c_values()) c.push_back(v * a);
    return ParamSpec::numeric(spec.m(), spec.kappa() * a, std::move(c));
}

LinearExponent generic_exponent(int beta, int ct, int m) {
    if (beta < 0 || beta >= m) throw InvalidParameters("beta must lie in [0, m-1]");
    LinearExponent e = LinearExponent::zero(m);
    e.kappa_coeff = -ct;
    for (int j = 1; j <= beta; ++j) e.h_coeffs[static_cast<std::size_t>(j - 1)] = 1;
    return e;
}

bool is_admissible_for(const ParamSpec& spec, int d) {
    if (d < 1 || spec.m() % d != 0) return false;
    if (!spec.is_numeric()) return spec.generic_divisor() % d == 0;
    for (int l = 1; l < spec.m(); ++l)
        if (l % d != 0 && !spec.c(l).is_zero()) return false;
    return true;
}

}  // namespace rcb
