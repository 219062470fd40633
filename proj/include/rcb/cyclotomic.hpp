#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rcb/rational.hpp"

namespace rcb {

/// Integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<BigInt>;

/// Phi_N, obtained by dividing x^N - 1 by Phi_d for every proper divisor d of N.
IntPoly cyclotomic_polynomial(int order);

/// Euler's totient.
int euler_phi(int n);

/// Q(zeta_N) as a quotient Q[x]/(Phi_N). Immutable; shared by its elements.
class CyclotomicField {
public:
    explicit CyclotomicField(int order);

    int order() const { return order_; }
    /// phi(N), the dimension over Q.
    int degree() const { return degree_; }
    const IntPoly& modulus() const { return modulus_; }

    /// Remainder of a raw power-basis vector modulo Phi_N, padded to degree().
    std::vector<Rational> reduce(std::vector<Rational> raw) const;

private:
    int order_;
    int degree_;
    IntPoly modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

FieldPtr make_cyclotomic_field(int order);

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1}.
class Cyclotomic {
public:
    Cyclotomic(FieldPtr field, const Rational& value);

    /// Canonicalizes a polynomial in zeta_N of any degree.
    static Cyclotomic from_raw(FieldPtr field, std::vector<Rational> raw);
    static Cyclotomic zero(FieldPtr field) { return Cyclotomic(std::move(field), Rational(0)); }
    static Cyclotomic one(FieldPtr field) { return Cyclotomic(std::move(field), Rational(1)); }
    /// zeta_N^k for any integer k.
    static Cyclotomic zeta_power(FieldPtr field, long k);

    /// Parses `expr := term (('+'|'-') term)*`, `term := rational ['*' 'z' ['^' int]] | 'z' ['^' int]`.
    static Cyclotomic parse(FieldPtr field, std::string_view text);
    static Cyclotomic from_json(FieldPtr field, const nlohmann::json& j);

    const FieldPtr& field() const { return field_; }
    int order() const { return field_->order(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Rational& r);
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
    friend Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    /// Multiplicative inverse via extended Euclid against Phi_N.
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }
    /// Order first, then lexicographic on the coefficient vector.
    friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

    /// Renders in the literal grammar accepted by parse(), e.g. "1/3 + 2/3*z".
    std::string to_string() const;
    /// {"order": N, "coeffs": ["p/q", ...]}
    nlohmann::json to_json() const;
    std::size_t hash() const;

private:
    Cyclotomic(FieldPtr field, std::vector<Rational> coeffs, bool /*canonical*/)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
    void require_same_field(const Cyclotomic& o) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// Remainder of raw modulo Phi_N; the free-function form of Cyclotomic::from_raw.
inline Cyclotomic cyclo_canonicalize(FieldPtr field, std::vector<Rational> raw) {
    return Cyclotomic::from_raw(std::move(field), std::move(raw));
}

inline Cyclotomic cyclo_invert(const Cyclotomic& a) { return a.inverse(); }

}  // namespace rcb

template <>
struct std::hash<rcb::Cyclotomic> {
    std::size_t operator()(const rcb::Cyclotomic& c) const { return c.hash(); }
};
