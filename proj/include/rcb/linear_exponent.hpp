#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rcb {

/// Integer linear form kappa_coeff*kappa + sum_j h_coeffs[j-1]*H_j over the
/// free symbols of generic-parameter mode.
struct LinearExponent {
    long kappa_coeff = 0;
    std::vector<long> h_coeffs;  // H_1 .. H_{m-1}

    LinearExponent() = default;
    LinearExponent(long kappa, std::vector<long> h) : kappa_coeff(kappa), h_coeffs(std::move(h)) {}
    static LinearExponent zero(int m) { return {0, std::vector<long>(m > 0 ? m - 1 : 0, 0)}; }

    LinearExponent& operator+=(const LinearExponent& o);
    LinearExponent& operator-=(const LinearExponent& o);
    friend LinearExponent operator+(LinearExponent a, const LinearExponent& b) { return a += b; }
    friend LinearExponent operator-(LinearExponent a, const LinearExponent& b) { return a -= b; }

    friend bool operator==(const LinearExponent&, const LinearExponent&) = default;
    friend auto operator<=>(const LinearExponent&, const LinearExponent&) = default;

    /// e.g. "H1 + H2 - kappa", "0" for the zero form.
    std::string to_string() const;
    std::size_t hash() const;
};

}  // namespace rcb

template <>
struct std::hash<rcb::LinearExponent> {
    std::size_t operator()(const rcb::LinearExponent& e) const { return e.hash(); }
};
