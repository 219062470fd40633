#include "rcb/linear_exponent.hpp"

#include <functional>
#include <stdexcept>

namespace rcb {

namespace {

void append_term(std::string& out, long coeff, const std::string& symbol) {
    if (coeff == 0) return;
    const long mag = coeff < 0 ? -coeff : coeff;
    if (out.empty()) {
        if (coeff < 0) out += "-";
    } else {
        out += coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += symbol;
}

}  // namespace

LinearExponent& LinearExponent::operator+=(const LinearExponent& o) {
    if (h_coeffs.size() != o.h_coeffs.size()) throw std::invalid_argument("LinearExponent: length mismatch");
    kappa_coeff += o.kappa_coeff;
    for (std::size_t i = 0; i < h_coeffs.size(); ++i) h_coeffs[i] += o.h_coeffs[i];
    return *this;
}

LinearExponent& LinearExponent::operator-=(const LinearExponent& o) {
    if (h_coeffs.size() != o.h_coeffs.size()) throw std::invalid_argument("LinearExponent: length mismatch");
    kappa_coeff -= o.kappa_coeff;
    for (std::size_t i = 0; i < h_coeffs.size(); ++i) h_coeffs[i] -= o.h_coeffs[i];
    return *this;
}

std::string LinearExponent::to_string() const {
    std::string out;
    for (std::size_t j = 0; j < h_coeffs.size(); ++j) append_term(out, h_coeffs[j], "H" + std::to_string(j + 1));
    append_term(out, kappa_coeff, "kappa");
    return out.empty() ? "0" : out;
}

std::size_t LinearExponent::hash() const {
    std::size_t h = std::hash<long>{}(kappa_coeff);
    for (long c : h_coeffs) h = h * 1000003u ^ std::hash<long>{}(c);
    return h;
}

}  // namespace rcb
