#include "rcb/cyclotomic.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace rcb {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of a by a monic integer polynomial b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    IntPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        BigInt c = a[k];
        if (c == 0) continue;
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("cyclotomic_polynomial: inexact division");
    return q;
}

// Quotient and remainder over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {RatPoly{}, a};
    RatPoly q(a.size() - db, Rational(0));
    const Rational lead = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k].is_zero()) continue;
        Rational c = a[k] / lead;
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    trim(a);
    trim(q);
    return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

long mod_floor(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int x = n;
    for (int p = 2; p * p <= x; ++p) {
        if (x % p != 0) continue;
        while (x % p == 0) x /= p;
        result -= result / p;
    }
    if (x > 1) result -= result / x;
    return result;
}

IntPoly cyclotomic_polynomial(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
    IntPoly p(static_cast<std::size_t>(order) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(order)] = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    }
    return p;
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> raw) const {
    const std::size_t d = static_cast<std::size_t>(degree_);
    // Phi_N is monic, so the long division needs no rational inverse.
    for (std::size_t k = raw.size(); k-- > d;) {
        if (raw[k].is_zero()) continue;
        const Rational c = raw[k];
        for (std::size_t i = 0; i <= d; ++i) {
            if (modulus_[i] != 0) raw[k - d + i] -= c * Rational(modulus_[i], 1);
        }
    }
    raw.resize(d, Rational(0));
    return raw;
}

FieldPtr make_cyclotomic_field(int order) {
    if (order < 1) throw std::invalid_argument("cyclotomic field order must be >= 1");
    return std::make_shared<const CyclotomicField>(order);
}

Cyclotomic::Cyclotomic(FieldPtr field, const Rational& value) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("Cyclotomic: null field");
    coeffs_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    coeffs_[0] = value;
}

Cyclotomic Cyclotomic::from_raw(FieldPtr field, std::vector<Rational> raw) {
    if (!field) throw std::invalid_argument("Cyclotomic: null field");
    auto reduced = field->reduce(std::move(raw));
    return Cyclotomic(std::move(field), std::move(reduced), true);
}

Cyclotomic Cyclotomic::zeta_power(FieldPtr field, long k) {
    const long e = mod_floor(k, field->order());
    std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
    raw.back() = Rational(1);
    return from_raw(std::move(field), std::move(raw));
}

void Cyclotomic::require_same_field(const Cyclotomic& o) const {
    if (order() != o.order())
        throw std::invalid_argument("cyclotomic orders differ: " + std::to_string(order()) + " vs " +
                                    std::to_string(o.order()));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    require_same_field(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    require_same_field(o);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    std::vector<Rational> raw(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (!o.coeffs_[j].is_zero()) raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = field_->reduce(std::move(raw));
    return *this;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
    RatPoly modulus;
    for (const auto& c : field_->modulus()) modulus.emplace_back(c, BigInt(1));
    RatPoly a = coeffs_;
    trim(a);
    // Invariant: s_i * a == r_i (mod Phi_N).
    RatPoly r0 = modulus, r1 = a;
    RatPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant because Phi_N is irreducible.
    const Rational unit = r1.at(0);
    for (auto& c : s1) c /= unit;
    return from_raw(field_, s1);
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic result = one(field_);
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
        if (k == 0) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += power;
        } else {
            out += mag.to_string() + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json Cyclotomic::to_json() const {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : coeffs_) coeffs.push_back(c.to_string());
    return {{"order", order()}, {"coeffs", coeffs}};
}

Cyclotomic Cyclotomic::from_json(FieldPtr field, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw std::invalid_argument("cyclotomic JSON needs 'order' and 'coeffs'");
    if (j.at("order").get<int>() != field->order())
        throw std::invalid_argument("cyclotomic JSON order does not match the working field");
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(field->degree()))
        throw std::invalid_argument("cyclotomic JSON 'coeffs' must have phi(N) entries");
    std::vector<Rational> coeffs;
    for (const auto& c : arr) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return from_raw(std::move(field), std::move(coeffs));
}

std::size_t Cyclotomic::hash() const {
    std::size_t h = static_cast<std::size_t>(order());
    for (const auto& c : coeffs_) h = h * 1000003u ^ c.hash();
    return h;
}

// --- literal parser -------------------------------------------------------

namespace {

class LiteralParser {
public:
    LiteralParser(FieldPtr field, std::string_view text) : field_(std::move(field)), text_(text) {}

    Cyclotomic parse() {
        Cyclotomic acc = Cyclotomic::zero(field_);
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip_ws();
        }
        Cyclotomic t = term();
        acc += negative ? -t : t;
        for (skip_ws(); pos_ < text_.size(); skip_ws()) {
            const char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            skip_ws();
            Cyclotomic next = term();
            if (op == '+') acc += next;
            else acc -= next;
        }
        return acc;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cyclotomic literal '" + std::string(text_) + "': " + what +
                                    " at position " + std::to_string(pos_));
    }

    std::string digits() {
        std::string out;
        while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
        if (out.empty()) fail("expected digits");
        return out;
    }

    long exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        get();
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            get();
        }
        std::string d = digits();
        if (d.size() > 12) fail("exponent too large");
        long e = std::stol(d);
        return negative ? -e : e;
    }

    Cyclotomic term() {
        if (peek() == 'z') {
            get();
            return Cyclotomic::zeta_power(field_, exponent());
        }
        std::string num = digits();
        std::string den = "1";
        skip_ws();
        if (peek() == '/') {
            get();
            skip_ws();
            den = digits();
        }
        Rational r = Rational::parse(num + "/" + den);
        skip_ws();
        if (peek() == '*') {
            get();
            skip_ws();
            if (get() != 'z') fail("expected 'z' after '*'");
            return Cyclotomic::zeta_power(field_, exponent()) * r;
        }
        return Cyclotomic(field_, r);
    }

    FieldPtr field_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(FieldPtr field, std::string_view text) {
    if (!field) throw std::invalid_argument("Cyclotomic::parse: null field");
    return LiteralParser(std::move(field), text).parse();
}

}  // namespace rcb
