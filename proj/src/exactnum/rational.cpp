#include "rcb/rational.hpp"

#include <cctype>

namespace rcb {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t())) + 0x9e3779b9u;
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) + 0x9e3779b97f4a7c15ull +
             (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw DivisionByZero("rational literal '" + std::string(text) + "' has zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::size_t Rational::hash() const {
    return hash_mpz(q_.get_num()) * 31u + hash_mpz(q_.get_den());
}

}  // namespace rcb
