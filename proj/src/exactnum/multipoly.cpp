#include "rcb/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcb {

PolyRing::PolyRing(FieldPtr field, std::vector<std::string> names)
    : field_(std::move(field)), names_(std::move(names)) {
    if (!field_) throw std::invalid_argument("PolyRing: null field");
}

std::optional<int> PolyRing::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
}

RingPtr make_poly_ring(FieldPtr field, std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(std::move(field), std::move(names));
}

MultiPoly MultiPoly::constant(RingPtr ring, const Cyclotomic& value) {
    MultiPoly p(std::move(ring));
    p.add_term(Exponents(static_cast<std::size_t>(p.ring_->num_vars()), 0), value);
    return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& value) {
    auto field = ring->field();
    return constant(std::move(ring), Cyclotomic(field, value));
}

MultiPoly MultiPoly::variable(RingPtr ring, int index) {
    if (index < 0 || index >= ring->num_vars()) throw std::out_of_range("MultiPoly::variable index");
    Exponents e(static_cast<std::size_t>(ring->num_vars()), 0);
    e[static_cast<std::size_t>(index)] = 1;
    auto field = ring->field();
    return monomial(std::move(ring), std::move(e), Cyclotomic::one(field));
}

MultiPoly MultiPoly::variable(RingPtr ring, const std::string& name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown polynomial variable '" + name + "'");
    return variable(std::move(ring), *idx);
}

MultiPoly MultiPoly::monomial(RingPtr ring, Exponents exps, const Cyclotomic& coeff) {
    MultiPoly p(std::move(ring));
    if (exps.size() != static_cast<std::size_t>(p.ring_->num_vars()))
        throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
    p.add_term(exps, coeff);
    return p;
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
        throw std::invalid_argument("MultiPoly: operands live in different rings");
}

void MultiPoly::add_term(const Exponents& exps, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Cyclotomic& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_ring(b);
    MultiPoly r(a.ring_);
    MultiPoly::Exponents e;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Cyclotomic MultiPoly::evaluate(std::span<const Cyclotomic> values) const {
    if (values.size() != static_cast<std::size_t>(ring_->num_vars()))
        throw std::invalid_argument("MultiPoly::evaluate: wrong number of values");
    Cyclotomic acc = Cyclotomic::zero(ring_->field());
    for (const auto& [e, c] : terms_) {
        Cyclotomic t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= values[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

bool MultiPoly::divisible_by(int var) const {
    for (const auto& [e, c] : terms_)
        if (e.at(static_cast<std::size_t>(var)) < 1) return false;
    return true;
}

MultiPoly MultiPoly::substitute_scaled(std::span<const std::pair<int, Cyclotomic>> image) const {
    if (image.size() != static_cast<std::size_t>(ring_->num_vars()))
        throw std::invalid_argument("MultiPoly::substitute_scaled: wrong image size");
    MultiPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        Exponents out(e.size(), 0);
        Cyclotomic coeff = c;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            out.at(static_cast<std::size_t>(image[v].first)) += e[v];
            coeff *= image[v].second.pow(e[v]);
        }
        r.add_term(out, coeff);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mon;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += ring_->names()[v];
            if (e[v] > 1) mon += "^" + std::to_string(e[v]);
        }
        const bool unit = c == Cyclotomic::one(ring_->field());
        if (mon.empty()) out += c.to_string();
        else if (unit) out += mon;
        else out += "(" + c.to_string() + ")*" + mon;
    }
    return out;
}

bool poly_is_t_divisible(const MultiPoly& p) {
    auto idx = p.ring()->index_of("t");
    if (!idx) throw std::invalid_argument("poly_is_t_divisible: ring has no variable 't'");
    return p.divisible_by(*idx);
}

}  // namespace rcb
