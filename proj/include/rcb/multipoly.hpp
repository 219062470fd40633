#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcb/cyclotomic.hpp"

namespace rcb {

/// Ordered list of named indeterminates over a cyclotomic coefficient field.
class PolyRing {
public:
    PolyRing(FieldPtr field, std::vector<std::string> names);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::string>& names() const { return names_; }
    int num_vars() const { return static_cast<int>(names_.size()); }
    std::optional<int> index_of(const std::string& name) const;

    friend bool operator==(const PolyRing& a, const PolyRing& b) {
        return a.field_->order() == b.field_->order() && a.names_ == b.names_;
    }

private:
    FieldPtr field_;
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_poly_ring(FieldPtr field, std::vector<std::string> names);

/// Sparse multivariate polynomial with Cyclotomic coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Cyclotomic>;

    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, const Cyclotomic& value);
    static MultiPoly constant(RingPtr ring, const Rational& value);
    static MultiPoly variable(RingPtr ring, int index);
    static MultiPoly variable(RingPtr ring, const std::string& name);
    static MultiPoly monomial(RingPtr ring, Exponents exps, const Cyclotomic& coeff);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds coeff * x^exps in place.
    void add_term(const Exponents& exps, const Cyclotomic& coeff);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Cyclotomic& s);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Cyclotomic& s) { return a *= s; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
    }

    Cyclotomic evaluate(std::span<const Cyclotomic> values) const;

    /// True iff every term has positive degree in variable `var`.
    bool divisible_by(int var) const;

    /// Applies the ring map x_v -> scale_v * x_{target_v}; `image[v] = {target_v, scale_v}`.
    MultiPoly substitute_scaled(std::span<const std::pair<int, Cyclotomic>> image) const;

    std::string to_string() const;

private:
    void require_same_ring(const MultiPoly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

/// True iff every stored term has t-exponent >= 1; the zero polynomial qualifies.
bool poly_is_t_divisible(const MultiPoly& p);

}  // namespace rcb
