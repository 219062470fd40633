#include <algorithm>
#include <numeric>
#include <sstream>

#include "rcb/cherednik.hpp"

namespace rcb {

namespace {

int mod(long a, int m) {
    const long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

using Exps = std::array<std::int8_t, kMaxRank>;

}  // namespace

// --- WElement ----------------------------------------------------------------

WElement WElement::identity(int n) {
    if (n < 1 || n > kMaxRank) throw std::invalid_argument("rank n must lie in [1, " + std::to_string(kMaxRank) + "]");
    WElement w;
    w.n = n;
    for (int i = 0; i < n; ++i) w.perm[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    return w;
}

WElement WElement::g(int n, int m, int i, int l) {
    if (i < 1 || i > n) throw std::out_of_range("g_i index out of range");
    WElement w = identity(n);
    w.exps[static_cast<std::size_t>(i - 1)] = static_cast<std::int8_t>(mod(l, m));
    return w;
}

WElement WElement::transposition(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("s_ij index out of range");
    WElement w = identity(n);
    std::swap(w.perm[static_cast<std::size_t>(i - 1)], w.perm[static_cast<std::size_t>(j - 1)]);
    return w;
}

WElement WElement::from_permutation(const std::vector<int>& sigma) {
    WElement w = identity(static_cast<int>(sigma.size()));
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const int v = sigma[i] - 1;
        if (v < 0 || v >= w.n || seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
        w.perm[i] = static_cast<std::int8_t>(v);
    }
    return w;
}

bool WElement::is_identity() const {
    for (int i = 0; i < n; ++i)
        if (exp(i) != 0 || sigma(i) != i) return false;
    return true;
}

std::string WElement::to_string() const {
    std::ostringstream out;
    out << "g^(";
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << exp(i);
    out << ")[";
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << sigma(i) + 1;
    out << "]";
    return out.str();
}

WElement w_mul(const WElement& u, const WElement& v, int m) {
    WElement r = WElement::identity(u.n);
    Exps u_inv{};
    for (int i = 0; i < u.n; ++i) u_inv[static_cast<std::size_t>(u.sigma(i))] = static_cast<std::int8_t>(i);
    for (int i = 0; i < u.n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        r.exps[k] = static_cast<std::int8_t>(mod(u.exp(i) + v.exp(u_inv[k]), m));
        r.perm[k] = u.perm[static_cast<std::size_t>(v.sigma(i))];
    }
    return r;
}

WElement w_inverse(const WElement& u, int m) {
    WElement r = WElement::identity(u.n);
    for (int i = 0; i < u.n; ++i) {
        r.perm[static_cast<std::size_t>(u.sigma(i))] = static_cast<std::int8_t>(i);
        r.exps[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(mod(-u.exp(u.sigma(i)), m));
    }
    return r;
}

ActionImage w_act(const WElement& w, GenKind kind, int j, int m) {
    const int k = w.sigma(j);
    const int e = w.exp(k);
    return {kind == GenKind::y ? e : mod(-e, m), k};
}

// --- PBWMonomial -------------------------------------------------------------

int PBWMonomial::degree() const {
    int d = 0;
    for (int i = 0; i < w.n; ++i) d += alpha[static_cast<std::size_t>(i)] + beta[static_cast<std::size_t>(i)];
    return d;
}

std::string PBWMonomial::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& s) {
        out << (first ? "" : "*") << s;
        first = false;
    };
    auto powers = [&](char sym, const Exps& e) {
        for (int i = 0; i < w.n; ++i) {
            const int p = e[static_cast<std::size_t>(i)];
            if (p == 0) continue;
            std::string s = std::string(1, sym) + std::to_string(i + 1);
            if (p > 1) s += "^" + std::to_string(p);
            emit(s);
        }
    };
    powers('y', alpha);
    if (!w.is_identity()) emit(w.to_string());
    powers('x', beta);
    return first ? "1" : out.str();
}

// --- CherednikElement --------------------------------------------------------

CherednikElement::CherednikElement(AlgebraPtr algebra, TermMap terms) : algebra_(std::move(algebra)) {
    for (auto& [mono, c] : terms)
        if (!c.is_zero()) terms_.emplace(mono, std::move(c));
}

MultiPoly CherednikElement::coefficient(const PBWMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? MultiPoly(algebra_->ring()) : it->second;
}

bool CherednikElement::is_t_divisible() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return poly_is_t_divisible(kv.second); });
}

void CherednikElement::add_term(const PBWMonomial& mono, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CherednikElement CherednikElement::operator-() const {
    CherednikElement r(algebra_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

CherednikElement& CherednikElement::operator+=(const CherednikElement& o) {
    if (algebra_ != o.algebra_) throw std::invalid_argument("elements of different algebras");
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

CherednikElement& CherednikElement::operator-=(const CherednikElement& o) {
    if (algebra_ != o.algebra_) throw std::invalid_argument("elements of different algebras");
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

CherednikElement& CherednikElement::operator*=(const MultiPoly& s) {
    TermMap out;
    for (const auto& [mono, c] : terms_) {
        MultiPoly p = c * s;
        if (!p.is_zero()) out.emplace(mono, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
}

CherednikElement& CherednikElement::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, c] : terms_) c *= s;
    return *this;
}

CherednikElement operator*(const CherednikElement& a, const CherednikElement& b) {
    if (a.algebra_ != b.algebra_) throw std::invalid_argument("elements of different algebras");
    return a.algebra_->mul(a, b);
}

std::string CherednikElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + mono.to_string();
    }
    return out;
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

// --- CherednikAlgebra --------------------------------------------------------

AlgebraPtr CherednikAlgebra::create(int m, int n, EngineLimits limits) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > kMaxRank)
        throw ResourceLimitExceeded("rank n=" + std::to_string(n) + " exceeds the engine maximum " + std::to_string(kMaxRank));
    long order = 1;
    for (int i = 0; i < n && order <= limits.max_group_order; ++i) order *= static_cast<long>(m) * (i + 1);
    if (order > limits.max_group_order)
        throw ResourceLimitExceeded("group order m^n n! for m=" + std::to_string(m) + ", n=" + std::to_string(n) +
                                    " exceeds the cap of " + std::to_string(limits.max_group_order));
    return AlgebraPtr(new CherednikAlgebra(m, n, limits));
}

CherednikAlgebra::CherednikAlgebra(int m, int n, EngineLimits limits)
    : m_(m), n_(n), limits_(limits), field_(make_cyclotomic_field(m)) {
    std::vector<std::string> names{"t", "kappa"};
    for (int l = 1; l < m; ++l) names.push_back("c" + std::to_string(l));
    ring_ = make_poly_ring(field_, std::move(names));
    for (int k = 0; k < m; ++k) eta_powers_.push_back(Cyclotomic::zeta_power(field_, k));

    comm_.assign(static_cast<std::size_t>(n), std::vector<std::vector<CommTerm>>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            std::map<WElement, MultiPoly> acc;
            auto add = [&](const WElement& w, const MultiPoly& c) {
                auto [it, inserted] = acc.try_emplace(w, c);
                if (!inserted) it->second += c;
            };
            auto pair_term = [&](int a, int b, int l) {
                const WElement gg = w_mul(WElement::g(n, m, a, -l), WElement::g(n, m, b, l), m);
                return w_mul(WElement::transposition(n, a, b), gg, m);
            };
            if (i == j) {
                add(WElement::identity(n), t());
                for (int k = 1; k <= n; ++k) {
                    if (k == i) continue;
                    for (int l = 0; l < m; ++l) add(pair_term(i, k, l), -kappa());
                }
                for (int l = 1; l < m; ++l)
                    add(WElement::g(n, m, i, l), -(c(l) * (Cyclotomic::one(field_) - eta_pow(-l))));
            } else {
                for (int l = 0; l < m; ++l) add(pair_term(i, j, l), kappa() * eta_pow(-l));
            }
            auto& out = comm_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            for (auto& [w, c] : acc)
                if (!c.is_zero()) out.push_back({w, std::move(c)});
        }
    }
}

long CherednikAlgebra::group_order() const {
    long order = 1;
    for (int i = 1; i <= n_; ++i) order *= static_cast<long>(m_) * i;
    return order;
}

const Cyclotomic& CherednikAlgebra::eta_pow(long k) const { return eta_powers_[static_cast<std::size_t>(mod(k, m_))]; }

MultiPoly CherednikAlgebra::t() const { return MultiPoly::variable(ring_, 0); }
MultiPoly CherednikAlgebra::kappa() const { return MultiPoly::variable(ring_, 1); }

MultiPoly CherednikAlgebra::c(int l) const {
    if (l < 1 || l >= m_) throw std::out_of_range("c_l index must lie in [1, m-1]");
    return MultiPoly::variable(ring_, l + 1);
}

MultiPoly CherednikAlgebra::constant(const Rational& r) const { return MultiPoly::constant(ring_, r); }
MultiPoly CherednikAlgebra::constant(const Cyclotomic& r) const { return MultiPoly::constant(ring_, r); }

PBWMonomial CherednikAlgebra::unit_monomial() const {
    PBWMonomial mono;
    mono.w = WElement::identity(n_);
    return mono;
}

Element CherednikAlgebra::zero() const { return Element(shared_from_this()); }

Element CherednikAlgebra::one() const { return monomial(unit_monomial(), constant(Rational(1))); }

Element CherednikAlgebra::scalar(const MultiPoly& p) const { return monomial(unit_monomial(), p); }

Element CherednikAlgebra::x(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("x_i index out of range");
    PBWMonomial mono = unit_monomial();
    mono.beta[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(mono, constant(Rational(1)));
}

Element CherednikAlgebra::y(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("y_i index out of range");
    PBWMonomial mono = unit_monomial();
    mono.alpha[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(mono, constant(Rational(1)));
}

Element CherednikAlgebra::group(const WElement& w) const {
    if (w.n != n_) throw std::invalid_argument("group element of the wrong rank");
    PBWMonomial mono = unit_monomial();
    mono.w = w;
    return monomial(mono, constant(Rational(1)));
}

Element CherednikAlgebra::monomial(const PBWMonomial& mono, const MultiPoly& coeff) const {
    Element e(shared_from_this());
    e.add_term(mono, coeff);
    return e;
}

std::pair<Cyclotomic, Element> CherednikAlgebra::w_act(const WElement& w, GenKind kind, int j) const {
    const ActionImage img = rcb::w_act(w, kind, j - 1, m_);
    return {eta_pow(img.eta_power), kind == GenKind::x ? x(img.index + 1) : y(img.index + 1)};
}

Element CherednikAlgebra::defining_commutator(int i, int j) const {
    Element e = zero();
    for (const auto& term : comm_.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1))) {
        PBWMonomial mono = unit_monomial();
        mono.w = term.w;
        e.add_term(mono, term.coeff);
    }
    return e;
}

void CherednikAlgebra::accumulate(TermMap& into, const PBWMonomial& mono, const MultiPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = into.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) into.erase(it);
    }
}

void CherednikAlgebra::check_size(const TermMap& e) const {
    if (e.size() > limits_.max_terms)
        throw ResourceLimitExceeded("intermediate expression exceeds " + std::to_string(limits_.max_terms) + " terms");
}

const TermMap& CherednikAlgebra::straighten(int j, const Exps& alpha) const {
    const auto key = std::make_pair(j, alpha);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = straighten_cache_.find(key);
        if (it != straighten_cache_.end()) return it->second;
    }
    TermMap value = compute_straighten(j, alpha);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return straighten_cache_.try_emplace(key, std::move(value)).first->second;
}

// x_j y^alpha = y_i (x_j y^alpha') - [y_i, x_j] y^alpha', with i the first index in alpha.
TermMap CherednikAlgebra::compute_straighten(int j, const Exps& alpha) const {
    TermMap out;
    const auto first = std::find_if(alpha.begin(), alpha.begin() + n_, [](std::int8_t a) { return a > 0; });
    if (first == alpha.begin() + n_) {
        PBWMonomial mono = unit_monomial();
        mono.beta[static_cast<std::size_t>(j)] = 1;
        out.emplace(mono, constant(Rational(1)));
        return out;
    }
    const auto i = static_cast<std::size_t>(first - alpha.begin());
    Exps rest = alpha;
    --rest[i];

    for (const auto& [mono, c] : straighten(j, rest)) {
        PBWMonomial shifted = mono;
        ++shifted.alpha[i];
        accumulate(out, shifted, c);
    }
    for (const auto& term : comm_[i][static_cast<std::size_t>(j)]) {
        PBWMonomial mono = unit_monomial();
        mono.w = term.w;
        long power = 0;
        for (int k = 0; k < n_; ++k) {
            const int a = rest[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            const ActionImage img = rcb::w_act(term.w, GenKind::y, k, m_);
            mono.alpha[static_cast<std::size_t>(img.index)] = static_cast<std::int8_t>(a);
            power += static_cast<long>(img.eta_power) * a;
        }
        MultiPoly coeff = term.coeff;
        if (mod(power, m_) != 0) coeff *= eta_pow(power);
        accumulate(out, mono, -coeff);
    }
    check_size(out);
    return out;
}

TermMap CherednikAlgebra::left_mul_w(const WElement& w, const TermMap& e) const {
    if (w.is_identity()) return e;
    TermMap out;
    for (const auto& [mono, c] : e) {
        PBWMonomial r;
        long power = 0;
        for (int k = 0; k < n_; ++k) {
            const int a = mono.alpha[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            const ActionImage img = rcb::w_act(w, GenKind::y, k, m_);
            r.alpha[static_cast<std::size_t>(img.index)] = static_cast<std::int8_t>(a);
            power += static_cast<long>(img.eta_power) * a;
        }
        r.w = w_mul(w, mono.w, m_);
        r.beta = mono.beta;
        accumulate(out, r, mod(power, m_) == 0 ? c : c * eta_pow(power));
    }
    return out;
}

// x_j (y^alpha v x^beta) = sum (y^alpha' u x^eps) v x^beta, then x^eps v = v (v^{-1}.x^eps).
TermMap CherednikAlgebra::left_mul_x(int j, const TermMap& e) const {
    TermMap out;
    for (const auto& [mono, c] : e) {
        const WElement v_inv = w_inverse(mono.w, m_);
        for (const auto& [s, sc] : straighten(j, mono.alpha)) {
            PBWMonomial r;
            r.alpha = s.alpha;
            r.w = w_mul(s.w, mono.w, m_);
            r.beta = mono.beta;
            long power = 0;
            for (int k = 0; k < n_; ++k) {
                const int b = s.beta[static_cast<std::size_t>(k)];
                if (b == 0) continue;
                const ActionImage img = rcb::w_act(v_inv, GenKind::x, k, m_);
                r.beta[static_cast<std::size_t>(img.index)] =
                    static_cast<std::int8_t>(r.beta[static_cast<std::size_t>(img.index)] + b);
                power += static_cast<long>(img.eta_power) * b;
            }
            MultiPoly coeff = c * sc;
            if (mod(power, m_) != 0) coeff *= eta_pow(power);
            accumulate(out, r, coeff);
        }
        check_size(out);
    }
    return out;
}

Element CherednikAlgebra::mul(const Element& a, const Element& b) const {
    // Terms of a sharing the same x-part reuse x^beta * b.
    std::map<Exps, std::vector<const TermMap::value_type*>> by_beta;
    for (const auto& term : a.terms()) by_beta[term.first.beta].push_back(&term);

    TermMap out;
    for (const auto& [beta, terms] : by_beta) {
        TermMap xb = b.terms();
        for (int k = n_ - 1; k >= 0; --k)
            for (int p = 0; p < beta[static_cast<std::size_t>(k)]; ++p) xb = left_mul_x(k, xb);
        for (const auto* term : terms) {
            const PBWMonomial& mono = term->first;
            for (const auto& [r, c] : left_mul_w(mono.w, xb)) {
                PBWMonomial shifted = r;
                for (std::size_t k = 0; k < static_cast<std::size_t>(n_); ++k)
                    shifted.alpha[k] = static_cast<std::int8_t>(shifted.alpha[k] + mono.alpha[k]);
                accumulate(out, shifted, term->second * c);
            }
            check_size(out);
        }
    }
    return Element(shared_from_this(), std::move(out));
}

Element CherednikAlgebra::normal_form(const Word& word) const {
    TermMap cur = one().terms();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (const auto* gx = std::get_if<GenX>(&*it)) {
            if (gx->i < 1 || gx->i > n_) throw std::out_of_range("x_i index out of range");
            cur = left_mul_x(gx->i - 1, cur);
        } else if (const auto* gy = std::get_if<GenY>(&*it)) {
            if (gy->i < 1 || gy->i > n_) throw std::out_of_range("y_i index out of range");
            TermMap next;
            for (const auto& [mono, c] : cur) {
                PBWMonomial r = mono;
                ++r.alpha[static_cast<std::size_t>(gy->i - 1)];
                next.emplace(r, c);
            }
            cur = std::move(next);
        } else if (const auto* w = std::get_if<WElement>(&*it)) {
            cur = left_mul_w(*w, cur);
        } else {
            Element e(shared_from_this(), std::move(cur));
            e *= std::get<MultiPoly>(*it);
            cur = e.terms();
        }
    }
    return Element(shared_from_this(), std::move(cur));
}

Element CherednikAlgebra::apply_psi(const Element& a) const {
    std::vector<std::pair<int, Cyclotomic>> image;
    image.emplace_back(0, -Cyclotomic::one(field_));
    image.emplace_back(1, -Cyclotomic::one(field_));
    for (int l = 1; l < m_; ++l) image.emplace_back(m_ - l + 1, eta_pow(l));

    TermMap out;
    for (const auto& [mono, c] : a.terms()) {
        // psi(y^alpha w x^beta) = x^{rev alpha} psi(w) y^{rev beta}
        PBWMonomial start = unit_monomial();
        for (int k = 0; k < n_; ++k)
            start.alpha[static_cast<std::size_t>(n_ - 1 - k)] = mono.beta[static_cast<std::size_t>(k)];
        TermMap cur;
        cur.emplace(start, c.substitute_scaled(image));

        WElement pw = WElement::identity(n_);
        for (int k = 0; k < n_; ++k) {
            pw.exps[static_cast<std::size_t>(n_ - 1 - k)] = static_cast<std::int8_t>(mod(-mono.w.exp(k), m_));
            pw.perm[static_cast<std::size_t>(n_ - 1 - k)] = static_cast<std::int8_t>(n_ - 1 - mono.w.sigma(k));
        }
        cur = left_mul_w(pw, cur);
        for (int k = 0; k < n_; ++k)
            for (int p = 0; p < mono.alpha[static_cast<std::size_t>(k)]; ++p) cur = left_mul_x(n_ - 1 - k, cur);
        for (const auto& [r, rc] : cur) accumulate(out, r, rc);
        check_size(out);
    }
    return Element(shared_from_this(), std::move(out));
}

}  // namespace rcb
