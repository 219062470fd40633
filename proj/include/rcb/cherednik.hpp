#pragma once

// Exact PBW normal-form arithmetic in the rational Cherednik algebra H_R of
// G(m,1,n) over R = Q(eta)[t, kappa, c_1, ..., c_{m-1}].
//
// Normal form: y^alpha * (g^e sigma) * x^beta. Products are normalized by
// moving x's left past y's with [y_i, x_j] (a group-algebra element) and
// group elements outward through their action on V and V*.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rcb/cyclotomic.hpp"
#include "rcb/multipoly.hpp"

namespace rcb {

/// Thrown when a computation would exceed the desk-scale caps.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxRank = 8;

/// g_1^{e_1} ... g_n^{e_n} sigma, with e reduced mod m. Indices are 0-based
/// internally; the named constructors take the 1-based indices used in formulas.
struct WElement {
    int n = 0;
    std::array<std::int8_t, kMaxRank> exps{};
    std::array<std::int8_t, kMaxRank> perm{};  // sigma(i) = perm[i]

    static WElement identity(int n);
    /// g_i^l.
    static WElement g(int n, int m, int i, int l);
    /// s_ij (s_ii is the identity).
    static WElement transposition(int n, int i, int j);
    /// Simple reflection s_i = s_{i,i+1}.
    static WElement simple(int n, int i) { return transposition(n, i, i + 1); }
    static WElement from_permutation(const std::vector<int>& sigma_one_based);

    bool is_identity() const;
    int sigma(int i) const { return perm[static_cast<std::size_t>(i)]; }
    int exp(int i) const { return exps[static_cast<std::size_t>(i)]; }

    friend bool operator==(const WElement&, const WElement&) = default;
    friend auto operator<=>(const WElement&, const WElement&) = default;
    std::string to_string() const;
};

/// (g^e sigma)(g^f tau) = g^{e + sigma.f} (sigma tau), (sigma.f)_i = f_{sigma^{-1}(i)}.
WElement w_mul(const WElement& u, const WElement& v, int m);
WElement w_inverse(const WElement& u, int m);

enum class GenKind : std::uint8_t { x, y };

/// w . y_j = eta^{e_{sigma(j)}} y_{sigma(j)}; w . x_j = eta^{-e_{sigma(j)}} x_{sigma(j)}.
/// Returns the eta exponent (mod m) and the 0-based image index.
struct ActionImage {
    int eta_power;
    int index;
};
ActionImage w_act(const WElement& w, GenKind kind, int j, int m);

/// Basis element y^alpha * w * x^beta.
struct PBWMonomial {
    std::array<std::int8_t, kMaxRank> alpha{};
    WElement w;
    std::array<std::int8_t, kMaxRank> beta{};

    int degree() const;
    friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;
    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
    std::string to_string() const;
};

using TermMap = std::map<PBWMonomial, MultiPoly>;

class CherednikAlgebra;
using AlgebraPtr = std::shared_ptr<const CherednikAlgebra>;

/// A finite R-linear combination of PBW monomials, always in normal form.
class CherednikElement {
public:
    explicit CherednikElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
    CherednikElement(AlgebraPtr algebra, TermMap terms);

    const AlgebraPtr& algebra() const { return algebra_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of a basis monomial (zero if absent).
    MultiPoly coefficient(const PBWMonomial& mono) const;
    /// True iff every coefficient is divisible by t.
    bool is_t_divisible() const;

    void add_term(const PBWMonomial& mono, const MultiPoly& coeff);

    CherednikElement operator-() const;
    CherednikElement& operator+=(const CherednikElement& o);
    CherednikElement& operator-=(const CherednikElement& o);
    CherednikElement& operator*=(const MultiPoly& s);
    CherednikElement& operator*=(const Rational& s);
    friend CherednikElement operator+(CherednikElement a, const CherednikElement& b) { return a += b; }
    friend CherednikElement operator-(CherednikElement a, const CherednikElement& b) { return a -= b; }
    friend CherednikElement operator*(const CherednikElement& a, const CherednikElement& b);
    friend CherednikElement operator*(CherednikElement a, const MultiPoly& s) { return a *= s; }
    friend CherednikElement operator*(const MultiPoly& s, CherednikElement a) { return a *= s; }
    friend CherednikElement operator*(CherednikElement a, const Rational& s) { return a *= s; }
    friend CherednikElement operator*(const Rational& s, CherednikElement a) { return a *= s; }

    friend bool operator==(const CherednikElement& a, const CherednikElement& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    AlgebraPtr algebra_;
    TermMap terms_;
};

using Element = CherednikElement;

/// [a, b] = ab - ba.
Element commutator(const Element& a, const Element& b);

/// One letter of a formal word: x_i, y_i (1-based), a group element, or a scalar.
struct GenX {
    int i;
};
struct GenY {
    int i;
};
using Letter = std::variant<GenX, GenY, WElement, MultiPoly>;
using Word = std::vector<Letter>;

struct EngineLimits {
    long max_group_order = 10'000;
    std::size_t max_terms = 1'000'000;
};

class CherednikAlgebra : public std::enable_shared_from_this<CherednikAlgebra> {
public:
    /// Throws ResourceLimitExceeded when m^n n! exceeds the cap, std::invalid_argument for bad (m, n).
    static AlgebraPtr create(int m, int n, EngineLimits limits = {});

    int m() const { return m_; }
    int n() const { return n_; }
    const FieldPtr& field() const { return field_; }
    /// Variables t, kappa, c1, ..., c{m-1}.
    const RingPtr& ring() const { return ring_; }
    const EngineLimits& limits() const { return limits_; }
    long group_order() const;

    /// eta^k with eta = zeta_m.
    const Cyclotomic& eta_pow(long k) const;

    MultiPoly t() const;
    MultiPoly kappa() const;
    /// c_l for 1 <= l <= m-1.
    MultiPoly c(int l) const;
    MultiPoly constant(const Rational& r) const;
    MultiPoly constant(const Cyclotomic& r) const;

    Element zero() const;
    Element one() const;
    Element scalar(const MultiPoly& p) const;
    Element x(int i) const;
    Element y(int i) const;
    Element group(const WElement& w) const;
    Element g(int i, int l = 1) const { return group(WElement::g(n_, m_, i, l)); }
    Element s(int i, int j) const { return group(WElement::transposition(n_, i, j)); }
    Element monomial(const PBWMonomial& mono, const MultiPoly& coeff) const;

    /// (scalar, image generator) for w acting on x_j or y_j.
    std::pair<Cyclotomic, Element> w_act(const WElement& w, GenKind kind, int j) const;

    Element mul(const Element& a, const Element& b) const;
    Element normal_form(const Word& word) const;

    /// [y_i, x_j] as given by the defining relations.
    Element defining_commutator(int i, int j) const;

    /// Image under the automorphism psi (see the free function psi).
    Element apply_psi(const Element& a) const;

private:
    CherednikAlgebra(int m, int n, EngineLimits limits);

    struct CommTerm {
        WElement w;
        MultiPoly coeff;
    };

    PBWMonomial unit_monomial() const;
    // x_j * y^alpha in normal form (memoized).
    const TermMap& straighten(int j, const std::array<std::int8_t, kMaxRank>& alpha) const;
    TermMap compute_straighten(int j, const std::array<std::int8_t, kMaxRank>& alpha) const;
    TermMap left_mul_x(int j, const TermMap& e) const;
    TermMap left_mul_w(const WElement& w, const TermMap& e) const;
    void check_size(const TermMap& e) const;
    static void accumulate(TermMap& into, const PBWMonomial& mono, const MultiPoly& coeff);

    int m_;
    int n_;
    EngineLimits limits_;
    FieldPtr field_;
    RingPtr ring_;
    std::vector<Cyclotomic> eta_powers_;
    // comm_[i][j]: [y_i, x_j] as group-algebra terms, 0-based indices.
    std::vector<std::vector<std::vector<CommTerm>>> comm_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<int, std::array<std::int8_t, kMaxRank>>, TermMap> straighten_cache_;
};

// --- named elements ---------------------------------------------------------

/// z_i = y_i x_i - t/2 + kappa sum_l sum_{j<i} s_ij g_i^l g_j^{-l} - sum_{l>=1} c_l eta^{-l} g_i^l.
Element dunkl_opdam_z(const CherednikAlgebra& alg, int i);
/// z_i = x_i y_i + t/2 - kappa sum_l sum_{j>i} s_ij g_i^l g_j^{-l} - sum_{l>=1} c_l g_i^l.
Element dunkl_opdam_z_alt(const CherednikAlgebra& alg, int i);
/// gamma_ij = -kappa sum_l s_ij g_i^{-l} g_j^l.
Element gamma(const CherednikAlgebra& alg, int i, int j);
/// xi_ij = sum_l g_i^l g_j^{-l}.
Element xi(const CherednikAlgebra& alg, int i, int j);
/// u_i = sum_l sum_{j<i} s_ij g_i^{-l} g_j^l.
Element jucys_murphy_u(const CherednikAlgebra& alg, int i);
/// sum x_i y_i + (n/2) t - kappa sum_{i<j} sum_l s_ij g_i^{-l} g_j^l - sum_i sum_l c_l g_i^l,
/// with the kappa sum over unordered pairs.
Element euler_element(const CherednikAlgebra& alg);
/// r-th elementary symmetric polynomial in z_1..z_n.
Element sym_poly_S(const CherednikAlgebra& alg, int r);
/// Same, over an arbitrary list of commuting elements.
Element elementary_symmetric(const std::vector<Element>& zs, int r);

/// The automorphism t -> -t, kappa -> -kappa, c_l -> eta^l c_{-l}, s_i -> s_{n-i},
/// g_i -> g_{n-i+1}^{-1}, x_i -> y_{n-i+1}, y_i -> x_{n-i+1}.
Element psi(const Element& a);

struct CentralityResult {
    bool x1_t_divisible = false;
    bool group_commutes = false;
    bool all_x_t_divisible = false;
    bool all_y_t_divisible = false;
    bool all() const { return x1_t_divisible && group_commutes && all_x_t_divisible && all_y_t_divisible; }
};

/// Checks that [x_1, S_r] lies in t H_R, that S_r commutes with W, and that
/// [x_i, S_r], [y_i, S_r] are t-divisible for all i.
CentralityResult check_centrality_detail(const CherednikAlgebra& alg, int r);
/// Same checks for e_r of a caller-supplied list (used for perturbation controls).
CentralityResult check_centrality_of(const CherednikAlgebra& alg, const Element& candidate);
bool check_centrality(const CherednikAlgebra& alg, int r);

}  // namespace rcb
