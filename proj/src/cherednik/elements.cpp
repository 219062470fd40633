#include "rcb/cherednik.hpp"

namespace rcb {

namespace {

// s_ij g_i^{a} g_j^{b}
Element reflection_term(const CherednikAlgebra& alg, int i, int j, int a, int b) {
    const int n = alg.n();
    const int m = alg.m();
    const WElement gg = w_mul(WElement::g(n, m, i, a), WElement::g(n, m, j, b), m);
    return alg.group(w_mul(WElement::transposition(n, i, j), gg, m));
}

Element yx_monomial(const CherednikAlgebra& alg, int i) {
    PBWMonomial mono;
    mono.w = WElement::identity(alg.n());
    mono.alpha[static_cast<std::size_t>(i - 1)] = 1;
    mono.beta[static_cast<std::size_t>(i - 1)] = 1;
    return alg.monomial(mono, alg.constant(Rational(1)));
}

}  // namespace

Element dunkl_opdam_z(const CherednikAlgebra& alg, int i) {
    Element z = yx_monomial(alg, i);
    z -= alg.scalar(alg.t() * Rational(1, 2));
    for (int j = 1; j < i; ++j)
        for (int l = 0; l < alg.m(); ++l) z += alg.kappa() * reflection_term(alg, i, j, l, -l);
    for (int l = 1; l < alg.m(); ++l) z -= (alg.c(l) * alg.eta_pow(-l)) * alg.g(i, l);
    return z;
}

Element dunkl_opdam_z_alt(const CherednikAlgebra& alg, int i) {
    Element z = alg.x(i) * alg.y(i);
    z += alg.scalar(alg.t() * Rational(1, 2));
    for (int j = i + 1; j <= alg.n(); ++j)
        for (int l = 0; l < alg.m(); ++l) z -= alg.kappa() * reflection_term(alg, i, j, l, -l);
    for (int l = 1; l < alg.m(); ++l) z -= alg.c(l) * alg.g(i, l);
    return z;
}

Element gamma(const CherednikAlgebra& alg, int i, int j) {
    Element r = alg.zero();
    for (int l = 0; l < alg.m(); ++l) r -= alg.kappa() * reflection_term(alg, i, j, -l, l);
    return r;
}

Element xi(const CherednikAlgebra& alg, int i, int j) {
    Element r = alg.zero();
    const int n = alg.n();
    const int m = alg.m();
    for (int l = 0; l < m; ++l) r += alg.group(w_mul(WElement::g(n, m, i, l), WElement::g(n, m, j, -l), m));
    return r;
}

Element jucys_murphy_u(const CherednikAlgebra& alg, int i) {
    Element r = alg.zero();
    for (int j = 1; j < i; ++j)
        for (int l = 0; l < alg.m(); ++l) r += reflection_term(alg, i, j, -l, l);
    return r;
}

Element euler_element(const CherednikAlgebra& alg) {
    const int n = alg.n();
    Element eu = alg.scalar(alg.t() * Rational(n, 2));
    for (int i = 1; i <= n; ++i) eu += alg.x(i) * alg.y(i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = 0; l < alg.m(); ++l) eu -= alg.kappa() * reflection_term(alg, i, j, -l, l);
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l < alg.m(); ++l) eu -= alg.c(l) * alg.g(i, l);
    return eu;
}

Element elementary_symmetric(const std::vector<Element>& zs, int r) {
    if (zs.empty()) throw std::invalid_argument("elementary_symmetric needs at least one element");
    const auto& alg = *zs.front().algebra();
    if (r < 0 || r > static_cast<int>(zs.size())) return alg.zero();
    // e[k] after processing a prefix: elementary symmetric polynomials of that prefix.
    std::vector<Element> e(static_cast<std::size_t>(r + 1), alg.zero());
    e[0] = alg.one();
    for (const auto& z : zs)
        for (int k = r; k >= 1; --k) e[static_cast<std::size_t>(k)] += e[static_cast<std::size_t>(k - 1)] * z;
    return e[static_cast<std::size_t>(r)];
}

Element sym_poly_S(const CherednikAlgebra& alg, int r) {
    if (r < 1 || r > alg.n()) throw std::out_of_range("r must lie in [1, n]");
    std::vector<Element> zs;
    for (int i = 1; i <= alg.n(); ++i) zs.push_back(dunkl_opdam_z(alg, i));
    return elementary_symmetric(zs, r);
}

Element psi(const Element& a) { return a.algebra()->apply_psi(a); }

CentralityResult check_centrality_of(const CherednikAlgebra& alg, const Element& s) {
    CentralityResult res;
    const int n = alg.n();
    res.x1_t_divisible = commutator(alg.x(1), s).is_t_divisible();
    res.group_commutes = true;
    if (alg.m() > 1)
        for (int i = 1; i <= n && res.group_commutes; ++i) res.group_commutes = commutator(alg.g(i), s).is_zero();
    for (int i = 1; i < n && res.group_commutes; ++i) res.group_commutes = commutator(alg.s(i, i + 1), s).is_zero();
    res.all_x_t_divisible = true;
    res.all_y_t_divisible = true;
    for (int i = 1; i <= n; ++i) {
        res.all_x_t_divisible = res.all_x_t_divisible && commutator(alg.x(i), s).is_t_divisible();
        res.all_y_t_divisible = res.all_y_t_divisible && commutator(alg.y(i), s).is_t_divisible();
    }
    return res;
}

CentralityResult check_centrality_detail(const CherednikAlgebra& alg, int r) {
    return check_centrality_of(alg, sym_poly_S(alg, r));
}

bool check_centrality(const CherednikAlgebra& alg, int r) { return check_centrality_detail(alg, r).all(); }

}  // namespace rcb
