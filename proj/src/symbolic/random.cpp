#include "dnk/symbolic/random.hpp"

namespace dnk {

namespace {

void monomials_up_to(int nvars, unsigned max_degree, int k, Monomial& cur, std::vector<Monomial>& out) {
    if (k == nvars) {
        out.push_back(cur);
        return;
    }
    for (unsigned e = 0; cur.deg + e <= max_degree; ++e) {
        cur.exp[k] = static_cast<std::uint16_t>(e);
        cur.deg += e;
        monomials_up_to(nvars, max_degree, k + 1, cur, out);
        cur.deg -= e;
        cur.exp[k] = 0;
    }
}

long nonzero_coeff(Rng& rng, long bound) {
    std::uniform_int_distribution<long> dist(1, bound);
    std::bernoulli_distribution sign(0.5);
    long v = dist(rng);
    return sign(rng) ? -v : v;
}

}  // namespace

Polynomial random_polynomial(Rng& rng, int nvars, unsigned max_degree, double density, long coeff_bound) {
    std::vector<Monomial> monos;
    Monomial cur;
    monomials_up_to(nvars, max_degree, 0, cur, monos);
    std::bernoulli_distribution keep(density);
    std::vector<Term> terms;
    for (const auto& m : monos)
        if (keep(rng)) terms.push_back({m, Coeff(nonzero_coeff(rng, coeff_bound))});
    if (terms.empty()) terms.push_back({monos[rng() % monos.size()], Coeff(nonzero_coeff(rng, coeff_bound))});
    return Polynomial::from_terms(nvars, std::move(terms));
}

Scalar random_poly_scalar(Rng& rng, int nvars, unsigned max_degree, double density) {
    return Scalar(random_polynomial(rng, nvars, max_degree, density));
}

Scalar random_fraction(Rng& rng, int nvars, unsigned max_degree) {
    Polynomial num = random_polynomial(rng, nvars, max_degree, 0.4);
    Polynomial den = random_polynomial(rng, nvars, std::max(1u, max_degree - 1), 0.3);
    den += Polynomial(nvars, Coeff(7));
    if (den.is_zero()) den = Polynomial(nvars, Coeff(1));
    return Scalar(num, den);
}

Scalar random_univariate(Rng& rng, int nvars, int k, unsigned max_degree) {
    std::vector<Term> terms;
    for (unsigned e = 0; e <= max_degree; ++e)
        if (rng() % 3 != 0) terms.push_back({Monomial::var(k, e), Coeff(nonzero_coeff(rng, 5))});
    if (terms.empty()) terms.push_back({Monomial::var(k, 1), Coeff(1)});
    return Scalar(Polynomial::from_terms(nvars, std::move(terms)));
}

}  // namespace dnk
