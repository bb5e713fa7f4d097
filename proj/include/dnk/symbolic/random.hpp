#ifndef DNK_SYMBOLIC_RANDOM_HPP
#define DNK_SYMBOLIC_RANDOM_HPP

#include "dnk/symbolic/scalar.hpp"

#include <random>

namespace dnk {

using Rng = std::mt19937_64;

// Dense-ish random polynomial: every monomial of degree <= max_degree is kept
// with probability `density`, coefficients are small nonzero integers.
Polynomial random_polynomial(Rng& rng, int nvars, unsigned max_degree, double density = 0.5, long coeff_bound = 5);

// Random polynomial scalar (denominator 1).
Scalar random_poly_scalar(Rng& rng, int nvars, unsigned max_degree, double density = 0.5);

// Random quotient with a denominator that has a nonzero constant term.
Scalar random_fraction(Rng& rng, int nvars, unsigned max_degree);

// Random polynomial in a single variable k of the ring.
Scalar random_univariate(Rng& rng, int nvars, int k, unsigned max_degree);

}  // namespace dnk

#endif
