#ifndef DNK_TENSOR_DERIVATIONS_HPP
#define DNK_TENSOR_DERIVATIONS_HPP

#include "dnk/tensor/calculus.hpp"

#include <stdexcept>

namespace dnk {

// Raised when w_r fails to be skew-symmetric.
struct NotSkew : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// D^r_X(Y) = (L_Y r)(X) = [Y, rX] - r[Y, X].
VectorField D_r(const VectorField& x, const VectorField& y, const OneOneTensor& r);
// D^{r,*}_X(a) = L_X(r* a) - L_{rX} a; cross-checked against i_X d(r* a) - i_{rX} da.
PForm D_r_star(const VectorField& x, const PForm& alpha, const OneOneTensor& r);
// Extension to p-forms with skew w_r: i_Y d(w_r) - i_{rY} dw. Throws NotSkew.
PForm D_r_star_pform(const VectorField& y, const PForm& w, const OneOneTensor& r);

// Torsion on coordinate fields.
VectorValuedTwoForm nijenhuis_torsion(const OneOneTensor& r);
// Direct expansion [rX, rY] - r([rX, Y] + [X, rY] - r[X, Y]) for arbitrary fields.
VectorField nijenhuis_on(const OneOneTensor& r, const VectorField& x, const VectorField& y);
VectorField torsion_via_D(const OneOneTensor& r, const VectorField& x, const VectorField& y);
Scalar torsion_via_Dstar(const OneOneTensor& r, const VectorField& x, const VectorField& y, const PForm& alpha);

// [X, Y]_r = [rX, Y] + [X, rY] - r[X, Y].
VectorField deformed_bracket(const VectorField& x, const VectorField& y, const OneOneTensor& r);

// Coordinate Schouten bracket of bivectors:
// [p, s]^{ijk} = sum over cyclic (ijk) of p^{il} d_l s^{jk} + s^{il} d_l p^{jk}.
Multivector schouten_bivector(const Bivector& p, const Bivector& s);

}  // namespace dnk

#endif
