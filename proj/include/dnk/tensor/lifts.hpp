#ifndef DNK_TENSOR_LIFTS_HPP
#define DNK_TENSOR_LIFTS_HPP

#include "dnk/tensor/derivations.hpp"

namespace dnk {

// Tangent bundle chart (x, v_x) and cotangent bundle chart (x, p_x).
Chart tangent_chart(const Chart& base);
Chart cotangent_chart(const Chart& base);

// Lift of r to TM built from the 1-derivation (D^r, r, r).
OneOneTensor tangent_lift(const OneOneTensor& r);
// Lift of r to T*M solved from i_{K U} w_can = i_U (phi_r^* w_can), w_can = dp_i ^ dx^i.
OneOneTensor cotangent_lift(const OneOneTensor& r);
// Canonical symplectic form on the cotangent chart.
PForm canonical_symplectic(const Chart& base);

// u^i d/dv^i on the tangent chart.
VectorField vertical_lift(const VectorField& u);
// (1,1)-tensor on TM from a TM-valued one-form on M given by its values on d/dx^j.
OneOneTensor vertical_tensor(const Chart& base, const std::vector<VectorField>& values);

// Defects of <<K U, K^T V>> = <<T r (U), V>> on the chart (x, v, p), one per
// unit tangent direction (dx, dv, dp); all vanish when the cotangent lift is
// the transpose of the tangent lift.
std::vector<Scalar> lift_pairing_defects(const OneOneTensor& r);

// Entries of T(pi#) o r^cotg - r^tg o T(pi#) on the cotangent chart.
std::vector<Scalar> intertwining_defects(const Bivector& pi, const OneOneTensor& r);

}  // namespace dnk

#endif
