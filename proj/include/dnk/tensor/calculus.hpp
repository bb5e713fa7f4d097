#ifndef DNK_TENSOR_CALCULUS_HPP
#define DNK_TENSOR_CALCULUS_HPP

#include "dnk/tensor/fields.hpp"

#include <optional>

namespace dnk {

// Form evaluation uses the determinant convention: (dx^1 ^ dx^2)(d1, d2) = 1,
// and i_X w = w(X, ...).

VectorField lie_bracket(const VectorField& x, const VectorField& y);
PForm ext_d(const PForm& w);
PForm interior(const VectorField& x, const PForm& w);
PForm wedge(const PForm& a, const PForm& b);
PForm lie_deriv_form(const VectorField& x, const PForm& w);  // d i_X + i_X d
OneOneTensor lie_deriv_tensor(const VectorField& x, const OneOneTensor& r);
Scalar eval_form(const PForm& w, const std::vector<VectorField>& args);

// w_r(X1; X2, ..., Xp) = w(r X1, X2, ..., Xp).
CovFormValued form_r(const PForm& w, const OneOneTensor& r);
bool is_skew(const CovFormValued& t);
std::optional<Scalar> skew_witness(const CovFormValued& t);  // a nonzero antisymmetry defect
// Antisymmetric tensor as a p-form; pre: is_skew(t).
PForm to_form(const CovFormValued& t);

// Flat map of a two-form, B(X) = i_X B.
PForm flat(const PForm& b, const VectorField& x);

// Pullback of a form along a map from `source` into the chart of w, given by
// the target coordinates as functions on the source chart.
PForm pullback(const PForm& w, const Chart& source, const std::vector<Scalar>& map);

// Push a scalar through a coordinate embedding of charts (variables matched by name).
Scalar embed(const Scalar& f, const Chart& from, const Chart& to);
VectorField embed(const VectorField& x, const Chart& to);
PForm embed(const PForm& w, const Chart& to);
OneOneTensor embed(const OneOneTensor& r, const Chart& to);

}  // namespace dnk

#endif
