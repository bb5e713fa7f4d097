#ifndef DNK_COURANT_COURANT_HPP
#define DNK_COURANT_COURANT_HPP

#include "dnk/tensor/derivations.hpp"

namespace dnk {

// Section (X, a) of TM + T*M.
struct GSection {
    VectorField vec;
    PForm form;

    GSection() = default;
    explicit GSection(const Chart& c) : vec(c), form(c, 1) {}
    GSection(VectorField x, PForm a);
    static GSection vector(const VectorField& x) { return GSection(x, PForm(x.chart(), 1)); }
    static GSection covector(const PForm& a) { return GSection(VectorField(a.chart()), a); }

    const Chart& chart() const { return vec.chart(); }
    bool is_zero() const { return vec.is_zero() && form.is_zero(); }
    GSection operator-() const { return GSection(-vec, -form); }
    friend GSection operator+(const GSection& a, const GSection& b) { return GSection(a.vec + b.vec, a.form + b.form); }
    friend GSection operator-(const GSection& a, const GSection& b) { return GSection(a.vec - b.vec, a.form - b.form); }
    friend GSection operator*(const Scalar& f, const GSection& s) { return GSection(f * s.vec, f * s.form); }
    friend bool operator==(const GSection& a, const GSection& b) { return a.vec == b.vec && a.form == b.form; }
};

// <(X, a), (Y, b)> = b(X) + a(Y).
Scalar pairing(const GSection& s1, const GSection& s2);
// Dorfman bracket ([X, Y], L_X b - i_Y da).
GSection courant_bracket(const GSection& s1, const GSection& s2);
// (r, r*)(X, a) = (rX, r* a).
GSection apply_rr(const OneOneTensor& r, const GSection& s);

// (D^r_X(Y), D^{r,*}_X(a)).
GSection big_D(const VectorField& x, const GSection& s, const OneOneTensor& r);
// The one-form X -> <D^r_X s1, s2>.
PForm concomitant_CL(const GSection& s1, const GSection& s2, const OneOneTensor& r);

// ([X, Y]_r, L_{rX} b - i_{rY} da); cross-checked against [[(rX, r*a), (Y, b)]] + D^r_Y(X, a).
GSection bracket_Dr(const GSection& s1, const GSection& s2, const OneOneTensor& r);
// Bracket contracted by N = (r, 0); cross-checked against bracket_Dr.
GSection contracted_bracket(const GSection& s1, const GSection& s2, const OneOneTensor& r);
// [[N s1, N s2]] - N [[s1, s2]]_N for N = (r, 0).
GSection contracted_torsion(const GSection& s1, const GSection& s2, const OneOneTensor& r);

// Cartan calculus of the Lie algebroid (TM, [., .]_r, r).
PForm d_r_function(const Scalar& f, const OneOneTensor& r);  // r* df
PForm d_r_one_form(const PForm& a, const OneOneTensor& r);
PForm lie_r(const VectorField& x, const PForm& b, const OneOneTensor& r);  // i_X d^r b + d^r i_X b
// ([X, Y]_r, L^r_X b - i_Y d^r a).
GSection double_bracket(const GSection& s1, const GSection& s2, const OneOneTensor& r);

// (r,r*)(D_{[X,Y]} s) - [D_X, D_Y] s - D_{[X,Y]_r} s.
GSection D_square(const VectorField& x, const VectorField& y, const GSection& s, const OneOneTensor& r);

}  // namespace dnk

#endif
