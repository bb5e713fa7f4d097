#ifndef DNK_HOLOMORPHIC_HOLOMORPHIC_HPP
#define DNK_HOLOMORPHIC_HOLOMORPHIC_HPP

#include "dnk/dirac/checks.hpp"

namespace dnk {

struct InvalidComplexStructure : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// (1,1)-tensor with r^2 = -id and vanishing torsion on an even-dimensional chart.
class ComplexStructure {
public:
    explicit ComplexStructure(OneOneTensor r);
    // J(d_{2k}) = d_{2k+1} on a chart ordered (x1, y1, x2, y2, ...).
    static ComplexStructure standard(const Chart& c);

    const OneOneTensor& tensor() const { return r_; }
    const Chart& chart() const { return r_.chart(); }

private:
    OneOneTensor r_;
};

// Same variables, complex mode.
Chart complexified(const Chart& c);

// Section of the complexified bundle stored as real + i * imaginary.
struct ComplexGSection {
    GSection re;
    GSection im;
    // Components in Q(i) on the complexified chart.
    GSection value() const;
    friend bool operator==(const ComplexGSection& a, const ComplexGSection& b) { return a.re == b.re && a.im == b.im; }
};

// (X, a) -> (1/2 (X - i rX), a - i r* a).
ComplexGSection phi_map(const GSection& s, const ComplexStructure& j);
// Complex-bilinear extension of the pairing.
Scalar complex_pairing(const ComplexGSection& a, const ComplexGSection& b);
// Complex-bilinear extension of the Dorfman bracket, expanded into real brackets.
ComplexGSection complex_courant(const ComplexGSection& a, const ComplexGSection& b);

// Dirac-Nijenhuis checks with r = J; the note names the failing side.
CheckResult check_holomorphic_dirac(const GFrame& l, const ComplexStructure& j, unsigned samples = 3);

// Real and imaginary parts of a holomorphic form.
struct HoloForm {
    PForm re;
    PForm im;
};
// (w, -w_J); throws NotSkew when w_J is not skew.
HoloForm holo_form_from_real(const PForm& w, const ComplexStructure& j);
CheckResult check_holo_form(const HoloForm& f, const ComplexStructure& j);

// D^J_{d_k} s = 0 for every coordinate field.
bool is_holomorphic_section(const GSection& s, const ComplexStructure& j);
// Phi([[s1, s2]]) = [[Phi s1, Phi s2]] for holomorphic s1, s2; throws PreconditionError otherwise.
CheckResult phi_courant_check(const GSection& s1, const GSection& s2, const ComplexStructure& j);

}  // namespace dnk

#endif
