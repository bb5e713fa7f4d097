#ifndef DNK_DIRAC_CHECKS_HPP
#define DNK_DIRAC_CHECKS_HPP

#include "dnk/dirac/frame.hpp"

namespace dnk {

// Pairings vanish identically and the frame has rank n (sampled).
CheckResult check_lagrangian(const GFrame& l, unsigned samples = 3);
// Throws PreconditionError unless the pairings vanish and the generic rank is n.
void require_lagrangian(const GFrame& l, const char* where);

// <[[s_i, s_j]], s_k> = 0 on the frame.
CheckResult check_involutive(const GFrame& l);
// <(r, r*) s_i, s_j> = 0 on the frame.
CheckResult check_invariance(const GFrame& l, const OneOneTensor& r);
// <D^r_{d_k} s_i, s_j> = 0; requires invariance.
CheckResult check_D_stability(const GFrame& l, const OneOneTensor& r);
CheckResult check_nijenhuis(const OneOneTensor& r);

struct DNReport {
    CheckResult lagrangian{"lagrangian"};
    CheckResult involutive{"involutive"};
    CheckResult invariance{"invariance"};
    CheckResult d_stability{"D_stability"};
    CheckResult nijenhuis{"nijenhuis"};

    std::vector<const CheckResult*> all() const {
        return {&lagrangian, &involutive, &invariance, &d_stability, &nijenhuis};
    }
    Verdict overall() const;
    // Compatible pair: the first four checks, without the torsion.
    Verdict compatible() const;
};
// Never throws on failed preconditions: dependent checks are reported as not run.
DNReport dirac_nijenhuis_report(const GFrame& l, const OneOneTensor& r, unsigned samples = 3);

// pi#(L_X r* a - L_{rX} a) - (L_{pi# a} r)(X).
VectorField concomitant_R(const Bivector& pi, const OneOneTensor& r, const VectorField& x, const PForm& alpha);
// [a, b]_L = L_{L# a} b - i_{L# b} da.
PForm koszul_bracket(const Bivector& lambda, const PForm& alpha, const PForm& beta);
// Bivector with sharp r o pi#; throws PreconditionError when that map is not skew.
Bivector deformed_bivector(const Bivector& pi, const OneOneTensor& r);
// [a, b]_{pi_r} - ([r*a, b]_pi + [a, r*b]_pi - r*[a, b]_pi).
PForm concomitant_C(const Bivector& pi, const OneOneTensor& r, const PForm& alpha, const PForm& beta);
// D^{r,*}_X(w(Y)) - w(D^r_X Y), with w(Y) = i_Y w.
PForm concomitant_S_tilde(const PForm& w, const OneOneTensor& r, const VectorField& x, const VectorField& y);
// i_X L_{rY} w - i_Y L_{rX} w - i_{r[X,Y]} w + d(w(rY, X)).
PForm concomitant_S(const PForm& w, const OneOneTensor& r, const VectorField& x, const VectorField& y);

// w_r skew and d(w_r) = (dw)_r.
CheckResult check_form_compat(const PForm& w, const OneOneTensor& r);

// <a, N_r(Y, Z)> + phi(X, Y, Z) = 0 for frame elements (X, a); throws PreconditionError if dphi != 0.
CheckResult quasi_nijenhuis_check(const GFrame& l, const OneOneTensor& r, const PForm& phi);

// Invariance, D-stability along vector parts of the frame, torsion on vector parts.
CheckResult check_contraction_type(const GFrame& l, const OneOneTensor& r);
// r Nijenhuis; L and (r, id)(L) closed under the Courant and the r-deformed brackets.
CheckResult check_double_type(const GFrame& l, const OneOneTensor& r);

}  // namespace dnk

#endif
