#ifndef DNK_ALGEBROID_ALGEBROID_HPP
#define DNK_ALGEBROID_ALGEBROID_HPP

#include "dnk/dirac/checks.hpp"

namespace dnk {

// Section of A as coefficients on the frame e_1..e_m.
using ASection = std::vector<Scalar>;

// Lie algebroid of rank m on a chart, given on a frame e_a by the anchor images
// and the structure functions [e_a, e_b] = sum_c c^c_ab e_c.
struct AlgebroidData {
    Chart chart;
    std::vector<VectorField> anchor;                   // rho(e_a)
    std::vector<std::vector<ASection>> structure;      // structure[a][b][c] = c^c_ab

    AlgebroidData() = default;
    AlgebroidData(const Chart& c, std::vector<VectorField> rho);  // zero bracket
    int rank() const { return static_cast<int>(anchor.size()); }

    ASection zero() const { return ASection(anchor.size(), chart.zero()); }
    ASection unit(int a) const;
    ASection scaled(const Scalar& f, const ASection& s) const;
    VectorField rho(const ASection& s) const;
    // Frame bracket extended by the anchor Leibniz rule.
    ASection bracket(const ASection& s1, const ASection& s2) const;

    static AlgebroidData tangent(const Chart& c);
    static AlgebroidData abelian(const Chart& c, int rank);
};

ASection operator+(const ASection& a, const ASection& b);
ASection operator-(const ASection& a, const ASection& b);
bool is_zero(const ASection& s);

// Antisymmetry of c, anchor morphism and Jacobi on frame triples.
CheckResult check_algebroid(const AlgebroidData& a);

// Bundle maps mu: A -> forms of degree p - 1 and nu: A -> forms of degree p, by frame values.
struct IMForm {
    int degree = 2;
    std::vector<PForm> mu;
    std::vector<PForm> nu;

    PForm mu_of(const ASection& s) const;
    PForm nu_of(const ASection& s) const;
};
IMForm zero_im_form(const AlgebroidData& a, int degree);

// Defects of the three IM equations on a pair of sections, in the order
// mu-bracket, nu-bracket, symmetry. Used by check_IM_form and the scaling tests.
std::vector<PForm> im_form_defects(const AlgebroidData& a, const IMForm& f, const ASection& s1, const ASection& s2);
// Throws PreconditionError unless check_algebroid passes.
CheckResult check_IM_form(const AlgebroidData& a, const IMForm& f);

struct DiracAlgebroid {
    AlgebroidData algebroid;
    IMForm form;       // mu = covector parts, nu = 0
    bool transversal;  // rank = dim and ker(rho) meets ker(mu) trivially
};
// L as a Lie algebroid with the Courant bracket; throws PreconditionError when a
// bracket leaves the span of the frame.
DiracAlgebroid dirac_to_algebroid(const GFrame& l);

// 1-derivation on A compatible with r: values of D_{d_k}(e_a) and l(e_a).
struct IMOneOne {
    OneOneTensor r;
    std::vector<ASection> l;                  // l[a] = l(e_a)
    std::vector<std::vector<ASection>> d;     // d[k][a] = D_{d_k}(e_a)

    ASection apply_l(const ASection& s) const;
    // D_X(sum f^a e_a) = sum f^a D_X e_a + X(f^a) l(e_a) - (rX)(f^a) e_a.
    ASection apply_D(const VectorField& x, const ASection& s) const;
};
// (D^r, r, r) on the tangent algebroid.
IMOneOne tangent_im_tensor(const OneOneTensor& r);
// (D^r, (r, r*), r) restricted to the frame; throws PreconditionError when L is not
// invariant or not D-stable.
IMOneOne transport_im_tensor(const GFrame& l, const OneOneTensor& r);

// l(D_[X,Y] a) - [D_X, D_Y] a - D_{[X,Y]_r} a.
ASection im_curvature(const IMOneOne& t, const VectorField& x, const VectorField& y, const ASection& s);

// Both throw PreconditionError unless check_algebroid passes.
CheckResult check_IM_oneone(const AlgebroidData& a, const IMOneOne& t);
CheckResult check_IM_nijenhuis(const AlgebroidData& a, const IMOneOne& t);
// mu l = mu_r, nu l = nu_r, mu D_X = D^{r,*}_X mu, nu D_X = D^{r,*}_X nu on frame sections.
// Needs degree >= 2 and passing component checks, else PreconditionError.
CheckResult check_IM_compat(const AlgebroidData& a, const IMForm& f, const IMOneOne& t);

// l^2 = -id, r^2 = -id, l D_X + D_{rX} = 0 and the torsion-free conditions.
CheckResult check_dolbeault(const AlgebroidData& a, const IMOneOne& t);
// Real-part criterion for a holomorphic IM form mu - i mu l, nu - i nu l;
// throws PreconditionError when t is not Dolbeault.
CheckResult real_part_IM(const AlgebroidData& a, const IMForm& f, const IMOneOne& t);

// N_r*(mu(e_a)) = -i_{rho(e_a)} phi for every frame section; throws PreconditionError if dphi != 0.
CheckResult quasi_IM_check(const AlgebroidData& a, const IMForm& f, const OneOneTensor& r, const PForm& phi);
// The 3-form part nu~ of the torsion IM form, on frame sections and coordinate triples.
CheckResult check_quasi_nu_tilde(const AlgebroidData& a, const IMForm& f, const IMOneOne& t);

}  // namespace dnk

#endif
