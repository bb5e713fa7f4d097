#include "dnk/courant/courant.hpp"

namespace dnk {

GSection::GSection(VectorField x, PForm a) : vec(std::move(x)), form(std::move(a)) {
    require_same_chart(vec.chart(), form.chart(), "section");
    if (form.degree() != 1) throw std::invalid_argument("section covector part must be a one-form");
}

Scalar pairing(const GSection& s1, const GSection& s2) {
    require_same_chart(s1.chart(), s2.chart(), "pairing");
    return pair(s2.form, s1.vec) + pair(s1.form, s2.vec);
}

GSection courant_bracket(const GSection& s1, const GSection& s2) {
    require_same_chart(s1.chart(), s2.chart(), "Courant bracket");
    PForm f = lie_deriv_form(s1.vec, s2.form);
    if (s1.chart().dim() > 1) f -= interior(s2.vec, ext_d(s1.form));
    return GSection(lie_bracket(s1.vec, s2.vec), f);
}

GSection apply_rr(const OneOneTensor& r, const GSection& s) { return GSection(r.apply(s.vec), r.dual_apply(s.form)); }

GSection big_D(const VectorField& x, const GSection& s, const OneOneTensor& r) {
    require_same_chart(x.chart(), s.chart(), "D^r");
    return GSection(D_r(x, s.vec, r), D_r_star(x, s.form, r));
}

PForm concomitant_CL(const GSection& s1, const GSection& s2, const OneOneTensor& r) {
    const Chart& c = s1.chart();
    PForm out(c, 1);
    for (int j = 0; j < c.dim(); ++j) out[j] = pairing(big_D(VectorField::coordinate(c, j), s1, r), s2);
    return out;
}

namespace {

PForm i_d(const VectorField& y, const PForm& a) {
    if (a.dim() < 2) return PForm(a.chart(), 1);
    return interior(y, ext_d(a));
}

}  // namespace

GSection bracket_Dr(const GSection& s1, const GSection& s2, const OneOneTensor& r) {
    require_same_chart(s1.chart(), s2.chart(), "D^r bracket");
    GSection closed(deformed_bracket(s1.vec, s2.vec, r),
                    lie_deriv_form(r.apply(s1.vec), s2.form) - i_d(r.apply(s2.vec), s1.form));
    GSection defining = courant_bracket(apply_rr(r, s1), s2) + big_D(s2.vec, s1, r);
    if (!(closed == defining)) throw std::logic_error("D^r bracket: closed form disagrees with its definition");
    return closed;
}

GSection contracted_bracket(const GSection& s1, const GSection& s2, const OneOneTensor& r) {
    auto n = [&](const GSection& s) { return GSection::vector(r.apply(s.vec)); };
    GSection out = courant_bracket(n(s1), s2) + courant_bracket(s1, n(s2)) - n(courant_bracket(s1, s2));
    if (!(out == bracket_Dr(s1, s2, r))) throw std::logic_error("contracted bracket differs from the D^r bracket");
    return out;
}

GSection contracted_torsion(const GSection& s1, const GSection& s2, const OneOneTensor& r) {
    auto n = [&](const GSection& s) { return GSection::vector(r.apply(s.vec)); };
    return courant_bracket(n(s1), n(s2)) - n(contracted_bracket(s1, s2, r));
}

PForm d_r_function(const Scalar& f, const OneOneTensor& r) {
    return r.dual_apply(ext_d(PForm::function(r.chart(), f)));
}

PForm d_r_one_form(const PForm& a, const OneOneTensor& r) {
    const Chart& c = a.chart();
    PForm out(c, 2);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const int j = out.tuple(pos)[0], k = out.tuple(pos)[1];
        const VectorField dj = VectorField::coordinate(c, j), dk = VectorField::coordinate(c, k);
        out.at(pos) = r.apply(dj).apply(a[k]) - r.apply(dk).apply(a[j]) - pair(a, deformed_bracket(dj, dk, r));
    }
    return out;
}

PForm lie_r(const VectorField& x, const PForm& b, const OneOneTensor& r) {
    return interior(x, d_r_one_form(b, r)) + d_r_function(pair(b, x), r);
}

GSection double_bracket(const GSection& s1, const GSection& s2, const OneOneTensor& r) {
    require_same_chart(s1.chart(), s2.chart(), "double bracket");
    return GSection(deformed_bracket(s1.vec, s2.vec, r),
                    lie_r(s1.vec, s2.form, r) - interior(s2.vec, d_r_one_form(s1.form, r)));
}

GSection D_square(const VectorField& x, const VectorField& y, const GSection& s, const OneOneTensor& r) {
    GSection a = apply_rr(r, big_D(lie_bracket(x, y), s, r));
    GSection comm = big_D(x, big_D(y, s, r), r) - big_D(y, big_D(x, s, r), r);
    return a - comm - big_D(deformed_bracket(x, y, r), s, r);
}

}  // namespace dnk
