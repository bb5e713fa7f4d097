#include "dnk/holomorphic/holomorphic.hpp"

#include <tuple>

namespace dnk {

ComplexStructure::ComplexStructure(OneOneTensor r) : r_(std::move(r)) {
    const Chart& c = r_.chart();
    if (c.dim() % 2 != 0) throw InvalidComplexStructure("complex structure needs an even-dimensional chart");
    if (!(r_.compose(r_) == -OneOneTensor::identity(c))) throw InvalidComplexStructure("r^2 != -id");
    if (!nijenhuis_torsion(r_).is_zero()) throw InvalidComplexStructure("complex structure has torsion");
}

ComplexStructure ComplexStructure::standard(const Chart& c) {
    if (c.dim() % 2 != 0) throw InvalidComplexStructure("complex structure needs an even-dimensional chart");
    OneOneTensor j(c);
    for (int k = 0; k < c.dim(); k += 2) {
        j.at(k + 1, k) = c.one();
        j.at(k, k + 1) = -c.one();
    }
    return ComplexStructure(j);
}

Chart complexified(const Chart& c) { return Chart(c.name(), c.variables(), Mode::complex); }

namespace {

const Coeff& imag_unit() {
    static const Coeff i = Coeff::imag_unit();
    return i;
}

Scalar with_i(const Scalar& re, const Scalar& im) { return re + im.scaled(imag_unit()); }

}  // namespace

GSection ComplexGSection::value() const {
    const Chart c = complexified(re.chart());
    const int n = c.dim();
    VectorField x(c);
    PForm a(c, 1);
    for (int k = 0; k < n; ++k) {
        x[k] = with_i(re.vec[k], im.vec[k]);
        a[k] = with_i(re.form[k], im.form[k]);
    }
    return GSection(x, a);
}

ComplexGSection phi_map(const GSection& s, const ComplexStructure& j) {
    require_same_chart(s.chart(), j.chart(), "Phi");
    const OneOneTensor& r = j.tensor();
    const Scalar half = s.chart().constant(Coeff(Rational(1, 2)));
    return {GSection(half * s.vec, s.form), GSection(-(half * r.apply(s.vec)), -r.dual_apply(s.form))};
}

Scalar complex_pairing(const ComplexGSection& a, const ComplexGSection& b) {
    return with_i(pairing(a.re, b.re) - pairing(a.im, b.im), pairing(a.re, b.im) + pairing(a.im, b.re));
}

ComplexGSection complex_courant(const ComplexGSection& a, const ComplexGSection& b) {
    return {courant_bracket(a.re, b.re) - courant_bracket(a.im, b.im),
            courant_bracket(a.re, b.im) + courant_bracket(a.im, b.re)};
}

CheckResult check_holomorphic_dirac(const GFrame& l, const ComplexStructure& j, unsigned samples) {
    DNReport rep = dirac_nijenhuis_report(l, j.tensor(), samples);
    CheckResult out("holomorphic_dirac");
    std::string pending;
    auto absorb = [&](const CheckResult& c, const char* side) {
        if (c.failed() && !out.failed()) out.note = side;
        for (const auto& w : c.witnesses) out.fail_with(c.name + ": " + w.label, w.value, l.chart);
        if (c.failed()) out.fail_note(side);
        if (c.verdict == Verdict::inconclusive && pending.empty()) pending = c.note;
    };
    absorb(rep.lagrangian, "real part is not a Dirac structure");
    absorb(rep.involutive, "real part is not a Dirac structure");
    absorb(rep.invariance, "real part is not compatible with J");
    absorb(rep.d_stability, "real part is not compatible with J");
    if (!out.failed() && !pending.empty()) out.mark_inconclusive(pending);
    return out;
}

HoloForm holo_form_from_real(const PForm& w, const ComplexStructure& j) {
    require_same_chart(w.chart(), j.chart(), "holomorphic form");
    CovFormValued wj = form_r(w, j.tensor());
    if (!is_skew(wj)) throw NotSkew("w_J is not skew-symmetric");
    return {w, -to_form(wj)};
}

CheckResult check_holo_form(const HoloForm& f, const ComplexStructure& j) {
    require_same_chart(f.re.chart(), j.chart(), "holomorphic form");
    require_same_chart(f.im.chart(), j.chart(), "holomorphic form");
    CheckResult out = check_form_compat(f.re, j.tensor());
    out.name = "holo_form";
    if (out.failed()) return out;
    if (f.im.degree() != f.re.degree()) {
        out.fail_note("real and imaginary parts differ in degree");
        return out;
    }
    const PForm wj = to_form(form_r(f.re, j.tensor()));
    for (std::size_t pos = 0; pos < f.im.size(); ++pos) {
        Scalar t = f.im.at(pos) + wj.at(pos);
        if (!t.is_zero()) {
            std::string label = "im + w_J at (";
            for (std::size_t k = 0; k < f.im.tuple(pos).size(); ++k)
                label += (k ? "," : "") + j.chart().variables()[f.im.tuple(pos)[k]];
            out.fail_with(label + ")", t, j.chart());
        }
    }
    return out;
}

bool is_holomorphic_section(const GSection& s, const ComplexStructure& j) {
    for (int k = 0; k < s.chart().dim(); ++k)
        if (!big_D(VectorField::coordinate(s.chart(), k), s, j.tensor()).is_zero()) return false;
    return true;
}

CheckResult phi_courant_check(const GSection& s1, const GSection& s2, const ComplexStructure& j) {
    if (!is_holomorphic_section(s1, j) || !is_holomorphic_section(s2, j))
        throw PreconditionError("Courant preservation: section is not holomorphic");
    CheckResult out("phi_courant");
    ComplexGSection lhs = phi_map(courant_bracket(s1, s2), j);
    ComplexGSection rhs = complex_courant(phi_map(s1, j), phi_map(s2, j));
    const Chart& c = s1.chart();
    for (int k = 0; k < c.dim(); ++k) {
        const std::string v = c.variables()[k];
        for (auto [part, a, b] : {std::tuple{"re", &lhs.re, &rhs.re}, std::tuple{"im", &lhs.im, &rhs.im}}) {
            Scalar dv = a->vec[k] - b->vec[k];
            Scalar df = a->form[k] - b->form[k];
            if (!dv.is_zero()) out.fail_with(std::string(part) + " d_" + v, dv, c);
            if (!df.is_zero()) out.fail_with(std::string(part) + " d" + v, df, c);
        }
    }
    return out;
}

}  // namespace dnk
