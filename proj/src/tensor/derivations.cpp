#include "dnk/tensor/derivations.hpp"

namespace dnk {

VectorField D_r(const VectorField& x, const VectorField& y, const OneOneTensor& r) {
    require_same_chart(x.chart(), r.chart(), "D^r");
    return lie_bracket(y, r.apply(x)) - r.apply(lie_bracket(y, x));
}

PForm D_r_star(const VectorField& x, const PForm& alpha, const OneOneTensor& r) {
    require_same_chart(x.chart(), r.chart(), "D^{r,*}");
    if (alpha.degree() != 1) throw std::invalid_argument("D^{r,*} acts on one-forms");
    const PForm ra = r.dual_apply(alpha);
    const VectorField rx = r.apply(x);
    PForm lie_form = lie_deriv_form(x, ra) - lie_deriv_form(rx, alpha);
    PForm d_form = interior(x, ext_d(ra)) - interior(rx, ext_d(alpha));
    if (!(lie_form == d_form)) throw std::logic_error("D^{r,*}: the two defining expressions disagree");
    return lie_form;
}

PForm D_r_star_pform(const VectorField& y, const PForm& w, const OneOneTensor& r) {
    require_same_chart(y.chart(), w.chart(), "D^{r,*}");
    CovFormValued wr = form_r(w, r);
    if (auto bad = skew_witness(wr)) throw NotSkew("w_r is not skew-symmetric: " + w.chart().print(*bad));
    PForm skew = to_form(wr);
    const int n = w.dim();
    if (w.degree() >= n) return PForm(w.chart(), w.degree());
    return interior(y, ext_d(skew)) - interior(r.apply(y), ext_d(w));
}

VectorField nijenhuis_on(const OneOneTensor& r, const VectorField& x, const VectorField& y) {
    const VectorField rx = r.apply(x), ry = r.apply(y);
    VectorField inner = lie_bracket(rx, y) + lie_bracket(x, ry) - r.apply(lie_bracket(x, y));
    return lie_bracket(rx, ry) - r.apply(inner);
}

VectorValuedTwoForm nijenhuis_torsion(const OneOneTensor& r) {
    const Chart& c = r.chart();
    const int n = c.dim();
    VectorValuedTwoForm out(c);
    const auto& pairs = index_tuples(n, 2);
    for (std::size_t pos = 0; pos < pairs.size(); ++pos) {
        VectorField v = nijenhuis_on(r, VectorField::coordinate(c, pairs[pos][0]), VectorField::coordinate(c, pairs[pos][1]));
        for (int i = 0; i < n; ++i) out.at(i, pos) = v[i];
    }
    return out;
}

VectorField torsion_via_D(const OneOneTensor& r, const VectorField& x, const VectorField& y) {
    return r.apply(D_r(x, y, r)) - D_r(x, r.apply(y), r);
}

Scalar torsion_via_Dstar(const OneOneTensor& r, const VectorField& x, const VectorField& y, const PForm& alpha) {
    PForm f = r.dual_apply(D_r_star(x, alpha, r)) - D_r_star(x, r.dual_apply(alpha), r);
    return pair(f, y);
}

VectorField deformed_bracket(const VectorField& x, const VectorField& y, const OneOneTensor& r) {
    return lie_bracket(r.apply(x), y) + lie_bracket(x, r.apply(y)) - r.apply(lie_bracket(x, y));
}

Multivector schouten_bivector(const Bivector& p, const Bivector& s) {
    require_same_chart(p.chart(), s.chart(), "Schouten bracket");
    const Chart& c = p.chart();
    const int n = c.dim();
    Multivector out(c, 3);
    // Derivatives are reused across cyclic terms.
    std::vector<Scalar> dp(n * n * n), ds(n * n * n);
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                dp[(j * n + k) * n + l] = p.at(j, k).diff(l);
                ds[(j * n + k) * n + l] = s.at(j, k).diff(l);
            }
    auto deriv = [&](const std::vector<Scalar>& d, int j, int k, int l) -> Scalar {
        if (j < k) return d[(j * n + k) * n + l];
        return -d[(k * n + j) * n + l];
    };
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const auto& t = out.tuple(pos);
        Scalar sum = c.zero();
        for (int cyc = 0; cyc < 3; ++cyc) {
            int i = t[cyc], j = t[(cyc + 1) % 3], k = t[(cyc + 2) % 3];
            for (int l = 0; l < n; ++l) {
                if (!p.at(i, l).is_zero()) {
                    Scalar d = deriv(ds, j, k, l);
                    if (!d.is_zero()) sum += p.at(i, l) * d;
                }
                if (!s.at(i, l).is_zero()) {
                    Scalar d = deriv(dp, j, k, l);
                    if (!d.is_zero()) sum += s.at(i, l) * d;
                }
            }
        }
        out.at(pos) = sum;
    }
    return out;
}

}  // namespace dnk
