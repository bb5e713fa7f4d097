#include "dnk/algebroid/algebroid.hpp"

#include "dnk/tensor/derivations.hpp"

namespace dnk {

namespace {

std::string sec_name(int a) { return "e" + std::to_string(a + 1); }

std::string args_label(const Chart& c, const std::vector<int>& idx) {
    std::string s = "(";
    for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + c.variables()[idx[k]];
    return s + ")";
}

void form_witnesses(CheckResult& out, const std::string& label, const PForm& w) {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        if (!w.at(pos).is_zero())
            out.fail_with(w.degree() == 0 ? label : label + args_label(w.chart(), w.tuple(pos)), w.at(pos), w.chart());
}

void section_witnesses(CheckResult& out, const std::string& label, const ASection& s, const Chart& c) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (!s[k].is_zero()) out.fail_with(label + "^" + sec_name(static_cast<int>(k)), s[k], c);
}

void field_witnesses(CheckResult& out, const std::string& label, const VectorField& x) {
    for (int k = 0; k < x.dim(); ++k)
        if (!x[k].is_zero()) out.fail_with(label + "^" + x.chart().variables()[k], x[k], x.chart());
}

// Interior product and Lie derivative that treat forms above the top degree as zero.
PForm contract(const VectorField& x, const PForm& w) {
    if (w.degree() == 0) return PForm(w.chart(), 0);
    if (w.degree() > w.dim()) return PForm(w.chart(), w.degree() - 1);
    return interior(x, w);
}

PForm lie(const VectorField& x, const PForm& w) {
    if (w.degree() > w.dim()) return PForm(w.chart(), w.degree());
    return lie_deriv_form(x, w);
}

PForm dual_D(const VectorField& y, const PForm& w, const OneOneTensor& r) {
    if (w.degree() >= w.dim()) return PForm(w.chart(), w.degree());
    return D_r_star_pform(y, w, r);
}

void require_algebroid(const AlgebroidData& a, const char* where) {
    if (!check_algebroid(a).passed()) throw PreconditionError(std::string(where) + ": not a Lie algebroid");
}

ASection coordinates_or_throw(const GFrame& l, const GSection& s, const char* what) {
    auto c = frame_coordinates(l, s);
    if (!c) throw PreconditionError(what);
    return *c;
}

}  // namespace

ASection operator+(const ASection& a, const ASection& b) {
    ASection out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

ASection operator-(const ASection& a, const ASection& b) {
    ASection out = a;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
    return out;
}

bool is_zero(const ASection& s) {
    for (const auto& x : s)
        if (!x.is_zero()) return false;
    return true;
}

AlgebroidData::AlgebroidData(const Chart& c, std::vector<VectorField> rho) : chart(c), anchor(std::move(rho)) {
    for (const auto& x : anchor) require_same_chart(chart, x.chart(), "anchor");
    structure.assign(anchor.size(), std::vector<ASection>(anchor.size(), zero()));
}

ASection AlgebroidData::unit(int a) const {
    ASection s = zero();
    s[a] = chart.one();
    return s;
}

ASection AlgebroidData::scaled(const Scalar& f, const ASection& s) const {
    ASection out = s;
    for (auto& x : out) x = f * x;
    return out;
}

VectorField AlgebroidData::rho(const ASection& s) const {
    VectorField out(chart);
    for (std::size_t a = 0; a < s.size(); ++a)
        if (!s[a].is_zero()) out += s[a] * anchor[a];
    return out;
}

ASection AlgebroidData::bracket(const ASection& s1, const ASection& s2) const {
    const int m = rank();
    ASection out = zero();
    for (int a = 0; a < m; ++a) {
        if (s1[a].is_zero()) continue;
        for (int b = 0; b < m; ++b) {
            if (s2[b].is_zero()) continue;
            Scalar f = s1[a] * s2[b];
            for (int c = 0; c < m; ++c)
                if (!structure[a][b][c].is_zero()) out[c] += f * structure[a][b][c];
        }
    }
    VectorField x1 = rho(s1), x2 = rho(s2);
    for (int c = 0; c < m; ++c) out[c] += x1.apply(s2[c]) - x2.apply(s1[c]);
    return out;
}

AlgebroidData AlgebroidData::tangent(const Chart& c) {
    std::vector<VectorField> rho;
    for (int k = 0; k < c.dim(); ++k) rho.push_back(VectorField::coordinate(c, k));
    return AlgebroidData(c, rho);
}

AlgebroidData AlgebroidData::abelian(const Chart& c, int rank) {
    return AlgebroidData(c, std::vector<VectorField>(rank, VectorField(c)));
}

CheckResult check_algebroid(const AlgebroidData& a) {
    CheckResult out("algebroid");
    const int m = a.rank();
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            section_witnesses(out, "c(" + sec_name(i) + "," + sec_name(j) + ")+c(" + sec_name(j) + "," + sec_name(i) + ")",
                              a.structure[i][j] + a.structure[j][i], a.chart);
    if (out.failed()) return out;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            field_witnesses(out, "rho[" + sec_name(i) + "," + sec_name(j) + "]",
                            a.rho(a.bracket(a.unit(i), a.unit(j))) - lie_bracket(a.anchor[i], a.anchor[j]));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                ASection ei = a.unit(i), ej = a.unit(j), ek = a.unit(k);
                ASection jac = a.bracket(a.bracket(ei, ej), ek) + a.bracket(a.bracket(ej, ek), ei) +
                               a.bracket(a.bracket(ek, ei), ej);
                section_witnesses(out, "Jacobi(" + sec_name(i) + "," + sec_name(j) + "," + sec_name(k) + ")", jac, a.chart);
            }
    return out;
}

PForm IMForm::mu_of(const ASection& s) const {
    PForm out(mu.at(0).chart(), degree - 1);
    for (std::size_t a = 0; a < s.size(); ++a)
        if (!s[a].is_zero()) out += s[a] * mu[a];
    return out;
}

PForm IMForm::nu_of(const ASection& s) const {
    PForm out(nu.at(0).chart(), degree);
    for (std::size_t a = 0; a < s.size(); ++a)
        if (!s[a].is_zero()) out += s[a] * nu[a];
    return out;
}

IMForm zero_im_form(const AlgebroidData& a, int degree) {
    IMForm f;
    f.degree = degree;
    f.mu.assign(a.rank(), PForm(a.chart, degree - 1));
    f.nu.assign(a.rank(), PForm(a.chart, degree));
    return f;
}

std::vector<PForm> im_form_defects(const AlgebroidData& a, const IMForm& f, const ASection& s1, const ASection& s2) {
    if (f.degree < 1) throw std::invalid_argument("IM form degree must be positive");
    if (static_cast<int>(f.mu.size()) != a.rank() || static_cast<int>(f.nu.size()) != a.rank())
        throw std::invalid_argument("IM form needs one value per frame section");
    for (int k = 0; k < a.rank(); ++k)
        if (f.mu[k].degree() != f.degree - 1 || f.nu[k].degree() != f.degree)
            throw std::invalid_argument("IM form components have the wrong degree");
    const VectorField x1 = a.rho(s1), x2 = a.rho(s2);
    const PForm m1 = f.mu_of(s1), m2 = f.mu_of(s2);
    const PForm n1 = f.nu_of(s1), n2 = f.nu_of(s2);
    const ASection br = a.bracket(s1, s2);

    PForm first = f.mu_of(br) - lie(x1, m2) + contract(x2, ext_d(m1) + n1);
    PForm second = f.nu_of(br) - lie(x1, n2) + contract(x2, ext_d(n1));
    PForm third = f.degree >= 2 ? contract(x1, m2) + contract(x2, m1) : PForm(a.chart, 0);
    return {first, second, third};
}

CheckResult check_IM_form(const AlgebroidData& a, const IMForm& f) {
    require_algebroid(a, "IM form check");
    CheckResult out("IM_form");
    const int m = a.rank();
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            form_witnesses(out, "sym(" + sec_name(i) + "," + sec_name(j) + ")",
                           im_form_defects(a, f, a.unit(i), a.unit(j))[2]);
    if (out.failed()) return out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            auto defects = im_form_defects(a, f, a.unit(i), a.unit(j));
            const std::string pair = "[" + sec_name(i) + "," + sec_name(j) + "]";
            form_witnesses(out, "mu" + pair, defects[0]);
            form_witnesses(out, "nu" + pair, defects[1]);
        }
    return out;
}

DiracAlgebroid dirac_to_algebroid(const GFrame& l) {
    const int m = static_cast<int>(l.size());
    const int n = l.dim();
    std::vector<VectorField> rho;
    for (const auto& s : l.sections) rho.push_back(s.vec);
    DiracAlgebroid out{AlgebroidData(l.chart, rho), IMForm{}, false};
    out.form.degree = 2;
    for (const auto& s : l.sections) {
        out.form.mu.push_back(s.form);
        out.form.nu.push_back(PForm(l.chart, 2));
    }
    const FracMatrix mat = section_matrix(l.sections);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            GSection br = courant_bracket(l[a], l[b]);
            ScalarVec rhs;
            for (int k = 0; k < n; ++k) rhs.push_back(br.vec[k]);
            for (int k = 0; k < n; ++k) rhs.push_back(br.form[k]);
            auto c = solve_linear(mat, rhs);
            if (!c) throw PreconditionError("bracket of " + sec_name(a) + " and " + sec_name(b) + " leaves the frame span");
            out.algebroid.structure[a][b] = *c;
            for (int k = 0; k < m; ++k) out.algebroid.structure[b][a][k] = -(*c)[k];
        }
    out.transversal = m == n && generic_rank(mat) == static_cast<std::size_t>(m);
    return out;
}

ASection IMOneOne::apply_l(const ASection& s) const {
    ASection out(s.size(), r.chart().zero());
    for (std::size_t a = 0; a < s.size(); ++a)
        if (!s[a].is_zero())
            for (std::size_t c = 0; c < s.size(); ++c) out[c] += s[a] * l[a][c];
    return out;
}

ASection IMOneOne::apply_D(const VectorField& x, const ASection& s) const {
    const std::size_t m = s.size();
    ASection out(m, r.chart().zero());
    const VectorField rx = r.apply(x);
    for (std::size_t a = 0; a < m; ++a) {
        if (s[a].is_zero()) continue;
        for (int k = 0; k < x.dim(); ++k) {
            if (x[k].is_zero()) continue;
            Scalar f = s[a] * x[k];
            for (std::size_t c = 0; c < m; ++c) out[c] += f * d[k][a][c];
        }
        Scalar xf = x.apply(s[a]);
        if (!xf.is_zero())
            for (std::size_t c = 0; c < m; ++c) out[c] += xf * l[a][c];
        out[a] -= rx.apply(s[a]);
    }
    return out;
}

IMOneOne tangent_im_tensor(const OneOneTensor& r) {
    const Chart& c = r.chart();
    const int n = c.dim();
    IMOneOne t{r, {}, std::vector<std::vector<ASection>>(n)};
    for (int a = 0; a < n; ++a) t.l.push_back(r.apply(VectorField::coordinate(c, a)).components());
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            t.d[k].push_back(D_r(VectorField::coordinate(c, k), VectorField::coordinate(c, a), r).components());
    return t;
}

IMOneOne transport_im_tensor(const GFrame& l, const OneOneTensor& r) {
    require_same_chart(l.chart, r.chart(), "transported IM tensor");
    const int n = l.dim();
    IMOneOne t{r, {}, std::vector<std::vector<ASection>>(n)};
    for (const auto& s : l.sections) t.l.push_back(coordinates_or_throw(l, apply_rr(r, s), "frame is not r-invariant"));
    for (int k = 0; k < n; ++k)
        for (const auto& s : l.sections)
            t.d[k].push_back(coordinates_or_throw(l, big_D(VectorField::coordinate(l.chart, k), s, r),
                                                  "frame is not D-stable"));
    return t;
}

ASection im_curvature(const IMOneOne& t, const VectorField& x, const VectorField& y, const ASection& s) {
    ASection out = t.apply_l(t.apply_D(lie_bracket(x, y), s));
    out = out - (t.apply_D(x, t.apply_D(y, s)) - t.apply_D(y, t.apply_D(x, s)));
    return out - t.apply_D(deformed_bracket(x, y, t.r), s);
}

CheckResult check_IM_oneone(const AlgebroidData& a, const IMOneOne& t) {
    require_algebroid(a, "IM (1,1) check");
    require_same_chart(a.chart, t.r.chart(), "IM (1,1) check");
    CheckResult out("IM_oneone");
    const int m = a.rank(), n = a.chart.dim();
    for (int i = 0; i < m; ++i)
        field_witnesses(out, "r rho(" + sec_name(i) + ")-rho l", t.r.apply(a.anchor[i]) - a.rho(t.l[i]));
    for (int k = 0; k < n; ++k) {
        const VectorField dk = VectorField::coordinate(a.chart, k);
        for (int i = 0; i < m; ++i)
            field_witnesses(out, "rho D_" + a.chart.variables()[k] + "(" + sec_name(i) + ")",
                            a.rho(t.d[k][i]) - D_r(dk, a.anchor[i], t.r));
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            ASection ei = a.unit(i), ej = a.unit(j);
            ASection defect = t.apply_l(a.bracket(ei, ej)) - a.bracket(ei, t.apply_l(ej)) + t.apply_D(a.anchor[j], ei);
            section_witnesses(out, "l[" + sec_name(i) + "," + sec_name(j) + "]", defect, a.chart);
        }
    for (int k = 0; k < n; ++k) {
        const VectorField dk = VectorField::coordinate(a.chart, k);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                ASection ei = a.unit(i), ej = a.unit(j);
                ASection defect = t.apply_D(dk, a.bracket(ei, ej)) - a.bracket(ei, t.apply_D(dk, ej)) +
                                  a.bracket(ej, t.apply_D(dk, ei)) - t.apply_D(lie_bracket(a.anchor[j], dk), ei) +
                                  t.apply_D(lie_bracket(a.anchor[i], dk), ej);
                section_witnesses(out, "D_" + a.chart.variables()[k] + "[" + sec_name(i) + "," + sec_name(j) + "]",
                                  defect, a.chart);
            }
    }
    return out;
}

namespace {

// Torsion of r, l D = D l, and the curvature term, on coordinate fields and frame sections.
void nijenhuis_equations(CheckResult& out, const Chart& c, int m, const IMOneOne& t) {
    const int n = c.dim();
    VectorValuedTwoForm tors = nijenhuis_torsion(t.r);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            field_witnesses(out, "N(d_" + c.variables()[i] + ",d_" + c.variables()[j] + ")",
                            tors.eval(VectorField::coordinate(c, i), VectorField::coordinate(c, j)));
    ASection zero(m, c.zero());
    for (int k = 0; k < n; ++k) {
        const VectorField dk = VectorField::coordinate(c, k);
        for (int a = 0; a < m; ++a) {
            ASection ea = zero;
            ea[a] = c.one();
            section_witnesses(out, "lD_" + c.variables()[k] + "(" + sec_name(a) + ")-Dl",
                              t.apply_l(t.apply_D(dk, ea)) - t.apply_D(dk, t.apply_l(ea)), c);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 0; a < m; ++a) {
                ASection ea = zero;
                ea[a] = c.one();
                section_witnesses(out, "D2(d_" + c.variables()[i] + ",d_" + c.variables()[j] + ")(" + sec_name(a) + ")",
                                  im_curvature(t, VectorField::coordinate(c, i), VectorField::coordinate(c, j), ea), c);
            }
}

}  // namespace

CheckResult check_IM_nijenhuis(const AlgebroidData& a, const IMOneOne& t) {
    require_algebroid(a, "IM Nijenhuis check");
    require_same_chart(a.chart, t.r.chart(), "IM Nijenhuis check");
    CheckResult out("IM_nijenhuis");
    nijenhuis_equations(out, a.chart, a.rank(), t);
    return out;
}

CheckResult check_IM_compat(const AlgebroidData& a, const IMForm& f, const IMOneOne& t) {
    if (f.degree < 2) throw PreconditionError("IM compatibility needs degree at least 2");
    if (!check_IM_form(a, f).passed()) throw PreconditionError("IM compatibility: not an IM form");
    if (!check_IM_oneone(a, t).passed()) throw PreconditionError("IM compatibility: not an IM (1,1)-tensor");
    CheckResult out("IM_compat");
    const int m = a.rank(), n = a.chart.dim();
    auto deformed = [&](const PForm& w, const std::string& label) -> std::optional<PForm> {
        if (w.degree() > n) return w;
        CovFormValued wr = form_r(w, t.r);
        if (auto bad = skew_witness(wr)) {
            out.fail_with(label + " not skew", *bad, a.chart);
            return std::nullopt;
        }
        return to_form(wr);
    };
    for (int i = 0; i < m; ++i) {
        const ASection ei = a.unit(i), li = t.l[i];
        const std::string s = "(" + sec_name(i) + ")";
        if (auto mr = deformed(f.mu[i], "mu" + s + "_r")) form_witnesses(out, "mu(l" + s + ")-mu_r", f.mu_of(li) - *mr);
        if (auto nr = deformed(f.nu[i], "nu" + s + "_r")) form_witnesses(out, "nu(l" + s + ")-nu_r", f.nu_of(li) - *nr);
    }
    if (out.failed()) return out;
    for (int k = 0; k < n; ++k) {
        const VectorField dk = VectorField::coordinate(a.chart, k);
        const std::string x = "D_" + a.chart.variables()[k];
        for (int i = 0; i < m; ++i) {
            const ASection di = t.d[k][i];
            const std::string s = "(" + sec_name(i) + ")";
            form_witnesses(out, "mu(" + x + s + ")", f.mu_of(di) - dual_D(dk, f.mu[i], t.r));
            form_witnesses(out, "nu(" + x + s + ")", f.nu_of(di) - dual_D(dk, f.nu[i], t.r));
        }
    }
    return out;
}

CheckResult check_dolbeault(const AlgebroidData& a, const IMOneOne& t) {
    require_same_chart(a.chart, t.r.chart(), "Dolbeault check");
    CheckResult out("dolbeault");
    const int m = a.rank(), n = a.chart.dim();
    const Chart& c = a.chart;
    for (int i = 0; i < m; ++i) section_witnesses(out, "l^2(" + sec_name(i) + ")", t.apply_l(t.l[i]) + a.unit(i), c);
    OneOneTensor sq = t.r.compose(t.r) + OneOneTensor::identity(c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!sq.at(i, j).is_zero()) out.fail_with("r^2+id", sq.at(i, j), c);
    for (int k = 0; k < n; ++k) {
        const VectorField dk = VectorField::coordinate(c, k);
        for (int i = 0; i < m; ++i) {
            ASection ei = a.unit(i);
            section_witnesses(out, "lD_" + c.variables()[k] + "+D_r", t.apply_l(t.apply_D(dk, ei)) + t.apply_D(t.r.apply(dk), ei), c);
        }
    }
    nijenhuis_equations(out, c, m, t);
    return out;
}

CheckResult real_part_IM(const AlgebroidData& a, const IMForm& f, const IMOneOne& t) {
    require_algebroid(a, "holomorphic IM form");
    CheckResult dol = check_dolbeault(a, t);
    if (!dol.passed()) throw PreconditionError("holomorphic IM form: not a Dolbeault 1-derivation");
    CheckResult out = check_IM_form(a, f);
    out.name = "real_part_IM";
    if (!out.passed()) return out;
    CheckResult compat = check_IM_compat(a, f, t);
    compat.name = out.name;
    return compat;
}

CheckResult quasi_IM_check(const AlgebroidData& a, const IMForm& f, const OneOneTensor& r, const PForm& phi) {
    if (phi.degree() != 3) throw std::invalid_argument("quasi IM check needs a 3-form");
    if (f.degree != 2) throw std::invalid_argument("quasi IM check needs an IM 2-form");
    if (!ext_d(phi).is_zero()) throw PreconditionError("quasi IM check: dphi != 0");
    CheckResult out("quasi_IM");
    VectorValuedTwoForm tors = nijenhuis_torsion(r);
    for (int i = 0; i < a.rank(); ++i)
        form_witnesses(out, "N*mu(" + sec_name(i) + ")+i phi", tors.dual(f.mu[i]) + contract(a.anchor[i], phi));
    return out;
}

CheckResult check_quasi_nu_tilde(const AlgebroidData& a, const IMForm& f, const IMOneOne& t) {
    if (f.degree != 2) throw std::invalid_argument("nu~ needs an IM 2-form");
    CheckResult out("quasi_nu_tilde");
    const Chart& c = a.chart;
    const int n = c.dim();
    VectorValuedTwoForm tors = nijenhuis_torsion(t.r);
    for (int s = 0; s < a.rank(); ++s) {
        const PForm dmu = ext_d(f.mu[s]);
        const PForm dnmu = ext_d(tors.dual(f.mu[s]));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const VectorField xi = VectorField::coordinate(c, i), yj = VectorField::coordinate(c, j),
                                      zk = VectorField::coordinate(c, k);
                    Scalar v = eval_form(dmu, {xi, tors.eval(yj, zk)});
                    v -= pair(f.mu_of(im_curvature(t, yj, zk, a.unit(s))), xi);
                    if (n >= 3) v -= eval_form(dnmu, {xi, yj, zk});
                    if (!v.is_zero())
                        out.fail_with("nu~(" + sec_name(s) + ")" + args_label(c, {i, j, k}), v, c);
                }
    }
    return out;
}

}  // namespace dnk
