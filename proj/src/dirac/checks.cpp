#include "dnk/dirac/checks.hpp"

#include <functional>

namespace dnk {

namespace {

std::string idx(std::size_t a) { return std::to_string(a + 1); }

using Bracket = std::function<GSection(const GSection&, const GSection&)>;

// <B(s_i, s_j), s_k> over all ordered i, j and every k.
void closure_defects(const GFrame& l, const Bracket& br, const std::string& tag, CheckResult& out) {
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (i == j) continue;
            GSection b = br(l[i], l[j]);
            for (std::size_t k = 0; k < l.size(); ++k) {
                Scalar t = pairing(b, l[k]);
                if (!t.is_zero()) out.fail_with("<" + tag + "(s" + idx(i) + ",s" + idx(j) + "),s" + idx(k) + ">", t, l.chart);
            }
        }
}

void invariance_defects(const GFrame& l, const OneOneTensor& r, CheckResult& out) {
    for (std::size_t i = 0; i < l.size(); ++i) {
        GSection rs = apply_rr(r, l[i]);
        for (std::size_t j = 0; j < l.size(); ++j) {
            Scalar t = pairing(rs, l[j]);
            if (!t.is_zero()) out.fail_with("<(r,r*)s" + idx(i) + ",s" + idx(j) + ">", t, l.chart);
        }
    }
}

// <D^r_Y s_i, s_j> for every Y in `directions`.
void stability_defects(const GFrame& l, const OneOneTensor& r, const std::vector<VectorField>& directions,
                       const std::vector<std::string>& names, CheckResult& out) {
    for (std::size_t d = 0; d < directions.size(); ++d)
        for (std::size_t i = 0; i < l.size(); ++i) {
            GSection ds = big_D(directions[d], l[i], r);
            for (std::size_t j = 0; j < l.size(); ++j) {
                Scalar t = pairing(ds, l[j]);
                if (!t.is_zero()) out.fail_with("C_L(s" + idx(i) + ",s" + idx(j) + ")(" + names[d] + ")", t, l.chart);
            }
        }
}

bool pairings_vanish(const GFrame& l) {
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i; j < l.size(); ++j)
            if (!pairing(l[i], l[j]).is_zero()) return false;
    return true;
}

}  // namespace

CheckResult check_lagrangian(const GFrame& l, unsigned samples) {
    CheckResult out("lagrangian");
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i; j < l.size(); ++j) {
            Scalar t = pairing(l[i], l[j]);
            if (!t.is_zero()) out.fail_with("<s" + idx(i) + ",s" + idx(j) + ">", t, l.chart);
        }
    std::string note;
    Verdict rank = rank_verdict(section_matrix(l.sections), l.dim(), samples, &note);
    if (rank == Verdict::fail) out.fail_note(note);
    if (rank == Verdict::inconclusive) out.mark_inconclusive(note);
    return out;
}

void require_lagrangian(const GFrame& l, const char* where) {
    if (!pairings_vanish(l) || generic_rank(section_matrix(l.sections)) != static_cast<std::size_t>(l.dim()))
        throw PreconditionError(std::string(where) + ": frame is not lagrangian");
}

CheckResult check_involutive(const GFrame& l) {
    require_lagrangian(l, "involutivity");
    CheckResult out("involutive");
    closure_defects(l, courant_bracket, "[[.,.]]", out);
    return out;
}

CheckResult check_invariance(const GFrame& l, const OneOneTensor& r) {
    require_same_chart(l.chart, r.chart(), "invariance");
    require_lagrangian(l, "invariance");
    CheckResult out("invariance");
    invariance_defects(l, r, out);
    return out;
}

CheckResult check_D_stability(const GFrame& l, const OneOneTensor& r) {
    require_same_chart(l.chart, r.chart(), "D-stability");
    require_lagrangian(l, "D-stability");
    CheckResult inv("invariance");
    invariance_defects(l, r, inv);
    if (!inv.passed()) throw PreconditionError("D-stability: (r, r*) does not preserve the frame span");
    CheckResult out("D_stability");
    std::vector<VectorField> dirs;
    std::vector<std::string> names;
    for (int k = 0; k < l.dim(); ++k) {
        dirs.push_back(VectorField::coordinate(l.chart, k));
        names.push_back("d_" + l.chart.variables()[k]);
    }
    stability_defects(l, r, dirs, names, out);
    return out;
}

CheckResult check_nijenhuis(const OneOneTensor& r) {
    CheckResult out("nijenhuis");
    const Chart& c = r.chart();
    VectorValuedTwoForm n = nijenhuis_torsion(r);
    for (int i = 0; i < c.dim(); ++i)
        for (std::size_t pos = 0; pos < n.pair_count(); ++pos)
            if (!n.at(i, pos).is_zero()) {
                const auto& t = index_tuples(c.dim(), 2)[pos];
                out.fail_with("N(d_" + c.variables()[t[0]] + ",d_" + c.variables()[t[1]] + ")^" + c.variables()[i],
                              n.at(i, pos), c);
            }
    return out;
}

Verdict DNReport::overall() const {
    Verdict v = compatible();
    return combine(v, nijenhuis.verdict);
}

Verdict DNReport::compatible() const {
    Verdict v = Verdict::pass;
    for (const CheckResult* c : {&lagrangian, &involutive, &invariance, &d_stability}) v = combine(v, c->verdict);
    return v;
}

DNReport dirac_nijenhuis_report(const GFrame& l, const OneOneTensor& r, unsigned samples) {
    DNReport rep;
    rep.lagrangian = check_lagrangian(l, samples);
    rep.nijenhuis = check_nijenhuis(r);
    if (rep.lagrangian.failed()) {
        for (CheckResult* c : {&rep.involutive, &rep.invariance, &rep.d_stability})
            c->mark_inconclusive("not run: lagrangian failed");
        return rep;
    }
    rep.involutive = check_involutive(l);
    rep.invariance = check_invariance(l, r);
    if (rep.invariance.failed()) {
        rep.d_stability.mark_inconclusive("not run: invariance failed");
    } else {
        rep.d_stability = check_D_stability(l, r);
    }
    // A sampled rank drop leaves every verdict resting on the generic point only.
    if (rep.lagrangian.verdict == Verdict::inconclusive || l.rank_inconclusive)
        for (CheckResult* c : {&rep.involutive, &rep.invariance, &rep.d_stability})
            c->mark_inconclusive("frame rank drops at a sample point");
    return rep;
}

VectorField concomitant_R(const Bivector& pi, const OneOneTensor& r, const VectorField& x, const PForm& alpha) {
    require_same_chart(pi.chart(), r.chart(), "concomitant R");
    PForm inner = lie_deriv_form(x, r.dual_apply(alpha)) - lie_deriv_form(r.apply(x), alpha);
    return pi.sharp(inner) - lie_deriv_tensor(pi.sharp(alpha), r).apply(x);
}

PForm koszul_bracket(const Bivector& lambda, const PForm& alpha, const PForm& beta) {
    PForm out = lie_deriv_form(lambda.sharp(alpha), beta);
    if (lambda.dim() > 1) out -= interior(lambda.sharp(beta), ext_d(alpha));
    return out;
}

Bivector deformed_bivector(const Bivector& pi, const OneOneTensor& r) {
    require_same_chart(pi.chart(), r.chart(), "deformed bivector");
    const int n = pi.dim();
    Bivector out(pi.chart());
    // (r o pi#)(dx^i) = sum_j pi^{ij} r^k_j d_k.
    auto entry = [&](int i, int k) {
        Scalar s = pi.chart().zero();
        for (int j = 0; j < n; ++j)
            if (!pi.at(i, j).is_zero() && !r.at(k, j).is_zero()) s += pi.at(i, j) * r.at(k, j);
        return s;
    };
    for (int i = 0; i < n; ++i) {
        if (!entry(i, i).is_zero()) throw PreconditionError("r o pi# is not skew");
        for (int k = i + 1; k < n; ++k) {
            Scalar a = entry(i, k);
            if (!(a + entry(k, i)).is_zero()) throw PreconditionError("r o pi# is not skew");
            out.set(i, k, a);
        }
    }
    return out;
}

PForm concomitant_C(const Bivector& pi, const OneOneTensor& r, const PForm& alpha, const PForm& beta) {
    const Bivector pr = deformed_bivector(pi, r);
    PForm out = koszul_bracket(pr, alpha, beta);
    out -= koszul_bracket(pi, r.dual_apply(alpha), beta);
    out -= koszul_bracket(pi, alpha, r.dual_apply(beta));
    out += r.dual_apply(koszul_bracket(pi, alpha, beta));
    return out;
}

PForm concomitant_S_tilde(const PForm& w, const OneOneTensor& r, const VectorField& x, const VectorField& y) {
    return D_r_star(x, flat(w, y), r) - flat(w, D_r(x, y, r));
}

PForm concomitant_S(const PForm& w, const OneOneTensor& r, const VectorField& x, const VectorField& y) {
    const Chart& c = w.chart();
    const VectorField rx = r.apply(x), ry = r.apply(y);
    PForm out = interior(x, lie_deriv_form(ry, w)) - interior(y, lie_deriv_form(rx, w)) -
                interior(r.apply(lie_bracket(x, y)), w);
    out += ext_d(PForm::function(c, eval_form(w, {ry, x})));
    return out;
}

CheckResult check_form_compat(const PForm& w, const OneOneTensor& r) {
    require_same_chart(w.chart(), r.chart(), "form compatibility");
    if (w.degree() < 1) throw std::invalid_argument("form compatibility needs degree >= 1");
    CheckResult out("form_compat");
    const Chart& c = w.chart();
    CovFormValued wr = form_r(w, r);
    if (auto wit = skew_witness(wr)) {
        out.fail_with("skew defect of w_r", *wit, c);
        return out;
    }
    const int p = w.degree();
    if (p + 1 > c.dim()) return out;
    PForm dwr = ext_d(to_form(wr));
    CovFormValued dw_r = form_r(ext_d(w), r);
    const auto& tails = index_tuples(c.dim(), p);
    for (int j = 0; j < c.dim(); ++j)
        for (std::size_t pos = 0; pos < tails.size(); ++pos) {
            std::vector<int> ix{j};
            ix.insert(ix.end(), tails[pos].begin(), tails[pos].end());
            Scalar t = dwr.get(ix) - dw_r.at(j, pos);
            if (!t.is_zero()) {
                std::string label = "(d(w_r) - (dw)_r)(d_" + c.variables()[j];
                for (int k : tails[pos]) label += ",d_" + c.variables()[k];
                out.fail_with(label + ")", t, c);
            }
        }
    return out;
}

CheckResult quasi_nijenhuis_check(const GFrame& l, const OneOneTensor& r, const PForm& phi) {
    require_same_chart(l.chart, r.chart(), "quasi-Nijenhuis");
    require_same_chart(l.chart, phi.chart(), "quasi-Nijenhuis");
    if (phi.degree() != 3) throw std::invalid_argument("quasi-Nijenhuis needs a three-form");
    const Chart& c = l.chart;
    if (c.dim() > 3 && !ext_d(phi).is_zero()) throw PreconditionError("quasi-Nijenhuis: the three-form is not closed");
    CheckResult out("quasi_nijenhuis");
    VectorValuedTwoForm n = nijenhuis_torsion(r);
    const auto& pairs = index_tuples(c.dim(), 2);
    for (std::size_t a = 0; a < l.size(); ++a) {
        PForm ix_phi = interior(l[a].vec, phi);
        for (std::size_t pos = 0; pos < pairs.size(); ++pos) {
            const int y = pairs[pos][0], z = pairs[pos][1];
            Scalar t = ix_phi.get({y, z});
            for (int i = 0; i < c.dim(); ++i)
                if (!l[a].form[i].is_zero()) t += l[a].form[i] * n.at(i, pos);
            if (!t.is_zero())
                out.fail_with("<a" + idx(a) + ",N(d_" + c.variables()[y] + ",d_" + c.variables()[z] + ")> + phi", t, c);
        }
    }
    return out;
}

CheckResult check_contraction_type(const GFrame& l, const OneOneTensor& r) {
    require_same_chart(l.chart, r.chart(), "contraction type");
    require_lagrangian(l, "contraction type");
    CheckResult out("contraction_type");
    invariance_defects(l, r, out);
    std::vector<VectorField> dirs;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < l.size(); ++a)
        if (!l[a].vec.is_zero()) {
            dirs.push_back(l[a].vec);
            names.push_back("X" + idx(a));
        }
    stability_defects(l, r, dirs, names, out);
    for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b) {
            VectorField t = nijenhuis_on(r, dirs[a], dirs[b]);
            for (int i = 0; i < l.dim(); ++i)
                if (!t[i].is_zero())
                    out.fail_with("N(" + names[a] + "," + names[b] + ")^" + l.chart.variables()[i], t[i], l.chart);
        }
    return out;
}

CheckResult check_double_type(const GFrame& l, const OneOneTensor& r) {
    require_same_chart(l.chart, r.chart(), "double type");
    require_lagrangian(l, "double type");
    CheckResult out("double_type");
    CheckResult nij = check_nijenhuis(r);
    for (const auto& w : nij.witnesses) out.fail_with(w.label, w.value, l.chart);
    const Bracket dbl = [&](const GSection& a, const GSection& b) { return double_bracket(a, b, r); };
    closure_defects(l, courant_bracket, "[[.,.]]", out);
    closure_defects(l, dbl, "[[.,.]]_dbl", out);
    GFrame l10 = transform_frame(l, &r, nullptr);
    if (generic_rank(section_matrix(l10.sections)) != static_cast<std::size_t>(l.dim())) {
        out.fail_note("(r, id) is not injective on L");
        return out;
    }
    if (!pairings_vanish(l10)) {
        out.fail_note("(r, id)(L) is not lagrangian");
        return out;
    }
    closure_defects(l10, courant_bracket, "[[.,.]] on L(1,0)", out);
    closure_defects(l10, dbl, "[[.,.]]_dbl on L(1,0)", out);
    return out;
}

}  // namespace dnk
