#include "dnk/dirac/transforms.hpp"

#include <algorithm>

namespace dnk {

namespace {

VectorField combine_vectors(const GFrame& l, const ScalarVec& c) {
    VectorField out(l.chart);
    for (std::size_t a = 0; a < l.size(); ++a)
        if (!c[a].is_zero()) out += c[a] * l[a].vec;
    return out;
}

ScalarVec form_components(const PForm& a) {
    ScalarVec v;
    for (int i = 0; i < a.dim(); ++i) v.push_back(a[i]);
    return v;
}

void flag_rank(GFrame& f, unsigned samples) {
    if (rank_verdict(section_matrix(f.sections), f.dim(), samples) != Verdict::pass) f.rank_inconclusive = true;
}

}  // namespace

NullDistribution null_distribution(const GFrame& l, unsigned samples) {
    require_lagrangian(l, "null distribution");
    NullDistribution out{l.chart, {}, false};
    FracMatrix a = covector_matrix(l.sections);
    for (const auto& c : kernel_basis(a)) out.basis.push_back(combine_vectors(l, c));
    out.rank_inconclusive = rank_verdict(a, l.size() - out.basis.size(), samples) != Verdict::pass;
    return out;
}

const char* side_name(HierarchySide s) { return s == HierarchySide::n0 ? "(n,0)" : "(0,n)"; }

GFrame hierarchy(const GFrame& l, const OneOneTensor& r, unsigned n, HierarchySide side, unsigned samples) {
    require_same_chart(l.chart, r.chart(), "hierarchy");
    if (n == 0) return l;
    const OneOneTensor rn = r.power(n);
    GFrame out = side == HierarchySide::n0 ? transform_frame(l, &rn, nullptr) : transform_frame(l, nullptr, &rn);
    Verdict v = rank_verdict(section_matrix(out.sections), l.dim(), samples);
    if (v == Verdict::fail)
        throw HierarchyError(std::string("kernel condition fails for side ") + side_name(side) + " at n = " +
                             std::to_string(n));
    out.rank_inconclusive = v != Verdict::pass || l.rank_inconclusive;
    if (side == HierarchySide::n0 && l.kind == FrameKind::graph_poisson) out.kind = FrameKind::graph_poisson;
    if (side == HierarchySide::zero_n && l.kind == FrameKind::graph_presymplectic)
        out.kind = FrameKind::graph_presymplectic;
    return out;
}

GFrame cotangential_product(const GFrame& l1, const GFrame& l2, unsigned samples) {
    require_same_chart(l1.chart, l2.chart, "cotangential product");
    require_lagrangian(l1, "cotangential product");
    require_lagrangian(l2, "cotangential product");
    FracMatrix a1 = covector_matrix(l1.sections), a2 = covector_matrix(l2.sections);
    const std::size_t n = l1.size();
    FracMatrix both(n, 2 * n, l1.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a) {
            both(i, a) = a1(i, a);
            both(i, n + a) = a2(i, a);
        }
    const std::size_t r1 = generic_rank(a1), r2 = generic_rank(a2);
    if (r1 != r2 || generic_rank(both) != r1)
        throw PreconditionError("cotangential product: covector projections differ");

    std::vector<GSection> cand;
    for (std::size_t a = 0; a < n; ++a) {
        auto c = solve_linear(a2, form_components(l1[a].form));
        if (!c) throw std::logic_error("cotangential product: covector part outside the second projection");
        cand.emplace_back(l1[a].vec + combine_vectors(l2, *c), l1[a].form);
    }
    for (const auto& k : kernel_basis(a1)) cand.push_back(GSection::vector(combine_vectors(l1, k)));
    for (const auto& k : kernel_basis(a2)) cand.push_back(GSection::vector(combine_vectors(l2, k)));
    std::vector<GSection> basis = independent_subset(cand);
    if (basis.size() != n) throw std::logic_error("cotangential product: rank differs from n");
    GFrame out(l1.chart, std::move(basis));
    flag_rank(out, samples);
    return out;
}

CheckResult check_concur(const GFrame& l1, const GFrame& l2, unsigned samples) {
    GFrame prod = cotangential_product(l1, l2, samples);
    CheckResult out("concur");
    CheckResult lag = check_lagrangian(prod, samples);
    for (const auto& w : lag.witnesses) out.fail_with(w.label, w.value, prod.chart);
    if (lag.failed()) {
        out.fail_note(lag.note.empty() ? "product is not lagrangian" : lag.note);
        return out;
    }
    CheckResult inv = check_involutive(prod);
    for (const auto& w : inv.witnesses) out.fail_with(w.label, w.value, prod.chart);
    if (lag.verdict == Verdict::inconclusive || prod.rank_inconclusive)
        out.mark_inconclusive("product rank drops at a sample point");
    return out;
}

std::vector<Scalar> traces(const OneOneTensor& r, unsigned jmax) {
    std::vector<Scalar> out;
    const Chart& c = r.chart();
    OneOneTensor p = OneOneTensor::identity(c);
    for (unsigned j = 1; j <= jmax; ++j) {
        p = p.compose(r);
        out.push_back(p.trace() / c.constant(Coeff(static_cast<long>(j))));
    }
    return out;
}

std::optional<VectorField> hamiltonian_field(const GFrame& l, const Scalar& f) {
    PForm df = ext_d(PForm::function(l.chart, f));
    auto c = solve_linear(covector_matrix(l.sections), form_components(df));
    if (!c) return std::nullopt;
    return combine_vectors(l, *c);
}

CheckResult check_traces_involution(const GFrame& l, const OneOneTensor& r, unsigned jmax) {
    require_same_chart(l.chart, r.chart(), "trace involution");
    const std::vector<Scalar> phi = traces(r, jmax);
    const Chart& c = l.chart;
    if (!phi.empty()) {
        const PForm d1 = ext_d(PForm::function(c, phi[0]));
        for (const auto& k : null_distribution(l).basis)
            if (!pair(d1, k).is_zero()) throw NotAdmissible("trace not admissible");
    }
    std::vector<VectorField> ham;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        auto x = hamiltonian_field(l, phi[i]);
        if (!x) throw NotAdmissible("trace not admissible: phi_" + std::to_string(i + 1));
        ham.push_back(*x);
    }
    CheckResult out("traces_involution");
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (std::size_t j = i + 1; j < phi.size(); ++j) {
            Scalar b = ham[i].apply(phi[j]);
            if (!b.is_zero())
                out.fail_with("{phi_" + std::to_string(i + 1) + ",phi_" + std::to_string(j + 1) + "}", b, c);
        }
    return out;
}

GaugeData gauge_transform(const Bivector& pi, const PForm& b) {
    require_same_chart(pi.chart(), b.chart(), "gauge transformation");
    if (b.degree() != 2) throw std::invalid_argument("gauge transformation needs a two-form");
    const Chart& c = pi.chart();
    const int n = c.dim();
    GaugeData out;
    out.r = OneOneTensor::identity(c);
    for (int j = 0; j < n; ++j) {
        VectorField col = pi.sharp(flat(b, VectorField::coordinate(c, j)));
        for (int i = 0; i < n; ++i) out.r.at(i, j) += col[i];
    }
    std::vector<GSection> s;
    for (int i = 0; i < n; ++i) {
        PForm a = PForm::coordinate(c, i);
        VectorField x = pi.sharp(a);
        s.emplace_back(x, a + flat(b, x));
    }
    out.frame = GFrame(c, std::move(s));
    out.closed = n < 3 || ext_d(b).is_zero();
    return out;
}

namespace {

// Restriction of chart functions: some variables frozen, the rest relabelled.
struct Restrictor {
    std::vector<const Coeff*> values;
    std::vector<int> map;
    int nvars;
    Scalar operator()(const Scalar& f) const {
        try {
            return f.substitute_constants(values).reindex(nvars, map);
        } catch (const DenominatorVanishes&) {
            throw TransferError("a denominator vanishes on the slice");
        }
    }
};

GFrame assemble(const Chart& target, std::vector<GSection> cand, unsigned samples, const char* what) {
    std::vector<GSection> basis = independent_subset(cand);
    if (static_cast<int>(basis.size()) != target.dim())
        throw TransferError(std::string(what) + ": transferred span has rank " + std::to_string(basis.size()) +
                            ", expected " + std::to_string(target.dim()));
    GFrame out(target, std::move(basis));
    flag_rank(out, samples);
    return out;
}

}  // namespace

Transfer backward_transfer(const GFrame& l, const std::vector<std::pair<int, Coeff>>& slice, const OneOneTensor* r,
                           unsigned samples) {
    const Chart& c = l.chart;
    const int n = c.dim();
    std::vector<bool> frozen(n, false);
    std::vector<Coeff> vals(n);
    for (const auto& [k, v] : slice) {
        if (k < 0 || k >= n || frozen[k]) throw std::invalid_argument("backward transfer: bad slice variable");
        frozen[k] = true;
        vals[k] = v;
    }
    std::vector<int> keep, cut;
    for (int k = 0; k < n; ++k) (frozen[k] ? cut : keep).push_back(k);
    if (keep.empty()) throw std::invalid_argument("backward transfer: slice leaves no variables");
    const Chart target = c.restricted(c.name() + "_slice", keep);

    Restrictor res;
    res.nvars = target.dim();
    res.map.assign(n, -1);
    res.values.assign(n, nullptr);
    for (std::size_t b = 0; b < keep.size(); ++b) res.map[keep[b]] = static_cast<int>(b);
    for (int k : cut) res.values[k] = &vals[k];

    Transfer out;
    if (r) {
        require_same_chart(c, r->chart(), "backward transfer");
        for (int j : keep)
            for (int i : cut)
                if (!res(r->at(i, j)).is_zero()) throw TransferError("slice is not r-invariant");
        OneOneTensor rn(target);
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) rn.at(a, b) = res(r->at(keep[a], keep[b]));
        out.r = rn;
    }

    // Combinations of frame sections whose vector part is tangent to the slice.
    FracMatrix tangency(cut.size(), l.size(), target.dim());
    for (std::size_t row = 0; row < cut.size(); ++row)
        for (std::size_t a = 0; a < l.size(); ++a) tangency(row, a) = res(l[a].vec[cut[row]]);
    std::vector<GSection> cand;
    for (const auto& coef : kernel_basis(tangency)) {
        VectorField x(target);
        PForm al(target, 1);
        for (std::size_t a = 0; a < l.size(); ++a) {
            if (coef[a].is_zero()) continue;
            for (std::size_t b = 0; b < keep.size(); ++b) {
                x[b] += coef[a] * res(l[a].vec[keep[b]]);
                al[b] += coef[a] * res(l[a].form[keep[b]]);
            }
        }
        cand.emplace_back(x, al);
    }
    out.frame = assemble(target, std::move(cand), samples, "backward transfer");
    return out;
}

Transfer forward_transfer(const GFrame& l, const std::vector<int>& keep_in, const OneOneTensor* r, unsigned samples) {
    const Chart& c = l.chart;
    const int n = c.dim();
    std::vector<int> keep = keep_in;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty() || keep.front() < 0 || keep.back() >= n)
        throw std::invalid_argument("forward transfer: bad retained variables");
    std::vector<int> drop;
    for (int k = 0; k < n; ++k)
        if (!std::binary_search(keep.begin(), keep.end(), k)) drop.push_back(k);
    const Chart target = c.restricted(c.name() + "_quot", keep);

    auto independent = [&](const Scalar& f) {
        for (int z : drop)
            if (!f.diff(z).is_zero()) return false;
        return true;
    };
    for (const auto& s : l.sections)
        for (int i = 0; i < n; ++i)
            if (!independent(s.vec[i]) || !independent(s.form[i]))
                throw TransferError("frame depends on a projected-out variable");

    // The dropped coordinate directions must be exactly the null distribution.
    NullDistribution k = null_distribution(l, samples);
    if (k.basis.size() != drop.size()) throw TransferError("projected directions do not span the null distribution");
    for (const auto& v : k.basis)
        for (int i : keep)
            if (!v[i].is_zero()) throw TransferError("projected directions do not span the null distribution");

    std::vector<int> map(n, -1);
    for (std::size_t b = 0; b < keep.size(); ++b) map[keep[b]] = static_cast<int>(b);
    auto down = [&](const Scalar& f) { return f.reindex(target.dim(), map); };

    Transfer out;
    if (r) {
        require_same_chart(c, r->chart(), "forward transfer");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const bool kept_row = std::binary_search(keep.begin(), keep.end(), i);
                const bool kept_col = std::binary_search(keep.begin(), keep.end(), j);
                if (kept_row && !kept_col && !r->at(i, j).is_zero())
                    throw TransferError("r does not preserve the null distribution");
                if (kept_row && !independent(r->at(i, j))) throw TransferError("r does not descend to the quotient");
            }
        OneOneTensor rq(target);
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t b = 0; b < keep.size(); ++b) rq.at(a, b) = down(r->at(keep[a], keep[b]));
        out.r = rq;
    }

    // Combinations whose covector part annihilates the dropped directions.
    FracMatrix basic(drop.size(), l.size(), n);
    for (std::size_t row = 0; row < drop.size(); ++row)
        for (std::size_t a = 0; a < l.size(); ++a) basic(row, a) = l[a].form[drop[row]];
    std::vector<GSection> cand;
    for (const auto& coef : kernel_basis(basic)) {
        VectorField x(target);
        PForm al(target, 1);
        for (std::size_t a = 0; a < l.size(); ++a) {
            if (coef[a].is_zero()) continue;
            for (std::size_t b = 0; b < keep.size(); ++b) {
                x[b] += down(coef[a] * l[a].vec[keep[b]]);
                al[b] += down(coef[a] * l[a].form[keep[b]]);
            }
        }
        cand.emplace_back(x, al);
    }
    out.frame = assemble(target, std::move(cand), samples, "forward transfer");
    return out;
}

}  // namespace dnk
