#include "dnk/dirac/frame.hpp"

namespace dnk {

namespace {
constexpr std::size_t kMaxWitnesses = 4;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
    return Verdict::pass;
}

void CheckResult::fail_with(const std::string& label, const Scalar& value, const Chart& chart) {
    verdict = Verdict::fail;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back({label, value, chart.print(value), chart});
}

void CheckResult::fail_note(const std::string& why) {
    verdict = Verdict::fail;
    if (note.empty()) note = why;
}

void CheckResult::mark_inconclusive(const std::string& why) {
    if (verdict == Verdict::pass) verdict = Verdict::inconclusive;
    if (note.empty()) note = why;
}

const char* frame_kind_name(FrameKind k) {
    switch (k) {
        case FrameKind::graph_poisson: return "graph_poisson";
        case FrameKind::graph_presymplectic: return "graph_presymplectic";
        case FrameKind::split: return "split";
        case FrameKind::generic: return "generic";
    }
    return "?";
}

GFrame::GFrame(const Chart& c, std::vector<GSection> s, FrameKind k) : chart(c), sections(std::move(s)), kind(k) {
    if (static_cast<int>(sections.size()) != c.dim())
        throw std::invalid_argument("frame must have exactly n sections");
    for (const auto& sec : sections) require_same_chart(c, sec.chart(), "frame");
}

GFrame make_graph_poisson(const Bivector& pi) {
    const Chart& c = pi.chart();
    std::vector<GSection> s;
    for (int i = 0; i < c.dim(); ++i) {
        PForm a = PForm::coordinate(c, i);
        s.emplace_back(pi.sharp(a), a);
    }
    return GFrame(c, std::move(s), FrameKind::graph_poisson);
}

GFrame make_graph_presymplectic(const PForm& w) {
    if (w.degree() != 2) throw std::invalid_argument("presymplectic graph needs a two-form");
    const Chart& c = w.chart();
    std::vector<GSection> s;
    for (int i = 0; i < c.dim(); ++i) {
        VectorField x = VectorField::coordinate(c, i);
        s.emplace_back(x, flat(w, x));
    }
    return GFrame(c, std::move(s), FrameKind::graph_presymplectic);
}

GFrame make_split(const std::vector<VectorField>& f, unsigned samples) {
    if (f.empty()) throw std::invalid_argument("split frame needs at least one vector field (use the zero distribution's cotangent frame otherwise)");
    const Chart& c = f.front().chart();
    const int n = c.dim();
    FracMatrix m(f.size(), n, n);
    for (std::size_t a = 0; a < f.size(); ++a) {
        require_same_chart(c, f[a].chart(), "split frame");
        for (int i = 0; i < n; ++i) m(a, i) = f[a][i];
    }
    if (generic_rank(m) != f.size()) throw std::invalid_argument("split frame: vector fields are dependent");
    std::vector<GSection> s;
    for (const auto& x : f) s.push_back(GSection::vector(x));
    for (const auto& k : kernel_basis(m)) s.push_back(GSection::covector(PForm::one_form(c, k)));
    GFrame out(c, std::move(s), FrameKind::split);
    out.rank_inconclusive = rank_verdict(m, f.size(), samples) != Verdict::pass;
    return out;
}

namespace {

FracMatrix block_matrix(const std::vector<GSection>& s, bool vec, bool form) {
    if (s.empty()) return FracMatrix();
    const Chart& c = s.front().chart();
    const int n = c.dim();
    const int rows = (vec ? n : 0) + (form ? n : 0);
    FracMatrix m(rows, s.size(), n);
    for (std::size_t a = 0; a < s.size(); ++a) {
        int row = 0;
        if (vec)
            for (int i = 0; i < n; ++i) m(row++, a) = s[a].vec[i];
        if (form)
            for (int i = 0; i < n; ++i) m(row++, a) = s[a].form[i];
    }
    return m;
}

}  // namespace

FracMatrix section_matrix(const std::vector<GSection>& s) { return block_matrix(s, true, true); }
FracMatrix vector_matrix(const std::vector<GSection>& s) { return block_matrix(s, true, false); }
FracMatrix covector_matrix(const std::vector<GSection>& s) { return block_matrix(s, false, true); }

Verdict rank_verdict(const FracMatrix& m, std::size_t expected, unsigned samples, std::string* note) {
    if (generic_rank(m) != expected) {
        if (note) *note = "generic rank differs from " + std::to_string(expected);
        return Verdict::fail;
    }
    SampledRank sr = sample_ranks(m, samples);
    if (!sr.all_evaluated) {
        if (note) *note = "sample point retries exhausted";
        return Verdict::inconclusive;
    }
    for (std::size_t k = 0; k < sr.ranks.size(); ++k)
        if (sr.ranks[k] != expected) {
            if (note) *note = "rank drops to " + std::to_string(sr.ranks[k]) + " at sample point " + std::to_string(k);
            return Verdict::inconclusive;
        }
    return Verdict::pass;
}

std::optional<ScalarVec> frame_coordinates(const GFrame& l, const GSection& s) {
    FracMatrix m = section_matrix(l.sections);
    ScalarVec rhs;
    for (int i = 0; i < l.dim(); ++i) rhs.push_back(s.vec[i]);
    for (int i = 0; i < l.dim(); ++i) rhs.push_back(s.form[i]);
    return solve_linear(m, rhs);
}

bool in_span(const GFrame& l, const GSection& s) { return frame_coordinates(l, s).has_value(); }

bool same_span(const GFrame& a, const GFrame& b) {
    require_same_chart(a.chart, b.chart, "span comparison");
    for (const auto& s : b.sections)
        if (!in_span(a, s)) return false;
    for (const auto& s : a.sections)
        if (!in_span(b, s)) return false;
    return true;
}

std::vector<GSection> independent_subset(const std::vector<GSection>& candidates) {
    std::vector<GSection> kept;
    std::size_t rank = 0;
    for (const auto& c : candidates) {
        kept.push_back(c);
        std::size_t r = generic_rank(section_matrix(kept));
        if (r == rank) {
            kept.pop_back();
        } else {
            rank = r;
        }
    }
    return kept;
}

GFrame transform_frame(const GFrame& l, const OneOneTensor* on_vectors, const OneOneTensor* dual_on_covectors) {
    std::vector<GSection> s;
    for (const auto& sec : l.sections) {
        VectorField x = on_vectors ? on_vectors->apply(sec.vec) : sec.vec;
        PForm a = dual_on_covectors ? dual_on_covectors->dual_apply(sec.form) : sec.form;
        s.emplace_back(x, a);
    }
    return GFrame(l.chart, std::move(s));
}

}  // namespace dnk
