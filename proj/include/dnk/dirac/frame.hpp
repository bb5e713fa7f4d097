#ifndef DNK_DIRAC_FRAME_HPP
#define DNK_DIRAC_FRAME_HPP

#include "dnk/courant/courant.hpp"
#include "dnk/symbolic/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dnk {

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);
// fail dominates inconclusive dominates pass.
Verdict combine(Verdict a, Verdict b);

struct Witness {
    std::string label;
    Scalar value;
    std::string text;  // canonical printed form of value on its chart
    Chart chart;
};

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::pass;
    std::vector<Witness> witnesses;
    std::string note;

    explicit CheckResult(std::string n = {}) : name(std::move(n)) {}
    bool passed() const { return verdict == Verdict::pass; }
    bool failed() const { return verdict == Verdict::fail; }
    // Records a nonzero defect; only the first few are kept.
    void fail_with(const std::string& label, const Scalar& value, const Chart& chart);
    void fail_note(const std::string& why);
    void mark_inconclusive(const std::string& why);
};

// Raised when a check is asked to run on input violating its precondition.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FrameKind { graph_poisson, graph_presymplectic, split, generic };
const char* frame_kind_name(FrameKind k);

// n sections presenting a rank-n subbundle of TM + T*M.
struct GFrame {
    Chart chart;
    std::vector<GSection> sections;
    FrameKind kind = FrameKind::generic;
    bool rank_inconclusive = false;  // construction saw a rank drop at a sample point

    GFrame() = default;
    GFrame(const Chart& c, std::vector<GSection> s, FrameKind k = FrameKind::generic);
    int dim() const { return chart.dim(); }
    std::size_t size() const { return sections.size(); }
    const GSection& operator[](std::size_t a) const { return sections[a]; }
};

// {(pi# dx^i, dx^i)}.
GFrame make_graph_poisson(const Bivector& pi);
// {(d_i, i_{d_i} w)}.
GFrame make_graph_presymplectic(const PForm& w);
// {(f_a, 0)} followed by (0, annihilator basis). Throws if F is dependent at the generic point.
GFrame make_split(const std::vector<VectorField>& f, unsigned samples = 3);

// 2n x m matrix of a list of sections: vector components on top, covector parts below.
FracMatrix section_matrix(const std::vector<GSection>& s);
FracMatrix vector_matrix(const std::vector<GSection>& s);
FracMatrix covector_matrix(const std::vector<GSection>& s);

// pass when the generic rank equals `expected` and so does every sampled rank;
// inconclusive on a sampled drop or unevaluable sample; fail on a generic defect.
Verdict rank_verdict(const FracMatrix& m, std::size_t expected, unsigned samples, std::string* note = nullptr);

// Coefficients expressing s in the frame, if any (over the function field).
std::optional<ScalarVec> frame_coordinates(const GFrame& l, const GSection& s);
bool in_span(const GFrame& l, const GSection& s);
// Mutual span containment.
bool same_span(const GFrame& a, const GFrame& b);
// A maximal independent subfamily, chosen greedily in order.
std::vector<GSection> independent_subset(const std::vector<GSection>& candidates);

// Image under (A, B*) where either factor may be the identity (nullptr).
GFrame transform_frame(const GFrame& l, const OneOneTensor* on_vectors, const OneOneTensor* dual_on_covectors);

}  // namespace dnk

#endif
