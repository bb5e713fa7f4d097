#ifndef DNK_DIRAC_TRANSFORMS_HPP
#define DNK_DIRAC_TRANSFORMS_HPP

#include "dnk/dirac/checks.hpp"

namespace dnk {

struct NullDistribution {
    Chart chart;
    std::vector<VectorField> basis;
    bool rank_inconclusive = false;
};
// L intersected with TM, from the kernel of the covector-part matrix.
NullDistribution null_distribution(const GFrame& l, unsigned samples = 3);

enum class HierarchySide { n0, zero_n };
const char* side_name(HierarchySide s);

struct HierarchyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// (r^n, id)(L) or (id, (r*)^n)(L). Throws HierarchyError when the map is not injective on L.
GFrame hierarchy(const GFrame& l, const OneOneTensor& r, unsigned n, HierarchySide side, unsigned samples = 3);

// {(X1 + X2, a) : (X1, a) in L1, (X2, a) in L2}; throws PreconditionError on a projection mismatch.
GFrame cotangential_product(const GFrame& l1, const GFrame& l2, unsigned samples = 3);
// The product is lagrangian and involutive.
CheckResult check_concur(const GFrame& l1, const GFrame& l2, unsigned samples = 3);

// trace(r^j) / j for j = 1..jmax.
std::vector<Scalar> traces(const OneOneTensor& r, unsigned jmax);

struct NotAdmissible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Hamiltonian field X with (X, df) in the span of L, if f is admissible.
std::optional<VectorField> hamiltonian_field(const GFrame& l, const Scalar& f);
// {phi_i, phi_j} = dphi_j(X_{phi_i}) for i < j <= jmax; throws NotAdmissible.
CheckResult check_traces_involution(const GFrame& l, const OneOneTensor& r, unsigned jmax);

struct GaugeData {
    OneOneTensor r;  // id + pi# o B-flat
    GFrame frame;    // {(pi# a, a + i_{pi# a} B)}
    bool closed = false;
};
GaugeData gauge_transform(const Bivector& pi, const PForm& b);

struct TransferError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Transfer {
    GFrame frame;
    std::optional<OneOneTensor> r;
};
// Pullback to the slice {x_k = c_k}; with r, the slice must be r-invariant.
Transfer backward_transfer(const GFrame& l, const std::vector<std::pair<int, Coeff>>& slice,
                           const OneOneTensor* r = nullptr, unsigned samples = 3);
// Pushforward along the projection onto `keep`; the dropped directions must span the null distribution.
Transfer forward_transfer(const GFrame& l, const std::vector<int>& keep, const OneOneTensor* r = nullptr,
                          unsigned samples = 3);

}  // namespace dnk

#endif
