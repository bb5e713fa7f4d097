#include "dnk/tensor/fields.hpp"

#include <algorithm>
#include <array>

namespace dnk {

namespace {

struct TupleTables {
    std::array<std::array<std::vector<std::vector<int>>, kMaxVars + 2>, kMaxVars + 1> tuples;
    std::array<std::vector<int>, kMaxVars + 1> position;  // bitmask -> position

    TupleTables() {
        for (int n = 0; n <= kMaxVars; ++n) {
            position[n].assign(1u << n, -1);
            for (int p = 0; p <= n; ++p) {
                std::vector<int> cur;
                enumerate(n, p, 0, cur, tuples[n][p]);
                for (std::size_t pos = 0; pos < tuples[n][p].size(); ++pos) {
                    unsigned mask = 0;
                    for (int i : tuples[n][p][pos]) mask |= 1u << i;
                    position[n][mask] = static_cast<int>(pos);
                }
            }
        }
    }

    static void enumerate(int n, int p, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            enumerate(n, p, i + 1, cur, out);
            cur.pop_back();
        }
    }
};

const TupleTables& tables() {
    static const TupleTables t;
    return t;
}

const std::vector<std::vector<int>> kEmpty;

}  // namespace

const std::vector<std::vector<int>>& index_tuples(int n, int p) {
    if (p < 0 || p > n) return kEmpty;
    return tables().tuples[n][p];
}

std::size_t tuple_position(int n, const std::vector<int>& sorted) {
    unsigned mask = 0;
    for (int i : sorted) mask |= 1u << i;
    return static_cast<std::size_t>(tables().position[n][mask]);
}

int sort_with_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

// ---------------------------------------------------------------- VectorField

VectorField::VectorField(const Chart& chart) : chart_(chart), c_(chart.dim(), chart.zero()) {}

VectorField::VectorField(const Chart& chart, std::vector<Scalar> components) : chart_(chart), c_(std::move(components)) {
    if (static_cast<int>(c_.size()) != chart.dim()) throw std::invalid_argument("vector field: component count");
}

VectorField VectorField::coordinate(const Chart& chart, int k) {
    VectorField x(chart);
    x.c_[k] = chart.one();
    return x;
}

bool VectorField::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar VectorField::apply(const Scalar& f) const {
    Scalar out = chart_.zero();
    for (int k = 0; k < dim(); ++k)
        if (!c_[k].is_zero()) {
            Scalar d = f.diff(k);
            if (!d.is_zero()) out += c_[k] * d;
        }
    return out;
}

VectorField VectorField::operator-() const {
    VectorField r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
    require_same_chart(chart_, o.chart_, "vector field sum");
    for (int k = 0; k < dim(); ++k) c_[k] += o.c_[k];
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
    require_same_chart(chart_, o.chart_, "vector field difference");
    for (int k = 0; k < dim(); ++k) c_[k] -= o.c_[k];
    return *this;
}

VectorField operator*(const Scalar& f, const VectorField& x) {
    VectorField r = x;
    for (auto& s : r.c_) s = f * s;
    return r;
}

// ---------------------------------------------------------------------- PForm

PForm::PForm(const Chart& chart, int degree)
    : chart_(chart), degree_(degree), c_(index_tuples(chart.dim(), degree).size(), chart.zero()) {
    if (degree < 0) throw std::invalid_argument("negative form degree");
}

PForm PForm::function(const Chart& chart, const Scalar& f) {
    PForm w(chart, 0);
    w.c_[0] = f;
    return w;
}

PForm PForm::coordinate(const Chart& chart, int k) {
    PForm w(chart, 1);
    w.c_[k] = chart.one();
    return w;
}

PForm PForm::one_form(const Chart& chart, std::vector<Scalar> components) {
    PForm w(chart, 1);
    if (static_cast<int>(components.size()) != chart.dim()) throw std::invalid_argument("one-form: component count");
    w.c_ = std::move(components);
    return w;
}

Scalar PForm::get(std::vector<int> indices) const {
    if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("form index count");
    int s = sort_with_sign(indices);
    if (s == 0 || c_.empty()) return chart_.zero();
    const Scalar& v = c_[tuple_position(dim(), indices)];
    return s > 0 ? v : -v;
}

void PForm::set(std::vector<int> indices, const Scalar& value) {
    if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("form index count");
    int s = sort_with_sign(indices);
    if (s == 0) throw std::invalid_argument("repeated form index");
    c_[tuple_position(dim(), indices)] = s > 0 ? value : -value;
}

bool PForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

PForm PForm::operator-() const {
    PForm r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

PForm& PForm::operator+=(const PForm& o) {
    require_same_chart(chart_, o.chart_, "form sum");
    if (degree_ != o.degree_) throw std::invalid_argument("form sum: degree mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

PForm& PForm::operator-=(const PForm& o) {
    require_same_chart(chart_, o.chart_, "form difference");
    if (degree_ != o.degree_) throw std::invalid_argument("form difference: degree mismatch");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

PForm operator*(const Scalar& f, const PForm& w) {
    PForm r = w;
    for (auto& s : r.c_) s = f * s;
    return r;
}

// ---------------------------------------------------------------- Multivector

Multivector::Multivector(const Chart& chart, int degree)
    : chart_(chart), degree_(degree), c_(index_tuples(chart.dim(), degree).size(), chart.zero()) {}

Scalar Multivector::get(std::vector<int> indices) const {
    int s = sort_with_sign(indices);
    if (s == 0 || c_.empty()) return chart_.zero();
    const Scalar& v = c_[tuple_position(chart_.dim(), indices)];
    return s > 0 ? v : -v;
}

bool Multivector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

// --------------------------------------------------------------- OneOneTensor

OneOneTensor::OneOneTensor(const Chart& chart) : chart_(chart), c_(chart.dim() * chart.dim(), chart.zero()) {}

OneOneTensor OneOneTensor::identity(const Chart& chart) { return scalar_multiple(chart, chart.one()); }

OneOneTensor OneOneTensor::scalar_multiple(const Chart& chart, const Scalar& f) {
    OneOneTensor r(chart);
    for (int i = 0; i < chart.dim(); ++i) r.at(i, i) = f;
    return r;
}

OneOneTensor OneOneTensor::diagonal(const Chart& chart, const std::vector<Scalar>& entries) {
    OneOneTensor r(chart);
    for (int i = 0; i < chart.dim(); ++i) r.at(i, i) = entries.at(i);
    return r;
}

VectorField OneOneTensor::apply(const VectorField& x) const {
    require_same_chart(chart_, x.chart(), "r(X)");
    VectorField out(chart_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero()) out[i] += at(i, j) * x[j];
    return out;
}

PForm OneOneTensor::dual_apply(const PForm& alpha) const {
    require_same_chart(chart_, alpha.chart(), "r*(alpha)");
    if (alpha.degree() != 1) throw std::invalid_argument("r*: one-form expected");
    PForm out(chart_, 1);
    for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < dim(); ++i)
            if (!at(i, j).is_zero() && !alpha[i].is_zero()) out[j] += alpha[i] * at(i, j);
    return out;
}

OneOneTensor OneOneTensor::compose(const OneOneTensor& s) const {
    require_same_chart(chart_, s.chart_, "composition");
    OneOneTensor out(chart_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k)
                if (!at(i, k).is_zero() && !s.at(k, j).is_zero()) out.at(i, j) += at(i, k) * s.at(k, j);
    return out;
}

OneOneTensor OneOneTensor::power(unsigned n) const {
    OneOneTensor out = identity(chart_);
    for (unsigned e = 0; e < n; ++e) out = out.compose(*this);
    return out;
}

Scalar OneOneTensor::trace() const {
    Scalar t = chart_.zero();
    for (int i = 0; i < dim(); ++i) t += at(i, i);
    return t;
}

bool OneOneTensor::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

OneOneTensor OneOneTensor::operator-() const {
    OneOneTensor r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

OneOneTensor& OneOneTensor::operator+=(const OneOneTensor& o) {
    require_same_chart(chart_, o.chart_, "tensor sum");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

OneOneTensor& OneOneTensor::operator-=(const OneOneTensor& o) {
    require_same_chart(chart_, o.chart_, "tensor difference");
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

OneOneTensor operator*(const Scalar& f, const OneOneTensor& r) {
    OneOneTensor out = r;
    for (auto& s : out.c_) s = f * s;
    return out;
}

// ------------------------------------------------------------------- Bivector

Bivector::Bivector(const Chart& chart) : chart_(chart), c_(chart.dim() * chart.dim(), chart.zero()) {}

void Bivector::set(int i, int j, const Scalar& v) {
    if (i == j) {
        if (!v.is_zero()) throw std::invalid_argument("bivector diagonal must vanish");
        return;
    }
    c_[i * dim() + j] = v;
    c_[j * dim() + i] = -v;
}

VectorField Bivector::sharp(const PForm& alpha) const {
    require_same_chart(chart_, alpha.chart(), "pi sharp");
    VectorField out(chart_);
    for (int j = 0; j < dim(); ++j)
        for (int i = 0; i < dim(); ++i)
            if (!alpha[i].is_zero() && !at(i, j).is_zero()) out[j] += alpha[i] * at(i, j);
    return out;
}

Scalar Bivector::eval(const PForm& alpha, const PForm& beta) const { return pair(beta, sharp(alpha)); }

bool Bivector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Bivector Bivector::operator-() const {
    Bivector r = *this;
    for (auto& s : r.c_) s = -s;
    return r;
}

Bivector operator+(const Bivector& a, const Bivector& b) {
    require_same_chart(a.chart_, b.chart_, "bivector sum");
    Bivector r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
    return r;
}

Bivector operator*(const Scalar& f, const Bivector& p) {
    Bivector r = p;
    for (auto& s : r.c_) s = f * s;
    return r;
}

// -------------------------------------------------------------- CovFormValued

CovFormValued::CovFormValued(const Chart& chart, int degree) : chart_(chart), degree_(degree) {
    if (degree < 1) throw std::invalid_argument("covector-valued form needs degree >= 1");
    c_.assign(chart.dim() * tail_size(), chart.zero());
}

Scalar CovFormValued::get(int j, std::vector<int> tail) const {
    int s = sort_with_sign(tail);
    if (s == 0) return chart_.zero();
    const Scalar& v = at(j, tuple_position(chart_.dim(), tail));
    return s > 0 ? v : -v;
}

bool CovFormValued::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

CovFormValued operator-(const CovFormValued& a, const CovFormValued& b) {
    require_same_chart(a.chart_, b.chart_, "covector-valued difference");
    if (a.degree_ != b.degree_) throw std::invalid_argument("covector-valued difference: degree mismatch");
    CovFormValued r = a;
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
    return r;
}

// -------------------------------------------------------- VectorValuedTwoForm

VectorValuedTwoForm::VectorValuedTwoForm(const Chart& chart) : chart_(chart) {
    c_.assign(chart.dim() * pair_count(), chart.zero());
}

Scalar VectorValuedTwoForm::get(int i, int j, int k) const {
    if (j == k) return chart_.zero();
    if (j < k) return at(i, tuple_position(chart_.dim(), {j, k}));
    return -at(i, tuple_position(chart_.dim(), {k, j}));
}

VectorField VectorValuedTwoForm::eval(const VectorField& x, const VectorField& y) const {
    require_same_chart(chart_, x.chart(), "torsion evaluation");
    require_same_chart(chart_, y.chart(), "torsion evaluation");
    const int n = chart_.dim();
    VectorField out(chart_);
    const auto& pairs = index_tuples(n, 2);
    for (std::size_t pos = 0; pos < pairs.size(); ++pos) {
        int j = pairs[pos][0], k = pairs[pos][1];
        Scalar w = x[j] * y[k] - x[k] * y[j];
        if (w.is_zero()) continue;
        for (int i = 0; i < n; ++i)
            if (!at(i, pos).is_zero()) out[i] += at(i, pos) * w;
    }
    return out;
}

PForm VectorValuedTwoForm::dual(const PForm& alpha) const {
    require_same_chart(chart_, alpha.chart(), "dual torsion");
    PForm out(chart_, 2);
    for (std::size_t pos = 0; pos < pair_count(); ++pos)
        for (int i = 0; i < chart_.dim(); ++i)
            if (!alpha[i].is_zero() && !at(i, pos).is_zero()) out.at(pos) += alpha[i] * at(i, pos);
    return out;
}

bool VectorValuedTwoForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar pair(const PForm& alpha, const VectorField& x) {
    require_same_chart(alpha.chart(), x.chart(), "pairing");
    if (alpha.degree() != 1) throw std::invalid_argument("pairing needs a one-form");
    Scalar s = x.chart().zero();
    for (int k = 0; k < x.dim(); ++k)
        if (!alpha[k].is_zero() && !x[k].is_zero()) s += alpha[k] * x[k];
    return s;
}

}  // namespace dnk
