#ifndef DNK_TENSOR_FIELDS_HPP
#define DNK_TENSOR_FIELDS_HPP

#include "dnk/tensor/chart.hpp"

#include <vector>

namespace dnk {

// Strictly increasing index tuples of length p from {0..n-1}, in lex order.
const std::vector<std::vector<int>>& index_tuples(int n, int p);
// Position of a strictly increasing tuple in index_tuples(n, p).
std::size_t tuple_position(int n, const std::vector<int>& sorted);
// Sorts `indices`; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<int>& indices);

class VectorField {
public:
    VectorField() = default;
    explicit VectorField(const Chart& chart);
    VectorField(const Chart& chart, std::vector<Scalar> components);
    static VectorField coordinate(const Chart& chart, int k);

    const Chart& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }
    const std::vector<Scalar>& components() const { return c_; }

    bool is_zero() const;
    Scalar apply(const Scalar& f) const;  // X(f)

    VectorField operator-() const;
    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const Scalar& f, const VectorField& x);
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.chart_ == b.chart_ && a.c_ == b.c_; }

private:
    Chart chart_;
    std::vector<Scalar> c_;
};

// Differential p-form; components stored on strictly increasing index tuples.
class PForm {
public:
    PForm() = default;
    PForm(const Chart& chart, int degree);
    static PForm function(const Chart& chart, const Scalar& f);
    static PForm coordinate(const Chart& chart, int k);  // dx^k
    static PForm one_form(const Chart& chart, std::vector<Scalar> components);

    const Chart& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    int degree() const { return degree_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<int>& tuple(std::size_t pos) const { return index_tuples(dim(), degree_)[pos]; }
    const Scalar& at(std::size_t pos) const { return c_[pos]; }
    Scalar& at(std::size_t pos) { return c_[pos]; }
    // Component on indices in any order (antisymmetry applied).
    Scalar get(std::vector<int> indices) const;
    // Sets the component on an index list in any order (antisymmetry applied).
    void set(std::vector<int> indices, const Scalar& value);
    // One-form convenience.
    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }

    bool is_zero() const;
    PForm operator-() const;
    PForm& operator+=(const PForm& o);
    PForm& operator-=(const PForm& o);
    friend PForm operator+(PForm a, const PForm& b) { return a += b; }
    friend PForm operator-(PForm a, const PForm& b) { return a -= b; }
    friend PForm operator*(const Scalar& f, const PForm& w);
    friend bool operator==(const PForm& a, const PForm& b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

private:
    Chart chart_;
    int degree_ = 0;
    std::vector<Scalar> c_;
};

// Totally antisymmetric contravariant tensor (used for trivectors).
class Multivector {
public:
    Multivector() = default;
    Multivector(const Chart& chart, int degree);
    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    std::size_t size() const { return c_.size(); }
    const std::vector<int>& tuple(std::size_t pos) const { return index_tuples(chart_.dim(), degree_)[pos]; }
    const Scalar& at(std::size_t pos) const { return c_[pos]; }
    Scalar& at(std::size_t pos) { return c_[pos]; }
    Scalar get(std::vector<int> indices) const;
    bool is_zero() const;

private:
    Chart chart_;
    int degree_ = 0;
    std::vector<Scalar> c_;
};

// r(d/dx^j) = r^i_j d/dx^i, stored as at(i, j).
class OneOneTensor {
public:
    OneOneTensor() = default;
    explicit OneOneTensor(const Chart& chart);
    static OneOneTensor identity(const Chart& chart);
    static OneOneTensor scalar_multiple(const Chart& chart, const Scalar& f);
    static OneOneTensor diagonal(const Chart& chart, const std::vector<Scalar>& entries);

    const Chart& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    const Scalar& at(int i, int j) const { return c_[i * dim() + j]; }
    Scalar& at(int i, int j) { return c_[i * dim() + j]; }

    VectorField apply(const VectorField& x) const;  // r(X)
    PForm dual_apply(const PForm& alpha) const;     // r*(alpha) for one-forms
    OneOneTensor compose(const OneOneTensor& s) const;  // this o s
    OneOneTensor power(unsigned n) const;
    Scalar trace() const;
    bool is_zero() const;

    OneOneTensor operator-() const;
    OneOneTensor& operator+=(const OneOneTensor& o);
    OneOneTensor& operator-=(const OneOneTensor& o);
    friend OneOneTensor operator+(OneOneTensor a, const OneOneTensor& b) { return a += b; }
    friend OneOneTensor operator-(OneOneTensor a, const OneOneTensor& b) { return a -= b; }
    friend OneOneTensor operator*(const Scalar& f, const OneOneTensor& r);
    friend bool operator==(const OneOneTensor& a, const OneOneTensor& b) {
        return a.chart_ == b.chart_ && a.c_ == b.c_;
    }

private:
    Chart chart_;
    std::vector<Scalar> c_;
};

class Bivector {
public:
    Bivector() = default;
    explicit Bivector(const Chart& chart);
    const Chart& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    const Scalar& at(int i, int j) const { return c_[i * dim() + j]; }
    void set(int i, int j, const Scalar& v);  // also sets (j, i) to -v

    VectorField sharp(const PForm& alpha) const;  // i_alpha pi = pi(alpha, .)
    Scalar eval(const PForm& alpha, const PForm& beta) const;
    bool is_zero() const;
    Bivector operator-() const;
    friend Bivector operator+(const Bivector& a, const Bivector& b);
    friend Bivector operator*(const Scalar& f, const Bivector& p);
    friend bool operator==(const Bivector& a, const Bivector& b) { return a.chart_ == b.chart_ && a.c_ == b.c_; }

private:
    Chart chart_;
    std::vector<Scalar> c_;
};

// Tensor T(X1; X2, ..., Xp) antisymmetric in the last p-1 slots only.
// Stored as at(j, pos) with pos a position in index_tuples(n, p-1).
class CovFormValued {
public:
    CovFormValued() = default;
    CovFormValued(const Chart& chart, int degree);
    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    std::size_t tail_size() const { return index_tuples(chart_.dim(), degree_ - 1).size(); }
    const Scalar& at(int j, std::size_t pos) const { return c_[j * tail_size() + pos]; }
    Scalar& at(int j, std::size_t pos) { return c_[j * tail_size() + pos]; }
    Scalar get(int j, std::vector<int> tail) const;
    bool is_zero() const;
    friend CovFormValued operator-(const CovFormValued& a, const CovFormValued& b);
    friend bool operator==(const CovFormValued& a, const CovFormValued& b) {
        return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

private:
    Chart chart_;
    int degree_ = 1;
    std::vector<Scalar> c_;
};

// Vector-valued two-form, components at(i, pos) with pos indexing pairs j < k.
class VectorValuedTwoForm {
public:
    VectorValuedTwoForm() = default;
    explicit VectorValuedTwoForm(const Chart& chart);
    const Chart& chart() const { return chart_; }
    std::size_t pair_count() const { return index_tuples(chart_.dim(), 2).size(); }
    const Scalar& at(int i, std::size_t pos) const { return c_[i * pair_count() + pos]; }
    Scalar& at(int i, std::size_t pos) { return c_[i * pair_count() + pos]; }
    Scalar get(int i, int j, int k) const;

    VectorField eval(const VectorField& x, const VectorField& y) const;
    PForm dual(const PForm& alpha) const;  // (Y, Z) -> alpha(N(Y, Z))
    bool is_zero() const;

private:
    Chart chart_;
    std::vector<Scalar> c_;
};

Scalar pair(const PForm& alpha, const VectorField& x);  // alpha(X)

}  // namespace dnk

#endif
