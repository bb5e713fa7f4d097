#ifndef DNK_SYMBOLIC_SCALAR_HPP
#define DNK_SYMBOLIC_SCALAR_HPP

#include "dnk/symbolic/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnk {

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown by eval when the denominator vanishes at the requested point.
struct DenominatorVanishes : std::domain_error {
    using std::domain_error::domain_error;
};

// Canonical rational function num/den: gcd(num, den) = 1 and den monic.
class Scalar {
public:
    Scalar() : num_(0), den_(0, Coeff(1)) {}
    explicit Scalar(int nvars) : num_(nvars), den_(nvars, Coeff(1)) {}
    Scalar(int nvars, const Coeff& c) : num_(nvars, c), den_(nvars, Coeff(1)) {}
    explicit Scalar(const Polynomial& p) : num_(p), den_(p.nvars(), Coeff(1)) {}
    Scalar(const Polynomial& num, const Polynomial& den);  // canonicalises

    static Scalar variable(int nvars, int k) { return Scalar(Polynomial::variable(nvars, k)); }
    static Scalar constant(int nvars, const Coeff& c) { return Scalar(nvars, c); }

    int nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_real() const { return num_.is_real() && den_.is_real(); }
    Coeff constant_value() const;  // pre: is_constant

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar scaled(const Coeff& c) const;
    Scalar pow(int e) const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar diff(int k) const;
    Scalar conj() const;
    Scalar real_part() const;
    Scalar imag_part() const;

    Coeff eval(const std::vector<Coeff>& point) const;

    // Replace some variables by constants (null entries untouched).
    Scalar substitute_constants(const std::vector<const Coeff*>& values) const;
    // Replace variables by arbitrary expressions in a ring with new_nvars
    // variables; images[k] must be set for every variable occurring here.
    Scalar compose(int new_nvars, const std::vector<std::optional<Scalar>>& images) const;
    Scalar reindex(int new_nvars, const std::vector<int>& map) const;

private:
    struct Raw {};
    Scalar(Polynomial num, Polynomial den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_;
    Polynomial den_;
};

// Evaluation-based nonzero witness search: tries count pseudo-random points
// with coordinates in [1, 10^6]; returns true if any evaluation is nonzero.
bool has_nonzero_sample(const Scalar& s, unsigned count, unsigned long long seed);

}  // namespace dnk

#endif
