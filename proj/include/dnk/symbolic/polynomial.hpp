#ifndef DNK_SYMBOLIC_POLYNOMIAL_HPP
#define DNK_SYMBOLIC_POLYNOMIAL_HPP

#include "dnk/symbolic/coeff.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dnk {

inline constexpr int kMaxVars = 12;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};
    std::uint32_t deg = 0;

    static Monomial var(int k, unsigned power = 1);
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;  // pre: divides
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.deg == b.deg && a.exp == b.exp;
    }
};

// Graded lexicographic: total degree first, then the first differing exponent
// (earlier variables heavier). Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Coeff coeff;
};

// Sparse multivariate polynomial over Q(i) with a fixed number of variables.
// Terms are kept in strictly decreasing grlex order with nonzero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) { check_nvars(); }
    Polynomial(int nvars, const Coeff& c);

    static Polynomial variable(int nvars, int k);
    static Polynomial monomial(int nvars, const Monomial& m, const Coeff& c);
    // Terms in any order, zeros and duplicates allowed.
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.deg == 0); }
    bool is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }
    bool is_real() const;
    Coeff constant_value() const;  // pre: is_constant

    const Term& leading() const { return terms_.front(); }
    const Coeff& leading_coeff() const { return terms_.front().coeff; }
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.deg; }
    unsigned degree_in(int k) const;
    bool depends_on(int k) const { return degree_in(k) > 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Coeff& c) const;
    Polynomial times_monomial(const Monomial& m, const Coeff& c) const;
    Polynomial pow(unsigned e) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial diff(int k) const;
    Polynomial conj() const;
    Coeff eval(const std::vector<Coeff>& point) const;

    // Substitute constants for some variables (entries without value are kept).
    Polynomial substitute_constants(const std::vector<const Coeff*>& values) const;
    // Relabel variables: variable k goes to position map[k] of a ring with
    // new_nvars variables. Variables of this polynomial must all be mapped.
    Polynomial reindex(int new_nvars, const std::vector<int>& map) const;

    // Exact division; throws std::domain_error when b does not divide *this.
    Polynomial divide_exact(const Polynomial& b) const;
    // Scale so the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;
    Monomial min_monomial() const;  // componentwise minimum over the terms

private:
    void check_nvars() const {
        if (nvars_ < 0 || nvars_ > kMaxVars) throw std::invalid_argument("too many variables");
    }
    int nvars_ = 0;
    std::vector<Term> terms_;
};

// Monic gcd (zero only if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace dnk

#endif
