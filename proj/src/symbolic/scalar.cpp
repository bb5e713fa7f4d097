#include "dnk/symbolic/scalar.hpp"

#include <random>

namespace dnk {

namespace {

void normalise(Polynomial& num, Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero("division by zero");
    if (num.is_zero()) {
        den = Polynomial(num.nvars(), Coeff(1));
        return;
    }
    if (!den.is_constant()) {
        Polynomial g = gcd(num, den);
        if (!g.is_one()) {
            num = num.divide_exact(g);
            den = den.divide_exact(g);
        }
    }
    if (!den.leading_coeff().is_one()) {
        Coeff inv = Coeff(1) / den.leading_coeff();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
}

}  // namespace

Scalar::Scalar(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    normalise(num_, den_);
}

Coeff Scalar::constant_value() const {
    if (!is_constant()) throw std::logic_error("scalar is not constant");
    return num_.constant_value() / den_.constant_value();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, Raw{}); }

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return Scalar(a.num_ + b.num_, a.den_, Scalar::Raw{});
        return Scalar(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return Scalar(a.num_ * b.den_ + b.num_, b.den_, Scalar::Raw{});
    if (b.den_.is_one()) return Scalar(a.num_ + b.num_ * a.den_, a.den_, Scalar::Raw{});
    Polynomial g = gcd(a.den_, b.den_);
    if (g.is_one()) return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Polynomial ca = b.den_.divide_exact(g);  // cofactor for a
    Polynomial cb = a.den_.divide_exact(g);
    return Scalar(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar(a.nvars());
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_, a.den_, Scalar::Raw{});
    // Cross-cancel so the product is already reduced.
    Polynomial g1 = gcd(a.num_, b.den_);
    Polynomial g2 = gcd(b.num_, a.den_);
    Polynomial n = a.num_.divide_exact(g1) * b.num_.divide_exact(g2);
    Polynomial d = a.den_.divide_exact(g2) * b.den_.divide_exact(g1);
    if (!d.leading_coeff().is_one()) {
        Coeff inv = Coeff(1) / d.leading_coeff();
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    return Scalar(std::move(n), std::move(d), Scalar::Raw{});
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    Polynomial bn = b.num_;
    Polynomial bd = b.den_;
    Coeff lc = bn.leading_coeff();
    Scalar inv(bd.scaled(Coeff(1) / lc), bn.scaled(Coeff(1) / lc), Scalar::Raw{});
    return a * inv;
}

Scalar Scalar::scaled(const Coeff& c) const {
    if (c.is_zero()) return Scalar(nvars());
    return Scalar(num_.scaled(c), den_, Raw{});
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return Scalar(nvars(), Coeff(1)) / pow(-e);
    return Scalar(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Raw{});
}

Scalar Scalar::diff(int k) const {
    if (den_.is_one()) return Scalar(num_.diff(k), den_, Raw{});
    Polynomial dn = num_.diff(k);
    Polynomial dd = den_.diff(k);
    if (dd.is_zero()) return Scalar(dn, den_);
    return Scalar(dn * den_ - num_ * dd, den_ * den_);
}

Scalar Scalar::conj() const { return Scalar(num_.conj(), den_.conj()); }

Scalar Scalar::real_part() const {
    if (is_real()) return *this;
    Scalar c = conj();
    return (*this + c).scaled(Coeff(Rational(1, 2)));
}

Scalar Scalar::imag_part() const {
    if (is_real()) return Scalar(nvars());
    Scalar c = conj();
    // (s - conj s) / (2i)
    return (*this - c).scaled(Coeff(Rational(0), Rational(-1, 2)));
}

Coeff Scalar::eval(const std::vector<Coeff>& point) const {
    Coeff d = den_.eval(point);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at point");
    return num_.eval(point) / d;
}

Scalar Scalar::substitute_constants(const std::vector<const Coeff*>& values) const {
    Polynomial n = num_.substitute_constants(values);
    Polynomial d = den_.substitute_constants(values);
    if (d.is_zero()) throw DenominatorVanishes("denominator vanishes after substitution");
    return Scalar(n, d);
}

namespace {

Scalar compose_poly(const Polynomial& p, int new_nvars, const std::vector<std::optional<Scalar>>& images) {
    Scalar sum(new_nvars);
    for (const auto& t : p.terms()) {
        Scalar term(new_nvars, t.coeff);
        for (int k = 0; k < p.nvars(); ++k) {
            if (!t.mono.exp[k]) continue;
            if (k >= static_cast<int>(images.size()) || !images[k])
                throw std::invalid_argument("compose: variable has no image");
            term = term * images[k]->pow(t.mono.exp[k]);
        }
        sum = sum + term;
    }
    return sum;
}

}  // namespace

Scalar Scalar::compose(int new_nvars, const std::vector<std::optional<Scalar>>& images) const {
    Scalar n = compose_poly(num_, new_nvars, images);
    Scalar d = compose_poly(den_, new_nvars, images);
    return n / d;
}

Scalar Scalar::reindex(int new_nvars, const std::vector<int>& map) const {
    // Injective relabelling keeps coprimality, but the leading term may move.
    Polynomial n = num_.reindex(new_nvars, map);
    Polynomial d = den_.reindex(new_nvars, map);
    if (!d.leading_coeff().is_one()) {
        Coeff inv = Coeff(1) / d.leading_coeff();
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    return Scalar(std::move(n), std::move(d), Raw{});
}

bool has_nonzero_sample(const Scalar& s, unsigned count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(1, 1000000);
    unsigned tried = 0;
    for (unsigned attempt = 0; tried < count && attempt < 20 * count; ++attempt) {
        std::vector<Coeff> pt;
        for (int k = 0; k < s.nvars(); ++k) pt.emplace_back(coord(rng));
        try {
            if (!s.eval(pt).is_zero()) return true;
            ++tried;
        } catch (const DenominatorVanishes&) {
        }
    }
    return false;
}

}  // namespace dnk
