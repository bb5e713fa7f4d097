#ifndef DNK_SYMBOLIC_COEFF_HPP
#define DNK_SYMBOLIC_COEFF_HPP

#include <gmpxx.h>

#include <string>

namespace dnk {

// GMP keeps mpq_class canonical (reduced, positive denominator).
using Rational = mpq_class;

// Element of Q(i). Real mode simply never sets the imaginary part, and every
// operation short-circuits when both imaginary parts vanish.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}
    GaussianRational(const Rational& re) : re_(re) {}
    GaussianRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}

    static GaussianRational imag_unit() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        if (sgn(o.im_) != 0) im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        if (sgn(o.im_) != 0) im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Sign used for normalisation: positive real part, or zero real part and
    // positive imaginary part.
    bool is_positive_normal() const {
        int s = sgn(re_);
        return s > 0 || (s == 0 && sgn(im_) > 0);
    }

    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

using Coeff = GaussianRational;

std::string rational_str(const Rational& q);

}  // namespace dnk

#endif
