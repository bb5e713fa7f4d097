#include "dnk/symbolic/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace dnk {

Monomial Monomial::var(int k, unsigned power) {
    Monomial m;
    m.exp[k] = static_cast<std::uint16_t>(power);
    m.deg = power;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int k = 0; k < kMaxVars; ++k)
        if (exp[k] > o.exp[k]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m;
    for (int k = 0; k < kMaxVars; ++k) {
        unsigned e = unsigned(exp[k]) + o.exp[k];
        if (e > std::numeric_limits<std::uint16_t>::max()) throw std::overflow_error("exponent overflow");
        m.exp[k] = static_cast<std::uint16_t>(e);
    }
    m.deg = deg + o.deg;
    return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial m;
    for (int k = 0; k < kMaxVars; ++k) m.exp[k] = static_cast<std::uint16_t>(exp[k] - o.exp[k]);
    m.deg = deg - o.deg;
    return m;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int k = 0; k < kMaxVars; ++k)
        if (a.exp[k] != b.exp[k]) return a.exp[k] < b.exp[k] ? -1 : 1;
    return 0;
}

namespace {

bool term_before(const Term& a, const Term& b) { return grlex_cmp(a.mono, b.mono) > 0; }

}  // namespace

Polynomial::Polynomial(int nvars, const Coeff& c) : nvars_(nvars) {
    check_nvars();
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(int nvars, int k) {
    if (k < 0 || k >= nvars) throw std::out_of_range("variable index");
    return monomial(nvars, Monomial::var(k), Coeff(1));
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Coeff& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    std::sort(terms.begin(), terms.end(), term_before);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else {
            if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    return p;
}

bool Polynomial::is_real() const {
    for (const auto& t : terms_)
        if (!t.coeff.is_real()) return false;
    return true;
}

Coeff Polynomial::constant_value() const {
    if (terms_.empty()) return Coeff(0);
    if (terms_[0].mono.deg != 0) throw std::logic_error("polynomial is not constant");
    return terms_[0].coeff;
}

unsigned Polynomial::degree_in(int k) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[k]);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : grlex_cmp(a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (subtract) out.back().coeff = -out.back().coeff;
        } else {
            Coeff s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    r.terms_ = merge_terms(a.terms_, b.terms_, false);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    r.terms_ = merge_terms(a.terms_, b.terms_, true);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Polynomial(a.nvars_);
    if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
    return Polynomial::from_terms(a.nvars_, std::move(prod));
}

Polynomial Polynomial::scaled(const Coeff& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    Polynomial r = *this;
    if (c.is_one()) return r;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Coeff& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the grlex order.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(nvars_, Coeff(1));
    Polynomial base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

Polynomial Polynomial::diff(int k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.exp[k] == 0) continue;
        Term d = t;
        d.coeff *= Coeff(static_cast<long>(t.mono.exp[k]));
        d.mono.exp[k] -= 1;
        d.mono.deg -= 1;
        out.push_back(std::move(d));
    }
    // Order can change among terms whose degree dropped differently.
    return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::conj() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff.conj();
    return r;
}

Coeff Polynomial::eval(const std::vector<Coeff>& point) const {
    if (static_cast<int>(point.size()) < nvars_) throw std::invalid_argument("point dimension");
    std::vector<std::vector<Coeff>> powers(nvars_);
    for (int k = 0; k < nvars_; ++k) {
        unsigned d = degree_in(k);
        powers[k].reserve(d + 1);
        powers[k].push_back(Coeff(1));
        for (unsigned e = 1; e <= d; ++e) powers[k].push_back(powers[k].back() * point[k]);
    }
    Coeff sum(0);
    for (const auto& t : terms_) {
        Coeff v = t.coeff;
        for (int k = 0; k < nvars_; ++k)
            if (t.mono.exp[k]) v *= powers[k][t.mono.exp[k]];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::substitute_constants(const std::vector<const Coeff*>& values) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term s = t;
        for (int k = 0; k < nvars_ && k < static_cast<int>(values.size()); ++k) {
            if (!values[k] || t.mono.exp[k] == 0) continue;
            Coeff p(1);
            for (unsigned e = 0; e < t.mono.exp[k]; ++e) p *= *values[k];
            s.coeff *= p;
            s.mono.deg -= s.mono.exp[k];
            s.mono.exp[k] = 0;
        }
        out.push_back(std::move(s));
    }
    return from_terms(nvars_, std::move(out));
}

Polynomial Polynomial::reindex(int new_nvars, const std::vector<int>& map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term s{Monomial{}, t.coeff};
        s.mono.deg = t.mono.deg;
        for (int k = 0; k < nvars_; ++k) {
            if (!t.mono.exp[k]) continue;
            if (k >= static_cast<int>(map.size()) || map[k] < 0 || map[k] >= new_nvars)
                throw std::invalid_argument("reindex: variable has no image");
            s.mono.exp[map[k]] += t.mono.exp[k];
        }
        out.push_back(std::move(s));
    }
    return from_terms(new_nvars, std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& b) const {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (b.is_constant()) return scaled(Coeff(1) / b.constant_value());
    Polynomial q(nvars_);
    Polynomial r = *this;
    const Term& lb = b.leading();
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lb.mono.divides(lr.mono)) throw std::domain_error("inexact polynomial division");
        Monomial m = lr.mono / lb.mono;
        Coeff c = lr.coeff / lb.coeff;
        q.terms_.push_back({m, c});
        r -= b.times_monomial(m, c);
    }
    return q;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty() || terms_[0].coeff.is_one()) return *this;
    return scaled(Coeff(1) / terms_[0].coeff);
}

Monomial Polynomial::min_monomial() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_[0].mono;
    for (const auto& t : terms_)
        for (int k = 0; k < kMaxVars; ++k) m.exp[k] = std::min(m.exp[k], t.mono.exp[k]);
    m.deg = 0;
    for (int k = 0; k < kMaxVars; ++k) m.deg += m.exp[k];
    return m;
}

// ---------------------------------------------------------------------------
// gcd: recursive content / primitive part, subresultant PRS in a main variable

namespace {

using UPoly = std::vector<Polynomial>;  // coefficient of main^k at index k

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly to_univariate(const Polynomial& p, int k) {
    std::vector<std::vector<Term>> buckets(p.degree_in(k) + 1);
    for (const auto& t : p.terms()) {
        Term s = t;
        unsigned e = s.mono.exp[k];
        s.mono.exp[k] = 0;
        s.mono.deg -= e;
        buckets[e].push_back(std::move(s));
    }
    UPoly u;
    u.reserve(buckets.size());
    for (auto& b : buckets) u.push_back(Polynomial::from_terms(p.nvars(), std::move(b)));
    trim(u);
    return u;
}

Polynomial from_univariate(const UPoly& u, int k, int nvars) {
    std::vector<Term> out;
    for (std::size_t e = 0; e < u.size(); ++e)
        for (const auto& t : u[e].terms()) {
            Term s = t;
            s.mono.exp[k] = static_cast<std::uint16_t>(s.mono.exp[k] + e);
            s.mono.deg += static_cast<std::uint32_t>(e);
            out.push_back(std::move(s));
        }
    return Polynomial::from_terms(nvars, std::move(out));
}

Polynomial content(const UPoly& u) {
    Polynomial g(u.empty() ? 0 : u[0].nvars());
    for (const auto& c : u) {
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

UPoly divide_all(const UPoly& u, const Polynomial& c) {
    if (c.is_one()) return u;
    UPoly r;
    r.reserve(u.size());
    for (const auto& x : u) r.push_back(x.divide_exact(c));
    return r;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
    const std::size_t db = b.size() - 1;
    const Polynomial& lcb = b.back();
    long steps = static_cast<long>(a.size()) - static_cast<long>(db);  // delta + 1
    long done = 0;
    while (!a.empty() && a.size() - 1 >= db) {
        Polynomial lca = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c = c * lcb;
        for (std::size_t e = 0; e <= db; ++e) a[e + shift] -= lca * b[e];
        trim(a);
        ++done;
    }
    if (!a.empty() && steps - done > 0) {
        Polynomial f = lcb.pow(static_cast<unsigned>(steps - done));
        for (auto& c : a) c = c * f;
    }
    return a;
}

// Gcd of primitive univariate polynomials up to a factor in the coefficient ring.
UPoly subresultant_gcd(UPoly a, UPoly b) {
    if (a.size() < b.size()) std::swap(a, b);
    const int nv = a[0].nvars();
    Polynomial g(nv, Coeff(1));
    Polynomial h(nv, Coeff(1));
    while (true) {
        const unsigned d = static_cast<unsigned>(a.size() - b.size());
        UPoly r = pseudo_remainder(a, b);
        if (r.empty()) return b;
        if (r.size() == 1) return UPoly{Polynomial(nv, Coeff(1))};
        a = std::move(b);
        b = divide_all(r, g * h.pow(d));
        g = a.back();
        if (d == 1)
            h = g;
        else if (d > 1)
            h = g.pow(d).divide_exact(h.pow(d - 1));
    }
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
    const int nv = a.nvars();
    int main_var = -1;
    unsigned best = 0;
    for (int k = 0; k < nv; ++k) {
        unsigned da = a.degree_in(k), db = b.degree_in(k);
        if (da > 0 && db == 0) return gcd(content(to_univariate(a, k)), b);
        if (db > 0 && da == 0) return gcd(a, content(to_univariate(b, k)));
        if (da > 0 && (main_var < 0 || std::max(da, db) < best)) {
            main_var = k;
            best = std::max(da, db);
        }
    }
    if (main_var < 0) return Polynomial(nv, Coeff(1));
    UPoly ua = to_univariate(a, main_var);
    UPoly ub = to_univariate(b, main_var);
    Polynomial ca = content(ua), cb = content(ub);
    Polynomial c = gcd(ca, cb);
    UPoly g = subresultant_gcd(divide_all(ua, ca), divide_all(ub, cb));
    g = divide_all(g, content(g));
    return (c * from_univariate(g, main_var, nv)).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const int nv = a.nvars();
    if (a.is_constant() || b.is_constant()) return Polynomial(nv, Coeff(1));
    if (a == b) return a.monic();
    if (a.size() == 1 || b.size() == 1) {
        Monomial ma = a.min_monomial(), mb = b.min_monomial();
        Monomial m;
        for (int k = 0; k < kMaxVars; ++k) {
            m.exp[k] = std::min(ma.exp[k], mb.exp[k]);
            m.deg += m.exp[k];
        }
        return Polynomial::monomial(nv, m, Coeff(1));
    }
    return gcd_recursive(a, b);
}

}  // namespace dnk
