#include "dnk/symbolic/parser.hpp"

#include <cctype>

namespace dnk {

namespace {

class Parser {
public:
    Parser(const std::string& text, const ParseContext& ctx)
        : text_(text), ctx_(ctx), nvars_(static_cast<int>(ctx.variables.size())) {}

    Scalar run() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
        Scalar s = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return s;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == text_.size()) throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
            throw ParseError(pos_, std::string("expected '") + c + "'");
        }
    }

    Scalar expr() {
        Scalar acc = term();
        while (true) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Scalar term() {
        Scalar acc = unary();
        while (true) {
            skip_ws();
            std::size_t at = pos_;
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                Scalar d = unary();
                if (d.is_zero()) throw ParseError(at, "division by zero");
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    Scalar unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = primary();
        skip_ws();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        long e = exponent();
        if (e < 0 && base.is_zero()) throw ParseError(at, "division by zero");
        return base.pow(static_cast<int>(e));
    }

    long exponent() {
        skip_ws();
        std::size_t at = pos_;
        Scalar v(nvars_);
        if (accept('(')) {
            v = expr();
            expect(')');
        } else {
            bool neg = accept('-');
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(pos_, "expected integer exponent");
            v = integer();
            if (neg) v = -v;
        }
        if (!v.is_constant()) throw ParseError(at, "exponent must be an integer constant");
        const Coeff c = v.constant_value();
        if (!c.is_real() || c.re().get_den() != 1) throw ParseError(at, "exponent must be an integer constant");
        const Rational q = c.re();
        if (abs(q) > 1000) throw ParseError(at, "exponent too large");
        return q.get_num().get_si();
    }

    Scalar integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        mpz_class z(text_.substr(start, pos_ - start), 10);
        return Scalar(nvars_, Coeff(Rational(z)));
    }

    Scalar primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar s = expr();
            expect(')');
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return integer();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (ctx_.complex_mode && name == "i") return Scalar(nvars_, Coeff::imag_unit());
            for (int k = 0; k < nvars_; ++k)
                if (ctx_.variables[k] == name) return Scalar::variable(nvars_, k);
            if (ctx_.symbols) {
                auto it = ctx_.symbols->find(name);
                if (it != ctx_.symbols->end()) return it->second;
            }
            throw ParseError(start, "unknown variable '" + name + "'");
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    const std::string& text_;
    const ParseContext& ctx_;
    int nvars_;
    std::size_t pos_ = 0;
};

std::string rational_factor(const Rational& q) {
    // q > 0
    if (q.get_den() == 1) return q.get_num().get_str();
    return "(" + q.get_str() + ")";
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t k = 0; k < vars.size(); ++k) {
        if (!m.exp[k]) continue;
        if (!out.empty()) out += "*";
        out += vars[k];
        if (m.exp[k] > 1) out += "^" + std::to_string(m.exp[k]);
    }
    return out;
}

// Returns the term text without its leading sign and whether it is negative.
std::pair<std::string, bool> term_str(const Term& t, const std::vector<std::string>& vars) {
    const Coeff& c = t.coeff;
    std::string mono = monomial_str(t.mono, vars);
    std::string coeff;
    bool negative = false;
    bool unit = false;
    if (c.is_real()) {
        negative = sgn(c.re()) < 0;
        Rational a = abs(c.re());
        unit = (a == 1);
        coeff = mono.empty() ? a.get_str() : rational_factor(a);
    } else if (sgn(c.re()) == 0) {
        negative = sgn(c.im()) < 0;
        Rational b = abs(c.im());
        coeff = (b == 1) ? "i" : rational_factor(b) + "*i";
    } else {
        std::string re = c.re().get_str();
        Rational b = abs(c.im());
        std::string im = (b == 1) ? "i" : rational_factor(b) + "*i";
        coeff = "(" + re + (sgn(c.im()) < 0 ? " - " : " + ") + im + ")";
    }
    if (mono.empty()) return {coeff, negative};
    if (unit) return {mono, negative};
    return {coeff + "*" + mono, negative};
}

}  // namespace

Scalar parse_scalar(const std::string& text, const ParseContext& ctx) {
    Parser p(text, ctx);
    try {
        return p.run();
    } catch (const DivisionByZero&) {
        throw ParseError(0, "division by zero");
    }
}

std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        auto [s, neg] = term_str(t, vars);
        if (first)
            out += neg ? "-" + s : s;
        else
            out += (neg ? " - " : " + ") + s;
        first = false;
    }
    if (p.size() > 1) out = "(" + out + ")";
    return out;
}

std::string print_scalar(const Scalar& s, const std::vector<std::string>& vars) {
    std::string n = print_polynomial(s.num(), vars);
    if (s.is_polynomial()) return n;
    std::string d = print_polynomial(s.den(), vars);
    if (s.num().size() <= 1) n = "(" + n + ")";
    if (s.den().size() <= 1) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace dnk
