#include "doctest.h"

#include "dnk/symbolic/linalg.hpp"
#include "dnk/symbolic/parser.hpp"
#include "dnk/symbolic/random.hpp"

using namespace dnk;

namespace {

const std::vector<std::string> XY{"x", "y"};

Scalar P(const std::string& s, const std::vector<std::string>& vars = XY, bool complex = false) {
    ParseContext ctx{vars, complex, nullptr};
    return parse_scalar(s, ctx);
}

}  // namespace

TEST_CASE("parse reads terms in grlex order") {
    Scalar s = P("x1^2*x2 - 3/2", {"x1", "x2"});
    REQUIRE(s.is_polynomial());
    const auto& t = s.num().terms();
    REQUIRE(t.size() == 2);
    CHECK(t[0].mono.exp[0] == 2);
    CHECK(t[0].mono.exp[1] == 1);
    CHECK(t[0].coeff == Coeff(1));
    CHECK(t[1].mono.deg == 0);
    CHECK(t[1].coeff == Coeff(Rational(-3, 2)));
}

TEST_CASE("parse reduces and rejects") {
    CHECK(P("(x+1)/(x+1)").is_one());
    CHECK_THROWS_AS(P("x/0"), ParseError);
    CHECK_THROWS_AS(P("x/(y-y)"), ParseError);
    CHECK_THROWS_AS(P("z + 1"), ParseError);
    CHECK_THROWS_AS(P("x + "), ParseError);
    CHECK_THROWS_AS(P("x ** 2"), ParseError);
    CHECK_THROWS_AS(P("(x + 1"), ParseError);
    CHECK_THROWS_AS(P("i*x"), ParseError);
    try {
        P("x + $");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
    CHECK(P("x^-1") == P("1/x"));
    CHECK(P("-x^2") == -(P("x") * P("x")));
    CHECK(P("2^(1+1)") == P("4"));
}

TEST_CASE("field operations") {
    CHECK(P("(x+1)^2 - (x^2 + 2*x + 1)").is_zero());
    CHECK((P("1/x") * P("x")).is_one());
    Scalar s = P("x/y") + P("y/x");
    CHECK(s.num() == P("x^2 + y^2").num());
    CHECK(s.den() == P("x*y").num());
    CHECK_THROWS_AS(P("x") / P("0"), DivisionByZero);
}

TEST_CASE("differentiation") {
    std::vector<std::string> v{"x1", "x2"};
    CHECK(P("x1^2*x2", v).diff(0) == P("2*x1*x2", v));
    CHECK(P("1/x").diff(0) == P("-1/x^2"));
    CHECK(P("x").diff(1).is_zero());
    CHECK(P("(x+y)/(x-y)").diff(0) == P("-2*y/(x-y)^2"));
}

TEST_CASE("is_zero") {
    CHECK(Scalar(2).is_zero());
    CHECK(P("(x-y)*(x+y) - x^2 + y^2").is_zero());
    CHECK_FALSE(P("x - y").is_zero());
}

TEST_CASE("evaluation") {
    CHECK(P("x^2 + y").eval({Coeff(2), Coeff(3)}) == Coeff(7));
    CHECK_THROWS_AS(P("1/x").eval({Coeff(0), Coeff(1)}), DenominatorVanishes);
    Scalar ix = P("i*x", {"x"}, true);
    CHECK(ix.eval({Coeff(3)}) == Coeff(Rational(0), Rational(3)));
}

TEST_CASE("complex parts") {
    std::vector<std::string> v{"x", "y"};
    Scalar z = P("(x + i*y)^2", v, true);
    CHECK(z.real_part() == P("x^2 - y^2"));
    CHECK(z.imag_part() == P("2*x*y"));
    Scalar q = P("1/(x + i*y)", v, true);
    CHECK(q.real_part() == P("x/(x^2 + y^2)"));
    CHECK(q.imag_part() == P("-y/(x^2 + y^2)"));
    // Leading coefficient of the denominator is normalised to 1.
    Scalar w = P("1/(i*x + 1)", v, true);
    CHECK(w.den().leading_coeff().is_one());
}

TEST_CASE("gcd against planted factors") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 3;
        Polynomial a = random_polynomial(rng, n, 2, 0.6);
        Polynomial b = random_polynomial(rng, n, 2, 0.6);
        Polynomial g = random_polynomial(rng, n, 2, 0.6);
        Polynomial h = gcd(a * g, b * g);
        // h is a common divisor and g divides h
        CHECK_NOTHROW((a * g).divide_exact(h));
        CHECK_NOTHROW((b * g).divide_exact(h));
        CHECK_NOTHROW(h.divide_exact(g));
        CHECK(h.leading_coeff().is_one());
    }
}

TEST_CASE("field axioms on random inputs") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + trial % 2;
        Scalar a = random_fraction(rng, n, 2), b = random_fraction(rng, n, 2), c = random_fraction(rng, n, 2);
        CHECK(((a + b) + c - (a + (b + c))).is_zero());
        CHECK(((a * b) * c - a * (b * c)).is_zero());
        CHECK((a * (b + c) - (a * b + a * c)).is_zero());
        CHECK((a + b - (b + a)).is_zero());
        if (!a.is_zero()) CHECK((a * (Scalar(n, Coeff(1)) / a)).is_one());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("Leibniz rule for diff") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar a = random_fraction(rng, 3, 2), b = random_fraction(rng, 3, 2);
        for (int k = 0; k < 3; ++k) CHECK(((a * b).diff(k) - a * b.diff(k) - b * a.diff(k)).is_zero());
    }
}

TEST_CASE("canonical forms do not depend on construction order") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar a = random_fraction(rng, 2, 2), b = random_fraction(rng, 2, 2), c = random_fraction(rng, 2, 2);
        Scalar one = (a * b + c) / b;
        Scalar two = c / b + a;
        CHECK(one == two);
        CHECK(one.num() == two.num());
        CHECK(one.den() == two.den());
    }
}

TEST_CASE("print and parse round trip") {
    Rng rng(9);
    std::vector<std::string> v{"x", "y", "z"};
    for (int trial = 0; trial < 30; ++trial) {
        Scalar a = random_fraction(rng, 3, 3);
        CHECK(P(print_scalar(a, v), v) == a);
        Scalar c = a * P("(2 - 3/2*i)*x + i/5", v, true) + P("-i", v, true);
        CHECK(P(print_scalar(c, v), v, true) == c);
    }
    CHECK(print_scalar(P("x1^2*x2 - 3/2", {"x1", "x2"}), {"x1", "x2"}) == "(x1^2*x2 - 3/2)");
    CHECK(print_scalar(P("1/(x*y)"), XY) == "(1)/(x*y)");
}

TEST_CASE("Schwartz-Zippel witness for nonzero scalars") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Scalar a = random_fraction(rng, 3, 3);
        if (a.is_zero()) continue;
        CHECK(has_nonzero_sample(a, 8, 1000 + trial));
    }
    CHECK_FALSE(has_nonzero_sample(P("(x-y)*(x+y) - x^2 + y^2"), 8, 1));
}

namespace {

FracMatrix M(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& vars = XY) {
    FracMatrix m(rows.size(), rows[0].size(), static_cast<int>(vars.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[0].size(); ++j) m(i, j) = P(rows[i][j], vars);
    return m;
}

}  // namespace

TEST_CASE("kernel_basis examples") {
    auto k1 = kernel_basis(M({{"x", "1"}, {"x^2", "x"}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0] == P("1"));
    CHECK(k1[0][1] == P("-x"));
    CHECK(kernel_basis(M({{"1", "0"}, {"0", "1"}})).empty());
    auto k3 = kernel_basis(M({{"0", "0"}, {"0", "0"}}));
    REQUIRE(k3.size() == 2);
    CHECK(k3[0][0].is_one());
    CHECK(k3[0][1].is_zero());
    CHECK(k3[1][0].is_zero());
    CHECK(k3[1][1].is_one());
}

TEST_CASE("solve_linear examples") {
    auto s1 = solve_linear(M({{"1", "0"}, {"0", "x"}}), {P("1"), P("x^2")});
    REQUIRE(s1);
    CHECK((*s1)[0] == P("1"));
    CHECK((*s1)[1] == P("x"));
    CHECK_FALSE(solve_linear(M({{"1"}, {"1"}}), {P("0"), P("1")}));
    auto s3 = solve_linear(M({{"0", "0"}}), {P("0")});
    REQUIRE(s3);
    CHECK(s3->at(0).is_zero());
    CHECK(s3->at(1).is_zero());
}

TEST_CASE("kernel basis annihilates and completes the rank") {
    Rng rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2;
        std::size_t rows = 3, cols = 4;
        // Rank-deficient by construction: last row is a combination of the first two.
        FracMatrix m(rows, cols, n);
        for (std::size_t j = 0; j < cols; ++j) {
            m(0, j) = random_fraction(rng, n, 2);
            m(1, j) = random_poly_scalar(rng, n, 2);
        }
        Scalar f = random_poly_scalar(rng, n, 1), g = random_fraction(rng, n, 1);
        for (std::size_t j = 0; j < cols; ++j) m(2, j) = f * m(0, j) + g * m(1, j);
        auto basis = kernel_basis(m);
        CHECK(generic_rank(m) + basis.size() == cols);
        for (const auto& v : basis) {
            CHECK(v.size() == cols);
            for (std::size_t i = 0; i < rows; ++i) {
                Scalar s(n);
                for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * v[j];
                CHECK(s.is_zero());
            }
            for (const auto& e : v) CHECK(e.is_polynomial());
        }
        ScalarVec rhs(rows, Scalar(n));
        ScalarVec x0{random_poly_scalar(rng, n, 1), Scalar(n), random_fraction(rng, n, 1), Scalar(n)};
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) rhs[i] += m(i, j) * x0[j];
        auto x = solve_linear(m, rhs);
        REQUIRE(x);
        for (std::size_t i = 0; i < rows; ++i) {
            Scalar s(n);
            for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * (*x)[j];
            CHECK((s - rhs[i]).is_zero());
        }
    }
}

TEST_CASE("sample ranks retry around vanishing denominators") {
    FracMatrix m = M({{"1/(x-1)", "0"}, {"0", "y"}});
    SampledRank r = sample_ranks(m, 3);
    CHECK(r.all_evaluated);
    CHECK(r.ranks.size() == 3);
    CHECK(r.min_rank() == 2);
    CHECK(sample_point(2, 0, 0)[1] == Coeff(2));
    CHECK(sample_point(2, 0, 1)[0] == Coeff(8));
}
