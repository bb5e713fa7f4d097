#include "doctest.h"

#include "dnk/dirac/transforms.hpp"
#include "dnk/holomorphic/holomorphic.hpp"
#include "dnk/tensor/random_fields.hpp"

using namespace dnk;

namespace {

const Chart R2("R2", {"x", "y"});
const Chart C2("C2", {"x1", "y1", "x2", "y2"});

VectorField d(const Chart& c, int k) { return VectorField::coordinate(c, k); }
PForm dx(const Chart& c, int k) { return PForm::coordinate(c, k); }

const Coeff I = Coeff::imag_unit();

PForm two_form(const Chart& c, std::vector<std::tuple<int, int, int>> terms) {
    PForm w(c, 2);
    for (auto [i, j, s] : terms) w.set({i, j}, w.get({i, j}) + c.constant(Coeff(s)));
    return w;
}

// Random polynomial in z1 = x1 + i y1, z2 = x2 + i y2 with Q(i) coefficients.
Scalar random_holomorphic(Rng& rng, unsigned max_degree) {
    Scalar z1 = C2.var(0) + C2.var(1).scaled(I);
    Scalar z2 = C2.var(2) + C2.var(3).scaled(I);
    std::uniform_int_distribution<int> coef(-3, 3);
    Scalar f = C2.zero();
    for (unsigned a = 0; a <= max_degree; ++a)
        for (unsigned b = 0; a + b <= max_degree; ++b) {
            Scalar m = C2.constant(Coeff(Rational(coef(rng)), Rational(coef(rng))));
            for (unsigned k = 0; k < a; ++k) m *= z1;
            for (unsigned k = 0; k < b; ++k) m *= z2;
            f += m;
        }
    if (f.is_zero()) f = z1;
    return f;
}

// Real part of f dz1 ^ dz2 on bivectors, scaled by 4: u A + v B.
Bivector pn_bivector(const Scalar& f) {
    Scalar u = f.real_part(), v = f.imag_part();
    Bivector p(C2);
    p.set(0, 2, u);
    p.set(1, 3, -u);
    p.set(0, 3, v);
    p.set(1, 2, v);
    return p;
}

GSection random_section(Rng& rng, const Chart& c) {
    return GSection(random_vector_field(rng, c, 2), random_form(rng, c, 1, 2));
}

ComplexGSection times_i(const ComplexGSection& s) { return {-s.im, s.re}; }

}  // namespace

TEST_CASE("complex structure validation") {
    ComplexStructure j = ComplexStructure::standard(R2);
    CHECK(j.tensor().apply(d(R2, 0)) == d(R2, 1));
    CHECK(j.tensor().apply(d(R2, 1)) == -d(R2, 0));
    CHECK_THROWS_AS(ComplexStructure::standard(Chart("R3", {"x", "y", "z"})), InvalidComplexStructure);
    CHECK_THROWS_AS(ComplexStructure(OneOneTensor::identity(R2)), InvalidComplexStructure);

    // Every r with r^2 = -id is integrable in dimension 2; conjugate the standard J on C2
    // by the frame d_x1, d_y1, d_x2, d_y2 + y1 d_x1, which has [e2, e4] = e1.
    OneOneTensor p = OneOneTensor::identity(C2), pinv = OneOneTensor::identity(C2);
    p.at(0, 3) = C2.var(1);
    pinv.at(0, 3) = -C2.var(1);
    OneOneTensor r = p.compose(ComplexStructure::standard(C2).tensor()).compose(pinv);
    CHECK(r.compose(r) == -OneOneTensor::identity(C2));
    CHECK_THROWS_AS(ComplexStructure{r}, InvalidComplexStructure);
}

TEST_CASE("phi map values") {
    ComplexStructure j = ComplexStructure::standard(R2);
    Chart cc = complexified(R2);
    Scalar half = cc.constant(Coeff(Rational(1, 2)));
    Scalar half_i = cc.constant(Coeff(Rational(0), Rational(-1, 2)));

    GSection v = phi_map(GSection::vector(d(R2, 0)), j).value();
    CHECK(v.vec[0] == half);
    CHECK(v.vec[1] == half_i);
    CHECK(v.form.is_zero());

    GSection a = phi_map(GSection::covector(dx(R2, 0)), j).value();
    CHECK(a.vec.is_zero());
    CHECK(a.form[0] == cc.one());
    CHECK(a.form[1] == cc.constant(I));
    CHECK(a.form.chart().mode() == Mode::complex);
}

TEST_CASE("phi map is complex linear and respects the pairing") {
    Rng rng(41);
    for (const Chart* c : {&R2, &C2}) {
        ComplexStructure j = ComplexStructure::standard(*c);
        const OneOneTensor& r = j.tensor();
        for (int trial = 0; trial < 6; ++trial) {
            GSection s1 = random_section(rng, *c), s2 = random_section(rng, *c);
            CHECK(phi_map(apply_rr(r, s1), j) == times_i(phi_map(s1, j)));

            Scalar expected_im = -(pair(s1.form, r.apply(s2.vec)) + pair(s2.form, r.apply(s1.vec)));
            Scalar z = complex_pairing(phi_map(s1, j), phi_map(s2, j));
            CHECK(z.real_part() == pairing(s1, s2));
            CHECK(z.imag_part() == expected_im);
        }
    }
}

TEST_CASE("holomorphic Dirac structures") {
    ComplexStructure j2 = ComplexStructure::standard(R2);
    CHECK(check_holomorphic_dirac(make_split({d(R2, 0), d(R2, 1)}), j2).passed());

    PForm area(R2, 2);
    area.set({0, 1}, R2.one());
    CheckResult bad = check_holomorphic_dirac(make_graph_presymplectic(area), j2);
    CHECK(bad.failed());
    CHECK(bad.note == "real part is not compatible with J");

    // graph of a non-Poisson bivector fails on the Dirac side.
    Chart r4("R4", {"x1", "y1", "x2", "y2"});
    Bivector np(r4);
    np.set(0, 1, r4.var(2));
    np.set(2, 3, r4.one());
    CheckResult nd = check_holomorphic_dirac(make_graph_poisson(np), ComplexStructure::standard(r4));
    CHECK(nd.failed());
    CHECK(nd.note == "real part is not a Dirac structure");

    Rng rng(7);
    ComplexStructure j = ComplexStructure::standard(C2);
    for (int trial = 0; trial < 4; ++trial) {
        Bivector pi = pn_bivector(random_holomorphic(rng, 2));
        GFrame l = make_graph_poisson(pi);
        CheckResult res = check_holomorphic_dirac(l, j);
        CHECK_MESSAGE(res.passed(), res.note);
        CHECK(dirac_nijenhuis_report(l, j.tensor()).nijenhuis.passed());

        // Imaginary part and the hierarchy square, on linear coefficients to keep the fourth power cheap.
        pi = pn_bivector(random_holomorphic(rng, 1));
        l = make_graph_poisson(pi);
        Bivector pi_j = deformed_bivector(pi, j.tensor());
        CHECK(same_span(hierarchy(l, j.tensor(), 1, HierarchySide::zero_n), make_graph_poisson(-pi_j)));
        GFrame l10 = hierarchy(l, j.tensor(), 1, HierarchySide::n0);
        GFrame minus = hierarchy(l10, j.tensor(), 1, HierarchySide::n0);
        CHECK(same_span(minus, make_graph_poisson(-pi)));
        CHECK(same_span(l10, make_graph_poisson(pi_j)));
        GFrame back = hierarchy(hierarchy(minus, j.tensor(), 1, HierarchySide::n0), j.tensor(), 1, HierarchySide::n0);
        CHECK(same_span(back, l));
    }
}

TEST_CASE("holomorphic forms") {
    ComplexStructure j = ComplexStructure::standard(C2);
    // Re and Im of dz1 ^ dz2.
    PForm re = two_form(C2, {{0, 2, 1}, {1, 3, -1}});
    PForm im = two_form(C2, {{0, 3, 1}, {1, 2, 1}});
    HoloForm h = holo_form_from_real(re, j);
    CHECK(h.im == im);
    CHECK(to_form(form_r(re, j.tensor())) == -im);
    CHECK(check_holo_form(h, j).passed());
    CHECK(check_holo_form({re, -im}, j).failed());

    // Closed holomorphic: presymplectic-Nijenhuis on the real part.
    CHECK(ext_d(h.re).is_zero());
    CHECK(ext_d(h.im).is_zero());
    CHECK(dirac_nijenhuis_report(make_graph_presymplectic(re), j.tensor()).overall() == Verdict::pass);

    // A coefficient that is not holomorphic breaks compatibility.
    PForm bent = C2.var(1) * re;
    CHECK(check_holo_form(holo_form_from_real(bent, j), j).failed());

    ComplexStructure j2 = ComplexStructure::standard(R2);
    PForm area(R2, 2);
    area.set({0, 1}, R2.var(0) + R2.one());
    CHECK_THROWS_AS(holo_form_from_real(area, j2), NotSkew);
    CHECK(check_holo_form({area, R2.zero() * area}, j2).failed());
}

TEST_CASE("Courant brackets of holomorphic sections") {
    ComplexStructure j2 = ComplexStructure::standard(R2);
    GSection zero(R2);
    CHECK(phi_courant_check(zero, zero, j2).passed());
    GSection c1(d(R2, 0) - R2.constant(Coeff(3)) * d(R2, 1), R2.constant(Coeff(2)) * dx(R2, 1));
    GSection c2(d(R2, 1), dx(R2, 0));
    CHECK(phi_courant_check(c1, c2, j2).passed());

    GSection euler = GSection::vector(R2.var(0) * d(R2, 0) + R2.var(1) * d(R2, 1));
    CHECK(is_holomorphic_section(euler, j2));
    CHECK(phi_courant_check(euler, c1, j2).passed());
    CHECK(phi_courant_check(euler, euler, j2).passed());

    GSection bad = GSection::vector(R2.var(0) * d(R2, 0));
    CHECK_FALSE(is_holomorphic_section(bad, j2));
    CHECK_THROWS_AS(phi_courant_check(bad, c1, j2), PreconditionError);

    // Real parts of holomorphic vector fields g(z) d_z on C.
    Rng rng(5);
    Chart c1d = R2;
    Scalar z = c1d.var(0) + c1d.var(1).scaled(I);
    int count = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto holo_field = [&]() {
            std::uniform_int_distribution<int> coef(-3, 3);
            Scalar g = c1d.zero(), zk = c1d.one();
            for (int k = 0; k < 3; ++k, zk *= z) g += zk.scaled(Coeff(Rational(coef(rng)), Rational(coef(rng))));
            return GSection::vector(g.real_part() * d(R2, 0) + g.imag_part() * d(R2, 1));
        };
        GSection a = holo_field(), b = holo_field();
        REQUIRE(is_holomorphic_section(a, j2));
        CheckResult res = phi_courant_check(a, b, j2);
        CHECK(res.passed());
        count += res.passed();
    }
    CHECK(count == 10);
}
