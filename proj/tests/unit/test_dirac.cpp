#include "doctest.h"

#include "dnk/dirac/transforms.hpp"
#include "dnk/tensor/random_fields.hpp"

using namespace dnk;

namespace {

const Chart R2("R2", {"x", "y"});
const Chart R3("R3", {"x", "y", "z"});
const Chart P2("P2", {"x1", "x2"});

VectorField d(const Chart& c, int k) { return VectorField::coordinate(c, k); }
PForm dx(const Chart& c, int k) { return PForm::coordinate(c, k); }

Bivector bivector(const Chart& c, int i, int j, const std::string& coeff) {
    Bivector p(c);
    p.set(i, j, c.parse(coeff));
    return p;
}

PForm two_form(const Chart& c, int i, int j, const std::string& coeff) {
    PForm w(c, 2);
    w.set({i, j}, c.parse(coeff));
    return w;
}

OneOneTensor diag(const Chart& c, std::vector<std::string> entries) {
    std::vector<Scalar> s;
    for (auto& e : entries) s.push_back(c.parse(e));
    return OneOneTensor::diagonal(c, s);
}

GFrame graph_of(const Chart& c, const std::vector<GSection>& s) { return GFrame(c, s); }

// Rational function of a single variable with a nowhere-vanishing denominator.
Scalar random_profile(Rng& rng, const Chart& c, int k) {
    Scalar num = random_univariate(rng, c.dim(), k, 2);
    if (num.is_zero()) num = c.one();
    return num / (c.one() + c.var(k) * c.var(k));
}

// The worked two-dimensional example: L = F + Ann(F), F = span(d_x2).
GFrame split_x2() { return make_split({d(P2, 1)}); }

bool report_passes(const GFrame& l, const OneOneTensor& r) {
    return dirac_nijenhuis_report(l, r).overall() == Verdict::pass;
}

// pi# r* - r pi# as a matrix, through the coordinate coframe.
bool intertwines(const Bivector& pi, const OneOneTensor& r) {
    for (int i = 0; i < pi.dim(); ++i)
        if (!(pi.sharp(r.dual_apply(dx(pi.chart(), i))) == r.apply(pi.sharp(dx(pi.chart(), i))))) return false;
    return true;
}

bool R_vanishes(const Bivector& pi, const OneOneTensor& r) {
    for (int k = 0; k < pi.dim(); ++k)
        for (int i = 0; i < pi.dim(); ++i)
            if (!concomitant_R(pi, r, d(pi.chart(), k), dx(pi.chart(), i)).is_zero()) return false;
    return true;
}

// The gauge fixture on R^3: pi = dx ^ dy, B = d(yz dx); compatible with nonzero torsion.
GaugeData gauge_fixture() {
    PForm theta = PForm::one_form(R3, {R3.parse("y*z"), R3.zero(), R3.zero()});
    return gauge_transform(bivector(R3, 0, 1, "1"), ext_d(theta));
}

}  // namespace

TEST_CASE("frame constructors") {
    GFrame g = make_graph_poisson(bivector(R2, 0, 1, "1"));
    CHECK(g[0] == GSection(d(R2, 1), dx(R2, 0)));
    CHECK(g[1] == GSection(-d(R2, 0), dx(R2, 1)));
    GFrame w = make_graph_presymplectic(two_form(R2, 0, 1, "1"));
    CHECK(w[0] == GSection(d(R2, 0), dx(R2, 1)));
    CHECK(w[1] == GSection(d(R2, 1), -dx(R2, 0)));
    GFrame s = split_x2();
    CHECK(s[0] == GSection::vector(d(P2, 1)));
    CHECK(s[1] == GSection::covector(dx(P2, 0)));
    CHECK(s.kind == FrameKind::split);
    CHECK_FALSE(s.rank_inconclusive);
    // x - 1 vanishes at the first sample point.
    CHECK(make_split({d(R2, 0), R2.parse("x - 1") * d(R2, 1)}).rank_inconclusive);
}

TEST_CASE("lagrangian check") {
    Rng rng(41);
    for (int t = 0; t < 3; ++t) CHECK(check_lagrangian(make_graph_poisson(random_bivector(rng, R3, 2))).passed());
    // Graph of the symmetric map dx -> d_x, dy -> d_y.
    GFrame sym = graph_of(R2, {GSection(d(R2, 0), dx(R2, 0)), GSection(d(R2, 1), dx(R2, 1))});
    CheckResult r = check_lagrangian(sym);
    CHECK(r.failed());
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses[0].text == "2");
    CHECK(check_lagrangian(graph_of(R2, {GSection::vector(d(R2, 0)), GSection::vector(d(R2, 1))})).passed());
    // Rank defect.
    CHECK(check_lagrangian(graph_of(R2, {GSection::vector(d(R2, 0)), GSection::vector(d(R2, 0))})).failed());
}

TEST_CASE("involutivity check") {
    CHECK(check_involutive(make_graph_poisson(bivector(R2, 0, 1, "1"))).passed());
    PForm w = two_form(R3, 1, 2, "x") + two_form(R3, 0, 1, "1");
    CHECK_FALSE(ext_d(w).is_zero());
    CHECK(check_involutive(make_graph_presymplectic(w)).failed());
    CHECK(check_involutive(split_x2()).passed());
    CHECK_THROWS_AS(check_involutive(graph_of(R2, {GSection(d(R2, 0), dx(R2, 0)), GSection(d(R2, 1), dx(R2, 1))})),
                    PreconditionError);

    Rng rng(42);
    for (int t = 0; t < 4; ++t) {
        // Oracles: d w = 0 and [pi, pi] = 0.
        PForm rw = random_form(rng, R3, 2, 1);
        CHECK(check_involutive(make_graph_presymplectic(rw)).passed() == ext_d(rw).is_zero());
        Bivector p = random_bivector(rng, R3, 1);
        CHECK(check_involutive(make_graph_poisson(p)).passed() == schouten_bivector(p, p).is_zero());
    }
    CHECK(check_involutive(make_graph_presymplectic(ext_d(random_form(rng, R3, 1, 2)))).passed());
}

TEST_CASE("invariance and D-stability") {
    Rng rng(43);
    for (int t = 0; t < 3; ++t) {
        Scalar a = random_profile(rng, P2, 0);
        Scalar b = random_profile(rng, P2, 1);
        OneOneTensor r = OneOneTensor::diagonal(P2, {a, b});
        CHECK(check_invariance(split_x2(), r).passed());
        CHECK(report_passes(split_x2(), r));
        CHECK(check_invariance(make_graph_poisson(random_bivector(rng, R3, 1)), OneOneTensor::identity(R3)).passed());
    }
    Bivector pi = bivector(R2, 0, 1, "1");
    OneOneTensor bad = diag(R2, {"1", "x"});
    CHECK_FALSE(intertwines(pi, bad));
    CHECK(check_invariance(make_graph_poisson(pi), bad).failed());
    CHECK_THROWS_AS(check_D_stability(make_graph_poisson(pi), bad), PreconditionError);

    OneOneTensor rx = OneOneTensor::scalar_multiple(R2, R2.parse("x"));
    CHECK(R_vanishes(pi, rx));
    CHECK(check_D_stability(make_graph_poisson(pi), rx).passed());
    CHECK(report_passes(make_graph_poisson(pi), rx));
}

TEST_CASE("graph compatibility agrees with the bivector and form conditions") {
    Rng rng(44);
    int seen_pass = 0, seen_fail = 0;
    for (int t = 0; t < 8; ++t) {
        Bivector pi = random_bivector(rng, R2, 1);
        OneOneTensor r = t % 2 ? OneOneTensor::scalar_multiple(R2, random_function(rng, R2, 1)) : random_oneone(rng, R2, 1);
        if (t == 2) r = OneOneTensor::scalar_multiple(R2, R2.parse("3"));
        GFrame l = make_graph_poisson(pi);
        const bool oracle = intertwines(pi, r) && R_vanishes(pi, r);
        bool checks = check_invariance(l, r).passed();
        if (checks) checks = check_D_stability(l, r).passed();
        CHECK(checks == oracle);
        (oracle ? seen_pass : seen_fail)++;

        // Presymplectic: w-flat r = r* w-flat and S-tilde = 0.
        PForm w = random_form(rng, R2, 2, 1);
        GFrame lw = make_graph_presymplectic(w);
        bool flat_ok = true, s_ok = true;
        for (int j = 0; j < 2; ++j) {
            if (!(flat(w, r.apply(d(R2, j))) == r.dual_apply(flat(w, d(R2, j))))) flat_ok = false;
            for (int k = 0; k < 2; ++k)
                if (flat_ok && !concomitant_S_tilde(w, r, d(R2, j), d(R2, k)).is_zero()) s_ok = false;
        }
        bool wchecks = check_invariance(lw, r).passed();
        if (wchecks) wchecks = check_D_stability(lw, r).passed();
        CHECK(wchecks == (flat_ok && s_ok));
    }
    CHECK(seen_pass > 0);
    CHECK(seen_fail > 0);
}

TEST_CASE("concomitant relations") {
    Rng rng(45);
    for (const Chart* c : {&R2, &R3}) {
        for (int t = 0; t < 3; ++t) {
            Bivector pi = random_bivector(rng, *c, 1);
            auto x = random_vector_field(rng, *c, 1);
            auto a = random_form(rng, *c, 1, 1), b = random_form(rng, *c, 1, 1);
            OneOneTensor any = random_oneone(rng, *c, 1);
            CHECK(concomitant_R(pi, any, x, a) == pi.sharp(D_r_star(x, a, any)) - D_r(x, pi.sharp(a), any));

            // r o pi# skew: scalar multiples and gauge-type r.
            OneOneTensor r1 = OneOneTensor::scalar_multiple(*c, random_function(rng, *c, 1));
            OneOneTensor r2 = gauge_transform(pi, random_form(rng, *c, 2, 1)).r;
            for (const OneOneTensor* r : {&r1, &r2}) {
                CHECK(pair(b, concomitant_R(pi, *r, x, a)) == pair(concomitant_C(pi, *r, a, b), x));
            }

            // Forms: w-flat r = r* w-flat holds for r = f id.
            PForm w = random_form(rng, *c, 2, 1);
            auto y = random_vector_field(rng, *c, 1);
            PForm st = concomitant_S_tilde(w, r1, x, y);
            PForm corr(*c, 1);
            if (c->dim() > 2) corr = interior(r1.apply(y), interior(x, ext_d(w)));
            CHECK(st == concomitant_S(w, r1, x, y) + corr);
            // S-tilde(X, Y) = (d(w_r) - (dw)_r)(X, Y, .).
            PForm via_forms(*c, 1);
            if (c->dim() > 2) {
                PForm wr = to_form(form_r(w, r1));
                via_forms = interior(y, interior(x, ext_d(wr))) - interior(y, interior(r1.apply(x), ext_d(w)));
            }
            CHECK(st == via_forms);
        }
    }
    CHECK_THROWS_AS(concomitant_C(bivector(R2, 0, 1, "1"), diag(R2, {"1", "x"}), dx(R2, 0), dx(R2, 1)),
                    PreconditionError);
}

TEST_CASE("concomitant of the frame on graphs and splits") {
    Rng rng(46);
    Bivector pi = random_bivector(rng, R2, 1);
    OneOneTensor r = OneOneTensor::scalar_multiple(R2, random_function(rng, R2, 1));
    GFrame l = make_graph_poisson(pi);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            PForm cl = concomitant_CL(l[i], l[j], r);
            for (int k = 0; k < 2; ++k) CHECK(cl[k] == -pair(dx(R2, j), concomitant_R(pi, r, d(R2, k), dx(R2, i))));
        }
    // Skew once (r, r*) preserves the span.
    OneOneTensor q = OneOneTensor::diagonal(P2, {random_profile(rng, P2, 0), random_profile(rng, P2, 1)});
    GFrame s = split_x2();
    GSection s1 = P2.parse("x1*x2") * s[0] + s[1], s2 = s[0] - P2.parse("x2") * s[1];
    CHECK(concomitant_CL(s1, s2, q) == -concomitant_CL(s2, s1, q));
}

TEST_CASE("form compatibility") {
    OneOneTensor j = OneOneTensor(R2);
    j.at(1, 0) = R2.one();
    j.at(0, 1) = -R2.one();
    CheckResult rot = check_form_compat(two_form(R2, 0, 1, "1"), j);
    CHECK(rot.failed());
    REQUIRE(!rot.witnesses.empty());
    CHECK(eval_form(two_form(R2, 0, 1, "1"), {j.apply(d(R2, 0)), d(R2, 0)}) == -R2.one());

    const Chart C2("C2", {"x1", "y1", "x2", "y2"});
    OneOneTensor jc(C2);
    for (int k = 0; k < 2; ++k) {
        jc.at(2 * k + 1, 2 * k) = C2.one();
        jc.at(2 * k, 2 * k + 1) = -C2.one();
    }
    PForm w = two_form(C2, 0, 2, "1") - two_form(C2, 1, 3, "1");
    CHECK(check_form_compat(w, jc).passed());
    PForm wj = to_form(form_r(w, jc));
    CHECK(wj == -(two_form(C2, 0, 3, "1") + two_form(C2, 1, 2, "1")));

    Rng rng(47);
    for (int t = 0; t < 3; ++t) {
        OneOneTensor c = OneOneTensor::scalar_multiple(R3, R3.constant(Coeff(t + 2)));
        CHECK(check_form_compat(random_form(rng, R3, 2, 2), c).passed());
        CHECK(check_form_compat(random_form(rng, R3, 1, 2), c).passed());
    }
    // Non-constant scalar multiple of a non-closed form.
    OneOneTensor fx = OneOneTensor::scalar_multiple(R3, R3.parse("x"));
    CHECK(check_form_compat(two_form(R3, 1, 2, "1"), fx).failed());
}

TEST_CASE("null distribution") {
    CHECK(null_distribution(make_graph_poisson(bivector(R2, 0, 1, "x^2+1"))).basis.empty());
    auto k = null_distribution(split_x2());
    REQUIRE(k.basis.size() == 1);
    CHECK(k.basis[0] == d(P2, 1));
    auto k3 = null_distribution(make_graph_presymplectic(two_form(R3, 0, 1, "1")));
    REQUIRE(k3.basis.size() == 1);
    CHECK(k3.basis[0] == d(R3, 2));
    CHECK_FALSE(k3.rank_inconclusive);
}

TEST_CASE("hierarchies") {
    Bivector pi = bivector(R2, 0, 1, "1");
    OneOneTensor r = OneOneTensor::scalar_multiple(R2, R2.parse("x"));
    GFrame l = make_graph_poisson(pi);
    GFrame l1 = hierarchy(l, r, 1, HierarchySide::n0);
    CHECK(same_span(l1, make_graph_poisson(bivector(R2, 0, 1, "x"))));
    CHECK(l1.kind == FrameKind::graph_poisson);
    CHECK(same_span(hierarchy(l, OneOneTensor::identity(R2), 3, HierarchySide::zero_n), l));
    CHECK(same_span(hierarchy(l, OneOneTensor::identity(R2), 2, HierarchySide::n0), l));

    // (0, n) on a degenerate pi: ker pi# = span(dz) must meet ker (r*)^n trivially.
    GFrame flat3 = make_graph_poisson(bivector(R3, 0, 1, "1"));
    CHECK_THROWS_AS(hierarchy(flat3, diag(R3, {"1", "1", "0"}), 1, HierarchySide::zero_n), HierarchyError);
    CHECK_NOTHROW(hierarchy(flat3, diag(R3, {"1", "1", "z"}), 2, HierarchySide::zero_n));
    // A graph of pi is never collapsed by (r^n, id); the tangent bundle is.
    CHECK_NOTHROW(hierarchy(flat3, diag(R3, {"0", "1", "1"}), 1, HierarchySide::n0));
    CHECK_THROWS_AS(hierarchy(make_graph_presymplectic(PForm(R3, 2)), diag(R3, {"0", "1", "1"}), 1, HierarchySide::n0),
                    HierarchyError);

    // Graph recursions for compatible pairs.
    Rng rng(48);
    for (int t = 0; t < 3; ++t) {
        Bivector p = random_bivector(rng, R2, 1);
        OneOneTensor q = OneOneTensor::scalar_multiple(R2, random_function(rng, R2, 1) + R2.parse("x^2+1"));
        for (unsigned n = 1; n <= 2; ++n)
            CHECK(same_span(hierarchy(make_graph_poisson(p), q, n, HierarchySide::n0),
                            make_graph_poisson(deformed_bivector(p, q.power(n)))));
        PForm w = random_form(rng, R3, 2, 1);
        OneOneTensor q3 = OneOneTensor::scalar_multiple(R3, random_function(rng, R3, 1) + R3.parse("y^2+1"));
        PForm wn = to_form(form_r(w, q3.power(2)));
        GFrame lw = make_graph_presymplectic(w);
        CHECK(same_span(hierarchy(lw, q3, 2, HierarchySide::zero_n), make_graph_presymplectic(wn)));

        // Null distributions agree along (n,0); vector projections agree along (0,n).
        auto k0 = null_distribution(lw).basis;
        auto k1 = null_distribution(hierarchy(lw, q3, 1, HierarchySide::n0)).basis;
        REQUIRE(k0.size() == k1.size());
        std::vector<GSection> both;
        for (auto& v : k0) both.push_back(GSection::vector(v));
        for (auto& v : k1) both.push_back(GSection::vector(v));
        CHECK(generic_rank(section_matrix(both)) == k0.size());
        GFrame h = hierarchy(make_graph_poisson(p), q, 2, HierarchySide::zero_n);
        auto v0 = vector_matrix(make_graph_poisson(p).sections), v1 = vector_matrix(h.sections);
        FracMatrix vv(2, 4, 2);
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a) {
                vv(i, a) = v0(i, a);
                vv(i, 2 + a) = v1(i, a);
            }
        CHECK(generic_rank(vv) == generic_rank(v0));
        CHECK(generic_rank(v1) == generic_rank(v0));
    }
}

TEST_CASE("invertible r and the (0,1) hierarchy") {
    Rng rng(49);
    Scalar a = random_profile(rng, P2, 0) * random_profile(rng, P2, 0) + P2.one();
    Scalar b = P2.var(1) * P2.var(1) + P2.parse("2");
    OneOneTensor r = OneOneTensor::diagonal(P2, {a, b});
    OneOneTensor rinv = OneOneTensor::diagonal(P2, {P2.one() / a, P2.one() / b});
    CHECK(report_passes(split_x2(), r));
    CHECK(report_passes(split_x2(), rinv));
    for (unsigned n = 1; n <= 2; ++n)
        CHECK(same_span(hierarchy(split_x2(), r, n, HierarchySide::zero_n),
                        hierarchy(split_x2(), rinv, n, HierarchySide::n0)));

    // Compatible but not Nijenhuis: the (0,1) member is still involutive.
    GaugeData g = gauge_fixture();
    CHECK(g.closed);
    CHECK(check_nijenhuis(g.r).failed());
    DNReport rep = dirac_nijenhuis_report(make_graph_poisson(bivector(R3, 0, 1, "1")), g.r);
    CHECK(rep.compatible() == Verdict::pass);
    GFrame l01 = hierarchy(make_graph_poisson(bivector(R3, 0, 1, "1")), g.r, 1, HierarchySide::zero_n);
    CHECK(check_lagrangian(l01).passed());
    CHECK(check_involutive(l01).passed());
    CHECK(same_span(l01, g.frame));
}

TEST_CASE("cotangential product and concurrence") {
    GFrame l = make_graph_poisson(bivector(R2, 0, 1, "1"));
    GFrame prod = cotangential_product(l, l);
    CHECK(same_span(prod, make_graph_poisson(bivector(R2, 0, 1, "2"))));
    CHECK(check_concur(l, l).passed());
    CHECK_THROWS_AS(cotangential_product(l, make_graph_presymplectic(PForm(R2, 2))), PreconditionError);

    // Poisson pairs on R^3: concurrence iff the sum is Poisson.
    std::vector<Bivector> ps = {bivector(R3, 0, 1, "1"), bivector(R3, 1, 2, "x"), bivector(R3, 0, 2, "y"),
                                bivector(R3, 1, 2, "z"), bivector(R3, 0, 2, "x")};
    int agree = 0, fails = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) {
            if (!schouten_bivector(ps[i], ps[i]).is_zero() || !schouten_bivector(ps[j], ps[j]).is_zero()) continue;
            Bivector s = ps[i] + ps[j];
            const bool oracle = schouten_bivector(s, s).is_zero();
            GFrame a = make_graph_poisson(ps[i]), b = make_graph_poisson(ps[j]);
            CHECK(check_concur(a, b).passed() == oracle);
            ++agree;
            if (!oracle) ++fails;
        }
    CHECK(agree > 5);
    CHECK(fails > 0);

    // Hierarchy members of (dx ^ dy, x id) concur.
    OneOneTensor r = OneOneTensor::scalar_multiple(R2, R2.parse("x"));
    CHECK(check_concur(hierarchy(l, r, 1, HierarchySide::n0), hierarchy(l, r, 2, HierarchySide::n0)).passed());
    // Split frames concur with themselves: the product doubles the vector parts.
    CHECK(check_concur(split_x2(), split_x2()).passed());
}

TEST_CASE("traces and their involution") {
    OneOneTensor r = OneOneTensor::scalar_multiple(R2, R2.parse("x"));
    auto phi = traces(r, 3);
    CHECK(phi[0] == R2.parse("2*x"));
    CHECK(phi[1] == R2.parse("x^2"));
    CHECK(phi[2] == R2.parse("2/3*x^3"));
    GFrame l = make_graph_poisson(bivector(R2, 0, 1, "1"));
    auto ham = hamiltonian_field(l, phi[0]);
    REQUIRE(ham);
    CHECK(*ham == R2.parse("2") * d(R2, 1));
    for (int j = 0; j + 1 < 3; ++j)
        CHECK(r.dual_apply(ext_d(PForm::function(R2, phi[j]))) == ext_d(PForm::function(R2, phi[j + 1])));
    CHECK(check_traces_involution(l, r, 4).passed());

    Rng rng(50);
    Scalar a = random_profile(rng, P2, 0);
    Scalar b = random_profile(rng, P2, 1);
    CHECK_THROWS_WITH_AS(check_traces_involution(split_x2(), OneOneTensor::diagonal(P2, {a, b}), 2),
                         "trace not admissible", NotAdmissible);
    CHECK(check_traces_involution(split_x2(), OneOneTensor::diagonal(P2, {a, P2.parse("5/2")}), 3).passed());
}

TEST_CASE("gauge transformations") {
    Rng rng(51);
    GaugeData zero = gauge_transform(bivector(R2, 0, 1, "x"), PForm(R2, 2));
    CHECK(zero.r == OneOneTensor::identity(R2));
    CHECK(same_span(zero.frame, make_graph_poisson(bivector(R2, 0, 1, "x"))));

    GaugeData cancel = gauge_transform(bivector(R2, 0, 1, "1"), two_form(R2, 0, 1, "1"));
    CHECK(cancel.r.is_zero());
    CHECK(report_passes(make_graph_poisson(bivector(R2, 0, 1, "1")), cancel.r));
    CHECK(check_involutive(cancel.frame).passed());

    for (int t = 0; t < 4; ++t) {
        Bivector pi = random_bivector(rng, R2, 2);
        PForm bform = random_form(rng, R2, 2, 2);
        GaugeData g = gauge_transform(pi, bform);
        GFrame l = make_graph_poisson(pi);
        CHECK(intertwines(pi, g.r));
        CHECK(dirac_nijenhuis_report(l, g.r).compatible() == Verdict::pass);
        CHECK(same_span(g.frame, hierarchy(l, g.r, 1, HierarchySide::zero_n)));
        CHECK(check_lagrangian(g.frame).passed());
        CHECK(check_involutive(g.frame).passed());
    }

    // Non-closed B on R^3: the concomitant is pi#(dB(X, pi# a, .)).
    for (int t = 0; t < 3; ++t) {
        Bivector pi = t == 0 ? bivector(R3, 0, 1, "1") : random_bivector(rng, R3, 0);
        PForm bform = t == 0 ? two_form(R3, 1, 2, "x") : random_form(rng, R3, 2, 2);
        GaugeData g = gauge_transform(pi, bform);
        PForm db = ext_d(bform);
        GFrame l = make_graph_poisson(pi);
        REQUIRE(check_invariance(l, g.r).passed());
        bool any = false;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) {
                VectorField expect = pi.sharp(interior(pi.sharp(dx(R3, i)), interior(d(R3, k), db)));
                CHECK(concomitant_R(pi, g.r, d(R3, k), dx(R3, i)) == expect);
                if (!expect.is_zero()) any = true;
            }
        CheckResult st = check_D_stability(l, g.r);
        CHECK(st.failed() == any);
        if (t == 0) {
            // First witness: C_L(s1, s2)(d_z) = -<dy, R(d_z, dx)>.
            REQUIRE(!st.witnesses.empty());
            CHECK(st.witnesses[0].label == "C_L(s1,s2)(d_z)");
            VectorField expect = pi.sharp(interior(pi.sharp(dx(R3, 0)), interior(d(R3, 2), db)));
            CHECK(st.witnesses[0].value == -expect[1]);
        }
    }
}

TEST_CASE("quasi-Nijenhuis condition") {
    GaugeData g = gauge_fixture();
    GFrame l = make_graph_poisson(bivector(R3, 0, 1, "1"));
    PForm phi(R3, 3);
    phi.set({0, 1, 2}, R3.parse("z"));
    CHECK(quasi_nijenhuis_check(l, g.r, phi).passed());
    CHECK(quasi_nijenhuis_check(l, g.r, R3.parse("2") * phi).failed());
    CHECK(quasi_nijenhuis_check(l, g.r, PForm(R3, 3)).failed());
    // Graph form: N(X, Y) = pi#(phi(X, Y, .)).
    VectorValuedTwoForm n = nijenhuis_torsion(g.r);
    Bivector pi = bivector(R3, 0, 1, "1");
    for (int y = 0; y < 3; ++y)
        for (int z = y + 1; z < 3; ++z)
            CHECK(n.eval(d(R3, y), d(R3, z)) == pi.sharp(interior(d(R3, z), interior(d(R3, y), phi))));

    OneOneTensor rx = OneOneTensor::scalar_multiple(R2, R2.parse("x"));
    CHECK(quasi_nijenhuis_check(make_graph_poisson(bivector(R2, 0, 1, "1")), rx, PForm(R2, 3)).passed());

    const Chart R4("R4", {"x", "y", "z", "w"});
    PForm open(R4, 3);
    open.set({0, 1, 2}, R4.parse("w"));
    CHECK_THROWS_AS(quasi_nijenhuis_check(make_graph_poisson(Bivector(R4)), OneOneTensor::identity(R4), open),
                    PreconditionError);
}

TEST_CASE("backward and forward transfer") {
    GFrame l3 = make_graph_poisson(bivector(R3, 0, 1, "1"));
    Transfer back = backward_transfer(l3, {{2, Coeff(0)}});
    CHECK(back.frame.chart.variables() == std::vector<std::string>{"x", "y"});
    CHECK(same_span(back.frame, make_graph_poisson(bivector(back.frame.chart, 0, 1, "1"))));

    // Leaf through a point of a Poisson structure with a z-dependent coefficient, r restricted.
    GFrame lz = make_graph_poisson(bivector(R3, 0, 1, "z^2+1"));
    OneOneTensor r3 = diag(R3, {"x", "x", "z"});
    Transfer leaf = backward_transfer(lz, {{2, Coeff(2)}}, &r3);
    REQUIRE(leaf.r);
    CHECK(same_span(leaf.frame, make_graph_poisson(bivector(leaf.frame.chart, 0, 1, "5"))));
    CHECK(*leaf.r == OneOneTensor::scalar_multiple(leaf.frame.chart, leaf.frame.chart.parse("x")));
    CHECK(report_passes(leaf.frame, *leaf.r));
    OneOneTensor skew = diag(R3, {"1", "1", "1"});
    skew.at(2, 0) = R3.parse("z");
    CHECK_THROWS_AS(backward_transfer(lz, {{2, Coeff(2)}}, &skew), TransferError);

    Transfer fwd = forward_transfer(split_x2(), {0});
    REQUIRE(fwd.frame.size() == 1);
    CHECK(fwd.frame[0].vec.is_zero());
    CHECK(fwd.frame[0].form[0].is_one());
    CHECK(same_span(fwd.frame, make_graph_poisson(Bivector(fwd.frame.chart))));

    // The 2-dimensional r-tilde = diag(a(x1), c(x1)) descends to a(x1).
    Rng rng(52);
    Scalar a = random_profile(rng, P2, 0), c = random_profile(rng, P2, 0);
    OneOneTensor rt = OneOneTensor::diagonal(P2, {a, c});
    Transfer qr = forward_transfer(split_x2(), {0}, &rt);
    REQUIRE(qr.r);
    CHECK(qr.r->at(0, 0) == a.reindex(1, {0, -1}));
    CHECK(qr.r->trace() == (rt.trace() - c).reindex(1, {0, -1}));

    // Projection along a direction that is not null.
    CHECK_THROWS_AS(forward_transfer(split_x2(), {1}), TransferError);
    // Frame depending on the dropped variable.
    CHECK_THROWS_AS(forward_transfer(make_split({P2.parse("x2+1") * d(P2, 1)}), {0}), TransferError);
}

TEST_CASE("contraction and double type") {
    Rng rng(53);
    Scalar a = random_profile(rng, P2, 0), b = random_profile(rng, P2, 1);
    OneOneTensor r = OneOneTensor::diagonal(P2, {a, b});
    CHECK(check_contraction_type(split_x2(), r).passed());
    CHECK(check_double_type(split_x2(), r).passed());
    OneOneTensor rx = OneOneTensor::scalar_multiple(R2, R2.parse("x"));
    GFrame l = make_graph_poisson(bivector(R2, 0, 1, "1"));
    CHECK(check_contraction_type(l, rx).passed());
    CHECK(check_double_type(l, rx).passed());

    // Rank-two pi on R^3 with r = diag(f(z), f(z), 1): contraction type, but D-stability fails along d_z.
    GFrame flat3 = make_graph_poisson(bivector(R3, 0, 1, "1"));
    OneOneTensor fz = diag(R3, {"z^2+z", "z^2+z", "1"});
    CHECK(check_nijenhuis(fz).failed());
    CHECK(check_contraction_type(flat3, fz).passed());
    CheckResult st = check_D_stability(flat3, fz);
    CHECK(st.failed());
    // pi# C = 0 while C != 0.
    Bivector pi = bivector(R3, 0, 1, "1");
    PForm cc = concomitant_C(pi, fz, dx(R3, 0), dx(R3, 1));
    CHECK_FALSE(cc.is_zero());
    CHECK(pi.sharp(cc).is_zero());

    // Not Nijenhuis: double type fails.
    OneOneTensor tilde = OneOneTensor::diagonal(P2, {P2.parse("x1"), P2.parse("x1^2")});
    CHECK(check_double_type(split_x2(), tilde).failed());
    // (r, id) not injective on L.
    CHECK(check_double_type(split_x2(), diag(P2, {"1", "0"})).failed());
}
