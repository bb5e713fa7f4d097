// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Usage: dnk_acceptance <path to the dnk executable>

#include "commands.hpp"
#include "identities.hpp"

#include "dnk/algebroid/algebroid.hpp"
#include "dnk/dirac/transforms.hpp"
#include "dnk/holomorphic/holomorphic.hpp"
#include "dnk/tensor/lifts.hpp"
#include "dnk/tensor/random_fields.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace dnk;

namespace {

const Chart R2("R2", {"x", "y"});
const Chart R3("R3", {"x", "y", "z"});
const Chart P2("P2", {"x1", "x2"});
const Chart C2("C2", {"x1", "y1", "x2", "y2"});
constexpr std::uint64_t kSeed = cli::kDefaultSeed;

struct Tally {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

VectorField d(const Chart& c, int k) { return VectorField::coordinate(c, k); }
PForm dx(const Chart& c, int k) { return PForm::coordinate(c, k); }

Bivector bivector(const Chart& c, int i, int j, const Scalar& f) {
    Bivector p(c);
    p.set(i, j, f);
    return p;
}

OneOneTensor diag(const Chart& c, std::vector<Scalar> s) { return OneOneTensor::diagonal(c, s); }

// Nonconstant rational profile in the single variable k, regular on the reals.
Scalar random_profile(Rng& rng, const Chart& c, int k) {
    Scalar num = random_univariate(rng, c.dim(), k, 2);
    if (num.is_constant()) num = num + c.var(k);
    return num / (c.one() + c.var(k) * c.var(k));
}

GFrame split_x2() { return make_split({d(P2, 1)}); }

bool all_pass(const DNReport& rep) { return rep.overall() == Verdict::pass; }

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

bool all_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

// Same distribution: equal sizes and the union does not grow.
bool same_distribution(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    std::vector<GSection> both;
    for (auto& v : a) both.push_back(GSection::vector(v));
    for (auto& v : b) both.push_back(GSection::vector(v));
    return generic_rank(section_matrix(both)) == a.size();
}

Scalar random_holomorphic(Rng& rng, unsigned max_degree) {
    const Coeff I = Coeff::imag_unit();
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
    if (f.is_constant()) f += z1;
    return f;
}

// u A + v B with A = dx1^dx2 - dy1^dy2, B = dx1^dy2 + dy1^dx2 (as bivectors).
Bivector bivector_from_parts(const Scalar& u, const Scalar& v) {
    Bivector p(C2);
    p.set(0, 2, u);
    p.set(1, 3, -u);
    p.set(0, 3, v);
    p.set(1, 2, v);
    return p;
}

// Cauchy-Riemann equations for u + i v in both complex coordinates.
bool cauchy_riemann(const Scalar& u, const Scalar& v) {
    return u.diff(0) == v.diff(1) && u.diff(1) == -v.diff(0) && u.diff(2) == v.diff(3) && u.diff(3) == -v.diff(2);
}

// Real part of (g1 d_z1 + g2 d_z2, h1 dz1 + h2 dz2) for holomorphic g, h.
GSection holomorphic_section(const Scalar& g1, const Scalar& g2, const Scalar& h1, const Scalar& h2) {
    VectorField x(C2, {g1.real_part(), g1.imag_part(), g2.real_part(), g2.imag_part()});
    PForm a = PForm::one_form(C2, {h1.real_part(), -h1.imag_part(), h2.real_part(), -h2.imag_part()});
    return GSection(x, a);
}

struct DNFixture {
    std::string name;
    GFrame frame;
    OneOneTensor r;
};

// Dirac-Nijenhuis pairs shared by the algebroid and separation criteria.
std::vector<DNFixture> dn_fixtures() {
    std::vector<DNFixture> out;
    Rng rng(kSeed ^ 0x51);
    for (int t = 0; t < 3; ++t)
        out.push_back({"split diag #" + std::to_string(t + 1), split_x2(),
                       diag(P2, {random_profile(rng, P2, 0), random_profile(rng, P2, 1)})});
    Bivector pi = bivector(R2, 0, 1, R2.one());
    OneOneTensor rx = OneOneTensor::scalar_multiple(R2, R2.var(0));
    for (unsigned n = 0; n <= 4; ++n)
        out.push_back({"member " + std::to_string(n), hierarchy(make_graph_poisson(pi), rx, n, HierarchySide::n0), rx});
    Scalar f = C2.var(0) * C2.var(2) - C2.var(1) * C2.var(3);
    Scalar g = C2.var(0) * C2.var(3) + C2.var(1) * C2.var(2);
    out.push_back({"holomorphic z1 z2", make_graph_poisson(bivector_from_parts(f, g)),
                   ComplexStructure::standard(C2).tensor()});
    return out;
}

// ---- criteria

std::string identity_suite(Tally& t) {
    const std::set<std::string> wanted = {
        "tensor.dual_D",           "tensor.genleibniz_D",      "tensor.genleibniz_Dstar", "tensor.torsion_via_D",
        "tensor.torsion_via_Dstar", "courant.big_D_leibniz",   "courant.D_bracket_skew",  "courant.contracted_bracket",
        "courant.double_bracket",  "courant.cour_im_1",        "courant.cour_im_2",       "courant.cour_im_3",
        "courant.cour_im_4",       "courant.Dr_square",        "courant.involutivity",    "dirac.mm_alt",
        "dirac.R_C_duality",       "dirac.S_relation",         "dirac.S_tilde_formula",     "dirac.graph_concomitant"};
    unsigned found = 0, instances = 0;
    for (const auto& id : cli::identity_registry()) {
        const std::string name = id.module + "." + id.name;
        if (!wanted.count(name)) continue;
        ++found;
        t.expect(id.charts.size() == 2 && id.charts[0].dim() == 2 && id.charts[1].dim() == 3, name + " on 2- and 3-charts");
        cli::IdentityOutcome o = cli::run_identity(id, kSeed, cli::kDefaultInstances);
        instances += o.instances;
        t.expect(o.error.empty(), name + " threw: " + o.error);
        t.expect(o.failures == 0, name + ": " + std::to_string(o.failures) + " failing instances" +
                                      (o.witness ? " (" + o.witness->label + " = " + o.witness->text + ")" : ""));
        t.expect(o.instances >= 2 * cli::kDefaultInstances, name + " ran " + std::to_string(o.instances) + " instances");
    }
    t.expect(found == wanted.size(), "registry is missing some identities");
    return std::to_string(found) + " identities, " + std::to_string(instances) + " instances";
}

int run_cli_on(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    int code = cli::run_cli(args, o, e);
    if (out) *out = o.str();
    return code;
}

std::string worked_example(Tally& t) {
    Rng rng(kSeed ^ 0x2);
    GFrame l = split_x2();
    int flips = 0, torsion_free = 0, torsion = 0;
    for (int trial = 0; trial < 6; ++trial) {
        Scalar a = random_profile(rng, P2, 0), b = random_profile(rng, P2, 1);
        DNReport rep = dirac_nijenhuis_report(l, diag(P2, {a, b}));
        for (const CheckResult* c : rep.all()) t.expect(c->passed(), "diag(a,b): " + c->name);

        // Admissibility of the traces tracks whether b is constant.
        bool seen[2] = {false, false};
        for (const Scalar& bb : {b, P2.constant(Coeff(trial + 2))}) {
            OneOneTensor r = diag(P2, {a, bb});
            const bool oracle = bb.diff(1).is_zero();
            t.expect(hamiltonian_field(l, traces(r, 1)[0]).has_value() == oracle, "hamiltonian of the first trace");
            bool admissible = true;
            try {
                t.expect(check_traces_involution(l, r, 3).passed(), "traces in involution");
            } catch (const NotAdmissible&) {
                admissible = false;
            }
            t.expect(admissible == oracle, "admissibility verdict");
            seen[admissible] = true;
        }
        flips += seen[0] && seen[1];

        // r-tilde = diag(a, c) with c of x1 only: torsion (a - c) c'.
        Scalar cs[] = {random_profile(rng, P2, 0), P2.constant(Coeff(trial - 3)), a};
        for (const Scalar& c : cs) {
            Scalar expected = (a - c) * c.diff(0);
            CheckResult res = check_nijenhuis(diag(P2, {a, c}));
            t.expect(res.passed() == expected.is_zero(), "r-tilde verdict");
            if (expected.is_zero()) {
                ++torsion_free;
                continue;
            }
            ++torsion;
            bool matched = false;
            for (const auto& w : res.witnesses)
                if (w.label == "N(d_x1,d_x2)^x2") matched = w.value == expected && w.text == P2.print(expected);
            t.expect(matched, "r-tilde witness equals (a - c) c'");
        }
    }
    t.expect(flips == 6, "admissibility flipped in every trial");

    // The same example through the command line.
    const std::string dir = DNK_SCENE_DIR;
    t.expect(run_cli_on({"check", dir + "/worked_example.scene"}) == 0, "worked_example.scene exits 0");
    std::string out;
    t.expect(run_cli_on({"check", dir + "/torsion.scene"}, &out) == 1, "torsion.scene exits 1");
    const Chart p("P", {"x1", "x2"});
    Scalar a = p.parse("x1"), c = p.parse("x1^2 + 3");
    t.expect(out.find("witness.1.value = " + p.print((a - c) * c.diff(0)) + "\n") != std::string::npos,
             "torsion.scene witness");
    t.expect(run_cli_on({"check", dir + "/malformed.scene"}) == 3, "malformed.scene exits 3");
    return "6 random (a,b); r-tilde " + std::to_string(torsion) + " with torsion, " + std::to_string(torsion_free) +
           " without";
}

std::string gauge_example(Tally& t) {
    Rng rng(kSeed ^ 0x3);
    for (int trial = 0; trial < 5; ++trial) {
        Bivector pi = random_bivector(rng, R2, 2);
        PForm b = random_form(rng, R2, 2, 2);
        GaugeData g = gauge_transform(pi, b);
        GFrame l = make_graph_poisson(pi);
        t.expect(g.closed, "B closed on a 2-chart");
        t.expect(dirac_nijenhuis_report(l, g.r).compatible() == Verdict::pass, "gauge pair compatible");
        GFrame l01 = hierarchy(l, g.r, 1, HierarchySide::zero_n);
        t.expect(check_lagrangian(l01).passed() && check_involutive(l01).passed(), "(0,1) member is Dirac");
    }

    const std::regex label(R"(C_L\(s(\d+),s(\d+)\)\(d_(\w+)\))");
    int witnesses = 0;
    for (int trial = 0; trial < 5; ++trial) {
        Bivector pi = trial % 2 ? random_bivector(rng, R3, 0)
                                : bivector(R3, 0, 1, random_poly_scalar(rng, 3, 1) + R3.one());
        PForm b = random_form(rng, R3, 2, 2);
        while (ext_d(b).is_zero()) b = random_form(rng, R3, 2, 2);
        PForm db = ext_d(b);
        GaugeData g = gauge_transform(pi, b);
        GFrame l = make_graph_poisson(pi);
        auto expected_R = [&](int k, int i) { return pi.sharp(interior(pi.sharp(dx(R3, i)), interior(d(R3, k), db))); };
        bool any = false;
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) {
                VectorField e = expected_R(k, i);
                t.expect(concomitant_R(pi, g.r, d(R3, k), dx(R3, i)) == e, "concomitant equals pi#(dB(X, pi# a, .))");
                any = any || !e.is_zero();
            }
        t.expect(check_invariance(l, g.r).passed(), "gauge r preserves the graph");
        CheckResult st = check_D_stability(l, g.r);
        t.expect(st.failed() == any, "D-stability verdict");
        for (const auto& w : st.witnesses) {
            std::smatch m;
            if (!std::regex_match(w.label, m, label)) {
                t.expect(false, "unexpected witness label " + w.label);
                continue;
            }
            const int i = std::stoi(m[1]) - 1, j = std::stoi(m[2]) - 1, k = R3.index_of(m[3]);
            Scalar e = -pair(dx(R3, j), expected_R(k, i));
            t.expect(w.value == e && w.text == R3.print(e), "D-stability witness " + w.label);
            ++witnesses;
        }
    }
    return "5 closed pairs on R2, 5 non-closed on R3, " + std::to_string(witnesses) + " witnesses matched";
}

std::string hierarchy_laws(Tally& t) {
    Bivector pi = bivector(R2, 0, 1, R2.one());
    OneOneTensor r = OneOneTensor::scalar_multiple(R2, R2.var(0));
    GFrame l = make_graph_poisson(pi);
    std::vector<GFrame> members;
    for (unsigned n = 0; n <= 4; ++n) {
        GFrame m = hierarchy(l, r, n, HierarchySide::n0);
        t.expect(same_span(m, make_graph_poisson(bivector(R2, 0, 1, R2.var(0).pow(n)))),
                 "member " + std::to_string(n) + " is graph(x^n pi)");
        t.expect(all_pass(dirac_nijenhuis_report(m, r)), "member " + std::to_string(n) + " Dirac-Nijenhuis");
        t.expect(same_distribution(null_distribution(m).basis, null_distribution(l).basis),
                 "member " + std::to_string(n) + " null distribution");
        members.push_back(m);
    }
    int pairs = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j, ++pairs)
            t.expect(check_concur(members[i], members[j]).passed(),
                     "members " + std::to_string(i) + "," + std::to_string(j) + " concur");
    auto phi = traces(r, 4);
    for (int j = 1; j <= 4; ++j)
        t.expect(phi[j - 1] == R2.constant(Coeff(Rational(2) / Rational(j))) * R2.var(0).pow(j), "trace " + std::to_string(j));
    t.expect(check_traces_involution(l, r, 4).passed(), "traces 1..4 in involution");
    return "members 0..4, " + std::to_string(pairs) + " concurring pairs, 4 traces";
}

std::string holomorphic_dictionary(Tally& t) {
    ComplexStructure j = ComplexStructure::standard(C2);
    PForm re(C2, 2), im(C2, 2);
    re.set({0, 2}, C2.one());
    re.set({1, 3}, -C2.one());
    im.set({0, 3}, C2.one());
    im.set({1, 2}, C2.one());
    t.expect(check_holo_form({re, im}, j).passed(), "dz1 ^ dz2 is holomorphic");
    t.expect(holo_form_from_real(re, j).im == im, "imaginary part recovered from the real part");

    Rng rng(kSeed ^ 0x5);
    int agree = 0;
    for (int trial = 0; trial < 6; ++trial) {
        Scalar f = random_holomorphic(rng, 2);
        Scalar u = f.real_part(), v = f.imag_part();
        // Odd trials break the Cauchy-Riemann equations.
        if (trial % 2) u = u + random_poly_scalar(rng, 4, 2) * C2.var(1) + C2.var(1) * C2.var(1);
        const bool oracle = cauchy_riemann(u, v);
        CheckResult res = check_holomorphic_dirac(make_graph_poisson(bivector_from_parts(u, v)), j);
        t.expect(res.passed() == oracle, "holomorphic Dirac verdict against Cauchy-Riemann, trial " +
                                             std::to_string(trial));
        agree += res.passed() == oracle;
    }

    int brackets = 0;
    for (int trial = 0; trial < 10; ++trial) {
        auto s = [&]() {
            return holomorphic_section(random_holomorphic(rng, 2), random_holomorphic(rng, 1), random_holomorphic(rng, 1),
                                       random_holomorphic(rng, 1));
        };
        GSection s1 = s(), s2 = s();
        if (!is_holomorphic_section(s1, j) || !is_holomorphic_section(s2, j)) {
            t.expect(false, "sampled section is not holomorphic");
            continue;
        }
        t.expect(phi_courant_check(s1, s2, j).passed(), "bracket preserved");
        ++brackets;
    }
    return std::to_string(agree) + "/6 equivalence trials, " + std::to_string(brackets) + " bracket pairs";
}

std::string algebroid_layer(Tally& t) {
    std::vector<std::pair<std::string, GFrame>> dirac;
    dirac.emplace_back("split", split_x2());
    dirac.emplace_back("flat R3", make_graph_poisson(bivector(R3, 0, 1, R3.one())));
    dirac.emplace_back("exact presymplectic R3",
                       make_graph_presymplectic(ext_d(PForm::one_form(R3, {R3.var(1) * R3.var(2), R3.var(0), R3.zero()}))));
    Rng rng(kSeed ^ 0x6);
    for (int k = 0; k < 2; ++k) {
        GaugeData g = gauge_transform(random_bivector(rng, R2, 2), random_form(rng, R2, 2, 2));
        dirac.emplace_back("gauge frame " + std::to_string(k + 1), g.frame);
    }
    for (const auto& f : dn_fixtures()) dirac.emplace_back(f.name, f.frame);
    for (const auto& [name, l] : dirac) {
        DiracAlgebroid da = dirac_to_algebroid(l);
        t.expect(check_algebroid(da.algebroid).passed(), name + ": algebroid");
        t.expect(check_IM_form(da.algebroid, da.form).passed(), name + ": IM form");
        t.expect(da.transversal, name + ": transversal");
    }

    AlgebroidData t3 = AlgebroidData::tangent(R3);
    int closed = 0;
    for (int trial = 0; trial < 20; ++trial) {
        PForm w = trial % 2 ? ext_d(random_form(rng, R3, 1, 2)) : random_form(rng, R3, 2, 2);
        IMForm f = zero_im_form(t3, 2);
        for (int a = 0; a < 3; ++a) f.mu[a] = interior(d(R3, a), w);
        const bool oracle = ext_d(w).is_zero();
        closed += oracle;
        t.expect(check_IM_form(t3, f).passed() == oracle, "tangent IM verdict equals closedness");
    }
    t.expect(closed > 0 && closed < 20, "both closed and non-closed forms sampled");

    int transported = 0;
    for (const auto& f : dn_fixtures()) {
        DiracAlgebroid da = dirac_to_algebroid(f.frame);
        IMOneOne im = transport_im_tensor(f.frame, f.r);
        t.expect(check_IM_oneone(da.algebroid, im).passed(), f.name + ": IM (1,1)");
        t.expect(check_IM_nijenhuis(da.algebroid, im).passed(), f.name + ": IM Nijenhuis");
        t.expect(check_IM_compat(da.algebroid, da.form, im).passed(), f.name + ": IM compatible");
        ++transported;
    }
    return std::to_string(dirac.size()) + " Dirac fixtures, 20 tangent forms (" + std::to_string(closed) + " closed), " +
           std::to_string(transported) + " transported tensors";
}

std::string separations(Tally& t) {
    int doubles = 0;
    const auto fixtures = dn_fixtures();
    for (const auto& f : fixtures) {
        t.expect(all_pass(dirac_nijenhuis_report(f.frame, f.r)), f.name + " is Dirac-Nijenhuis");
        t.expect(check_contraction_type(f.frame, f.r).passed(), f.name + ": contraction type");
        bool injective = true;
        try {
            hierarchy(f.frame, f.r, 1, HierarchySide::n0);
        } catch (const HierarchyError&) {
            injective = false;
        }
        if (!injective) continue;
        t.expect(check_double_type(f.frame, f.r).passed(), f.name + ": double type");
        ++doubles;
    }

    // Rank-two pi on R3 and r = diag(h(z), h(z), 1): the concomitant is nonzero but killed by pi#.
    Bivector pi = bivector(R3, 0, 1, R3.one());
    Scalar h = R3.var(2) * R3.var(2) + R3.var(2);
    OneOneTensor r = diag(R3, {h, h, R3.one()});
    GFrame l = make_graph_poisson(pi);
    bool hidden = false;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            PForm c = concomitant_C(pi, r, dx(R3, i), dx(R3, k));
            if (!c.is_zero() && pi.sharp(c).is_zero()) hidden = true;
        }
    t.expect(hidden, "separating fixture has a concomitant invisible to pi#");
    t.expect(check_contraction_type(l, r).passed(), "separating fixture: contraction type");
    t.expect(check_D_stability(l, r).failed(), "separating fixture: D-stability fails");
    return std::to_string(fixtures.size()) + " fixtures, " + std::to_string(doubles) + " double-type checks";
}

std::string lift_layer(Tally& t) {
    std::vector<std::pair<Bivector, OneOneTensor>> pairs;
    pairs.emplace_back(bivector(R2, 0, 1, R2.one()), OneOneTensor::scalar_multiple(R2, R2.var(0)));
    Rng rng(kSeed ^ 0x8);
    int tries = 0;
    while (pairs.size() < 6 && tries++ < 200) {
        Bivector pi = bivector(R2, 0, 1, random_function(rng, R2, 2));
        OneOneTensor r = OneOneTensor::scalar_multiple(R2, random_function(rng, R2, 2));
        if (pi.is_zero() || !(intertwines(pi, r) && R_vanishes(pi, r))) continue;
        pairs.emplace_back(pi, r);
    }
    for (int k = 0; k < 2; ++k) {
        Bivector pi = random_bivector(rng, R2, 1);
        pairs.emplace_back(pi, gauge_transform(pi, random_form(rng, R2, 2, 1)).r);
    }
    t.expect(pairs.size() >= 5, "at least 5 compatible pairs");
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [pi, r] = pairs[p];
        const std::string tag = "pair " + std::to_string(p + 1);
        t.expect(intertwines(pi, r) && R_vanishes(pi, r), tag + " compatible");
        t.expect(all_zero(lift_pairing_defects(r)), tag + ": lift pairing relation");
        t.expect(all_zero(intertwining_defects(pi, r)), tag + ": lifts intertwined by T(pi#)");
        OneOneTensor k = tangent_lift(r);
        VectorField u = random_vector_field(rng, R2, 2);
        std::vector<VectorField> du;
        for (int j = 0; j < 2; ++j) du.push_back(D_r(d(R2, j), u, r));
        t.expect(lie_deriv_tensor(vertical_lift(u), k) == vertical_tensor(R2, du), tag + ": Lie derivative along u^v");
        t.expect(k.apply(vertical_lift(u)) == vertical_lift(r.apply(u)), tag + ": r_tg u^v = (r u)^v");
    }
    return std::to_string(pairs.size()) + " compatible pairs on doubled charts";
}

std::string determinism(Tally& t, const std::string& tool) {
    auto run = [&](int* status) {
        std::string out;
        FILE* p = popen((tool + " selftest").c_str(), "r");
        if (!p) return out;
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
        int st = pclose(p);
        *status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
        return out;
    };
    int s1 = -1, s2 = -1;
    std::string a = run(&s1), b = run(&s2);
    t.expect(s1 == 0 && s2 == 0, "selftest exits 0");
    t.expect(!a.empty() && a == b, "selftest reports are byte-identical");
    t.expect(a.find("summary.fail = 0\n") != std::string::npos, "selftest has no failing identity");
    return std::to_string(a.size()) + " bytes per report";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: dnk_acceptance <dnk executable>\n";
        return 3;
    }
    const std::string tool = argv[1];
    const std::vector<std::pair<std::string, std::function<std::string(Tally&)>>> criteria = {
        {"identity suite", identity_suite},
        {"worked two-dimensional example", worked_example},
        {"gauge example", gauge_example},
        {"hierarchy laws", hierarchy_laws},
        {"holomorphic dictionary", holomorphic_dictionary},
        {"algebroid layer", algebroid_layer},
        {"contraction and double type separations", separations},
        {"lift layer", lift_layer},
        {"selftest determinism", [&](Tally& t) { return determinism(t, tool); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Tally t;
        std::string detail;
        try {
            detail = criteria[i].second(t);
        } catch (const std::exception& e) {
            t.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = t.failures.empty();
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": " << t.checks
                  << " checks";
        if (!detail.empty()) std::cout << ", " << detail;
        std::cout << "\n";
        for (std::size_t k = 0; k < t.failures.size() && k < 5; ++k) std::cout << "    " << t.failures[k] << "\n";
        std::cout.flush();
    }
    return failed ? 1 : 0;
}
