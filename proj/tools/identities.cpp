#include "identities.hpp"

#include "scene.hpp"

#include "dnk/dirac/transforms.hpp"
#include "dnk/holomorphic/holomorphic.hpp"
#include "dnk/symbolic/linalg.hpp"
#include "dnk/tensor/lifts.hpp"
#include "dnk/tensor/random_fields.hpp"

#include <algorithm>

namespace dnk::cli {

void Defects::zero(const std::string& label, const Scalar& s, const Chart& c) {
    if (first_ || s.is_zero()) return;
    first_ = Witness{label, s, c.print(s), c};
}

void Defects::zero(const std::string& label, const VectorField& x) {
    for (int i = 0; i < x.dim(); ++i) zero(label + "^" + x.chart().variables()[i], x[i], x.chart());
}

void Defects::zero(const std::string& label, const PForm& w) {
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::string idx;
        for (int i : w.tuple(k)) idx += (idx.empty() ? "" : ",") + w.chart().variables()[i];
        zero(label + "[" + idx + "]", w.at(k), w.chart());
    }
}

void Defects::zero(const std::string& label, const GSection& s) {
    zero(label + ".vec", s.vec);
    zero(label + ".form", s.form);
}

void Defects::zero(const std::string& label, const OneOneTensor& r) {
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j)
            zero(label + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", r.at(i, j), r.chart());
}

void Defects::zero(const std::string& label, const std::vector<Scalar>& v, const Chart& c) {
    for (std::size_t k = 0; k < v.size(); ++k) zero(label + "#" + std::to_string(k + 1), v[k], c);
}

void Defects::holds(const std::string& label, bool ok, const Chart& c) {
    if (first_ || ok) return;
    first_ = Witness{label, c.one(), c.print(c.one()), c};
}

namespace {

const Chart R2("R2", {"x", "y"});
const Chart R3("R3", {"x", "y", "z"});
const Chart P2("P2", {"x1", "x2"});
const Chart C2("C2", {"x1", "y1", "x2", "y2"});

VectorField coord(const Chart& c, int k) { return VectorField::coordinate(c, k); }
PForm dx(const Chart& c, int k) { return PForm::coordinate(c, k); }

GSection random_section(Rng& rng, const Chart& c, unsigned deg) {
    return GSection(random_vector_field(rng, c, deg), random_form(rng, c, 1, deg));
}

Scalar random_profile(Rng& rng, const Chart& c, int k) {
    Scalar num = random_univariate(rng, c.dim(), k, 2);
    if (num.is_zero()) num = c.one();
    return num / (c.one() + c.var(k) * c.var(k));
}

Bivector bivector(const Chart& c, int i, int j, const Scalar& f) {
    Bivector p(c);
    p.set(i, j, f);
    return p;
}

// Poisson by construction: any bivector in dimension 2, f d_x ^ d_y in dimension 3.
Bivector random_poisson(Rng& rng, const Chart& c, unsigned deg) {
    if (c.dim() == 2) return random_bivector(rng, c, deg);
    return bivector(c, 0, 1, random_poly_scalar(rng, c.dim(), deg) + c.one());
}

Scalar apply_bracket(const VectorField& x, const VectorField& y, const Scalar& f) {
    return x.apply(y.apply(f)) - y.apply(x.apply(f));
}

VectorField lie_torsion(const OneOneTensor& r, const VectorField& z, const VectorField& x, const VectorField& y) {
    return lie_bracket(z, nijenhuis_on(r, x, y)) - nijenhuis_on(r, lie_bracket(z, x), y) -
           nijenhuis_on(r, x, lie_bracket(z, y));
}

bool intertwines(const Bivector& pi, const OneOneTensor& r) {
    for (int i = 0; i < pi.dim(); ++i)
        if (!(pi.sharp(r.dual_apply(dx(pi.chart(), i))) == r.apply(pi.sharp(dx(pi.chart(), i))))) return false;
    return true;
}

bool R_vanishes(const Bivector& pi, const OneOneTensor& r) {
    for (int k = 0; k < pi.dim(); ++k)
        for (int i = 0; i < pi.dim(); ++i)
            if (!concomitant_R(pi, r, coord(pi.chart(), k), dx(pi.chart(), i)).is_zero()) return false;
    return true;
}

bool compat_checks(const GFrame& l, const OneOneTensor& r) {
    return check_invariance(l, r).passed() && check_D_stability(l, r).passed();
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
    if (f.is_zero()) f = z1;
    return f;
}

Bivector pn_bivector(const Scalar& f) {
    Scalar u = f.real_part(), v = f.imag_part();
    Bivector p(C2);
    p.set(0, 2, u);
    p.set(1, 3, -u);
    p.set(0, 3, v);
    p.set(1, 2, v);
    return p;
}

IMForm tangent_form(const PForm& w) {
    const Chart& c = w.chart();
    IMForm f;
    f.degree = w.degree();
    PForm dw = ext_d(w);
    for (int a = 0; a < c.dim(); ++a) {
        f.mu.push_back(interior(coord(c, a), w));
        f.nu.push_back(interior(coord(c, a), dw));
    }
    return f;
}

const std::vector<Chart> kPlanar{R2, R3};

std::vector<Identity> build_registry() {
    std::vector<Identity> reg;
    auto add = [&](std::string module, std::string name, std::vector<Chart> charts,
                   std::function<void(Rng&, const Chart&, Defects&)> fn, unsigned divisor = 1) {
        reg.push_back({std::move(module), std::move(name), std::move(charts), std::move(fn), divisor});
    };

    // ---- symbolic
    add("symbolic", "field_axioms", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        const int n = c.dim();
        Scalar a = random_fraction(rng, n, 2), b = random_fraction(rng, n, 2), e = random_fraction(rng, n, 2);
        d.zero("assoc_add", (a + b) + e - (a + (b + e)), c);
        d.zero("assoc_mul", (a * b) * e - a * (b * e), c);
        d.zero("distrib", a * (b + e) - (a * b + a * e), c);
        d.zero("comm", a * b - b * a, c);
        if (!a.is_zero()) d.zero("inverse", a * (c.one() / a) - c.one(), c);
    });
    add("symbolic", "diff_leibniz", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Scalar a = random_fraction(rng, c.dim(), 2), b = random_fraction(rng, c.dim(), 2);
        for (int k = 0; k < c.dim(); ++k)
            d.zero("d" + c.variables()[k] + "(ab)", (a * b).diff(k) - a * b.diff(k) - b * a.diff(k), c);
    });
    add("symbolic", "canonical_forms", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Scalar a = random_fraction(rng, c.dim(), 2), b = random_fraction(rng, c.dim(), 2),
               e = random_fraction(rng, c.dim(), 2);
        if (b.is_zero()) b = c.one();
        Scalar one = (a * b + e) / b, two = e / b + a;
        d.holds("numerator", one.num() == two.num(), c);
        d.holds("denominator", one.den() == two.den(), c);
    });
    add("symbolic", "print_parse_round_trip", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Scalar a = random_fraction(rng, c.dim(), 3);
        d.zero("real", c.parse(c.print(a)) - a, c);
        Chart cc = complexified(c);
        Scalar z = a * cc.parse("(2 - 3/2*i)*x + i/5") + cc.parse("-i");
        d.zero("complex", cc.parse(cc.print(z)) - z, cc);
    });
    add("symbolic", "kernel_basis", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        const int n = c.dim();
        const std::size_t rows = 3, cols = 4;
        FracMatrix m(rows, cols, n);
        for (std::size_t j = 0; j < cols; ++j) {
            m(0, j) = random_fraction(rng, n, 1);
            m(1, j) = random_poly_scalar(rng, n, 2);
        }
        Scalar f = random_poly_scalar(rng, n, 1), g = random_fraction(rng, n, 1);
        for (std::size_t j = 0; j < cols; ++j) m(2, j) = f * m(0, j) + g * m(1, j);
        auto basis = kernel_basis(m);
        d.holds("rank + nullity = cols", generic_rank(m) + basis.size() == cols, c);
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t i = 0; i < rows; ++i) {
                Scalar s(n);
                for (std::size_t j = 0; j < cols; ++j) s += m(i, j) * basis[b][j];
                d.zero("(m v" + std::to_string(b + 1) + ")_" + std::to_string(i + 1), s, c);
            }
    });
    add("symbolic", "schwartz_zippel", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Scalar a = random_fraction(rng, c.dim(), 3);
        if (a.is_zero()) return;
        d.holds("nonzero sample", has_nonzero_sample(a, 8, rng()), c);
    });

    // ---- tensor
    add("tensor", "d_squared", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        for (int p = 0; p + 2 <= c.dim(); ++p) d.zero("dd w" + std::to_string(p), ext_d(ext_d(random_form(rng, c, p, 3))));
    });
    add("tensor", "cartan", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2), z = random_vector_field(rng, c, 2);
        PForm a = random_form(rng, c, 1, 2), w = random_form(rng, c, 2, 2);
        d.zero("(L_X a)(Y)", pair(lie_deriv_form(x, a), y) - (x.apply(pair(a, y)) - pair(a, lie_bracket(x, y))), c);
        Scalar lw = eval_form(lie_deriv_form(x, w), {y, z});
        Scalar oracle = x.apply(eval_form(w, {y, z})) - eval_form(w, {lie_bracket(x, y), z}) -
                        eval_form(w, {y, lie_bracket(x, z)});
        d.zero("(L_X w)(Y,Z)", lw - oracle, c);
        d.zero("[L_X, i_Y] w", lie_deriv_form(x, interior(y, w)) - interior(y, lie_deriv_form(x, w)) -
                                   interior(lie_bracket(x, y), w));
        Scalar f = random_function(rng, c, 2);
        d.zero("[X,Y] f", lie_bracket(x, y).apply(f) - apply_bracket(x, y, f), c);
    });
    add("tensor", "genleibniz_D", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        auto s = random_oneone(rng, c, 2);
        auto g = random_function(rng, c, 2);
        d.zero("D_X(gY)", D_r(x, g * y, s) - (g * D_r(x, y, s) + x.apply(g) * s.apply(y) - s.apply(x).apply(g) * y));
    });
    add("tensor", "genleibniz_Dstar", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 2);
        auto a = random_form(rng, c, 1, 2);
        auto s = random_oneone(rng, c, 2);
        auto g = random_function(rng, c, 2);
        d.zero("D*_X(g a)", D_r_star(x, g * a, s) -
                                (g * D_r_star(x, a, s) + x.apply(g) * s.dual_apply(a) - s.apply(x).apply(g) * a));
    });
    add("tensor", "dual_D", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        auto a = random_form(rng, c, 1, 2);
        auto s = random_oneone(rng, c, 2);
        Scalar lhs = pair(D_r_star(x, a, s), y);
        Scalar rhs = x.apply(pair(a, s.apply(y))) - s.apply(x).apply(pair(a, y)) - pair(a, D_r(x, y, s));
        d.zero("<D*_X a, Y>", lhs - rhs, c);
    });
    add("tensor", "torsion_via_D", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto r = random_oneone(rng, c, 2);
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        d.zero("N(X,Y)", torsion_via_D(r, x, y) - nijenhuis_on(r, x, y));
    });
    add("tensor", "torsion_via_Dstar", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto r = random_oneone(rng, c, 2);
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        auto a = random_form(rng, c, 1, 2);
        VectorField n = nijenhuis_on(r, x, y);
        d.zero("<a, N(X,Y)>", torsion_via_Dstar(r, x, y, a) - pair(a, n), c);
        d.zero("N*a(X,Y)", eval_form(nijenhuis_torsion(r).dual(a), {x, y}) - pair(a, n), c);
    });
    add("tensor", "torsion_tensorial", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto r = random_oneone(rng, c, 2);
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        auto f = random_function(rng, c, 2);
        VectorField n = nijenhuis_on(r, x, y);
        d.zero("N(fX,Y)", nijenhuis_on(r, f * x, y) - f * n);
        d.zero("N(X,fY)", nijenhuis_on(r, x, f * y) - f * n);
        d.zero("N(X,Y) coordinate", nijenhuis_torsion(r).eval(x, y) - n);
    });
    add("tensor", "naturality", {R3}, [](Rng& rng, const Chart& c, Defects& d) {
        auto r2 = random_oneone(rng, R2, 2);
        OneOneTensor r1 = embed(r2, c);
        for (int j = 0; j < 3; ++j) r1.at(2, j) = random_function(rng, c, 2);
        auto x2 = random_vector_field(rng, R2, 2), y2 = random_vector_field(rng, R2, 2);
        VectorField x1 = embed(x2, c), y1 = embed(y2, c);
        x1[2] = random_function(rng, c, 2);
        y1[2] = random_function(rng, c, 2);
        VectorField d1 = D_r(x1, y1, r1);
        VectorField d2 = embed(D_r(x2, y2, r2), c);
        d.zero("D(X,Y)^x", d1[0] - d2[0], c);
        d.zero("D(X,Y)^y", d1[1] - d2[1], c);
        auto beta = random_form(rng, R2, 1, 2);
        d.zero("pullback D*", D_r_star(x1, embed(beta, c), r1) - embed(D_r_star(x2, beta, r2), c));
    });
    add("tensor", "lift_relations", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto r = random_oneone(rng, c, 1);
        std::vector<std::string> vars = c.variables();
        for (const auto& v : c.variables()) vars.push_back("v_" + v);
        for (const auto& v : c.variables()) vars.push_back("p_" + v);
        d.zero("pairing", lift_pairing_defects(r), Chart(c.name() + "_vp", vars));
        OneOneTensor k = tangent_lift(r);
        auto u = random_vector_field(rng, c, 2);
        std::vector<VectorField> du;
        for (int j = 0; j < c.dim(); ++j) du.push_back(D_r(coord(c, j), u, r));
        d.zero("L_{u^v} r_tg", lie_deriv_tensor(vertical_lift(u), k) - vertical_tensor(c, du));
        d.zero("r_tg u^v", k.apply(vertical_lift(u)) - vertical_lift(r.apply(u)));
    });
    add("tensor", "lift_intertwining", {R2}, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = bivector(c, 0, 1, random_function(rng, c, 2));
        auto r = OneOneTensor::scalar_multiple(c, random_function(rng, c, 2));
        d.zero("T(pi#) r_cotg - r_tg T(pi#)", intertwining_defects(pi, r), cotangent_chart(c));
    });

    // ---- courant
    add("courant", "courant_symmetrization", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        d.zero("[[s1,s2]] + [[s2,s1]] - d<s1,s2>", courant_bracket(s1, s2) + courant_bracket(s2, s1) -
                                                       GSection::covector(ext_d(PForm::function(c, pairing(s1, s2)))));
    });
    add("courant", "big_D_leibniz", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 2);
        auto s = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 1);
        auto f = random_function(rng, c, 2);
        d.zero("D_X(f s)", big_D(x, f * s, r) -
                               (f * big_D(x, s, r) + x.apply(f) * apply_rr(r, s) - r.apply(x).apply(f) * s));
    });
    add("courant", "D_bracket_skew", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 2);
        GSection sym = bracket_Dr(s1, s2, r) + bracket_Dr(s2, s1, r);
        d.zero("sym", sym - GSection::covector(ext_d(PForm::function(c, pairing(apply_rr(r, s1), s2)))));
        d.zero("identity r", bracket_Dr(s1, s2, OneOneTensor::identity(c)) - courant_bracket(s1, s2));
    });
    add("courant", "contracted_bracket", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 2);
        d.zero("T_N - (N_r, 0)", contracted_torsion(s1, s2, r) - GSection::vector(nijenhuis_on(r, s1.vec, s2.vec)));
        d.zero("identity r", contracted_bracket(s1, s2, OneOneTensor::identity(c)) - courant_bracket(s1, s2));
    });
    add("courant", "double_bracket", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 1);
        d.zero("dbl - (D bracket - <D s1, s2>)",
               double_bracket(s1, s2, r) - (bracket_Dr(s1, s2, r) - GSection::covector(concomitant_CL(s1, s2, r))));
        d.zero("identity r", double_bracket(s1, s2, OneOneTensor::identity(c)) - courant_bracket(s1, s2));
    });
    add("courant", "cour_im_1", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 2);
        d.zero("pr_T (r,r*) s - r pr_T s", apply_rr(r, s).vec - r.apply(s.vec));
    });
    add("courant", "cour_im_2", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 2);
        auto s = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 2);
        d.zero("pr_T D_X s - D_X pr_T s", big_D(x, s, r).vec - D_r(x, s.vec, r));
    });
    add("courant", "cour_im_3", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 1);
        GSection lhs = apply_rr(r, courant_bracket(s1, s2));
        GSection rhs = courant_bracket(s1, apply_rr(r, s2)) - big_D(s2.vec, s1, r) -
                       GSection::covector(concomitant_CL(s1, s2, r));
        d.zero("lhs - rhs", lhs - rhs);
    });
    add("courant", "cour_im_4", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        auto z = random_vector_field(rng, c, 1);
        auto r = random_oneone(rng, c, 1);
        GSection lhs = big_D(z, courant_bracket(s1, s2), r);
        GSection rhs = courant_bracket(s1, big_D(z, s2, r)) - courant_bracket(s2, big_D(z, s1, r)) +
                       big_D(lie_bracket(s2.vec, z), s1, r) - big_D(lie_bracket(s1.vec, z), s2, r) -
                       GSection::covector(interior(z, ext_d(concomitant_CL(s1, s2, r))));
        d.zero("lhs - rhs", lhs - rhs);
    });
    add("courant", "Dr_square", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto x = random_vector_field(rng, c, 1), y = random_vector_field(rng, c, 1);
        auto s = random_section(rng, c, 2);
        auto r = random_oneone(rng, c, 1);
        VectorField v = lie_torsion(r, s.vec, x, y);
        PForm f = -interior(nijenhuis_on(r, x, y), ext_d(s.form));
        PForm nstar = nijenhuis_torsion(r).dual(s.form);
        if (c.dim() > 2) f += interior(x, interior(y, ext_d(nstar)));
        d.zero("D^2 - torsion terms", D_square(x, y, s, r) - GSection(v, f));
        auto q = OneOneTensor::scalar_multiple(c, random_function(rng, c, 2));
        d.zero("D^2 for Nijenhuis r", D_square(x, y, s, q));
        GSection comm = apply_rr(r, big_D(x, s, r)) - big_D(x, apply_rr(r, s), r);
        PForm tail(c, 1);
        for (int j = 0; j < c.dim(); ++j) tail[j] = pair(s.form, nijenhuis_on(r, x, coord(c, j)));
        d.zero("[(r,r*), D_X] s", comm - GSection(nijenhuis_on(r, x, s.vec), tail));
    });
    add("courant", "involutivity", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        auto s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2), s3 = random_section(rng, c, 1);
        auto r = random_oneone(rng, c, 1);
        auto v = [&](const GSection& s) { return GSection(r.apply(s.vec), s.form); };
        Scalar lhs = pairing(courant_bracket(v(s1), v(s2)), v(s3));
        Scalar rhs = pairing(courant_bracket(apply_rr(r, s1), s2), apply_rr(r, s3)) +
                     pairing(big_D(s2.vec, s1, r), apply_rr(r, s3)) + pair(s3.form, nijenhuis_on(r, s1.vec, s2.vec));
        d.zero("(r,id) side", lhs - rhs, c);
        auto w = [&](const GSection& s) { return GSection(s.vec, r.dual_apply(s.form)); };
        Scalar lhs2 = pairing(courant_bracket(w(s1), w(s2)), w(s3));
        Scalar rhs2 = pairing(courant_bracket(s1, s2), apply_rr(r, s3)) + pairing(big_D(s3.vec, s1, r), s2);
        d.zero("(id,r*) side", lhs2 - rhs2, c);
    });

    // ---- dirac
    add("dirac", "mm_alt", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = random_bivector(rng, c, 2);
        auto x = random_vector_field(rng, c, 2);
        auto a = random_form(rng, c, 1, 2);
        OneOneTensor r = random_oneone(rng, c, 1);
        d.zero("R(X,a) - (pi# D*_X a - D_X pi# a)",
               concomitant_R(pi, r, x, a) - (pi.sharp(D_r_star(x, a, r)) - D_r(x, pi.sharp(a), r)));
    });
    add("dirac", "R_C_duality", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = random_bivector(rng, c, 1);
        auto x = random_vector_field(rng, c, 2);
        auto a = random_form(rng, c, 1, 2), b = random_form(rng, c, 1, 2);
        OneOneTensor r1 = OneOneTensor::scalar_multiple(c, random_function(rng, c, 2));
        OneOneTensor r2 = gauge_transform(pi, random_form(rng, c, 2, 1)).r;
        d.zero("scalar r", pair(b, concomitant_R(pi, r1, x, a)) - pair(concomitant_C(pi, r1, a, b), x), c);
        d.zero("gauge r", pair(b, concomitant_R(pi, r2, x, a)) - pair(concomitant_C(pi, r2, a, b), x), c);
    });
    add("dirac", "S_relation", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        OneOneTensor r = OneOneTensor::scalar_multiple(c, random_function(rng, c, 2));
        PForm w = random_form(rng, c, 2, 2);
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        PForm corr(c, 1);
        if (c.dim() > 2) corr = interior(r.apply(y), interior(x, ext_d(w)));
        d.zero("S~ - S - dw(X, rY)", concomitant_S_tilde(w, r, x, y) - concomitant_S(w, r, x, y) - corr);
    });
    add("dirac", "S_tilde_formula", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        OneOneTensor r = OneOneTensor::scalar_multiple(c, random_function(rng, c, 2));
        PForm w = random_form(rng, c, 2, 2);
        auto x = random_vector_field(rng, c, 2), y = random_vector_field(rng, c, 2);
        PForm expected(c, 1);
        if (c.dim() > 2) {
            PForm wr = to_form(form_r(w, r));
            expected = interior(y, interior(x, ext_d(wr))) - interior(y, interior(r.apply(x), ext_d(w)));
        }
        d.zero("S~ - (d w_r - (dw)_r)(X,Y)", concomitant_S_tilde(w, r, x, y) - expected);
    });
    add("dirac", "graph_concomitant", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = random_bivector(rng, c, 2);
        OneOneTensor r = random_oneone(rng, c, 1);
        GFrame l = make_graph_poisson(pi);
        for (int i = 0; i < c.dim(); ++i)
            for (int j = 0; j < c.dim(); ++j) {
                PForm cl = concomitant_CL(l[i], l[j], r);
                for (int k = 0; k < c.dim(); ++k)
                    d.zero("C_L(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                           cl[k] + pair(dx(c, j), concomitant_R(pi, r, coord(c, k), dx(c, i))), c);
            }
    });
    add("dirac", "pn_equivalence", {R2}, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = random_bivector(rng, c, 1);
        std::uniform_int_distribution<int> pick(0, 2);
        int kind = pick(rng);
        OneOneTensor r = kind == 0   ? random_oneone(rng, c, 1)
                         : kind == 1 ? OneOneTensor::scalar_multiple(c, random_function(rng, c, 1))
                                     : OneOneTensor::scalar_multiple(c, c.constant(Coeff(3)));
        const bool oracle = intertwines(pi, r) && R_vanishes(pi, r);
        d.holds("checks == oracle", compat_checks(make_graph_poisson(pi), r) == oracle, c);
    });
    add("dirac", "presymplectic_equivalence", {R2}, [](Rng& rng, const Chart& c, Defects& d) {
        PForm w = random_form(rng, c, 2, 1);
        std::uniform_int_distribution<int> pick(0, 1);
        OneOneTensor r = pick(rng) ? random_oneone(rng, c, 1)
                                   : OneOneTensor::scalar_multiple(c, random_function(rng, c, 1));
        bool flat_ok = true, s_ok = true;
        for (int j = 0; j < c.dim(); ++j) {
            if (!(flat(w, r.apply(coord(c, j))) == r.dual_apply(flat(w, coord(c, j))))) flat_ok = false;
            for (int k = 0; k < c.dim(); ++k)
                if (flat_ok && !concomitant_S_tilde(w, r, coord(c, j), coord(c, k)).is_zero()) s_ok = false;
        }
        d.holds("checks == oracle", compat_checks(make_graph_presymplectic(w), r) == (flat_ok && s_ok), c);
    });
    add("dirac", "hierarchy_recursion", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector p = random_bivector(rng, c, 1);
        Scalar shift = c.var(c.dim() - 1) * c.var(c.dim() - 1) + c.one();
        OneOneTensor q = OneOneTensor::scalar_multiple(c, random_function(rng, c, 1) + shift);
        for (unsigned n = 1; n <= 2; ++n)
            d.holds("pi recursion n=" + std::to_string(n),
                    same_span(hierarchy(make_graph_poisson(p), q, n, HierarchySide::n0),
                              make_graph_poisson(deformed_bivector(p, q.power(n)))),
                    c);
        PForm w = random_form(rng, c, 2, 1);
        for (unsigned n = 1; n <= 2; ++n) {
            PForm wn = to_form(form_r(w, q.power(n)));
            d.holds("omega recursion n=" + std::to_string(n),
                    same_span(hierarchy(make_graph_presymplectic(w), q, n, HierarchySide::zero_n),
                              make_graph_presymplectic(wn)),
                    c);
        }
    });
    add("dirac", "hierarchy_projections", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Scalar shift = c.var(0) * c.var(0) + c.one();
        OneOneTensor q = OneOneTensor::scalar_multiple(c, random_function(rng, c, 1) + shift);
        GFrame lw = make_graph_presymplectic(random_form(rng, c, 2, 1));
        auto k0 = null_distribution(lw).basis;
        auto k1 = null_distribution(hierarchy(lw, q, 1, HierarchySide::n0)).basis;
        d.holds("null rank", k0.size() == k1.size(), c);
        std::vector<GSection> both;
        for (auto& v : k0) both.push_back(GSection::vector(v));
        for (auto& v : k1) both.push_back(GSection::vector(v));
        d.holds("null spans", k0.empty() || generic_rank(section_matrix(both)) == k0.size(), c);

        GFrame lp = make_graph_poisson(random_bivector(rng, c, 1));
        GFrame h = hierarchy(lp, q, 2, HierarchySide::zero_n);
        auto v0 = vector_matrix(lp.sections), v1 = vector_matrix(h.sections);
        const std::size_t n = static_cast<std::size_t>(c.dim());
        FracMatrix vv(n, 2 * n, c.dim());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < n; ++a) {
                vv(i, a) = v0(i, a);
                vv(i, n + a) = v1(i, a);
            }
        d.holds("vector spans", generic_rank(vv) == generic_rank(v0) && generic_rank(v1) == generic_rank(v0), c);
    });
    add("dirac", "invertible", {P2}, [](Rng& rng, const Chart& c, Defects& d) {
        Scalar a = random_profile(rng, c, 0) * random_profile(rng, c, 0) + c.one();
        Scalar b = random_profile(rng, c, 1) * random_profile(rng, c, 1) + c.constant(Coeff(2));
        OneOneTensor r = OneOneTensor::diagonal(c, {a, b});
        OneOneTensor rinv = OneOneTensor::diagonal(c, {c.one() / a, c.one() / b});
        GFrame l = make_split({coord(c, 1)});
        bool direct = dirac_nijenhuis_report(l, r).compatible() == Verdict::pass;
        bool inverse = dirac_nijenhuis_report(l, rinv).compatible() == Verdict::pass;
        d.holds("compatibility passes to r^-1", !direct || inverse, c);
        for (unsigned n = 1; n <= 2; ++n)
            d.holds("L_(0,n)(r) = L_(n,0)(r^-1), n=" + std::to_string(n),
                    same_span(hierarchy(l, r, n, HierarchySide::zero_n), hierarchy(l, rinv, n, HierarchySide::n0)), c);
    });
    add("dirac", "involutive_01", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = bivector(c, 0, 1, c.one());
        PForm b = ext_d(random_form(rng, c, 1, 2));
        GaugeData g = gauge_transform(pi, b);
        GFrame l = make_graph_poisson(pi);
        d.holds("compatible", dirac_nijenhuis_report(l, g.r).compatible() == Verdict::pass, c);
        GFrame l01 = hierarchy(l, g.r, 1, HierarchySide::zero_n);
        d.holds("lagrangian", check_lagrangian(l01).passed(), c);
        d.holds("involutive", check_involutive(l01).passed(), c);
    });

    // ---- holomorphic
    add("holomorphic", "phi_complex_linear", {R2, C2}, [](Rng& rng, const Chart& c, Defects& d) {
        ComplexStructure j = ComplexStructure::standard(c);
        GSection s = random_section(rng, c, 2);
        ComplexGSection lhs = phi_map(apply_rr(j.tensor(), s), j), rhs = phi_map(s, j);
        d.zero("re", lhs.re + rhs.im);
        d.zero("im", lhs.im - rhs.re);
    });
    add("holomorphic", "phi_pairing", {R2, C2}, [](Rng& rng, const Chart& c, Defects& d) {
        ComplexStructure j = ComplexStructure::standard(c);
        const OneOneTensor& r = j.tensor();
        GSection s1 = random_section(rng, c, 2), s2 = random_section(rng, c, 2);
        Scalar z = complex_pairing(phi_map(s1, j), phi_map(s2, j));
        Scalar expected_im = -(pair(s1.form, r.apply(s2.vec)) + pair(s2.form, r.apply(s1.vec)));
        d.zero("re", z.real_part() - pairing(s1, s2), c);
        d.zero("im", z.imag_part() - expected_im, c);
    });
    add("holomorphic", "hierarchy_square", {C2}, [](Rng& rng, const Chart& c, Defects& d) {
        ComplexStructure j = ComplexStructure::standard(c);
        const OneOneTensor& r = j.tensor();
        Bivector pi = pn_bivector(random_holomorphic(rng, 1));
        GFrame l = make_graph_poisson(pi);
        Bivector pi_j = deformed_bivector(pi, r);
        d.holds("L_(0,1) = graph(-pi_J)", same_span(hierarchy(l, r, 1, HierarchySide::zero_n), make_graph_poisson(-pi_j)),
                c);
        GFrame l10 = hierarchy(l, r, 1, HierarchySide::n0);
        GFrame minus = hierarchy(l10, r, 1, HierarchySide::n0);
        d.holds("L_(1,0) = graph(pi_J)", same_span(l10, make_graph_poisson(pi_j)), c);
        d.holds("L- = graph(-pi)", same_span(minus, make_graph_poisson(-pi)), c);
        GFrame back = hierarchy(hierarchy(minus, r, 1, HierarchySide::n0), r, 1, HierarchySide::n0);
        d.holds("fourth power", same_span(back, l), c);
    }, 4);

    // ---- algebroid
    add("algebroid", "koszul_bracket", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        Bivector pi = random_poisson(rng, c, 2);
        DiracAlgebroid da = dirac_to_algebroid(make_graph_poisson(pi));
        for (int i = 0; i < c.dim(); ++i)
            for (int j = 0; j < c.dim(); ++j) {
                PForm k = koszul_bracket(pi, dx(c, i), dx(c, j));
                ASection expected(k.size() == 0 ? 0 : static_cast<std::size_t>(c.dim()), c.zero());
                for (int a = 0; a < c.dim(); ++a) expected[a] = k[a];
                d.zero("[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] - [dx,dx]_pi",
                       da.algebroid.structure[i][j] - expected, c);
            }
    });
    add("algebroid", "transversality", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        d.holds("graph(pi)", dirac_to_algebroid(make_graph_poisson(random_poisson(rng, c, 2))).transversal, c);
        d.holds("graph(w)",
                dirac_to_algebroid(make_graph_presymplectic(ext_d(random_form(rng, c, 1, 2)))).transversal, c);
        VectorField v = random_vector_field(rng, c, 1);
        if (v.is_zero()) v = coord(c, 0);
        d.holds("split", dirac_to_algebroid(make_split({v})).transversal, c);
    });
    add("algebroid", "frame_order", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        GFrame l = make_graph_poisson(random_poisson(rng, c, 2));
        const int n = c.dim();
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = (k + 1) % n;
        std::vector<GSection> s;
        for (int k : perm) s.push_back(l[k]);
        DiracAlgebroid a = dirac_to_algebroid(l);
        DiracAlgebroid b = dirac_to_algebroid(GFrame(c, s, l.kind));
        d.holds("algebroid verdicts", check_algebroid(a.algebroid).verdict == check_algebroid(b.algebroid).verdict, c);
        d.holds("IM verdicts",
                check_IM_form(a.algebroid, a.form).verdict == check_IM_form(b.algebroid, b.form).verdict, c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    d.zero("c permuted", b.algebroid.structure[i][j][k] - a.algebroid.structure[perm[i]][perm[j]][perm[k]],
                           c);
    });
    add("algebroid", "scaled_balance", kPlanar, [](Rng& rng, const Chart& c, Defects& d) {
        std::vector<std::pair<AlgebroidData, IMForm>> cases;
        DiracAlgebroid da = dirac_to_algebroid(make_graph_poisson(random_poisson(rng, c, 2)));
        cases.emplace_back(da.algebroid, da.form);
        cases.emplace_back(AlgebroidData::tangent(c), tangent_form(random_form(rng, c, 2, 2)));
        for (const auto& [a, f] : cases) {
            const int m = a.rank();
            std::uniform_int_distribution<int> pick(0, m - 1);
            int i = pick(rng), j = pick(rng);
            ASection s1 = a.scaled(random_poly_scalar(rng, c.dim(), 2), a.unit(i));
            ASection s2 = a.scaled(random_poly_scalar(rng, c.dim(), 2), a.unit(j)) + a.unit((j + 1) % m);
            auto defects = im_form_defects(a, f, s1, s2);
            const char* names[] = {"mu bracket", "nu bracket", "symmetry"};
            for (std::size_t k = 0; k < defects.size(); ++k) d.zero(names[k], defects[k]);
        }
    });
    return reg;
}

}  // namespace

const std::vector<Identity>& identity_registry() {
    static const std::vector<Identity> reg = build_registry();
    return reg;
}

IdentityOutcome run_identity(const Identity& id, std::uint64_t seed, unsigned instances_per_chart) {
    IdentityOutcome out;
    out.identity = &id;
    Rng rng(seed ^ fnv1a64(id.module + "." + id.name));
    const unsigned per_chart = std::max(1u, instances_per_chart / std::max(1u, id.divisor));
    for (const Chart& c : id.charts)
        for (unsigned k = 0; k < per_chart; ++k) {
            ++out.instances;
            Defects d;
            try {
                id.instance(rng, c, d);
            } catch (const std::exception& e) {
                ++out.failures;
                if (out.error.empty() && !out.witness) out.error = e.what();
                continue;
            }
            if (!d.ok()) {
                ++out.failures;
                if (!out.witness && out.error.empty()) out.witness = d.first();
            }
        }
    return out;
}

std::vector<IdentityOutcome> run_identities(std::uint64_t seed, unsigned instances_per_chart) {
    std::vector<IdentityOutcome> out;
    for (const auto& id : identity_registry()) out.push_back(run_identity(id, seed, instances_per_chart));
    return out;
}

}  // namespace dnk::cli
