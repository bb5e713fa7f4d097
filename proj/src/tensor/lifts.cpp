#include "dnk/tensor/lifts.hpp"

#include "dnk/symbolic/linalg.hpp"

#include <optional>

namespace dnk {

Chart tangent_chart(const Chart& base) { return base.doubled("v"); }
Chart cotangent_chart(const Chart& base) { return base.doubled("p"); }

OneOneTensor tangent_lift(const OneOneTensor& r) {
    const Chart& base = r.chart();
    const int n = base.dim();
    const Chart t = tangent_chart(base);
    const auto map = base.embedding_into(t);
    OneOneTensor k(t);
    for (int j = 0; j < n; ++j) {
        const VectorField dj = VectorField::coordinate(base, j);
        for (int i = 0; i < n; ++i) {
            Scalar rij = r.at(i, j).reindex(t.dim(), map);
            k.at(i, j) = rij;
            k.at(n + i, n + j) = rij;
        }
        // Vertical part: v^m (D^r_{d_j} d_m)^i.
        for (int m = 0; m < n; ++m) {
            const VectorField d = D_r(dj, VectorField::coordinate(base, m), r);
            for (int i = 0; i < n; ++i)
                if (!d[i].is_zero()) k.at(n + i, j) += t.var(n + m) * d[i].reindex(t.dim(), map);
        }
    }
    return k;
}

PForm canonical_symplectic(const Chart& base) {
    const int n = base.dim();
    const Chart c = cotangent_chart(base);
    PForm w(c, 2);
    for (int i = 0; i < n; ++i) w.set({n + i, i}, c.one());
    return w;
}

OneOneTensor cotangent_lift(const OneOneTensor& r) {
    const Chart& base = r.chart();
    const int n = base.dim();
    const Chart c = cotangent_chart(base);
    const auto map = base.embedding_into(c);
    const PForm can = canonical_symplectic(base);

    // phi_r(x, p) = (x, r* p).
    std::vector<Scalar> phi;
    for (int k = 0; k < n; ++k) phi.push_back(c.var(k));
    for (int j = 0; j < n; ++j) {
        Scalar s = c.zero();
        for (int i = 0; i < n; ++i)
            if (!r.at(i, j).is_zero()) s += c.var(n + i) * r.at(i, j).reindex(c.dim(), map);
        phi.push_back(s);
    }
    const PForm pulled = pullback(can, c, phi);

    // (i_W can)_b = sum_a W^a can_{ab}.
    FracMatrix a(2 * n, 2 * n, c.dim());
    for (int b = 0; b < 2 * n; ++b)
        for (int col = 0; col < 2 * n; ++col) a(b, col) = can.get({col, b});
    OneOneTensor k(c);
    for (int col = 0; col < 2 * n; ++col) {
        ScalarVec rhs;
        for (int b = 0; b < 2 * n; ++b) rhs.push_back(pulled.get({col, b}));
        auto sol = solve_linear(a, rhs);
        if (!sol) throw std::logic_error("cotangent lift: canonical form is degenerate");
        for (int i = 0; i < 2 * n; ++i) k.at(i, col) = (*sol)[i];
    }
    return k;
}

VectorField vertical_lift(const VectorField& u) {
    const Chart& base = u.chart();
    const int n = base.dim();
    const Chart t = tangent_chart(base);
    const auto map = base.embedding_into(t);
    VectorField out(t);
    for (int i = 0; i < n; ++i) out[n + i] = u[i].reindex(t.dim(), map);
    return out;
}

OneOneTensor vertical_tensor(const Chart& base, const std::vector<VectorField>& values) {
    const int n = base.dim();
    if (static_cast<int>(values.size()) != n) throw std::invalid_argument("vertical tensor: one value per coordinate field");
    const Chart t = tangent_chart(base);
    const auto map = base.embedding_into(t);
    OneOneTensor out(t);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.at(n + i, j) = values[j][i].reindex(t.dim(), map);
    return out;
}

std::vector<Scalar> lift_pairing_defects(const OneOneTensor& r) {
    const Chart& base = r.chart();
    const int n = base.dim();
    std::vector<std::string> vars = base.variables();
    for (const auto& v : base.variables()) vars.push_back("v_" + v);
    for (const auto& v : base.variables()) vars.push_back("p_" + v);
    const Chart all(base.name() + "_vp", vars, base.mode());
    const auto bmap = base.embedding_into(all);

    const OneOneTensor kt = embed(tangent_lift(r), all);
    const OneOneTensor kc = embed(cotangent_lift(r), all);
    auto v = [&](int i) { return all.var(n + i); };
    auto p = [&](int i) { return all.var(2 * n + i); };
    auto rr = [&](int i, int j) { return r.at(i, j).reindex(all.dim(), bmap); };

    std::vector<Scalar> defects;
    for (int dir = 0; dir < 3 * n; ++dir) {
        // Unit direction: base (dx), fibre of TM (dv) or fibre of T*M (dp).
        VectorField u(all), w(all);
        std::vector<Scalar> xdot(n, all.zero()), vdot(n, all.zero()), pdot(n, all.zero());
        if (dir < n) {
            xdot[dir] = all.one();
        } else if (dir < 2 * n) {
            vdot[dir - n] = all.one();
        } else {
            pdot[dir - 2 * n] = all.one();
        }
        for (int i = 0; i < n; ++i) {
            u[i] = xdot[i];
            u[n + i] = vdot[i];
            w[i] = xdot[i];
            w[2 * n + i] = pdot[i];
        }
        const VectorField ku = kt.apply(u);
        const VectorField kw = kc.apply(w);
        for (int i = 0; i < n; ++i) defects.push_back(ku[i] - kw[i]);

        Scalar lhs = all.zero();
        for (int i = 0; i < n; ++i) lhs += kw[2 * n + i] * v(i) + p(i) * ku[n + i];

        Scalar rhs = all.zero();
        for (int i = 0; i < n; ++i) {
            Scalar rv = all.zero(), tl = all.zero();
            for (int j = 0; j < n; ++j) {
                rv += rr(i, j) * v(j);
                tl += rr(i, j) * vdot[j];
                for (int k = 0; k < n; ++k)
                    if (!xdot[k].is_zero()) tl += r.at(i, j).diff(k).reindex(all.dim(), bmap) * v(j) * xdot[k];
            }
            rhs += pdot[i] * rv + p(i) * tl;
        }
        defects.push_back(lhs - rhs);
    }
    return defects;
}

std::vector<Scalar> intertwining_defects(const Bivector& pi, const OneOneTensor& r) {
    require_same_chart(pi.chart(), r.chart(), "lift intertwining");
    const Chart& base = r.chart();
    const int n = base.dim();
    const Chart c = cotangent_chart(base);
    const auto cmap = base.embedding_into(c);

    // pi#(x, p) = (x, v) with v^j = p_i pi^{ij}.
    std::vector<Scalar> image;
    for (int k = 0; k < n; ++k) image.push_back(c.var(k));
    for (int j = 0; j < n; ++j) {
        Scalar s = c.zero();
        for (int i = 0; i < n; ++i)
            if (!pi.at(i, j).is_zero()) s += c.var(n + i) * pi.at(i, j).reindex(c.dim(), cmap);
        image.push_back(s);
    }
    std::vector<std::vector<Scalar>> jac(2 * n, std::vector<Scalar>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) jac[a][b] = image[a].diff(b);

    const OneOneTensor kc = cotangent_lift(r);
    const OneOneTensor kt_raw = tangent_lift(r);
    std::vector<std::optional<Scalar>> images(image.begin(), image.end());
    std::vector<std::vector<Scalar>> kt(2 * n, std::vector<Scalar>(2 * n));
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) kt[a][b] = kt_raw.at(a, b).compose(c.dim(), images);

    std::vector<Scalar> defects;
    for (int a = 0; a < 2 * n; ++a)
        for (int b = 0; b < 2 * n; ++b) {
            Scalar s = c.zero();
            for (int m = 0; m < 2 * n; ++m) {
                if (!jac[a][m].is_zero() && !kc.at(m, b).is_zero()) s += jac[a][m] * kc.at(m, b);
                if (!kt[a][m].is_zero() && !jac[m][b].is_zero()) s -= kt[a][m] * jac[m][b];
            }
            defects.push_back(s);
        }
    return defects;
}

}  // namespace dnk
