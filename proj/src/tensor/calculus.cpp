#include "dnk/tensor/calculus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace dnk {

namespace {

// det[m[a][b]] by permutation expansion; sizes here are at most the chart dimension.
Scalar determinant(const std::vector<std::vector<Scalar>>& m, int nvars) {
    const int p = static_cast<int>(m.size());
    if (p == 0) return Scalar(nvars, Coeff(1));
    if (p == 1) return m[0][0];
    if (p == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar det(nvars);
    do {
        std::vector<int> tmp = perm;
        int sign = sort_with_sign(tmp);
        Scalar prod(nvars, Coeff(sign));
        for (int a = 0; a < p && !prod.is_zero(); ++a) prod *= m[a][perm[a]];
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart(), y.chart(), "Lie bracket");
    VectorField out(x.chart());
    for (int i = 0; i < x.dim(); ++i) out[i] = x.apply(y[i]) - y.apply(x[i]);
    return out;
}

PForm ext_d(const PForm& w) {
    const int n = w.dim();
    const int p = w.degree();
    PForm out(w.chart(), p + 1);
    if (p + 1 > n) return out;
    const auto& tuples = index_tuples(n, p + 1);
    for (std::size_t pos = 0; pos < tuples.size(); ++pos) {
        const auto& k = tuples[pos];
        Scalar s = w.chart().zero();
        for (int a = 0; a <= p; ++a) {
            std::vector<int> rest;
            for (int b = 0; b <= p; ++b)
                if (b != a) rest.push_back(k[b]);
            Scalar c = w.at(tuple_position(n, rest)).diff(k[a]);
            if (c.is_zero()) continue;
            if (a % 2)
                s -= c;
            else
                s += c;
        }
        out.at(pos) = s;
    }
    return out;
}

PForm interior(const VectorField& x, const PForm& w) {
    require_same_chart(x.chart(), w.chart(), "interior product");
    if (w.degree() == 0) throw std::invalid_argument("interior product of a function");
    const int n = w.dim();
    PForm out(w.chart(), w.degree() - 1);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const auto& j = out.tuple(pos);
        Scalar s = w.chart().zero();
        for (int k = 0; k < n; ++k) {
            if (x[k].is_zero()) continue;
            std::vector<int> idx{k};
            idx.insert(idx.end(), j.begin(), j.end());
            Scalar c = w.get(idx);
            if (!c.is_zero()) s += x[k] * c;
        }
        out.at(pos) = s;
    }
    return out;
}

PForm wedge(const PForm& a, const PForm& b) {
    require_same_chart(a.chart(), b.chart(), "wedge product");
    const int n = a.dim();
    const int p = a.degree(), q = b.degree();
    PForm out(a.chart(), p + q);
    if (p + q > n) return out;
    const auto& splits = index_tuples(p + q, p);
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const auto& k = out.tuple(pos);
        Scalar s = a.chart().zero();
        for (const auto& sel : splits) {
            std::vector<int> left, right;
            std::size_t si = 0;
            for (int t = 0; t < p + q; ++t) {
                if (si < sel.size() && sel[si] == t) {
                    left.push_back(k[t]);
                    ++si;
                } else {
                    right.push_back(k[t]);
                }
            }
            const Scalar& ca = p ? a.at(tuple_position(n, left)) : a.at(0);
            if (ca.is_zero()) continue;
            const Scalar& cb = q ? b.at(tuple_position(n, right)) : b.at(0);
            if (cb.is_zero()) continue;
            std::vector<int> all = left;
            all.insert(all.end(), right.begin(), right.end());
            int sign = sort_with_sign(all);
            Scalar prod = ca * cb;
            if (sign > 0)
                s += prod;
            else
                s -= prod;
        }
        out.at(pos) = s;
    }
    return out;
}

PForm lie_deriv_form(const VectorField& x, const PForm& w) {
    require_same_chart(x.chart(), w.chart(), "Lie derivative");
    if (w.degree() == 0) return PForm::function(w.chart(), x.apply(w.at(0)));
    PForm out = ext_d(interior(x, w));
    if (w.degree() < w.dim()) out += interior(x, ext_d(w));
    return out;
}

OneOneTensor lie_deriv_tensor(const VectorField& x, const OneOneTensor& r) {
    require_same_chart(x.chart(), r.chart(), "Lie derivative");
    const int n = r.dim();
    OneOneTensor out(r.chart());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Scalar s = x.apply(r.at(i, j));
            for (int k = 0; k < n; ++k) {
                if (!r.at(k, j).is_zero()) {
                    Scalar dx = x[i].diff(k);
                    if (!dx.is_zero()) s -= r.at(k, j) * dx;
                }
                if (!r.at(i, k).is_zero()) {
                    Scalar dx = x[k].diff(j);
                    if (!dx.is_zero()) s += r.at(i, k) * dx;
                }
            }
            out.at(i, j) = s;
        }
    return out;
}

Scalar eval_form(const PForm& w, const std::vector<VectorField>& args) {
    if (static_cast<int>(args.size()) != w.degree()) throw std::invalid_argument("form evaluation: argument count");
    for (const auto& a : args) require_same_chart(w.chart(), a.chart(), "form evaluation");
    const int p = w.degree();
    const int nv = w.dim();
    if (p == 0) return w.at(0);
    Scalar s = w.chart().zero();
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (w.at(pos).is_zero()) continue;
        const auto& idx = w.tuple(pos);
        std::vector<std::vector<Scalar>> m(p, std::vector<Scalar>(p));
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) m[a][b] = args[a][idx[b]];
        Scalar det = determinant(m, nv);
        if (!det.is_zero()) s += w.at(pos) * det;
    }
    return s;
}

CovFormValued form_r(const PForm& w, const OneOneTensor& r) {
    require_same_chart(w.chart(), r.chart(), "w_r");
    if (w.degree() < 1) throw std::invalid_argument("w_r needs degree >= 1");
    const int n = w.dim();
    CovFormValued out(w.chart(), w.degree());
    const auto& tails = index_tuples(n, w.degree() - 1);
    for (int j = 0; j < n; ++j)
        for (std::size_t pos = 0; pos < tails.size(); ++pos) {
            Scalar s = w.chart().zero();
            for (int i = 0; i < n; ++i) {
                if (r.at(i, j).is_zero()) continue;
                std::vector<int> idx{i};
                idx.insert(idx.end(), tails[pos].begin(), tails[pos].end());
                Scalar c = w.get(idx);
                if (!c.is_zero()) s += r.at(i, j) * c;
            }
            out.at(j, pos) = s;
        }
    return out;
}

namespace {

// Finds a component violating full antisymmetry.
bool skew_defect(const CovFormValued& t, Scalar* witness) {
    const int n = t.chart().dim();
    const int p = t.degree();
    if (p == 1) return false;
    const auto& tails = index_tuples(n, p - 1);
    for (int j = 0; j < n; ++j)
        for (std::size_t pos = 0; pos < tails.size(); ++pos) {
            const auto& tail = tails[pos];
            if (std::find(tail.begin(), tail.end(), j) == tail.end()) continue;
            if (!t.at(j, pos).is_zero()) {
                if (witness) *witness = t.at(j, pos);
                return true;
            }
        }
    for (const auto& s : index_tuples(n, p)) {
        std::vector<int> rest0(s.begin() + 1, s.end());
        Scalar ref = t.get(s[0], rest0);
        for (int a = 1; a < p; ++a) {
            std::vector<int> rest;
            for (int b = 0; b < p; ++b)
                if (b != a) rest.push_back(s[b]);
            Scalar v = t.get(s[a], rest);
            Scalar defect = (a % 2) ? v + ref : v - ref;
            if (!defect.is_zero()) {
                if (witness) *witness = defect;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

bool is_skew(const CovFormValued& t) { return !skew_defect(t, nullptr); }

std::optional<Scalar> skew_witness(const CovFormValued& t) {
    Scalar w;
    if (skew_defect(t, &w)) return w;
    return std::nullopt;
}

PForm to_form(const CovFormValued& t) {
    PForm out(t.chart(), t.degree());
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
        const auto& s = out.tuple(pos);
        out.at(pos) = t.get(s[0], std::vector<int>(s.begin() + 1, s.end()));
    }
    return out;
}

PForm flat(const PForm& b, const VectorField& x) {
    if (b.degree() != 2) throw std::invalid_argument("flat map needs a two-form");
    return interior(x, b);
}

PForm pullback(const PForm& w, const Chart& source, const std::vector<Scalar>& map) {
    if (static_cast<int>(map.size()) != w.dim()) throw std::invalid_argument("pullback: map arity");
    const int m = source.dim();
    const int p = w.degree();
    std::vector<std::optional<Scalar>> images(map.begin(), map.end());
    // Jacobian d map^a / d source^b.
    std::vector<std::vector<Scalar>> jac(map.size(), std::vector<Scalar>(m));
    for (std::size_t a = 0; a < map.size(); ++a)
        for (int b = 0; b < m; ++b) jac[a][b] = map[a].diff(b);
    std::vector<Scalar> composed(w.size());
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        if (!w.at(pos).is_zero()) composed[pos] = w.at(pos).compose(m, images);
    PForm out(source, p);
    if (p == 0) {
        out.at(0) = w.at(0).compose(m, images);
        return out;
    }
    for (std::size_t opos = 0; opos < out.size(); ++opos) {
        const auto& cols = out.tuple(opos);
        Scalar s = source.zero();
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w.at(pos).is_zero()) continue;
            const auto& rows = w.tuple(pos);
            std::vector<std::vector<Scalar>> sub(p, std::vector<Scalar>(p));
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b) sub[a][b] = jac[rows[a]][cols[b]];
            Scalar det = determinant(sub, m);
            if (!det.is_zero()) s += composed[pos] * det;
        }
        out.at(opos) = s;
    }
    return out;
}

Scalar embed(const Scalar& f, const Chart& from, const Chart& to) {
    return f.reindex(to.dim(), from.embedding_into(to));
}

VectorField embed(const VectorField& x, const Chart& to) {
    auto map = x.chart().embedding_into(to);
    VectorField out(to);
    for (int k = 0; k < x.dim(); ++k) out[map[k]] = x[k].reindex(to.dim(), map);
    return out;
}

PForm embed(const PForm& w, const Chart& to) {
    auto map = w.chart().embedding_into(to);
    PForm out(to, w.degree());
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        std::vector<int> idx;
        for (int i : w.tuple(pos)) idx.push_back(map[i]);
        out.set(idx, w.at(pos).reindex(to.dim(), map));
    }
    return out;
}

OneOneTensor embed(const OneOneTensor& r, const Chart& to) {
    auto map = r.chart().embedding_into(to);
    OneOneTensor out(to);
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) out.at(map[i], map[j]) = r.at(i, j).reindex(to.dim(), map);
    return out;
}

}  // namespace dnk
