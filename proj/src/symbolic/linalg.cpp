#include "dnk/symbolic/linalg.hpp"

#include <algorithm>

namespace dnk {

namespace {

using PolyRow = std::vector<Polynomial>;

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return (a * b.divide_exact(gcd(a, b))).monic();
}

// Multiply a row of rational functions by the lcm of its denominators.
PolyRow clear_row(const std::vector<const Scalar*>& row, int nvars) {
    Polynomial l(nvars, Coeff(1));
    for (const Scalar* s : row)
        if (!s->is_zero()) l = lcm(l, s->den());
    PolyRow out;
    out.reserve(row.size());
    for (const Scalar* s : row) {
        if (s->den().is_one())
            out.push_back(s->num() * l);
        else
            out.push_back(s->num() * l.divide_exact(s->den()));
    }
    return out;
}

struct Echelon {
    std::vector<PolyRow> rows;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)
};

// Fraction-free forward elimination; pivots are searched in columns [0, pivot_cols).
Echelon bareiss(std::vector<PolyRow> a, std::size_t pivot_cols, int nvars) {
    Echelon e;
    const std::size_t m = a.size();
    const std::size_t width = m ? a[0].size() : 0;
    Polynomial prev(nvars, Coeff(1));
    std::size_t k = 0;
    while (k < m) {
        std::size_t pi = m, pj = 0;
        for (std::size_t i = k; i < m && pi == m; ++i)
            for (std::size_t j = 0; j < pivot_cols; ++j)
                if (!a[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        std::swap(a[k], a[pi]);
        const Polynomial p = a[k][pj];
        for (std::size_t i = k + 1; i < m; ++i) {
            const Polynomial f = a[i][pj];
            for (std::size_t c = 0; c < width; ++c) {
                Polynomial v = p * a[i][c];
                if (!f.is_zero() && !a[k][c].is_zero()) v -= f * a[k][c];
                a[i][c] = prev.is_one() ? std::move(v) : v.divide_exact(prev);
            }
        }
        prev = p;
        e.pivots.emplace_back(k, pj);
        ++k;
    }
    e.rows = std::move(a);
    return e;
}

std::vector<PolyRow> cleared_rows(const FracMatrix& m, const ScalarVec* rhs) {
    std::vector<PolyRow> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<const Scalar*> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(&m(i, j));
        if (rhs) row.push_back(&(*rhs)[i]);
        rows.push_back(clear_row(row, m.nvars()));
    }
    return rows;
}

ScalarVec normalise_vector(const ScalarVec& v, int nvars) {
    Polynomial l(nvars, Coeff(1));
    for (const auto& s : v)
        if (!s.is_zero()) l = lcm(l, s.den());
    std::vector<Polynomial> polys;
    for (const auto& s : v) polys.push_back(s.den().is_one() ? s.num() * l : s.num() * l.divide_exact(s.den()));
    Polynomial g(nvars);
    for (const auto& p : polys) g = gcd(g, p);
    ScalarVec out;
    Coeff lead(0);
    for (auto& p : polys) {
        if (!g.is_one() && !p.is_zero()) p = p.divide_exact(g);
        if (lead.is_zero() && !p.is_zero()) lead = p.leading_coeff();
    }
    for (auto& p : polys) out.emplace_back(p.scaled(Coeff(1) / lead));
    return out;
}

}  // namespace

std::vector<ScalarVec> kernel_basis(const FracMatrix& m) {
    const int nv = m.nvars();
    Echelon e = bareiss(cleared_rows(m, nullptr), m.cols(), nv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto [r, c] : e.pivots) is_pivot[c] = true;
    std::vector<ScalarVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        ScalarVec x(m.cols(), Scalar(nv));
        x[f] = Scalar(nv, Coeff(1));
        for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
            auto [r, j] = *it;
            Scalar s(nv);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (c != j && !x[c].is_zero() && !e.rows[r][c].is_zero()) s += Scalar(e.rows[r][c]) * x[c];
            x[j] = -s / Scalar(e.rows[r][j]);
        }
        basis.push_back(normalise_vector(x, nv));
    }
    return basis;
}

std::optional<ScalarVec> solve_linear(const FracMatrix& m, const ScalarVec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs length");
    const int nv = m.nvars();
    const std::size_t n = m.cols();
    Echelon e = bareiss(cleared_rows(m, &rhs), n, nv);
    for (std::size_t i = e.pivots.size(); i < m.rows(); ++i)
        if (!e.rows[i][n].is_zero()) return std::nullopt;
    ScalarVec x(n, Scalar(nv));
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        auto [r, j] = *it;
        Scalar s(e.rows[r][n]);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j && !x[c].is_zero() && !e.rows[r][c].is_zero()) s -= Scalar(e.rows[r][c]) * x[c];
        x[j] = s / Scalar(e.rows[r][j]);
    }
    return x;
}

std::size_t generic_rank(const FracMatrix& m) {
    return bareiss(cleared_rows(m, nullptr), m.cols(), m.nvars()).pivots.size();
}

std::size_t rank_at(const FracMatrix& m, const std::vector<Coeff>& point) {
    std::vector<std::vector<Coeff>> a(m.rows(), std::vector<Coeff>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).eval(point);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m.cols() && rank < m.rows(); ++j) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][j].is_zero()) ++p;
        if (p == m.rows()) continue;
        std::swap(a[rank], a[p]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][j].is_zero()) continue;
            Coeff f = a[i][j] / a[rank][j];
            for (std::size_t c = j; c < m.cols(); ++c) a[i][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::vector<Coeff> sample_point(int nvars, unsigned index, unsigned retry) {
    std::vector<Coeff> p;
    for (int k = 0; k < nvars; ++k) p.emplace_back(static_cast<long>(index * nvars + k + 1 + 7 * retry));
    return p;
}

std::size_t SampledRank::min_rank() const {
    return ranks.empty() ? 0 : *std::min_element(ranks.begin(), ranks.end());
}

SampledRank sample_ranks(const FracMatrix& m, unsigned count) {
    SampledRank out;
    for (unsigned j = 0; j < count; ++j) {
        bool done = false;
        for (int retry = 0; retry <= kMaxSampleRetries && !done; ++retry) {
            try {
                out.ranks.push_back(rank_at(m, sample_point(m.nvars(), j, static_cast<unsigned>(retry))));
                done = true;
            } catch (const DenominatorVanishes&) {
            }
        }
        if (!done) out.all_evaluated = false;
    }
    return out;
}

}  // namespace dnk
