#include "gk0/normal_form.hpp"

#include <utility>

namespace gk0 {

namespace {

void axpy(IntRow& dst, const Integer& q, const IntRow& src) {
    if (q == 0) return;
    for (std::size_t k = 0; k < dst.size(); ++k)
        if (src[k] != 0) dst[k] -= q * src[k];
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Echelonizes rows using unimodular row operations, pivoting only in columns
/// [0, pivot_cols). Returns the pivot columns in row order.
std::vector<std::size_t> echelonize(IntMatrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < pivot_cols && r < m.size(); ++col) {
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t i = r; i < m.size(); ++i)
                if (m[i][col] != 0 && (best == m.size() || abs(m[i][col]) < abs(m[best][col]))) best = i;
            if (best == m.size()) break;
            std::swap(m[r], m[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                axpy(m[i], floor_div(m[i][col], m[r][col]), m[r]);
                if (m[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (r < m.size() && m[r][col] != 0) {
            if (m[r][col] < 0)
                for (auto& e : m[r]) e = -e;
            pivots.push_back(col);
            ++r;
        }
    }
    return pivots;
}

} // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols) {
    auto pivots = echelonize(rows, ncols);
    rows.resize(pivots.size());
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        const std::size_t c = pivots[p];
        for (std::size_t i = 0; i < p; ++i) axpy(rows[i], floor_div(rows[i][c], rows[p][c]), rows[p]);
    }
    return rows;
}

std::size_t lattice_rank(IntMatrix rows, std::size_t ncols) { return echelonize(rows, ncols).size(); }

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
    const std::size_t nrows = a.size();
    IntMatrix aug(ncols, IntRow(nrows + ncols));
    for (std::size_t s = 0; s < ncols; ++s) {
        for (std::size_t t = 0; t < nrows; ++t) aug[s][t] = a[t][s];
        aug[s][nrows + s] = 1;
    }
    auto pivots = echelonize(aug, nrows);
    IntMatrix basis;
    for (std::size_t i = pivots.size(); i < aug.size(); ++i) basis.emplace_back(aug[i].begin() + nrows, aug[i].end());
    return hermite_normal_form(std::move(basis), ncols);
}

bool lattice_contains(const IntMatrix& hnf, IntRow v) {
    for (const auto& row : hnf) {
        std::size_t c = 0;
        while (row[c] == 0) ++c;
        for (std::size_t k = 0; k < c; ++k)
            if (v[k] != 0) return false;
        if (!mpz_divisible_p(v[c].get_mpz_t(), row[c].get_mpz_t())) return false;
        axpy(v, v[c] / row[c], row);
    }
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

IntRow mat_vec(const IntMatrix& a, const IntRow& v) {
    IntRow out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) out[i] += a[i][j] * v[j];
    return out;
}

} // namespace gk0
