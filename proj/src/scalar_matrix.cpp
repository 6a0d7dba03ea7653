#include "covstack/scalar_matrix.hpp"

#include <stdexcept>

namespace covstack {

ScalarMatrix mat_identity(std::size_t n, const Field &field) {
    ScalarMatrix m(n, std::vector<Scalar>(n, Scalar::zero(field)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(field);
    return m;
}

ScalarMatrix mat_mul(const ScalarMatrix &a, const ScalarMatrix &b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw std::domain_error("matrix dimension mismatch");
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Field f = a[0][0].field();
    ScalarMatrix r(n, std::vector<Scalar>(m, Scalar::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][t] * b[t][j];
        }
    return r;
}

ScalarMatrix mat_scale(const ScalarMatrix &a, const Scalar &c) {
    ScalarMatrix r = a;
    for (auto &row : r)
        for (auto &v : row) v = v * c;
    return r;
}

Scalar mat_det(const ScalarMatrix &a) {
    std::size_t n = a.size();
    if (n == 0) throw std::domain_error("determinant of empty matrix");
    if (a[0].size() != n) throw std::domain_error("determinant of non-square matrix");
    Field f = a[0][0].field();
    ScalarMatrix m = a;
    Scalar det = Scalar::one(f);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Scalar::zero(f);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        Scalar inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Scalar fac = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] = m[i][j] - fac * m[k][j];
        }
    }
    return det;
}

ScalarMatrix mat_inverse(const ScalarMatrix &a) {
    std::size_t n = a.size();
    if (n == 0 || a[0].size() != n) throw std::domain_error("inverse of non-square matrix");
    Field f = a[0][0].field();
    ScalarMatrix m = a;
    ScalarMatrix inv = mat_identity(n, f);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("non-invertible matrix");
        if (piv != k) {
            std::swap(m[piv], m[k]);
            std::swap(inv[piv], inv[k]);
        }
        Scalar s = m[k][k].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] = m[k][j] * s;
            inv[k][j] = inv[k][j] * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            Scalar fac = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] = m[i][j] - fac * m[k][j];
                inv[i][j] = inv[i][j] - fac * inv[k][j];
            }
        }
    }
    return inv;
}

std::size_t mat_rank(ScalarMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        Scalar s = m[rank][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * s;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c].is_zero()) continue;
            Scalar fac = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - fac * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool mat_equal(const ScalarMatrix &a, const ScalarMatrix &b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

} // namespace covstack
