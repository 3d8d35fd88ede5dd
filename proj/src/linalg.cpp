#include "lrc/linalg.hpp"

#include <stdexcept>

namespace lrc {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& f, Matrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int rows = (int)a.size(), cols = (int)a[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[r]);
        felem s = f.inv(a[r][c]);
        for (int j = 0; j < cols; ++j) a[r][j] = f.mul(a[r][j], s);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            felem k = a[i][c];
            for (int j = 0; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(k, a[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(const Field& f, Matrix a) { return (int)rref(f, a).size(); }

Matrix null_space(const Field& f, const Matrix& a) {
    if (a.empty()) return {};
    int cols = (int)a[0].size();
    Matrix m = a;
    std::vector<int> pivots = rref(f, m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    Matrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<felem> v(cols, 0);
        v[free] = 1;
        for (int r = 0; r < (int)pivots.size(); ++r)
            v[pivots[r]] = f.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    int n = (int)a.size(), k = (int)b.size(), m = (int)b[0].size();
    Matrix c(n, std::vector<felem>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            felem v = a[i][t];
            if (v == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] = f.add(c[i][j], f.mul(v, b[t][j]));
        }
    return c;
}

Matrix mat_mul_transpose(const Field& f, const Matrix& a, const Matrix& b) {
    Matrix c(a.size(), std::vector<felem>(b.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            felem acc = 0;
            for (std::size_t t = 0; t < a[i].size(); ++t)
                acc = f.add(acc, f.mul(a[i][t], b[j][t]));
            c[i][j] = acc;
        }
    return c;
}

bool is_zero_matrix(const Matrix& a) {
    for (const auto& row : a)
        for (felem v : row)
            if (v != 0) return false;
    return true;
}

std::vector<felem> vec_mat_mul(const Field& f, std::span<const felem> v, const Matrix& a) {
    if (a.empty()) throw std::invalid_argument("empty matrix");
    if (v.size() != a.size()) throw std::invalid_argument("vector/matrix size mismatch");
    std::vector<felem> out(a[0].size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = f.add(out[j], f.mul(v[i], a[i][j]));
    }
    return out;
}

} // namespace lrc
