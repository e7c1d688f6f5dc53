#include "dsp/matrix.hpp"

#include <stdexcept>

namespace dsp {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Scalar> Matrix::row(int i) const {
    return std::vector<Scalar>(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                               a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

Matrix Matrix::columns(int c0, int count) const {
    Matrix m(rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) m(i, j) = (*this)(i, c0 + j);
    return m;
}

Matrix Matrix::append_rows(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (below.cols_ != cols_) throw std::invalid_argument("column mismatch");
    Matrix m(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(rows_ + i, j) = below(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> out(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
}

std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    int n = m.rows();
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Scalar();
        if (p != c) {
            for (int k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Scalar f = m(r, c) * inv;
            for (int k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return det;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<std::vector<Scalar>> solve_square(const Matrix& a, const std::vector<Scalar>& b) {
    if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_square shape mismatch");
    AffineSolution s = solve_affine(a, b);
    if (!s.consistent || s.rank != a.cols()) return std::nullopt;
    return s.particular;
}

AffineSolution solve_affine(const Matrix& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve_affine shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<int> piv = rref(aug);
    AffineSolution s;
    s.consistent = piv.empty() || piv.back() != a.cols();
    s.rank = static_cast<int>(piv.size()) - (s.consistent ? 0 : 1);
    s.dimension = a.cols() - s.rank;
    if (!s.consistent) return s;
    s.particular.assign(a.cols(), Scalar());
    for (int k = 0; k < static_cast<int>(piv.size()); ++k) s.particular[piv[k]] = aug(k, a.cols());
    return s;
}

}  // namespace dsp
