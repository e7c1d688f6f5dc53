#pragma once

#include "dsp/scalar.hpp"

#include <optional>
#include <vector>

namespace dsp {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static Matrix identity(int n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::vector<Scalar> row(int i) const;

    // Columns [c0, c0 + count).
    Matrix columns(int c0, int count) const;
    Matrix append_rows(const Matrix& below) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
bool is_invertible(const Matrix& m);
Scalar determinant(Matrix m);
// Unique solution of a square invertible system; nullopt when singular.
std::optional<std::vector<Scalar>> solve_square(const Matrix& a, const std::vector<Scalar>& b);

// Affine solution set of a*x = b: a particular solution and the kernel rank.
struct AffineSolution {
    bool consistent = false;
    int rank = 0;
    int dimension = 0;
    std::vector<Scalar> particular;
};
AffineSolution solve_affine(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace dsp
