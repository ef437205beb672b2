#pragma once

#include <vector>

#include "padlat/scalar.hpp"

namespace padlat {

/// Dense rational matrix, row-major.  Value type: copy freely.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& operator()(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<Scalar> column(int c) const;
    std::vector<Scalar> row(int r) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v);
Matrix transpose(const Matrix& m);

/// Columns of a glued side by side with columns of b (row counts must agree).
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Block diagonal [[a, 0], [0, b]].
Matrix block_diag(const Matrix& a, const Matrix& b);

Scalar determinant(const Matrix& m);

/// Gauss-Jordan inverse; RankError if singular.
Matrix inverse(const Matrix& m);

int rank(const Matrix& m);

/// Minimum p-adic valuation over the nonzero entries.
/// The zero matrix has no finite minimum: std::invalid_argument.
long min_entry_valuation(const PadicContext& ctx, const Matrix& m);

/// Column Hermite form over the valuation ring O_p = Z_(p).
///
/// Input: r x c with r <= c and full row rank (else RankError).  Output: the
/// unique r x r upper triangular H with H = M * U for some U in GL_c(O_p)
/// (padded by dropped zero columns), diagonal H[i][i] = p^{d_i}, and every
/// off-diagonal entry H[i][j] (i < j) reduced mod p^{d_i} in the sense of
/// reduce_mod_power.  Two generator matrices span the same O_p-module iff
/// their Hermite forms are identical.
Matrix hnf_canonical(const PadicContext& ctx, const Matrix& m);

/// Elementary divisor exponents of a square invertible M over O_p, ascending:
/// M = U diag(p^{e_1} <= ... <= p^{e_n}) V with U, V in GL_n(O_p).
/// RankError if singular.
std::vector<long> snf_exponents(const PadicContext& ctx, const Matrix& m);

struct SnfDecomposition {
    std::vector<long> exponents; // ascending
    Matrix left;                 // U
    Matrix right;                // V
};

/// Smith decomposition M = left * diag(p^exponents) * right with both
/// transforms in GL_n(O_p).  The exponents are canonical; the transforms are
/// one valid witness (not unique).
SnfDecomposition snf_decompose(const PadicContext& ctx, const Matrix& m);

/// Saturated kernel: columns K with span_{O_p} K = { x in col-span A : Bx = 0 },
/// A square invertible m x m, B any k x m.  The result has one column per
/// dimension of ker B intersect span A (possibly zero columns), each an
/// A-generator combination, and spans an O_p-module that is a direct summand
/// of span A.
Matrix kernel_sublattice(const PadicContext& ctx, const Matrix& b, const Matrix& a);

} // namespace padlat
