#include "padlat/matrix.hpp"

#include <cassert>
#include <utility>

namespace padlat {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
    a_.resize(static_cast<std::size_t>(rows) * cols);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Scalar> Matrix::column(int c) const {
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

std::vector<Scalar> Matrix::row(int r) const {
    std::vector<Scalar> v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = (*this)(r, j);
    return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> r(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0)
                r[i] += a(i, j) * v[j];
    return r;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            t(j, i) = m(i, j);
    return t;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat row mismatch");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j)
            c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            c(a.rows() + i, a.cols() + j) = b(i, j);
    return c;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    Matrix a = m;
    Scalar det(1);
    for (int t = 0; t < n; ++t) {
        int piv = -1;
        for (int i = t; i < n; ++i)
            if (sgn(a(i, t)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            return Scalar(0);
        if (piv != t) {
            for (int j = t; j < n; ++j)
                std::swap(a(t, j), a(piv, j));
            det = -det;
        }
        det *= a(t, t);
        for (int i = t + 1; i < n; ++i) {
            if (sgn(a(i, t)) == 0)
                continue;
            Scalar q = a(i, t) / a(t, t);
            for (int j = t; j < n; ++j)
                a(i, j) -= q * a(t, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    Matrix a = m;
    Matrix r = Matrix::identity(n);
    for (int t = 0; t < n; ++t) {
        int piv = -1;
        for (int i = t; i < n; ++i)
            if (sgn(a(i, t)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            throw RankError("matrix is singular");
        if (piv != t)
            for (int j = 0; j < n; ++j) {
                std::swap(a(t, j), a(piv, j));
                std::swap(r(t, j), r(piv, j));
            }
        Scalar d = a(t, t);
        for (int j = 0; j < n; ++j) {
            a(t, j) /= d;
            r(t, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == t || sgn(a(i, t)) == 0)
                continue;
            Scalar q = a(i, t);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= q * a(t, j);
                r(i, j) -= q * r(t, j);
            }
        }
    }
    return r;
}

int rank(const Matrix& m) {
    Matrix a = m;
    int rk = 0;
    for (int c = 0; c < a.cols() && rk < a.rows(); ++c) {
        int piv = -1;
        for (int i = rk; i < a.rows(); ++i)
            if (sgn(a(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != rk)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a(rk, j), a(piv, j));
        for (int i = rk + 1; i < a.rows(); ++i) {
            if (sgn(a(i, c)) == 0)
                continue;
            Scalar q = a(i, c) / a(rk, c);
            for (int j = c; j < a.cols(); ++j)
                a(i, j) -= q * a(rk, j);
        }
        ++rk;
    }
    return rk;
}

long min_entry_valuation(const PadicContext& ctx, const Matrix& m) {
    bool found = false;
    long best = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) == 0)
                continue;
            long v = valuation_nonzero(ctx, m(i, j));
            if (!found || v < best) {
                best = v;
                found = true;
            }
        }
    if (!found)
        throw std::invalid_argument("min_entry_valuation of zero matrix");
    return best;
}

Matrix hnf_canonical(const PadicContext& ctx, const Matrix& m) {
    const int r = m.rows(), c = m.cols();
    if (r > c)
        throw RankError("fewer generators than the ambient dimension");

    std::vector<std::vector<Scalar>> pool(c);
    for (int j = 0; j < c; ++j)
        pool[j] = m.column(j);

    // Triangularize bottom-up.  At step i every column still in the pool is
    // already zero on rows i+1..r-1, so the chosen pivot column ends upper
    // triangular for free.
    std::vector<std::vector<Scalar>> piv(r);
    std::vector<long> diag(r);
    for (int i = r - 1; i >= 0; --i) {
        int best = -1;
        long bestval = 0;
        for (int j = 0; j < static_cast<int>(pool.size()); ++j) {
            if (sgn(pool[j][i]) == 0)
                continue;
            long v = valuation_nonzero(ctx, pool[j][i]);
            if (best < 0 || v < bestval) {
                best = j;
                bestval = v;
            }
        }
        if (best < 0)
            throw RankError("generators do not span the ambient space");
        std::vector<Scalar> col = std::move(pool[best]);
        pool.erase(pool.begin() + best);
        // Normalize the pivot to an exact prime power; the cofactor is a unit,
        // so dividing the whole column by it keeps the same span.
        Scalar pd = p_power(ctx, bestval);
        Scalar unit = col[i] / pd;
        if (unit != 1)
            for (int t = 0; t <= i; ++t)
                col[t] /= unit;
        for (auto& other : pool) {
            if (sgn(other[i]) == 0)
                continue;
            Scalar q = other[i] / pd; // valuation >= 0 by pivot minimality
            for (int t = 0; t < i; ++t)
                other[t] -= q * col[t];
            other[i] = 0;
        }
        piv[i] = std::move(col);
        diag[i] = bestval;
    }
    for (const auto& leftover : pool)
        for (const auto& e : leftover) {
            assert(sgn(e) == 0);
            (void)e;
        }

    // Off-diagonal reduction: bring H[i][j] (i < j) into the canonical residue
    // set mod p^{d_i}, working upward so later subtractions land on rows that
    // are still to be reduced.
    for (int j = 1; j < r; ++j)
        for (int i = j - 1; i >= 0; --i) {
            Scalar red = reduce_mod_power(ctx, piv[j][i], diag[i]);
            if (red == piv[j][i])
                continue;
            Scalar q = (piv[j][i] - red) / p_power(ctx, diag[i]);
            for (int t = 0; t <= i; ++t)
                piv[j][t] -= q * piv[i][t];
        }

    Matrix h(r, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i <= j; ++i)
            h(i, j) = piv[j][i];
    return h;
}

namespace {

// Shared Smith elimination.  Transforms are tracked against the invariant
// m = u * a * v: a row operation a <- E a updates u <- u E^{-1}, a column
// operation a <- a F updates v <- F^{-1} v.
std::vector<long> snf_core(const PadicContext& ctx, Matrix a, Matrix* u, Matrix* v) {
    const int n = a.rows();
    std::vector<long> exps(n);
    for (int t = 0; t < n; ++t) {
        int bi = -1, bj = -1;
        long bv = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j) {
                if (sgn(a(i, j)) == 0)
                    continue;
                long val = valuation_nonzero(ctx, a(i, j));
                if (bi < 0 || val < bv) {
                    bi = i;
                    bj = j;
                    bv = val;
                }
            }
        if (bi < 0)
            throw RankError("matrix is singular");
        if (bi != t) {
            for (int j = t; j < n; ++j)
                std::swap(a(t, j), a(bi, j));
            if (u)
                for (int i = 0; i < n; ++i)
                    std::swap((*u)(i, t), (*u)(i, bi));
        }
        if (bj != t) {
            for (int i = t; i < n; ++i)
                std::swap(a(i, t), a(i, bj));
            if (v)
                for (int j = 0; j < n; ++j)
                    std::swap((*v)(t, j), (*v)(bj, j));
        }
        exps[t] = bv;
        Scalar pd = p_power(ctx, bv);
        Scalar unit = a(t, t) / pd;
        if (unit != 1) {
            for (int j = t; j < n; ++j)
                a(t, j) /= unit;
            if (u)
                for (int i = 0; i < n; ++i)
                    (*u)(i, t) *= unit;
        }
        for (int i = t + 1; i < n; ++i) {
            if (sgn(a(i, t)) == 0)
                continue;
            Scalar q = a(i, t) / pd; // integral: the pivot has minimal valuation
            for (int j = t; j < n; ++j)
                a(i, j) -= q * a(t, j);
            if (u)
                for (int i2 = 0; i2 < n; ++i2)
                    (*u)(i2, t) += q * (*u)(i2, i);
        }
        for (int j = t + 1; j < n; ++j) {
            if (sgn(a(t, j)) == 0)
                continue;
            Scalar q = a(t, j) / pd;
            a(t, j) = 0; // rows below t in column t are already zero
            if (v)
                for (int j2 = 0; j2 < n; ++j2)
                    (*v)(t, j2) += q * (*v)(j, j2);
        }
    }
    for (int t = 1; t < n; ++t)
        assert(exps[t - 1] <= exps[t]); // pivot valuations cannot decrease
    return exps;
}

} // namespace

std::vector<long> snf_exponents(const PadicContext& ctx, const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("elementary divisors of non-square matrix");
    return snf_core(ctx, m, nullptr, nullptr);
}

SnfDecomposition snf_decompose(const PadicContext& ctx, const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("elementary divisors of non-square matrix");
    SnfDecomposition d;
    d.left = Matrix::identity(m.rows());
    d.right = Matrix::identity(m.rows());
    d.exponents = snf_core(ctx, m, &d.left, &d.right);
    return d;
}

Matrix kernel_sublattice(const PadicContext& ctx, const Matrix& b, const Matrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("kernel_sublattice needs a square lattice basis");
    if (b.cols() != a.rows())
        throw std::invalid_argument("kernel_sublattice shape mismatch");
    const int k = b.rows(), n = a.rows();

    // Column-reduce B*A, mirroring every column operation onto a copy of A.
    // Columns of C that end up zero correspond to combinations of the lattice
    // basis lying in ker B, and echelon structure makes them saturated.
    Matrix c = b * a;
    Matrix w = a;
    std::vector<bool> active(n, true);
    for (int i = 0; i < k; ++i) {
        int best = -1;
        long bestval = 0;
        for (int j = 0; j < n; ++j) {
            if (!active[j] || sgn(c(i, j)) == 0)
                continue;
            long v = valuation_nonzero(ctx, c(i, j));
            if (best < 0 || v < bestval) {
                best = j;
                bestval = v;
            }
        }
        if (best < 0)
            continue; // row already zero on the active columns
        for (int j = 0; j < n; ++j) {
            if (!active[j] || j == best || sgn(c(i, j)) == 0)
                continue;
            Scalar q = c(i, j) / c(i, best);
            for (int r2 = 0; r2 < k; ++r2)
                c(r2, j) -= q * c(r2, best);
            for (int r2 = 0; r2 < n; ++r2)
                w(r2, j) -= q * w(r2, best);
        }
        active[best] = false;
    }

    std::vector<int> keep;
    for (int j = 0; j < n; ++j)
        if (active[j]) {
            for (int i = 0; i < k; ++i) {
                assert(sgn(c(i, j)) == 0);
            }
            keep.push_back(j);
        }
    Matrix out(n, static_cast<int>(keep.size()));
    for (int jj = 0; jj < static_cast<int>(keep.size()); ++jj)
        for (int i = 0; i < n; ++i)
            out(i, jj) = w(i, keep[jj]);
    return out;
}

} // namespace padlat
