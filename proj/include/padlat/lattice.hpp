#pragma once

#include <optional>
#include <vector>

#include "padlat/matrix.hpp"

namespace padlat {

/// Full-rank O_p-lattice in Q^n, stored by its canonical (column Hermite)
/// basis.  Two Lattice values are equal as objects iff they are equal as
/// modules, so operator== is mathematical equality.
class Lattice {
public:
    /// Span of arbitrary generators (each of length n); RankError if the span
    /// is not all of Q^n.
    static Lattice from_generators(const PadicContext& ctx, int n,
                                   const std::vector<std::vector<Scalar>>& gens);

    /// Span of the columns of an n x c matrix, c >= n.
    static Lattice from_columns(const PadicContext& ctx, const Matrix& cols);

    /// O_p^n.
    static Lattice standard(const PadicContext& ctx, int n);

    const PadicContext& context() const { return ctx_; }
    int dim() const { return basis_.rows(); }

    /// Canonical upper triangular basis; columns generate the lattice.
    const Matrix& basis() const { return basis_; }

    friend bool operator==(const Lattice& a, const Lattice& b);
    friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

private:
    Lattice(const PadicContext& ctx, Matrix canonical)
        : ctx_(ctx), basis_(std::move(canonical)) {}

    PadicContext ctx_;
    Matrix basis_;
};

/// The distance invariant of an ordered lattice pair: the non-increasing
/// integer vector k with S = span{ p^{-k_j} f_j } for some basis {f_j} of R.
struct ComplexDistance {
    std::vector<long> k;

    friend bool operator==(const ComplexDistance& a, const ComplexDistance& b) {
        return a.k == b.k;
    }
    friend bool operator!=(const ComplexDistance& a, const ComplexDistance& b) {
        return !(a == b);
    }
};

/// Linear subspace of Q^n of dimension j >= 1, held as an n x j basis matrix.
class Subspace {
public:
    Subspace(const PadicContext& ctx, const Matrix& basis);

    const PadicContext& context() const { return ctx_; }
    int ambient_dim() const { return basis_.rows(); }
    int dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

private:
    PadicContext ctx_;
    Matrix basis_;
};

/// ||v||_L = p^e where -e is the largest integer t with v in p^t L.  Returns
/// e; nullopt encodes v = 0 (norm 0, exponent -infinity).  v lies in L iff
/// e <= 0.
std::optional<long> norm_exponent(const Lattice& l, const std::vector<Scalar>& v);

bool member(const Lattice& l, const std::vector<Scalar>& v);

Lattice sum(const Lattice& a, const Lattice& b);
Lattice meet(const Lattice& a, const Lattice& b);

/// Dual lattice { y : <y, x> in O_p for all x in L }.
Lattice dual(const Lattice& l);

/// k(R, S), non-increasing.  k = 0 iff R = S; swapping arguments reverses and
/// negates the vector.
ComplexDistance complex_distance(const Lattice& r, const Lattice& s);

/// A basis f_1..f_n of R (as matrix columns) with S = span{ p^{-k_j} f_j },
/// k = complex_distance(r, s).
Matrix adapted_basis(const Lattice& r, const Lattice& s);

/// Invariant factors of the two finite p-groups attached to a lattice pair:
/// `pos` describes M / (L meet M), `neg` describes L / (L meet M), both as
/// partitions (weakly decreasing positive integers).  Equivalent data to
/// complex_distance: pos = positive part of k(L, M), neg = reversed negated
/// negative part (k_j > 0 in the directions where M is the larger lattice).
struct QuotientInvariants {
    std::vector<long> pos;
    std::vector<long> neg;

    friend bool operator==(const QuotientInvariants& a, const QuotientInvariants& b) {
        return a.pos == b.pos && a.neg == b.neg;
    }
    friend bool operator!=(const QuotientInvariants& a, const QuotientInvariants& b) {
        return !(a == b);
    }
};

QuotientInvariants quotient_invariants(const Lattice& l, const Lattice& m);

/// L intersect W as a full-rank lattice in W, expressed in the coordinates of
/// W's stored basis.
Lattice restrict_to_subspace(const Lattice& l, const Subspace& w);

/// Last entry of complex_distance(restrict R, restrict S) on W — the quantity
/// whose maximum over j-dimensional subspaces is k_j(R, S).
long minimax_value(const Lattice& r, const Lattice& s, const Subspace& w);

/// Image lattice g(L) for invertible g.
Lattice transform(const Matrix& g, const Lattice& l);

/// L x M inside Q^{dim L + dim M}.
Lattice direct_sum(const Lattice& a, const Lattice& b);

/// p^e L.
Lattice scale_by_power(const Lattice& l, long e);

/// Smallest w >= 0 with p^w O^n contained in L contained in p^{-w} O^n.
long window_bound(const Lattice& l);

} // namespace padlat
