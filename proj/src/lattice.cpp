#include "padlat/lattice.hpp"

#include <algorithm>
#include <cassert>

namespace padlat {

namespace {

void require_same(const Lattice& a, const Lattice& b, const char* op) {
    if (a.context() != b.context())
        throw ContextMismatch(std::string(op) + ": lattices over different primes");
    if (a.dim() != b.dim())
        throw ContextMismatch(std::string(op) + ": lattices of different dimension");
}

} // namespace

Lattice Lattice::from_generators(const PadicContext& ctx, int n,
                                 const std::vector<std::vector<Scalar>>& gens) {
    if (n < 1)
        throw std::invalid_argument("lattice dimension must be positive");
    Matrix m(n, static_cast<int>(gens.size()));
    for (int j = 0; j < static_cast<int>(gens.size()); ++j) {
        if (static_cast<int>(gens[j].size()) != n)
            throw std::invalid_argument("generator length does not match dimension");
        for (int i = 0; i < n; ++i)
            m(i, j) = gens[j][i];
    }
    return from_columns(ctx, m);
}

Lattice Lattice::from_columns(const PadicContext& ctx, const Matrix& cols) {
    if (cols.rows() < 1)
        throw std::invalid_argument("lattice dimension must be positive");
    return Lattice(ctx, hnf_canonical(ctx, cols));
}

Lattice Lattice::standard(const PadicContext& ctx, int n) {
    if (n < 1)
        throw std::invalid_argument("lattice dimension must be positive");
    return Lattice(ctx, Matrix::identity(n));
}

bool operator==(const Lattice& a, const Lattice& b) {
    require_same(a, b, "equality");
    return a.basis_ == b.basis_;
}

std::optional<long> norm_exponent(const Lattice& l, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != l.dim())
        throw ContextMismatch("norm: vector length does not match lattice dimension");
    // Coordinates of v in the lattice basis; the norm reads off their worst
    // (most negative) valuation.
    std::vector<Scalar> x = inverse(l.basis()) * v;
    bool found = false;
    long worst = 0;
    for (const Scalar& c : x) {
        if (sgn(c) == 0)
            continue;
        long val = valuation_nonzero(l.context(), c);
        if (!found || -val > worst) {
            worst = -val;
            found = true;
        }
    }
    if (!found)
        return std::nullopt;
    return worst;
}

bool member(const Lattice& l, const std::vector<Scalar>& v) {
    std::optional<long> e = norm_exponent(l, v);
    return !e || *e <= 0;
}

Lattice sum(const Lattice& a, const Lattice& b) {
    require_same(a, b, "sum");
    return Lattice::from_columns(a.context(), hconcat(a.basis(), b.basis()));
}

Lattice dual(const Lattice& l) {
    return Lattice::from_columns(l.context(), transpose(inverse(l.basis())));
}

Lattice meet(const Lattice& a, const Lattice& b) {
    require_same(a, b, "meet");
    return dual(sum(dual(a), dual(b)));
}

ComplexDistance complex_distance(const Lattice& r, const Lattice& s) {
    require_same(r, s, "complex_distance");
    std::vector<long> e = snf_exponents(r.context(), inverse(r.basis()) * s.basis());
    ComplexDistance k;
    k.k.resize(e.size());
    for (std::size_t j = 0; j < e.size(); ++j)
        k.k[j] = -e[j];
    return k;
}

Matrix adapted_basis(const Lattice& r, const Lattice& s) {
    require_same(r, s, "adapted_basis");
    // R = A_R O^n and A_R^{-1} A_S = U D V: the columns of A_R U are a basis
    // of R, and scaling column j by p^{-k_j} = D_jj gives a basis of S.
    SnfDecomposition d = snf_decompose(r.context(), inverse(r.basis()) * s.basis());
    return r.basis() * d.left;
}

QuotientInvariants quotient_invariants(const Lattice& l, const Lattice& m) {
    ComplexDistance k = complex_distance(l, m);
    QuotientInvariants q;
    for (long kj : k.k)
        if (kj > 0)
            q.pos.push_back(kj);
    for (auto it = k.k.rbegin(); it != k.k.rend(); ++it)
        if (*it < 0)
            q.neg.push_back(-*it);
    return q;
}

Subspace::Subspace(const PadicContext& ctx, const Matrix& basis) : ctx_(ctx), basis_(basis) {
    if (basis.cols() < 1 || basis.cols() > basis.rows())
        throw std::invalid_argument("subspace dimension out of range");
    if (rank(basis) != basis.cols())
        throw RankError("subspace basis is linearly dependent");
}

Lattice restrict_to_subspace(const Lattice& l, const Subspace& w) {
    if (l.context() != w.context())
        throw ContextMismatch("restrict: lattice and subspace over different primes");
    if (l.dim() != w.ambient_dim())
        throw ContextMismatch("restrict: ambient dimension mismatch");
    // L meet W in W-coordinates is { x : (A_L^{-1} W) x integral }, i.e. the
    // dual-style preimage of O^n under C = A_L^{-1} W.  Row-reducing C to a
    // square Hermite form H turns that condition into x in H^{-T} O^j.
    Matrix c = inverse(l.basis()) * w.basis();
    Matrix h = hnf_canonical(l.context(), transpose(c));
    return Lattice::from_columns(l.context(), inverse(transpose(h)));
}

long minimax_value(const Lattice& r, const Lattice& s, const Subspace& w) {
    require_same(r, s, "minimax_value");
    Lattice rw = restrict_to_subspace(r, w);
    Lattice sw = restrict_to_subspace(s, w);
    return complex_distance(rw, sw).k.back();
}

Lattice transform(const Matrix& g, const Lattice& l) {
    if (g.rows() != l.dim() || g.cols() != l.dim())
        throw ContextMismatch("transform: matrix shape does not match lattice");
    return Lattice::from_columns(l.context(), g * l.basis());
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    if (a.context() != b.context())
        throw ContextMismatch("direct_sum: lattices over different primes");
    return Lattice::from_columns(a.context(), block_diag(a.basis(), b.basis()));
}

Lattice scale_by_power(const Lattice& l, long e) {
    Matrix m = l.basis();
    Scalar f = p_power(l.context(), e);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) *= f;
    return Lattice::from_columns(l.context(), m);
}

long window_bound(const Lattice& l) {
    long lo = min_entry_valuation(l.context(), l.basis());
    long hi = min_entry_valuation(l.context(), inverse(l.basis()));
    return std::max({0L, -lo, -hi});
}

} // namespace padlat
