#include "padlat/relation.hpp"

#include <cassert>

namespace padlat {

namespace {

std::vector<Scalar> slice(const std::vector<Scalar>& v, int begin, int len) {
    return std::vector<Scalar>(v.begin() + begin, v.begin() + begin + len);
}

// Lattice spanned by a coordinate slice of the columns of m.
Lattice project_columns(const PadicContext& ctx, const Matrix& m, int begin, int len) {
    std::vector<std::vector<Scalar>> gens;
    for (int j = 0; j < m.cols(); ++j)
        gens.push_back(slice(m.column(j), begin, len));
    return Lattice::from_generators(ctx, len, gens);
}

void require_relation_pair(const Relation& a, const Relation& b, const char* op) {
    if (a.context() != b.context())
        throw ContextMismatch(std::string(op) + ": relations over different primes");
    if (a.dim() != b.dim())
        throw ContextMismatch(std::string(op) + ": relations of different dimension");
}

} // namespace

Relation::Relation(int n, Lattice carrier) : n_(n), carrier_(std::move(carrier)) {
    if (n < 1)
        throw std::invalid_argument("relation dimension must be positive");
    if (carrier_.dim() != 2 * n)
        throw ContextMismatch("relation carrier must live in doubled dimension");
}

Relation Relation::from_generators(const PadicContext& ctx, int n,
                                   const std::vector<std::vector<Scalar>>& gens) {
    if (n < 1)
        throw std::invalid_argument("relation dimension must be positive");
    return Relation(n, Lattice::from_generators(ctx, 2 * n, gens));
}

Lattice dom(const Relation& h) {
    return project_columns(h.context(), h.carrier().basis(), 0, h.dim());
}

Lattice im(const Relation& h) {
    return project_columns(h.context(), h.carrier().basis(), h.dim(), h.dim());
}

namespace {

// { x in carrier : Bx = 0 } for the two coordinate-vanishing constraints, and
// the surviving half of its basis as an n-dimensional lattice.
Lattice constrained_half(const Relation& h, bool vanish_target) {
    const int n = h.dim();
    Matrix b(n, 2 * n);
    for (int i = 0; i < n; ++i)
        b(i, (vanish_target ? n : 0) + i) = 1;
    Matrix k = kernel_sublattice(h.context(), b, h.carrier().basis());
    // Full rank is automatic: the carrier contains p^e O^{2n} for some e.
    assert(k.cols() == n);
    std::vector<std::vector<Scalar>> gens;
    for (int j = 0; j < k.cols(); ++j)
        gens.push_back(slice(k.column(j), vanish_target ? 0 : n, n));
    return Lattice::from_generators(h.context(), n, gens);
}

} // namespace

Lattice ker(const Relation& h) {
    return constrained_half(h, true);
}

Lattice indef(const Relation& h) {
    return constrained_half(h, false);
}

Lattice act(const Relation& h, const Lattice& r) {
    if (h.context() != r.context())
        throw ContextMismatch("act: relation and lattice over different primes");
    if (h.dim() != r.dim())
        throw ContextMismatch("act: relation and lattice dimension mismatch");
    // h(r) is the target projection of carrier meet (r x im h); boxing the
    // target side by im h loses nothing and keeps the meet full-rank.
    Lattice box = direct_sum(r, im(h));
    Lattice cut = meet(h.carrier(), box);
    return project_columns(h.context(), cut.basis(), h.dim(), h.dim());
}

Relation compose(const Relation& g, const Relation& h) {
    require_relation_pair(g, h, "compose");
    const int n = h.dim();
    // Pairs (x, y, z) with (x, y) in h and (y, z) in g: intersect
    // h x im(g) with dom(h) x g inside Q^{3n}, then drop the middle block.
    Lattice lhs = direct_sum(h.carrier(), im(g));
    Lattice rhs = direct_sum(dom(h), g.carrier());
    Lattice triple = meet(lhs, rhs);
    std::vector<std::vector<Scalar>> gens;
    for (int j = 0; j < triple.basis().cols(); ++j) {
        std::vector<Scalar> col = triple.basis().column(j);
        std::vector<Scalar> xz = slice(col, 0, n);
        std::vector<Scalar> z = slice(col, 2 * n, n);
        xz.insert(xz.end(), z.begin(), z.end());
        gens.push_back(std::move(xz));
    }
    return Relation::from_generators(g.context(), n, gens);
}

Matrix structure_map(const Relation& h) {
    const PadicContext& ctx = h.context();
    const int n = h.dim();
    Matrix c = h.carrier().basis(); // 2n x 2n, columns (x; y)

    // Column-eliminate the source block.  The pivot columns give a basis
    // a_i of dom together with lifts (a_i, b_i) through the relation; the
    // surviving columns have zero source part, so their targets span indef.
    std::vector<bool> active(2 * n, true);
    std::vector<int> pivot;
    for (int i = 0; i < n; ++i) {
        int best = -1;
        long bestval = 0;
        for (int j = 0; j < 2 * n; ++j) {
            if (!active[j] || sgn(c(i, j)) == 0)
                continue;
            long v = valuation_nonzero(ctx, c(i, j));
            if (best < 0 || v < bestval) {
                best = j;
                bestval = v;
            }
        }
        assert(best >= 0); // top rows of an invertible basis are independent
        for (int j = 0; j < 2 * n; ++j) {
            if (!active[j] || j == best || sgn(c(i, j)) == 0)
                continue;
            Scalar q = c(i, j) / c(i, best);
            for (int r = 0; r < 2 * n; ++r)
                c(r, j) -= q * c(r, best);
            c(i, j) = 0;
        }
        pivot.push_back(best);
        active[best] = false;
    }

    Matrix a(n, n), b(n, n), d(n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) {
            a(r, i) = c(r, pivot[static_cast<std::size_t>(i)]);
            b(r, i) = c(n + r, pivot[static_cast<std::size_t>(i)]);
        }
    int di = 0;
    for (int j = 0; j < 2 * n; ++j)
        if (active[j]) {
            for (int r = 0; r < n; ++r)
                d(r, di) = c(n + r, j);
            ++di;
        }
    assert(di == n);

    // b is only determined modulo indef; shift by p^m * indef until the map
    // is invertible (at most n powers can fail, they would be eigenvalues).
    Matrix bm = b;
    for (long m = 0; sgn(determinant(bm)) == 0; ++m) {
        bm = b;
        for (int i = 0; i < n; ++i)
            for (int r = 0; r < n; ++r)
                bm(r, i) += p_power(ctx, m) * d(r, i);
    }
    return bm * inverse(a);
}

bool decomposition_identity(const Relation& h, const Lattice& l) {
    if (h.context() != l.context() || h.dim() != l.dim())
        throw ContextMismatch("decomposition_identity: mismatched operands");
    Matrix g = structure_map(h);
    Lattice lhs = act(h, l);
    Lattice rhs = sum(transform(g, meet(l, dom(h))), indef(h));
    return lhs == rhs;
}

Relation graph_approx(const PadicContext& ctx, const Matrix& g, long j) {
    if (g.rows() != g.cols())
        throw std::invalid_argument("graph_approx needs a square matrix");
    const int n = g.rows();
    if (sgn(determinant(g)) == 0)
        throw RankError("graph_approx needs an invertible matrix");
    Scalar shrink = p_power(ctx, -j);
    Scalar grow = p_power(ctx, j);
    std::vector<std::vector<Scalar>> gens;
    for (int c = 0; c < n; ++c) {
        // p^{-j} (e_c, g e_c): the graph of g, opened up by p^{-j}.
        std::vector<Scalar> v(2 * n);
        v[c] = shrink;
        for (int i = 0; i < n; ++i)
            v[n + i] = shrink * g(i, c);
        gens.push_back(std::move(v));
    }
    for (int c = 0; c < 2 * n; ++c) {
        // p^j O^{2n}: the closing-in floor.
        std::vector<Scalar> v(2 * n);
        v[c] = grow;
        gens.push_back(std::move(v));
    }
    return Relation::from_generators(ctx, n, gens);
}

long graph_approx_threshold(const PadicContext& ctx, const Matrix& g, const Lattice& l) {
    long mg = min_entry_valuation(ctx, g);
    long mgi = min_entry_valuation(ctx, inverse(g));
    long spread = std::max({0L, -mg, -mgi});
    return spread + window_bound(l);
}

} // namespace padlat
