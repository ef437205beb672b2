#include "padlat/random.hpp"

namespace padlat {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    // One splitmix step decorrelates consecutive indices.
    Rng r(master + (index + 1) * 0x9E3779B97F4A7C15ull);
    return r.next();
}

namespace {

long ipow(long base, long exp) {
    long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace

Matrix random_unimodular(const PadicContext& ctx, int n, long bound, Rng& rng) {
    long span = ipow(ctx.p(), bound);
    // permutation
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        long u;
        do
            u = rng.range(1, span);
        while (u % ctx.p() == 0);
        m(perm[i], i) = u;
    }
    // unitriangular shears on both sides keep the determinant a unit
    Matrix up = Matrix::identity(n), lo = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            up(i, j) = rng.range(0, span - 1);
            lo(j, i) = rng.range(0, span - 1);
        }
    return m * up * lo;
}

Matrix random_invertible(const PadicContext& ctx, int n, long bound, Rng& rng) {
    Matrix u1 = random_unimodular(ctx, n, bound, rng);
    Matrix u2 = random_unimodular(ctx, n, bound, rng);
    Matrix d(n, n);
    for (int i = 0; i < n; ++i)
        d(i, i) = p_power(ctx, rng.range(-bound, bound));
    return u1 * d * u2;
}

Lattice random_lattice(const PadicContext& ctx, int n, long bound, Rng& rng) {
    return Lattice::from_columns(ctx, random_invertible(ctx, n, bound, rng));
}

Relation random_relation(const PadicContext& ctx, int n, long bound, Rng& rng) {
    return Relation(n, random_lattice(ctx, 2 * n, bound, rng));
}

std::vector<Scalar> random_vector(const PadicContext& ctx, int n, long bound, Rng& rng) {
    long span = ipow(ctx.p(), bound);
    while (true) {
        std::vector<Scalar> v(n);
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            long num = rng.range(-span, span);
            long e = rng.range(0, bound);
            v[i] = Scalar(num) / p_power(ctx, e);
            if (num != 0)
                nonzero = true;
        }
        if (nonzero)
            return v;
    }
}

} // namespace padlat
