#pragma once

#include <cstdint>

#include "padlat/lattice.hpp"
#include "padlat/relation.hpp"

namespace padlat {

/// splitmix64 stream: tiny, seedable, identical on every platform.  Not for
/// cryptography; for reproducible test-case generation only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        s_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t s_;
};

/// Seed for trial #index of a run keyed by master.  Trials are independent
/// streams, so a run can be sharded or replayed one trial at a time.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

/// Random element of GL_n(O_p): permutation * unit diagonal * two unitriangular
/// factors, entries of size up to p^bound.
Matrix random_unimodular(const PadicContext& ctx, int n, long bound, Rng& rng);

/// Random invertible matrix U1 diag(p^{d_i}) U2 with d_i in [-bound, bound].
Matrix random_invertible(const PadicContext& ctx, int n, long bound, Rng& rng);

/// Random lattice with elementary divisor exponents in [-bound, bound].
Lattice random_lattice(const PadicContext& ctx, int n, long bound, Rng& rng);

/// Random lattice relation: a random lattice in dimension 2n.
Relation random_relation(const PadicContext& ctx, int n, long bound, Rng& rng);

/// Random nonzero vector with entries num/p^e, |num| <= p^bound, e <= bound.
std::vector<Scalar> random_vector(const PadicContext& ctx, int n, long bound, Rng& rng);

} // namespace padlat
