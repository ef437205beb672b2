#pragma once

#include <cstdint>
#include <vector>

#include "padlat/lattice.hpp"

namespace padlat {

// Brute-force cross-check model.  A lattice L with p^a O^n <= L <= p^{-a} O^n
// is determined by the finite subgroup (p^a L) / (p^{2a} Z^n) of (Z/p^{2a})^n,
// and every operation below is computed on raw element sets by enumeration --
// no Hermite forms, no Smith forms, no rational arithmetic -- so agreement
// with the exact routines is meaningful evidence, not a shared-code tautology.

/// Window parameters: prime context plus radius a >= 0.
struct Window {
    Window(const PadicContext& c, long radius);

    PadicContext ctx;
    long a;

    friend bool operator==(const Window& x, const Window& y) {
        return x.ctx == y.ctx && x.a == y.a;
    }
    friend bool operator!=(const Window& x, const Window& y) { return !(x == y); }
};

/// Largest group we are willing to enumerate.
inline constexpr unsigned long kWindowBudget = 1000000;

/// Number of elements of (Z/p^{2a})^dim -- check against kWindowBudget before
/// building finite lattices of this shape.
unsigned long window_group_size(const Window& w, int dim);

/// Subgroup of (Z/p^{2a})^dim holding the window image of a lattice.
/// Elements are stored sorted, encoded in base p^{2a} (coordinate 0 least
/// significant).
class FiniteLattice {
public:
    FiniteLattice(const Window& w, int dim, std::vector<std::uint32_t> closed_sorted);

    /// Subgroup generated by the given coordinate vectors (entries already
    /// reduced mod p^{2a}).
    static FiniteLattice generated(const Window& w, int dim,
                                   const std::vector<std::vector<std::uint32_t>>& gens);

    const Window& window() const { return w_; }
    int dim() const { return dim_; }
    std::uint32_t modulus() const { return mod_; }
    const std::vector<std::uint32_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }

    bool contains(std::uint32_t encoded) const;

    friend bool operator==(const FiniteLattice& x, const FiniteLattice& y) {
        return x.w_ == y.w_ && x.dim_ == y.dim_ && x.elems_ == y.elems_;
    }
    friend bool operator!=(const FiniteLattice& x, const FiniteLattice& y) {
        return !(x == y);
    }

private:
    Window w_;
    int dim_;
    std::uint32_t mod_;
    std::vector<std::uint32_t> elems_;
};

/// Window image of l (throws std::invalid_argument unless
/// p^a O^n <= l <= p^{-a} O^n, or if the enumeration budget is exceeded).
FiniteLattice project_to_window(const Lattice& l, const Window& w);

/// Exact lattice with the given window image (the unique one within the
/// window bounds).
Lattice lift_from_window(const FiniteLattice& f);

FiniteLattice oracle_sum(const FiniteLattice& a, const FiniteLattice& b);
FiniteLattice oracle_meet(const FiniteLattice& a, const FiniteLattice& b);

/// Invariant factor partitions of G/(F meet G) (`pos`) and F/(F meet G)
/// (`neg`), matching quotient_invariants(F, G).  Measured by pure element
/// counting: N_i = |{x : p^i x in D}| / |D| gives the cumulative column sums
/// of each partition's conjugate.
QuotientInvariants oracle_group_invariants(const FiniteLattice& f, const FiniteLattice& g);

/// Image of r (dim n) under the relation h (dim 2n): all second halves of
/// h-elements whose first half lies in r.
FiniteLattice oracle_act(const FiniteLattice& h, const FiniteLattice& r);

/// Relation product: pairs (x, z) such that some y has (x, y) in h and
/// (y, z) in g.  Both operands have dim 2n.
FiniteLattice oracle_compose(const FiniteLattice& g, const FiniteLattice& h);

} // namespace padlat
