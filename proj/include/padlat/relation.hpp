#pragma once

#include "padlat/lattice.hpp"

namespace padlat {

/// Lattice-linear relation from Q^n to Q^n: a full-rank lattice in
/// Q^n x Q^n = Q^{2n} (source coordinates first, target second), viewed as a
/// multivalued map.  These compose like relations and form a semigroup acting
/// on the set of lattices.
class Relation {
public:
    /// Wrap a 2n-dimensional lattice as a relation on Q^n.
    Relation(int n, Lattice carrier);

    static Relation from_generators(const PadicContext& ctx, int n,
                                    const std::vector<std::vector<Scalar>>& gens);

    int dim() const { return n_; }
    const PadicContext& context() const { return carrier_.context(); }
    const Lattice& carrier() const { return carrier_; }

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.n_ == b.n_ && a.carrier_ == b.carrier_;
    }
    friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

private:
    int n_;
    Lattice carrier_;
};

/// Projection of the carrier to source coordinates: every input the relation
/// touches.
Lattice dom(const Relation& h);

/// Projection to target coordinates: everything the relation can output.
Lattice im(const Relation& h);

/// Inputs related to 0: { v : (v, 0) in carrier }, full-rank in Q^n.
Lattice ker(const Relation& h);

/// Outputs of 0: { w : (0, w) in carrier }, full-rank in Q^n.
Lattice indef(const Relation& h);

/// h(r) = { w : (v, w) in carrier for some v in r }.  Always a lattice;
/// equals g(r meet dom h) + indef h for the structure map g.
Lattice act(const Relation& h, const Lattice& r);

/// Relation product "g after h": pairs (x, z) admitting y with (x, y) in h
/// and (y, z) in g.  Computed by intersecting in Q^{3n} and projecting.
Relation compose(const Relation& g, const Relation& h);

/// An invertible g with carrier = { (x, g x) : x in dom h } + 0 x indef h.
/// Built by lifting a basis of dom through the relation, so g(ker) lies in
/// indef and g(dom) + indef = im: g induces the isomorphism
/// dom/ker -> im/indef that the relation realizes.  g is one valid witness;
/// it is only determined modulo indef on each basis vector.
Matrix structure_map(const Relation& h);

/// Checks act(h, l) == g(l meet dom h) + indef h for this particular l.
bool decomposition_identity(const Relation& h, const Lattice& l);

/// Z_j: the lattice p^{-j} graph(g) + p^j O^{2n}.  As j grows these act like
/// g itself on any fixed window of lattices.
Relation graph_approx(const PadicContext& ctx, const Matrix& g, long j);

/// A j beyond which act(graph_approx(g, j), l) == g(l) is guaranteed for this
/// l (and any lattice with the same or smaller window bound).
long graph_approx_threshold(const PadicContext& ctx, const Matrix& g, const Lattice& l);

} // namespace padlat
