#include <doctest.h>

#include "padlat/lattice.hpp"

using namespace padlat;

namespace {

Matrix mat(int rows, int cols, std::initializer_list<const char*> entries) {
    Matrix m(rows, cols);
    auto it = entries.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m(r, c) = parse_scalar(*it++);
    return m;
}

Lattice lat(const PadicContext& ctx, int rows, int cols,
            std::initializer_list<const char*> entries) {
    return Lattice::from_columns(ctx, mat(rows, cols, entries));
}

const PadicContext two(2);

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("construction and equality") {
    CHECK(Lattice::standard(two, 3).basis() == Matrix::identity(3));

    Lattice a = lat(two, 2, 2, {"2", "1", "0", "2"});
    Lattice b = lat(two, 2, 2, {"1", "2", "2", "0"});      // same columns, swapped
    Lattice c = lat(two, 2, 3, {"2", "2", "1", "4", "0", "2"}); // extra 2*(1,2)
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a != Lattice::standard(two, 2));
    CHECK(a.basis() == mat(2, 2, {"2", "1", "0", "2"}));

    CHECK_THROWS_AS(lat(two, 2, 2, {"1", "2", "2", "4"}), RankError);
    CHECK_THROWS_AS(Lattice::from_generators(two, 2, {{Scalar(1), Scalar(0)}}), RankError);

    // index-2 overlattice of O^2: diagonal exponents sum to -1
    Lattice over = lat(two, 2, 3, {"1", "0", "1/2", "0", "1", "1/2"});
    CHECK(over.basis() == mat(2, 2, {"1", "1/2", "0", "1/2"}));
    long dsum = 0;
    for (int i = 0; i < 2; ++i)
        dsum += *valuation(two, over.basis()(i, i));
    CHECK(dsum == -1);
}

TEST_CASE("context mismatch is rejected") {
    PadicContext three(3);
    Lattice a = Lattice::standard(two, 2);
    Lattice b = Lattice::standard(three, 2);
    CHECK_THROWS_AS((void)sum(a, b), ContextMismatch);
    CHECK_THROWS_AS((void)meet(a, b), ContextMismatch);
    CHECK_THROWS_AS((void)complex_distance(a, b), ContextMismatch);
    Lattice c = Lattice::standard(two, 3);
    CHECK_THROWS_AS((void)sum(a, c), ContextMismatch);
}

TEST_CASE("norm and membership") {
    Lattice l = lat(two, 2, 2, {"1", "0", "1", "2"}); // span{(1,1),(0,2)}
    CHECK(norm_exponent(l, {Scalar(2), Scalar(2)}) == -1);
    CHECK(!norm_exponent(l, {Scalar(0), Scalar(0)}).has_value());
    CHECK(norm_exponent(l, {Scalar(1), Scalar(0)}) == 1); // not in l, 2*(1,0) is

    CHECK(norm_exponent(Lattice::standard(two, 2), {Scalar(1, 2), Scalar(3)}) == 1);

    Lattice m = lat(two, 2, 2, {"2", "1", "0", "2"});
    CHECK(!member(m, {Scalar(1), Scalar(1)}));
    CHECK(member(m, {Scalar(3), Scalar(2)}));
    CHECK(member(m, {Scalar(0), Scalar(0)}));
    // membership == norm exponent <= 0
    CHECK(norm_exponent(m, {Scalar(3), Scalar(2)}) <= 0);
    CHECK(norm_exponent(m, {Scalar(1), Scalar(1)}) > 0);
}

TEST_CASE("sum and meet") {
    Lattice o2 = Lattice::standard(two, 2);
    Lattice m = lat(two, 2, 2, {"1/2", "0", "1/2", "1"});
    CHECK(sum(o2, m) == m); // m contains o2
    CHECK(meet(o2, m) == o2);

    Lattice a = lat(two, 2, 2, {"1/2", "0", "0", "1"});
    Lattice b = lat(two, 2, 2, {"1", "0", "0", "1/2"});
    CHECK(sum(a, b) == lat(two, 2, 2, {"1/2", "0", "0", "1/2"}));
    CHECK(meet(a, b) == o2);

    // meet of comparable pairs
    Lattice s = lat(two, 2, 2, {"2", "1", "0", "2"});
    CHECK(meet(o2, s) == s);
    CHECK(sum(o2, s) == o2);

    // lattice laws on fixed instances
    CHECK(sum(a, sum(b, s)) == sum(sum(a, b), s));
    CHECK(meet(a, meet(b, s)) == meet(meet(a, b), s));
    CHECK(sum(a, meet(a, b)) == a);
    CHECK(meet(a, sum(a, b)) == a);
}

TEST_CASE("dual") {
    Lattice l = lat(two, 2, 2, {"1", "0", "1", "2"}); // span{(1,1),(0,2)}
    Lattice d = dual(l);
    // golden: span{(1,0),(-1/2,1/2)} as a module
    CHECK(d == lat(two, 2, 2, {"1", "-1/2", "0", "1/2"}));
    CHECK(d.basis() == mat(2, 2, {"1", "1/2", "0", "1/2"}));
    CHECK(dual(d) == l);
    CHECK(dual(Lattice::standard(two, 2)) == Lattice::standard(two, 2));

    // pairing integrality both ways on generators
    Matrix a = l.basis(), b = d.basis();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Scalar pair = a(0, i) * b(0, j) + a(1, i) * b(1, j);
            auto v = valuation(two, pair);
            CHECK((!v || *v >= 0));
        }

    // De Morgan on a fixed pair
    Lattice x = lat(two, 2, 2, {"1/2", "0", "0", "1"});
    CHECK(dual(sum(l, x)) == meet(dual(l), dual(x)));
    CHECK(dual(meet(l, x)) == sum(dual(l), dual(x)));
}

TEST_CASE("complex distance golden") {
    Lattice r = Lattice::standard(two, 2);
    Lattice s = lat(two, 2, 2, {"1", "1", "0", "2"}); // span{(1,0),(1,2)}
    CHECK(complex_distance(r, s).k == std::vector<long>{0, -1});
    CHECK(complex_distance(s, r).k == std::vector<long>{1, 0});
    CHECK(complex_distance(r, r).k == std::vector<long>{0, 0});

    // scale shifts every entry; distances are non-increasing
    Lattice s2 = scale_by_power(s, 2);
    CHECK(complex_distance(r, s2).k == std::vector<long>{-2, -3});

    Lattice t = lat(two, 2, 2, {"1/2", "0", "0", "4"});
    std::vector<long> k = complex_distance(r, t).k;
    CHECK(k == std::vector<long>{1, -2});
    CHECK(std::is_sorted(k.rbegin(), k.rend()));
}

TEST_CASE("adapted basis realizes the distance") {
    Lattice r = Lattice::standard(two, 2);
    Lattice s = lat(two, 2, 2, {"1", "1", "0", "2"});
    std::vector<long> k = complex_distance(r, s).k;
    Matrix f = adapted_basis(r, s);

    CHECK(Lattice::from_columns(two, f) == r);
    Matrix scaled = f;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 2; ++i)
            scaled(i, j) = f(i, j) * p_power(two, -k[static_cast<std::size_t>(j)]);
    CHECK(Lattice::from_columns(two, scaled) == s);
}

TEST_CASE("quotient invariants golden") {
    Lattice l = Lattice::standard(two, 2);
    Lattice m = lat(two, 2, 2, {"1", "1", "0", "2"});
    QuotientInvariants q = quotient_invariants(l, m);
    CHECK(q.pos.empty());
    CHECK(q.neg == std::vector<long>{1});

    QuotientInvariants rev = quotient_invariants(m, l);
    CHECK(rev.pos == std::vector<long>{1});
    CHECK(rev.neg.empty());

    // mixed case: L = span{(1/2,0),(0,1)}, M = span{(1,0),(0,4)}
    Lattice lm = lat(two, 2, 2, {"1/2", "0", "0", "1"});
    Lattice mm = lat(two, 2, 2, {"1", "0", "0", "4"});
    QuotientInvariants mixed = quotient_invariants(lm, mm);
    CHECK(mixed.pos.empty());
    CHECK(mixed.neg == std::vector<long>{2, 1});
}

TEST_CASE("restriction and minimax golden") {
    Lattice l = Lattice::standard(two, 2);
    Subspace w(two, mat(2, 1, {"1", "1"}));
    Lattice restr = restrict_to_subspace(l, w);
    CHECK(restr == Lattice::standard(two, 1)); // c*(1,1) in O^2 iff c in O

    // scaling the spanning vector rescales the coordinate
    Subspace w2(two, mat(2, 1, {"2", "4"}));
    Lattice r2 = restrict_to_subspace(l, w2);
    CHECK(r2 == Lattice::from_columns(two, mat(1, 1, {"1/2"})));

    Lattice s = lat(two, 2, 2, {"1", "1", "0", "2"});
    Subspace e1(two, mat(2, 1, {"1", "0"}));
    CHECK(restrict_to_subspace(s, e1) == Lattice::standard(two, 1));
    CHECK(minimax_value(l, s, e1) == 0); // attains k_1 = 0

    CHECK_THROWS_AS(Subspace(two, mat(2, 2, {"1", "2", "2", "4"})), RankError);
}

TEST_CASE("transform, direct sum, scaling, window bound") {
    Lattice l = lat(two, 2, 2, {"2", "1", "0", "2"});
    Matrix g = mat(2, 2, {"0", "1", "1", "0"});
    CHECK(transform(g, l) == lat(two, 2, 2, {"0", "2", "2", "1"}));
    CHECK(transform(Matrix::identity(2), l) == l);

    Lattice d = direct_sum(l, Lattice::standard(two, 1));
    CHECK(d.dim() == 3);
    CHECK(member(d, {Scalar(2), Scalar(0), Scalar(1)}));
    CHECK(!member(d, {Scalar(1), Scalar(1), Scalar(0)}));

    CHECK(scale_by_power(l, 0) == l);
    CHECK(scale_by_power(scale_by_power(l, 3), -3) == l);

    CHECK(window_bound(Lattice::standard(two, 2)) == 0);
    CHECK(window_bound(l) == 2);           // inverse has a 1/4 entry
    CHECK(window_bound(scale_by_power(l, -1)) == 1);
}

} // TEST_SUITE
