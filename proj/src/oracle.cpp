#include "padlat/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace padlat {

namespace {

unsigned long sat_mul(unsigned long a, unsigned long b) {
    if (a != 0 && b > std::numeric_limits<unsigned long>::max() / a)
        return std::numeric_limits<unsigned long>::max();
    return a * b;
}

unsigned long sat_pow(unsigned long base, long exp) {
    unsigned long r = 1;
    for (long i = 0; i < exp; ++i)
        r = sat_mul(r, base);
    return r;
}

std::uint32_t add_mod(std::uint32_t x, std::uint32_t y, std::uint32_t mod, int dim) {
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < dim; ++i) {
        std::uint32_t d = (x % mod + y % mod) % mod;
        r += d * scale;
        x /= mod;
        y /= mod;
        if (i + 1 < dim)
            scale *= mod;
    }
    return r;
}

std::uint32_t scalar_mul_mod(std::uint64_t s, std::uint32_t x, std::uint32_t mod, int dim) {
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < dim; ++i) {
        std::uint32_t d = static_cast<std::uint32_t>((s * (x % mod)) % mod);
        r += d * scale;
        x /= mod;
        if (i + 1 < dim)
            scale *= mod;
    }
    return r;
}

// Additive closure of the generators, by plain breadth-first search over the
// whole group.  Finiteness supplies inverses.
std::vector<std::uint32_t> closure(unsigned long gsize, std::uint32_t mod, int dim,
                                   const std::vector<std::uint32_t>& gens) {
    std::vector<std::uint8_t> seen(gsize, 0);
    std::vector<std::uint32_t> out;
    seen[0] = 1;
    out.push_back(0);
    for (std::size_t h = 0; h < out.size(); ++h)
        for (std::uint32_t g : gens) {
            std::uint32_t y = add_mod(out[h], g, mod, dim);
            if (!seen[y]) {
                seen[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// A few elements that regenerate f: grab any element outside the running
// closure until the sizes match.  Each pick multiplies the subgroup order by
// at least p, so this stays short.
std::vector<std::uint32_t> small_generators(const FiniteLattice& f) {
    std::vector<std::uint32_t> gens;
    if (f.size() <= 1)
        return gens;
    unsigned long gsize = window_group_size(f.window(), f.dim());
    std::vector<std::uint32_t> cur{0};
    for (std::uint32_t e : f.elements()) {
        if (std::binary_search(cur.begin(), cur.end(), e))
            continue;
        gens.push_back(e);
        cur = closure(gsize, f.modulus(), f.dim(), gens);
        if (cur.size() == f.size())
            break;
    }
    assert(cur.size() == f.size());
    return gens;
}

void require_compatible(const FiniteLattice& a, const FiniteLattice& b, const char* op) {
    if (a.window() != b.window())
        throw ContextMismatch(std::string(op) + ": different windows");
    if (a.dim() != b.dim())
        throw ContextMismatch(std::string(op) + ": different dimensions");
}

long ilog(const PadicContext& ctx, unsigned long n) {
    long e = 0;
    while (n % static_cast<unsigned long>(ctx.p()) == 0) {
        n /= static_cast<unsigned long>(ctx.p());
        ++e;
    }
    assert(n == 1); // subgroup indices here are always p-powers
    return e;
}

} // namespace

Window::Window(const PadicContext& c, long radius) : ctx(c), a(radius) {
    if (radius < 0)
        throw std::invalid_argument("window radius must be >= 0");
}

unsigned long window_group_size(const Window& w, int dim) {
    unsigned long mod = sat_pow(static_cast<unsigned long>(w.ctx.p()), 2 * w.a);
    return sat_pow(mod, dim);
}

FiniteLattice::FiniteLattice(const Window& w, int dim, std::vector<std::uint32_t> closed_sorted)
    : w_(w), dim_(dim), mod_(0), elems_(std::move(closed_sorted)) {
    if (dim < 1)
        throw std::invalid_argument("finite lattice dimension must be positive");
    unsigned long gsize = window_group_size(w, dim);
    if (gsize > kWindowBudget)
        throw std::invalid_argument("window enumeration budget exceeded");
    mod_ = static_cast<std::uint32_t>(sat_pow(static_cast<unsigned long>(w.ctx.p()), 2 * w.a));
    assert(!elems_.empty() && elems_[0] == 0);
    assert(std::is_sorted(elems_.begin(), elems_.end()));
}

FiniteLattice FiniteLattice::generated(const Window& w, int dim,
                                       const std::vector<std::vector<std::uint32_t>>& gens) {
    unsigned long gsize = window_group_size(w, dim);
    if (gsize > kWindowBudget)
        throw std::invalid_argument("window enumeration budget exceeded");
    std::uint32_t mod =
        static_cast<std::uint32_t>(sat_pow(static_cast<unsigned long>(w.ctx.p()), 2 * w.a));
    std::vector<std::uint32_t> enc;
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != dim)
            throw std::invalid_argument("generator length does not match dimension");
        std::uint32_t x = 0, scale = 1;
        for (int i = 0; i < dim; ++i) {
            if (g[i] >= mod)
                throw std::invalid_argument("generator coordinate out of range");
            x += g[i] * scale;
            if (i + 1 < dim)
                scale *= mod;
        }
        enc.push_back(x);
    }
    return FiniteLattice(w, dim, closure(gsize, mod, dim, enc));
}

bool FiniteLattice::contains(std::uint32_t encoded) const {
    return std::binary_search(elems_.begin(), elems_.end(), encoded);
}

FiniteLattice project_to_window(const Lattice& l, const Window& w) {
    if (l.context() != w.ctx)
        throw ContextMismatch("project_to_window: different primes");
    const int n = l.dim();
    const PadicContext& ctx = w.ctx;
    if (min_entry_valuation(ctx, l.basis()) < -w.a ||
        min_entry_valuation(ctx, inverse(l.basis())) < -w.a)
        throw std::invalid_argument("lattice does not fit the window");

    // p^a L is sandwiched between p^{2a} Z^n and Z^n locally at p, so reducing
    // its basis entries mod p^{2a} captures it exactly.
    Scalar pa = p_power(ctx, w.a);
    std::vector<std::vector<std::uint32_t>> gens;
    for (int j = 0; j < n; ++j) {
        std::vector<std::uint32_t> g(n);
        for (int i = 0; i < n; ++i) {
            Scalar r = reduce_mod_power(ctx, l.basis()(i, j) * pa, 2 * w.a);
            assert(r.get_den() == 1);
            g[i] = static_cast<std::uint32_t>(mpz_get_ui(r.get_num().get_mpz_t()));
        }
        gens.push_back(std::move(g));
    }
    return FiniteLattice::generated(w, n, gens);
}

Lattice lift_from_window(const FiniteLattice& f) {
    const PadicContext& ctx = f.window().ctx;
    const int n = f.dim();
    Scalar pa_inv = p_power(ctx, -f.window().a);
    std::vector<std::vector<Scalar>> gens;
    for (std::uint32_t e : small_generators(f)) {
        std::vector<Scalar> v(n);
        for (int i = 0; i < n; ++i) {
            v[i] = Scalar(static_cast<unsigned long>(e % f.modulus())) * pa_inv;
            e /= f.modulus();
        }
        gens.push_back(std::move(v));
    }
    // The window floor p^a O^n is always part of the lift.
    Scalar pa = p_power(ctx, f.window().a);
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> v(n);
        v[i] = pa;
        gens.push_back(std::move(v));
    }
    return Lattice::from_generators(ctx, n, gens);
}

FiniteLattice oracle_sum(const FiniteLattice& a, const FiniteLattice& b) {
    require_compatible(a, b, "oracle_sum");
    std::vector<std::uint32_t> gens = small_generators(a);
    std::vector<std::uint32_t> gb = small_generators(b);
    gens.insert(gens.end(), gb.begin(), gb.end());
    unsigned long gsize = window_group_size(a.window(), a.dim());
    return FiniteLattice(a.window(), a.dim(), closure(gsize, a.modulus(), a.dim(), gens));
}

FiniteLattice oracle_meet(const FiniteLattice& a, const FiniteLattice& b) {
    require_compatible(a, b, "oracle_meet");
    std::vector<std::uint32_t> out;
    std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                          b.elements().end(), std::back_inserter(out));
    return FiniteLattice(a.window(), a.dim(), std::move(out));
}

QuotientInvariants oracle_group_invariants(const FiniteLattice& f, const FiniteLattice& g) {
    require_compatible(f, g, "oracle_group_invariants");
    FiniteLattice d = oracle_meet(f, g);
    const PadicContext& ctx = f.window().ctx;
    const long two_a = 2 * f.window().a;

    auto partition_of = [&](const FiniteLattice& big) {
        // c_i = log_p |{x in big : p^i x in d}| / |d| climbs from 0 to
        // log_p [big : d]; its increments are the conjugate partition.
        std::vector<long> c{0};
        for (long i = 1; i <= two_a; ++i) {
            std::uint64_t s = 1;
            for (long t = 0; t < i; ++t)
                s = (s * static_cast<std::uint64_t>(ctx.p())) % big.modulus();
            std::size_t cnt = 0;
            for (std::uint32_t x : big.elements())
                if (d.contains(scalar_mul_mod(s, x, big.modulus(), big.dim())))
                    ++cnt;
            assert(cnt % d.size() == 0);
            c.push_back(ilog(ctx, cnt / d.size()));
        }
        assert(static_cast<unsigned long>(sat_pow(static_cast<unsigned long>(ctx.p()),
                                                  c.back())) == big.size() / d.size());
        std::vector<long> lam;
        for (long j = 1;; ++j) {
            long cnt = 0;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] - c[i - 1] >= j)
                    ++cnt;
            if (cnt == 0)
                break;
            lam.push_back(cnt);
        }
        return lam;
    };

    QuotientInvariants q;
    q.pos = partition_of(g);
    q.neg = partition_of(f);
    return q;
}

FiniteLattice oracle_act(const FiniteLattice& h, const FiniteLattice& r) {
    if (h.window() != r.window())
        throw ContextMismatch("oracle_act: different windows");
    if (h.dim() != 2 * r.dim())
        throw ContextMismatch("oracle_act: relation/lattice dimension mismatch");
    const int n = r.dim();
    std::uint32_t half = 1;
    for (int i = 0; i < n; ++i)
        half *= h.modulus();
    std::vector<std::uint8_t> seen(half, 0);
    for (std::uint32_t x : h.elements()) {
        std::uint32_t lo = x % half, hi = x / half;
        if (r.contains(lo))
            seen[hi] = 1;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t y = 0; y < half; ++y)
        if (seen[y])
            out.push_back(y);
    return FiniteLattice(r.window(), n, std::move(out));
}

FiniteLattice oracle_compose(const FiniteLattice& g, const FiniteLattice& h) {
    require_compatible(g, h, "oracle_compose");
    if (g.dim() % 2 != 0)
        throw std::invalid_argument("oracle_compose operands must have even dimension");
    const int n = g.dim() / 2;
    std::uint32_t half = 1;
    for (int i = 0; i < n; ++i)
        half *= g.modulus();

    std::vector<std::vector<std::uint32_t>> g_by_lo(half);
    for (std::uint32_t x : g.elements())
        g_by_lo[x % half].push_back(x / half);

    unsigned long gsize = window_group_size(g.window(), g.dim());
    std::vector<std::uint8_t> seen(gsize, 0);
    for (std::uint32_t xh : h.elements()) {
        std::uint32_t x = xh % half, y = xh / half;
        for (std::uint32_t z : g_by_lo[y])
            seen[x + z * half] = 1;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < gsize; ++v)
        if (seen[v])
            out.push_back(v);
    return FiniteLattice(g.window(), g.dim(), std::move(out));
}

} // namespace padlat
