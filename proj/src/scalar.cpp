#include "padlat/scalar.hpp"

#include <cassert>
#include <cctype>

namespace padlat {

PadicContext::PadicContext(long p) : p_(p), pz_(p) {
    if (p < 2)
        throw std::invalid_argument("p must be a prime >= 2, got " + std::to_string(p));
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument("p must be prime, got " + std::to_string(p) +
                                        " = " + std::to_string(d) + " * " + std::to_string(p / d));
}

std::optional<long> valuation(const PadicContext& ctx, const Scalar& x) {
    if (sgn(x) == 0)
        return std::nullopt;
    return valuation_nonzero(ctx, x);
}

long valuation_nonzero(const PadicContext& ctx, const Scalar& x) {
    assert(sgn(x) != 0);
    // mpq_class keeps num/den coprime, so at most one of these is nonzero.
    mpz_class stripped;
    long vn = static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), x.get_num().get_mpz_t(), ctx.pz().get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(stripped.get_mpz_t(), x.get_den().get_mpz_t(), ctx.pz().get_mpz_t()));
    return vn - vd;
}

Scalar p_power(const PadicContext& ctx, long k) {
    mpz_class pk;
    unsigned long mag = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ctx.p()), mag);
    if (k >= 0)
        return Scalar(pk);
    Scalar r(1, pk); // already canonical: gcd(1, p^|k|) = 1
    return r;
}

Scalar reduce_mod_power(const PadicContext& ctx, const Scalar& x, long k) {
    std::optional<long> v = valuation(ctx, x);
    if (!v || k <= *v)
        return Scalar(0);
    // Shift into the valuation ring: y = x * p^t has v_p(y) >= 0.
    long t = *v < 0 ? -*v : 0;
    Scalar y = x * p_power(ctx, t);
    mpz_class mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(ctx.p()),
                  static_cast<unsigned long>(k + t));
    // y = a/b with p coprime to b, so b is invertible mod p^{k+t} and the
    // residue of y is a * b^{-1} there.
    mpz_class binv;
    int ok = mpz_invert(binv.get_mpz_t(), y.get_den().get_mpz_t(), mod.get_mpz_t());
    assert(ok != 0);
    (void)ok;
    mpz_class m = y.get_num() * binv;
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), mod.get_mpz_t());
    return Scalar(m) / p_power(ctx, t);
}

Scalar invert(const Scalar& x) {
    if (sgn(x) == 0)
        throw std::domain_error("division by zero");
    return Scalar(1) / x;
}

std::string format_scalar(const Scalar& x) {
    Scalar c = x; // mpq_class(a, b) does not canonicalize on its own
    c.canonicalize();
    return c.get_str();
}

Scalar parse_scalar(const std::string& s) {
    auto fail = [&](const std::string& why) -> Scalar {
        throw ParseError("invalid scalar \"" + s + "\": " + why);
    };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-')
        ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
    if (i == num_begin)
        fail("expected digits");
    if (i < s.size()) {
        if (s[i] != '/')
            fail("unexpected character");
        ++i;
        std::size_t den_begin = i;
        bool den_nonzero = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            if (s[i] != '0')
                den_nonzero = true;
            ++i;
        }
        if (i == den_begin)
            fail("expected digits after '/'");
        if (i != s.size())
            fail("unexpected character");
        if (!den_nonzero)
            fail("zero denominator");
    }
    Scalar q(s);
    q.canonicalize();
    return q;
}

} // namespace padlat
