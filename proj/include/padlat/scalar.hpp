#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "padlat/errors.hpp"

namespace padlat {

// Exact rational scalar.  Every rational is a legitimate element of the p-adic
// field, and all lattice data produced by this library stays rational, so
// mpq_class (always kept in lowest terms by GMP) is the whole story.
using Scalar = mpq_class;

/// Fixes the prime p.  All valuation-dependent operations take a context, and
/// objects built over different contexts refuse to interact.
class PadicContext {
public:
    explicit PadicContext(long p);

    long p() const { return p_; }
    const mpz_class& pz() const { return pz_; }

    friend bool operator==(const PadicContext& a, const PadicContext& b) {
        return a.p_ == b.p_;
    }
    friend bool operator!=(const PadicContext& a, const PadicContext& b) {
        return !(a == b);
    }

private:
    long p_;
    mpz_class pz_;
};

/// v_p(x); nullopt encodes v_p(0) = +infinity.
std::optional<long> valuation(const PadicContext& ctx, const Scalar& x);

/// v_p(x) for known-nonzero x (no optional wrapping; asserts on 0).
long valuation_nonzero(const PadicContext& ctx, const Scalar& x);

/// p^k as an exact rational, k of either sign.
Scalar p_power(const PadicContext& ctx, long k);

/// Canonical representative of x modulo p^k O_p: the unique r with
/// x - r in p^k O_p, r = m / p^t, 0 <= m < p^{k+t}, t = max(0, -v_p(x)).
/// Collapses to 0 whenever v_p(x) >= k.
Scalar reduce_mod_power(const PadicContext& ctx, const Scalar& x, long k);

/// 1/x; throws std::domain_error on x = 0.
Scalar invert(const Scalar& x);

/// Lowest-terms decimal form: "m" or "m/d" with d > 1 (what parse_scalar reads).
std::string format_scalar(const Scalar& x);

/// Strict inverse of format_scalar.  Accepts optional leading '-', digits,
/// optional "/digits" with nonzero denominator; anything else is a ParseError.
/// Non-lowest-terms input is accepted and canonicalized.
Scalar parse_scalar(const std::string& s);

} // namespace padlat
