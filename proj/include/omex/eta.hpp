#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "omex/bigint.hpp"
#include "omex/errors.hpp"
#include "omex/eta_quotient.hpp"
#include "omex/frac_series.hpp"
#include "omex/smex.hpp"

namespace omex {

/// Splits r = 2^m * 3^n; throws UnsupportedR when another prime divides r.
std::pair<int, int> factor_23(long r);

/// The two mod-24 conditions under which an eta quotient transforms like a
/// modular form on Gamma_0(N): sum delta*r_delta and sum (N/delta)*r_delta,
/// each tested mod 24.
std::pair<bool, bool> ghn_check(const EtaQuotient& eq);

/// Half the exponent sum, as an exact rational.
Rational weight_of(const EtaQuotient& eq);

/// Smallest u >= 1 making u*(3*2^{k-1} - 3r) = 0 (mod 24), and the level
/// N = 48ru it induces. Requires k >= 4 so that 3*2^{k-1} = 0 (mod 24) and
/// u does not depend on k; smaller k is refused rather than special-cased.
std::pair<long, long> min_level_u(long r, int k);

/// The eta quotient eta(48z) eta(24rz)^{2^k-1} / [eta(24z)^2 eta(48rz)^{2^{k-1}-2}]
/// with colliding arguments merged additively, together with its invariants.
struct FrkForm {
    long r = 1;
    int m = 0;  // r = 2^m * 3^n
    int n = 0;
    int k = 4;
    EtaQuotient quotient;     // carries the Gamma_0 level
    long long weight = 0;     // 2^{k-2}
    long long s_exp2 = 0;     // s = prod delta^{r_delta} = 2^{s_exp2} * 3^{s_exp3}
    long long s_exp3 = 0;
};

// Merged exponent map of the quotient above; valid for any k >= 1.
std::map<long, long> frk_exponents(long r, int k);

/// Builds the full form with the two-case level. Throws UnsupportedR, or
/// KTooSmall when k < max(m + 2n + 1, 4) (the message names the bound).
FrkForm build_frk(long r, int k);

struct CuspOrder {
    long d = 1;
    Rational order;  // exact order of vanishing at the cusp c/d
};

struct CuspReport {
    std::vector<CuspOrder> entries;  // one per divisor d of the level, ascending
    bool holomorphic = false;        // all orders >= 0
};

/// Exact vanishing orders (N/24) sum_delta gcd(d,delta)^2 r_delta /
/// (gcd(d,N/d) d delta) at every cusp denominator d | N.
/// Throws GhnViolated unless both mod-24 conditions hold.
///
/// Modular-form membership is certified by hypothesis checking (the two
/// mod-24 conditions plus nonnegative orders everywhere); the transformation
/// law itself is never evaluated numerically on the upper half-plane.
CuspReport cusp_orders(const EtaQuotient& eq);

/// The holomorphy-test integer
/// r*gcd(d,48)^2 - 4r*gcd(d,24)^2 + (2^{k+1}-2)*gcd(d,24r)^2
///   - (2^{k-1}-2)*gcd(d,48r)^2,
/// whose sign matches the cusp order at d. d must divide the f_{r,k} level.
Int star_value(long r, int k, long d);

/// Kronecker symbol (a | n) for n >= 0.
int kronecker_symbol(long long a, long long n);

/// Nebentypus value chi(d) = ((-1)^weight * s | d) with s reduced to its
/// square-free kernel first; 0 whenever gcd(d, level) > 1.
int character_chi(const FrkForm& form, long long d);

struct CongruenceReport {
    long r = 1;
    int k = 1;
    long terms = 0;
    bool ok = false;
    // first exponent whose residue disagrees, when !ok
    std::optional<long> first_bad_exponent;
    std::uint64_t expected = 0;
    std::uint64_t got = 0;
};

/// Expands f_{r,k} to order 24*terms + 3r and checks, mod 2^k, that the
/// coefficient at q^{24n+3r} matches the sigma_r mex table at n for every
/// n < terms while all off-grid coefficients vanish.
CongruenceReport verify_congruence(long r, int k, long terms);

/// Divisors of n in ascending order.
std::vector<long> divisors_of(long n);

}  // namespace omex
