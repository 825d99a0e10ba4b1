#include "omex/eta.hpp"

#include <algorithm>
#include <numeric>

namespace omex {

std::pair<int, int> factor_23(long r) {
    if (r < 1) throw UnsupportedR("r must be a positive integer");
    long rest = r;
    int m = 0, n = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++m;
    }
    while (rest % 3 == 0) {
        rest /= 3;
        ++n;
    }
    if (rest != 1)
        throw UnsupportedR("r = " + std::to_string(r) + " has a prime factor >= 5 (cofactor " +
                           std::to_string(rest) + "); only r = 2^m * 3^n is supported");
    return {m, n};
}

std::pair<bool, bool> ghn_check(const EtaQuotient& eq) {
    Int sum_delta = 0, sum_codelta = 0;
    for (const auto& [delta, r] : eq.exponents) {
        sum_delta += Int(delta) * r;
        sum_codelta += Int(eq.level / delta) * r;
    }
    return {sum_delta % 24 == 0, sum_codelta % 24 == 0};
}

Rational weight_of(const EtaQuotient& eq) {
    Int sum = 0;
    for (const auto& [delta, r] : eq.exponents) sum += r;
    return Rational(sum, 2);
}

std::pair<long, long> min_level_u(long r, int k) {
    factor_23(r);
    if (k < 4)
        throw KTooSmall("min_level_u requires k >= 4 (got k = " + std::to_string(k) +
                        "); 3*2^{k-1} must vanish mod 24");
    // 3*2^{k-1} = 0 (mod 24) for k >= 4, so the condition is u*3r = 0 (mod 24).
    const long residue = (3 * (r % 24)) % 24;
    long u = 1;
    while ((u * residue) % 24 != 0) ++u;
    return {u, 48 * r * u};
}

std::map<long, long> frk_exponents(long r, int k) {
    factor_23(r);
    if (k < 1 || k > 40) throw std::invalid_argument("k must be in [1, 40]");
    std::map<long, long> exps;
    const long long two_k = 1LL << k;
    exps[48] += 1;
    exps[24 * r] += two_k - 1;
    exps[24] += -2;
    exps[48 * r] += -(two_k / 2 - 2);
    std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
    return exps;
}

FrkForm build_frk(long r, int k) {
    const auto [m, n] = factor_23(r);
    const int min_k = std::max(m + 2 * n + 1, 4);
    if (k < min_k)
        throw KTooSmall("k = " + std::to_string(k) + " is below the admissible bound " +
                        std::to_string(min_k) + " = max(m + 2n + 1, 4) for r = " +
                        std::to_string(r));

    FrkForm form;
    form.r = r;
    form.m = m;
    form.n = n;
    form.k = k;

    long level = 1;
    for (int i = 0; i < (m <= 2 ? 7 : m + 4); ++i) level *= 2;
    for (int i = 0; i < n + 1; ++i) level *= 3;
    form.quotient = EtaQuotient(level, frk_exponents(r, k));

    form.weight = 1LL << (k - 2);
    for (const auto& [delta, rd] : form.quotient.exponents) {
        long v = delta;
        while (v % 2 == 0) {
            v /= 2;
            form.s_exp2 += rd;
        }
        while (v % 3 == 0) {
            v /= 3;
            form.s_exp3 += rd;
        }
    }
    return form;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        divs.push_back(d);
        if (d != n / d) divs.push_back(n / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

CuspReport cusp_orders(const EtaQuotient& eq) {
    const auto [cond4, cond5] = ghn_check(eq);
    if (!cond4 || !cond5)
        throw GhnViolated("cusp orders are defined only when both mod-24 conditions hold");

    const long N = eq.level;
    CuspReport report;
    report.holomorphic = true;
    for (long d : divisors_of(N)) {
        Rational order = 0;
        const long gd = std::gcd(d, N / d);
        for (const auto& [delta, r] : eq.exponents) {
            const long g = std::gcd(d, delta);
            order += Rational(Int(N) * g * g * r, Int(24) * gd * d * delta);
        }
        if (order < 0) report.holomorphic = false;
        report.entries.push_back({d, order});
    }
    return report;
}

Int star_value(long r, int k, long d) {
    if (k < 1) throw std::invalid_argument("star_value requires k >= 1");
    const auto [m, n] = factor_23(r);
    long level = 1;
    for (int i = 0; i < (m <= 2 ? 7 : m + 4); ++i) level *= 2;
    for (int i = 0; i < n + 1; ++i) level *= 3;
    if (d < 1 || level % d != 0)
        throw std::invalid_argument("d = " + std::to_string(d) +
                                    " does not divide the f_{r,k} level " + std::to_string(level));
    const Int g48 = std::gcd(d, 48L);
    const Int g24 = std::gcd(d, 24L);
    const Int g24r = std::gcd(d, 24 * r);
    const Int g48r = std::gcd(d, 48 * r);
    const Int pow_k1 = Int(1) << (k + 1);
    const Int pow_km1 = Int(1) << (k - 1);
    return r * g48 * g48 - 4 * r * g24 * g24 + (pow_k1 - 2) * g24r * g24r -
           (pow_km1 - 2) * g48r * g48r;
}

int kronecker_symbol(long long a, long long n) {
    if (n < 0) throw std::invalid_argument("kronecker_symbol requires n >= 0");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (n == 1) return 1;

    int result = 1;
    // peel off the even part of n: (a|2) = 0 for even a, else +-1 by a mod 8
    while (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        const long long am8 = ((a % 8) + 8) % 8;
        if (am8 == 3 || am8 == 5) result = -result;
        n /= 2;
    }
    if (n == 1) return result;
    if (a < 0) {
        // (-1|n) for odd n > 0
        if (((n - 1) / 2) % 2 != 0) result = -result;
        a = -a;
    }
    a %= n;
    // Jacobi symbol by quadratic reciprocity
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const long long nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int character_chi(const FrkForm& form, long long d) {
    if (d == 0) return 0;
    if (std::gcd(d, static_cast<long long>(form.quotient.level)) != 1) return 0;
    // square-free kernel of (-1)^weight * 2^{s_exp2} * 3^{s_exp3}
    long long kernel = 1;
    if (form.weight % 2 != 0) kernel = -kernel;
    if (((form.s_exp2 % 2) + 2) % 2 == 1) kernel *= 2;
    if (((form.s_exp3 % 2) + 2) % 2 == 1) kernel *= 3;
    return kronecker_symbol(kernel, d);
}

CongruenceReport verify_congruence(long r, int k, long terms) {
    factor_23(r);
    if (k < 1) throw std::invalid_argument("verify_congruence requires k >= 1");
    if (terms < 1) throw std::invalid_argument("verify_congruence requires terms >= 1");

    CongruenceReport report;
    report.r = r;
    report.k = k;
    report.terms = terms;

    const long T = 24 * terms + 3 * r;
    // keys 24, 48, 24r all divide 48r, so 48r serves as the carrier level
    const EtaQuotient eq(48 * r, frk_exponents(r, k));
    const TruncatedSeries expansion = eta_expansion(eq, T);
    const SmexTable sigma = sigma_mex_table(r, terms);

    report.ok = true;
    for (long e = 0; e < T; ++e) {
        const std::uint64_t got = residue_mod2k(expansion[e], k);
        std::uint64_t expected = 0;
        if (e >= 3 * r && (e - 3 * r) % 24 == 0) {
            const long n = (e - 3 * r) / 24;
            if (n >= terms) continue;  // beyond the checked window
            expected = residue_mod2k(sigma.values[static_cast<std::size_t>(n)], k);
        }
        if (got != expected) {
            report.ok = false;
            report.first_bad_exponent = e;
            report.expected = expected;
            report.got = got;
            break;
        }
    }
    return report;
}

}  // namespace omex
