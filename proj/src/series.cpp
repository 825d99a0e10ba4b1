#include "omex/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace omex {

long TruncatedSeries::check_order(long t) {
    if (t < 0) throw std::invalid_argument("truncation order must be nonnegative");
    return t;
}

TruncatedSeries TruncatedSeries::monomial(Int c, long exponent, long trunc_order) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    TruncatedSeries s(trunc_order);
    if (exponent <= trunc_order) s.coeffs_[static_cast<std::size_t>(exponent)] = std::move(c);
    return s;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long t = std::min(a.trunc_order(), b.trunc_order());
    TruncatedSeries r(t);
    for (long i = 0; i <= t; ++i)
        r.coeffs_[static_cast<std::size_t>(i)] = a[i] + b[i];
    return r;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const long t = std::min(a.trunc_order(), b.trunc_order());
    TruncatedSeries r(t);
    for (long i = 0; i <= t; ++i) {
        const Int& ai = a[i];
        if (ai == 0) continue;
        for (long j = 0; i + j <= t; ++j) {
            if (b[j] == 0) continue;
            r.coeffs_[static_cast<std::size_t>(i + j)] += ai * b[j];
        }
    }
    return r;
}

TruncatedSeries series_invert(const TruncatedSeries& a) {
    const Int& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantTerm("series_invert requires constant term +1 or -1");
    const long t = a.trunc_order();
    TruncatedSeries r(t);
    r.coeffs_[0] = a0;  // 1/(+1) = +1, 1/(-1) = -1
    for (long n = 1; n <= t; ++n) {
        Int acc = 0;
        for (long j = 1; j <= n; ++j) {
            if (a[j] == 0) continue;
            acc += a[j] * r.coeffs_[static_cast<std::size_t>(n - j)];
        }
        // a0 * r[n] + acc = 0, and a0 is its own inverse.
        r.coeffs_[static_cast<std::size_t>(n)] = -a0 * acc;
    }
    return r;
}

TruncatedSeries series_pow(const TruncatedSeries& a, long e) {
    if (e < 0) return series_pow(series_invert(a), -e);
    TruncatedSeries acc = TruncatedSeries::one(a.trunc_order());
    TruncatedSeries base = a;
    long rem = e;
    while (rem > 0) {
        if (rem & 1) acc = series_mul(acc, base);
        rem >>= 1;
        if (rem > 0) base = series_mul(base, base);
    }
    return acc;
}

namespace {

// In-place multiply by (1 + sign*q^m); descending order so each source
// coefficient is read before it is overwritten.
void mul_binomial(std::vector<Int>& c, long m, int sign) {
    const long t = static_cast<long>(c.size()) - 1;
    for (long n = t; n >= m; --n) {
        if (sign > 0)
            c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - m)];
        else
            c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - m)];
    }
}

TruncatedSeries pochhammer_impl(long a, long b, long T, int sign) {
    if (a < 1 || b < 1) throw std::invalid_argument("pochhammer requires a >= 1 and b >= 1");
    if (T < 0) throw std::invalid_argument("truncation order must be nonnegative");
    std::vector<Int> c(static_cast<std::size_t>(T) + 1);
    c[0] = 1;
    for (long m = a; m <= T; m += b)
        mul_binomial(c, m, sign);
    return TruncatedSeries(std::move(c));
}

}  // namespace

TruncatedSeries pochhammer(long a, long b, long T) { return pochhammer_impl(a, b, T, -1); }

TruncatedSeries neg_pochhammer(long a, long b, long T) { return pochhammer_impl(a, b, T, +1); }

TruncatedSeries jacobi_cube(long T) {
    if (T < 0) throw std::invalid_argument("truncation order must be nonnegative");
    std::vector<Int> c(static_cast<std::size_t>(T) + 1);
    for (long long j = 0; triangular_number(j) <= T; ++j) {
        const Int term = Int(2 * j + 1);
        c[static_cast<std::size_t>(triangular_number(j))] = (j % 2 == 0) ? term : -term;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries triangular_gf(long r, long T) {
    if (r < 1) throw std::invalid_argument("triangular_gf requires r >= 1");
    if (T < 0) throw std::invalid_argument("truncation order must be nonnegative");
    std::vector<Int> c(static_cast<std::size_t>(T) + 1);
    for (long long k = 0; r * triangular_number(k) <= T; ++k)
        c[static_cast<std::size_t>(r * triangular_number(k))] = 1;
    return TruncatedSeries(std::move(c));
}

}  // namespace omex
