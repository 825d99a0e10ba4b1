#include "omex/smex.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace omex {

TruncatedSeries overpartition_series(long T) {
    return series_mul(neg_pochhammer(1, 1, T), series_invert(pochhammer(1, 1, T)));
}

TruncatedSeries smex_series(long T) { return series_pow(neg_pochhammer(1, 1, T), 3); }

SmexTable sigma_mex_table(long r, long T) {
    if (r < 1) throw std::invalid_argument("sigma_mex_table requires r >= 1");
    const TruncatedSeries numer = series_mul(neg_pochhammer(1, 1, T), pochhammer(2 * r, 2 * r, T));
    const TruncatedSeries denom_inv =
        series_mul(series_invert(pochhammer(1, 1, T)), series_invert(pochhammer(r, 2 * r, T)));
    SmexTable table{r, SmexRoute::product, series_mul(numer, denom_inv).coeffs()};
    return table;
}

SmexTable sigma_mex_by_triangular(long r, long T) {
    if (r < 1) throw std::invalid_argument("sigma_mex_by_triangular requires r >= 1");
    const TruncatedSeries pbar = overpartition_series(T);
    SmexTable table{r, SmexRoute::convolution, std::vector<Int>(static_cast<std::size_t>(T) + 1)};
    for (long n = 0; n <= T; ++n) {
        Int acc = 0;
        for (long long k = 0; r * triangular_number(k) <= n; ++k)
            acc += pbar[n - static_cast<long>(r * triangular_number(k))];
        table.values[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return table;
}

std::vector<std::uint64_t> sigma_mex_values_mod2k(long r, int k, long T) {
    if (r < 1) throw std::invalid_argument("sigma_mex_values_mod2k requires r >= 1");
    ReducedSeries s = ReducedSeries::one(T, k);
    for (long m = 1; m <= T; ++m) s.mul_binomial(m, +1);                  // (-q;q)
    for (long m = 2 * r; m <= T; m += 2 * r) s.mul_binomial(m, -1);       // (q^{2r};q^{2r})
    for (long m = 1; m <= T; ++m) s.div_binomial(m, -1);                  // 1/(q;q)
    for (long m = r; m <= T; m += 2 * r) s.div_binomial(m, -1);           // 1/(q^r;q^{2r})
    std::vector<std::uint64_t> out(static_cast<std::size_t>(T) + 1);
    for (long n = 0; n <= T; ++n) out[static_cast<std::size_t>(n)] = s[n];
    return out;
}

std::vector<std::uint64_t> smex_values_mod2k(int k, long T) {
    ReducedSeries s = ReducedSeries::one(T, k);
    for (int copy = 0; copy < 3; ++copy)
        for (long m = 1; m <= T; ++m) s.mul_binomial(m, +1);
    std::vector<std::uint64_t> out(static_cast<std::size_t>(T) + 1);
    for (long n = 0; n <= T; ++n) out[static_cast<std::size_t>(n)] = s[n];
    return out;
}

std::optional<long> is_triangular(long long n) {
    if (n < 1) return std::nullopt;
    if (n > (std::numeric_limits<long long>::max() - 1) / 8)
        throw std::invalid_argument("triangular test out of range");
    const long long disc = 8 * n + 1;
    long long root = std::llround(std::sqrt(static_cast<long double>(disc)));
    while (root * root > disc) --root;
    while ((root + 1) * (root + 1) <= disc) ++root;
    if (root * root != disc) return std::nullopt;
    const long long j = (root - 1) / 2;
    return (j >= 1 && j * (j + 1) / 2 == n) ? std::optional<long>(static_cast<long>(j))
                                            : std::nullopt;
}

bool parity_predict(long long n) { return is_triangular(n).has_value(); }

namespace {

// Natural log of a positive big integer from its bit length and top bits.
long double log_of_int(const Int& v) {
    const unsigned bits = boost::multiprecision::msb(v) + 1;
    const unsigned shift = bits > 64 ? bits - 64 : 0;
    const std::uint64_t top = Int(v >> shift).convert_to<std::uint64_t>();
    return std::log(static_cast<long double>(top)) +
           static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

}  // namespace

AsymptoticPoint asym_estimate(const SmexTable& table, long n) {
    if (n < 1) throw std::invalid_argument("asymptotic comparison requires n >= 1");
    if (n > table.max_n())
        throw ExactValueMissing("table of order " + std::to_string(table.max_n()) +
                                " has no value at n = " + std::to_string(n));
    const long double pi = std::numbers::pi_v<long double>;
    const long double nn = static_cast<long double>(n);
    const long double log_estimate =
        pi * std::sqrt(nn) - std::log(8.0L * static_cast<long double>(table.r)) -
        0.75L * std::log(nn);
    AsymptoticPoint point;
    point.n = n;
    point.exact = table.values[static_cast<std::size_t>(n)];
    point.estimate = std::exp(log_estimate);
    point.ratio = std::exp(log_of_int(point.exact) - log_estimate);
    return point;
}

}  // namespace omex
