#pragma once

#include <cstdint>
#include <vector>

#include "omex/bigint.hpp"
#include "omex/errors.hpp"

namespace omex {

/// Dense formal power series in q with exact integer coefficients,
/// truncated at a fixed order T (coefficients of q^0 .. q^T inclusive).
///
/// Values are immutable once built; every operation returns a fresh series.
/// Arithmetic between series of different truncation order works at the
/// minimum of the two orders, and the result carries that order.
class TruncatedSeries {
public:
    // Zero series of the given truncation order.
    explicit TruncatedSeries(long trunc_order)
        : coeffs_(static_cast<std::size_t>(check_order(trunc_order)) + 1) {}

    // Takes ownership of a full coefficient table; order is size-1.
    explicit TruncatedSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Int(0));
    }

    static TruncatedSeries one(long trunc_order) {
        TruncatedSeries s(trunc_order);
        s.coeffs_[0] = 1;
        return s;
    }

    // c * q^e, zero when e > trunc_order.
    static TruncatedSeries monomial(Int c, long exponent, long trunc_order);

    long trunc_order() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of q^i; i must lie in [0, trunc_order].
    const Int& operator[](long i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    static long check_order(long t);

    std::vector<Int> coeffs_;

    friend TruncatedSeries series_add(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_mul(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries series_invert(const TruncatedSeries&);
};

// Coefficient-wise sum at min(T_a, T_b).
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

// Exact Cauchy product truncated at min(T_a, T_b).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse up to the truncation order.
// Throws NonUnitConstantTerm unless the constant term is +1 or -1.
TruncatedSeries series_invert(const TruncatedSeries& a);

// a^e by repeated squaring; negative e routes through series_invert.
TruncatedSeries series_pow(const TruncatedSeries& a, long e);

// q-Pochhammer product (q^a; q^b)_inf = prod_{j>=0} (1 - q^{a+jb}),
// expanded to order T. Only factors with a+jb <= T contribute.
TruncatedSeries pochhammer(long a, long b, long T);

// Same with factors (1 + q^{a+jb}), i.e. (-q^a; q^b)_inf.
TruncatedSeries neg_pochhammer(long a, long b, long T);

// Cube of the Euler product by Jacobi's identity:
// sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}, truncated at T.
TruncatedSeries jacobi_cube(long T);

// Indicator series of the scaled triangular numbers r*k(k+1)/2 <= T.
TruncatedSeries triangular_gf(long r, long T);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_add(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_mul(a, b);
}

// k-th triangular number k(k+1)/2.
inline long long triangular_number(long long k) { return k * (k + 1) / 2; }

}  // namespace omex
