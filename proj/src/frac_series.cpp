#include "omex/frac_series.hpp"

#include <cstdlib>

namespace omex {

void FracExpSeries::mul_binomial_24th(long m, int sign) {
    const long t = trunc_order_24ths();
    for (long n = t; n >= m; --n) {
        if (sign > 0)
            coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - m)];
        else
            coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - m)];
    }
}

void FracExpSeries::div_binomial_24th(long m, int sign) {
    const long t = trunc_order_24ths();
    // y*(1 + sign*q^m) = x  =>  y[n] = x[n] - sign*y[n-m], ascending.
    for (long n = m; n <= t; ++n) {
        if (sign > 0)
            coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - m)];
        else
            coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - m)];
    }
}

void FracExpSeries::shift_up_24ths(long s) {
    if (s < 0) throw std::invalid_argument("shift must be nonnegative");
    if (s == 0) return;
    const long t = trunc_order_24ths();
    for (long n = t; n >= s; --n)
        coeffs_[static_cast<std::size_t>(n)] = std::move(coeffs_[static_cast<std::size_t>(n - s)]);
    for (long n = 0; n < std::min(s, t + 1); ++n)
        coeffs_[static_cast<std::size_t>(n)] = 0;
}

TruncatedSeries FracExpSeries::to_truncated() const {
    const long t24 = trunc_order_24ths();
    std::vector<Int> out(static_cast<std::size_t>(t24 / 24) + 1);
    for (long i = 0; i <= t24; ++i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (i % 24 != 0)
            throw FractionalLeadingExponent(
                "nonzero coefficient at fractional exponent " + std::to_string(i) + "/24");
        out[static_cast<std::size_t>(i / 24)] = c;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries eta_expansion(const EtaQuotient& eq, long T) {
    long shift_24 = 0;  // exponent of the monomial prefactor, in 1/24 units
    for (const auto& [delta, r] : eq.exponents) shift_24 += delta * r;
    if (shift_24 % 24 != 0)
        throw FractionalLeadingExponent("leading eta exponent " + std::to_string(shift_24) +
                                        "/24 is not an integer");
    if (shift_24 < 0)
        throw NegativeLeadingExponent("leading eta exponent " + std::to_string(shift_24 / 24) +
                                      " is negative");

    const long t24 = 24 * T;
    FracExpSeries s = FracExpSeries::one(t24);
    for (const auto& [delta, r] : eq.exponents) {
        const long stride = 24 * delta;  // (1 - q^{delta n}) lives at n*stride 24ths
        for (long copy = 0; copy < std::labs(r); ++copy) {
            for (long m = stride; m <= t24; m += stride) {
                if (r > 0)
                    s.mul_binomial_24th(m, -1);
                else
                    s.div_binomial_24th(m, -1);
            }
        }
    }
    s.shift_up_24ths(shift_24);
    return s.to_truncated();
}

}  // namespace omex
