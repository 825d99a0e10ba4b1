#pragma once

#include <vector>

#include "omex/bigint.hpp"
#include "omex/errors.hpp"
#include "omex/eta_quotient.hpp"
#include "omex/series.hpp"

namespace omex {

/// Power series on the q^{1/24} exponent grid: coeffs_[i] is the coefficient
/// of q^{i/24}. This is the natural carrier for eta expansions, whose only
/// fractional exponent content is the q^{delta/24} prefactor of each factor.
class FracExpSeries {
public:
    // Zero series up to exponent trunc_order_24ths/24.
    explicit FracExpSeries(long trunc_order_24ths)
        : coeffs_(static_cast<std::size_t>(trunc_order_24ths) + 1) {
        if (trunc_order_24ths < 0)
            throw std::invalid_argument("truncation order must be nonnegative");
    }

    explicit FracExpSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Int(0));
    }

    static FracExpSeries one(long trunc_order_24ths) {
        FracExpSeries s(trunc_order_24ths);
        s.coeffs_[0] = 1;
        return s;
    }

    long trunc_order_24ths() const { return static_cast<long>(coeffs_.size()) - 1; }

    // Coefficient of q^{i/24}.
    const Int& at_24th(long i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    // In-place multiply by (1 + sign*q^{m/24}).
    void mul_binomial_24th(long m, int sign);

    // In-place divide by (1 + sign*q^{m/24}); exact, no unit division needed.
    void div_binomial_24th(long m, int sign);

    // Multiply by q^{s/24} (s >= 0): shifts coefficients up, dropping overflow.
    void shift_up_24ths(long s);

    // Exact conversion to the integer exponent grid. Throws
    // FractionalLeadingExponent if any nonzero coefficient sits off-grid.
    TruncatedSeries to_truncated() const;

private:
    std::vector<Int> coeffs_;
};

/// q-expansion of an eta quotient: the monomial prefactor
/// q^{(sum delta r_delta)/24} times prod (q^delta; q^delta)_inf^{r_delta},
/// assembled on the 1/24 grid and converted to the integer grid.
///
/// Throws FractionalLeadingExponent unless sum delta*r_delta = 0 (mod 24),
/// and NegativeLeadingExponent when that sum is negative.
TruncatedSeries eta_expansion(const EtaQuotient& eq, long T);

}  // namespace omex
