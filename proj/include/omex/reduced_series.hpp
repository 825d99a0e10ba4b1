#pragma once

#include <cstdint>
#include <vector>

#include "omex/series.hpp"

namespace omex {

/// Truncated series with coefficients stored mod 2^k (1 <= k <= 62).
/// Reduction commutes with ring operations, so congruence scans can run in
/// machine words instead of big integers. The caller always opts in
/// explicitly; nothing converts to reduced mode behind the scenes.
class ReducedSeries {
public:
    ReducedSeries(long trunc_order, int k);

    static ReducedSeries one(long trunc_order, int k);
    static ReducedSeries reduce(const TruncatedSeries& s, int k);

    long trunc_order() const { return static_cast<long>(coeffs_.size()) - 1; }
    int modulus_exponent() const { return k_; }
    std::uint64_t modulus_mask() const { return mask_; }

    // Residue of the coefficient of q^i, in [0, 2^k).
    std::uint64_t operator[](long i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    // In-place multiply / exact divide by (1 + sign*q^m).
    void mul_binomial(long m, int sign);
    void div_binomial(long m, int sign);

    bool operator==(const ReducedSeries&) const = default;

private:
    int k_;
    std::uint64_t mask_;
    std::vector<std::uint64_t> coeffs_;

    friend ReducedSeries reduced_add(const ReducedSeries&, const ReducedSeries&);
    friend ReducedSeries reduced_mul(const ReducedSeries&, const ReducedSeries&);
};

// Coefficient-wise sum / Cauchy product mod 2^k at min(T_a, T_b);
// both arguments must share the modulus.
ReducedSeries reduced_add(const ReducedSeries& a, const ReducedSeries& b);
ReducedSeries reduced_mul(const ReducedSeries& a, const ReducedSeries& b);

// Residue of an exact integer mod 2^k, mapped into [0, 2^k).
std::uint64_t residue_mod2k(const Int& v, int k);

}  // namespace omex
