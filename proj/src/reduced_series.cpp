#include "omex/reduced_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace omex {

namespace {

int check_k(int k) {
    if (k < 1 || k > 62) throw std::invalid_argument("modulus exponent k must be in [1, 62]");
    return k;
}

}  // namespace

ReducedSeries::ReducedSeries(long trunc_order, int k)
    : k_(check_k(k)),
      mask_((std::uint64_t(1) << k) - 1),
      coeffs_(static_cast<std::size_t>(trunc_order) + 1) {
    if (trunc_order < 0) throw std::invalid_argument("truncation order must be nonnegative");
}

ReducedSeries ReducedSeries::one(long trunc_order, int k) {
    ReducedSeries s(trunc_order, k);
    s.coeffs_[0] = 1;
    return s;
}

std::uint64_t residue_mod2k(const Int& v, int k) {
    check_k(k);
    const Int modulus = Int(std::uint64_t(1) << k);
    Int m = v % modulus;  // remainder carries the sign of v
    if (m < 0) m += modulus;
    return m.convert_to<std::uint64_t>();
}

ReducedSeries ReducedSeries::reduce(const TruncatedSeries& s, int k) {
    ReducedSeries r(s.trunc_order(), k);
    for (long i = 0; i <= s.trunc_order(); ++i)
        r.coeffs_[static_cast<std::size_t>(i)] = residue_mod2k(s[i], k);
    return r;
}

void ReducedSeries::mul_binomial(long m, int sign) {
    const long t = trunc_order();
    for (long n = t; n >= m; --n) {
        const std::uint64_t lo = coeffs_[static_cast<std::size_t>(n - m)];
        std::uint64_t& c = coeffs_[static_cast<std::size_t>(n)];
        c = (sign > 0 ? c + lo : c - lo) & mask_;
    }
}

void ReducedSeries::div_binomial(long m, int sign) {
    const long t = trunc_order();
    for (long n = m; n <= t; ++n) {
        const std::uint64_t lo = coeffs_[static_cast<std::size_t>(n - m)];
        std::uint64_t& c = coeffs_[static_cast<std::size_t>(n)];
        c = (sign > 0 ? c - lo : c + lo) & mask_;
    }
}

ReducedSeries reduced_add(const ReducedSeries& a, const ReducedSeries& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("reduced arithmetic requires equal moduli");
    ReducedSeries r(std::min(a.trunc_order(), b.trunc_order()), a.k_);
    for (long i = 0; i <= r.trunc_order(); ++i)
        r.coeffs_[static_cast<std::size_t>(i)] = (a[i] + b[i]) & r.mask_;
    return r;
}

ReducedSeries reduced_mul(const ReducedSeries& a, const ReducedSeries& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("reduced arithmetic requires equal moduli");
    ReducedSeries r(std::min(a.trunc_order(), b.trunc_order()), a.k_);
    const long t = r.trunc_order();
    for (long i = 0; i <= t; ++i) {
        if (a[i] == 0) continue;
        for (long j = 0; i + j <= t; ++j)
            r.coeffs_[static_cast<std::size_t>(i + j)] =
                (r.coeffs_[static_cast<std::size_t>(i + j)] + a[i] * b[j]) & r.mask_;
    }
    return r;
}

}  // namespace omex
