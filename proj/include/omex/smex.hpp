#pragma once

#include <optional>
#include <vector>

#include "omex/bigint.hpp"
#include "omex/errors.hpp"
#include "omex/reduced_series.hpp"
#include "omex/series.hpp"

namespace omex {

enum class SmexRoute { product, convolution };

/// Table of sigma_r mex values for n = 0..trunc order, tagged with the
/// route that produced it. values[0] = 1 and the sequence is weakly
/// increasing; both are checked by the test suites, not enforced here.
struct SmexTable {
    long r = 1;
    SmexRoute route = SmexRoute::product;
    std::vector<Int> values;

    long max_n() const { return static_cast<long>(values.size()) - 1; }
};

/// Generating function of overpartition counts, (-q;q)_inf / (q;q)_inf.
TruncatedSeries overpartition_series(long T);

/// Generating function of the mex sums over overpartitions: (-q;q)_inf^3.
TruncatedSeries smex_series(long T);

/// Sum of least r-gaps via the closed product
/// (-q;q)(q^{2r};q^{2r}) / [(q;q)(q^r;q^{2r})].
SmexTable sigma_mex_table(long r, long T);

/// Same table via the triangular-number convolution
/// sum_k pbar(n - r*k(k+1)/2); shares only series primitives with the
/// product route.
SmexTable sigma_mex_by_triangular(long r, long T);

/// Residues of the sigma_r mex table mod 2^k, built entirely in reduced mode.
std::vector<std::uint64_t> sigma_mex_values_mod2k(long r, int k, long T);

/// Residues of the mex-sum series (-q;q)^3 mod 2^k.
std::vector<std::uint64_t> smex_values_mod2k(int k, long T);

/// j >= 1 with n = j(j+1)/2, when n is a positive triangular number.
std::optional<long> is_triangular(long long n);

/// Predicted parity of the mex sum at n: odd exactly at positive triangular
/// n. n = 0 reports even here even though the table value there is 1; the
/// parity statement ranges over positive n only.
bool parity_predict(long long n);

struct AsymptoticPoint {
    long n = 0;
    Int exact = 0;
    long double estimate = 0;  // e^{pi sqrt n} / (8 r n^{3/4})
    long double ratio = 0;     // exact / estimate
};

/// Compares the exact table value at n against the closed-form estimate.
/// Works in log space with extended precision, so the exponential cannot
/// overflow for any n the table can realistically reach.
/// Throws ExactValueMissing when the table is shorter than n.
AsymptoticPoint asym_estimate(const SmexTable& table, long n);

}  // namespace omex
