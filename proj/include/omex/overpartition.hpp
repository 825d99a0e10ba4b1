#pragma once

#include <functional>
#include <string>
#include <vector>

#include "omex/bigint.hpp"
#include "omex/errors.hpp"

namespace omex {

// Guard for the exponential enumerators below; never raised implicitly.
inline constexpr long kDefaultEnumerationCap = 50;

/// One run of equal parts inside an overpartition. The boolean marks whether
/// the first occurrence of this value carries the overline, so "at most one
/// overline per distinct value" holds by construction.
struct OverpartitionPart {
    long value = 0;
    long multiplicity = 0;
    bool overlined_first = false;

    bool operator==(const OverpartitionPart&) const = default;

    // Copies of this value that do not carry the overline.
    long plain_count() const { return multiplicity - (overlined_first ? 1 : 0); }
};

/// An overpartition: runs with strictly decreasing values. The empty list is
/// the unique overpartition of 0.
struct Overpartition {
    std::vector<OverpartitionPart> parts;

    bool operator==(const Overpartition&) const = default;

    long weight() const {
        long w = 0;
        for (const auto& p : parts) w += p.value * p.multiplicity;
        return w;
    }

    // "4~+3+1~+1" style rendering, '~' marking the overlined occurrence.
    std::string to_string() const;
};

/// Visits every overpartition of n exactly once, values descending,
/// overlined variant of each run emitted before the plain one.
/// Throws CapExceeded when n exceeds the cap.
void for_each_overpartition(long n, const std::function<void(const Overpartition&)>& visit,
                            long cap = kDefaultEnumerationCap);

std::vector<Overpartition> enumerate_overpartitions(long n, long cap = kDefaultEnumerationCap);

/// Number of overpartitions of n by direct enumeration.
Int overpartition_count(long n, long cap = kDefaultEnumerationCap);

/// Smallest positive integer that is not a part of the non-overlined parts.
/// An overlined occurrence of m does not block m.
long min_excludant(const Overpartition& pi);

/// Smallest positive integer occurring fewer than r times among the
/// non-overlined parts; r = 1 recovers min_excludant.
long least_r_gap(const Overpartition& pi, long r);

struct OracleSum {
    long n = 0;
    long r = 1;
    Int total = 0;  // sum of least r-gaps over all overpartitions of n
    Int count = 0;  // number of overpartitions enumerated
};

/// Ground-truth sum of least r-gaps over all overpartitions of n.
/// n = 0 contributes the empty overpartition with gap 1.
OracleSum sigma_mex_oracle(long n, long r, long cap = kDefaultEnumerationCap);

/// Inserts r plain copies of each of 1..k (the staircase injection image);
/// weight grows by r*k(k+1)/2 and overline flags are untouched.
Overpartition staircase_insert(const Overpartition& pi, long r, long k);

/// Number of partitions of n into distinct parts where each part carries one
/// of three colors (a value may repeat only with distinct colors), counted by
/// direct enumeration of the color subsets.
Int colored_distinct_count(long n, long cap = kDefaultEnumerationCap);

}  // namespace omex
