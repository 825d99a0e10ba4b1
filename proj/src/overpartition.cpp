#include "omex/overpartition.hpp"

#include <algorithm>

namespace omex {

std::string Overpartition::to_string() const {
    if (parts.empty()) return "0";
    std::string out;
    for (const auto& p : parts) {
        for (long i = 0; i < p.multiplicity; ++i) {
            if (!out.empty()) out += '+';
            out += std::to_string(p.value);
            if (i == 0 && p.overlined_first) out += '~';
        }
    }
    return out;
}

namespace {

void check_cap(long n, long cap) {
    if (n < 0) throw std::invalid_argument("weight must be nonnegative");
    if (n > cap)
        throw CapExceeded("enumeration of weight " + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(cap));
}

void enumerate_rec(long remaining, long max_value, Overpartition& current,
                   const std::function<void(const Overpartition&)>& visit) {
    if (remaining == 0) {
        visit(current);
        return;
    }
    for (long v = std::min(max_value, remaining); v >= 1; --v) {
        for (long mult = remaining / v; mult >= 1; --mult) {
            for (int over = 1; over >= 0; --over) {
                current.parts.push_back({v, mult, over != 0});
                enumerate_rec(remaining - v * mult, v - 1, current, visit);
                current.parts.pop_back();
            }
        }
    }
}

}  // namespace

void for_each_overpartition(long n, const std::function<void(const Overpartition&)>& visit,
                            long cap) {
    check_cap(n, cap);
    Overpartition current;
    enumerate_rec(n, n, current, visit);
}

std::vector<Overpartition> enumerate_overpartitions(long n, long cap) {
    std::vector<Overpartition> out;
    for_each_overpartition(n, [&](const Overpartition& pi) { out.push_back(pi); }, cap);
    return out;
}

Int overpartition_count(long n, long cap) {
    Int count = 0;
    for_each_overpartition(n, [&](const Overpartition&) { ++count; }, cap);
    return count;
}

long min_excludant(const Overpartition& pi) { return least_r_gap(pi, 1); }

long least_r_gap(const Overpartition& pi, long r) {
    if (r < 1) throw std::invalid_argument("least_r_gap requires r >= 1");
    // parts are sorted by decreasing value; scan m = 1, 2, ... upward
    for (long m = 1;; ++m) {
        long plain = 0;
        for (const auto& p : pi.parts)
            if (p.value == m) {
                plain = p.plain_count();
                break;
            }
        if (plain < r) return m;
    }
}

OracleSum sigma_mex_oracle(long n, long r, long cap) {
    if (r < 1) throw std::invalid_argument("sigma_mex_oracle requires r >= 1");
    OracleSum sum;
    sum.n = n;
    sum.r = r;
    for_each_overpartition(
        n,
        [&](const Overpartition& pi) {
            sum.total += least_r_gap(pi, r);
            ++sum.count;
        },
        cap);
    return sum;
}

Overpartition staircase_insert(const Overpartition& pi, long r, long k) {
    if (r < 1 || k < 0) throw std::invalid_argument("staircase_insert requires r >= 1, k >= 0");
    Overpartition out = pi;
    for (long v = 1; v <= k; ++v) {
        auto it = std::find_if(out.parts.begin(), out.parts.end(),
                               [&](const OverpartitionPart& p) { return p.value == v; });
        if (it != out.parts.end()) {
            it->multiplicity += r;
        } else {
            auto pos = std::find_if(out.parts.begin(), out.parts.end(),
                                    [&](const OverpartitionPart& p) { return p.value < v; });
            out.parts.insert(pos, {v, r, false});
        }
    }
    return out;
}

namespace {

// Distinct colored parts: per value choose a nonempty subset of the three
// colors, each chosen color contributing one part of that value. Every
// colored partition is visited as its own leaf.
void colored_rec(long remaining, long max_value, Int& count) {
    if (remaining == 0) {
        ++count;
        return;
    }
    for (long v = std::min(max_value, remaining); v >= 1; --v) {
        // even taking all of 1..v in all three colors cannot reach the remainder
        if (3 * v * (v + 1) / 2 < remaining) return;
        for (unsigned mask = 1; mask < 8; ++mask) {
            const long copies = __builtin_popcount(mask);
            if (copies * v > remaining) continue;
            colored_rec(remaining - copies * v, v - 1, count);
        }
    }
}

}  // namespace

Int colored_distinct_count(long n, long cap) {
    check_cap(n, cap);
    if (n == 0) return 1;
    Int count = 0;
    colored_rec(n, n, count);
    return count;
}

}  // namespace omex
