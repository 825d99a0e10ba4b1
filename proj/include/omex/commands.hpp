#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "omex/bigint.hpp"
#include "omex/cache.hpp"

namespace omex {

enum class OutputFormat { csv, jsonl };

OutputFormat parse_format(const std::string& name);  // throws UnsupportedFormat

struct StoreOptions {
    std::filesystem::path cache_dir = default_cache_dir();
    bool no_cache = false;
};

struct DensityReport {
    long r = 1;
    int k = 1;
    long X = 0;
    long nonzero_count = 0;  // #{n <= X : sigma_r mex(n) != 0 mod 2^k}, n = 0 included
    double density = 0;      // (X+1 - nonzero_count)/(X+1)
    // #{positive triangular n <= X}; only for the r=1, k=1 parity cross-check
    std::optional<long> triangular_count;
    // set when r is not 2^m * 3^n: the scan is still well-defined, the
    // almost-always-divisible guarantee just does not cover such r
    std::optional<std::string> warning;
};

/// sigma_r mex table rows (n, value) with decimal big integers.
void cmd_table(std::ostream& out, long r, long max_n, OutputFormat format,
               const StoreOptions& store);

/// Verification suites: d3, tk, parity, oracle, eta-congruence.
/// Returns 0 on pass, 1 on first mismatch (named in the output).
int cmd_verify(std::ostream& out, const std::string& suite, long r, int k, long max_n,
               long oracle_cap);

DensityReport density_scan(long r, int k, long X, const StoreOptions& store);

/// Density of sigma_r mex(n) = 0 mod 2^k for n <= X, in reduced-series mode.
void cmd_density(std::ostream& out, long r, int k, long X, OutputFormat format,
                 const StoreOptions& store);

/// Modular-form certification report for f_{r,k}: level, weight, mod-24
/// conditions, full cusp table with exact rational orders, verdict.
void cmd_eta(std::ostream& out, long r, int k, OutputFormat format);

/// Exact-vs-asymptotic comparison rows (n, exact, estimate, ratio).
void cmd_asym(std::ostream& out, long r, const std::vector<long>& points, long budget,
              OutputFormat format, const StoreOptions& store);

/// Exact sigma_r mex values through the cache (mode = exact).
std::vector<Int> cached_sigma_values(long r, long T, const StoreOptions& store);

/// Residues mod 2^k through the cache (mode = mod2k).
std::vector<std::uint64_t> cached_sigma_residues(long r, int k, long T,
                                                 const StoreOptions& store);

}  // namespace omex
