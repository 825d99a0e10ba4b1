#include "omex/commands.hpp"

#include <cstdio>
#include <ostream>

#include "omex/eta.hpp"
#include "omex/overpartition.hpp"
#include "omex/smex.hpp"

namespace omex {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_long_double(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6Le", v);
    return buf;
}

std::vector<Int> payload_to_values(const std::vector<std::string>& payload) {
    std::vector<Int> values;
    values.reserve(payload.size());
    for (const std::string& s : payload) values.emplace_back(s);
    return values;
}

long count_triangular_upto(long X) {
    long count = 0;
    for (long long j = 1; j * (j + 1) / 2 <= X; ++j) ++count;
    return count;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl") return OutputFormat::jsonl;
    throw UnsupportedFormat("unknown format '" + name + "' (expected csv or jsonl)");
}

std::vector<Int> cached_sigma_values(long r, long T, const StoreOptions& store) {
    const CacheKey key{r, T, CacheMode::exact, 0};
    if (!store.no_cache) {
        try {
            if (auto entry = cache_load(store.cache_dir, key))
                return payload_to_values(entry->payload);
        } catch (const VersionMismatch&) {
            // stale format: fall through and rewrite
        } catch (const CorruptCache&) {
            // unreadable file: fall through and rewrite
        }
    }
    std::vector<Int> values = sigma_mex_table(r, T).values;
    if (!store.no_cache) {
        CacheEntry entry;
        entry.key = key;
        entry.payload.reserve(values.size());
        for (const Int& v : values) entry.payload.push_back(v.str());
        cache_store(store.cache_dir, entry);
    }
    return values;
}

std::vector<std::uint64_t> cached_sigma_residues(long r, int k, long T,
                                                 const StoreOptions& store) {
    const CacheKey key{r, T, CacheMode::mod2k, k};
    if (!store.no_cache) {
        try {
            if (auto entry = cache_load(store.cache_dir, key)) {
                std::vector<std::uint64_t> values;
                values.reserve(entry->payload.size());
                for (const std::string& s : entry->payload) values.push_back(std::stoull(s));
                return values;
            }
        } catch (const VersionMismatch&) {
        } catch (const CorruptCache&) {
        }
    }
    std::vector<std::uint64_t> values = sigma_mex_values_mod2k(r, k, T);
    if (!store.no_cache) {
        CacheEntry entry;
        entry.key = key;
        entry.payload.reserve(values.size());
        for (std::uint64_t v : values) entry.payload.push_back(std::to_string(v));
        cache_store(store.cache_dir, entry);
    }
    return values;
}

void cmd_table(std::ostream& out, long r, long max_n, OutputFormat format,
               const StoreOptions& store) {
    if (r < 1) throw std::invalid_argument("table requires r >= 1");
    if (max_n < 0) throw std::invalid_argument("table requires max-n >= 0");
    const std::vector<Int> values = cached_sigma_values(r, max_n, store);
    if (format == OutputFormat::csv) out << "n,value\n";
    for (long n = 0; n <= max_n; ++n) {
        const std::string v = values[static_cast<std::size_t>(n)].str();
        if (format == OutputFormat::csv)
            out << n << ',' << v << '\n';
        else
            out << "{\"n\":" << n << ",\"value\":\"" << v << "\"}\n";
    }
}

namespace {

int verify_d3(std::ostream& out, long max_n, long oracle_cap) {
    const TruncatedSeries cube = smex_series(max_n);
    const SmexTable table = sigma_mex_table(1, max_n);
    for (long n = 0; n <= max_n; ++n) {
        if (table.values[static_cast<std::size_t>(n)] != cube[n]) {
            out << "d3: FAIL at n=" << n << " (product route vs (-q;q)^3)\n";
            return 1;
        }
    }
    // the enumeration cross-check is pinned at n <= 30; a lower cap
    // surfaces CapExceeded rather than silently shrinking the range
    const long small = std::min(max_n, 30L);
    for (long n = 0; n <= small; ++n) {
        const Int d3 = colored_distinct_count(n, oracle_cap);
        const Int sums = sigma_mex_oracle(n, 1, oracle_cap).total;
        if (d3 != cube[n] || sums != cube[n]) {
            out << "d3: FAIL at n=" << n << " (oracle " << sums << ", colored " << d3
                << ", series " << cube[n] << ")\n";
            return 1;
        }
    }
    out << "d3: pass (series n <= " << max_n << ", enumeration n <= " << small << ")\n";
    return 0;
}

int verify_tk(std::ostream& out, long r, long max_n) {
    const SmexTable product = sigma_mex_table(r, max_n);
    const SmexTable convolution = sigma_mex_by_triangular(r, max_n);
    for (long n = 0; n <= max_n; ++n) {
        if (product.values[static_cast<std::size_t>(n)] !=
            convolution.values[static_cast<std::size_t>(n)]) {
            out << "tk: FAIL at n=" << n << " (r=" << r << ")\n";
            return 1;
        }
    }
    out << "tk: pass (r=" << r << ", n <= " << max_n << ")\n";
    return 0;
}

int verify_parity(std::ostream& out, long max_n) {
    const std::vector<std::uint64_t> residues = smex_values_mod2k(1, max_n);
    for (long n = 1; n <= max_n; ++n) {
        const bool odd = residues[static_cast<std::size_t>(n)] != 0;
        if (odd != parity_predict(n)) {
            out << "parity: FAIL at n=" << n << "\n";
            return 1;
        }
    }
    out << "parity: pass (n <= " << max_n << ", odd exactly at triangular n)\n";
    return 0;
}

int verify_oracle(std::ostream& out, long r_max, long max_n, long cap) {
    const long limit = max_n;  // a cap below max_n surfaces CapExceeded verbatim
    const TruncatedSeries pbar = overpartition_series(limit);
    for (long n = 0; n <= limit; ++n) {
        if (overpartition_count(n, cap) != pbar[n]) {
            out << "oracle: FAIL count at n=" << n << "\n";
            return 1;
        }
        bool ok = true;
        for_each_overpartition(
            n,
            [&](const Overpartition& pi) {
                if (least_r_gap(pi, 1) != min_excludant(pi)) ok = false;
            },
            cap);
        if (!ok) {
            out << "oracle: FAIL r-gap/mex identity at n=" << n << "\n";
            return 1;
        }
    }
    const long stair_n = std::min(limit, 20L);
    for (long r = 1; r <= r_max; ++r) {
        for (long k = 0; k <= 3; ++k) {
            for (long n = 0; n <= stair_n; ++n) {
                const long base = n - r * static_cast<long>(triangular_number(k));
                if (base < 0) continue;
                bool ok = true;
                for_each_overpartition(
                    base,
                    [&](const Overpartition& pi) {
                        if (least_r_gap(staircase_insert(pi, r, k), r) <= k) ok = false;
                    },
                    cap);
                if (!ok) {
                    out << "oracle: FAIL staircase image at n=" << n << " r=" << r << " k=" << k
                        << "\n";
                    return 1;
                }
            }
        }
    }
    out << "oracle: pass (counts and mex identities n <= " << limit << ", staircase n <= "
        << stair_n << ")\n";
    return 0;
}

int verify_eta_congruence(std::ostream& out, long r, int k, long terms) {
    const CongruenceReport report = verify_congruence(r, k, terms);
    if (!report.ok) {
        out << "eta-congruence: FAIL at exponent " << *report.first_bad_exponent << " (expected "
            << report.expected << ", got " << report.got << " mod 2^" << k << ")\n";
        return 1;
    }
    out << "eta-congruence: pass (r=" << r << ", k=" << k << ", terms=" << terms << ")\n";
    return 0;
}

}  // namespace

int cmd_verify(std::ostream& out, const std::string& suite, long r, int k, long max_n,
               long oracle_cap) {
    if (suite == "d3") return verify_d3(out, max_n, oracle_cap);
    if (suite == "tk") return verify_tk(out, r, max_n);
    if (suite == "parity") return verify_parity(out, max_n);
    if (suite == "oracle") return verify_oracle(out, std::min(r, 3L), max_n, oracle_cap);
    if (suite == "eta-congruence") return verify_eta_congruence(out, r, k, max_n);
    throw std::invalid_argument("unknown verify suite '" + suite +
                                "' (expected d3, tk, parity, oracle, eta-congruence)");
}

DensityReport density_scan(long r, int k, long X, const StoreOptions& store) {
    if (X < 0) throw std::invalid_argument("density scan requires X >= 0");
    DensityReport report;
    report.r = r;
    report.k = k;
    report.X = X;
    try {
        factor_23(r);
    } catch (const UnsupportedR&) {
        report.warning = "UnsupportedR";
    }
    const std::vector<std::uint64_t> residues = cached_sigma_residues(r, k, X, store);
    for (long n = 0; n <= X; ++n)
        if (residues[static_cast<std::size_t>(n)] != 0) ++report.nonzero_count;
    report.density = static_cast<double>(X + 1 - report.nonzero_count) /
                     static_cast<double>(X + 1);
    if (r == 1 && k == 1) report.triangular_count = count_triangular_upto(X);
    return report;
}

void cmd_density(std::ostream& out, long r, int k, long X, OutputFormat format,
                 const StoreOptions& store) {
    const DensityReport report = density_scan(r, k, X, store);
    if (format == OutputFormat::csv) {
        out << "# counts include n=0\n";
        out << "r,k,x,nonzero_count,density,triangular_count,warning\n";
        out << report.r << ',' << report.k << ',' << report.X << ',' << report.nonzero_count
            << ',' << format_double(report.density) << ',';
        if (report.triangular_count) out << *report.triangular_count;
        out << ',';
        if (report.warning) out << *report.warning;
        out << '\n';
    } else {
        out << "{\"r\":" << report.r << ",\"k\":" << report.k << ",\"x\":" << report.X
            << ",\"nonzero_count\":" << report.nonzero_count << ",\"density\":"
            << format_double(report.density);
        if (report.triangular_count) out << ",\"triangular_count\":" << *report.triangular_count;
        if (report.warning) out << ",\"warning\":\"" << *report.warning << "\"";
        out << "}\n";
    }
}

void cmd_eta(std::ostream& out, long r, int k, OutputFormat format) {
    const FrkForm form = build_frk(r, k);
    const auto [cond4, cond5] = ghn_check(form.quotient);
    const CuspReport cusps = cusp_orders(form.quotient);

    if (format == OutputFormat::csv) {
        out << "field,value\n";
        out << "r," << r << '\n';
        out << "k," << k << '\n';
        out << "level," << form.quotient.level << '\n';
        out << "weight," << form.weight << '\n';
        out << "exponents,";
        bool first = true;
        for (const auto& [delta, rd] : form.quotient.exponents) {
            if (!first) out << ' ';
            out << "eta(" << delta << "z)^" << rd;
            first = false;
        }
        out << '\n';
        out << "cond_delta_sum," << (cond4 ? "ok" : "violated") << '\n';
        out << "cond_codelta_sum," << (cond5 ? "ok" : "violated") << '\n';
        out << "character_s,2^" << form.s_exp2 << " * 3^" << form.s_exp3 << '\n';
        out << "cusp_d,order\n";
        for (const CuspOrder& entry : cusps.entries) {
            out << entry.d << ',' << entry.order.str() << '\n';
        }
        out << "holomorphic," << (cusps.holomorphic ? "true" : "false") << '\n';
    } else {
        out << "{\"r\":" << r << ",\"k\":" << k << ",\"level\":" << form.quotient.level
            << ",\"weight\":" << form.weight << ",\"exponents\":{";
        bool first = true;
        for (const auto& [delta, rd] : form.quotient.exponents) {
            if (!first) out << ',';
            out << "\"" << delta << "\":" << rd;
            first = false;
        }
        out << "},\"cond_delta_sum\":" << (cond4 ? "true" : "false")
            << ",\"cond_codelta_sum\":" << (cond5 ? "true" : "false")
            << ",\"character_s\":\"2^" << form.s_exp2 << " * 3^" << form.s_exp3
            << "\",\"cusps\":[";
        first = true;
        for (const CuspOrder& entry : cusps.entries) {
            if (!first) out << ',';
            out << "{\"d\":" << entry.d << ",\"order\":\"" << entry.order.str() << "\"}";
            first = false;
        }
        out << "],\"holomorphic\":" << (cusps.holomorphic ? "true" : "false") << "}\n";
    }
}

void cmd_asym(std::ostream& out, long r, const std::vector<long>& points, long budget,
              OutputFormat format, const StoreOptions& store) {
    if (r < 1) throw std::invalid_argument("asym requires r >= 1");
    long max_point = 0;
    for (long n : points) {
        if (n < 1) throw std::invalid_argument("asym points must be >= 1");
        max_point = std::max(max_point, n);
    }
    if (max_point > budget)
        throw CapExceeded("asym point " + std::to_string(max_point) +
                          " exceeds the truncation budget " + std::to_string(budget));

    if (format == OutputFormat::csv) out << "n,exact,estimate,ratio\n";
    if (points.empty()) return;

    SmexTable table{r, SmexRoute::product, cached_sigma_values(r, max_point, store)};
    for (long n : points) {
        const AsymptoticPoint p = asym_estimate(table, n);
        char ratio_buf[64];
        std::snprintf(ratio_buf, sizeof(ratio_buf), "%.6Lf", p.ratio);
        if (format == OutputFormat::csv) {
            out << p.n << ',' << p.exact.str() << ',' << format_long_double(p.estimate) << ','
                << ratio_buf << '\n';
        } else {
            out << "{\"n\":" << p.n << ",\"exact\":\"" << p.exact.str() << "\",\"estimate\":\""
                << format_long_double(p.estimate) << "\",\"ratio\":" << ratio_buf << "}\n";
        }
    }
}

}  // namespace omex
