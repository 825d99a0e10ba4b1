#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "omex/cache.hpp"
#include "omex/commands.hpp"
#include "omex/overpartition.hpp"
#include "omex/smex.hpp"

using namespace omex;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("omex-test-" + std::to_string(::rand()) + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CacheEntry sample_entry(long r, long T) {
    CacheEntry entry;
    entry.key = {r, T, CacheMode::exact, 0};
    const auto table = sigma_mex_table(r, T);
    for (const Int& v : table.values) entry.payload.push_back(v.str());
    return entry;
}

}  // namespace

TEST_CASE("cache round trip") {
    TempDir dir;
    const CacheEntry entry = sample_entry(1, 100);
    cache_store(dir.path, entry);

    auto loaded = cache_load(dir.path, entry.key);
    REQUIRE(loaded.has_value());
    CHECK(loaded->payload == entry.payload);
    CHECK(loaded->format_version == kCacheFormatVersion);

    CHECK_FALSE(cache_load(dir.path, CacheKey{2, 100, CacheMode::exact, 0}).has_value());
}

TEST_CASE("truncated and corrupted files are rejected") {
    TempDir dir;
    const CacheEntry entry = sample_entry(1, 20);
    cache_store(dir.path, entry);
    const auto path = dir.path / entry.key.file_name();
    const std::string bytes = read_file(path);

    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << bytes.substr(0, bytes.size() / 2);
    }
    CHECK_THROWS_AS(cache_load(dir.path, entry.key), CorruptCache);

    {
        std::string flipped = bytes;
        flipped[flipped.size() / 2] ^= 0x40;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << flipped;
    }
    CHECK_THROWS_AS(cache_load(dir.path, entry.key), CorruptCache);
}

TEST_CASE("foreign format versions are flagged, then silently replaced") {
    TempDir dir;
    CacheEntry entry = sample_entry(1, 12);
    entry.format_version = kCacheFormatVersion + 7;
    cache_store(dir.path, entry);
    CHECK_THROWS_AS(cache_load(dir.path, entry.key), VersionMismatch);

    // the caching wrapper recomputes and replaces the stale file
    StoreOptions store;
    store.cache_dir = dir.path;
    const auto values = cached_sigma_values(1, 12, store);
    CHECK(values == sigma_mex_table(1, 12).values);
    auto reloaded = cache_load(dir.path, entry.key);
    REQUIRE(reloaded.has_value());
    CHECK(reloaded->format_version == kCacheFormatVersion);
}

TEST_CASE("cache wrapper round trips exact and reduced tables") {
    TempDir dir;
    StoreOptions store;
    store.cache_dir = dir.path;

    const auto first = cached_sigma_values(2, 64, store);
    CHECK(std::filesystem::exists(dir.path / CacheKey{2, 64, CacheMode::exact, 0}.file_name()));
    const auto second = cached_sigma_values(2, 64, store);
    CHECK(first == second);
    CHECK(first == sigma_mex_table(2, 64).values);

    const auto reduced_first = cached_sigma_residues(2, 3, 64, store);
    const auto reduced_second = cached_sigma_residues(2, 3, 64, store);
    CHECK(reduced_first == reduced_second);
    CHECK(reduced_first == sigma_mex_values_mod2k(2, 3, 64));

    StoreOptions off;
    off.cache_dir = dir.path / "never-created";
    off.no_cache = true;
    CHECK(cached_sigma_values(2, 64, off) == first);
    CHECK_FALSE(std::filesystem::exists(off.cache_dir));
}

TEST_CASE("table rows") {
    StoreOptions store;
    store.no_cache = true;

    std::ostringstream csv;
    cmd_table(csv, 1, 3, OutputFormat::csv, store);
    CHECK(csv.str() == "n,value\n0,1\n1,3\n2,6\n3,13\n");

    std::ostringstream jsonl;
    cmd_table(jsonl, 1, 0, OutputFormat::jsonl, store);
    CHECK(jsonl.str() == "{\"n\":0,\"value\":\"1\"}\n");

    // rows equal the enumeration oracle through r = 2
    std::ostringstream r2;
    cmd_table(r2, 2, 30, OutputFormat::csv, store);
    std::istringstream lines(r2.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,value");
    for (long n = 0; n <= 30; ++n) {
        REQUIRE(std::getline(lines, line));
        CHECK(line == std::to_string(n) + "," + sigma_mex_oracle(n, 2).total.str());
    }
}

TEST_CASE("table output is byte-deterministic with and without cache") {
    TempDir dir;
    StoreOptions warm;
    warm.cache_dir = dir.path;
    StoreOptions cold;
    cold.no_cache = true;

    std::ostringstream first, second, third;
    cmd_table(first, 3, 40, OutputFormat::jsonl, warm);   // cold cache
    cmd_table(second, 3, 40, OutputFormat::jsonl, warm);  // warm cache
    cmd_table(third, 3, 40, OutputFormat::jsonl, cold);   // no cache
    CHECK(first.str() == second.str());
    CHECK(first.str() == third.str());
}

TEST_CASE("density reports") {
    StoreOptions store;
    store.no_cache = true;

    // parity cross-check: odd positions are exactly the triangulars plus n=0
    for (long X : {100L, 1000L, 5000L}) {
        const DensityReport report = density_scan(1, 1, X, store);
        const long closed_form =
            static_cast<long>((std::sqrt(8.0 * static_cast<double>(X) + 1.0) - 1.0) / 2.0);
        REQUIRE(report.triangular_count.has_value());
        CHECK(*report.triangular_count == closed_form);
        CHECK(report.nonzero_count == closed_form + 1);
        CHECK_FALSE(report.warning.has_value());
    }

    const DensityReport solo = density_scan(1, 1, 0, store);
    CHECK(solo.nonzero_count == 1);  // the value at n=0 is 1, which is odd
    CHECK(solo.density == 0.0);

    const DensityReport unsupported = density_scan(5, 2, 50, store);
    REQUIRE(unsupported.warning.has_value());
    CHECK(*unsupported.warning == "UnsupportedR");
    CHECK(unsupported.nonzero_count > 0);  // scan still ran

    // the (2,3) scan climbs over the sampled grid; counts pinned from the
    // reduced run, which the smex suite ties to both exact routes
    double prev = -1;
    const std::vector<std::pair<long, long>> pinned = {{5000, 2404}, {10000, 4585}, {20000, 8771}};
    for (const auto& [x, nonzero] : pinned) {
        const DensityReport trend = density_scan(2, 3, x, store);
        CHECK(trend.nonzero_count == nonzero);
        CHECK(trend.density >= prev);
        prev = trend.density;
    }

    std::ostringstream csv;
    cmd_density(csv, 1, 1, 100, OutputFormat::csv, store);
    CHECK(csv.str() ==
          "# counts include n=0\n"
          "r,k,x,nonzero_count,density,triangular_count,warning\n"
          "1,1,100,14,0.861386,13,\n");

    std::ostringstream jsonl;
    cmd_density(jsonl, 2, 2, 100, OutputFormat::jsonl, store);
    CHECK(jsonl.str().find("\"nonzero_count\":") != std::string::npos);
    CHECK(jsonl.str().find("warning") == std::string::npos);
}

TEST_CASE("eta certification report") {
    std::ostringstream out;
    cmd_eta(out, 1, 4, OutputFormat::csv);
    const std::string report = out.str();
    CHECK(report.find("level,384\n") != std::string::npos);
    CHECK(report.find("weight,4\n") != std::string::npos);
    CHECK(report.find("cond_delta_sum,ok\n") != std::string::npos);
    CHECK(report.find("cond_codelta_sum,ok\n") != std::string::npos);
    CHECK(report.find("holomorphic,true\n") != std::string::npos);
    CHECK(report.find("1,7\n") != std::string::npos);  // cusp d=1 of f_{1,4}

    std::ostringstream jsonl;
    cmd_eta(jsonl, 1, 4, OutputFormat::jsonl);
    CHECK(jsonl.str().find("\"level\":384") != std::string::npos);
    CHECK(jsonl.str().find("\"holomorphic\":true") != std::string::npos);

    CHECK_THROWS_AS(cmd_eta(out, 5, 4, OutputFormat::csv), UnsupportedR);
    CHECK_THROWS_AS(cmd_eta(out, 1, 3, OutputFormat::csv), KTooSmall);
}

TEST_CASE("asymptotic rows") {
    StoreOptions store;
    store.no_cache = true;

    std::ostringstream empty;
    cmd_asym(empty, 1, {}, 20000, OutputFormat::csv, store);
    CHECK(empty.str() == "n,exact,estimate,ratio\n");

    std::ostringstream rows;
    cmd_asym(rows, 1, {10, 40}, 20000, OutputFormat::csv, store);
    std::istringstream lines(rows.str());
    std::string header, row10, row40;
    std::getline(lines, header);
    std::getline(lines, row10);
    std::getline(lines, row40);
    CHECK(row10.substr(0, 3) == "10,");
    CHECK(row40.substr(0, 3) == "40,");
    CHECK(row10.find(sigma_mex_table(1, 10).values[10].str()) != std::string::npos);

    CHECK_THROWS_AS(cmd_asym(rows, 1, {30000}, 20000, OutputFormat::csv, store), CapExceeded);
}

TEST_CASE("verify suites succeed end to end") {
    std::ostringstream out;
    CHECK(cmd_verify(out, "d3", 1, 1, 60, 30) == 0);
    CHECK(cmd_verify(out, "tk", 3, 1, 500, 30) == 0);
    CHECK(cmd_verify(out, "parity", 1, 1, 500, 30) == 0);
    CHECK(cmd_verify(out, "oracle", 3, 1, 14, 30) == 0);
    CHECK(cmd_verify(out, "eta-congruence", 1, 3, 10, 30) == 0);
    CHECK_THROWS_AS(cmd_verify(out, "unknown", 1, 1, 10, 30), std::invalid_argument);
    CHECK_THROWS_AS(cmd_verify(out, "oracle", 1, 1, 40, 20), CapExceeded);
}

TEST_CASE("format names") {
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("jsonl") == OutputFormat::jsonl);
    CHECK_THROWS_AS(parse_format("yaml"), UnsupportedFormat);
}

#ifdef OMEX_CLI_PATH
namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(OMEX_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("command line exit codes") {
    TempDir dir;
    CHECK(run_cli("table --r 1 --max-n 5 --no-cache") == 0);
    CHECK(run_cli("verify parity --max-n 200") == 0);
    CHECK(run_cli("eta --r 1 --k 4") == 0);
    CHECK(run_cli("eta --r 5 --k 4") == 2);          // unsupported r
    CHECK(run_cli("eta --r 1 --k 3") == 2);          // k below the bound
    CHECK(run_cli("table --format yaml") == 2);      // unknown format
    CHECK(run_cli("verify nosuchsuite") == 2);
    CHECK(run_cli("asym 999999 --r 1") == 2);        // beyond the budget
    CHECK(run_cli("table --r 1 --max-n 4 --out /nonexistent-dir/t.csv") == 3);
    CHECK(run_cli("") == 2);  // a subcommand is required

    const auto out1 = dir.path / "a.csv";
    const auto out2 = dir.path / "b.csv";
    CHECK(run_cli("table --r 1 --max-n 20 --cache-dir " + (dir.path / "cache").string() +
                  " --out " + out1.string()) == 0);
    CHECK(run_cli("table --r 1 --max-n 20 --no-cache --out " + out2.string()) == 0);
    CHECK(read_file(out1) == read_file(out2));
    CHECK(!read_file(out1).empty());
}
#endif
