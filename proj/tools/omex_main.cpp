#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "omex/commands.hpp"
#include "omex/errors.hpp"
#include "omex/overpartition.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Commands render into a buffer first so a failed run never leaves a
// half-written output file behind.
int write_output(const std::string& out_path, const std::string& content) {
    if (out_path == "-" || out_path.empty()) {
        std::cout << content;
        return kExitPass;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kExitIo;
    }
    out << content;
    if (!out) {
        std::cerr << "error: short write to '" << out_path << "'\n";
        return kExitIo;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series laboratory for overpartition mex statistics"};
    app.require_subcommand(1);

    std::string out_path = "-";
    std::string format_name = "csv";
    omex::StoreOptions store;
    long r = 1;
    int k = 1;

    auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("--out", out_path, "output file, or - for stdout");
        if (with_format) cmd->add_option("--format", format_name, "csv or jsonl");
        cmd->add_option("--cache-dir", store.cache_dir, "coefficient cache directory");
        cmd->add_flag("--no-cache", store.no_cache, "bypass the on-disk cache");
    };

    auto* table = app.add_subcommand("table", "write the sigma_r mex table");
    long table_max_n = 100;
    table->add_option("--r", r, "least-gap order r");
    table->add_option("--max-n", table_max_n, "largest n in the table");
    add_common(table);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    long verify_max_n = -1;
    long oracle_cap = omex::kDefaultEnumerationCap;
    verify->add_option("suite", suite, "d3 | tk | parity | oracle | eta-congruence")
        ->required();
    verify->add_option("--r", r, "least-gap order r");
    verify->add_option("--k", k, "congruence exponent k (eta-congruence)");
    verify->add_option("--max-n", verify_max_n, "suite range (default depends on suite)");
    verify->add_option("--cap", oracle_cap, "enumeration cap for oracle-backed checks");
    add_common(verify, false);

    auto* density = app.add_subcommand("density",
                                        "scan sigma_r mex residues mod 2^k (n = 0 included)");
    long density_x = 10000;
    density->add_option("--r", r, "least-gap order r");
    density->add_option("--k", k, "congruence exponent k");
    density->add_option("--x", density_x, "scan bound X");
    add_common(density);

    auto* eta = app.add_subcommand("eta", "certify the eta quotient f_{r,k}");
    eta->add_option("--r", r, "least-gap order r (must be 2^m * 3^n)");
    eta->add_option("--k", k, "congruence exponent k");
    add_common(eta);

    auto* asym = app.add_subcommand("asym", "compare exact values with the asymptotic form");
    std::vector<long> points;
    long budget = 20000;
    asym->add_option("--r", r, "least-gap order r");
    asym->add_option("points", points, "sample points n (one or more)");
    asym->add_option("--budget", budget, "largest admissible sample point");
    add_common(asym);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::ostringstream buf;
        int status = kExitPass;
        if (*table) {
            omex::cmd_table(buf, r, table_max_n, omex::parse_format(format_name), store);
        } else if (*verify) {
            if (verify_max_n < 0) {
                if (suite == "parity") verify_max_n = 10000;
                else if (suite == "oracle") verify_max_n = 20;
                else if (suite == "eta-congruence") verify_max_n = 50;
                else verify_max_n = 500;
            }
            status = omex::cmd_verify(buf, suite, r, k, verify_max_n, oracle_cap);
        } else if (*density) {
            omex::cmd_density(buf, r, k, density_x, omex::parse_format(format_name), store);
        } else if (*eta) {
            omex::cmd_eta(buf, r, k, omex::parse_format(format_name));
        } else if (*asym) {
            omex::cmd_asym(buf, r, points, budget, omex::parse_format(format_name), store);
        }
        const int write_status = write_output(out_path, buf.str());
        return write_status != kExitPass ? write_status : status;
    } catch (const omex::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const omex::Error& e) {
        // UnsupportedR, KTooSmall, CapExceeded, UnsupportedFormat, ...
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
