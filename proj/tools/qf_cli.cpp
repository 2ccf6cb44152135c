// Command-line front end: one subcommand per experiment family.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qf/arith.hpp"
#include "qf/experiments.hpp"
#include "qf/parallel.hpp"

namespace {

struct CliConfig {
    long sieve_limit = 100000;
    double tolerance = 1e-6;
    std::uint64_t seed = 1;
    unsigned parallelism = 1;
    std::string output_format = "csv";
    std::string output_path;
    bool timing = false;
};

int emit(const CliConfig& cfg, std::vector<qf::ExperimentReport> reports) {
    if (!cfg.timing)
        for (auto& r : reports) r.runtime_ms = 0;
    std::ostringstream os;
    if (cfg.output_format == "json")
        qf::write_json(os, reports);
    else
        qf::write_csv(os, reports);
    if (cfg.output_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(cfg.output_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << cfg.output_path << " for writing\n";
            return 2;
        }
        f << os.str();
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return ok ? 0 : 1;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Farey sums, quadratic Riemann sums and zeta mean values: residual checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Configuration file of key=value lines");

    CliConfig cfg;
    long n = 0;
    double sigma = -1.0;
    app.add_option("--n", n, "Size parameter (order, length or count)");
    app.add_option("--sigma", sigma, "Weight exponent sigma");
    app.add_option("--tol", cfg.tolerance, "Quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--threads", cfg.parallelism, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--format", cfg.output_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.output_path, "Output file (default stdout)");
    app.add_option("--sieve-limit", cfg.sieve_limit, "Sieve size for suite runs")->check(CLI::PositiveNumber);
    app.add_flag("--timing", cfg.timing, "Record wall-clock runtime_ms (off keeps output byte-stable)");

    auto* identities = app.add_subcommand("identities", "Exact-identity suite");
    auto* farey = app.add_subcommand("farey-sum", "Weighted Farey sum of cos 2 pi x, direct vs convolution");
    double a = 1.0;
    auto* quad = app.add_subcommand("quad-riemann", "Quadratic Riemann sum of g(a, x) against its limit");
    quad->add_option("--a", a, "Frequency a of g");
    auto* local = app.add_subcommand("zeta-local", "Local mean square of zeta against the quadratic sum");
    double la = 50.0, lb = 51.0;
    local->add_option("--a", la, "Left end");
    local->add_option("--b", lb, "Right end");
    auto* parseval = app.add_subcommand("parseval", "Parseval constants");
    auto* lw = app.add_subcommand("lw-integral", "Cauchy-weighted mean square with parameter n");
    auto* stepanov = app.add_subcommand("stepanov-scan", "Unit-window mean squares of zeta");
    auto* walk = app.add_subcommand("cauchy-walk", "Cauchy random walk moments");
    long samples = 10000;
    walk->add_option("--samples", samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    auto* invert = app.add_subcommand("mobius-invert", "Mobius inversion roundtrip on random sequences");
    auto* suite = app.add_subcommand("suite", "Named experiments");
    std::string names;
    bool list = false;
    suite->add_option("--names", names, "Comma-separated experiment names (default: all)");
    suite->add_flag("--list", list, "List experiment names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e, std::cerr, std::cerr);
        std::cerr << app.help();
        return 2;
    }
    qf::ExecutionContext::set_threads(cfg.parallelism);
    auto pick = [](long v, long dflt) { return v > 0 ? v : dflt; };
    auto pick_sigma = [&](double dflt) { return sigma >= 0.0 ? sigma : dflt; };

    try {
        if (identities->parsed()) {
            long nn = pick(n, 300);
            auto t = qf::build_sieve(nn);
            return emit(cfg, qf::identity_suite(nn, cfg.seed, t));
        }
        if (farey->parsed()) {
            long nn = pick(n, 100);
            auto t = qf::build_sieve(nn);
            return emit(cfg, {qf::farey_sum_report(nn, pick_sigma(0.0), t)});
        }
        if (quad->parsed()) return emit(cfg, {qf::quad_riemann_report(pick(n, 1000), pick_sigma(0.75), a)});
        if (local->parsed()) return emit(cfg, {qf::zeta_local_report(la, lb, pick_sigma(0.75), cfg.tolerance)});
        if (parseval->parsed()) return emit(cfg, qf::parseval_reports(pick_sigma(0.5), cfg.tolerance));
        if (lw->parsed()) return emit(cfg, {qf::lw_report(pick(n, 16), cfg.tolerance)});
        if (stepanov->parsed()) {
            long N = pick(n, 200);
            return emit(cfg, {qf::stepanov_report(pick_sigma(0.5), N, cfg.tolerance * static_cast<double>(N))});
        }
        if (walk->parsed()) return emit(cfg, qf::walk_reports(pick(n, 8), samples, cfg.seed));
        if (invert->parsed()) return emit(cfg, {qf::mobius_roundtrip_check(pick(n, 200), cfg.seed)});
        if (suite->parsed()) {
            if (list) {
                for (const auto& e : qf::experiment_registry()) std::cout << e.name << '\t' << e.description << '\n';
                return 0;
            }
            qf::SuiteConfig sc;
            sc.sieve_limit = cfg.sieve_limit;
            sc.tolerance = cfg.tolerance;
            sc.seed = cfg.seed;
            auto list_names = names.empty() ? qf::default_suite_names() : split_names(names);
            return emit(cfg, qf::run_suite(list_names, sc));
        }
    } catch (const qf::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qf::OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
