#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qf/arith.hpp"
#include "qf/funclib.hpp"
#include "qf/zeta.hpp"

namespace qf {

struct ExperimentReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;  // insertion order is output order
    double computed = 0.0;
    double predicted = 0.0;
    double residual = 0.0;
    std::optional<double> bound;
    std::int64_t runtime_ms = 0;
    bool pass = true;
    bool informational = false;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, long value);
    std::optional<std::string> get(const std::string& key) const;

    // residual = computed - predicted; pass iff |residual| <= bound when a bound
    // is present. Informational reports always pass.
    void finalize();
};

// Shortest form that keeps 17 significant digits, independent of locale.
std::string format_real(double v);

std::string params_string(const ExperimentReport& r);

inline constexpr const char* kCsvHeader = "name,params,computed,predicted,residual,bound,pass,runtime_ms";

void write_csv(std::ostream& os, const std::vector<ExperimentReport>& reports);
void write_json(std::ostream& os, const std::vector<ExperimentReport>& reports);

// O-envelope protocol: C = |residual|/envelope on the first entry (smallest n),
// then every entry gets bound = headroom * C * envelope. Envelopes are read from
// the "envelope" parameter.
void apply_fitted_envelope(std::vector<ExperimentReport>& series, double headroom = 2.0);

// Lemma i-ii: the double sums sum_{d<=n} d^-p sum_{lambda<=n/d} mu(lambda)/lambda^{2 sigma}
// for the regime of sigma, each against its main term, with an "envelope" parameter.
std::vector<ExperimentReport> lemma_mobius_sums(double sigma, long n, const SieveTables& t);

// sum_{d<=n} d^-p m_tau(n/d), and the same with |m_tau|.
double mobius_double_sum(const std::vector<double>& m_tau, long n, double p);
double mobius_double_abs_sum(const std::vector<double>& m_tau, long n, double p);

// Rubel sums sum_{d<=n} |m_1(n/d)|/d for every n = 0..N, grouped by floor(n/d).
std::vector<double> rubel_sums(const SieveTables& t, long N);

// F_{n,sigma}(cos 2 pi x) by the convolution path against its main term.
ExperimentReport theorem_t1a_check(long n, double sigma, const SieveTables& t);
// Same over increasing n with the envelope fitted on the first.
std::vector<ExperimentReport> theorem_t1a_series(const std::vector<long>& ns, double sigma, const SieveTables& t);

enum class FpFamily { fp1_i, fp1_ii, fp4_i, fp4_ii };

FpFamily parse_fp_family(const std::string& s);
std::string to_string(FpFamily f);

// f_sigma is the weighted function and must carry a finite Fourier map; the
// Farey sum is taken of f(x) = x^sigma f_sigma(x).
ExperimentReport theorem_fp_check(FpFamily family, const PeriodicFunction& f_sigma, long n, double sigma,
                                  const SieveTables& t);

// S_{n,sigma}(f) with f(x) = x^sigma f_sigma(x) against the printed constant.
ExperimentReport theorem_p1_check(const PeriodicFunction& f_sigma, double sigma, long n);

struct SuiteConfig {
    long sieve_limit = 1'000'000;
    double tolerance = 1e-6;  // quadrature tolerance, scaled per experiment
    std::uint64_t seed = 1;
    long walk_samples = 10'000;
};

// Shared state of one suite run: the sieve is built once, on first use.
class SuiteContext {
public:
    explicit SuiteContext(SuiteConfig cfg) : cfg_(cfg) {}
    const SuiteConfig& config() const { return cfg_; }
    const SieveTables& sieve(long need);

private:
    SuiteConfig cfg_;
    std::unique_ptr<SieveTables> sieve_;
};

using ExperimentFn = std::function<std::vector<ExperimentReport>(SuiteContext&)>;

struct ExperimentEntry {
    std::string name;
    std::string description;
    ExperimentFn run;
};

const std::vector<ExperimentEntry>& experiment_registry();
std::vector<std::string> default_suite_names();

// Runs the named experiments in the given order. Unknown names throw before
// anything runs.
std::vector<ExperimentReport> run_suite(const std::vector<std::string>& names, const SuiteConfig& cfg);

// Parameterized building blocks shared by the registry and the CLI.
std::vector<ExperimentReport> identity_suite(long n, std::uint64_t seed, const SieveTables& t);
ExperimentReport mertens_identity_check(long n, const SieveTables& t);
ExperimentReport farey_dual_path_check(long n, std::uint64_t seed, const SieveTables& t);
ExperimentReport fourier_formula_check(long n, std::uint64_t seed, const SieveTables& t);
ExperimentReport mobius_roundtrip_check(long support, std::uint64_t seed);
ExperimentReport farey_sum_report(long n, double sigma, const SieveTables& t);
ExperimentReport quad_riemann_report(long n, double sigma, double a);
ExperimentReport zeta_local_report(double a, double b, double sigma, double tol);
std::vector<ExperimentReport> parseval_reports(double sigma, double tol);
ExperimentReport lw_report(long n, double tol);
ExperimentReport stepanov_report(double sigma, long N, double tol);
std::vector<ExperimentReport> walk_reports(long n, long samples, std::uint64_t seed);

// Random trig polynomial of degree <= max_degree with real values.
FourierMap random_trig_coefficients(std::uint64_t seed, int max_degree);

}  // namespace qf
