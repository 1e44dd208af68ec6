#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bures/rng.hpp"

namespace bures::checks {

struct SuiteConfig {
    std::vector<int> dims{4};  // trial i runs at dims[i % dims.size()]
    int trials = 200;
    std::uint64_t seed = 0;
    double tol = 1e-9;  // algebraic tolerance; finite-difference and other
                        // spec-pinned tolerances are fixed per property
    bool parallel = true;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    double max_residual = 0.0;
    int failed_trial = -1;
    std::string failed_property;
};

/// Collects property residuals within one trial; the first violated
/// property is remembered.
class TrialRecorder {
public:
    void check(const std::string& property, double residual, double tolerance) {
        if (residual > max_residual_) {
            max_residual_ = residual;
        }
        if (residual > tolerance && failed_.empty()) {
            failed_ = property;
        }
    }

    void fail(const std::string& property) {
        if (failed_.empty()) {
            failed_ = property;
        }
    }

    double max_residual() const { return max_residual_; }
    const std::string& failed_property() const { return failed_; }

private:
    double max_residual_ = 0.0;
    std::string failed_;
};

using TrialFn = std::function<void(int n, Rng& rng, TrialRecorder& rec)>;

/// Runs trials and merges outcomes in trial order, so the report is
/// byte-identical between the serial reference path and the OpenMP path.
SuiteResult run_trials(const std::string& name, const SuiteConfig& cfg,
                       const TrialFn& trial);

SuiteResult run_matcore_suite(const SuiteConfig& cfg);
SuiteResult run_sylvester_suite(const SuiteConfig& cfg);
SuiteResult run_submersion_suite(const SuiteConfig& cfg);
SuiteResult run_geodesy_suite(const SuiteConfig& cfg);
SuiteResult run_radius_suite(const SuiteConfig& cfg);
SuiteResult run_connection_suite(const SuiteConfig& cfg);
SuiteResult run_jacobi_suite(const SuiteConfig& cfg);
SuiteResult run_curvature_suite(const SuiteConfig& cfg);

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg);

/// Deterministic plain-text report, one line per suite.
std::string format_report(const std::vector<SuiteResult>& results);

}  // namespace bures::checks
