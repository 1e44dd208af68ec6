#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bures/checks/suites.hpp"
#include "bures/curvature.hpp"
#include "bures/geodesy.hpp"
#include "bures/io.hpp"
#include "bures/metric.hpp"

namespace {

// Exit codes: 0 ok, 1 check failure, 2 usage/parse, 3 not-SPD, 4 boundary.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotSpd = 3;
constexpr int kExitBoundary = 4;

nlohmann::json matrix_to_json(const bures::Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vector_to_json(const bures::Vector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

int cmd_dist(const std::string& a_path, const std::string& b_path) {
    const bures::SPDMatrix a = bures::read_spd(a_path);
    const bures::SPDMatrix b = bures::read_spd(b_path);
    std::cout << bures::format_fixed12(bures::distance(a, b)) << '\n';
    return kExitOk;
}

int cmd_geodesic(const std::string& a_path, const std::string& b_path, int samples) {
    const bures::SPDMatrix a = bures::read_spd(a_path);
    const bures::SPDMatrix b = bures::read_spd(b_path);
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        const bures::SPDMatrix point = bures::geodesic_point(a, b, t);
        const bures::Spectrum spec = bures::eig_sym(point.entries());
        nlohmann::json record;
        record["t"] = t;
        record["matrix"] = matrix_to_json(point.entries());
        record["eigenvalues"] = vector_to_json(spec.eigenvalues);
        record["radius"] = bures::radius(point);
        std::cout << record.dump() << '\n';
    }
    return kExitOk;
}

int cmd_exp(const std::string& a_path, const std::string& x_path, double t) {
    const bures::SPDMatrix a = bures::read_spd(a_path);
    const bures::SymmetricTangent x = bures::read_tangent(x_path);
    const bures::SPDMatrix result = bures::geodesic_ivp(a, x, t);
    std::cout << bures::format_matrix(result.entries());
    return kExitOk;
}

int cmd_log(const std::string& a_path, const std::string& b_path) {
    const bures::SPDMatrix a = bures::read_spd(a_path);
    const bures::SPDMatrix b = bures::read_spd(b_path);
    std::cout << bures::format_matrix(bures::log_map(a, b).entries());
    return kExitOk;
}

int cmd_curvature(const std::string& a_path) {
    const bures::SPDMatrix a = bures::read_spd(a_path);
    const bures::CurvatureReport report = bures::curvature_report(a);
    nlohmann::json record;
    record["eigenvalues"] = vector_to_json(report.eigenvalues);
    record["scalar_curvature"] = report.scalar_curvature;
    record["max_basis_sectional"] = report.max_basis_sectional;
    record["min_nonzero_basis_sectional"] = report.min_nonzero_basis_sectional;
    record["radius"] = report.radius;
    std::cout << record.dump() << '\n';
    return kExitOk;
}

int cmd_check(int n, int trials, std::uint64_t seed, bool serial) {
    double tol = 1e-9;
    if (const char* env = std::getenv("BURES_TOL")) {
        char* end = nullptr;
        tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(tol > 0.0)) {
            std::cerr << "error: BURES_TOL must be a positive number\n";
            return kExitUsage;
        }
    }
    bures::checks::SuiteConfig cfg;
    cfg.dims = {n};
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.tol = tol;
    cfg.parallel = !serial;
    const auto results = bures::checks::run_all_suites(cfg);
    std::cout << bures::checks::format_report(results);
    for (const auto& r : results) {
        if (!r.passed) {
            return kExitCheckFailed;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bures-Wasserstein geometry of symmetric positive-definite matrices"};
    app.require_subcommand(1);

    std::string a_path;
    std::string b_path;
    std::string x_path;
    int samples = 11;
    double t_param = 1.0;
    int check_n = 4;
    int check_trials = 200;
    std::uint64_t check_seed = 0;
    bool check_serial = false;

    auto* dist = app.add_subcommand("dist", "distance between two SPD matrices");
    dist->add_option("a", a_path, "first matrix file")->required();
    dist->add_option("b", b_path, "second matrix file")->required();

    auto* geodesic = app.add_subcommand("geodesic", "sample the minimal geodesic");
    geodesic->add_option("a", a_path, "start matrix file")->required();
    geodesic->add_option("b", b_path, "end matrix file")->required();
    geodesic->add_option("--samples", samples, "number of samples (>= 2)");

    auto* exp_cmd = app.add_subcommand("exp", "exponential map along a tangent");
    exp_cmd->add_option("a", a_path, "base matrix file")->required();
    exp_cmd->add_option("x", x_path, "tangent matrix file")->required();
    exp_cmd->add_option("--t", t_param, "ray parameter");

    auto* log_cmd = app.add_subcommand("log", "logarithm map between two points");
    log_cmd->add_option("a", a_path, "base matrix file")->required();
    log_cmd->add_option("b", b_path, "target matrix file")->required();

    auto* curv = app.add_subcommand("curvature", "per-point curvature report");
    curv->add_option("a", a_path, "matrix file")->required();

    auto* check = app.add_subcommand("check", "run the invariant suites");
    check->add_option("--n", check_n, "matrix dimension (>= 2)");
    check->add_option("--trials", check_trials, "seeded trials per suite (>= 1)");
    check->add_option("--seed", check_seed, "base seed");
    check->add_flag("--serial", check_serial, "force the serial reference path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dist->parsed()) {
            return cmd_dist(a_path, b_path);
        }
        if (geodesic->parsed()) {
            if (samples < 2) {
                std::cerr << "error: --samples must be >= 2\n";
                return kExitUsage;
            }
            return cmd_geodesic(a_path, b_path, samples);
        }
        if (exp_cmd->parsed()) {
            return cmd_exp(a_path, x_path, t_param);
        }
        if (log_cmd->parsed()) {
            return cmd_log(a_path, b_path);
        }
        if (curv->parsed()) {
            return cmd_curvature(a_path);
        }
        if (check->parsed()) {
            if (check_n < 2 || check_trials < 1) {
                std::cerr << "error: check requires --n >= 2 and --trials >= 1\n";
                return kExitUsage;
            }
            return cmd_check(check_n, check_trials, check_seed, check_serial);
        }
    } catch (const bures::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bures::DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bures::BoundaryError& e) {
        std::cerr << "error: " << e.what()
                  << " eps_max=" << bures::format_double(e.eps_max()) << '\n';
        return kExitBoundary;
    } catch (const bures::NotSpdError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotSpd;
    } catch (const bures::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotSpd;
    } catch (const bures::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
