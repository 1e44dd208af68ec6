#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "bures/checks/suites.hpp"

// Wall-clock comparison of the serial reference path against the OpenMP
// path over the full invariant-suite battery. Both paths must produce the
// same report; the run aborts if they do not.

int main(int argc, char** argv) {
    int n = 5;
    int trials = 100;
    int iterations = 3;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) trials = std::atoi(argv[2]);
    if (argc > 3) iterations = std::atoi(argv[3]);
    if (n < 2 || trials < 1 || iterations < 1) {
        std::fprintf(stderr, "usage: %s [n >= 2] [trials >= 1] [iterations >= 1]\n",
                     argv[0]);
        return 2;
    }

#pragma omp parallel
    {
        if (omp_get_thread_num() == 0) {
            std::printf("OpenMP threads: %d\n", omp_get_num_threads());
        }
    }
    std::printf("n=%d trials=%d iterations=%d\n", n, trials, iterations);

    bures::checks::SuiteConfig cfg;
    cfg.dims = {n};
    cfg.trials = trials;

    cfg.parallel = false;
    std::string serial_report =
        bures::checks::format_report(bures::checks::run_all_suites(cfg));
    cfg.parallel = true;
    std::string parallel_report =
        bures::checks::format_report(bures::checks::run_all_suites(cfg));
    if (serial_report != parallel_report) {
        std::fprintf(stderr, "reports differ between serial and parallel paths\n");
        return 1;
    }

    double serial_time = 0.0;
    double parallel_time = 0.0;
    for (int it = 0; it < iterations; ++it) {
        cfg.parallel = false;
        double start = omp_get_wtime();
        bures::checks::run_all_suites(cfg);
        serial_time += omp_get_wtime() - start;

        cfg.parallel = true;
        start = omp_get_wtime();
        bures::checks::run_all_suites(cfg);
        parallel_time += omp_get_wtime() - start;
    }
    serial_time /= iterations;
    parallel_time /= iterations;

    std::printf("serial   %.3f s\n", serial_time);
    std::printf("parallel %.3f s\n", parallel_time);
    std::printf("speedup  %.2fx\n", serial_time / parallel_time);
    return 0;
}
