// Times the serial batch runner against the OpenMP one on a sweep-shaped
// workload (many independent medium-length runs) and reports the speedup.
// Usage: bench_batch [n_jobs] [epochs]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ferry/batch.hpp"
#include "ferry/scheduler.hpp"

namespace {

std::vector<ferry::SimJob> make_jobs(int n_jobs, int epochs) {
    std::vector<ferry::SimJob> jobs;
    for (int i = 0; i < n_jobs; ++i) {
        // Sweep-like spread of loads across the capacity region.
        const double scale = 0.1 + 0.8 * static_cast<double>(i) / std::max(1, n_jobs - 1);
        ferry::NetworkSpec spec = ferry::make_row_network(
            {25.0, 100.0}, {0.5 * scale, 0.5 * scale}, 4, 6.0, 100);
        ferry::SimJob job;
        job.spec = spec;
        job.make_scheduler = [] { return std::make_unique<ferry::CbmfScheduler>(); };
        job.horizon_epochs = epochs;
        jobs.push_back(std::move(job));
    }
    return jobs;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n_jobs = argc > 1 ? std::atoi(argv[1]) : 16;
    const int epochs = argc > 2 ? std::atoi(argv[2]) : 300;
    const auto jobs = make_jobs(n_jobs, epochs);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel path runs serially\n");
#endif
    std::printf("%d jobs x %d epochs\n", n_jobs, epochs);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = ferry::run_batch_serial(jobs);
    const double t_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = ferry::run_batch_parallel(jobs);
    const double t_parallel = seconds_since(t0);

    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!serial[i].ok() || !parallel[i].ok()) {
            std::printf("job %zu failed: %s%s\n", i, serial[i].error.c_str(),
                        parallel[i].error.c_str());
            return 1;
        }
        if (serial[i].metrics->avg_total_queue != parallel[i].metrics->avg_total_queue) {
            std::printf("job %zu: serial and parallel results differ\n", i);
            return 1;
        }
    }

    std::printf("serial:   %.3f s\n", t_serial);
    std::printf("parallel: %.3f s\n", t_parallel);
    std::printf("speedup:  %.2fx\n", t_serial / t_parallel);
    return 0;
}
