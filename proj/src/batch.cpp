#include "ferry/batch.hpp"

#include <exception>

namespace ferry {
namespace {

JobResult execute(const SimJob& job) {
    JobResult r;
    try {
        if (!job.make_scheduler) throw std::invalid_argument("batch: job lacks a scheduler factory");
        std::unique_ptr<Scheduler> scheduler = job.make_scheduler();
        if (!scheduler) throw std::invalid_argument("batch: scheduler factory returned null");
        r.metrics = run(job.spec, *scheduler, job.horizon_epochs, job.options);
    } catch (const std::exception& e) {
        r.metrics.reset();
        r.error = e.what();
    }
    return r;
}

}  // namespace

std::vector<JobResult> run_batch_serial(const std::vector<SimJob>& jobs) {
    std::vector<JobResult> results(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = execute(jobs[i]);
    return results;
}

std::vector<JobResult> run_batch_parallel(const std::vector<SimJob>& jobs) {
    std::vector<JobResult> results(jobs.size());
    const auto n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i)
        results[static_cast<std::size_t>(i)] = execute(jobs[static_cast<std::size_t>(i)]);
    return results;
}

}  // namespace ferry
