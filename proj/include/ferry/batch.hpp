#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ferry/engine.hpp"

namespace ferry {

// One independent simulation: the factory builds a fresh scheduler per
// execution, so a job can run on any thread (and re-run) without shared
// cursor state.
struct SimJob {
    NetworkSpec spec;
    std::function<std::unique_ptr<Scheduler>()> make_scheduler;
    std::int64_t horizon_epochs = 1;
    RunOptions options;
};

// Outcome of one job: metrics, or the error that stopped it. A failed job
// never takes the rest of the batch down.
struct JobResult {
    std::optional<Metrics> metrics;
    std::string error;  // empty on success

    bool ok() const { return error.empty(); }
};

// Serial reference: jobs executed in index order on the calling thread.
std::vector<JobResult> run_batch_serial(const std::vector<SimJob>& jobs);

// Same results, computed with one OpenMP thread per job (dynamic schedule;
// jobs vary wildly in length). Each job is self-contained, so the parallel
// path must agree with the serial one bit-for-bit — the test suite holds it
// to that.
std::vector<JobResult> run_batch_parallel(const std::vector<SimJob>& jobs);

inline std::vector<JobResult> run_batch(const std::vector<SimJob>& jobs, bool parallel) {
    return parallel ? run_batch_parallel(jobs) : run_batch_serial(jobs);
}

}  // namespace ferry
