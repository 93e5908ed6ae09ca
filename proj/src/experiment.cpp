#include "ferry/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "ferry/analytics.hpp"
#include "ferry/batch.hpp"

namespace ferry {
namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

ExperimentConfig apply_sweep_value(const ExperimentConfig& base, SweepVariable var,
                                   double value) {
    ExperimentConfig cfg = base;
    switch (var) {
        case SweepVariable::lambda_scale:
            for (FlowSpec& f : cfg.flows) f.lambda *= value;
            break;
        case SweepVariable::velocity:
            cfg.velocity = value;
            break;
        case SweepVariable::epoch_len:
            cfg.epoch_len = static_cast<int>(value);
            break;
    }
    return cfg;
}

void append_rows(std::vector<ResultRow>& rows, const std::string& variable, double value,
                 const NetworkSpec& net, const JobResult& result) {
    const int k = net.n_flows();
    RateVector lam;
    for (const FlowSpec& f : net.flows) lam.push_back(f.lambda);
    const bool in_cap = in_capacity_region(lam, k, net.n_robots, net.rate.r_max);
    bool in_inner = false;
    const double d_max = max_static_distance(net);
    if (d_max < net.velocity * net.epoch_len)
        in_inner = in_inner_bound(lam, net.velocity, net.epoch_len, d_max, k, net.n_robots,
                                  net.rate.r_max);

    for (int i = 0; i < k; ++i) {
        ResultRow row;
        row.sweep_variable = variable;
        row.sweep_value = value;
        row.flow = i;
        row.lambda = net.flows[i].lambda;
        row.in_capacity_region = in_cap;
        row.in_inner_bound = in_inner;
        if (result.ok()) {
            const Metrics& m = *result.metrics;
            row.throughput = m.throughput[i];
            row.avg_total_queue = m.avg_total_queue[i];
            row.delay = m.delay[i];
            row.verdict = m.verdict[i];
            row.status = "ok";
        } else {
            row.status = "error: " + result.error;
        }
        rows.push_back(std::move(row));
    }
}

void append_failed_point(std::vector<ResultRow>& rows, const std::string& variable,
                         double value, const ExperimentConfig& cfg, const std::string& error) {
    for (std::size_t i = 0; i < cfg.flows.size(); ++i) {
        ResultRow row;
        row.sweep_variable = variable;
        row.sweep_value = value;
        row.flow = static_cast<int>(i);
        row.lambda = cfg.flows[i].lambda;
        row.status = "error: " + error;
        rows.push_back(std::move(row));
    }
}

}  // namespace

const char* const kResultCsvHeader =
    "sweep_variable,sweep_value,flow,lambda,throughput,avg_total_queue,little_delay,stable,"
    "in_capacity_region,in_inner_bound,status";

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, bool parallel,
                                      unsigned seed) {
    const std::string variable = cfg.sweep ? to_string(cfg.sweep->variable) : "none";
    std::vector<double> values = cfg.sweep ? cfg.sweep->values : std::vector<double>{0.0};

    struct Point {
        double value = 0.0;
        ExperimentConfig cfg;
        std::optional<NetworkSpec> net;
        std::string build_error;
        std::size_t job_index = 0;
    };
    std::vector<Point> points;
    std::vector<SimJob> jobs;
    for (double value : values) {
        Point p;
        p.value = value;
        p.cfg = cfg.sweep ? apply_sweep_value(cfg, cfg.sweep->variable, value) : cfg;
        try {
            p.net = make_network(p.cfg, seed);
            SimJob job;
            job.spec = *p.net;
            const SchedulerSpec sched = p.cfg.scheduler;
            const NetworkSpec net = *p.net;
            job.make_scheduler = [sched, net]() { return build_scheduler(sched, net); };
            job.horizon_epochs = p.cfg.horizon_epochs;
            job.options.warmup_fraction = p.cfg.warmup_fraction;
            p.job_index = jobs.size();
            jobs.push_back(std::move(job));
        } catch (const std::exception& e) {
            p.build_error = e.what();
        }
        points.push_back(std::move(p));
    }

    const std::vector<JobResult> results = run_batch(jobs, parallel);

    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return points[a].value < points[b].value;
    });

    std::vector<ResultRow> rows;
    for (std::size_t idx : order) {
        const Point& p = points[idx];
        if (p.net)
            append_rows(rows, variable, p.value, *p.net, results[p.job_index]);
        else
            append_failed_point(rows, variable, p.value, p.cfg, p.build_error);
    }
    return rows;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::string out = kResultCsvHeader;
    out += '\n';
    for (const ResultRow& r : rows) {
        out += csv_field(r.sweep_variable);
        out += ',';
        out += fmt(r.sweep_value);
        out += ',';
        out += std::to_string(r.flow);
        out += ',';
        out += fmt(r.lambda);
        out += ',';
        out += fmt(r.throughput);
        out += ',';
        out += fmt(r.avg_total_queue);
        out += ',';
        out += fmt(r.delay);
        out += ',';
        if (r.verdict) out += (*r.verdict == Verdict::stable) ? "1" : "0";
        out += ',';
        out += r.in_capacity_region ? "1" : "0";
        out += ',';
        out += r.in_inner_bound ? "1" : "0";
        out += ',';
        out += csv_field(r.status);
        out += '\n';
    }
    return out;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << rows_to_csv(rows);
}

const char* const kDelayCsvHeader =
    "d,v,T,lambda,feasible,closed_form_delay,simulated_delay,rel_error,note";

NetworkSpec make_delay_probe_network(double d, double v, int T, double lambda,
                                     const RateModel& rate) {
    NetworkSpec net;
    net.flows.push_back({{0.0, 0.0}, {d, 0.0}, lambda});
    net.n_robots = 2;
    net.velocity = v;
    net.epoch_len = T;
    net.rate = rate;
    // One robot at each end: the pair falls into the collect/deliver
    // rotation from the first reallocation.
    net.initial_robot_pos = {net.flows[0].sink, net.flows[0].src};
    validate(net);
    return net;
}

std::vector<DelayTableRow> emit_delay_oracle_table(const DelayTableParams& params,
                                                   const std::string& path) {
    validate(params.rate);
    if (!(params.d >= 0.0)) throw std::invalid_argument("delay table: d must be >= 0");
    if (params.horizon_epochs < 4)
        throw std::invalid_argument("delay table: horizon_epochs must be >= 4");
    if (!(params.warmup_fraction >= 0.0 && params.warmup_fraction < 1.0))
        throw std::invalid_argument("delay table: warmup_fraction must be in [0, 1)");

    std::vector<DelayTableRow> rows;
    for (double v : params.v_list) {
        if (!(v > 0.0)) throw std::invalid_argument("delay table: v values must be > 0");
        for (int T : params.T_list) {
            if (T < 1) throw std::invalid_argument("delay table: T values must be >= 1");
            const bool cell_ok = params.d < v * static_cast<double>(T);
            const double lam_max =
                cell_ok ? lambda_max(params.d, v, static_cast<double>(T), params.rate) : 0.0;
            for (double frac : params.lambda_fracs) {
                DelayTableRow row;
                row.d = params.d;
                row.v = v;
                row.T = T;
                if (!cell_ok) {
                    row.lambda = 0.0;
                    row.feasible = false;
                    row.note = "infeasible: d/(vT) >= 1";
                    rows.push_back(std::move(row));
                    continue;
                }
                row.lambda = frac * lam_max;
                if (!(row.lambda > 0.0) || row.lambda >= lam_max) {
                    row.feasible = false;
                    row.note = row.lambda >= lam_max ? "infeasible: lambda >= lambda_max"
                                                     : "infeasible: lambda must be > 0";
                    rows.push_back(std::move(row));
                    continue;
                }
                row.feasible = true;
                row.closed_form =
                    closed_form_delay(row.lambda, params.d, v, static_cast<double>(T),
                                      params.rate)
                        .avg_delay;
                try {
                    const NetworkSpec net =
                        make_delay_probe_network(params.d, v, T, row.lambda, params.rate);
                    CbmfScheduler scheduler;
                    RunOptions options;
                    options.warmup_fraction = params.warmup_fraction;
                    const Metrics m = run(net, scheduler, params.horizon_epochs, options);
                    const auto delays = little_delay(m, {row.lambda});
                    row.simulated = delays.at(0);
                    if (row.simulated && *row.closed_form > 0.0)
                        row.rel_error =
                            std::fabs(*row.simulated - *row.closed_form) / *row.closed_form;
                } catch (const std::exception& e) {
                    row.note = std::string("simulation failed: ") + e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << kDelayCsvHeader << '\n';
    for (const DelayTableRow& r : rows) {
        out << fmt(r.d) << ',' << fmt(r.v) << ',' << r.T << ',' << fmt(r.lambda) << ','
            << (r.feasible ? '1' : '0') << ',' << fmt(r.closed_form) << ',' << fmt(r.simulated)
            << ',' << fmt(r.rel_error) << ',' << csv_field(r.note) << '\n';
    }
    return rows;
}

}  // namespace ferry
