#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ferry/analytics.hpp"
#include "ferry/capacity.hpp"
#include "ferry/config.hpp"
#include "ferry/experiment.hpp"

namespace {

const char* verdict_str(const std::optional<ferry::Verdict>& v) {
    if (!v) return "-";
    return *v == ferry::Verdict::stable ? "stable" : "unstable";
}

std::string opt_str(const std::optional<double>& x) {
    if (!x) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *x);
    return buf;
}

void print_rows(const std::vector<ferry::ResultRow>& rows) {
    std::printf("%-14s %10s %4s %10s %10s %12s %10s %8s %6s %6s  %s\n", "variable", "value",
                "flow", "lambda", "thruput", "avg_queue", "delay", "verdict", "in_L", "in_IB",
                "status");
    for (const auto& r : rows) {
        std::printf("%-14s %10.6g %4d %10.6g %10s %12s %10s %8s %6s %6s  %s\n",
                    r.sweep_variable.c_str(), r.sweep_value, r.flow, r.lambda,
                    opt_str(r.throughput).c_str(), opt_str(r.avg_total_queue).c_str(),
                    opt_str(r.delay).c_str(), verdict_str(r.verdict),
                    r.in_capacity_region ? "yes" : "no", r.in_inner_bound ? "yes" : "no",
                    r.status.c_str());
    }
}

int run_or_sweep(const std::string& config_path, const std::string& output_override,
                 long long horizon_override, unsigned seed, bool serial, bool want_sweep) {
    ferry::ExperimentConfig cfg = ferry::load_config(config_path);
    if (want_sweep && !cfg.sweep) {
        std::cerr << "error: config has no sweep section; use the run subcommand\n";
        return 1;
    }
    if (!want_sweep && cfg.sweep) {
        std::cerr << "error: config has a sweep section; use the sweep subcommand\n";
        return 1;
    }
    if (!output_override.empty()) cfg.output_path = output_override;
    if (horizon_override > 0) {
        if (horizon_override < 4) {
            std::cerr << "error: --horizon must be >= 4\n";
            return 1;
        }
        cfg.horizon_epochs = horizon_override;
    }
    const std::vector<ferry::ResultRow> rows = ferry::run_experiment(cfg, !serial, seed);
    ferry::write_csv(rows, cfg.output_path);
    print_rows(rows);
    std::printf("wrote %s (%zu rows)\n", cfg.output_path.c_str(), rows.size());
    for (const auto& r : rows)
        if (r.status != "ok") return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Message-ferrying simulator and capacity/delay toolkit"};
    app.require_subcommand(1);

    std::string config_path, output_override;
    long long horizon_override = 0;
    unsigned seed = 0;
    bool serial = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "JSON experiment config")->required();
        cmd->add_option("--output", output_override, "override the config's output_path");
        cmd->add_option("--horizon", horizon_override, "override horizon_epochs (>= 4)");
        cmd->add_option("--seed", seed,
                        "seed for random robot placement (no other randomness exists)");
        cmd->add_flag("--serial", serial, "run sweep points one at a time");
    };
    CLI::App* cmd_run = app.add_subcommand("run", "execute a single-point config");
    add_common(cmd_run);
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "execute a config's sweep");
    add_common(cmd_sweep);

    // delay-table: closed-form vs simulated delay on a (v, T, lambda) grid.
    ferry::DelayTableParams table;
    std::string table_output = "delay_table.csv";
    CLI::App* cmd_table =
        app.add_subcommand("delay-table", "closed-form vs simulated delay over a grid");
    cmd_table->add_option("--d", table.d, "source-sink separation")->capture_default_str();
    cmd_table->add_option("--v", table.v_list, "velocities (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd_table->add_option("--T", table.T_list, "epoch lengths (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd_table
        ->add_option("--lambda-fracs", table.lambda_fracs,
                     "arrival rates as fractions of lambda_max")
        ->delimiter(',')
        ->capture_default_str();
    cmd_table->add_option("--r-max", table.rate.r_max, "peak rate")->capture_default_str();
    cmd_table->add_option("--eta", table.rate.eta, "path-loss exponent")->capture_default_str();
    cmd_table->add_option("--c", table.rate.c, "rate roll-off scale")->capture_default_str();
    cmd_table->add_option("--horizon", table.horizon_epochs, "simulated epochs per point")
        ->capture_default_str();
    cmd_table->add_option("--warmup", table.warmup_fraction, "fraction discarded before averaging")
        ->capture_default_str();
    cmd_table->add_option("--output", table_output, "output CSV path")->capture_default_str();

    // capacity check: membership of a rate vector in the regions.
    std::vector<double> lam;
    int cap_flows = 0, cap_robots = 0;
    double cap_rmax = 1.0, cap_v = 0.0, cap_T = 0.0, cap_dmax = -1.0;
    CLI::App* cmd_capacity = app.add_subcommand("capacity", "capacity-region queries");
    CLI::App* cmd_check =
        cmd_capacity->add_subcommand("check", "test a rate vector against Lambda, H, Lambda_IB");
    cmd_check->add_option("--lambda", lam, "per-flow rates (comma separated)")
        ->delimiter(',')
        ->required();
    cmd_check->add_option("--n-robots", cap_robots, "robot count N")->required();
    cmd_check->add_option("--n-flows", cap_flows, "flow count K (default: size of --lambda)");
    cmd_check->add_option("--r-max", cap_rmax, "peak rate")->capture_default_str();
    cmd_check->add_option("--v", cap_v, "velocity, for the inner bound");
    cmd_check->add_option("--T", cap_T, "epoch length, for the inner bound");
    cmd_check->add_option("--d-max", cap_dmax, "max static-node distance, for the inner bound");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed() || cmd_sweep->parsed())
            return run_or_sweep(config_path, output_override, horizon_override, seed, serial,
                                cmd_sweep->parsed());

        if (cmd_table->parsed()) {
            const auto rows = ferry::emit_delay_oracle_table(table, table_output);
            std::printf("%6s %6s %4s %10s %9s %12s %12s %9s  %s\n", "d", "v", "T", "lambda",
                        "feasible", "closed_form", "simulated", "rel_err", "note");
            for (const auto& r : rows)
                std::printf("%6g %6g %4d %10.6g %9s %12s %12s %9s  %s\n", r.d, r.v, r.T,
                            r.lambda, r.feasible ? "yes" : "no", opt_str(r.closed_form).c_str(),
                            opt_str(r.simulated).c_str(), opt_str(r.rel_error).c_str(),
                            r.note.c_str());
            std::printf("wrote %s (%zu rows)\n", table_output.c_str(), rows.size());
            return 0;
        }

        if (cmd_check->parsed()) {
            const int k = cap_flows > 0 ? cap_flows : static_cast<int>(lam.size());
            std::printf("lambda = (");
            for (std::size_t i = 0; i < lam.size(); ++i)
                std::printf("%s%.6g", i ? ", " : "", lam[i]);
            std::printf("), K=%d, N=%d, r_max=%g\n", k, cap_robots, cap_rmax);
            const bool in_l = ferry::in_capacity_region(lam, k, cap_robots, cap_rmax);
            const bool in_h = ferry::in_hull(lam, k, cap_robots, cap_rmax);
            std::printf("in capacity region Lambda (open): %s\n", in_l ? "yes" : "no");
            std::printf("in rate hull H (closed):          %s\n", in_h ? "yes" : "no");
            if (cap_v > 0.0 && cap_T > 0.0 && cap_dmax >= 0.0) {
                const double rho = cap_dmax / (cap_v * cap_T);
                if (rho < 1.0) {
                    const bool in_ib = ferry::in_inner_bound(lam, cap_v, cap_T, cap_dmax, k,
                                                             cap_robots, cap_rmax);
                    std::printf("in inner bound Lambda_IB (d/(vT)=%.4g): %s\n", rho,
                                in_ib ? "yes" : "no");
                } else {
                    std::printf("inner bound undefined: d/(vT)=%.4g >= 1\n", rho);
                }
            }
            const auto alpha = ferry::decompose(lam, k, cap_robots, cap_rmax);
            if (!alpha) {
                std::printf("decomposition: infeasible (outside H)\n");
            } else {
                const auto basis = ferry::enumerate_basis(k, cap_robots, cap_rmax);
                std::printf("decomposition over basis allocations:\n");
                for (std::size_t l = 0; l < alpha->size(); ++l) {
                    if ((*alpha)[l] < 1e-12) continue;
                    std::printf("  alpha=%.6f  a=(", (*alpha)[l]);
                    for (std::size_t i = 0; i < basis[l].robots_per_flow.size(); ++i)
                        std::printf("%s%d", i ? "," : "", basis[l].robots_per_flow[i]);
                    std::printf(")\n");
                }
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
