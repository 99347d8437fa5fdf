#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srah/cost_field.hpp"
#include "srah/grid.hpp"
#include "srah/harness.hpp"
#include "srah/planners.hpp"
#include "srah/report.hpp"

namespace fs = std::filesystem;
using namespace srah;

namespace {

void add_common_flags(CLI::App* cmd, ExperimentConfig& cfg, std::string& out_dir,
                      bool& mask_timing) {
    cmd->add_option("--n", cfg.n, "Grid side length")->check(CLI::Range(2, 1000));
    cmd->add_option("--t-max", cfg.t_max, "Step budget per trial")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.base_seed, "Base seed (grid seed = base + trial index)");
    cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
    cmd->add_flag("--mask-timing", mask_timing,
                  "Zero timing columns for byte-reproducible output");
}

void ensure_out_dir(const std::string& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw config_error("cannot create output directory " + out_dir + ": " + ec.message());
}

void write_common_outputs(const std::vector<TrialRecord>& records, const fs::path& dir,
                          bool mask_timing) {
    write_trials_csv(records, dir / "trials.csv", mask_timing);
    write_summary(aggregate(records), dir / "summary.txt", dir / "summary.json", mask_timing);
}

PlannerKind parse_planner_flag(const std::string& s) {
    if (s == "srah") return PlannerKind::Srah;
    if (s == "bfs") return PlannerKind::BfsReplan;
    if (s == "greedy") return PlannerKind::GreedyFixed;
    throw config_error("unknown planner: " + s);
}

int cmd_run_main(const ExperimentConfig& cfg, const std::string& out_dir, bool mask_timing) {
    ensure_out_dir(out_dir);
    const auto records = run_main_experiment(cfg);
    const fs::path dir(out_dir);
    write_common_outputs(records, dir, mask_timing);

    const std::string success = plot_data(records, FigureKind::SuccessBar);
    emit_plot_data(records, FigureKind::SuccessBar, dir / "fig_success.csv");
    emit_svg_chart(success, FigureKind::SuccessBar, dir / "fig_success.svg");
    emit_plot_data(records, FigureKind::StepsDistribution, dir / "fig_steps.csv");
    const std::string overhead = plot_data(records, FigureKind::OverheadScatter, mask_timing);
    emit_plot_data(records, FigureKind::OverheadScatter, dir / "fig_overhead.csv", mask_timing);
    emit_svg_chart(overhead, FigureKind::OverheadScatter, dir / "fig_overhead.svg");

    std::cout << summary_table(aggregate(records));
    std::cout << "wrote results to " << out_dir << "\n";
    return 0;
}

int cmd_ablate(const ExperimentConfig& cfg, const std::string& out_dir, bool mask_timing) {
    ensure_out_dir(out_dir);
    const auto records = run_density_ablation(cfg);
    const fs::path dir(out_dir);
    write_common_outputs(records, dir, mask_timing);

    const std::string density = plot_data(records, FigureKind::DensityCurves);
    emit_plot_data(records, FigureKind::DensityCurves, dir / "fig_density.csv");
    emit_svg_chart(density, FigureKind::DensityCurves, dir / "fig_density.svg");

    std::cout << density;
    std::cout << "wrote results to " << out_dir << "\n";
    return 0;
}

int cmd_plan(int n, double rho, std::uint64_t seed, const std::string& planner_str,
             const std::string& format) {
    const PlannerKind kind = parse_planner_flag(planner_str);
    Grid grid = sample_grid(n, rho, seed);
    const CostField field = compute_cost_field(grid);

    PlanOutcome outcome;
    switch (kind) {
        case PlannerKind::Srah:
            outcome = astar_weighted(grid, field, grid.start(), grid.goal());
            break;
        case PlannerKind::BfsReplan:
            outcome = bfs_shortest(grid, grid.start(), grid.goal());
            break;
        case PlannerKind::GreedyFixed:
            outcome = greedy_best_first(grid, grid.start(), grid.goal());
            break;
    }

    if (format == "json") {
        nlohmann::ordered_json doc;
        doc["planner"] = planner_name(kind);
        doc["n"] = n;
        doc["rho"] = rho;
        doc["seed"] = seed;
        doc["grid"] = render_ascii(grid, outcome.path ? &*outcome.path : nullptr, &field);
        doc["found"] = outcome.path.has_value();
        if (outcome.path) {
            doc["steps"] = outcome.path->size() - 1;
            doc["semantic_cost"] = tenths_to_double(path_cost_tenths(field, *outcome.path));
        }
        doc["nodes_expanded"] = outcome.nodes_expanded;
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    if (!outcome.path) {
        std::cout << render_ascii(grid, nullptr, &field) << "\n";
        std::cout << "NO PATH\n";
        return 0;
    }
    std::cout << render_ascii(grid, &*outcome.path, &field) << "\n";
    std::printf("planner: %s\n", planner_name(kind));
    std::printf("steps: %zu\n", outcome.path->size() - 1);
    std::printf("semantic cost: %.1f\n", tenths_to_double(path_cost_tenths(field, *outcome.path)));
    std::printf("nodes expanded: %lld\n", outcome.nodes_expanded);
    return 0;
}

int cmd_render_demo(int n, double rho, std::uint64_t seed) {
    Grid grid = sample_grid(n, rho, seed);
    const CostField field = compute_cost_field(grid);
    std::cout << render_ascii(grid, nullptr, &field) << "\n";
    std::printf("n=%d rho=%.2f seed=%llu blocked=%d\n", n, rho,
                static_cast<unsigned long long>(seed), grid.blocked_count());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SRAH grid-world planner benchmark"};
    app.require_subcommand(1);
    app.set_config("--config");

    ExperimentConfig cfg;
    std::string out_dir = "out";
    bool mask_timing = false;

    auto* run_main = app.add_subcommand("run-main", "Run the main 3-planner comparison");
    run_main->add_option("--rho", cfg.rho, "Static obstacle density")->check(CLI::Range(0.0, 1.0));
    run_main->add_option("--p-dyn", cfg.p_dyn, "Dynamic spawn probability")
        ->check(CLI::Range(0.0, 1.0));
    run_main->add_option("--trials", cfg.trials, "Trial count")->check(CLI::PositiveNumber);
    add_common_flags(run_main, cfg, out_dir, mask_timing);

    auto* ablate = app.add_subcommand("ablate", "Run the static density ablation");
    ablate->add_option("--densities", cfg.densities, "Density levels (ascending)");
    ablate->add_option("--ablation-trials", cfg.ablation_trials, "Trials per density")
        ->check(CLI::PositiveNumber);
    add_common_flags(ablate, cfg, out_dir, mask_timing);

    int plan_n = 12;
    double plan_rho = 0.20;
    std::uint64_t plan_seed = 0;
    std::string plan_planner = "srah";
    std::string plan_format = "ascii";
    auto* plan = app.add_subcommand("plan", "Plan once on a sampled grid and render it");
    plan->add_option("--format", plan_format, "Output format: ascii|json")
        ->check(CLI::IsMember({"ascii", "json"}));
    plan->add_option("--n", plan_n, "Grid side length")->check(CLI::Range(2, 1000));
    plan->add_option("--rho", plan_rho, "Static obstacle density")->check(CLI::Range(0.0, 1.0));
    plan->add_option("--seed", plan_seed, "Grid seed");
    plan->add_option("--planner", plan_planner, "Planner: srah|bfs|greedy")
        ->check(CLI::IsMember({"srah", "bfs", "greedy"}));

    auto* demo = app.add_subcommand("render-demo", "Sample a grid and render it with risk overlay");
    demo->add_option("--n", plan_n, "Grid side length")->check(CLI::Range(2, 1000));
    demo->add_option("--rho", plan_rho, "Static obstacle density")->check(CLI::Range(0.0, 1.0));
    demo->add_option("--seed", plan_seed, "Grid seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_main->parsed()) return cmd_run_main(cfg, out_dir, mask_timing);
        if (ablate->parsed()) return cmd_ablate(cfg, out_dir, mask_timing);
        if (plan->parsed()) return cmd_plan(plan_n, plan_rho, plan_seed, plan_planner, plan_format);
        if (demo->parsed()) return cmd_render_demo(plan_n, plan_rho, plan_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
