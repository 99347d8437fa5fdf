#include "srah/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

namespace srah {
namespace {

void check_positive(int v, const char* what) {
    if (v <= 0) throw config_error(std::string(what) + " must be positive");
}

// Runs fn(trial_index) for indices [0, count) across cfg.jobs threads.
// Work is partitioned by index, so the schedule cannot affect results.
void parallel_for_trials(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            for (int i = t; i < count; i += jobs) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

void sort_records(std::vector<TrialRecord>& records) {
    std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
        if (a.planner != b.planner) return static_cast<int>(a.planner) < static_cast<int>(b.planner);
        return a.trial_id < b.trial_id;
    });
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n < 2) throw config_error("grid side must be at least 2");
    if (rho < 0.0 || rho > 1.0) throw config_error("density must lie in [0, 1]");
    if (p_dyn < 0.0 || p_dyn > 1.0) throw config_error("p_dyn must lie in [0, 1]");
    check_positive(trials, "trial count");
    check_positive(t_max, "step budget");
    check_positive(ablation_trials, "ablation trial count");
    check_positive(jobs, "job count");
    if (densities.empty()) throw config_error("density list must be non-empty");
    for (std::size_t i = 0; i < densities.size(); ++i) {
        if (densities[i] < 0.0 || densities[i] > 1.0)
            throw config_error("densities must lie in [0, 1]");
        if (i > 0 && densities[i] <= densities[i - 1])
            throw config_error("densities must be strictly increasing");
    }
}

std::vector<TrialRecord> run_main_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const int planners = static_cast<int>(std::size(kAllPlanners));
    std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials) * planners);

    parallel_for_trials(cfg.trials, cfg.jobs, [&](int i) {
        const std::uint64_t grid_seed = cfg.base_seed + static_cast<std::uint64_t>(i);
        const std::uint64_t dyn_seed = derive_seed(cfg.base_seed, i, kDynamicsStreamTag);
        const Grid grid = sample_grid(cfg.n, cfg.rho, grid_seed);
        const DynamicsConfig dyn{cfg.p_dyn};
        for (int p = 0; p < planners; ++p) {
            TrialRecord rec = run_trial(grid, PlannerPolicy::make(kAllPlanners[p]), dyn,
                                        cfg.t_max, SeedStream(dyn_seed));
            rec.trial_id = i;
            rec.grid_seed = grid_seed;
            rec.dynamics_seed = dyn_seed;
            rec.rho = cfg.rho;
            records[static_cast<std::size_t>(i) * planners + p] = rec;
        }
    });

    sort_records(records);
    return records;
}

std::vector<TrialRecord> run_density_ablation(const ExperimentConfig& cfg) {
    cfg.validate();
    const int planners = static_cast<int>(std::size(kAllPlanners));
    const int densities = static_cast<int>(cfg.densities.size());
    const int total_trials = densities * cfg.ablation_trials;
    std::vector<TrialRecord> records(static_cast<std::size_t>(total_trials) * planners);

    parallel_for_trials(total_trials, cfg.jobs, [&](int flat) {
        const int d = flat / cfg.ablation_trials;
        const int i = flat % cfg.ablation_trials;
        // Disjoint grid seeds across densities.
        const std::uint64_t grid_seed = cfg.base_seed + static_cast<std::uint64_t>(flat);
        const std::uint64_t dyn_seed = derive_seed(cfg.base_seed, flat, kDynamicsStreamTag);
        const Grid grid = sample_grid(cfg.n, cfg.densities[d], grid_seed);
        const DynamicsConfig dyn{0.0};
        for (int p = 0; p < planners; ++p) {
            TrialRecord rec = run_trial(grid, PlannerPolicy::make(kAllPlanners[p]), dyn,
                                        cfg.t_max, SeedStream(dyn_seed));
            rec.trial_id = flat;
            rec.grid_seed = grid_seed;
            rec.dynamics_seed = dyn_seed;
            rec.rho = cfg.densities[d];
            records[static_cast<std::size_t>(flat) * planners + p] = rec;
        }
    });

    sort_records(records);
    return records;
}

std::vector<AggregateStats> aggregate(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw config_error("aggregate: no records");

    std::vector<AggregateStats> out;
    for (PlannerKind kind : kAllPlanners) {
        AggregateStats agg;
        agg.planner = kind;
        std::vector<double> steps, times, replans;
        for (const TrialRecord& rec : records) {
            if (rec.planner != kind) continue;
            ++agg.n_trials;
            times.push_back(rec.planning_time_ms);
            replans.push_back(rec.replan_count);
            if (rec.success) {
                ++agg.n_success;
                steps.push_back(rec.steps);
            }
        }
        if (agg.n_trials == 0) continue;

        auto mean = [](const std::vector<double>& v) {
            double s = 0;
            for (double x : v) s += x;
            return s / static_cast<double>(v.size());
        };
        auto sample_std = [&](const std::vector<double>& v, double m) {
            double ss = 0;
            for (double x : v) ss += (x - m) * (x - m);
            return std::sqrt(ss / static_cast<double>(v.size() - 1));
        };

        agg.success_rate = static_cast<double>(agg.n_success) / agg.n_trials;
        if (!steps.empty()) {
            agg.steps_mean = mean(steps);
            if (steps.size() >= 2) agg.steps_std = sample_std(steps, *agg.steps_mean);
        }
        agg.time_mean_ms = mean(times);
        agg.time_std_ms = times.size() >= 2 ? sample_std(times, agg.time_mean_ms) : 0.0;
        agg.mean_replans = mean(replans);
        out.push_back(agg);
    }
    return out;
}

}  // namespace srah
