#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srah/executor.hpp"

namespace srah {

struct ExperimentConfig {
    int n = 15;
    double rho = 0.20;
    double p_dyn = 0.06;
    int trials = 200;
    int t_max = 300;
    std::uint64_t base_seed = 0;
    std::vector<double> densities = {0.10, 0.15, 0.20, 0.25, 0.30};
    int ablation_trials = 80;
    int jobs = 1;

    void validate() const;  // throws config_error
};

struct AggregateStats {
    PlannerKind planner = PlannerKind::Srah;
    int n_trials = 0;
    int n_success = 0;
    double success_rate = 0.0;
    std::optional<double> steps_mean;           // successful trials only
    std::optional<double> steps_std;            // absent when n_success < 2
    double time_mean_ms = 0.0;                  // all trials
    double time_std_ms = 0.0;
    double mean_replans = 0.0;                  // all trials
};

inline constexpr PlannerKind kAllPlanners[] = {
    PlannerKind::BfsReplan, PlannerKind::GreedyFixed, PlannerKind::Srah};

// Main comparison: per trial i, grid seed = base_seed + i; all three
// planners run on copies of the same grid with the same dynamics seed.
// Returns 3 * trials records sorted by (planner, trial_id).
std::vector<TrialRecord> run_main_experiment(const ExperimentConfig& cfg);

// Density ablation: p_dyn = 0, ablation_trials per density per planner,
// grid seeds disjoint across densities.
std::vector<TrialRecord> run_density_ablation(const ExperimentConfig& cfg);

// One AggregateStats per planner present in records, ordered BFS, Greedy,
// SRAH. Steps stats use successful trials only; std is the sample
// (n-1) estimator. Throws config_error on empty input.
std::vector<AggregateStats> aggregate(const std::vector<TrialRecord>& records);

}  // namespace srah
