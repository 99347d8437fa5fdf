#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srah/grid.hpp"
#include "srah/planners.hpp"

namespace srah {

struct DynamicsConfig {
    double p_dyn = 0.06;  // per-cell spawn probability per timestep
};

enum class PlannerKind {
    Srah,
    BfsReplan,
    GreedyFixed,
};

const char* planner_name(PlannerKind kind);

struct PlannerPolicy {
    PlannerKind kind = PlannerKind::Srah;
    bool replans = true;
    bool uses_semantic_cost = true;
    CostTenths w_tenths = 12;

    static PlannerPolicy make(PlannerKind kind);
};

enum class FailureReason {
    None,
    NoInitialPath,
    BlockedNoRecovery,
    ReplanFailed,
    Timeout,
};

const char* failure_reason_name(FailureReason r);

struct TrialRecord {
    int trial_id = 0;
    PlannerKind planner = PlannerKind::Srah;
    bool success = false;
    int steps = 0;
    double planning_time_ms = 0.0;
    int replan_count = 0;
    FailureReason failure_reason = FailureReason::None;
    std::uint64_t grid_seed = 0;
    std::uint64_t dynamics_seed = 0;
    double rho = 0.0;
    double p_dyn = 0.0;
};

// Blocks each free 8-neighbor of agent (excluding the agent and goal
// cells) with probability p_dyn, permanently. Neighbors are visited in
// row-major order so draw consumption is deterministic. Returns the
// newly blocked cells; the grid is mutated in place.
std::vector<Coord> spawn_dynamic_obstacles(Grid& grid, Coord agent, Coord goal,
                                           const DynamicsConfig& cfg, SeedStream& rng);

// Runs one closed-loop trial: initial plan, then per-timestep obstacle
// spawning, next-cell blockage check, replan (for replanning policies) and
// a one-cell move, until the goal or the step budget. Owns its grid copy.
TrialRecord run_trial(Grid grid, const PlannerPolicy& policy, const DynamicsConfig& cfg,
                      int t_max, SeedStream rng);

}  // namespace srah
