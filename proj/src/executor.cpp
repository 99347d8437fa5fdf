#include "srah/executor.hpp"

#include <chrono>

#include "srah/cost_field.hpp"

namespace srah {

const char* planner_name(PlannerKind kind) {
    switch (kind) {
        case PlannerKind::Srah: return "SRAH";
        case PlannerKind::BfsReplan: return "BFS";
        case PlannerKind::GreedyFixed: return "Greedy";
    }
    return "?";
}

const char* failure_reason_name(FailureReason r) {
    switch (r) {
        case FailureReason::None: return "NONE";
        case FailureReason::NoInitialPath: return "NO_INITIAL_PATH";
        case FailureReason::BlockedNoRecovery: return "BLOCKED_NO_RECOVERY";
        case FailureReason::ReplanFailed: return "REPLAN_FAILED";
        case FailureReason::Timeout: return "TIMEOUT";
    }
    return "?";
}

PlannerPolicy PlannerPolicy::make(PlannerKind kind) {
    switch (kind) {
        case PlannerKind::Srah: return {kind, true, true, 12};
        case PlannerKind::BfsReplan: return {kind, true, false, 12};
        case PlannerKind::GreedyFixed: return {kind, false, false, 12};
    }
    return {};
}

std::vector<Coord> spawn_dynamic_obstacles(Grid& grid, Coord agent, Coord goal,
                                           const DynamicsConfig& cfg, SeedStream& rng) {
    std::vector<Coord> spawned;
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const Coord cell{agent.row + dr, agent.col + dc};
            if (!grid.in_bounds(cell) || cell == goal || !grid.is_free(cell)) continue;
            if (rng.next_double() < cfg.p_dyn) {
                grid.set_blocked(cell, CellState::DynamicBlocked);
                spawned.push_back(cell);
            }
        }
    }
    return spawned;
}

namespace {

struct TimedPlan {
    PlanOutcome outcome;
    std::optional<CostField> field;
};

// One plan call, recomputing the risk field first when the policy uses it.
// Accumulates planning plus field-computation time into time_ns.
TimedPlan plan_once(const Grid& grid, const PlannerPolicy& policy, Coord from,
                    long long& time_ns) {
    TimedPlan result;
    const auto t0 = std::chrono::steady_clock::now();
    switch (policy.kind) {
        case PlannerKind::Srah:
            result.field = compute_cost_field(grid);
            result.outcome = astar_weighted(grid, *result.field, from, grid.goal(), policy.w_tenths);
            break;
        case PlannerKind::BfsReplan:
            result.outcome = bfs_shortest(grid, from, grid.goal());
            break;
        case PlannerKind::GreedyFixed:
            result.outcome = greedy_best_first(grid, from, grid.goal());
            break;
    }
    time_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    return result;
}

}  // namespace

TrialRecord run_trial(Grid grid, const PlannerPolicy& policy, const DynamicsConfig& cfg,
                      int t_max, SeedStream rng) {
    TrialRecord rec;
    rec.planner = policy.kind;
    rec.p_dyn = cfg.p_dyn;

    long long time_ns = 0;
    TimedPlan plan = plan_once(grid, policy, grid.start(), time_ns);
    if (!plan.outcome.path) {
        rec.failure_reason = FailureReason::NoInitialPath;
        rec.planning_time_ms = static_cast<double>(time_ns) / 1e6;
        return rec;
    }

    Coord agent = grid.start();
    std::size_t path_pos = 0;  // index of agent within the current path
    const Coord goal = grid.goal();

    while (!(agent == goal) && rec.steps < t_max) {
        spawn_dynamic_obstacles(grid, agent, goal, cfg, rng);

        const Coord next = (*plan.outcome.path)[path_pos + 1];
        if (!grid.is_free(next)) {
            if (!policy.replans) {
                rec.failure_reason = FailureReason::BlockedNoRecovery;
                rec.planning_time_ms = static_cast<double>(time_ns) / 1e6;
                return rec;
            }
            plan = plan_once(grid, policy, agent, time_ns);
            ++rec.replan_count;
            if (!plan.outcome.path) {
                rec.failure_reason = FailureReason::ReplanFailed;
                rec.planning_time_ms = static_cast<double>(time_ns) / 1e6;
                return rec;
            }
            path_pos = 0;
        }

        agent = (*plan.outcome.path)[path_pos + 1];
        ++path_pos;
        ++rec.steps;
    }

    rec.planning_time_ms = static_cast<double>(time_ns) / 1e6;
    if (agent == goal) {
        rec.success = true;
    } else {
        rec.failure_reason = FailureReason::Timeout;
    }
    return rec;
}

}  // namespace srah
