#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "srah/cost_field.hpp"
#include "srah/grid.hpp"

namespace srah {

// Start-to-goal cell sequence; consecutive cells are 4-adjacent and free
// on the grid the path was planned on.
using Path = std::vector<Coord>;

struct PlanOutcome {
    std::optional<Path> path;
    long long nodes_expanded = 0;
    std::chrono::nanoseconds elapsed{0};
};

// Weighted A* with priority f = g + w * manhattan(., goal) and edge cost
// 1 + phi(dest). w is given in tenths (12 = the usual 1.2) so all
// arithmetic stays exact. Ties break on (f, h, insertion order);
// successors expand in up/down/left/right order. Closed nodes are not
// re-expanded, giving the standard w-bounded suboptimality.
PlanOutcome astar_weighted(const Grid& grid, const CostField& field,
                           Coord start, Coord goal, CostTenths w_tenths = 12);

// Shortest unweighted path; deterministic via neighbors4 order.
PlanOutcome bfs_shortest(const Grid& grid, Coord start, Coord goal);

// Pure best-first on manhattan(., goal). Keeps a closed set, so it
// terminates (with an absent path) on unreachable goals.
PlanOutcome greedy_best_first(const Grid& grid, Coord start, Coord goal);

// Exact minimum-cost search under step_cost, or unit cost when field is
// null. Test/acceptance oracle only.
PlanOutcome dijkstra_oracle(const Grid& grid, const CostField* field,
                            Coord start, Coord goal);

// Total semantic cost of a path (sum of step costs over every cell after
// the first), in tenths. Empty and single-cell paths cost 0.
CostTenths path_cost_tenths(const CostField& field, const Path& path);

}  // namespace srah
