#pragma once

#include <vector>

#include "srah/cost_field.hpp"
#include "srah/grid.hpp"
#include "srah/planners.hpp"

namespace srah::testing {

// Shared path validator: endpoints, 4-adjacency, freeness.
inline bool valid_path(const Grid& grid, const Path& path, Coord start, Coord goal) {
    if (path.empty()) return false;
    if (!(path.front() == start) || !(path.back() == goal)) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!grid.in_bounds(path[i]) || !grid.is_free(path[i])) return false;
        if (i > 0 && manhattan(path[i - 1], path[i]) != 1) return false;
    }
    return true;
}

inline Grid make_grid(int n, const std::vector<Coord>& blocked) {
    Grid grid(n, Coord{0, 0}, Coord{n - 1, n - 1});
    for (const Coord& c : blocked) grid.set_blocked(c, CellState::StaticBlocked);
    return grid;
}

// Independent A(s) oracle: scan all 8 offsets, count in-bounds blocked cells.
inline int naive_adjacency8(const Grid& grid, Coord c) {
    static const int offsets[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                      {0, 1},   {1, -1}, {1, 0},  {1, 1}};
    int count = 0;
    for (const auto& off : offsets) {
        const Coord nb{c.row + off[0], c.col + off[1]};
        if (nb.row < 0 || nb.row >= grid.n() || nb.col < 0 || nb.col >= grid.n()) continue;
        if (grid.state_at(nb) != CellState::Free) ++count;
    }
    return count;
}

// Exhaustive minimum-cost oracle: depth-first enumeration of every simple
// start-to-goal path. Returns -1 when no path exists. Tractable only for
// tiny grids.
inline CostTenths enumerate_min_cost(const Grid& grid, const CostField* field) {
    const int n = grid.n();
    std::vector<char> visited(static_cast<std::size_t>(n) * n, 0);
    CostTenths best = -1;

    auto dfs = [&](auto&& self, Coord cur, CostTenths cost) -> void {
        if (cur == grid.goal()) {
            if (best < 0 || cost < best) best = cost;
            return;
        }
        for (int d = 0; d < 4; ++d) {
            static const int dr[4] = {-1, 1, 0, 0};
            static const int dc[4] = {0, 0, -1, 1};
            const Coord nb{cur.row + dr[d], cur.col + dc[d]};
            if (!grid.in_bounds(nb) || !grid.is_free(nb)) continue;
            if (visited[grid.index(nb)]) continue;
            visited[grid.index(nb)] = 1;
            const CostTenths step = field ? step_cost_tenths(*field, nb) : 10;
            self(self, nb, cost + step);
            visited[grid.index(nb)] = 0;
        }
    };
    visited[grid.index(grid.start())] = 1;
    dfs(dfs, grid.start(), 0);
    return best;
}

}  // namespace srah::testing
