#include "srah/planners.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace srah {
namespace {

struct HeapEntry {
    CostTenths f;
    int h;
    long long seq;
    Coord cell;
};

struct HeapOrder {
    // Min-heap on (f, h, insertion sequence).
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.h != b.h) return a.h > b.h;
        return a.seq > b.seq;
    }
};

Path reconstruct(const std::vector<int>& parent, const Grid& grid, Coord start, Coord goal) {
    Path path;
    Coord cur = goal;
    while (!(cur == start)) {
        path.push_back(cur);
        const int p = parent[grid.index(cur)];
        cur = Coord{p / grid.n(), p % grid.n()};
    }
    path.push_back(start);
    std::reverse(path.begin(), path.end());
    return path;
}

// Shared best-first engine. Priority is g*use_g + w_tenths*h; Dijkstra is
// (use_g, w=0), greedy is (no g, w=10). Closed nodes are never re-expanded.
PlanOutcome best_first(const Grid& grid, const CostField* field, Coord start, Coord goal,
                       bool use_g, CostTenths w_tenths) {
    const auto t0 = std::chrono::steady_clock::now();
    PlanOutcome out;

    const std::size_t total = static_cast<std::size_t>(grid.n()) * grid.n();
    std::vector<CostTenths> g(total, -1);
    std::vector<int> parent(total, -1);
    std::vector<char> closed(total, 0);

    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> open;
    long long seq = 0;
    g[grid.index(start)] = 0;
    open.push({w_tenths * manhattan(start, goal), manhattan(start, goal), seq++, start});

    bool found = false;
    while (!open.empty()) {
        const HeapEntry top = open.top();
        open.pop();
        const std::size_t idx = grid.index(top.cell);
        if (closed[idx]) continue;
        closed[idx] = 1;
        ++out.nodes_expanded;
        if (top.cell == goal) {
            found = true;
            break;
        }
        for (const Coord& nb : neighbors4(grid, top.cell)) {
            const std::size_t nidx = grid.index(nb);
            if (closed[nidx]) continue;
            const CostTenths step = field ? step_cost_tenths(*field, nb) : 10;
            const CostTenths cand = g[idx] + step;
            if (g[nidx] < 0 || cand < g[nidx]) {
                g[nidx] = cand;
                parent[nidx] = static_cast<int>(idx);
                const int h = manhattan(nb, goal);
                const CostTenths f = (use_g ? cand : 0) + w_tenths * h;
                open.push({f, h, seq++, nb});
            }
        }
    }

    if (found) out.path = reconstruct(parent, grid, start, goal);
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

}  // namespace

PlanOutcome astar_weighted(const Grid& grid, const CostField& field, Coord start, Coord goal,
                           CostTenths w_tenths) {
    return best_first(grid, &field, start, goal, /*use_g=*/true, w_tenths);
}

PlanOutcome greedy_best_first(const Grid& grid, Coord start, Coord goal) {
    return best_first(grid, nullptr, start, goal, /*use_g=*/false, 10);
}

PlanOutcome dijkstra_oracle(const Grid& grid, const CostField* field, Coord start, Coord goal) {
    return best_first(grid, field, start, goal, /*use_g=*/true, 0);
}

PlanOutcome bfs_shortest(const Grid& grid, Coord start, Coord goal) {
    const auto t0 = std::chrono::steady_clock::now();
    PlanOutcome out;

    const std::size_t total = static_cast<std::size_t>(grid.n()) * grid.n();
    std::vector<char> visited(total, 0);
    std::vector<int> parent(total, -1);
    std::deque<Coord> frontier;
    visited[grid.index(start)] = 1;
    frontier.push_back(start);

    bool found = false;
    while (!frontier.empty()) {
        const Coord cur = frontier.front();
        frontier.pop_front();
        ++out.nodes_expanded;
        if (cur == goal) {
            found = true;
            break;
        }
        for (const Coord& nb : neighbors4(grid, cur)) {
            const std::size_t nidx = grid.index(nb);
            if (visited[nidx]) continue;
            visited[nidx] = 1;
            parent[nidx] = static_cast<int>(grid.index(cur));
            frontier.push_back(nb);
        }
    }

    if (found) out.path = reconstruct(parent, grid, start, goal);
    out.elapsed = std::chrono::steady_clock::now() - t0;
    return out;
}

CostTenths path_cost_tenths(const CostField& field, const Path& path) {
    CostTenths total = 0;
    for (std::size_t i = 1; i < path.size(); ++i) total += step_cost_tenths(field, path[i]);
    return total;
}

}  // namespace srah
