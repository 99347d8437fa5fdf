#include "srah/grid.hpp"

#include <cmath>
#include <numeric>

#include "srah/cost_field.hpp"

namespace srah {

std::uint64_t SeedStream::next_below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased for any bound.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index, std::uint64_t tag) {
    return mix64(base ^ mix64(index ^ mix64(tag)));
}

Grid::Grid(int n, Coord start, Coord goal)
    : n_(n), start_(start), goal_(goal),
      cells_(static_cast<std::size_t>(n) * n, CellState::Free) {
    if (n < 2) throw config_error("grid side must be at least 2");
    if (start == goal) throw std::logic_error("start and goal must differ");
    if (!in_bounds(start) || !in_bounds(goal)) throw std::logic_error("start/goal out of bounds");
}

bool Grid::is_free(Coord c) const {
    if (!in_bounds(c)) throw std::logic_error("is_free: coordinate out of bounds");
    return cells_[index(c)] == CellState::Free;
}

void Grid::set_blocked(Coord c, CellState flavor) {
    if (!in_bounds(c)) throw std::logic_error("set_blocked: coordinate out of bounds");
    if (c == goal_) throw std::logic_error("set_blocked: cannot block the goal");
    if (cells_[index(c)] == CellState::Free) cells_[index(c)] = flavor;
}

int Grid::blocked_count() const {
    int count = 0;
    for (CellState s : cells_)
        if (s != CellState::Free) ++count;
    return count;
}

Grid sample_grid(int n, double rho, std::uint64_t seed) {
    if (n < 2) throw config_error("grid side must be at least 2");
    if (rho < 0.0 || rho > 1.0) throw config_error("density must lie in [0, 1]");
    const int total = n * n;
    const int want = static_cast<int>(std::llround(rho * total));
    if (want > total - 2) throw config_error("density leaves no room for start and goal");

    Grid grid(n, Coord{0, 0}, Coord{n - 1, n - 1});

    // Candidate cells in row-major order, minus start and goal.
    std::vector<int> candidates;
    candidates.reserve(total - 2);
    for (int i = 0; i < total; ++i) {
        if (i == 0 || i == total - 1) continue;
        candidates.push_back(i);
    }

    // Partial Fisher-Yates draws `want` cells without replacement.
    SeedStream rng(seed);
    for (int i = 0; i < want; ++i) {
        const std::uint64_t j = i + rng.next_below(candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        const Coord c{candidates[i] / n, candidates[i] % n};
        grid.set_blocked(c, CellState::StaticBlocked);
    }
    grid.static_count_ = want;
    return grid;
}

std::vector<Coord> neighbors4(const Grid& grid, Coord c) {
    if (!grid.in_bounds(c)) throw std::logic_error("neighbors4: coordinate out of bounds");
    // Fixed up/down/left/right order for deterministic tie-breaking.
    static constexpr Coord kOffsets[4] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    std::vector<Coord> out;
    out.reserve(4);
    for (const Coord& d : kOffsets) {
        const Coord nb{c.row + d.row, c.col + d.col};
        if (grid.in_bounds(nb) && grid.is_free(nb)) out.push_back(nb);
    }
    return out;
}

int blocked_adjacency8(const Grid& grid, Coord c) {
    if (!grid.in_bounds(c)) throw std::logic_error("blocked_adjacency8: coordinate out of bounds");
    int count = 0;
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const Coord nb{c.row + dr, c.col + dc};
            // Out-of-bounds positions are walls, not cells; they do not count.
            if (grid.in_bounds(nb) && !grid.is_free(nb)) ++count;
        }
    }
    return count;
}

std::string render_ascii(const Grid& grid, const std::vector<Coord>* path,
                         const CostField* risk) {
    const int n = grid.n();
    std::vector<char> glyphs(static_cast<std::size_t>(n) * n, '.');
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const Coord cell{r, c};
            switch (grid.state_at(cell)) {
                case CellState::StaticBlocked: glyphs[grid.index(cell)] = '#'; break;
                case CellState::DynamicBlocked: glyphs[grid.index(cell)] = 'D'; break;
                case CellState::Free:
                    if (risk && risk->phi_tenths(cell) > 0) glyphs[grid.index(cell)] = 'o';
                    break;
            }
        }
    }
    if (path) {
        for (const Coord& cell : *path) {
            if (!grid.in_bounds(cell)) throw std::logic_error("render_ascii: path cell out of bounds");
            glyphs[grid.index(cell)] = '*';
        }
    }
    glyphs[grid.index(grid.start())] = 'S';
    glyphs[grid.index(grid.goal())] = 'G';

    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int r = 0; r < n; ++r) {
        if (r > 0) out.push_back('\n');
        out.append(glyphs.begin() + static_cast<std::size_t>(r) * n,
                   glyphs.begin() + static_cast<std::size_t>(r + 1) * n);
    }
    return out;
}

}  // namespace srah
