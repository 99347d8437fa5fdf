#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srah {

// Thrown on invalid user-supplied configuration (bad density, grid too small).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Coord {
    int row = 0;
    int col = 0;

    friend bool operator==(const Coord&, const Coord&) = default;
    friend auto operator<=>(const Coord&, const Coord&) = default;
};

enum class CellState : std::uint8_t {
    Free = 0,
    StaticBlocked = 1,
    DynamicBlocked = 2,
};

// SplitMix64 stream. Fully specified so the same seed yields the same
// sequence on every platform.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) via rejection, bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// SplitMix64 finalizer, exposed for seed derivation.
std::uint64_t mix64(std::uint64_t x);

// Derives an independent stream seed from (base, index, tag) so that e.g.
// grid sampling and obstacle spawning never share draws.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index, std::uint64_t tag);

inline constexpr std::uint64_t kGridStreamTag = 0x6772696400000001ULL;
inline constexpr std::uint64_t kDynamicsStreamTag = 0x64796E6100000002ULL;

class CostField;

// N x N occupancy grid with fixed corner start/goal.
class Grid {
public:
    Grid(int n, Coord start, Coord goal);

    int n() const { return n_; }
    Coord start() const { return start_; }
    Coord goal() const { return goal_; }
    int static_count() const { return static_count_; }

    bool in_bounds(Coord c) const {
        return c.row >= 0 && c.row < n_ && c.col >= 0 && c.col < n_;
    }

    CellState state_at(Coord c) const { return cells_[index(c)]; }

    bool is_free(Coord c) const;

    // Marks a cell blocked. Idempotent on already-blocked cells; the
    // original (static/dynamic) flavor is kept in that case.
    void set_blocked(Coord c, CellState flavor = CellState::DynamicBlocked);

    int blocked_count() const;

    std::size_t index(Coord c) const {
        return static_cast<std::size_t>(c.row) * n_ + c.col;
    }

private:
    int n_;
    Coord start_;
    Coord goal_;
    int static_count_ = 0;
    std::vector<CellState> cells_;

    friend Grid sample_grid(int n, double rho, std::uint64_t seed);
};

// Samples round(rho * n^2) statically blocked cells uniformly without
// replacement, excluding start (0,0) and goal (n-1,n-1). Connectivity is
// not enforced; unsolvable grids are legal.
Grid sample_grid(int n, double rho, std::uint64_t seed);

// Free in-bounds orthogonal neighbors in fixed up/down/left/right order.
std::vector<Coord> neighbors4(const Grid& grid, Coord c);

// Count of blocked cells among the in-bounds 8-neighborhood of c.
// Out-of-bounds positions do not count.
int blocked_adjacency8(const Grid& grid, Coord c);

inline int manhattan(Coord a, Coord b) {
    return std::abs(a.row - b.row) + std::abs(a.col - b.col);
}

// Text render, one line per row, row 0 first, no trailing newline.
// Glyphs: '.' free, '#' static, 'D' dynamic, 'S' start, 'G' goal,
// '*' path cell, 'o' free cell with phi > 0 off the path.
std::string render_ascii(const Grid& grid,
                         const std::vector<Coord>* path = nullptr,
                         const CostField* risk = nullptr);

}  // namespace srah
