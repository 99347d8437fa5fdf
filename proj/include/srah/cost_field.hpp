#pragma once

#include <vector>

#include "srah/grid.hpp"

namespace srah {

// All traversal costs are multiples of 0.1, so they are held as integer
// tenths and compared exactly.
using CostTenths = long long;

inline constexpr CostTenths kPenaltyBottleneckTenths = 20;  // 2.0
inline constexpr CostTenths kPenaltyModerateTenths = 8;     // 0.8

inline double tenths_to_double(CostTenths t) { return static_cast<double>(t) / 10.0; }

// Per-cell semantic risk penalty: 2.0 when >= 3 of the 8 neighbors are
// blocked, 0.8 when exactly 2 are, 0.0 otherwise. Defined for every cell,
// blocked ones included.
class CostField {
public:
    explicit CostField(int n) : n_(n), phi_tenths_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }

    CostTenths phi_tenths(Coord c) const {
        return phi_tenths_[static_cast<std::size_t>(c.row) * n_ + c.col];
    }

    double phi(Coord c) const { return tenths_to_double(phi_tenths(c)); }

    void set_phi_tenths(Coord c, CostTenths v) {
        phi_tenths_[static_cast<std::size_t>(c.row) * n_ + c.col] = v;
    }

private:
    int n_;
    std::vector<CostTenths> phi_tenths_;
};

CostField compute_cost_field(const Grid& grid);

// Edge cost of entering dest: 1 + phi(dest), in tenths. Source-independent.
inline CostTenths step_cost_tenths(const CostField& field, Coord dest) {
    return 10 + field.phi_tenths(dest);
}

inline double step_cost(const CostField& field, Coord dest) {
    return tenths_to_double(step_cost_tenths(field, dest));
}

}  // namespace srah
