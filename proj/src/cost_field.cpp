#include "srah/cost_field.hpp"

namespace srah {

CostField compute_cost_field(const Grid& grid) {
    CostField field(grid.n());
    for (int r = 0; r < grid.n(); ++r) {
        for (int c = 0; c < grid.n(); ++c) {
            const Coord cell{r, c};
            const int adjacent = blocked_adjacency8(grid, cell);
            CostTenths phi = 0;
            if (adjacent >= 3)
                phi = kPenaltyBottleneckTenths;
            else if (adjacent == 2)
                phi = kPenaltyModerateTenths;
            field.set_phi_tenths(cell, phi);
        }
    }
    return field;
}

}  // namespace srah
