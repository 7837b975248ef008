#pragma once

#include <span>
#include <vector>

#include "fluxladder/currents.hpp"
#include "fluxladder/eigensolve.hpp"
#include "fluxladder/model.hpp"

namespace fluxladder {

struct PhaseDiagramCell {
    double phi = 0.0;
    double k = 0.0;
    double j_chiral = 0.0;
    double vortex_density = 0.0;
    int n_vortices = 0;
    bool degenerate = false;  // mu2 - mu1 < 1e-8 g at this cell
};

struct PhaseDiagram {
    std::vector<double> phi_grid;
    std::vector<double> k_grid;
    std::vector<PhaseDiagramCell> cells;  // row-major: [i_phi * nk + i_k]

    const PhaseDiagramCell& cell(size_t i_phi, size_t i_k) const {
        return cells[i_phi * k_grid.size() + i_k];
    }
};

/// Ground-state chiral current and vortex density at one (phi, K) point.
/// The vortex threshold is 1e-6 of the largest link current in the cell.
PhaseDiagramCell evaluate_cell(const LadderConfig& base, double phi, double k);

/// Serial reference sweep; kept bit-identical to the parallel kernel.
PhaseDiagram phase_diagram_serial(const LadderConfig& base, std::span<const double> phi_grid,
                                  std::span<const double> k_grid);

/// OpenMP sweep over the (phi, K) grid; cells are independent and results are
/// ordered by grid index regardless of scheduling. num_threads <= 0 uses the
/// OpenMP default.
PhaseDiagram phase_diagram(const LadderConfig& base, std::span<const double> phi_grid,
                           std::span<const double> k_grid, int num_threads = 0);

std::vector<double> linear_grid(double lo, double hi, int steps);

}  // namespace fluxladder
