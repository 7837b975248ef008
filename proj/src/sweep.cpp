#include "fluxladder/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fluxladder/errors.hpp"

namespace fluxladder {

PhaseDiagramCell evaluate_cell(const LadderConfig& base, double phi, double k) {
    LadderConfig cfg = base;
    cfg.phi = phi;
    cfg.k = k;
    const EigenSystem sys = diagonalize(build_open_ladder(cfg));
    const Vector ground = sys.states.col(0);
    const CurrentField field = link_currents(ground, cfg);

    PhaseDiagramCell cell;
    cell.phi = phi;
    cell.k = k;
    cell.j_chiral = chiral_current(field);
    cell.degenerate = sys.energies(1) - sys.energies(0) < 1e-8 * cfg.g;
    const double scale = field.max_abs();
    if (scale > 0.0) {
        const VortexCount vc = count_vortices(field, 1e-6 * scale);
        cell.n_vortices = vc.n_vortices;
        cell.vortex_density = vc.density;
    }
    return cell;
}

namespace {
PhaseDiagram make_empty(const LadderConfig& base, std::span<const double> phi_grid,
                        std::span<const double> k_grid) {
    if (phi_grid.empty() || k_grid.empty())
        throw ConfigError("phase_diagram: grids must be nonempty");
    if (base.n_rungs < 2) throw ConfigError("phase_diagram: needs N >= 2");
    PhaseDiagram pd;
    pd.phi_grid.assign(phi_grid.begin(), phi_grid.end());
    pd.k_grid.assign(k_grid.begin(), k_grid.end());
    pd.cells.resize(pd.phi_grid.size() * pd.k_grid.size());
    return pd;
}
}  // namespace

PhaseDiagram phase_diagram_serial(const LadderConfig& base, std::span<const double> phi_grid,
                                  std::span<const double> k_grid) {
    PhaseDiagram pd = make_empty(base, phi_grid, k_grid);
    const auto nk = static_cast<long>(pd.k_grid.size());
    const auto total = static_cast<long>(pd.cells.size());
    for (long idx = 0; idx < total; ++idx) {
        const auto i = static_cast<size_t>(idx / nk);
        const auto j = static_cast<size_t>(idx % nk);
        pd.cells[static_cast<size_t>(idx)] = evaluate_cell(base, pd.phi_grid[i], pd.k_grid[j]);
    }
    return pd;
}

PhaseDiagram phase_diagram(const LadderConfig& base, std::span<const double> phi_grid,
                           std::span<const double> k_grid, int num_threads) {
    PhaseDiagram pd = make_empty(base, phi_grid, k_grid);
    const auto nk = static_cast<long>(pd.k_grid.size());
    const auto total = static_cast<long>(pd.cells.size());
#ifdef _OPENMP
    const int nt = num_threads > 0 ? num_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (long idx = 0; idx < total; ++idx) {
        const auto i = static_cast<size_t>(idx / nk);
        const auto j = static_cast<size_t>(idx % nk);
        pd.cells[static_cast<size_t>(idx)] = evaluate_cell(base, pd.phi_grid[i], pd.k_grid[j]);
    }
#else
    (void)num_threads;
    for (long idx = 0; idx < total; ++idx) {
        const auto i = static_cast<size_t>(idx / nk);
        const auto j = static_cast<size_t>(idx % nk);
        pd.cells[static_cast<size_t>(idx)] = evaluate_cell(base, pd.phi_grid[i], pd.k_grid[j]);
    }
#endif
    return pd;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    if (steps < 1) throw ConfigError("linear_grid: steps must be >= 1");
    std::vector<double> g(static_cast<size_t>(steps));
    if (steps == 1) {
        g[0] = hi;
        return g;
    }
    const double h = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) g[static_cast<size_t>(i)] = lo + h * i;
    return g;
}

}  // namespace fluxladder
