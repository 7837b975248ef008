#pragma once

#include <vector>

#include "fluxladder/bands.hpp"
#include "fluxladder/model.hpp"

namespace fluxladder {

/// Eigendecomposition of the open ladder. Energies ascend; each column is a
/// unit-norm eigenvector with a deterministic gauge: the component of largest
/// magnitude (ties broken by lowest site index) is made real positive.
struct EigenSystem {
    Eigen::VectorXd energies;
    Matrix states;  // column n = chi^{(n+1)}
    int n_rungs = 0;

    int dim() const { return static_cast<int>(energies.size()); }
    Complex amplitude(int level, SiteId site) const {
        return states(site_index(site, n_rungs), level - 1);
    }
};

EigenSystem diagonalize(const Matrix& h);

/// Least-squares expansion of an open-ladder eigenstate over the four
/// infinite-ladder solutions at the same energy. Coefficients refer to the
/// unit-normalised basis columns; duplicate (band-edge) roots are dropped and
/// flagged, leaving a reduced basis.
struct ModeExpansion {
    int level = 0;  // 1-based; 0 for fits at arbitrary energies
    double omega = 0.0;
    BandParams params;
    CharacteristicRoots roots;
    std::array<Complex, 4> coeff{};     // zero for dropped columns
    std::array<double, 4> col_norm{};   // norms of the raw basis columns
    double residual = 0.0;              // rms misfit
    bool reduced_basis = false;
};

ModeExpansion fit_expansion_at(double omega, const Vector& chi, int n_rungs, const BandParams& p);
ModeExpansion fit_mode_expansion(const EigenSystem& sys, int level, const BandParams& p);

struct QuasimomentumRow {
    Leg leg;
    double q;          // quasimomentum, shifted by -+ phi/2 per leg
    double intensity;  // rescaled to max 1
};

/// One row per transmission root per leg: leg L at q_j - phi/2, leg R at
/// q_j + phi/2, intensity |A_j psi_{d,0}| in the raw (unnormalised) basis.
std::vector<QuasimomentumRow> quasimomentum_map(const ModeExpansion& exp, const EigenSystem& sys);

}  // namespace fluxladder
