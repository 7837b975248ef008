#pragma once

#include <array>
#include <complex>

#include "fluxladder/model.hpp"

namespace fluxladder {

struct BandParams {
    double g = 1.0;
    double k = 1.0;
    double phi = 0.0;

    static BandParams from(const LadderConfig& cfg) { return {cfg.g, cfg.k, cfg.phi}; }
};

enum class Branch { Minus, Plus };

/// Infinite-ladder dispersion
///   omega_pm(q) = -2 g cos(q) cos(phi/2) -+ sqrt(K^2 + 4 g^2 sin^2(q) sin^2(phi/2)).
double band_energy(double q, Branch branch, const BandParams& p);

/// Number of distinct local minima of the lower band on (-pi, pi], counted on
/// a uniform grid (plateau-aware) and sharpened by golden-section refinement.
/// grid_size must be >= 512.
int minima_count(const BandParams& p, int grid_size);

/// K_c = 2 g tan(phi/2) sin(phi/2); the vortex-Meissner boundary. |phi| < pi.
double critical_coupling(double g, double phi);

/// Bound Lambda on decay-root magnitudes, Lambda = K/(2g s) + sqrt(K^2/(4g^2 s^2) + 1)
/// with s = sin(phi/2). Requires phi != 0.
double decay_bound_lambda(const BandParams& p);

enum class RootKind { Transmission, Decay, StaggeredDecay };

/// The four per-site multipliers z solving omega = omega(z): z1,z2 from
/// z^2 - R_- z + 1 = 0 and z3,z4 from z^2 - R_+ z + 1 = 0.
struct CharacteristicRoots {
    std::array<Complex, 4> z{};
    double r_minus = 0.0;
    double r_plus = 0.0;
    std::array<RootKind, 4> kind{};
    bool degenerate_pair = false;  // double root in either quadratic (band edge)

    double quasimomentum(int j) const { return std::arg(z[static_cast<size_t>(j)]); }
};

CharacteristicRoots characteristic_roots(double omega, const BandParams& p);

}  // namespace fluxladder
