#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fluxladder/model.hpp"

namespace fluxladder {

double bessel_j0(double x);
double bessel_j1(double x);

/// Multi-level qubit under two off-resonant tones. Transition t couples
/// levels t and t+1 with amplitude drive[t][j] and detuning detuning[t][j]
/// for tone j (ordinary MHz throughout).
struct LevelScheme {
    std::vector<double> level_energies;                 // size n_levels
    std::vector<std::array<Complex, 2>> drive;          // size n_levels - 1
    std::vector<std::array<double, 2>> detuning;        // size n_levels - 1

    int n_levels() const { return static_cast<int>(level_energies.size()); }

    /// Two-level truncation (upper transitions absent).
    static LevelScheme two_level(double omega1, double omega2, double delta1, double delta2);

    /// Weak-anharmonicity limit: omega_n = n omega_bar, drive_n = sqrt(n+1) tone,
    /// constant detunings. Its modulation cancels identically.
    static LevelScheme harmonic(int n_levels, double omega_bar, double omega1, double omega2,
                                double delta1, double delta2);

    /// Large-detuning checks |drive/detuning|^2 < 0.1; advisory only.
    std::vector<std::string> warnings() const;
};

/// Per level n >= 1: static Stark shift nu_n and modulation strength eta_n.
struct EffectiveModulation {
    std::vector<double> stark_shift;  // nu_n, index n-1
    std::vector<double> modulation;   // eta_n, index n-1
};

EffectiveModulation stark_and_modulation(const LevelScheme& scheme);

/// Two-tone drive of the whole ladder. Tone amplitudes and detunings are
/// shared by both legs; phases phi_{d,l} = phi_d - phi*l with
/// phi_L = -phi_R = phi0 set the rung phase pattern.
struct DriveSpec {
    double omega1 = 178.0;   // MHz
    double omega2 = 178.0;   // MHz
    double delta1 = 1000.0;  // MHz
    double delta2 = 1100.0;  // MHz
    double phi0 = 0.0;       // rad
    double phi = 0.0;        // rad, flux per plaquette
    double omega_l = 1900.0; // MHz, left-leg qubit frequency
    double omega_r = 2000.0; // MHz

    double delta() const { return delta2 - delta1; }             // modulation frequency
    double modulation_strength() const;                          // Omega = |o1 o2 / d1|
    double stark_shift() const;                                  // omega_s = sum o_j^2/(2 d_j)

    std::vector<std::string> validate() const;  // hard errors (empty = ok)
    std::vector<std::string> warnings() const;  // regime checks, advisory
};

struct EffectiveCouplings {
    double g = 0.0;
    double k = 0.0;
    double phi = 0.0;
    double eta_x = 0.0;
    double eta_y = 0.0;
};

/// Bessel-renormalised ladder parameters: g = g0 J0(eta_x), K = K0 J1(eta_y)
/// with eta_x = (2 Omega/delta) sin(phi/2), eta_y = (2 Omega/delta) sin(phi0).
EffectiveCouplings renormalized_couplings(const DriveSpec& spec, double g0, double k0);

/// Small-angle interleg coupling K(phi0) = (Omega/delta) K0 sin(phi0); at the
/// reference ratio K0/g0 this is the 3 g sin(phi0) tuning law.
std::vector<std::pair<double, double>> interleg_tuning_curve(const DriveSpec& spec, double g0,
                                                             double k0,
                                                             std::span<const double> phi0_grid);

struct FloquetValidation {
    double max_population_deviation = 0.0;
    double norm_drift = 0.0;
    EffectiveCouplings effective;
    double horizon_us = 0.0;
    double step_us = 0.0;
};

/// Brute-force check of the drive engineering: evolves the fully driven
/// ladder (every qubit state, lab-frame modulation written in the frame
/// rotating at the Stark-shifted qubit frequencies, which leaves populations
/// untouched) and compares site populations against evolution under the
/// static effective ladder. Initial state: excitation on (L,1).
/// Requires small_cfg.n_rungs <= 3. step_us <= 0 picks a safe default.
FloquetValidation validate_effective_model(const DriveSpec& spec, double g0, double k0,
                                           const LadderConfig& small_cfg, double horizon_us,
                                           double step_us = 0.0);

}  // namespace fluxladder
