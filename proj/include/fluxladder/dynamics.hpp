#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fluxladder/eigensolve.hpp"
#include "fluxladder/model.hpp"

namespace fluxladder {

/// Per-site relaxation gamma and dephasing Gamma (ordinary MHz). Populations
/// decay at gamma; a site's coherence to vacuum decays at Gamma/2, which is
/// the convention the closed-form protocol solutions assume.
struct DissipationSpec {
    std::vector<double> relaxation;  // gamma_{d,l}, by site index
    std::vector<double> dephasing;   // Gamma_{d,l}

    static DissipationSpec homogeneous(int n_rungs, double gamma, double big_gamma);
    std::vector<std::string> validate(int n_rungs) const;

    double relaxation_at(SiteId s, int n) const { return relaxation[static_cast<size_t>(site_index(s, n))]; }
    double dephasing_at(SiteId s, int n) const { return dephasing[static_cast<size_t>(site_index(s, n))]; }
    /// gamma_1 = sum |chi|^2 gamma over sites (and likewise Gamma_1).
    double collective_relaxation(const Vector& state) const;
    double collective_dephasing(const Vector& state) const;
};

/// Site-resolved drive that populates the single-particle ground state from
/// vacuum with one resonant pi pulse and no parasitic excitations.
struct GenerationPlan {
    Vector drive;           // B'_{d,l} = C1 chi^{(1)}_{d,l}, MHz
    double rabi_mhz = 0.0;  // C1
    double detuning_mhz = 0.0;  // epsilon = mu1
    double t_pi_us = 0.0;       // 1 / (2 C1)
};

GenerationPlan generation_plan(const EigenSystem& sys, double c1_mhz);

/// Overlaps C_n = sum chi^{(n)*} B'; C_1 recovers the Rabi frequency.
Vector excitation_overlaps(const GenerationPlan& plan, const EigenSystem& sys);

/// Closed-form population of |mu_1> under resonant drive with relaxation and
/// dephasing. `overdamped` (optional out) flags the hyperbolic branch.
double fidelity_exact(double t_us, double c1_mhz, double gamma1_mhz, double big_gamma1_mhz,
                      bool* overdamped = nullptr);

/// Strong-coupling approximation (1 - e^{-(gamma1 + Gamma1/2) t / 2} cos C1 t)/2.
double fidelity_strong_coupling(double t_us, double c1_mhz, double gamma1_mhz,
                                double big_gamma1_mhz);

struct LindbladTrace {
    std::vector<double> t_us;
    std::vector<double> value;
    double max_trace_error = 0.0;
};

/// RK4 master-equation integration of the driven two-level protocol; the
/// independent check on fidelity_exact. step must satisfy
/// step <= 1 / (50 * 2pi * max(c1, gamma1, Gamma1)).
LindbladTrace lindblad_two_level_numeric(double c1_mhz, double gamma1_mhz,
                                         double big_gamma1_mhz, double horizon_us,
                                         double step_us);

enum class PairKind { Intraleg, Rung };

/// Two adjacent sites isolated for a Rabi-oscillation current measurement.
/// Intraleg: (leg, l) and (leg, l+1). Rung: (L, l) and (R, l).
struct SitePair {
    PairKind kind = PairKind::Intraleg;
    Leg leg = Leg::L;
    int rung = 1;
};

/// Strong-coupling analytic population difference
/// P(t) = e^{-gamma~ t} [cos(w~ t) P(0) + sin(w~ t) j / coupling].
double rabi_population_difference(double t_us, const SitePair& pair, const EigenSystem& sys,
                                  const LadderConfig& cfg, const DissipationSpec& rates);

struct NoiseSpec {
    double sigma = 0.0;
    std::uint64_t seed = 0;
};

struct RabiTrace {
    std::vector<double> t_us;
    std::vector<double> value;
    std::optional<NoiseSpec> noise;
};

/// Numeric three-state (vacuum + two sites) master-equation trace of the
/// population difference, from the ladder ground state projected onto the
/// pair. Optional additive Gaussian noise for fit testing.
RabiTrace simulate_measurement(const SitePair& pair, const EigenSystem& sys,
                               const LadderConfig& cfg, const DissipationSpec& rates,
                               double horizon_us, int samples,
                               std::optional<NoiseSpec> noise = std::nullopt);

struct CurrentEstimate {
    double j_mhz = 0.0;
    double residual = 0.0;
    double window_periods = 0.0;
};

/// Least-squares fit of the trace against e^{-gamma~ t}(A cos + B sin) with
/// gamma~ and the Rabi frequency fixed by the known coupling and rates; the
/// sin quadrature reads off the current. Fit window: first 3 periods.
CurrentEstimate extract_current(const RabiTrace& trace, const SitePair& pair,
                                const LadderConfig& cfg, const DissipationSpec& rates);

}  // namespace fluxladder
