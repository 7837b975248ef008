#pragma once

#include <vector>

#include "fluxladder/model.hpp"

namespace fluxladder {

/// Directed link currents of a single-particle state. Leg values flow from
/// rung l to l+1; rung values flow from leg L to leg R. In PhysicalMHz mode
/// currents carry the angular factor (rates), matching the conventions the
/// observable protocols assume.
struct CurrentField {
    int n_rungs = 0;
    std::vector<double> leg_l;    // j_{l,l+1}^{(L)}, l = 1..N-1
    std::vector<double> leg_r;    // j_{l,l+1}^{(R)}
    std::vector<double> rung;     // j_{l,LR},       l = 1..N
    std::vector<double> density;  // |chi_{d,l}|^2 by site index

    double max_abs() const;
};

CurrentField link_currents(const Vector& state, const LadderConfig& cfg);

/// j_C = j_L - j_R, with j_d the mean leg current over the N-1 links.
double chiral_current(const CurrentField& field);

struct VortexCount {
    int n_vortices = 0;
    double density = 0.0;  // N_V / N
};

/// Plaquette l is a vortex when its four directed currents, traversed
/// cyclically, share one circulation sign with every magnitude above eps.
/// When no plaquette qualifies but the boundary loop circulates, the single
/// Meissner loop counts as one vortex.
VortexCount count_vortices(const CurrentField& field, double eps);

}  // namespace fluxladder
