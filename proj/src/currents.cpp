#include "fluxladder/currents.hpp"

#include <algorithm>
#include <cmath>

#include "fluxladder/errors.hpp"

namespace fluxladder {

double CurrentField::max_abs() const {
    double m = 0.0;
    for (const auto* v : {&leg_l, &leg_r, &rung})
        for (double x : *v) m = std::max(m, std::abs(x));
    return m;
}

CurrentField link_currents(const Vector& state, const LadderConfig& cfg) {
    const int n = cfg.n_rungs;
    if (state.size() != 2 * n) throw ConfigError("link_currents: state dimension mismatch");
    const double gs = cfg.angular_scale() * cfg.g;
    const double ks = cfg.angular_scale() * cfg.k;

    CurrentField f;
    f.n_rungs = n;
    f.leg_l.resize(static_cast<size_t>(std::max(0, n - 1)));
    f.leg_r.resize(static_cast<size_t>(std::max(0, n - 1)));
    f.rung.resize(static_cast<size_t>(n));
    f.density.resize(static_cast<size_t>(2 * n));

    auto at = [&](Leg leg, int l) { return state(site_index({leg, l}, n)); };
    for (int l = 1; l < n; ++l) {
        // i g (chi*_{l+1} chi_l - c.c.) = -2 g Im(chi*_{l+1} chi_l)
        f.leg_l[static_cast<size_t>(l - 1)] =
            -2.0 * gs * std::imag(std::conj(at(Leg::L, l + 1)) * at(Leg::L, l));
        f.leg_r[static_cast<size_t>(l - 1)] =
            -2.0 * gs * std::imag(std::conj(at(Leg::R, l + 1)) * at(Leg::R, l));
    }
    for (int l = 1; l <= n; ++l) {
        const Complex ph = std::exp(Complex(0.0, cfg.phi * l));
        f.rung[static_cast<size_t>(l - 1)] =
            -2.0 * ks * std::imag(std::conj(at(Leg::R, l)) * at(Leg::L, l) * ph);
    }
    for (int i = 0; i < 2 * n; ++i)
        f.density[static_cast<size_t>(i)] = std::norm(state(i));
    return f;
}

double chiral_current(const CurrentField& field) {
    if (field.n_rungs < 2) throw std::domain_error("chiral_current: needs N >= 2");
    double jl = 0.0, jr = 0.0;
    for (double x : field.leg_l) jl += x;
    for (double x : field.leg_r) jr += x;
    const double links = static_cast<double>(field.n_rungs - 1);
    return jl / links - jr / links;
}

VortexCount count_vortices(const CurrentField& field, double eps) {
    if (!(eps > 0.0)) throw ConfigError("count_vortices: eps must be > 0");
    const int n = field.n_rungs;
    VortexCount out;
    // plaquette l sits between rungs l and l+1; traversal
    // (L,l) -> (L,l+1) -> (R,l+1) -> (R,l) -> (L,l)
    for (int l = 1; l < n; ++l) {
        const double c[4] = {field.leg_l[static_cast<size_t>(l - 1)],
                             field.rung[static_cast<size_t>(l)],
                             -field.leg_r[static_cast<size_t>(l - 1)],
                             -field.rung[static_cast<size_t>(l - 1)]};
        const bool pos = c[0] > eps && c[1] > eps && c[2] > eps && c[3] > eps;
        const bool neg = c[0] < -eps && c[1] < -eps && c[2] < -eps && c[3] < -eps;
        if (pos || neg) ++out.n_vortices;
    }
    if (out.n_vortices == 0 && n >= 2) {
        double circ = field.rung[static_cast<size_t>(n - 1)] - field.rung[0];
        for (int l = 1; l < n; ++l) {
            circ += field.leg_l[static_cast<size_t>(l - 1)];
            circ -= field.leg_r[static_cast<size_t>(l - 1)];
        }
        if (std::abs(circ) > eps) out.n_vortices = 1;  // single Meissner loop
    }
    out.density = static_cast<double>(out.n_vortices) / n;
    return out;
}

}  // namespace fluxladder
