#include "fluxladder/floquet.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "fluxladder/errors.hpp"

namespace fluxladder {

double bessel_j0(double x) { return std::cyl_bessel_j(0, std::abs(x)); }

double bessel_j1(double x) {
    // J1 is odd; cyl_bessel_j wants x >= 0
    const double v = std::cyl_bessel_j(1, std::abs(x));
    return x < 0.0 ? -v : v;
}

LevelScheme LevelScheme::two_level(double omega1, double omega2, double delta1, double delta2) {
    LevelScheme s;
    s.level_energies = {0.0, 0.0};  // transition energy folded into the detunings
    s.drive = {{Complex(omega1), Complex(omega2)}};
    s.detuning = {{delta1, delta2}};
    return s;
}

LevelScheme LevelScheme::harmonic(int n_levels, double omega_bar, double omega1, double omega2,
                                  double delta1, double delta2) {
    LevelScheme s;
    for (int n = 0; n < n_levels; ++n) s.level_energies.push_back(n * omega_bar);
    for (int t = 0; t + 1 < n_levels; ++t) {
        const double amp = std::sqrt(static_cast<double>(t + 1));
        s.drive.push_back({Complex(amp * omega1), Complex(amp * omega2)});
        s.detuning.push_back({delta1, delta2});
    }
    return s;
}

std::vector<std::string> LevelScheme::warnings() const {
    std::vector<std::string> w;
    for (size_t t = 0; t < drive.size(); ++t) {
        for (int j = 0; j < 2; ++j) {
            for (int jp = 0; jp < 2; ++jp) {
                const double d = detuning[t][static_cast<size_t>(jp)];
                if (d == 0.0) continue;
                const double r = std::norm(drive[t][static_cast<size_t>(j)]) / (d * d);
                if (r >= 0.1) {
                    std::ostringstream os;
                    os << "large-detuning ratio |Omega_" << j + 1 << "," << t << "/delta_"
                       << jp + 1 << "," << t << "|^2 = " << r << " exceeds 0.1";
                    w.push_back(os.str());
                }
            }
        }
    }
    return w;
}

EffectiveModulation stark_and_modulation(const LevelScheme& scheme) {
    const int nl = scheme.n_levels();
    if (nl < 2) throw ConfigError("stark_and_modulation: need at least two levels");
    const int nt = nl - 1;
    for (int t = 0; t < nt; ++t)
        for (int j = 0; j < 2; ++j)
            if (scheme.detuning[static_cast<size_t>(t)][static_cast<size_t>(j)] == 0.0)
                throw NumericError("stark_and_modulation: zero detuning");

    auto amp2 = [&](int j, int t) {  // |Omega_{j,t}|^2, zero beyond the top transition
        if (t < 0 || t >= nt) return 0.0;
        return std::norm(scheme.drive[static_cast<size_t>(t)][static_cast<size_t>(j)]);
    };
    auto det = [&](int j, int t) {
        return scheme.detuning[static_cast<size_t>(t)][static_cast<size_t>(j)];
    };
    auto cross = [&](int t) {  // |Omega_{1,t} Omega_{2,t}| / delta_{1,t}
        if (t < 0 || t >= nt) return 0.0;
        return std::abs(scheme.drive[static_cast<size_t>(t)][0]) *
               std::abs(scheme.drive[static_cast<size_t>(t)][1]) / det(0, t);
    };

    EffectiveModulation out;
    for (int n = 1; n < nl; ++n) {
        double nu = 0.0;
        for (int j = 0; j < 2; ++j) {
            nu += (n < nt ? amp2(j, n) / (4.0 * det(j, n)) : 0.0);
            nu -= amp2(j, n - 1) / (4.0 * det(j, n - 1));
            nu -= amp2(j, 0) / (4.0 * det(j, 0));
        }
        const double eta = 0.5 * ((n < nt ? cross(n) : 0.0) - cross(n - 1) - cross(0));
        out.stark_shift.push_back(nu);
        out.modulation.push_back(eta);
    }
    return out;
}

double DriveSpec::modulation_strength() const {
    return std::abs(omega1 * omega2 / delta1);
}

double DriveSpec::stark_shift() const {
    return omega1 * omega1 / (2.0 * delta1) + omega2 * omega2 / (2.0 * delta2);
}

std::vector<std::string> DriveSpec::validate() const {
    std::vector<std::string> errs;
    if (delta1 == 0.0) errs.push_back("delta1 must be nonzero");
    if (delta2 == 0.0) errs.push_back("delta2 must be nonzero");
    const double d = delta();
    const double mismatch = std::abs(d - (omega_r - omega_l));
    if (mismatch > 1e-9 * std::max(1.0, std::abs(d)))
        errs.push_back("delta2 - delta1 must equal omega_r - omega_l (resonance condition)");
    return errs;
}

std::vector<std::string> DriveSpec::warnings() const {
    std::vector<std::string> w;
    const double d = std::abs(delta());
    for (double dj : {delta1, delta2}) {
        if (dj != 0.0 && d / std::abs(dj) >= 0.2) {
            w.push_back("modulation frequency is not small against the tone detunings");
            break;
        }
    }
    for (double oj : {omega1, omega2}) {
        for (double dj : {delta1, delta2}) {
            if (dj != 0.0 && (oj * oj) / (dj * dj) >= 0.1) {
                w.push_back("large-detuning ratio |Omega_j/delta_j|^2 exceeds 0.1");
                return w;
            }
        }
    }
    return w;
}

EffectiveCouplings renormalized_couplings(const DriveSpec& spec, double g0, double k0) {
    if (auto errs = spec.validate(); !errs.empty()) throw ConfigError(errs.front());
    EffectiveCouplings e;
    const double d = spec.delta();
    const double ratio = d != 0.0 ? spec.modulation_strength() / d : 0.0;
    e.eta_x = 2.0 * ratio * std::sin(0.5 * spec.phi);
    e.eta_y = 2.0 * ratio * std::sin(spec.phi0);
    e.g = g0 * bessel_j0(e.eta_x);
    e.k = k0 * bessel_j1(e.eta_y);
    e.phi = spec.phi;
    return e;
}

std::vector<std::pair<double, double>> interleg_tuning_curve(const DriveSpec& spec, double g0,
                                                             double k0,
                                                             std::span<const double> phi0_grid) {
    (void)g0;
    const double d = spec.delta();
    if (d == 0.0) throw ConfigError("interleg_tuning_curve: modulation frequency is zero");
    const double slope = spec.modulation_strength() / d * k0;
    std::vector<std::pair<double, double>> rows;
    rows.reserve(phi0_grid.size());
    for (double p0 : phi0_grid) rows.emplace_back(p0, slope * std::sin(p0));
    return rows;
}

namespace {

// Dense 2^{2N} single-qubit operators embedded by site index.
struct DrivenLadder {
    int nq;
    Eigen::Index dim;
    Matrix h_hop;       // static intraleg hopping
    Matrix h_rung_lr;   // -2pi K0 sum_l |..R_l..><..L_l..|, rotates at e^{i 2pi Delta t}
    std::vector<Eigen::VectorXd> sz_diag;
    std::vector<double> site_phase;
};

DrivenLadder assemble(const DriveSpec& spec, double g0, double k0, int n) {
    DrivenLadder sys;
    sys.nq = 2 * n;
    sys.dim = Eigen::Index(1) << sys.nq;
    const auto dim = sys.dim;

    auto bit = [&](Eigen::Index state, int q) { return (state >> (sys.nq - 1 - q)) & 1; };
    sys.h_hop = Matrix::Zero(dim, dim);
    sys.h_rung_lr = Matrix::Zero(dim, dim);
    auto hop = [&](Matrix& m, int qa, int qb, double w) {
        // w * sigma-_{qa} sigma+_{qb}: moves the excitation qa -> qb
        for (Eigen::Index s = 0; s < dim; ++s) {
            if (bit(s, qa) == 1 && bit(s, qb) == 0) {
                const Eigen::Index t =
                    s ^ (Eigen::Index(1) << (sys.nq - 1 - qa)) ^ (Eigen::Index(1) << (sys.nq - 1 - qb));
                m(t, s) += w;
            }
        }
    };
    auto site = [&](Leg leg, int l) { return site_index({leg, l}, n); };
    for (int l = 1; l < n; ++l) {
        for (Leg leg : {Leg::L, Leg::R}) {
            hop(sys.h_hop, site(leg, l), site(leg, l + 1), -two_pi * g0);
            hop(sys.h_hop, site(leg, l + 1), site(leg, l), -two_pi * g0);
        }
    }
    for (int l = 1; l <= n; ++l)
        hop(sys.h_rung_lr, site(Leg::L, l), site(Leg::R, l), -two_pi * k0);

    sys.sz_diag.resize(static_cast<size_t>(sys.nq));
    for (int q = 0; q < sys.nq; ++q) {
        Eigen::VectorXd d(dim);
        for (Eigen::Index s = 0; s < dim; ++s) d(s) = bit(s, q) ? 1.0 : -1.0;
        sys.sz_diag[static_cast<size_t>(q)] = d;
    }
    sys.site_phase.resize(static_cast<size_t>(sys.nq));
    for (int l = 1; l <= n; ++l) {
        sys.site_phase[static_cast<size_t>(site(Leg::L, l))] = spec.phi0 - spec.phi * l;
        sys.site_phase[static_cast<size_t>(site(Leg::R, l))] = -spec.phi0 - spec.phi * l;
    }
    return sys;
}

}  // namespace

FloquetValidation validate_effective_model(const DriveSpec& spec, double g0, double k0,
                                           const LadderConfig& small_cfg, double horizon_us,
                                           double step_us) {
    if (small_cfg.n_rungs > 3)
        throw ConfigError("validate_effective_model: n_rungs must be <= 3");
    if (auto errs = spec.validate(); !errs.empty()) throw ConfigError(errs.front());
    const int n = small_cfg.n_rungs;

    const double omega_mod = spec.modulation_strength();
    const double delta = spec.delta();

    EffectiveCouplings eff;
    if (omega_mod == 0.0 && delta == 0.0) {
        // no modulation, degenerate legs: the bare resonant ladder is exact
        eff.g = g0;
        eff.k = k0;
        eff.phi = 0.0;
    } else {
        eff = renormalized_couplings(spec, g0, k0);
    }

    // step must resolve the modulation, the rung rotation and the couplings
    const double fmax =
        std::max({std::abs(delta), std::abs(omega_mod), g0 + k0, 1.0});
    double h = step_us > 0.0 ? step_us : 1.0 / (200.0 * fmax);
    if (h > 1.0 / (200.0 * fmax) + 1e-15)
        throw ConfigError("validate_effective_model: step too large for drive frequency");
    const auto nsteps = static_cast<long>(std::ceil(horizon_us / h));
    h = horizon_us / static_cast<double>(nsteps);

    DrivenLadder sys = assemble(spec, g0, k0, n);
    const double wd = two_pi * delta;

    Vector psi = Vector::Zero(sys.dim);
    const int init_site = site_index({Leg::L, 1}, n);
    psi(Eigen::Index(1) << (sys.nq - 1 - init_site)) = 1.0;

    // Effective single-excitation evolution, exact by diagonalisation. A
    // negative K is gauge-equivalent to |K| for site populations.
    LadderConfig eff_cfg = small_cfg;
    eff_cfg.g = eff.g;
    eff_cfg.k = std::abs(eff.k);
    eff_cfg.phi = eff.phi;
    eff_cfg.units = Units::PhysicalMHz;
    const Matrix h_eff = two_pi * build_open_ladder(eff_cfg);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h_eff);
    const Eigen::VectorXd we = es.eigenvalues();
    const Matrix ve = es.eigenvectors();
    Vector chi0 = Vector::Zero(2 * n);
    chi0(init_site) = 1.0;
    const Vector chi_modes = ve.adjoint() * chi0;

    auto apply_h = [&](double t, const Vector& v) -> Vector {
        const Complex rot = std::exp(Complex(0.0, wd * t));
        Vector out = sys.h_hop * v;
        out.noalias() += rot * (sys.h_rung_lr * v);
        out.noalias() += std::conj(rot) * (sys.h_rung_lr.adjoint() * v);
        if (omega_mod != 0.0) {
            for (int q = 0; q < sys.nq; ++q) {
                const double m = -0.5 * two_pi * omega_mod *
                                 std::cos(wd * t + sys.site_phase[static_cast<size_t>(q)]);
                out.noalias() += m * sys.sz_diag[static_cast<size_t>(q)].asDiagonal() * v;
            }
        }
        return out;
    };

    FloquetValidation rep;
    rep.effective = eff;
    rep.horizon_us = horizon_us;
    rep.step_us = h;

    double t = 0.0;
    for (long i = 0; i <= nsteps; ++i) {
        // site populations: full model vs effective model
        double dev = 0.0;
        Vector evolved(2 * n);
        for (int m = 0; m < 2 * n; ++m)
            evolved(m) = std::exp(Complex(0.0, -we(m) * t)) * chi_modes(m);
        const Vector chit = ve * evolved;
        for (int q = 0; q < sys.nq; ++q) {
            double pop = 0.0;
            for (Eigen::Index s = 0; s < sys.dim; ++s)
                if ((s >> (sys.nq - 1 - q)) & 1) pop += std::norm(psi(s));
            dev = std::max(dev, std::abs(pop - std::norm(chit(q))));
        }
        rep.max_population_deviation = std::max(rep.max_population_deviation, dev);
        if (i == nsteps) break;

        const Vector k1 = Complex(0, -1) * apply_h(t, psi);
        const Vector k2 = Complex(0, -1) * apply_h(t + 0.5 * h, psi + 0.5 * h * k1);
        const Vector k3 = Complex(0, -1) * apply_h(t + 0.5 * h, psi + 0.5 * h * k2);
        const Vector k4 = Complex(0, -1) * apply_h(t + h, psi + h * k3);
        psi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
    }
    rep.norm_drift = std::abs(psi.norm() - 1.0);
    if (rep.norm_drift > 1e-6)
        throw NumericError("validate_effective_model: norm drift exceeds 1e-6, step too large");
    return rep;
}

}  // namespace fluxladder
