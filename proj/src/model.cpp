#include "fluxladder/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fluxladder/errors.hpp"

namespace fluxladder {

std::vector<std::string> validate_config(const LadderConfig& cfg) {
    std::vector<std::string> errs;
    if (cfg.n_rungs < 1) errs.push_back("n_rungs must be >= 1");
    if (!(cfg.g > 0.0)) errs.push_back("g must be > 0");
    if (!(cfg.k >= 0.0)) errs.push_back("k must be >= 0");
    if (!(cfg.phi >= -std::numbers::pi && cfg.phi <= std::numbers::pi))
        errs.push_back("phi must lie in [-pi, pi]");
    return errs;
}

int site_index(SiteId site, int n_rungs) {
    if (site.rung < 1 || site.rung > n_rungs) {
        std::ostringstream os;
        os << "rung index " << site.rung << " out of range 1.." << n_rungs;
        throw std::domain_error(os.str());
    }
    return 2 * (site.rung - 1) + (site.leg == Leg::L ? 0 : 1);
}

Matrix build_open_ladder(const LadderConfig& cfg) {
    if (auto errs = validate_config(cfg); !errs.empty()) {
        std::string msg = "invalid ladder config:";
        for (const auto& e : errs) msg += " " + e + ";";
        throw ConfigError(msg);
    }
    const int n = cfg.n_rungs;
    Matrix h = Matrix::Zero(2 * n, 2 * n);
    for (int l = 1; l < n; ++l) {
        for (Leg leg : {Leg::L, Leg::R}) {
            const int a = site_index({leg, l}, n);
            const int b = site_index({leg, l + 1}, n);
            h(b, a) = -cfg.g;
            h(a, b) = -cfg.g;
        }
    }
    for (int l = 1; l <= n; ++l) {
        const int a = site_index({Leg::L, l}, n);
        const int b = site_index({Leg::R, l}, n);
        const Complex rung = -cfg.k * std::exp(Complex(0.0, cfg.phi * l));
        h(b, a) = rung;
        h(a, b) = std::conj(rung);
    }
    return h;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
}

}  // namespace fluxladder
