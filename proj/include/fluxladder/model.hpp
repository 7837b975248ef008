#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace fluxladder {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class Leg { L, R };
enum class Units { Dimensionless, PhysicalMHz };

struct SiteId {
    Leg leg;
    int rung;  // 1..N
};

/// Two-leg ladder with intraleg hopping g, rung coupling K and flux phi per
/// plaquette. Couplings are ordinary frequencies (MHz) in PhysicalMHz mode;
/// Dimensionless mode sets the unit of energy to g.
struct LadderConfig {
    int n_rungs = 20;
    double g = 1.0;
    double k = 1.0;
    double phi = 0.0;
    Units units = Units::Dimensionless;

    // Factor applied wherever a coupling multiplies time (or enters a rate):
    // 2*pi converts MHz to rad/us; dimensionless mode is already angular.
    double angular_scale() const { return units == Units::PhysicalMHz ? two_pi : 1.0; }
};

/// Empty result means the config is valid; otherwise one message per violated
/// invariant, each naming the offending field.
std::vector<std::string> validate_config(const LadderConfig& cfg);

/// Site -> matrix index. (L,l) -> 2(l-1), (R,l) -> 2(l-1)+1.
int site_index(SiteId site, int n_rungs);

/// Single-excitation Hamiltonian of the open ladder, dimension 2N.
/// Nonzero elements: <d,l+1|H|d,l> = -g and <R,l|H|L,l> = -K e^{i phi l}.
Matrix build_open_ladder(const LadderConfig& cfg);

bool is_hermitian(const Matrix& m, double tol);

}  // namespace fluxladder
