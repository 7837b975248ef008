#include "fluxladder/eigensolve.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "fluxladder/errors.hpp"

namespace fluxladder {

namespace {
// Raw infinite-ladder solution evaluated on rungs 1..N for one root z.
Vector basis_column(double omega, const Complex& z, int n, const BandParams& p) {
    const Complex eph = std::exp(Complex(0.0, 0.5 * p.phi));
    const Complex psi_l0 = omega + p.g * (z * eph + std::conj(eph) / z);
    const Complex psi_r0 = -p.k;
    Vector col(2 * n);
    Complex zl = 1.0;                                    // z^l
    Complex fl = 1.0, fr = 1.0;                          // e^{-+ i phi l / 2}
    const Complex stepl = std::exp(Complex(0.0, -0.5 * p.phi));
    for (int l = 1; l <= n; ++l) {
        zl *= z;
        fl *= stepl;
        fr *= std::conj(stepl);
        col(2 * (l - 1)) = psi_l0 * zl * fl;
        col(2 * (l - 1) + 1) = psi_r0 * zl * fr;
    }
    return col;
}
}  // namespace

EigenSystem diagonalize(const Matrix& h) {
    if (!is_hermitian(h, 1e-10)) throw NumericError("diagonalize: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) throw NumericError("diagonalize: eigensolver failed");

    EigenSystem sys;
    sys.energies = solver.eigenvalues();
    sys.states = solver.eigenvectors();
    sys.n_rungs = static_cast<int>(h.rows()) / 2;
    for (int n = 0; n < sys.states.cols(); ++n) {
        int best = 0;
        double best_mag = std::abs(sys.states(0, n));
        for (int i = 1; i < sys.states.rows(); ++i) {
            const double mag = std::abs(sys.states(i, n));
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        const Complex a = sys.states(best, n);
        sys.states.col(n) *= std::conj(a) / std::abs(a);
    }
    return sys;
}

ModeExpansion fit_expansion_at(double omega, const Vector& chi, int n_rungs,
                               const BandParams& p) {
    ModeExpansion exp;
    exp.omega = omega;
    exp.params = p;
    exp.roots = characteristic_roots(omega, p);

    // Drop duplicates of earlier roots; a double root at a band edge leaves a
    // rank-deficient basis otherwise.
    std::array<bool, 4> keep{true, true, true, true};
    for (size_t j = 1; j < 4; ++j)
        for (size_t i = 0; i < j; ++i)
            if (keep[i] && std::abs(exp.roots.z[j] - exp.roots.z[i]) < 1e-6) keep[j] = false;

    std::vector<int> cols;
    Matrix basis(2 * n_rungs, 4);
    for (int j = 0; j < 4; ++j) {
        Vector col = basis_column(omega, exp.roots.z[static_cast<size_t>(j)], n_rungs, p);
        exp.col_norm[static_cast<size_t>(j)] = col.norm();
        if (!keep[static_cast<size_t>(j)] || !(col.norm() > 0.0)) continue;
        basis.col(static_cast<Eigen::Index>(cols.size())) = col / col.norm();
        cols.push_back(j);
    }
    exp.reduced_basis = cols.size() < 4;

    const auto m = static_cast<Eigen::Index>(cols.size());
    if (m == 0) throw NumericError("fit_expansion_at: empty basis");
    Matrix b = basis.leftCols(m);
    Vector a = b.colPivHouseholderQr().solve(chi);
    exp.residual = (b * a - chi).norm() / std::sqrt(static_cast<double>(chi.size()));
    for (Eigen::Index i = 0; i < m; ++i)
        exp.coeff[static_cast<size_t>(cols[static_cast<size_t>(i)])] = a(i);
    return exp;
}

ModeExpansion fit_mode_expansion(const EigenSystem& sys, int level, const BandParams& p) {
    if (level < 1 || level > sys.dim())
        throw ConfigError("fit_mode_expansion: level out of range");
    ModeExpansion exp =
        fit_expansion_at(sys.energies(level - 1), sys.states.col(level - 1), sys.n_rungs, p);
    exp.level = level;
    return exp;
}

std::vector<QuasimomentumRow> quasimomentum_map(const ModeExpansion& exp,
                                                const EigenSystem& sys) {
    (void)sys;
    const BandParams& p = exp.params;
    const Complex eph = std::exp(Complex(0.0, 0.5 * p.phi));
    std::vector<QuasimomentumRow> rows;
    double max_intensity = 0.0;
    for (size_t j = 0; j < 4; ++j) {
        if (exp.roots.kind[j] != RootKind::Transmission) continue;
        if (exp.coeff[j] == Complex(0.0) && exp.reduced_basis) continue;
        const Complex z = exp.roots.z[j];
        const double q = std::arg(z);
        const Complex psi_l0 = exp.omega + p.g * (z * eph + std::conj(eph) / z);
        const Complex psi_r0 = -p.k;
        const double a_raw = std::abs(exp.coeff[j]) / exp.col_norm[j];
        rows.push_back({Leg::L, q - 0.5 * p.phi, a_raw * std::abs(psi_l0)});
        rows.push_back({Leg::R, q + 0.5 * p.phi, a_raw * std::abs(psi_r0)});
        max_intensity = std::max({max_intensity, rows[rows.size() - 2].intensity,
                                  rows[rows.size() - 1].intensity});
    }
    if (max_intensity > 0.0)
        for (auto& r : rows) r.intensity /= max_intensity;
    return rows;
}

}  // namespace fluxladder
