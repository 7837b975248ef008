#include "fluxladder/bands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fluxladder/errors.hpp"

namespace fluxladder {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double root_unit_tol = 1e-8;  // | |z|-1 | below this is a transmission root

double wrap_to_pi(double q) {
    q = std::remainder(q, 2.0 * pi);
    return q;
}

// Golden-section minimum of f on [a, b].
template <typename F>
double golden_min(F f, double a, double b) {
    constexpr double inv_gr = 0.6180339887498949;
    double c = b - inv_gr * (b - a);
    double d = a + inv_gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_gr * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}
}  // namespace

double band_energy(double q, Branch branch, const BandParams& p) {
    const double c = std::cos(0.5 * p.phi);
    const double s = std::sin(0.5 * p.phi);
    const double sq = std::sin(q);
    const double root = std::sqrt(p.k * p.k + 4.0 * p.g * p.g * sq * sq * s * s);
    const double base = -2.0 * p.g * std::cos(q) * c;
    return branch == Branch::Minus ? base - root : base + root;
}

int minima_count(const BandParams& p, int grid_size) {
    if (grid_size < 512) throw ConfigError("minima_count: grid_size must be >= 512");
    const int m = grid_size;
    const double h = 2.0 * pi / m;
    std::vector<double> f(m);
    for (int i = 0; i < m; ++i) f[static_cast<size_t>(i)] = band_energy(-pi + i * h, Branch::Minus, p);

    auto at = [&](int i) { return f[static_cast<size_t>(((i % m) + m) % m)]; };
    // A minimum is a maximal run of equal values with strictly larger neighbours
    // on both sides (ties straddling a symmetric minimum count once).
    std::vector<double> mins;
    int i = 0;
    while (i < m) {
        int j = i;
        while (j + 1 < i + m && at(j + 1) == at(i)) ++j;
        if (j - i + 1 >= m) return 1;  // flat band; cannot occur for g > 0
        if (at(i - 1) > at(i) && at(j + 1) > at(i)) {
            const double a = -pi + (i - 1) * h;
            const double b = -pi + (j + 1) * h;
            auto fq = [&](double q) { return band_energy(q, Branch::Minus, p); };
            mins.push_back(wrap_to_pi(golden_min(fq, a, b)));
        }
        i = j + 1;
    }
    if (mins.size() < 2) return static_cast<int>(mins.size());
    // Merge refinements that converged to the same point (cyclic distance).
    std::sort(mins.begin(), mins.end());
    int count = 0;
    const double merge_tol = 0.25 * h;
    for (size_t a = 0; a < mins.size(); ++a) {
        const double prev = a == 0 ? mins.back() - 2.0 * pi : mins[a - 1];
        if (std::abs(mins[a] - prev) > merge_tol) ++count;
    }
    return std::max(count, 1);
}

double critical_coupling(double g, double phi) {
    if (!(std::abs(phi) < pi)) throw std::domain_error("critical_coupling: |phi| must be < pi");
    return 2.0 * g * std::tan(0.5 * phi) * std::sin(0.5 * phi);
}

double decay_bound_lambda(const BandParams& p) {
    const double s = std::sin(0.5 * p.phi);
    if (s == 0.0) throw std::domain_error("decay_bound_lambda: undefined at phi = 0");
    const double x = p.k / (2.0 * p.g * std::abs(s));
    return x + std::sqrt(x * x + 1.0);
}

CharacteristicRoots characteristic_roots(double omega, const BandParams& p) {
    const double c = std::cos(0.5 * p.phi);
    const double s = std::sin(0.5 * p.phi);
    const double wg = omega / p.g;
    const double disc = -wg * wg * s * s + (p.k / p.g) * (p.k / p.g) + 4.0 * s * s;
    if (disc < 0.0) throw NumericError("characteristic_roots: energy outside band support");
    const double sq = std::sqrt(disc);

    CharacteristicRoots out;
    out.r_minus = -wg * c - sq;
    out.r_plus = -wg * c + sq;

    auto solve_pair = [](double r) -> std::array<Complex, 2> {
        const double d = r * r - 4.0;
        if (d >= 0.0) {
            // larger-magnitude root first, partner via the product z z' = 1
            const double big = 0.5 * (std::abs(r) + std::sqrt(d)) * (r < 0.0 ? -1.0 : 1.0);
            const double small = big == 0.0 ? 0.0 : 1.0 / big;
            // keep the paper's ordering: first root carries the minus sign
            return {Complex(std::min(big, small), 0.0), Complex(std::max(big, small), 0.0)};
        }
        const double im = 0.5 * std::sqrt(-d);
        return {Complex(0.5 * r, -im), Complex(0.5 * r, im)};
    };

    const auto z12 = solve_pair(out.r_minus);
    const auto z34 = solve_pair(out.r_plus);
    out.z = {z12[0], z12[1], z34[0], z34[1]};

    for (size_t j = 0; j < 4; ++j) {
        const Complex z = out.z[j];
        if (std::abs(std::abs(z) - 1.0) < root_unit_tol)
            out.kind[j] = RootKind::Transmission;
        else
            out.kind[j] = z.real() > 0.0 ? RootKind::Decay : RootKind::StaggeredDecay;
    }
    out.degenerate_pair =
        std::abs(out.z[0] - out.z[1]) < 1e-6 || std::abs(out.z[2] - out.z[3]) < 1e-6;
    return out;
}

}  // namespace fluxladder
