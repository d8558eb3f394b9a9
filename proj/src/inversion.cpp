#include "periodforge/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "periodforge/eisenstein.hpp"
#include "periodforge/elliptic_kernel.hpp"

namespace pf
{

namespace
{

const double sqrt3 = std::sqrt(3.0);

// Pole positions of x (and additionally y) as fractions of ω₀.
std::vector<double> x_poles(CurveType t)
{
    switch (t) {
        case CurveType::A2:
            return {0.0};
        case CurveType::B2:
            return {0.0, 0.5};
        case CurveType::G2:
            return {0.0, 1.0 / 3.0};
    }
    return {};
}

std::vector<double> y_poles(CurveType t)
{
    if (t == CurveType::G2) {
        return {0.0, 1.0 / 3.0, 2.0 / 3.0};
    }
    return x_poles(t);
}

void check_poles(const std::vector<double> &poles, cplx z, const Frame &w, double tol, const char *fn)
{
    for (double r : poles) {
        if (lattice_distance(z - r * w.w0, w) <= tol * std::abs(w.w0)) {
            throw PoleError(std::string(fn) + ": evaluation point at a pole");
        }
    }
}

// Constants of the G₂ partial fractions.
struct G2Constants {
    cplx A, B;
};

G2Constants g2_constants(const Frame &w)
{
    const cplx z1 = wzeta(w.w0 / 3.0, w), z2 = wzeta(2.0 * w.w0 / 3.0, w);
    return {-(z1 + z2) / 6.0, (z1 + z2) / 2.0};
}

double disc_scale(CurveType t, ModuliPoint g)
{
    const auto &ti = info(t);
    const double len = std::max(std::pow(std::abs(g.g_s), 1.0 / ti.deg_gs), std::pow(std::abs(g.g_l), 1.0 / ti.deg_gl));
    const double deg = ti.deg_gl * mpq_class(ti.wt.disc / ti.wt.g_l).get_d();
    return std::pow(len, deg);
}

} // namespace

ModuliPoint invert_g(CurveType t, const Frame &w)
{
    require_frame(w);
    switch (t) {
        case CurveType::A2:
            return {15.0 / 4.0 * eisenstein_G(4, ShiftPoint::zero(), w), 35.0 / 16.0 * eisenstein_G(6, ShiftPoint::zero(), w)};
        case CurveType::B2: {
            const cplx p = wp(w.w0 / 2.0, w);
            const cplx g4_0 = eisenstein_G(4, ShiftPoint::zero(), w);
            const cplx g4_h = eisenstein_G(4, ShiftPoint::from(1, 2), w);
            return {1.5 * p, 5.0 / 32.0 * p * p + 5.0 / 8.0 * (g4_0 - g4_h)};
        }
        case CurveType::G2: {
            const cplx gs = wzeta(w.w0 / 3.0, w) - 2.0 / 3.0 * wzeta(w.w0 / 2.0, w);
            return {gs, 2.0 * gs * gs * gs - eisenstein_G(3, ShiftPoint::from(1, 3), w)};
        }
    }
    return {};
}

InversionResult invert(CurveType t, const Frame &w)
{
    InversionResult r;
    r.g = invert_g(t, w);
    if (t == CurveType::G2) {
        const cplx cross = wp(w.w0 / 3.0, w) / 3.0;
        const double err = std::abs(r.g.g_s * r.g.g_s - cross) / std::max(std::abs(cross), 1e-300);
        r.diagnostics["gs_square_check"] = err;
        if (err > 1e-9) {
            throw InconsistencyError("invert: g_s^2 = wp(w0/3)/3 cross-check failed (relative error " +
                                     std::to_string(err) + ")");
        }
    }
    const double d = std::abs(discriminant(t, r.g));
    r.diagnostics["discriminant"] = d;
    r.near_discriminant = d <= 1e-12 * disc_scale(t, r.g);

    // Energy residual at fixed interior points, relative to the size of the terms of F.
    double worst = 0.0;
    for (const auto &[a, b] : {std::pair{0.2371, 0.3113}, std::pair{0.6173, 0.1429}, std::pair{0.4142, 0.7321}}) {
        const cplx z = a * w.w0 + b * w.w1;
        const cplx x = x_of_z(t, z, w), y = y_of_z(t, z, w);
        const double scale = std::abs(y * y) + std::pow(std::abs(x), info(t).p == 4 ? 4 : 3) + 1.0;
        worst = std::max(worst, std::abs(evaluate_F(t, {x, y}, r.g)) / scale);
    }
    r.diagnostics["energy_residual"] = worst;
    r.valid = !r.near_discriminant && worst < 1e-9;
    return r;
}

cplx x_of_z(CurveType t, cplx z, const Frame &w, double tol)
{
    require_frame(w);
    check_poles(x_poles(t), z, w, tol, "x_of_z");
    switch (t) {
        case CurveType::A2:
            return wp(z, w) / 4.0;
        case CurveType::B2:
            return -0.5 * wzeta(w.w0 / 2.0, w) + 0.5 * wzeta(z, w) - 0.5 * wzeta(z - w.w0 / 2.0, w);
        case CurveType::G2:
            return g2_constants(w).A + 0.5 * wzeta(z, w) - 0.5 * wzeta(z - w.w0 / 3.0, w);
    }
    return {};
}

cplx y_of_z(CurveType t, cplx z, const Frame &w, double tol)
{
    require_frame(w);
    check_poles(y_poles(t), z, w, tol, "y_of_z");
    switch (t) {
        case CurveType::A2:
            return wp_prime(z, w) / 8.0;
        case CurveType::B2:
            return -0.25 * wp(z, w) + 0.25 * wp(z - w.w0 / 2.0, w);
        case CurveType::G2:
            return g2_constants(w).B - 0.5 * wzeta(z, w) - 0.5 * wzeta(z - w.w0 / 3.0, w) +
                   wzeta(z - 2.0 * w.w0 / 3.0, w);
    }
    return {};
}

double pole_distance(CurveType t, cplx z, const Frame &w)
{
    double d = INFINITY;
    for (double r : y_poles(t)) {
        d = std::min(d, lattice_distance(z - r * w.w0, w));
    }
    return d;
}

std::pair<cplx, cplx> hamilton_residual(CurveType t, cplx z, const Frame &w)
{
    const ModuliPoint g = invert_g(t, w);
    const double d = pole_distance(t, z, w);
    if (d <= 1e-10 * std::abs(w.w0)) {
        throw PoleError("hamilton_residual: evaluation point at a pole");
    }
    const double h = 1e-5 * d;
    auto central = [&](auto f, double step) { return (f(z + step) - f(z - step)) / (2.0 * step); };
    auto richardson = [&](auto f) { return (4.0 * central(f, h / 2.0) - central(f, h)) / 3.0; };
    const cplx dx = richardson([&](cplx u) { return x_of_z(t, u, w); });
    const cplx dy = richardson([&](cplx u) { return y_of_z(t, u, w); });
    const auto [Fx, Fy] = grad_F(t, {x_of_z(t, z, w), y_of_z(t, z, w)}, g);
    return {dx - Fy, dy + Fx};
}

cplx energy_residual(CurveType t, cplx z, const Frame &w)
{
    return evaluate_F(t, {x_of_z(t, z, w), y_of_z(t, z, w)}, invert_g(t, w));
}

std::map<std::string, cplx> modular_generators(CurveType t, const Frame &w)
{
    const ModuliPoint g = invert_g(t, w);
    const cplx w0 = w.w0;
    switch (t) {
        case CurveType::A2:
            return {{"e4", 12.0 * g.g_s * std::pow(w0, 4) / std::pow(pi, 4)},
                    {"e6", 216.0 * g.g_l * std::pow(w0, 6) / std::pow(pi, 6)}};
        case CurveType::B2:
            return {{"alpha2", g.g_s * w0 * w0 / (pi * pi)},
                    {"beta4", (g.g_l + g.g_s * g.g_s / 8.0) * std::pow(w0, 4) / (16.0 * std::pow(pi, 4))}};
        case CurveType::G2:
            return {{"alpha1", sqrt3 * g.g_s * w0 / pi},
                    {"beta3", -1.5 * sqrt3 * g.g_l * std::pow(w0, 3) / std::pow(pi, 3)}};
    }
    return {};
}

} // namespace pf
