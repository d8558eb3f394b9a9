#ifndef PERIODFORGE_INVERSION_HPP
#define PERIODFORGE_INVERSION_HPP

#include <map>
#include <string>
#include <utility>

#include "core.hpp"
#include "curve_family.hpp"

namespace pf
{

struct InversionResult {
    ModuliPoint g;
    // "discriminant", "energy_residual" (max over fixed sample points), and for G₂
    // "gs_square_check" = |g_s² − ⅓℘(⅓ω₀)| / |⅓℘(⅓ω₀)|.
    std::map<std::string, double> diagnostics;
    bool near_discriminant = false; // |Δ(g)| within 1e−12 of zero relative to its scale
    bool valid = true;
};

// The inverse period map E(ω₀, ω₁) = (g_s, g_l) through the closed forms in shifted
// Eisenstein series. Throws DegenerateFrameError for bad frames and InconsistencyError when
// the G₂ cross-check g_s² = ⅓℘(⅓ω₀) fails at 1e−9.
InversionResult invert(CurveType t, const Frame &w);

// Same map without diagnostics or cross-checks (hot path for solvers).
ModuliPoint invert_g(CurveType t, const Frame &w);

// Meromorphic parametrisations x(z), y(z) of the curve E(w) by partial fractions in ζ and ℘.
// Throw PoleError within `tol`·|ω₀| of a pole of the requested function.
cplx x_of_z(CurveType t, cplx z, const Frame &w, double tol = 1e-10);
cplx y_of_z(CurveType t, cplx z, const Frame &w, double tol = 1e-10);

// Distance from z to the nearest pole of x or y.
double pole_distance(CurveType t, cplx z, const Frame &w);

// (dx/dz − ∂F/∂y, dy/dz + ∂F/∂x) at g = E(w), derivatives by once-Richardson-extrapolated central
// differences with step 1e−5·pole_distance.
std::pair<cplx, cplx> hamilton_residual(CurveType t, cplx z, const Frame &w);

// F(x(z), y(z), E(w)).
cplx energy_residual(CurveType t, cplx z, const Frame &w);

// Modular generators: {e4, e6} (A₂), {alpha2, beta4} (B₂), {alpha1, beta3} (G₂).
std::map<std::string, cplx> modular_generators(CurveType t, const Frame &w);

} // namespace pf

#endif
