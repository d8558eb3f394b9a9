#ifndef PERIODFORGE_PERIODS_HPP
#define PERIODFORGE_PERIODS_HPP

#include <array>
#include <string>

#include "core.hpp"
#include "curve_family.hpp"
#include "modular_group.hpp"

namespace pf
{

enum class PeriodMethod { newton, agm };

struct PeriodResult {
    Frame frame;
    PeriodMethod method = PeriodMethod::newton;
    double residual = 0.0; // max componentwise relative |E(frame) − g|
    bool reduced = true;   // frame moved into the canonical box (else left as found)
    Mat2Z reduction = Mat2Z::identity(); // frame = act(reduction, raw solution)
    int iterations = 0;
    int continuation_steps = 0;
};

struct NewtonOptions {
    int max_iterations = 60;
    int max_steps = 32;     // continuation steps from the anchor
    double tol = 1e-12;     // convergence target (relative residual)
    double accept = 1e-10;  // largest residual returned without error
};

// Periods (ω₀, ω₁) with E(ω₀, ω₁) = g, by damped Newton from `seed`, falling back to
// continuation from the anchor frame (1, e^{iπ/3}). Throws DiscriminantError on Δ(g) ≈ 0 and
// ConvergenceError (message carries the residual trace) when no path converges.
PeriodResult periods_newton(CurveType t, ModuliPoint g, const Frame &seed = {1.0, cplx(0.0, 1.0)},
                            const NewtonOptions &opt = {});

// A₂ periods of dx/(2y) on y² = 4x³ − g_s x − g_l from the cubic's roots by complex AGM.
PeriodResult periods_agm_a2(ModuliPoint g);

// Greedy Γ₁(N) reduction: B-translations to |Re τ| ≤ ½ and A^{±1} moves while they raise Im τ,
// at most `max_moves` A-moves. Returns the reduced frame and matrix; flag false if cut off.
PeriodResult reduce_gamma1(CurveType t, const Frame &w, int max_moves = 16);

// Max componentwise relative difference between E(w) and g under the weighted scale of g.
double moduli_residual(CurveType t, const Frame &w, ModuliPoint g);

// ∂(g_s, g_l)/∂(ω₀, ω₁) by central differences, row-major.
std::array<cplx, 4> jacobian_E(CurveType t, const Frame &w);
// det ∂E/∂ω / Δ^red(E(w)).
cplx jacobian_ratio(CurveType t, const Frame &w);
// Measured value of jacobian_ratio (constant on the period domain).
cplx jacobian_constant(CurveType t);

std::string method_name(PeriodMethod m);

} // namespace pf

#endif
