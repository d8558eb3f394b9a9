#ifndef PERIODFORGE_EISENSTEIN_HPP
#define PERIODFORGE_EISENSTEIN_HPP

#include <functional>
#include <string>

#include "core.hpp"
#include "curve_family.hpp"

namespace pf
{

// Torsion shift a = r₀ω₀ + r₁ω₁ with rᵢ ∈ (1/6)ℤ, stored reduced mod 1 in sixths.
struct ShiftPoint {
    int s0 = 0;
    int s1 = 0;

    // r₀ = n0/d0, r₁ = n1/d1 with denominators dividing 6.
    static ShiftPoint from(int n0, int d0, int n1 = 0, int d1 = 1);
    static ShiftPoint zero()
    {
        return {};
    }
    bool is_zero() const
    {
        return s0 == 0 && s1 == 0;
    }
    ShiftPoint operator-() const;
    cplx value(const Frame &w) const;
    std::string str() const;
    friend bool operator==(const ShiftPoint &, const ShiftPoint &) = default;
};

using Evaluator = std::function<cplx(const Frame &)>;

// G_m(a) = Σ_ω (ω+a)^{−m} (a ≠ 0) or Σ'_ω ω^{−m} (a = 0), evaluated as ℘^{(m−2)}(−a)/(m−1)!
// or by the classical q-expansion. Throws std::invalid_argument for m ≤ 2.
cplx eisenstein_G(int m, ShiftPoint a, const Frame &w);

enum class Exceptional { p_half, p_third, zeta_combo };

// ℘(½ω₀) (B₂), ℘(⅓ω₀) (G₂), ζ(⅓ω₀) − ⅔ζ(½ω₀) (G₂).
Evaluator exceptional_series(CurveType t, Exceptional name);
Exceptional parse_exceptional(const std::string &name);

// Laurent coefficient A_n (x) or B_n (y) at z = 0 as a function on frames.
// Index ranges: A₂ n ≥ 1; B₂, G₂ n ≥ 0. Throws std::out_of_range otherwise.
Evaluator series_coefficient(CurveType t, char which, int n);

// Power of z carrying A_n (which = 'A') or B_n ('B').
int coefficient_power(CurveType t, char which, int n);

enum class Cusp { E, S };

// Frame (cτ+d, aτ+b) at τ = i·height for γ = E = [[1,0],[0,1]] or S = [[0,−1],[1,0]].
Frame cusp_frame(Cusp gamma, double height = 10.0);

// (s|_m γ)(i·height) for s(τ) = f(1, τ), i.e. (cτ+d)^{−m} f(1, γτ).
cplx slash_value(const Evaluator &f, int weight, Cusp gamma, double height = 10.0);

} // namespace pf

#endif
