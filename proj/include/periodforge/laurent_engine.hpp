#ifndef PERIODFORGE_LAURENT_ENGINE_HPP
#define PERIODFORGE_LAURENT_ENGINE_HPP

#include <map>
#include <string>
#include <vector>

#include "graded_poly.hpp"

namespace pf
{

// Truncated Laurent series in 𝔷 with GradedPoly coefficients; absent powers are zero.
using FormalSeries = std::map<int, GradedPoly>;

struct FormalSolution {
    CurveType type = CurveType::A2;
    int infinity = 1; // 1..N
    int order = 0;    // levels solved past the leading one
    FormalSeries x;
    FormalSeries y;
    int x_lead = 0; // lowest 𝔷-power slot of x (its coefficient may vanish, G₂ ∞₃)
    int y_lead = 0;

    int x_max() const
    {
        return x_lead + order;
    }
    int y_max() const
    {
        return y_lead + order;
    }
    GradedPoly x_coeff(int power) const;
    GradedPoly y_coeff(int power) const;
    // Σ coeff(g)·𝔷^k over the stored terms.
    cplx eval_x(ModuliPoint g, cplx zz) const;
    cplx eval_y(ModuliPoint g, cplx zz) const;
};

// Leading coefficients (A_{−a}, B_{−b}) selecting the branch ∞_i.
struct InitialDirection {
    int x_power;
    mpq_class x_coeff;
    int y_power;
    mpq_class y_coeff;
};

InitialDirection initial_direction(CurveType t, int infinity);

// Formal solution of dx/d𝔷 = ∂F/∂y, dy/d𝔷 = −∂F/∂x, F = 0 through `order` levels past the pole.
// Throws std::out_of_range for a bad infinity index and InconsistencyError when a level
// cannot be solved uniquely.
FormalSolution solve_formal(CurveType t, int infinity, int order = 16);

// Determinant of the linear system for (A_n, B_n) at index n.
long recurrence_determinant(CurveType t, int n);

struct Residuals {
    FormalSeries hamilton_x; // dx/d𝔷 − ∂F/∂y
    FormalSeries hamilton_y; // dy/d𝔷 + ∂F/∂x
    FormalSeries energy;     // F(x, y, g)
    int max_power_x = 0;     // last power certified in each residual
    int max_power_y = 0;
    int max_power_energy = 0;

    bool all_zero() const;
};

// Residual series restricted to the powers fully determined by the stored coefficients.
Residuals residual_check(const FormalSolution &sol);

// Applies σ to (x, y) coefficientwise.
FormalSolution apply_sigma(const FormalSolution &sol);

// Every stored coefficient is weighted-homogeneous of the weight its power dictates.
bool weights_consistent(const FormalSolution &sol);

// CSV rows "series,power,monomial,numerator,denominator" preceded by a header.
std::string to_csv(const FormalSolution &sol);
std::string to_json(const FormalSolution &sol);

} // namespace pf

#endif
