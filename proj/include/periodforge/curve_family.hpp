#ifndef PERIODFORGE_CURVE_FAMILY_HPP
#define PERIODFORGE_CURVE_FAMILY_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "core.hpp"

namespace pf
{

enum class CurveType { A2, B2, G2 };

// Weighted-homogeneous grading; wt(F) = 1.
struct Weights {
    mpq_class x, y, g_s, g_l, z, F, disc;
};

struct TypeInfo {
    CurveType type;
    const char *name; // "a2", "b2", "g2"
    int p;            // dihedral order: 3, 4, 6
    int N;            // level ⌊p/2⌋
    int k;            // (AB)^k = 1
    int d;            // coefficient of 𝔷-power index n has weight (1+n)/d
    int n0;           // index whose coefficient has weight 1
    Weights wt;
    double disc_const; // √27, 8, 1/2 (real-chamber constant; documentation only)
    int deg_gs;        // g_s is homogeneous of degree −deg_gs in (ω₀, ω₁)
    int deg_gl;        // g_l is homogeneous of degree −deg_gl
    int deg_red;       // reduced discriminant degree in (ω₀, ω₁), negated
};

const TypeInfo &info(CurveType t);
const std::array<CurveType, 3> &all_types();
std::string type_name(CurveType t);
// Accepts "a2", "A2", "b2", ... ; throws std::invalid_argument otherwise.
CurveType parse_type(const std::string &s);

struct CurvePoint {
    cplx x{};
    cplx y{};
};

cplx evaluate_F(CurveType t, CurvePoint pt, ModuliPoint g);
// (∂F/∂x, ∂F/∂y)
std::pair<cplx, cplx> grad_F(CurveType t, CurvePoint pt, ModuliPoint g);

cplx discriminant(CurveType t, ModuliPoint g);
// Square-free part: product of the distinct factors.
cplx reduced_discriminant(CurveType t, ModuliPoint g);

struct DiscFactor {
    std::string expr;
    cplx value;
    int multiplicity;
};

// Irreducible factors, (+)-factor first. A₂ is returned unfactored.
std::vector<DiscFactor> discriminant_factors(CurveType t, ModuliPoint g);

CurvePoint sigma_action(CurveType t, CurvePoint pt);

// (x, y, g) ↦ (s^wt(x) x, s^wt(y) y, s^wt(g) g), principal branches.
// Exact only for s off the closed negative real axis.
std::pair<CurvePoint, ModuliPoint> scale_action(CurveType t, cplx s, CurvePoint pt, ModuliPoint g);

} // namespace pf

#endif
