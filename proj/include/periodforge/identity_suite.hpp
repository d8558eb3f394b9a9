#ifndef PERIODFORGE_IDENTITY_SUITE_HPP
#define PERIODFORGE_IDENTITY_SUITE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "core.hpp"
#include "curve_family.hpp"
#include "eisenstein.hpp"
#include "graded_poly.hpp"

namespace pf
{

struct CheckResult {
    std::string id;
    double max_error = 0.0;
    bool pass = false;
    std::optional<cplx> measured;       // measured constant, when the check pins one
    std::optional<std::string> reference; // tabulated reference value, when it differs from the measured one
    std::string note;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const;
    void add(CheckResult c)
    {
        checks.push_back(std::move(c));
    }
    void append(const Report &other);
};

nlohmann::ordered_json to_json(const Report &r);

// Deterministic frames: |ω₀| ∈ [0.5, 2], arbitrary phase, Re τ ∈ [−½, ½], Im τ ∈ [im_lo, im_hi].
std::vector<Frame> sample_frames(std::uint64_t seed, int count, double im_lo = 0.5, double im_hi = 2.0);

// ∏ η(m τ)^r.
struct EtaFactor {
    int m;
    int r;
};
using EtaProduct = std::vector<EtaFactor>;
cplx eta_product(const EtaProduct &e, cplx tau);

// Exact expansion q^{offset} Σ cₙ qⁿ of an eta product, n = 0..n_max.
struct IntegerQSeries {
    mpq_class offset;
    std::vector<mpz_class> coeffs;
};
IntegerQSeries eta_product_series(const EtaProduct &e, int n_max);

// Named functions of τ (ω₀ = 1): modular generators and discriminant components.
struct NamedForm {
    std::string name;
    std::function<cplx(cplx)> f;
    std::optional<EtaProduct> eta; // closed eta-quotient form, if any
};
const std::vector<NamedForm> &named_forms();
const NamedForm &named_form(const std::string &name); // throws std::invalid_argument

// One row of the cusp tables: (f|_weight γ)(i∞) for f a function of frames.
struct CuspRow {
    std::string group; // "eisenstein" (summands), "flat" (g_s, g_l), "generators"
    CurveType type;
    std::string label;
    int weight;
    Cusp cusp;
    cplx expected;
    std::string expected_text;
    Evaluator f;
    std::optional<std::string> reference; // tabulated reference value when it disagrees with `expected`
};
const std::vector<CuspRow> &cusp_rows();

// Reference Laurent coefficients in closed form (one tabulated 𝔷-power corrected).
struct LaurentReference {
    CurveType type;
    int infinity;
    char series; // 'x' or 'y'
    int power;
    GradedPoly coeff;
};
const std::vector<LaurentReference> &laurent_reference();

// Reference and measured eta-product constants: Δ = c₆ π¹² η²⁴ ω₀⁻¹², Δ^red = c₇ π^{2k} λ^{2k} ω₀^{−2k}.
struct EtaConstants {
    double reference_disc, measured_disc;
    double reference_red, measured_red;
};
EtaConstants eta_constants(CurveType t);

Report verify_component_identities(CurveType t, const std::vector<Frame> &samples, double tol = 1e-8);
Report verify_eta_quotients(const std::vector<Frame> &samples, double tol = 1e-8);
Report verify_discriminant_eta(CurveType t, const std::vector<Frame> &samples, double tol = 1e-8);
Report lambda_character_check(CurveType t, const std::vector<Frame> &samples, double tol = 1e-10);
Report verify_cusp_correspondence(CurveType t, double tol = 1e-6);
Report verify_jacobian(CurveType t, const std::vector<Frame> &samples, double tol = 1e-6);
Report verify_invariance(CurveType t, const std::vector<Frame> &samples, double tol = 1e-9);

// Whole suites as exposed on the command line.
Report suite_monodromy(std::uint64_t seed, int words = 1000);
Report suite_cusps(double height = 10.0, double tol = 1e-6);
Report suite_identities(std::uint64_t seed, double tol = 1e-8);
Report suite_roundtrip(std::uint64_t seed, int frames = 50, double tol = 1e-9);
// Solves each branch to max(order, the order its reference coefficients need).
Report suite_laurent(int order = 12);
Report suite_dynamics(std::uint64_t seed, int samples = 20);

} // namespace pf

#endif
