#ifndef PERIODFORGE_ELLIPTIC_KERNEL_HPP
#define PERIODFORGE_ELLIPTIC_KERNEL_HPP

#include <functional>
#include <utility>
#include <vector>

#include "core.hpp"
#include "modular_group.hpp"

namespace pf
{

// Same lattice, basis moved into the standard fundamental domain:
// frame = act(m, original), |Re τ| ≤ 1/2, |τ| ≥ 1.
struct ReducedFrame {
    Frame frame;
    Mat2Z m;
};

ReducedFrame reduce_frame(const Frame &w);

// Weierstrass functions of the lattice ℤω₀ + ℤω₁. Throw PoleError on the lattice
// (wp, wp_prime, wzeta) and DegenerateFrameError for Im τ ≤ 0.
cplx wp(cplx z, const Frame &w);
cplx wp_prime(cplx z, const Frame &w);
cplx wzeta(cplx z, const Frame &w);

// j-th derivative of ℘ (j = 0 is ℘ itself).
cplx wp_derivative(int j, cplx z, const Frame &w);

// Σ_{ω∈Ω} (z+ω)^{−m} for m ≥ 3 and z ∉ Ω.
cplx lattice_sum(int m, cplx z, const Frame &w);

// Σ'_{ω∈Ω} ω^{−m} for m ≥ 3 (zero for odd m).
cplx classical_eisenstein(int m, const Frame &w);

// (η₀, η₁) = (2ζ(ω₀/2), 2ζ(ω₁/2)); η₀ω₁ − η₁ω₀ = 2πi.
std::pair<cplx, cplx> quasi_periods(const Frame &w);

// Euclidean distance from z to the nearest lattice point.
double lattice_distance(cplx z, const Frame &w);

// Dedekind η(τ) = q^{1/24} ∏(1 − qⁿ), q = e^{2πiτ}. Throws std::domain_error for Im τ ≤ 0.
cplx dedekind_eta(cplx tau);

// E₂(τ) = 1 − 24 Σ σ₁(n) qⁿ (quasi-modular; ζ-normalisation of the lattice (1, τ)).
cplx e2_series(cplx tau);

// Truncated Fourier series Σ cₙ q^{n + offset}.
struct QSeries {
    std::vector<cplx> coeffs;
    long offset_num = 0;
    long offset_den = 1;

    int order() const
    {
        return static_cast<int>(coeffs.size());
    }
};

// Coefficients c₀..c_{n_max} of a 1-periodic f(τ) = Σ cₙ qⁿ, from equally spaced samples on
// Im τ = height and a DFT. The error in cₙ grows like e^{2πn·height}·(sample error), so low
// heights are preferred. Throws std::invalid_argument if f(τ+1) ≠ f(τ) within tol.
QSeries fourier_coefficients(const std::function<cplx(cplx)> &f, int n_max, double height = 0.15,
                             int samples = 0, double tol = 1e-8);

} // namespace pf

#endif
