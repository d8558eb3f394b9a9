#ifndef PERIODFORGE_MODULAR_GROUP_HPP
#define PERIODFORGE_MODULAR_GROUP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"
#include "curve_family.hpp"

namespace pf
{

struct Mat2Z {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const
    {
        return a * d - b * c;
    }
    // Inverse of a determinant-one matrix.
    Mat2Z inverse() const
    {
        return {d, -b, -c, a};
    }
    static Mat2Z identity()
    {
        return {};
    }
    friend bool operator==(const Mat2Z &, const Mat2Z &) = default;
};

Mat2Z operator*(const Mat2Z &m, const Mat2Z &n);
std::string to_string(const Mat2Z &m);

enum class Gen { A, Ainv, B, Binv };
using GroupWord = std::vector<Gen>;

std::string to_string(const GroupWord &w);

// A = ρ(ã) = [[1,0],[−N,1]], B = ρ(b̃) = [[1,1],[0,1]] in the ([γ₀],[γ₁]) basis.
std::pair<Mat2Z, Mat2Z> generators(CurveType t);

// c ≡ 0, a ≡ d ≡ 1 (mod N). Throws std::invalid_argument if det m ≠ 1.
bool is_in_gamma1(int N, const Mat2Z &m);
bool is_in_gamma1(CurveType t, const Mat2Z &m);

// ρ(w₁w₂…wₙ) = ρ(w₁)ρ(w₂)…ρ(wₙ).
Mat2Z evaluate_word(CurveType t, const GroupWord &w);

// Alternating word ABAB… (or BABA…) of the given length.
GroupWord alternating_word(int length, bool start_with_a = true);

// ρ(Δ) for the fundamental element: the alternating word of length p.
Mat2Z fundamental_element(CurveType t);

// ϑ extended multiplicatively: ã^{±1}, b̃^{±1} ↦ exp(±πi/k).
cplx character_theta(CurveType t, const GroupWord &w);

GroupWord random_word(std::mt19937_64 &rng, int length);

// Frame action (ω₀', ω₁') = (ω₀, ω₁)·M, i.e. ω₀' = aω₀ + cω₁, ω₁' = bω₀ + dω₁.
// τ' = (b + dτ)/(a + cτ); act(M·N, w) = act(N, act(M, w)).
Frame act(const Mat2Z &m, const Frame &w);

// M ∈ Γ₁(N) with w2 = act(M, w1), or nothing. Throws DegenerateFrameError
// when either frame has |Im τ| < tol.
std::optional<Mat2Z> frame_equivalence(CurveType t, const Frame &w1, const Frame &w2,
                                       double tol = 1e-8);

// Any SL₂(ℤ) matrix relating the two frames (no level condition).
std::optional<Mat2Z> lattice_equivalence(const Frame &w1, const Frame &w2, double tol = 1e-8);

} // namespace pf

#endif
