#include <doctest.h>

#include <random>

#include <periodforge/elliptic_kernel.hpp>

#include "oracles.hpp"

using namespace pf;

namespace
{

std::vector<Frame> frames(std::uint64_t seed, int n)
{
    std::vector<Frame> v;
    for (const auto &[a, b] : oracle::frames(seed, n)) {
        v.push_back({a, b});
    }
    return v;
}

cplx random_z(std::mt19937_64 &rng, const Frame &w)
{
    std::uniform_real_distribution<double> u(0.05, 0.95);
    return u(rng) * w.w0 + u(rng) * w.w1;
}

} // namespace

TEST_CASE("zeta is odd")
{
    const Frame w{1.0, I};
    const cplx z{0.3, 0.1};
    CHECK(std::abs(wzeta(-z, w) + wzeta(z, w)) < 1e-12);
    CHECK(std::abs(wp(-z, w) - wp(z, w)) < 1e-12);
    CHECK(std::abs(wp_prime(-z, w) + wp_prime(z, w)) < 1e-11);
}

TEST_CASE("cusp height values")
{
    const Frame w{1.0, cplx(0.0, 10.0)};
    CHECK(std::abs(wp(0.5, w) - 2 * pi * pi / 3) < 1e-6);
    CHECK(std::abs(wp(1.0 / 3, w) - pi * pi) < 1e-6);
    for (double r : {0.1, 0.25, 0.5}) {
        CHECK(std::abs(wp(r, w) - oracle::CuspLimit::wp_E(r)) < 1e-6);
        CHECK(std::abs(wzeta(r, w) - oracle::CuspLimit::zeta_E(r)) < 1e-6);
    }
}

TEST_CASE("brute-force lattice sum oracle")
{
    // ℘ = z⁻² + Σ'[(z+ω)⁻² − ω⁻²]; the third derivative against Σ(z+ω)⁻⁵ converges absolutely
    const Frame w{1.0, cplx(0.1, 1.2)};
    const cplx z{0.37, 0.21};
    const cplx brute = oracle::brute_G(5, z, w.w0, w.w1, 400);
    const cplx lib = lattice_sum(5, z, w);
    CHECK(std::abs(lib - brute) < 1e-6 * std::abs(brute));
    // ℘ itself: direct sum with Richardson extrapolation in the cut-off
    auto wp_sum = [&](int R) {
        cplx s = 1.0 / (z * z);
        for (int j = -R; j <= R; ++j) {
            for (int k = -R; k <= R; ++k) {
                if (j == 0 && k == 0) {
                    continue;
                }
                const cplx om = static_cast<double>(j) * w.w0 + static_cast<double>(k) * w.w1;
                s += 1.0 / ((z + om) * (z + om)) - 1.0 / (om * om);
            }
        }
        return s;
    };
    const cplx s1 = wp_sum(200), s2 = wp_sum(400);
    const cplx extrap = (4.0 * s2 - s1) / 3.0;
    CHECK(std::abs(wp(z, w) - extrap) < 1e-5);
}

TEST_CASE("row-sum oracle")
{
    std::mt19937_64 rng(1);
    for (const auto &w : frames(2, 10)) {
        const cplx z = random_z(rng, w);
        CHECK(oracle::rel(wp(z, w), oracle::wp(z, w.w0, w.w1)) < 1e-10);
        CHECK(oracle::rel(wzeta(z, w), oracle::zeta(z, w.w0, w.w1)) < 1e-10);
        CHECK(oracle::rel(lattice_sum(4, z, w), oracle::G(4, z, w.w0, w.w1)) < 1e-10);
        CHECK(oracle::rel(classical_eisenstein(6, w), oracle::G(6, 0.0, w.w0, w.w1)) < 1e-10);
        CHECK(std::abs(classical_eisenstein(5, w)) < 1e-12);
    }
}

TEST_CASE("derivatives")
{
    std::mt19937_64 rng(3);
    const double h = 1e-4;
    for (const auto &w : frames(4, 10)) {
        const cplx z = random_z(rng, w);
        const double s = lattice_distance(z, w);
        const cplx d = s * h;
        auto fd = [&](auto f) { return (-f(z + 2.0 * d) + 8.0 * f(z + d) - 8.0 * f(z - d) + f(z - 2.0 * d)) / (12.0 * d); };
        const cplx dwp = fd([&](cplx u) { return wp(u, w); });
        const cplx dz = fd([&](cplx u) { return wzeta(u, w); });
        CHECK(oracle::rel(wp_prime(z, w), dwp) < 1e-8 * std::max(1.0, std::abs(wp_prime(z, w))));
        CHECK(oracle::rel(-wp(z, w), dz) < 1e-8 * std::max(1.0, std::abs(wp(z, w))));
        CHECK(oracle::rel(wp_derivative(1, z, w), wp_prime(z, w)) < 1e-10);
        CHECK(oracle::rel(wp_derivative(0, z, w), wp(z, w)) < 1e-12);
        // ℘'' = 6℘² − g₂/2 with g₂ = 60 G₄
        const cplx p = wp(z, w);
        CHECK(oracle::rel(wp_derivative(2, z, w), 6.0 * p * p - 30.0 * classical_eisenstein(4, w)) < 1e-9);
    }
}

TEST_CASE("periodicity and Legendre relation")
{
    std::mt19937_64 rng(6);
    for (const auto &w : frames(7, 10)) {
        const cplx z = random_z(rng, w);
        const auto [e0, e1] = quasi_periods(w);
        CHECK(oracle::rel(wp(z + w.w0, w), wp(z, w)) < 1e-10);
        CHECK(oracle::rel(wp(z + w.w1, w), wp(z, w)) < 1e-10);
        CHECK(oracle::rel(wp_prime(z - w.w1, w), wp_prime(z, w)) < 1e-9);
        CHECK(std::abs(wzeta(z + w.w0, w) - wzeta(z, w) - e0) < 1e-10 * std::max(1.0, std::abs(e0)));
        CHECK(std::abs(wzeta(z + w.w1, w) - wzeta(z, w) - e1) < 1e-10 * std::max(1.0, std::abs(e1)));
        CHECK(std::abs(e0 * w.w1 - e1 * w.w0 - 2.0 * pi * I) < 1e-10);
    }
}

TEST_CASE("homogeneity")
{
    std::mt19937_64 rng(8);
    for (const auto &w : frames(9, 8)) {
        const cplx z = random_z(rng, w);
        for (double s : {0.5, 3.0}) {
            const Frame sw{s * w.w0, s * w.w1};
            CHECK(oracle::rel(wp(s * z, sw), wp(z, w) / (s * s)) < 1e-11);
            CHECK(oracle::rel(wzeta(s * z, sw), wzeta(z, w) / s) < 1e-11);
        }
    }
}

TEST_CASE("reduction keeps the lattice")
{
    const Frame w{cplx(1.0, 0.2), cplx(3.7, 1.45)};
    const auto r = reduce_frame(w);
    const cplx t = r.frame.tau();
    CHECK(std::abs(t.real()) <= 0.5 + 1e-12);
    CHECK(std::abs(t) >= 1.0 - 1e-12);
    CHECK(r.m.det() == 1);
    const Frame back = act(r.m, w);
    CHECK(std::abs(back.w0 - r.frame.w0) + std::abs(back.w1 - r.frame.w1) < 1e-12);
    CHECK(oracle::rel(wp(0.3, w), wp(0.3, r.frame)) < 1e-10);
}

TEST_CASE("errors")
{
    const Frame w{1.0, I};
    CHECK_THROWS_AS(wp(0.0, w), PoleError);
    CHECK_THROWS_AS(wzeta(cplx(1.0, 1.0), w), PoleError);
    CHECK_THROWS_AS(wp_prime(I, w), PoleError);
    CHECK_THROWS_AS(wp(0.3, Frame{1.0, -I}), DegenerateFrameError);
    CHECK_THROWS_AS(dedekind_eta(cplx(0.1, -1.0)), std::domain_error);
}

TEST_CASE("eta transformation laws")
{
    const cplx t1{0.2, 0.9};
    CHECK(std::abs(dedekind_eta(t1 + 1.0) - std::polar(1.0, pi / 12) * dedekind_eta(t1)) < 1e-12);
    const cplx t2{0.3, 1.1};
    CHECK(std::abs(dedekind_eta(-1.0 / t2) - std::sqrt(t2 / I) * dedekind_eta(t2)) < 1e-12);
    for (const cplx t : {cplx(0.1, 0.7), cplx(-0.4, 1.5), cplx(0.0, 0.3)}) {
        CHECK(oracle::rel(dedekind_eta(t), oracle::eta(t)) < 1e-12);
    }
}

TEST_CASE("E2 against the zeta normalisation")
{
    // E₂ = (3/π²)·G₂ with G₂ in the row order of the oracle
    const cplx tau{0.15, 0.95};
    CHECK(oracle::rel(e2_series(tau), 3.0 / (pi * pi) * oracle::Lattice(tau).G2()) < 1e-12);
}

TEST_CASE("Fourier coefficients")
{
    const auto one = fourier_coefficients([](cplx) { return cplx(1.0); }, 4);
    CHECK(std::abs(one.coeffs[0] - 1.0) < 1e-14);
    for (int n = 1; n <= 4; ++n) {
        CHECK(std::abs(one.coeffs[n]) < 1e-14);
    }
    // q⁻¹η²⁴ = ∏(1 − qⁿ)²⁴
    const auto d = fourier_coefficients(
        [](cplx t) { return std::pow(dedekind_eta(t), 24) * std::exp(-2.0 * pi * I * t); }, 3);
    const auto exact = oracle::eta_product_coeffs({{1, 24}}, 3);
    for (int n = 0; n <= 3; ++n) {
        CHECK(std::abs(d.coeffs[n] - static_cast<double>(exact[n])) < 1e-8);
    }
    CHECK(exact[1] == -24);
    CHECK(exact[2] == 252);
    CHECK_THROWS_AS(fourier_coefficients([](cplx t) { return t; }, 3), std::invalid_argument);
}
