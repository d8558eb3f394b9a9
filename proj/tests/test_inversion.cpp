#include <doctest.h>

#include <random>

#include <periodforge/eisenstein.hpp>
#include <periodforge/inversion.hpp>
#include <periodforge/modular_group.hpp>

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

double rel_g(ModuliPoint a, ModuliPoint b)
{
    return std::max(oracle::rel(a.g_s, b.g_s), oracle::rel(a.g_l, b.g_l));
}

} // namespace

TEST_CASE("A2 against the classical invariants")
{
    for (const auto &w : frames(31, 10)) {
        const ModuliPoint g = invert_g(CurveType::A2, w);
        const cplx G4 = oracle::G(4, 0.0, w.w0, w.w1), G6 = oracle::G(6, 0.0, w.w0, w.w1);
        // g₂ = 60 G₄ = 16 g_s, g₃ = 140 G₆ = 64 g_l
        CHECK(oracle::rel(16.0 * g.g_s, 60.0 * G4) < 1e-10 * std::max(1.0, std::abs(60.0 * G4)));
        CHECK(oracle::rel(64.0 * g.g_l, 140.0 * G6) < 1e-10 * std::max(1.0, std::abs(140.0 * G6)));
        const cplx z = 0.31 * w.w0 + 0.47 * w.w1;
        CHECK(oracle::rel(x_of_z(CurveType::A2, z, w), oracle::wp(z, w.w0, w.w1) / 4.0) < 1e-10);
    }
}

TEST_CASE("B2 and G2 partial fractions against the row-sum oracle")
{
    const Frame w{cplx(0.7, 0.4), cplx(-0.5, 1.2)};
    const cplx z{0.23, 0.17};
    auto zt = [&](cplx u) { return oracle::zeta(u, w.w0, w.w1); };
    auto pt = [&](cplx u) { return oracle::wp(u, w.w0, w.w1); };
    const cplx h = w.w0 / 2.0;
    CHECK(oracle::rel(x_of_z(CurveType::B2, z, w), -0.5 * zt(h) + 0.5 * zt(z) - 0.5 * zt(z - h)) < 1e-10);
    CHECK(oracle::rel(y_of_z(CurveType::B2, z, w), -0.25 * pt(z) + 0.25 * pt(z - h)) < 1e-10);
    const cplx t1 = w.w0 / 3.0, t2 = 2.0 * w.w0 / 3.0;
    const cplx A = -(zt(t1) + zt(t2)) / 6.0, B = (zt(t1) + zt(t2)) / 2.0;
    CHECK(oracle::rel(x_of_z(CurveType::G2, z, w), A + 0.5 * zt(z) - 0.5 * zt(z - t1)) < 1e-10);
    CHECK(oracle::rel(y_of_z(CurveType::G2, z, w), B - 0.5 * zt(z) - 0.5 * zt(z - t1) + zt(z - t2)) < 1e-10);
    // g_s via the ζ combination
    CHECK(oracle::rel(invert_g(CurveType::G2, w).g_s, zt(t1) - 2.0 / 3.0 * zt(h)) < 1e-10);
}

TEST_CASE("the parametrisation solves the curve and the flow")
{
    std::mt19937_64 rng(32);
    for (auto t : all_types()) {
        for (const auto &w : frames(33 + static_cast<int>(t), 10)) {
            const cplx z = random_z(rng, w);
            if (pole_distance(t, z, w) < 0.05 * std::abs(w.w0)) {
                continue;
            }
            const ModuliPoint g = invert_g(t, w);
            const cplx x = x_of_z(t, z, w), y = y_of_z(t, z, w);
            const double scale = std::max({1.0, std::norm(y), std::pow(std::abs(x), 3)});
            CHECK(std::abs(evaluate_F(t, {x, y}, g)) / scale < 1e-10);
            CHECK(std::abs(energy_residual(t, z, w)) / scale < 1e-10);
            const auto [hx, hy] = hamilton_residual(t, z, w);
            const auto [fx, fy] = grad_F(t, {x, y}, g);
            CHECK(std::abs(hx) < 1e-7 * std::max(1.0, std::abs(fy)));
            CHECK(std::abs(hy) < 1e-7 * std::max(1.0, std::abs(fx)));
        }
    }
}

TEST_CASE("invariance and homogeneity")
{
    for (auto t : all_types()) {
        const auto [A, B] = generators(t);
        const int dgs = info(t).deg_gs, dgl = info(t).deg_gl;
        for (const auto &w : frames(40, 10)) {
            const ModuliPoint g = invert_g(t, w);
            for (const auto &M : {A, B, A.inverse(), B.inverse(), A * B * A}) {
                CHECK(rel_g(invert_g(t, act(M, w)), g) < 1e-9);
            }
            const cplx s{1.3, -0.4};
            const ModuliPoint gs = invert_g(t, Frame{s * w.w0, s * w.w1});
            CHECK(rel_g(gs, {std::pow(s, -dgs) * g.g_s, std::pow(s, -dgl) * g.g_l}) < 1e-10);
        }
    }
    // a matrix outside Γ₁(N) generally moves the B₂ point
    const Frame w{1.0, cplx(0.1, 1.1)};
    CHECK(rel_g(invert_g(CurveType::B2, act(Mat2Z{0, -1, 1, 0}, w)), invert_g(CurveType::B2, w)) > 1e-3);
}

TEST_CASE("cusp values")
{
    const double p2 = pi * pi, p3 = p2 * pi, p4 = p2 * p2, p6 = p4 * p2, r3 = std::sqrt(3.0);
    struct Row {
        CurveType t;
        int deg_s, deg_l;
        cplx es, el, ss, sl;
    };
    const std::vector<Row> rows{
        {CurveType::A2, 4, 6, p4 / 12, p6 / 216, p4 / 12, p6 / 216},
        {CurveType::B2, 2, 4, p2, -p4 / 8, -p2 / 2, p4 / 32},
        {CurveType::G2, 1, 3, pi / r3, -2 * p3 / (3 * r3), cplx(0, -pi / 3), cplx(0, 2 * p3 / 27)},
    };
    for (const auto &r : rows) {
        const Evaluator gs = [t = r.t](const Frame &w) { return invert_g(t, w).g_s; };
        const Evaluator gl = [t = r.t](const Frame &w) { return invert_g(t, w).g_l; };
        CHECK(std::abs(slash_value(gs, r.deg_s, Cusp::E, 10.0) - r.es) < 1e-6);
        CHECK(std::abs(slash_value(gl, r.deg_l, Cusp::E, 10.0) - r.el) < 1e-6);
        CHECK(std::abs(slash_value(gs, r.deg_s, Cusp::S, 10.0) - r.ss) < 1e-6);
        CHECK(std::abs(slash_value(gl, r.deg_l, Cusp::S, 10.0) - r.sl) < 1e-6);
    }
    const auto m = modular_generators(CurveType::A2, cusp_frame(Cusp::E));
    CHECK(std::abs(m.at("e4") - 1.0) < 1e-6);
    CHECK(std::abs(m.at("e6") - 1.0) < 1e-6);
    CHECK(modular_generators(CurveType::B2, Frame{1.0, I}).count("beta4") == 1);
}

TEST_CASE("diagnostics and errors")
{
    const Frame w{cplx(0.9, 0.2), cplx(0.1, 1.0)};
    for (auto t : all_types()) {
        const auto r = invert(t, w);
        CHECK(r.valid);
        CHECK_FALSE(r.near_discriminant);
        CHECK(r.diagnostics.at("energy_residual") < 1e-9);
        CHECK(rel_g(r.g, invert_g(t, w)) == 0.0);
        CHECK_THROWS_AS(x_of_z(t, 0.0, w), PoleError);
        CHECK_THROWS_AS(invert(t, Frame{1.0, 2.0}), DegenerateFrameError);
    }
    CHECK(invert(CurveType::G2, w).diagnostics.at("gs_square_check") < 1e-9);
    CHECK_THROWS_AS(y_of_z(CurveType::B2, w.w0 / 2.0, w), PoleError);
    CHECK_THROWS_AS(y_of_z(CurveType::G2, 2.0 * w.w0 / 3.0, w), PoleError);
    CHECK(pole_distance(CurveType::B2, w.w0 / 4.0, w) == doctest::Approx(std::abs(w.w0) / 4.0));
}
