#include "periodforge/periods.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "periodforge/elliptic_kernel.hpp"
#include "periodforge/inversion.hpp"

namespace pf
{

namespace
{

// Length scale of g: |g_s|^{1/deg_s} ∨ |g_l|^{1/deg_l} (an inverse period length).
double moduli_size(CurveType t, ModuliPoint g)
{
    const auto &ti = info(t);
    return std::max(std::pow(std::abs(g.g_s), 1.0 / ti.deg_gs), std::pow(std::abs(g.g_l), 1.0 / ti.deg_gl));
}

std::array<cplx, 2> scaled_residual(CurveType t, const Frame &w, ModuliPoint g, double size)
{
    const auto &ti = info(t);
    const ModuliPoint e = invert_g(t, w);
    return {(e.g_s - g.g_s) / std::pow(size, ti.deg_gs), (e.g_l - g.g_l) / std::pow(size, ti.deg_gl)};
}

double norm2(const std::array<cplx, 2> &r)
{
    return std::max(std::abs(r[0]), std::abs(r[1]));
}

bool frame_ok(const Frame &w)
{
    return std::isfinite(w.w0.real()) && std::isfinite(w.w1.real()) && std::abs(w.w0) > 0 && w.tau().imag() > 1e-3;
}

struct NewtonOutcome {
    Frame frame;
    double residual;
    int iterations;
    bool converged;
};

NewtonOutcome newton(CurveType t, ModuliPoint g, Frame w, const NewtonOptions &opt, std::ostringstream *trace)
{
    const double size = moduli_size(t, g);
    std::array<cplx, 2> r;
    try {
        r = scaled_residual(t, w, g, size);
    } catch (const Error &) {
        return {w, INFINITY, 0, false};
    }
    double res = norm2(r);
    int it = 0;
    for (; it < opt.max_iterations && res > opt.tol; ++it) {
        const auto J = jacobian_E(t, w);
        const auto &ti = info(t);
        const double s0 = std::pow(size, ti.deg_gs), s1 = std::pow(size, ti.deg_gl);
        const cplx a = J[0] / s0, b = J[1] / s0, c = J[2] / s1, d = J[3] / s1;
        const cplx det = a * d - b * c;
        if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) {
            break;
        }
        const cplx d0 = -(d * r[0] - b * r[1]) / det;
        const cplx d1 = -(-c * r[0] + a * r[1]) / det;
        double step = 1.0;
        bool improved = false;
        for (int k = 0; k < 30; ++k, step *= 0.5) {
            const Frame trial{w.w0 + step * d0, w.w1 + step * d1};
            if (!frame_ok(trial)) {
                continue;
            }
            try {
                const auto rt = scaled_residual(t, trial, g, size);
                if (norm2(rt) < res) {
                    w = trial;
                    r = rt;
                    res = norm2(rt);
                    improved = true;
                    break;
                }
            } catch (const Error &) {
            }
        }
        if (trace) {
            *trace << ' ' << res;
        }
        if (!improved) {
            break;
        }
    }
    return {w, res, it, res <= opt.tol};
}

cplx complex_agm(cplx a, cplx b)
{
    for (int i = 0; i < 200; ++i) {
        if (std::abs(a - b) <= 1e-16 * std::abs(a)) {
            break;
        }
        const cplx an = 0.5 * (a + b);
        cplx bn = std::sqrt(a * b);
        if (std::abs(an - bn) > std::abs(an + bn)) {
            bn = -bn;
        }
        a = an;
        b = bn;
    }
    return a;
}

} // namespace

std::string method_name(PeriodMethod m)
{
    return m == PeriodMethod::newton ? "newton" : "agm";
}

double moduli_residual(CurveType t, const Frame &w, ModuliPoint g)
{
    return norm2(scaled_residual(t, w, g, moduli_size(t, g)));
}

std::array<cplx, 4> jacobian_E(CurveType t, const Frame &w)
{
    const double h = 1e-4 * std::min(std::abs(w.w0), std::abs(w.w1));
    auto diff = [&](int which) {
        Frame p = w, m = w, p2 = w, m2 = w;
        cplx &a = which == 0 ? p.w0 : p.w1;
        cplx &b = which == 0 ? m.w0 : m.w1;
        cplx &a2 = which == 0 ? p2.w0 : p2.w1;
        cplx &b2 = which == 0 ? m2.w0 : m2.w1;
        a += h;
        b -= h;
        a2 += 2.0 * h;
        b2 -= 2.0 * h;
        const ModuliPoint gp = invert_g(t, p), gm = invert_g(t, m), gp2 = invert_g(t, p2), gm2 = invert_g(t, m2);
        // fourth-order central difference
        auto d = [&](cplx fp, cplx fm, cplx fp2, cplx fm2) { return (8.0 * (fp - fm) - (fp2 - fm2)) / (12.0 * h); };
        return std::pair{d(gp.g_s, gm.g_s, gp2.g_s, gm2.g_s), d(gp.g_l, gm.g_l, gp2.g_l, gm2.g_l)};
    };
    const auto [s0, l0] = diff(0);
    const auto [s1, l1] = diff(1);
    return {s0, s1, l0, l1};
}

cplx jacobian_ratio(CurveType t, const Frame &w)
{
    const auto J = jacobian_E(t, w);
    return (J[0] * J[3] - J[1] * J[2]) / reduced_discriminant(t, invert_g(t, w));
}

cplx jacobian_constant(CurveType t)
{
    switch (t) {
        case CurveType::A2:
            return cplx(0.0, 8.0 / (3.0 * pi));
        case CurveType::B2:
            return cplx(0.0, -1.0 / (4.0 * pi));
        case CurveType::G2:
            return cplx(0.0, -3.0 / (2.0 * pi));
    }
    return {};
}

PeriodResult reduce_gamma1(CurveType t, const Frame &w, int max_moves)
{
    const auto [A, B] = generators(t);
    const Mat2Z Ai = A.inverse(), Bi = B.inverse();
    PeriodResult r;
    r.frame = w;
    r.reduction = Mat2Z::identity();
    auto apply = [&](const Mat2Z &m) {
        r.frame = act(m, r.frame);
        // act(M, act(R, w)) = act(R·M, w)
        r.reduction = r.reduction * m;
    };
    auto translate = [&] {
        const double k = std::round(r.frame.tau().real());
        for (long i = 0; i < static_cast<long>(std::abs(k)); ++i) {
            apply(k > 0 ? Bi : B);
        }
    };
    translate();
    r.reduced = false;
    for (int moves = 0; moves <= max_moves; ++moves) {
        const double im = r.frame.tau().imag();
        const double ia = act(A, r.frame).tau().imag(), ib = act(Ai, r.frame).tau().imag();
        if (std::max(ia, ib) <= im * (1.0 + 1e-12)) {
            r.reduced = true;
            break;
        }
        if (moves == max_moves) {
            break;
        }
        apply(ia >= ib ? A : Ai);
        translate();
    }
    return r;
}

PeriodResult periods_newton(CurveType t, ModuliPoint g, const Frame &seed, const NewtonOptions &opt)
{
    require_frame(seed);
    const double size = moduli_size(t, g);
    if (!(size > 0) || !std::isfinite(size) ||
        std::abs(discriminant(t, g)) <= 1e-12 * std::pow(size, 12.0)) {
        throw DiscriminantError("periods_newton: g lies on the discriminant");
    }
    std::ostringstream trace;
    auto finish = [&](const Frame &w, int iters, int steps) {
        PeriodResult raw = reduce_gamma1(t, w);
        raw.method = PeriodMethod::newton;
        raw.residual = moduli_residual(t, raw.frame, g);
        raw.iterations = iters;
        raw.continuation_steps = steps;
        return raw;
    };

    trace << "seed:";
    const auto direct = newton(t, g, seed, opt, &trace);
    if (direct.converged) {
        return finish(direct.frame, direct.iterations, 0);
    }

    // Continuation from the anchor, in the weighted rescaling g̃ = μ^{deg}·g of comparable size.
    const Frame anchor{1.0, std::polar(1.0, pi / 3.0)};
    const ModuliPoint ga = invert_g(t, anchor);
    const auto &ti = info(t);
    const double mu = moduli_size(t, ga) / size;
    const ModuliPoint gt{g.g_s * std::pow(mu, ti.deg_gs), g.g_l * std::pow(mu, ti.deg_gl)};
    const std::array<cplx, 4> bends{cplx(0.0, 0.7), cplx(0.0, -0.7), cplx(0.9, 0.4), cplx(-0.9, -0.4)};
    int total_iters = direct.iterations;
    for (const cplx bend : bends) {
        trace << " | bend " << bend << ':';
        Frame w = anchor;
        bool ok = true;
        int steps = opt.max_steps;
        for (int k = 1; k <= steps && ok; ++k) {
            const double s = static_cast<double>(k) / steps;
            const cplx b = bend * s * (1.0 - s);
            const ModuliPoint gk{(1.0 - s) * ga.g_s + s * gt.g_s + b * ga.g_s,
                                 (1.0 - s) * ga.g_l + s * gt.g_l + b * ga.g_l};
            NewtonOptions o = opt;
            if (k < steps) {
                o.tol = 1e-8;
            }
            const auto out = newton(t, gk, w, o, nullptr);
            total_iters += out.iterations;
            ok = out.residual <= (k < steps ? 1e-6 : opt.accept);
            w = out.frame;
        }
        if (ok) {
            const Frame unscaled{w.w0 * mu, w.w1 * mu};
            // polish at the true g
            const auto out = newton(t, g, unscaled, opt, &trace);
            if (out.residual <= opt.accept) {
                return finish(out.frame, total_iters + out.iterations, steps);
            }
        }
    }
    throw ConvergenceError("periods_newton: no convergence; residual trace:" + trace.str());
}

PeriodResult periods_agm_a2(ModuliPoint g)
{
    const double size = moduli_size(CurveType::A2, g);
    if (!(size > 0) || std::abs(discriminant(CurveType::A2, g)) <= 1e-12 * std::pow(size, 12.0)) {
        throw DiscriminantError("periods_agm_a2: g lies on the discriminant");
    }
    // ℘ = 4x solves ℘′² = 4℘³ − g₂℘ − g₃ with g₂ = 16g_s, g₃ = 64g_l.
    const cplx g2 = 16.0 * g.g_s, g3 = 64.0 * g.g_l;
    Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
    comp(1, 0) = 1.0;
    comp(2, 1) = 1.0;
    comp(0, 2) = g3 / 4.0;
    comp(1, 2) = g2 / 4.0;
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(comp);
    std::array<cplx, 3> e{es.eigenvalues()(0), es.eigenvalues()(1), es.eigenvalues()(2)};
    for (auto &x : e) {
        for (int i = 0; i < 3; ++i) { // Newton polish on 4X³ − g₂X − g₃
            const cplx f = 4.0 * x * x * x - g2 * x - g3, df = 12.0 * x * x - g2;
            if (std::abs(df) > 0) {
                x -= f / df;
            }
        }
    }
    const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    PeriodResult best;
    best.residual = INFINITY;
    for (const auto &p : perms) {
        const cplx e1 = e[p[0]], e2 = e[p[1]], e3 = e[p[2]];
        const cplx a = std::sqrt(e1 - e3), b = std::sqrt(e1 - e2), c = std::sqrt(e2 - e3);
        const cplx m1 = complex_agm(a, b), m2 = complex_agm(a, c);
        if (std::abs(m1) == 0.0 || std::abs(m2) == 0.0) {
            continue;
        }
        Frame w{pi / m1, cplx(0.0, 1.0) * pi / m2};
        if (std::abs(w.tau().imag()) < 1e-9) {
            continue;
        }
        if (w.tau().imag() < 0) {
            w.w1 = -w.w1;
        }
        try {
            const double res = moduli_residual(CurveType::A2, w, g);
            if (res < best.residual) {
                best.frame = w;
                best.residual = res;
            }
        } catch (const Error &) {
        }
        if (best.residual < 1e-11) {
            break;
        }
    }
    if (!(best.residual < 1e-8)) {
        throw ConvergenceError("periods_agm_a2: no root ordering reproduces g (best residual " +
                               std::to_string(best.residual) + ")");
    }
    PeriodResult r = reduce_gamma1(CurveType::A2, best.frame);
    r.method = PeriodMethod::agm;
    r.residual = moduli_residual(CurveType::A2, r.frame, g);
    return r;
}

} // namespace pf
