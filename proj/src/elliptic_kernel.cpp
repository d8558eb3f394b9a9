#include "periodforge/elliptic_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pf
{

namespace
{

constexpr double tail_eps = 1e-18;
constexpr int max_terms = 100000;

cplx expi2pi(cplx u)
{
    return std::exp(2.0 * pi * I * u);
}

// Lattice (1, τ) with τ reduced, plus the scale W₀ of the original lattice.
struct Normalised {
    cplx tau;
    cplx scale;
    cplx q;
};

Normalised normalise(const Frame &w)
{
    require_frame(w);
    const auto r = reduce_frame(w);
    const cplx tau = r.frame.tau();
    return {tau, r.frame.w0, expi2pi(tau)};
}

// u = u₀ + na + nb·τ with u₀ in the centred period cell.
struct CellPoint {
    cplx u;
    double na;
    double nb;
};

CellPoint to_cell(cplx u, cplx tau)
{
    const double nb = std::round(u.imag() / tau.imag());
    u -= nb * tau;
    const double na = std::round(u.real());
    u -= na;
    return {u, na, nb};
}

void require_off_lattice(cplx u, cplx tau)
{
    double d = std::abs(u);
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            d = std::min(d, std::abs(u + static_cast<double>(m) + static_cast<double>(n) * tau));
        }
    }
    if (d < 1e-300 || d < 1e-15 * std::abs(u)) {
        throw PoleError("evaluation point lies on the lattice");
    }
}

// Σ_{n≥1} qⁿ/(1−qⁿ)² = Σ σ₁(n) qⁿ
cplx sigma1_sum(cplx q)
{
    cplx s = 0.0, qn = q;
    for (int n = 1; n < max_terms && std::abs(qn) > tail_eps; ++n) {
        s += qn / ((1.0 - qn) * (1.0 - qn));
        qn *= q;
    }
    return s;
}

cplx wp_cell(cplx u, const Normalised &L)
{
    // ℘ = π²/sin²(πu) − π²/3 + (2πi)² Σ_{n≥1} [f(qⁿx) + f(qⁿ/x) − 2f(qⁿ)], f(w) = w/(1−w)².
    auto f = [](cplx v) { return v / ((1.0 - v) * (1.0 - v)); };
    const cplx xs = u.imag() >= 0 ? expi2pi(u) : expi2pi(-u);
    const cplx lead = -4.0 * pi * pi * f(xs);
    cplx s = 0.0;
    for (int n = 1; n < max_terms; ++n) {
        const cplx a = expi2pi(static_cast<double>(n) * L.tau + u);
        const cplx b = expi2pi(static_cast<double>(n) * L.tau - u);
        const cplx qn = std::pow(L.q, n);
        s += f(a) + f(b) - 2.0 * f(qn);
        if (std::abs(a) + std::abs(b) < tail_eps) {
            break;
        }
    }
    return lead - pi * pi / 3.0 - 4.0 * pi * pi * s;
}

cplx wpp_cell(cplx u, const Normalised &L)
{
    // ℘' = (2πi)³ [g(x) + Σ_{n≥1} (g(qⁿx) − g(qⁿ/x))], g(w) = w(1+w)/(1−w)³, g(1/w) = −g(w).
    auto g = [](cplx v) { return v * (1.0 + v) / ((1.0 - v) * (1.0 - v) * (1.0 - v)); };
    const cplx lead = u.imag() >= 0 ? g(expi2pi(u)) : -g(expi2pi(-u));
    cplx s = lead;
    for (int n = 1; n < max_terms; ++n) {
        const cplx a = expi2pi(static_cast<double>(n) * L.tau + u);
        const cplx b = expi2pi(static_cast<double>(n) * L.tau - u);
        s += g(a) - g(b);
        if (std::abs(a) + std::abs(b) < tail_eps) {
            break;
        }
    }
    const cplx c = 2.0 * pi * I;
    return c * c * c * s;
}

cplx eta1_unit(const Normalised &L)
{
    // 2ζ(1/2) for the lattice (1, τ): (π²/3)·E₂(τ)
    return pi * pi / 3.0 * (1.0 - 24.0 * sigma1_sum(L.q));
}

cplx zeta_cell(cplx u, const Normalised &L, cplx eta1)
{
    // ζ = η₁u + π cot(πu) − 2πi Σ_{n≥1} [1/(1−qⁿx) − 1/(1−qⁿ/x)]
    cplx cot;
    if (u.imag() >= 0) {
        const cplx x = expi2pi(u);
        cot = I * (x + 1.0) / (x - 1.0);
    } else {
        const cplx x = expi2pi(-u);
        cot = -I * (x + 1.0) / (x - 1.0);
    }
    cplx s = 0.0;
    for (int n = 1; n < max_terms; ++n) {
        const cplx a = expi2pi(static_cast<double>(n) * L.tau + u);
        const cplx b = expi2pi(static_cast<double>(n) * L.tau - u);
        s += 1.0 / (1.0 - a) - 1.0 / (1.0 - b);
        if (std::abs(a) + std::abs(b) < tail_eps) {
            break;
        }
    }
    return eta1 * u + pi * cot - 2.0 * pi * I * s;
}

// Coefficients of P_k with dᵏ/dvᵏ cot(πv) = πᵏ P_k(cot πv); P_{k+1} = −(1+c²) P_k'.
const std::vector<std::vector<double>> &cot_polys()
{
    static const std::vector<std::vector<double>> P = [] {
        constexpr int K = 96;
        std::vector<std::vector<double>> p(K + 1);
        p[0] = {0.0, 1.0};
        for (int k = 0; k < K; ++k) {
            const auto &a = p[k];
            std::vector<double> d(a.size() > 1 ? a.size() - 1 : 1, 0.0);
            for (std::size_t i = 1; i < a.size(); ++i) {
                d[i - 1] = static_cast<double>(i) * a[i];
            }
            std::vector<double> r(d.size() + 2, 0.0);
            for (std::size_t i = 0; i < d.size(); ++i) {
                r[i] -= d[i];
                r[i + 2] -= d[i];
            }
            while (r.size() > 1 && r.back() == 0.0) {
                r.pop_back();
            }
            p[k + 1] = std::move(r);
        }
        return p;
    }();
    return P;
}

// Σ_{d∈ℤ} (v+d)^{−m}
cplx row_sum(int m, cplx v)
{
    const double lf = std::lgamma(static_cast<double>(m)); // log (m−1)!
    if (std::abs(v.imag()) >= 0.25) {
        // Lipschitz: ((−2πi)^m/(m−1)!) Σ_{k≥1} k^{m−1} e^{2πikv} for Im v > 0.
        const bool flip = v.imag() < 0;
        if (flip) {
            v = -v;
        }
        const cplx r = expi2pi(v);
        const double ar = std::abs(r);
        cplx s = 0.0;
        cplx rk = 1.0;
        for (int k = 1; k < max_terms; ++k) {
            rk *= r;
            const double mag = std::pow(static_cast<double>(k), m - 1);
            s += mag * rk;
            if (k * (1.0 - ar) > m && mag * std::abs(rk) < tail_eps * std::abs(s)) {
                break;
            }
        }
        const cplx pre = std::pow(-2.0 * pi * I, m) / std::exp(lf);
        const cplx val = pre * s;
        return (flip && (m % 2 == 1)) ? -val : val;
    }
    const auto &P = cot_polys();
    if (m - 1 >= static_cast<int>(P.size())) {
        throw std::out_of_range("lattice_sum: weight too large");
    }
    const cplx c = std::cos(pi * v) / std::sin(pi * v);
    const auto &p = P[m - 1];
    cplx acc = 0.0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * c + p[i];
    }
    const double sign = ((m - 1) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(pi, m) / std::exp(lf) * acc;
}

cplx lattice_sum_unit(int m, cplx u, cplx tau)
{
    cplx total = row_sum(m, u);
    for (int c = 1; c < max_terms; ++c) {
        const cplx t = row_sum(m, u + static_cast<double>(c) * tau) + row_sum(m, u - static_cast<double>(c) * tau);
        total += t;
        if (std::abs(t) <= tail_eps * std::abs(total) || std::abs(t) < 1e-300) {
            break;
        }
    }
    return total;
}

} // namespace

ReducedFrame reduce_frame(const Frame &w)
{
    require_frame(w);
    Frame f = w;
    Mat2Z m = Mat2Z::identity();
    for (int it = 0; it < 10000; ++it) {
        const cplx tau = f.tau();
        const double n = std::round(tau.real());
        if (n != 0.0) {
            f.w1 -= n * f.w0;
            m = m * Mat2Z{1, -static_cast<std::int64_t>(n), 0, 1};
        }
        if (std::norm(f.tau()) < 1.0 - 1e-13) {
            f = Frame{f.w1, -f.w0};
            m = m * Mat2Z{0, -1, 1, 0};
        } else {
            return {f, m};
        }
    }
    throw ConvergenceError("reduce_frame: no convergence");
}

cplx wp(cplx z, const Frame &w)
{
    const auto L = normalise(w);
    const auto c = to_cell(z / L.scale, L.tau);
    require_off_lattice(c.u, L.tau);
    return wp_cell(c.u, L) / (L.scale * L.scale);
}

cplx wp_prime(cplx z, const Frame &w)
{
    const auto L = normalise(w);
    const auto c = to_cell(z / L.scale, L.tau);
    require_off_lattice(c.u, L.tau);
    return wpp_cell(c.u, L) / (L.scale * L.scale * L.scale);
}

cplx wzeta(cplx z, const Frame &w)
{
    const auto L = normalise(w);
    const auto c = to_cell(z / L.scale, L.tau);
    require_off_lattice(c.u, L.tau);
    const cplx e1 = eta1_unit(L);
    const cplx etau = L.tau * e1 - 2.0 * pi * I;
    return (zeta_cell(c.u, L, e1) + c.na * e1 + c.nb * etau) / L.scale;
}

cplx lattice_sum(int m, cplx z, const Frame &w)
{
    if (m < 3) {
        throw std::invalid_argument("lattice_sum: weight must be >= 3");
    }
    const auto L = normalise(w);
    const auto c = to_cell(z / L.scale, L.tau);
    require_off_lattice(c.u, L.tau);
    return lattice_sum_unit(m, c.u, L.tau) / std::pow(L.scale, m);
}

cplx wp_derivative(int j, cplx z, const Frame &w)
{
    if (j < 0) {
        throw std::invalid_argument("wp_derivative: negative order");
    }
    if (j == 0) {
        return wp(z, w);
    }
    // ℘^{(j)}(z) = (−1)^j (j+1)! Σ_ω (z+ω)^{−(j+2)}
    const double f = std::tgamma(static_cast<double>(j + 2));
    return ((j % 2 == 0) ? f : -f) * lattice_sum(j + 2, z, w);
}

cplx classical_eisenstein(int m, const Frame &w)
{
    if (m < 3) {
        throw std::invalid_argument("classical_eisenstein: weight must be >= 3");
    }
    const auto L = normalise(w);
    if (m % 2 == 1) {
        return 0.0;
    }
    // 2ζ(m) + 2 (2πi)^m/(m−1)! Σ_{n≥1} σ_{m−1}(n) qⁿ
    cplx s = 0.0;
    for (int c = 1; c < max_terms; ++c) {
        const cplx qc = std::pow(L.q, c);
        if (std::abs(qc) < tail_eps) {
            break;
        }
        cplx inner = 0.0, qk = 1.0;
        for (int k = 1; k < max_terms; ++k) {
            qk *= qc;
            const double mag = std::pow(static_cast<double>(k), m - 1);
            inner += mag * qk;
            if (k * (1.0 - std::abs(qc)) > m && mag * std::abs(qk) < tail_eps * std::abs(inner)) {
                break;
            }
        }
        s += inner;
    }
    const cplx pre = 2.0 * std::pow(2.0 * pi * I, m) / std::tgamma(static_cast<double>(m));
    const cplx g = 2.0 * std::riemann_zeta(static_cast<double>(m)) + pre * s;
    return g / std::pow(L.scale, m);
}

std::pair<cplx, cplx> quasi_periods(const Frame &w)
{
    const auto L = normalise(w);
    const auto r = reduce_frame(w);
    const cplx e1 = eta1_unit(L) / L.scale;
    const cplx et = (L.tau * eta1_unit(L) - 2.0 * pi * I) / L.scale;
    // (ω₀, ω₁) = (W₀, W₁)·m⁻¹ and η is additive on the lattice.
    const Mat2Z mi = r.m.inverse();
    return {static_cast<double>(mi.a) * e1 + static_cast<double>(mi.c) * et,
            static_cast<double>(mi.b) * e1 + static_cast<double>(mi.d) * et};
}

double lattice_distance(cplx z, const Frame &w)
{
    const auto L = normalise(w);
    const auto c = to_cell(z / L.scale, L.tau);
    double d = std::abs(c.u);
    for (int m = -1; m <= 1; ++m) {
        for (int n = -1; n <= 1; ++n) {
            d = std::min(d, std::abs(c.u + static_cast<double>(m) + static_cast<double>(n) * L.tau));
        }
    }
    return d * std::abs(L.scale);
}

cplx dedekind_eta(cplx tau)
{
    if (!(tau.imag() > 0)) {
        throw std::domain_error("dedekind_eta: Im(tau) must be positive");
    }
    const cplx q = expi2pi(tau);
    cplx p = 1.0, qn = q;
    for (int n = 1; n < 10 * max_terms && std::abs(qn) > 1e-20; ++n) {
        p *= 1.0 - qn;
        qn *= q;
    }
    return expi2pi(tau / 24.0) * p;
}

cplx e2_series(cplx tau)
{
    if (!(tau.imag() > 0)) {
        throw std::domain_error("e2_series: Im(tau) must be positive");
    }
    return 1.0 - 24.0 * sigma1_sum(expi2pi(tau));
}

QSeries fourier_coefficients(const std::function<cplx(cplx)> &f, int n_max, double height, int samples,
                             double tol)
{
    if (n_max < 0 || !(height > 0)) {
        throw std::invalid_argument("fourier_coefficients: need n_max >= 0 and height > 0");
    }
    const cplx probe{0.3717, height};
    const cplx f0 = f(probe), f1 = f(probe + 1.0);
    if (std::abs(f1 - f0) > tol * std::max(1.0, std::abs(f0))) {
        throw std::invalid_argument("fourier_coefficients: input is not 1-periodic");
    }
    int M = samples > 0 ? samples : 64;
    while (M < 4 * (n_max + 1)) {
        M *= 2;
    }
    std::vector<cplx> v(M);
    for (int k = 0; k < M; ++k) {
        v[k] = f(cplx{static_cast<double>(k) / M, height});
    }
    QSeries out;
    out.coeffs.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        cplx s = 0.0;
        for (int k = 0; k < M; ++k) {
            s += v[k] * std::polar(1.0, -2.0 * pi * static_cast<double>((static_cast<long>(n) * k) % M) / M);
        }
        out.coeffs[n] = s / static_cast<double>(M) * std::exp(2.0 * pi * n * height);
    }
    return out;
}

} // namespace pf
