#ifndef PERIODFORGE_TESTS_ORACLES_HPP
#define PERIODFORGE_TESTS_ORACLES_HPP

// Reference implementations that share no code with the library: row sums of
// trigonometric series for lattice functions, the q → 0 limits of those rows for cusp
// values, Euler's pentagonal series for η, and plain truncated lattice sums.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle
{

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline double rel(cplx a, cplx b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// P_j with d^j/dx^j [π cot πx] = π^{j+1} P_j(cot πx); coefficients in ascending powers.
inline std::vector<double> cot_derivative_poly(int j)
{
    std::vector<double> p{0.0, 1.0};
    for (int s = 0; s < j; ++s) {
        std::vector<double> d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
        for (std::size_t i = 1; i < p.size(); ++i) {
            d[i - 1] = static_cast<double>(i) * p[i];
        }
        // −(1 + c²)·P'
        std::vector<double> n(d.size() + 2, 0.0);
        for (std::size_t i = 0; i < d.size(); ++i) {
            n[i] -= d[i];
            n[i + 2] -= d[i];
        }
        p = n;
    }
    return p;
}

inline cplx poly_eval(const std::vector<double> &p, cplx c)
{
    cplx s = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        s = s * c + *it;
    }
    return s;
}

inline cplx cot(cplx x)
{
    return std::cos(x) / std::sin(x);
}

// Σ_{k∈ℤ} (x + k)^{−m}, m ≥ 2, x ∉ ℤ.
inline cplx row_sum(int m, cplx x)
{
    double fact = 1.0;
    for (int i = 2; i < m; ++i) {
        fact *= i;
    }
    const double sign = (m - 1) % 2 == 0 ? 1.0 : -1.0;
    return sign / fact * std::pow(pi, m) * poly_eval(cot_derivative_poly(m - 1), cot(pi * x));
}

// Σ'_{k∈ℤ} k^{−m}: 2ζ(m) for even m, 0 for odd m.
inline double row_sum_zero(int m)
{
    if (m % 2) {
        return 0.0;
    }
    return 2.0 * std::riemann_zeta(static_cast<double>(m));
}

// Lattice ℤ + ℤτ with Im τ > 0. Functions of other lattices go through scaling.
struct Lattice {
    cplx tau;
    int rows;

    explicit Lattice(cplx t) : tau(t)
    {
        rows = static_cast<int>(std::ceil(40.0 / (2.0 * pi * tau.imag()))) + 2;
    }

    // G₂ in the Eisenstein summation order (rows in τ outermost).
    cplx G2() const
    {
        cplx s = pi * pi / 3.0;
        for (int n = 1; n <= rows; ++n) {
            s += 2.0 * row_sum(2, static_cast<double>(n) * tau);
        }
        return s;
    }
    cplx wp(cplx z) const
    {
        cplx s = -G2();
        for (int n = -rows; n <= rows; ++n) {
            s += row_sum(2, z + static_cast<double>(n) * tau);
        }
        return s;
    }
    cplx zeta(cplx z) const
    {
        cplx s = G2() * z + pi * cot(pi * z);
        for (int n = 1; n <= rows; ++n) {
            const cplx nt = static_cast<double>(n) * tau;
            s += pi * (cot(pi * (z + nt)) + cot(pi * (z - nt)));
        }
        return s;
    }
    // Σ (z + ω)^{−m}, m ≥ 3; z = 0 drops the origin.
    cplx G(int m, cplx z) const
    {
        cplx s = 0.0;
        for (int n = -rows; n <= rows; ++n) {
            const cplx x = z + static_cast<double>(n) * tau;
            if (n == 0 && std::abs(z) == 0.0) {
                s += row_sum_zero(m);
            } else {
                s += row_sum(m, x);
            }
        }
        return s;
    }
};

// Basis change to a lattice ℤ + ℤτ with Im τ ≥ √3/2 (ω₀ rescaled to 1).
struct Scaled {
    cplx scale; // ω = scale·(ℤ + ℤτ)
    Lattice lat;
};

inline Scaled normalise(cplx w0, cplx w1)
{
    cplx a = w0, b = w1;
    if ((b / a).imag() < 0) {
        b = -b;
    }
    for (int it = 0; it < 100; ++it) {
        cplx t = b / a;
        const double n = std::round(t.real());
        b -= n * a;
        t = b / a;
        if (std::abs(t) < 1.0 - 1e-14) {
            const cplx old = a;
            a = b;
            b = -old;
            continue;
        }
        break;
    }
    return {a, Lattice(b / a)};
}

inline cplx wp(cplx z, cplx w0, cplx w1)
{
    const auto s = normalise(w0, w1);
    return s.lat.wp(z / s.scale) / (s.scale * s.scale);
}
inline cplx zeta(cplx z, cplx w0, cplx w1)
{
    const auto s = normalise(w0, w1);
    return s.lat.zeta(z / s.scale) / s.scale;
}
inline cplx G(int m, cplx z, cplx w0, cplx w1)
{
    const auto s = normalise(w0, w1);
    return s.lat.G(m, z / s.scale) / std::pow(s.scale, m);
}

// Plain truncated lattice sum Σ'_{|j|,|k|≤R} (z + jω₀ + kω₁)^{−m}, m ≥ 3.
inline cplx brute_G(int m, cplx z, cplx w0, cplx w1, int R)
{
    cplx s = 0.0;
    for (int j = -R; j <= R; ++j) {
        for (int k = -R; k <= R; ++k) {
            const cplx w = z + static_cast<double>(j) * w0 + static_cast<double>(k) * w1;
            if (std::abs(w) > 0) {
                s += std::pow(w, -m);
            }
        }
    }
    return s;
}

// q → 0 limits at the two standard cusps for ω₀ = 1 (E) and the frame (iH, −1) (S),
// with r the torsion fraction of ω₀. The ζ limit at S keeps its linear growth in H.
struct CuspLimit {
    static cplx G_E(int m, double r)
    {
        return r == 0.0 ? cplx(row_sum_zero(m)) : row_sum(m, r);
    }
    static cplx G_S(int m, double r)
    {
        return r == 0.0 ? cplx(row_sum_zero(m)) : cplx(0.0);
    }
    static cplx wp_E(double r)
    {
        return row_sum(2, r) - pi * pi / 3.0;
    }
    static cplx wp_S(double)
    {
        return -pi * pi / 3.0;
    }
    static cplx zeta_E(double r)
    {
        return pi * pi / 3.0 * r + pi * cot(cplx(pi * r));
    }
    static cplx zeta_S(double r, double H)
    {
        return pi * pi / 3.0 * cplx(0.0, r * H) - cplx(0.0, pi);
    }
};

// η(τ) = e^{πiτ/12} Σ_k (−1)^k q^{k(3k−1)/2}.
inline cplx eta(cplx tau)
{
    const cplx q = std::exp(cplx(0.0, 2.0 * pi) * tau);
    cplx s = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double sg = k % 2 ? -1.0 : 1.0;
        const cplx a = std::pow(q, k * (3 * k - 1) / 2), b = std::pow(q, k * (3 * k + 1) / 2);
        s += sg * (a + b);
        if (std::abs(a) < 1e-300) {
            break;
        }
    }
    return std::exp(cplx(0.0, pi / 12.0) * tau) * s;
}

struct EtaPower {
    int m, r;
};

inline cplx eta_product(const std::vector<EtaPower> &e, cplx tau)
{
    cplx p = 1.0;
    for (const auto &f : e) {
        p *= std::pow(eta(static_cast<double>(f.m) * tau), f.r);
    }
    return p;
}

// Integer coefficients of ∏ ∏_n (1 − q^{mn})^r up to q^{n_max} (the q^{Σ mr/24} prefactor dropped).
inline std::vector<long long> eta_product_coeffs(const std::vector<EtaPower> &e, int n_max)
{
    std::vector<long long> c(n_max + 1, 0);
    c[0] = 1;
    for (const auto &f : e) {
        for (int n = 1; f.m * n <= n_max; ++n) {
            const int s = f.m * n;
            for (int rep = 0; rep < std::abs(f.r); ++rep) {
                if (f.r > 0) { // multiply by (1 − q^s)
                    for (int i = n_max; i >= s; --i) {
                        c[i] -= c[i - s];
                    }
                } else { // divide by (1 − q^s)
                    for (int i = s; i <= n_max; ++i) {
                        c[i] += c[i - s];
                    }
                }
            }
        }
    }
    return c;
}

// Arithmetic–geometric mean (principal choice of square roots near the running mean).
inline cplx agm(cplx a, cplx b)
{
    for (int i = 0; i < 100 && std::abs(a - b) > 1e-16 * std::abs(a); ++i) {
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

// Random frames: |ω₀| ∈ [0.5, 2], arbitrary phase, τ in the box |Re τ| ≤ ½, Im τ ∈ [0.6, 1.8].
inline std::vector<std::pair<cplx, cplx>> frames(std::uint64_t seed, int count)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mod(0.5, 2.0), arg(-pi, pi), re(-0.5, 0.5), im(0.6, 1.8);
    std::vector<std::pair<cplx, cplx>> v;
    for (int i = 0; i < count; ++i) {
        const cplx w0 = std::polar(mod(rng), arg(rng));
        const cplx tau(re(rng), im(rng));
        v.emplace_back(w0, w0 * tau);
    }
    return v;
}

} // namespace oracle

#endif
