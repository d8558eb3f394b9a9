#include "periodforge/modular_group.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pf
{

Mat2Z operator*(const Mat2Z &m, const Mat2Z &n)
{
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

std::string to_string(const Mat2Z &m)
{
    std::ostringstream os;
    os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
    return os.str();
}

std::string to_string(const GroupWord &w)
{
    std::string s;
    for (auto g : w) {
        switch (g) {
            case Gen::A:
                s += "a";
                break;
            case Gen::Ainv:
                s += "a'";
                break;
            case Gen::B:
                s += "b";
                break;
            case Gen::Binv:
                s += "b'";
                break;
        }
    }
    return s;
}

std::pair<Mat2Z, Mat2Z> generators(CurveType t)
{
    const std::int64_t N = info(t).N;
    return {Mat2Z{1, 0, -N, 1}, Mat2Z{1, 1, 0, 1}};
}

namespace
{

std::int64_t mod(std::int64_t v, std::int64_t n)
{
    const std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

bool is_in_gamma1(int N, const Mat2Z &m)
{
    if (m.det() != 1) {
        throw std::invalid_argument("is_in_gamma1: determinant must be 1, got " + to_string(m));
    }
    if (N == 1) {
        return true;
    }
    return mod(m.c, N) == 0 && mod(m.a, N) == 1 && mod(m.d, N) == 1;
}

bool is_in_gamma1(CurveType t, const Mat2Z &m)
{
    return is_in_gamma1(info(t).N, m);
}

Mat2Z evaluate_word(CurveType t, const GroupWord &w)
{
    const auto [A, B] = generators(t);
    Mat2Z r = Mat2Z::identity();
    for (auto g : w) {
        switch (g) {
            case Gen::A:
                r = r * A;
                break;
            case Gen::Ainv:
                r = r * A.inverse();
                break;
            case Gen::B:
                r = r * B;
                break;
            case Gen::Binv:
                r = r * B.inverse();
                break;
        }
    }
    return r;
}

GroupWord alternating_word(int length, bool start_with_a)
{
    GroupWord w;
    for (int i = 0; i < length; ++i) {
        w.push_back(((i % 2 == 0) == start_with_a) ? Gen::A : Gen::B);
    }
    return w;
}

Mat2Z fundamental_element(CurveType t)
{
    return evaluate_word(t, alternating_word(info(t).p));
}

cplx character_theta(CurveType t, const GroupWord &w)
{
    int e = 0;
    for (auto g : w) {
        e += (g == Gen::A || g == Gen::B) ? 1 : -1;
    }
    const int k = info(t).k;
    // exp(πi e/k), reduced mod 2k so the phase stays exact for long words.
    const int r = static_cast<int>(mod(e, 2 * k));
    return std::polar(1.0, pi * r / k);
}

GroupWord random_word(std::mt19937_64 &rng, int length)
{
    std::uniform_int_distribution<int> pick(0, 3);
    GroupWord w;
    for (int i = 0; i < length; ++i) {
        w.push_back(static_cast<Gen>(pick(rng)));
    }
    return w;
}

Frame act(const Mat2Z &m, const Frame &w)
{
    const auto a = static_cast<double>(m.a), b = static_cast<double>(m.b), c = static_cast<double>(m.c),
               d = static_cast<double>(m.d);
    return {a * w.w0 + c * w.w1, b * w.w0 + d * w.w1};
}

namespace
{

// Im(conj(u)·v)
double cross(cplx u, cplx v)
{
    return u.real() * v.imag() - u.imag() * v.real();
}

std::optional<Mat2Z> solve_equivalence(const Frame &w1, const Frame &w2, double tol)
{
    for (const Frame *w : {&w1, &w2}) {
        if (!(w->w0 != 0.0) || std::abs(w->tau().imag()) < tol) {
            throw DegenerateFrameError("frame_equivalence: degenerate frame");
        }
    }
    const double det = cross(w1.w0, w1.w1);
    // ω' = αω₀ + βω₁ with α, β real.
    auto coords = [&](cplx v) { return std::pair{cross(v, w1.w1) / det, cross(w1.w0, v) / det}; };
    const auto [a, c] = coords(w2.w0);
    const auto [b, d] = coords(w2.w1);
    for (double v : {a, b, c, d}) {
        if (!std::isfinite(v) || std::abs(v) > 9.0e15) {
            return std::nullopt;
        }
    }
    const Mat2Z m{std::llround(a), std::llround(b), std::llround(c), std::llround(d)};
    if (m.det() != 1) {
        return std::nullopt;
    }
    const Frame r = act(m, w1);
    const double scale = std::abs(w2.w0) + std::abs(w2.w1);
    if (std::abs(r.w0 - w2.w0) + std::abs(r.w1 - w2.w1) > tol * scale) {
        return std::nullopt;
    }
    return m;
}

} // namespace

std::optional<Mat2Z> lattice_equivalence(const Frame &w1, const Frame &w2, double tol)
{
    return solve_equivalence(w1, w2, tol);
}

std::optional<Mat2Z> frame_equivalence(CurveType t, const Frame &w1, const Frame &w2, double tol)
{
    auto m = solve_equivalence(w1, w2, tol);
    if (m && !is_in_gamma1(t, *m)) {
        return std::nullopt;
    }
    return m;
}

} // namespace pf
