#include "periodforge/eisenstein.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "periodforge/elliptic_kernel.hpp"

namespace pf
{

namespace
{

int mod6(int v)
{
    return ((v % 6) + 6) % 6;
}

} // namespace

ShiftPoint ShiftPoint::from(int n0, int d0, int n1, int d1)
{
    if (d0 <= 0 || d1 <= 0 || 6 % d0 != 0 || 6 % d1 != 0) {
        throw std::invalid_argument("ShiftPoint: denominators must divide 6");
    }
    return {mod6(n0 * (6 / d0)), mod6(n1 * (6 / d1))};
}

ShiftPoint ShiftPoint::operator-() const
{
    return {mod6(-s0), mod6(-s1)};
}

cplx ShiftPoint::value(const Frame &w) const
{
    return (static_cast<double>(s0) * w.w0 + static_cast<double>(s1) * w.w1) / 6.0;
}

std::string ShiftPoint::str() const
{
    std::ostringstream os;
    os << "(" << s0 << "/6, " << s1 << "/6)";
    return os.str();
}

cplx eisenstein_G(int m, ShiftPoint a, const Frame &w)
{
    if (m <= 2) {
        throw std::invalid_argument("eisenstein_G: weight " + std::to_string(m) +
                                    " is not absolutely convergent; use exceptional_series");
    }
    if (a.is_zero()) {
        return classical_eisenstein(m, w);
    }
    // G_m(a) = ℘^{(m−2)}(−a)/(m−1)!
    return wp_derivative(m - 2, (-a).value(w), w) / std::tgamma(static_cast<double>(m));
}

Exceptional parse_exceptional(const std::string &name)
{
    if (name == "p_half") {
        return Exceptional::p_half;
    }
    if (name == "p_third") {
        return Exceptional::p_third;
    }
    if (name == "zeta_combo") {
        return Exceptional::zeta_combo;
    }
    throw std::invalid_argument("unknown exceptional series '" + name + "'");
}

Evaluator exceptional_series(CurveType t, Exceptional name)
{
    switch (name) {
        case Exceptional::p_half:
            if (t == CurveType::B2) {
                return [](const Frame &w) { return wp(w.w0 / 2.0, w); };
            }
            break;
        case Exceptional::p_third:
            if (t == CurveType::G2) {
                return [](const Frame &w) { return wp(w.w0 / 3.0, w); };
            }
            break;
        case Exceptional::zeta_combo:
            if (t == CurveType::G2) {
                return [](const Frame &w) { return wzeta(w.w0 / 3.0, w) - 2.0 / 3.0 * wzeta(w.w0 / 2.0, w); };
            }
            break;
    }
    throw std::invalid_argument("exceptional series not defined for type " + type_name(t));
}

int coefficient_power(CurveType t, char which, int n)
{
    switch (t) {
        case CurveType::A2:
            return which == 'A' ? 2 * n : 2 * n - 1;
        case CurveType::B2:
            return which == 'A' ? 2 * n + 1 : 2 * n;
        case CurveType::G2:
            return n;
    }
    return 0;
}

Evaluator series_coefficient(CurveType t, char which, int n)
{
    if (which != 'A' && which != 'B') {
        throw std::invalid_argument("series_coefficient: which must be 'A' or 'B'");
    }
    const int lo = (t == CurveType::A2) ? 1 : 0;
    if (n < lo) {
        throw std::out_of_range("series_coefficient: index below the range for " + type_name(t));
    }
    const ShiftPoint zero = ShiftPoint::zero();
    const ShiftPoint half = ShiftPoint::from(1, 2);
    const ShiftPoint third = ShiftPoint::from(1, 3);
    const ShiftPoint two_thirds = ShiftPoint::from(2, 3);
    const bool A = which == 'A';
    switch (t) {
        case CurveType::A2: {
            const double c = A ? (2.0 * n + 1.0) / 4.0 : (2.0 * n + 1.0) * n / 4.0;
            return [=](const Frame &w) { return c * eisenstein_G(2 * n + 2, zero, w); };
        }
        case CurveType::B2: {
            if (n == 0) {
                const double c = A ? 0.5 : 0.25;
                return [=](const Frame &w) { return c * wp(w.w0 / 2.0, w); };
            }
            const double c = A ? 0.5 : (2.0 * n + 1.0) / 4.0;
            return [=](const Frame &w) {
                return c * (eisenstein_G(2 * n + 2, half, w) - eisenstein_G(2 * n + 2, zero, w));
            };
        }
        case CurveType::G2: {
            if (n == 0) {
                return [=](const Frame &w) {
                    const cplx z1 = wzeta(w.w0 / 3.0, w), z2 = wzeta(2.0 * w.w0 / 3.0, w);
                    return A ? z1 / 3.0 - z2 / 6.0 : z1 - z2 / 2.0;
                };
            }
            if (n == 1) {
                const double c = A ? 0.5 : -0.5;
                return [=](const Frame &w) { return c * wp(w.w0 / 3.0, w); };
            }
            if (A) {
                return [=](const Frame &w) {
                    return 0.5 * (eisenstein_G(n + 1, third, w) - eisenstein_G(n + 1, zero, w));
                };
            }
            return [=](const Frame &w) {
                return 0.5 * eisenstein_G(n + 1, zero, w) + 0.5 * eisenstein_G(n + 1, third, w) -
                       eisenstein_G(n + 1, two_thirds, w);
            };
        }
    }
    throw std::logic_error("series_coefficient: unreachable");
}

Frame cusp_frame(Cusp gamma, double height)
{
    const cplx tau{0.0, height};
    return gamma == Cusp::E ? Frame{1.0, tau} : Frame{tau, -1.0};
}

cplx slash_value(const Evaluator &f, int weight, Cusp gamma, double height)
{
    const cplx tau{0.0, height};
    if (gamma == Cusp::E) {
        return f(Frame{1.0, tau});
    }
    // S = [[0,−1],[1,0]]: (cτ+d)^{−m} s(−1/τ)
    return std::pow(tau, -weight) * f(Frame{1.0, -1.0 / tau});
}

} // namespace pf
