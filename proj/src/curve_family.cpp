#include "periodforge/curve_family.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pf
{

void require_frame(const Frame &w, double tol)
{
    if (!(w.w0 != 0.0) || !std::isfinite(std::abs(w.w0)) || !std::isfinite(std::abs(w.w1))) {
        throw DegenerateFrameError("frame has a zero or non-finite period");
    }
    if (!(w.tau().imag() > tol)) {
        throw DegenerateFrameError("frame requires Im(omega1/omega0) > 0");
    }
}

namespace
{

const std::array<TypeInfo, 3> &table()
{
    static const std::array<TypeInfo, 3> t{{
        {CurveType::A2, "a2", 3, 1, 6, 3, 2,
         {mpq_class(1, 3), mpq_class(1, 2), mpq_class(2, 3), 1, mpq_class(-1, 6), 1, 2},
         std::sqrt(27.0), 4, 6, 12},
        {CurveType::B2, "b2", 4, 2, 4, 2, 1,
         {mpq_class(1, 4), mpq_class(1, 2), mpq_class(1, 2), 1, mpq_class(-1, 4), 1, 3},
         8.0, 2, 4, 8},
        {CurveType::G2, "g2", 6, 3, 3, 3, 2,
         {mpq_class(1, 3), mpq_class(1, 3), mpq_class(1, 3), 1, mpq_class(-1, 3), 1, 4},
         0.5, 1, 3, 6},
    }};
    return t;
}

} // namespace

const TypeInfo &info(CurveType t)
{
    return table()[static_cast<int>(t)];
}

const std::array<CurveType, 3> &all_types()
{
    static const std::array<CurveType, 3> a{CurveType::A2, CurveType::B2, CurveType::G2};
    return a;
}

std::string type_name(CurveType t)
{
    return info(t).name;
}

CurveType parse_type(const std::string &s)
{
    std::string l;
    for (char c : s) {
        l.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    for (auto t : all_types()) {
        if (l == info(t).name) {
            return t;
        }
    }
    throw std::invalid_argument("unknown curve type '" + s + "' (expected a2, b2 or g2)");
}

cplx evaluate_F(CurveType t, CurvePoint pt, ModuliPoint g)
{
    const cplx x = pt.x, y = pt.y, s = g.g_s, l = g.g_l;
    switch (t) {
        case CurveType::A2:
            return y * y - (4.0 * x * x * x - s * x - l);
        case CurveType::B2:
            return y * y - (x * x * x * x - s * x * x + l + s * s / 8.0);
        case CurveType::G2:
            return x * (y * y - x * x) + s * (3.0 * x * x + y * y) - l - 2.0 * s * s * s;
    }
    return {};
}

std::pair<cplx, cplx> grad_F(CurveType t, CurvePoint pt, ModuliPoint g)
{
    const cplx x = pt.x, y = pt.y, s = g.g_s;
    switch (t) {
        case CurveType::A2:
            return {-12.0 * x * x + s, 2.0 * y};
        case CurveType::B2:
            return {-4.0 * x * x * x + 2.0 * s * x, 2.0 * y};
        case CurveType::G2:
            return {y * y - 3.0 * x * x + 6.0 * s * x, 2.0 * x * y + 2.0 * s * y};
    }
    return {};
}

std::vector<DiscFactor> discriminant_factors(CurveType t, ModuliPoint g)
{
    const cplx s = g.g_s, l = g.g_l;
    switch (t) {
        case CurveType::A2:
            return {{"-27*g_l^2+g_s^3", -27.0 * l * l + s * s * s, 1}};
        case CurveType::B2:
            return {{"8*g_l+g_s^2", 8.0 * l + s * s, 1}, {"-8*g_l+g_s^2", -8.0 * l + s * s, 2}};
        case CurveType::G2: {
            const cplx s3 = s * s * s;
            return {{"g_l+2*g_s^3", l + 2.0 * s3, 1}, {"-g_l+2*g_s^3", -l + 2.0 * s3, 3}};
        }
    }
    return {};
}

cplx discriminant(CurveType t, ModuliPoint g)
{
    cplx r = 1.0;
    for (const auto &f : discriminant_factors(t, g)) {
        for (int i = 0; i < f.multiplicity; ++i) {
            r *= f.value;
        }
    }
    return r;
}

cplx reduced_discriminant(CurveType t, ModuliPoint g)
{
    const cplx s = g.g_s, l = g.g_l;
    switch (t) {
        case CurveType::A2:
            return -27.0 * l * l + s * s * s;
        case CurveType::B2:
            return -64.0 * l * l + s * s * s * s;
        case CurveType::G2: {
            const cplx s3 = s * s * s;
            return -l * l + 4.0 * s3 * s3;
        }
    }
    return {};
}

CurvePoint sigma_action(CurveType t, CurvePoint pt)
{
    switch (t) {
        case CurveType::A2:
            return pt;
        case CurveType::B2:
            return {-pt.x, -pt.y};
        case CurveType::G2:
            return {(pt.y - pt.x) / 2.0, (-3.0 * pt.x - pt.y) / 2.0};
    }
    return pt;
}

std::pair<CurvePoint, ModuliPoint> scale_action(CurveType t, cplx s, CurvePoint pt, ModuliPoint g)
{
    if (s == 0.0) {
        throw std::invalid_argument("scale_action: s must be non-zero");
    }
    const auto &w = info(t).wt;
    auto pw = [s](const mpq_class &e) { return std::pow(s, e.get_d()); };
    return {{pw(w.x) * pt.x, pw(w.y) * pt.y}, {pw(w.g_s) * g.g_s, pw(w.g_l) * g.g_l}};
}

} // namespace pf
