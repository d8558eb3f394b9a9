#ifndef PERIODFORGE_CORE_HPP
#define PERIODFORGE_CORE_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pf
{

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// A point (ω₀, ω₁) of the period domain; valid frames have Im(ω₁/ω₀) > 0.
struct Frame {
    cplx w0{1.0, 0.0};
    cplx w1{0.0, 1.0};

    cplx tau() const
    {
        return w1 / w0;
    }
};

// A point (g_s, g_l) of the base space.
struct ModuliPoint {
    cplx g_s{};
    cplx g_l{};
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Im(ω₁/ω₀) not safely positive.
struct DegenerateFrameError : Error {
    using Error::Error;
};

// Evaluation point on (or numerically at) a pole.
struct PoleError : Error {
    using Error::Error;
};

// Point of the base space on the discriminant.
struct DiscriminantError : Error {
    using Error::Error;
};

// Iterative solver failed to converge.
struct ConvergenceError : Error {
    using Error::Error;
};

// Two independent routes to the same quantity disagree.
struct InconsistencyError : Error {
    using Error::Error;
};

// Throws DegenerateFrameError unless Im(ω₁/ω₀) > tol.
void require_frame(const Frame &w, double tol = 1e-14);

} // namespace pf

#endif
