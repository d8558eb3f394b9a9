#ifndef PERIODFORGE_GRADED_POLY_HPP
#define PERIODFORGE_GRADED_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "core.hpp"
#include "curve_family.hpp"

namespace pf
{

// Exact-rational polynomial in g_s, g_l; zero coefficients are never stored.
class GradedPoly
{
public:
    using Exponent = std::pair<int, int>; // (power of g_s, power of g_l)
    using Terms = std::map<Exponent, mpq_class>;

    GradedPoly() = default;
    GradedPoly(const mpq_class &c);
    GradedPoly(long c) : GradedPoly(mpq_class(c)) {}

    static GradedPoly monomial(const mpq_class &c, int i, int j);
    static GradedPoly g_s()
    {
        return monomial(1, 1, 0);
    }
    static GradedPoly g_l()
    {
        return monomial(1, 0, 1);
    }

    const Terms &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    bool is_constant() const;
    // Coefficient of g_s^i g_l^j (zero if absent).
    mpq_class coeff(int i, int j) const;

    GradedPoly &operator+=(const GradedPoly &o);
    GradedPoly &operator-=(const GradedPoly &o);
    GradedPoly &operator*=(const mpq_class &c);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly &b)
    {
        return a += b;
    }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly &b)
    {
        return a -= b;
    }
    friend GradedPoly operator*(GradedPoly a, const mpq_class &c)
    {
        return a *= c;
    }
    friend GradedPoly operator*(const GradedPoly &a, const GradedPoly &b);
    GradedPoly operator-() const;
    friend bool operator==(const GradedPoly &a, const GradedPoly &b)
    {
        return a.terms_ == b.terms_;
    }

    // Common weight of all monomials under the grading of t; nothing if mixed.
    // The zero polynomial is homogeneous of every weight and returns `fallback`.
    std::optional<mpq_class> weight(CurveType t, const mpq_class &fallback = 0) const;

    cplx evaluate(ModuliPoint g) const;

    // Terms in increasing (g_s, g_l) exponent order, e.g. "-4/5*g_l+1/18*g_s^2"; "0" for zero.
    std::string str() const;
    // Monomial label: "1", "g_s", "g_s^2*g_l", ...
    static std::string monomial_str(int i, int j);

private:
    void add_term(const Exponent &e, const mpq_class &c);
    Terms terms_;
};

} // namespace pf

#endif
