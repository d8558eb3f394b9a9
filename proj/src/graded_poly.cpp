#include "periodforge/graded_poly.hpp"

#include <cmath>

namespace pf
{

GradedPoly::GradedPoly(const mpq_class &c)
{
    if (c != 0) {
        terms_[{0, 0}] = c;
    }
}

GradedPoly GradedPoly::monomial(const mpq_class &c, int i, int j)
{
    GradedPoly p;
    p.add_term({i, j}, c);
    return p;
}

bool GradedPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

mpq_class GradedPoly::coeff(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void GradedPoly::add_term(const Exponent &e, const mpq_class &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

GradedPoly &GradedPoly::operator+=(const GradedPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

GradedPoly &GradedPoly::operator-=(const GradedPoly &o)
{
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

GradedPoly &GradedPoly::operator*=(const mpq_class &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_) {
        kv.second *= c;
    }
    return *this;
}

GradedPoly operator*(const GradedPoly &a, const GradedPoly &b)
{
    GradedPoly r;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    return r;
}

GradedPoly GradedPoly::operator-() const
{
    GradedPoly r = *this;
    for (auto &kv : r.terms_) {
        kv.second = -kv.second;
    }
    return r;
}

std::optional<mpq_class> GradedPoly::weight(CurveType t, const mpq_class &fallback) const
{
    if (terms_.empty()) {
        return fallback;
    }
    const auto &w = info(t).wt;
    std::optional<mpq_class> out;
    for (const auto &[e, c] : terms_) {
        mpq_class v = w.g_s * e.first + w.g_l * e.second;
        if (out && *out != v) {
            return std::nullopt;
        }
        out = v;
    }
    return out;
}

cplx GradedPoly::evaluate(ModuliPoint g) const
{
    cplx s = 0.0;
    for (const auto &[e, c] : terms_) {
        s += c.get_d() * std::pow(g.g_s, e.first) * std::pow(g.g_l, e.second);
    }
    return s;
}

std::string GradedPoly::monomial_str(int i, int j)
{
    std::string s;
    auto part = [&s](const char *v, int p) {
        if (p == 0) {
            return;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += v;
        if (p != 1) {
            s += "^" + std::to_string(p);
        }
    };
    part("g_s", i);
    part("g_l", j);
    return s.empty() ? "1" : s;
}

std::string GradedPoly::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const auto &[e, c] : terms_) {
        const bool neg = c < 0;
        const mpq_class a = abs(c);
        if (!s.empty()) {
            s += neg ? "-" : "+";
        } else if (neg) {
            s += "-";
        }
        const std::string mono = monomial_str(e.first, e.second);
        if (mono == "1") {
            s += a.get_str();
        } else if (a == 1) {
            s += mono;
        } else {
            s += a.get_str() + "*" + mono;
        }
    }
    return s;
}

} // namespace pf
