#include "periodforge/laurent_engine.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pf
{

namespace
{

struct BiTerm {
    GradedPoly c;
    int i; // power of x
    int j; // power of y
};
using BiPoly = std::vector<BiTerm>;

BiPoly family_F(CurveType t)
{
    const GradedPoly s = GradedPoly::g_s(), l = GradedPoly::g_l();
    switch (t) {
        case CurveType::A2:
            return {{1, 0, 2}, {-4, 3, 0}, {s, 1, 0}, {l, 0, 0}};
        case CurveType::B2:
            return {{1, 0, 2}, {-1, 4, 0}, {s, 2, 0}, {-l, 0, 0}, {s * s * mpq_class(-1, 8), 0, 0}};
        case CurveType::G2:
            return {{1, 1, 2}, {-1, 3, 0}, {s * mpq_class(3), 2, 0}, {s, 0, 2}, {-l, 0, 0},
                    {s * s * s * mpq_class(-2), 0, 0}};
    }
    return {};
}

BiPoly d_dx(const BiPoly &p)
{
    BiPoly r;
    for (const auto &t : p) {
        if (t.i > 0) {
            r.push_back({t.c * mpq_class(t.i), t.i - 1, t.j});
        }
    }
    return r;
}

BiPoly d_dy(const BiPoly &p)
{
    BiPoly r;
    for (const auto &t : p) {
        if (t.j > 0) {
            r.push_back({t.c * mpq_class(t.j), t.i, t.j - 1});
        }
    }
    return r;
}

void add_to(FormalSeries &s, int p, const GradedPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    auto &slot = s[p];
    slot += c;
    if (slot.is_zero()) {
        s.erase(p);
    }
}

FormalSeries mul(const FormalSeries &a, const FormalSeries &b, int maxp)
{
    FormalSeries r;
    for (const auto &[pa, ca] : a) {
        for (const auto &[pb, cb] : b) {
            if (pa + pb > maxp) {
                break;
            }
            add_to(r, pa + pb, ca * cb);
        }
    }
    return r;
}

FormalSeries derivative(const FormalSeries &a)
{
    FormalSeries r;
    for (const auto &[p, c] : a) {
        add_to(r, p - 1, c * mpq_class(p));
    }
    return r;
}

FormalSeries eval_bipoly(const BiPoly &P, const FormalSeries &x, const FormalSeries &y, int maxp)
{
    int mi = 0, mj = 0;
    for (const auto &t : P) {
        mi = std::max(mi, t.i);
        mj = std::max(mj, t.j);
    }
    std::vector<FormalSeries> xp{{{0, GradedPoly(1)}}}, yp{{{0, GradedPoly(1)}}};
    // Generous bound on the truncation of intermediate powers: later factors may have
    // negative leading powers that shift contributions back down.
    const int slack = 8 * (std::abs(x.empty() ? 0 : x.begin()->first) + std::abs(y.empty() ? 0 : y.begin()->first)) + 8;
    for (int i = 1; i <= mi; ++i) {
        xp.push_back(mul(xp.back(), x, maxp + slack));
    }
    for (int j = 1; j <= mj; ++j) {
        yp.push_back(mul(yp.back(), y, maxp + slack));
    }
    FormalSeries r;
    for (const auto &t : P) {
        const FormalSeries m = mul(xp[t.i], yp[t.j], maxp);
        for (const auto &[p, c] : m) {
            add_to(r, p, c * t.c);
        }
    }
    return r;
}

GradedPoly at(const FormalSeries &s, int p)
{
    auto it = s.find(p);
    return it == s.end() ? GradedPoly() : it->second;
}

struct Equations {
    const BiPoly F, Fx, Fy;
    explicit Equations(CurveType t) : F(family_F(t)), Fx(d_dx(F)), Fy(d_dy(F)) {}

    // ([x' − F_y]_{px}, [y' + F_x]_{py}, [F]_{pe})
    std::array<GradedPoly, 3> at_powers(const FormalSeries &x, const FormalSeries &y, int px, int py, int pe) const
    {
        const int maxp = std::max({px, py, pe});
        const FormalSeries fy = eval_bipoly(Fy, x, y, maxp);
        const FormalSeries fx = eval_bipoly(Fx, x, y, maxp);
        const FormalSeries f = eval_bipoly(F, x, y, maxp);
        const FormalSeries dx = derivative(x), dy = derivative(y);
        return {at(dx, px) - at(fy, px), at(dy, py) + at(fx, py), at(f, pe)};
    }
};

mpq_class level_weight(CurveType t, int x_power)
{
    const auto &w = info(t).wt;
    return w.x - w.z * x_power;
}

mpq_class constant_of(const GradedPoly &p, const char *what)
{
    if (!p.is_constant()) {
        throw InconsistencyError(std::string("laurent_engine: non-constant linear coefficient in ") + what);
    }
    return p.coeff(0, 0);
}

} // namespace

GradedPoly FormalSolution::x_coeff(int power) const
{
    return at(x, power);
}

GradedPoly FormalSolution::y_coeff(int power) const
{
    return at(y, power);
}

cplx FormalSolution::eval_x(ModuliPoint g, cplx zz) const
{
    cplx s = 0.0;
    for (const auto &[p, c] : x) {
        s += c.evaluate(g) * std::pow(zz, p);
    }
    return s;
}

cplx FormalSolution::eval_y(ModuliPoint g, cplx zz) const
{
    cplx s = 0.0;
    for (const auto &[p, c] : y) {
        s += c.evaluate(g) * std::pow(zz, p);
    }
    return s;
}

InitialDirection initial_direction(CurveType t, int infinity)
{
    if (infinity < 1 || infinity > info(t).N) {
        throw std::out_of_range("infinity index out of range for " + type_name(t));
    }
    switch (t) {
        case CurveType::A2:
            return {-2, mpq_class(1, 4), -3, mpq_class(-1, 4)};
        case CurveType::B2:
            return infinity == 1 ? InitialDirection{-1, mpq_class(1, 2), -2, mpq_class(-1, 4)}
                                 : InitialDirection{-1, mpq_class(-1, 2), -2, mpq_class(1, 4)};
        case CurveType::G2:
            if (infinity == 1) {
                return {-1, mpq_class(1, 2), -1, mpq_class(-1, 2)};
            }
            if (infinity == 2) {
                return {-1, mpq_class(-1, 2), -1, mpq_class(-1, 2)};
            }
            return {-1, mpq_class(0), -1, mpq_class(1)};
    }
    throw std::logic_error("initial_direction: unreachable");
}

FormalSolution solve_formal(CurveType t, int infinity, int order)
{
    if (order < 1) {
        throw std::invalid_argument("solve_formal: order must be positive");
    }
    const auto init = initial_direction(t, infinity);
    FormalSolution sol;
    sol.type = t;
    sol.infinity = infinity;
    sol.x_lead = init.x_power;
    sol.y_lead = init.y_power;
    add_to(sol.x, init.x_power, GradedPoly(init.x_coeff));
    add_to(sol.y, init.y_power, GradedPoly(init.y_coeff));
    const Equations eq(t);

    for (int L = 1; L <= order; ++L) {
        const int kx = init.x_power + L, ky = init.y_power + L;
        const bool energy_level = level_weight(t, kx) == info(t).wt.F;
        auto residual = [&] { return eq.at_powers(sol.x, sol.y, kx - 1, ky - 1, 0); };
        const auto r0 = residual();
        sol.x[kx] = GradedPoly(1);
        const auto r1 = residual();
        sol.x.erase(kx);
        sol.y[ky] = GradedPoly(1);
        const auto r2 = residual();
        sol.y.erase(ky);

        // rows: coefficient of X, coefficient of Y, right-hand side
        struct Row {
            mpq_class a, b;
            GradedPoly rhs;
        };
        std::vector<Row> rows;
        const int nrows = energy_level ? 3 : 2;
        for (int k = 0; k < nrows; ++k) {
            rows.push_back({constant_of(r1[k] - r0[k], "X"), constant_of(r2[k] - r0[k], "Y"), -r0[k]});
        }
        bool solved = false;
        for (int i = 0; i < nrows && !solved; ++i) {
            for (int j = i + 1; j < nrows && !solved; ++j) {
                const mpq_class det = rows[i].a * rows[j].b - rows[i].b * rows[j].a;
                if (det == 0) {
                    continue;
                }
                const GradedPoly X = (rows[i].rhs * mpq_class(rows[j].b) - rows[j].rhs * mpq_class(rows[i].b)) *
                                     mpq_class(1 / det);
                const GradedPoly Y = (rows[j].rhs * mpq_class(rows[i].a) - rows[i].rhs * mpq_class(rows[j].a)) *
                                     mpq_class(1 / det);
                for (int k = 0; k < nrows; ++k) {
                    if (!(X * mpq_class(rows[k].a) + Y * mpq_class(rows[k].b) - rows[k].rhs).is_zero()) {
                        throw InconsistencyError("laurent_engine: overdetermined level " + std::to_string(L) +
                                                 " is inconsistent");
                    }
                }
                add_to(sol.x, kx, X);
                add_to(sol.y, ky, Y);
                solved = true;
            }
        }
        if (!solved) {
            throw InconsistencyError("laurent_engine: recurrence determinant vanishes at level " +
                                     std::to_string(L) + " without an energy constraint");
        }
        sol.order = L;
    }
    return sol;
}

long recurrence_determinant(CurveType t, int n)
{
    switch (t) {
        case CurveType::A2:
            return 2L * (2 * n + 3) * (n - 2); // det [[2n, −2], [−6, 2n−1]]
        case CurveType::B2:
            return 2L * (2 * n + 3) * (n - 1); // det [[2n+1, −2], [−3, 2n]]
        case CurveType::G2:
            return static_cast<long>(n + 2) * (n - 2); // det [[n+1, −1], [−3, n−1]]
    }
    return 0;
}

bool Residuals::all_zero() const
{
    return hamilton_x.empty() && hamilton_y.empty() && energy.empty();
}

Residuals residual_check(const FormalSolution &sol)
{
    const Equations eq(sol.type);
    const auto &w = info(sol.type).wt;
    Residuals r;
    r.max_power_x = sol.x_max() - 1;
    r.max_power_y = sol.y_max() - 1;
    const mpq_class e = sol.x_max() + (w.x - w.F) / (-w.z);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), e.get_num_mpz_t(), e.get_den_mpz_t());
    r.max_power_energy = static_cast<int>(fl.get_si());

    const int maxp = std::max({r.max_power_x, r.max_power_y, r.max_power_energy});
    const FormalSeries fy = eval_bipoly(eq.Fy, sol.x, sol.y, maxp);
    const FormalSeries fx = eval_bipoly(eq.Fx, sol.x, sol.y, maxp);
    const FormalSeries f = eval_bipoly(eq.F, sol.x, sol.y, maxp);
    const FormalSeries dx = derivative(sol.x), dy = derivative(sol.y);
    for (const auto &[p, c] : dx) {
        if (p <= r.max_power_x) {
            add_to(r.hamilton_x, p, c);
        }
    }
    for (const auto &[p, c] : fy) {
        if (p <= r.max_power_x) {
            add_to(r.hamilton_x, p, -c);
        }
    }
    for (const auto &[p, c] : dy) {
        if (p <= r.max_power_y) {
            add_to(r.hamilton_y, p, c);
        }
    }
    for (const auto &[p, c] : fx) {
        if (p <= r.max_power_y) {
            add_to(r.hamilton_y, p, c);
        }
    }
    for (const auto &[p, c] : f) {
        if (p <= r.max_power_energy) {
            add_to(r.energy, p, c);
        }
    }
    return r;
}

FormalSolution apply_sigma(const FormalSolution &sol)
{
    FormalSolution r = sol;
    r.infinity = sol.infinity % info(sol.type).N + 1;
    switch (sol.type) {
        case CurveType::A2:
            break;
        case CurveType::B2:
            for (auto &kv : r.x) {
                kv.second = -kv.second;
            }
            for (auto &kv : r.y) {
                kv.second = -kv.second;
            }
            break;
        case CurveType::G2: {
            if (sol.x_lead != sol.y_lead) {
                throw std::logic_error("apply_sigma: mismatched supports");
            }
            r.x.clear();
            r.y.clear();
            for (int p = sol.x_lead; p <= sol.x_max(); ++p) {
                const GradedPoly X = sol.x_coeff(p), Y = sol.y_coeff(p);
                add_to(r.x, p, (Y - X) * mpq_class(1, 2));
                add_to(r.y, p, (X * mpq_class(-3) - Y) * mpq_class(1, 2));
            }
            break;
        }
    }
    return r;
}

bool weights_consistent(const FormalSolution &sol)
{
    const auto &w = info(sol.type).wt;
    for (const auto &[p, c] : sol.x) {
        const mpq_class want = w.x - w.z * p;
        auto got = c.weight(sol.type, want);
        if (!got || *got != want) {
            return false;
        }
    }
    for (const auto &[p, c] : sol.y) {
        const mpq_class want = w.y - w.z * p;
        auto got = c.weight(sol.type, want);
        if (!got || *got != want) {
            return false;
        }
    }
    return true;
}

std::string to_csv(const FormalSolution &sol)
{
    std::ostringstream os;
    os << "series,power,monomial,numerator,denominator\n";
    auto dump = [&os](const char *name, const FormalSeries &s) {
        for (const auto &[p, c] : s) {
            for (const auto &[e, q] : c.terms()) {
                os << name << ',' << p << ',' << GradedPoly::monomial_str(e.first, e.second) << ','
                   << q.get_num().get_str() << ',' << q.get_den().get_str() << '\n';
            }
        }
    };
    dump("x", sol.x);
    dump("y", sol.y);
    return os.str();
}

std::string to_json(const FormalSolution &sol)
{
    using nlohmann::ordered_json;
    auto series = [](const FormalSeries &s) {
        ordered_json arr = ordered_json::array();
        for (const auto &[p, c] : s) {
            ordered_json terms = ordered_json::array();
            for (const auto &[e, q] : c.terms()) {
                terms.push_back({{"monomial", GradedPoly::monomial_str(e.first, e.second)}, {"coefficient", q.get_str()}});
            }
            arr.push_back({{"power", p}, {"polynomial", c.str()}, {"terms", terms}});
        }
        return arr;
    };
    ordered_json j;
    j["type"] = type_name(sol.type);
    j["infinity"] = sol.infinity;
    j["order"] = sol.order;
    j["x"] = series(sol.x);
    j["y"] = series(sol.y);
    return j.dump(2);
}

} // namespace pf
