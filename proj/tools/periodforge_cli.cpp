// Command-line front end: every subcommand prints JSON (or CSV for `series --format csv`).
// Exit codes: 0 success, 1 numerical failure (JSON error object on stdout), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "periodforge/elliptic_kernel.hpp"
#include "periodforge/eisenstein.hpp"
#include "periodforge/identity_suite.hpp"
#include "periodforge/inversion.hpp"
#include "periodforge/laurent_engine.hpp"
#include "periodforge/periods.hpp"

using nlohmann::ordered_json;
using pf::cplx;

namespace
{

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double parse_real(const std::string &s)
{
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        return parse_real(s.substr(0, slash)) / parse_real(s.substr(slash + 1));
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument(s);
    }
    return v;
}

// "1", "-2.5", "1/3", "10i", "-i", "0.2+1.1i", "0.2-1.1i", "[0.2,1.1]", "0.2,1.1"
cplx parse_complex(const std::string &text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '[' && c != ']') {
            s += c;
        }
    }
    try {
        if (s.empty()) {
            throw std::invalid_argument(s);
        }
        const auto comma = s.find(',');
        if (comma != std::string::npos) {
            return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
        }
        if (s.back() != 'i' && s.back() != 'j') {
            return {parse_real(s), 0.0};
        }
        s.pop_back();
        // split at the last sign that is not leading and not an exponent sign
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        auto coeff = [](const std::string &c) {
            return c.empty() || c == "+" ? 1.0 : c == "-" ? -1.0 : parse_real(c);
        };
        if (split == std::string::npos) {
            return {0.0, coeff(s)};
        }
        return {parse_real(s.substr(0, split)), coeff(s.substr(split))};
    } catch (const std::exception &) {
    }
    throw UsageError("cannot parse complex number '" + text + "'");
}

ordered_json cj(cplx z)
{
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json frame_json(const pf::Frame &w)
{
    return {{"omega0", cj(w.w0)}, {"omega1", cj(w.w1)}, {"tau", cj(w.tau())}};
}

pf::CurveType type_arg(const std::string &s)
{
    try {
        return pf::parse_type(s);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
}

// PERIODFORGE_PRECISION: standard (default) | strict | loose — scales default tolerances.
double precision_scale()
{
    const char *env = std::getenv("PERIODFORGE_PRECISION");
    const std::string p = env ? env : "standard";
    if (p.empty() || p == "standard") {
        return 1.0;
    }
    if (p == "strict") {
        return 0.1;
    }
    if (p == "loose") {
        return 10.0;
    }
    throw UsageError("PERIODFORGE_PRECISION must be standard, strict or loose (got '" + p + "')");
}

void print(const ordered_json &j)
{
    std::cout << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"periodforge: periods, Eisenstein series and inversion for the A2/B2/G2 elliptic families"};
    app.require_subcommand(1);

    // eval
    auto *eval = app.add_subcommand("eval", "Evaluate a kernel function on the lattice Z*omega0 + Z*omega1");
    std::string e_type = "a2", e_fn, e_w0 = "1", e_w1 = "i", e_shift = "0,0";
    std::vector<std::string> e_z;
    int e_weight = 4;
    eval->add_option("--type", e_type, "a2|b2|g2 (for the Gamma1(N) level of --fn G)")
        ->check(CLI::IsMember({"a2", "b2", "g2"}, CLI::ignore_case));
    eval->add_option("--fn", e_fn, "wp|wpprime|wzeta|eta|G")->required()->check(CLI::IsMember({"wp", "wpprime", "wzeta", "eta", "G"}));
    eval->add_option("--z", e_z, "evaluation point(s); repeat for a batch");
    eval->add_option("--omega0", e_w0, "first period");
    eval->add_option("--omega1", e_w1, "second period");
    eval->add_option("--shift", e_shift, "r0,r1: shift a = r0*omega0 + r1*omega1, r_i in (1/6)Z (for G)");
    eval->add_option("--weight", e_weight, "m >= 3 (for G)");

    // invert
    auto *inv = app.add_subcommand("invert", "Moduli (g_s, g_l) of a framed period pair");
    std::string i_type, i_w0 = "1", i_w1;
    inv->add_option("--type", i_type, "a2|b2|g2")->required();
    inv->add_option("--omega0", i_w0, "first period");
    inv->add_option("--omega1", i_w1, "second period")->required();

    // periods
    auto *per = app.add_subcommand("periods", "Periods (omega0, omega1) of a moduli point");
    std::string p_type, p_gs, p_gl, p_method = "newton";
    per->add_option("--type", p_type, "a2|b2|g2")->required();
    per->add_option("--gs", p_gs, "g_s")->required();
    per->add_option("--gl", p_gl, "g_l")->required();
    per->add_option("--method", p_method, "newton|agm")->check(CLI::IsMember({"newton", "agm"}));

    // series
    auto *ser = app.add_subcommand("series", "Exact Laurent solution at a point at infinity");
    std::string s_type, s_format = "json";
    int s_inf = 1, s_order = 16;
    ser->add_option("--type", s_type, "a2|b2|g2")->required();
    ser->add_option("--infinity", s_inf, "branch index 1..N");
    ser->add_option("--order", s_order, "levels past the leading pole")->check(CLI::Range(1, 200));
    ser->add_option("--format", s_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // qexp
    auto *qx = app.add_subcommand("qexp", "Fourier coefficients of a named form of tau");
    std::string q_expr;
    int q_nmax = 8;
    double q_height = 0.15;
    std::vector<std::string> names;
    for (const auto &f : pf::named_forms()) {
        names.push_back(f.name);
    }
    qx->add_option("--expr", q_expr, "form name")->required()->check(CLI::IsMember(names));
    qx->add_option("--nmax", q_nmax, "highest coefficient index")->check(CLI::Range(0, 64));
    qx->add_option("--height", q_height, "Im(tau) of the sampling line")->check(CLI::PositiveNumber);

    // verify
    auto *ver = app.add_subcommand("verify", "Run a certification suite; exit 0 iff every check passes");
    std::string v_suite;
    std::optional<double> v_tol;
    std::uint64_t v_seed = 20240601;
    int v_order = 12;
    ver->add_option("--suite", v_suite, "suite name")
        ->required()
        ->check(CLI::IsMember({"monodromy", "cusps", "identities", "roundtrip", "laurent", "dynamics", "jacobian",
                               "invariance", "all"}));
    ver->add_option("--tol", v_tol, "override the suite tolerance")->check(CLI::PositiveNumber);
    ver->add_option("--seed", v_seed, "seed for randomized samples");
    ver->add_option("--order", v_order, "Laurent order (laurent suite)")->check(CLI::Range(8, 100));

    // cusp
    auto *cus = app.add_subcommand("cusp", "Cusp values of the Eisenstein summands, flat coordinates and generators for one type");
    std::string c_type, c_which = "E";
    double c_height = 10.0;
    cus->add_option("--type", c_type, "a2|b2|g2")->required();
    cus->add_option("--which", c_which, "E|S")->check(CLI::IsMember({"E", "S"}));
    cus->add_option("--height", c_height, "evaluation height Im(tau)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        const double scale = precision_scale();
        if (*eval) {
            const pf::Frame w{parse_complex(e_w0), parse_complex(e_w1)};
            ordered_json out{{"fn", e_fn}, {"frame", frame_json(w)}};
            if (e_fn == "eta") {
                out["value"] = cj(pf::dedekind_eta(w.tau()));
            } else if (e_fn == "G") {
                const auto comma = e_shift.find(',');
                if (comma == std::string::npos) {
                    throw UsageError("--shift expects r0,r1");
                }
                auto frac = [](const std::string &s) {
                    mpq_class q;
                    if (q.set_str(s, 10) != 0) {
                        const double d = std::stod(s);
                        q = mpq_class(static_cast<long>(std::lround(d * 6)), 6);
                    }
                    q.canonicalize();
                    if (6 % q.get_den().get_si() != 0) {
                        throw UsageError("shift coordinates must lie in (1/6)Z");
                    }
                    return q;
                };
                const mpq_class r0 = frac(e_shift.substr(0, comma)), r1 = frac(e_shift.substr(comma + 1));
                const auto a = pf::ShiftPoint::from(static_cast<int>(r0.get_num().get_si()), static_cast<int>(r0.get_den().get_si()),
                                                    static_cast<int>(r1.get_num().get_si()), static_cast<int>(r1.get_den().get_si()));
                type_arg(e_type);
                out["weight"] = e_weight;
                out["shift"] = a.str();
                out["value"] = cj(pf::eisenstein_G(e_weight, a, w));
            } else {
                if (e_z.empty()) {
                    throw UsageError("--z is required for " + e_fn);
                }
                ordered_json rows = ordered_json::array();
                for (const auto &zs : e_z) {
                    const cplx z = parse_complex(zs);
                    const cplx v = e_fn == "wp" ? pf::wp(z, w) : e_fn == "wpprime" ? pf::wp_prime(z, w) : pf::wzeta(z, w);
                    rows.push_back({{"z", cj(z)}, {"value", cj(v)}});
                }
                out["results"] = rows;
            }
            print(out);
        } else if (*inv) {
            const auto t = type_arg(i_type);
            const pf::Frame w{parse_complex(i_w0), parse_complex(i_w1)};
            const auto r = pf::invert(t, w);
            ordered_json diag;
            for (const auto &[k, v] : r.diagnostics) {
                diag[k] = v;
            }
            print({{"type", pf::type_name(t)},
                   {"frame", frame_json(w)},
                   {"g_s", cj(r.g.g_s)},
                   {"g_l", cj(r.g.g_l)},
                   {"near_discriminant", r.near_discriminant},
                   {"valid", r.valid},
                   {"diagnostics", diag}});
        } else if (*per) {
            const auto t = type_arg(p_type);
            const pf::ModuliPoint g{parse_complex(p_gs), parse_complex(p_gl)};
            pf::PeriodResult r;
            if (p_method == "agm") {
                if (t != pf::CurveType::A2) {
                    throw UsageError("--method agm is only available for type a2");
                }
                r = pf::periods_agm_a2(g);
            } else {
                pf::NewtonOptions o;
                o.tol = std::min(1e-12 * scale, 1e-12);
                r = pf::periods_newton(t, g, {1.0, cplx(0.0, 1.0)}, o);
            }
            const auto &m = r.reduction;
            print({{"type", pf::type_name(t)},
                   {"method", pf::method_name(r.method)},
                   {"frame", frame_json(r.frame)},
                   {"residual", r.residual},
                   {"reduced", r.reduced},
                   {"reduction", {{m.a, m.b}, {m.c, m.d}}},
                   {"iterations", r.iterations},
                   {"continuation_steps", r.continuation_steps}});
        } else if (*ser) {
            const auto t = type_arg(s_type);
            if (s_inf < 1 || s_inf > pf::info(t).N) {
                throw UsageError("--infinity must lie in 1.." + std::to_string(pf::info(t).N) + " for " + pf::type_name(t));
            }
            const auto sol = pf::solve_formal(t, s_inf, s_order);
            std::cout << (s_format == "csv" ? pf::to_csv(sol) : pf::to_json(sol) + "\n");
        } else if (*qx) {
            const auto &nf = pf::named_form(q_expr);
            const auto q = pf::fourier_coefficients(nf.f, q_nmax, q_height);
            ordered_json coeffs = ordered_json::array();
            for (const auto &c : q.coeffs) {
                coeffs.push_back(cj(c));
            }
            ordered_json out{{"expr", q_expr}, {"height", q_height}, {"coefficients", coeffs}};
            if (nf.eta) {
                const auto ex = pf::eta_product_series(*nf.eta, q_nmax);
                ordered_json eta = ordered_json::array(), exact = ordered_json::array();
                for (const auto &f : *nf.eta) {
                    eta.push_back({{"m", f.m}, {"r", f.r}});
                }
                const long off = ex.offset.get_den() == 1 ? ex.offset.get_num().get_si() : 0;
                for (int n = 0; n <= q_nmax; ++n) {
                    const long k = n - off;
                    exact.push_back(k >= 0 && k <= q_nmax ? ex.coeffs[k].get_str() : "0");
                }
                out["eta_product"] = eta;
                out["q_offset"] = ex.offset.get_str();
                out["exact"] = exact;
            }
            print(out);
        } else if (*ver) {
            auto tol = [&](double def) { return v_tol.value_or(def * scale); };
            const auto frames = pf::sample_frames(v_seed, 20);
            pf::Report r;
            r.suite = v_suite;
            auto run = [&](const std::string &name) {
                if (name == "monodromy") {
                    r.append(pf::suite_monodromy(v_seed));
                } else if (name == "cusps") {
                    r.append(pf::suite_cusps(10.0, tol(1e-6)));
                } else if (name == "identities") {
                    r.append(pf::suite_identities(v_seed, tol(1e-8)));
                } else if (name == "roundtrip") {
                    r.append(pf::suite_roundtrip(v_seed, 50, tol(1e-9)));
                } else if (name == "laurent") {
                    r.append(pf::suite_laurent(v_order));
                } else if (name == "dynamics") {
                    r.append(pf::suite_dynamics(v_seed));
                } else if (name == "jacobian") {
                    for (const auto t : pf::all_types()) {
                        r.append(pf::verify_jacobian(t, frames, tol(1e-6)));
                    }
                } else if (name == "invariance") {
                    for (const auto t : pf::all_types()) {
                        r.append(pf::verify_invariance(t, frames, tol(1e-9)));
                    }
                }
            };
            if (v_suite == "all") {
                for (const char *s : {"monodromy", "cusps", "identities", "roundtrip", "laurent", "dynamics", "jacobian", "invariance"}) {
                    run(s);
                }
            } else {
                run(v_suite);
            }
            auto j = pf::to_json(r);
            j["seed"] = v_seed;
            print(j);
            return r.pass() ? 0 : 1;
        } else if (*cus) {
            const auto t = type_arg(c_type);
            const pf::Cusp which = c_which == "E" ? pf::Cusp::E : pf::Cusp::S;
            ordered_json out{{"type", pf::type_name(t)}, {"which", c_which}, {"height", c_height}};
            ordered_json rows = ordered_json::array();
            for (const auto &row : pf::cusp_rows()) {
                if (row.type != t || row.cusp != which) {
                    continue;
                }
                const cplx v = pf::slash_value(row.f, row.weight, which, c_height);
                if (row.group == "flat") {
                    out[row.label] = cj(v);
                    out[row.label + "_expected"] = row.expected_text;
                }
                ordered_json e{{"group", row.group},
                               {"label", row.label},
                               {"weight", row.weight},
                               {"value", cj(v)},
                               {"expected", row.expected_text},
                               {"expected_value", cj(row.expected)},
                               {"error", std::abs(v - row.expected)}};
                if (row.reference) {
                    e["reference"] = *row.reference;
                }
                rows.push_back(e);
            }
            out["rows"] = rows;
            print(out);
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::string kind = "Error";
        if (dynamic_cast<const pf::PoleError *>(&e)) {
            kind = "PoleError";
        } else if (dynamic_cast<const pf::DiscriminantError *>(&e)) {
            kind = "DiscriminantError";
        } else if (dynamic_cast<const pf::ConvergenceError *>(&e)) {
            kind = "ConvergenceError";
        } else if (dynamic_cast<const pf::DegenerateFrameError *>(&e)) {
            kind = "DegenerateFrameError";
        } else if (dynamic_cast<const pf::InconsistencyError *>(&e)) {
            kind = "InconsistencyError";
        } else if (dynamic_cast<const std::domain_error *>(&e)) {
            kind = "DomainError";
        } else if (dynamic_cast<const std::invalid_argument *>(&e) || dynamic_cast<const std::out_of_range *>(&e)) {
            kind = "InvalidArgument";
        }
        print({{"error", {{"kind", kind}, {"message", e.what()}}}});
        return 1;
    }
    return 0;
}
