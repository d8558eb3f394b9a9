#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "periodforge/curve_family.hpp"
#include "periodforge/eisenstein.hpp"
#include "periodforge/elliptic_kernel.hpp"
#include "periodforge/identity_suite.hpp"
#include "periodforge/inversion.hpp"
#include "periodforge/laurent_engine.hpp"
#include "periodforge/modular_group.hpp"
#include "periodforge/periods.hpp"

namespace py = pybind11;

namespace
{

pf::Frame frame(pf::cplx w0, pf::cplx w1)
{
    return {w0, w1};
}

py::tuple frame_tuple(const pf::Frame &w)
{
    return py::make_tuple(w.w0, w.w1);
}

py::dict period_dict(const pf::PeriodResult &r)
{
    py::dict d;
    d["omega0"] = r.frame.w0;
    d["omega1"] = r.frame.w1;
    d["method"] = pf::method_name(r.method);
    d["residual"] = r.residual;
    d["iterations"] = r.iterations;
    d["continuation_steps"] = r.continuation_steps;
    return d;
}

pf::Report run_suite(const std::string &name, std::uint64_t seed)
{
    if (name == "monodromy") {
        return pf::suite_monodromy(seed);
    }
    if (name == "cusps") {
        return pf::suite_cusps();
    }
    if (name == "identities") {
        return pf::suite_identities(seed);
    }
    if (name == "roundtrip") {
        return pf::suite_roundtrip(seed);
    }
    if (name == "laurent") {
        return pf::suite_laurent();
    }
    if (name == "dynamics") {
        return pf::suite_dynamics(seed);
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_periodforge, m)
{
    m.doc() = "Period maps, Eisenstein series and Laurent solutions for the A2, B2 and G2 elliptic families";

    py::register_exception<pf::DegenerateFrameError>(m, "DegenerateFrameError", PyExc_ValueError);
    py::register_exception<pf::PoleError>(m, "PoleError", PyExc_ZeroDivisionError);
    py::register_exception<pf::DiscriminantError>(m, "DiscriminantError", PyExc_ValueError);
    py::register_exception<pf::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<pf::InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    auto t = [](const std::string &s) { return pf::parse_type(s); };

    m.def("evaluate_F", [t](const std::string &type, pf::cplx x, pf::cplx y, pf::cplx gs, pf::cplx gl) {
        return pf::evaluate_F(t(type), {x, y}, {gs, gl});
    }, py::arg("type"), py::arg("x"), py::arg("y"), py::arg("g_s"), py::arg("g_l"));
    m.def("discriminant", [t](const std::string &type, pf::cplx gs, pf::cplx gl) {
        return pf::discriminant(t(type), {gs, gl});
    }, py::arg("type"), py::arg("g_s"), py::arg("g_l"));

    m.def("wp", [](pf::cplx z, pf::cplx w0, pf::cplx w1) { return pf::wp(z, frame(w0, w1)); },
          py::arg("z"), py::arg("omega0"), py::arg("omega1"));
    m.def("wp_prime", [](pf::cplx z, pf::cplx w0, pf::cplx w1) { return pf::wp_prime(z, frame(w0, w1)); },
          py::arg("z"), py::arg("omega0"), py::arg("omega1"));
    m.def("wzeta", [](pf::cplx z, pf::cplx w0, pf::cplx w1) { return pf::wzeta(z, frame(w0, w1)); },
          py::arg("z"), py::arg("omega0"), py::arg("omega1"));
    m.def("dedekind_eta", &pf::dedekind_eta, py::arg("tau"));

    m.def("invert", [t](const std::string &type, pf::cplx w0, pf::cplx w1) {
        const auto r = pf::invert(t(type), frame(w0, w1));
        py::dict d;
        d["g_s"] = r.g.g_s;
        d["g_l"] = r.g.g_l;
        d["diagnostics"] = r.diagnostics;
        d["valid"] = r.valid;
        return d;
    }, py::arg("type"), py::arg("omega0"), py::arg("omega1"));
    m.def("x_of_z", [t](const std::string &type, pf::cplx z, pf::cplx w0, pf::cplx w1) {
        return pf::x_of_z(t(type), z, frame(w0, w1));
    }, py::arg("type"), py::arg("z"), py::arg("omega0"), py::arg("omega1"));
    m.def("y_of_z", [t](const std::string &type, pf::cplx z, pf::cplx w0, pf::cplx w1) {
        return pf::y_of_z(t(type), z, frame(w0, w1));
    }, py::arg("type"), py::arg("z"), py::arg("omega0"), py::arg("omega1"));

    m.def("periods", [t](const std::string &type, pf::cplx gs, pf::cplx gl, const std::string &method) {
        const auto ct = t(type);
        if (method == "agm") {
            if (ct != pf::CurveType::A2) {
                throw std::invalid_argument("the agm method is available for a2 only");
            }
            return period_dict(pf::periods_agm_a2({gs, gl}));
        }
        if (method != "newton") {
            throw std::invalid_argument("method must be 'newton' or 'agm'");
        }
        return period_dict(pf::periods_newton(ct, {gs, gl}));
    }, py::arg("type"), py::arg("g_s"), py::arg("g_l"), py::arg("method") = "newton");

    m.def("frame_equivalence", [t](const std::string &type, pf::cplx a0, pf::cplx a1, pf::cplx b0, pf::cplx b1) {
        const auto r = pf::frame_equivalence(t(type), frame(a0, a1), frame(b0, b1));
        return r ? py::object(py::make_tuple(r->a, r->b, r->c, r->d)) : py::object(py::none());
    }, py::arg("type"), py::arg("a0"), py::arg("a1"), py::arg("b0"), py::arg("b1"));
    m.def("generators", [t](const std::string &type) {
        const auto [A, B] = pf::generators(t(type));
        return py::make_tuple(py::make_tuple(A.a, A.b, A.c, A.d), py::make_tuple(B.a, B.b, B.c, B.d));
    }, py::arg("type"));
    m.def("act", [](std::tuple<long, long, long, long> m4, pf::cplx w0, pf::cplx w1) {
        const auto [a, b, c, d] = m4;
        return frame_tuple(pf::act(pf::Mat2Z{a, b, c, d}, frame(w0, w1)));
    }, py::arg("matrix"), py::arg("omega0"), py::arg("omega1"));

    m.def("series_csv", [t](const std::string &type, int infinity, int order) {
        return pf::to_csv(pf::solve_formal(t(type), infinity, order));
    }, py::arg("type"), py::arg("infinity") = 1, py::arg("order") = 16);
    m.def("series_json", [t](const std::string &type, int infinity, int order) {
        return pf::to_json(pf::solve_formal(t(type), infinity, order));
    }, py::arg("type"), py::arg("infinity") = 1, py::arg("order") = 16);

    m.def("verify_json", [](const std::string &suite, std::uint64_t seed) {
        return pf::to_json(run_suite(suite, seed)).dump();
    }, py::arg("suite"), py::arg("seed") = 20240601);
}
