#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <tuple>

#include "stark_toric/dynamics.hpp"
#include "stark_toric/elliptic.hpp"
#include "stark_toric/errors.hpp"
#include "stark_toric/levi_civita.hpp"
#include "stark_toric/periods.hpp"
#include "stark_toric/stark_model.hpp"
#include "stark_toric/toric_profile.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace stark_toric;

namespace {

// States cross the boundary as flat tuples: (q1, q2, p1, p2) and (z1, w1, z2, w2).
using Flat4 = std::array<double, 4>;

PlanarState planar(const Flat4& v) { return {{v[0], v[1]}, {v[2], v[3]}}; }
Flat4 flat(const PlanarState& s) { return {s.q[0], s.q[1], s.p[0], s.p[1]}; }

FieldStrength field(double eps) { return FieldStrength(eps); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planar Stark problem as a concave toric domain";

    // translators run newest first, so bases are registered before subclasses
    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<RegimeError>(m, "RegimeError", domain_error.ptr());
    auto numerical_error = py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<CollisionError>(m, "CollisionError", numerical_error.ptr());
    py::register_exception<EscapeError>(m, "EscapeError", numerical_error.ptr());

    py::enum_<OscillatorSelector>(m, "Selector")
        .value("PLUS", OscillatorSelector::Plus)
        .value("MINUS", OscillatorSelector::Minus);
    py::enum_<Scheme>(m, "Scheme")
        .value("LEAPFROG2", Scheme::Leapfrog2)
        .value("YOSHIDA4", Scheme::Yoshida4);

    py::class_<IntegratorSpec>(m, "IntegratorSpec")
        .def(py::init([](double step, Scheme scheme, std::int64_t max_steps) {
                 IntegratorSpec s{step, scheme, max_steps};
                 s.validate();
                 return s;
             }),
             py::arg("step") = 1e-3, py::arg("scheme") = Scheme::Yoshida4,
             py::arg("max_steps") = 10'000'000)
        .def_readwrite("step", &IntegratorSpec::step)
        .def_readwrite("scheme", &IntegratorSpec::scheme)
        .def_readwrite("max_steps", &IntegratorSpec::max_steps);

    // elliptic
    m.def("ellip_k", [](double x) { return ellip_k(EllipticModulus(x)); }, py::arg("m"));
    m.def("ellip_k_oracle", [](double x) { return ellip_k_oracle(EllipticModulus(x)); }, py::arg("m"));
    m.def("ellip_k_d1", [](double x) { return ellip_k_d1(EllipticModulus(x)); }, py::arg("m"));
    m.def("ellip_k_d2", [](double x) { return ellip_k_d2(EllipticModulus(x)); }, py::arg("m"));
    m.def("log_k_d1", [](double x) { return log_k_d1(EllipticModulus(x)); }, py::arg("m"));

    // stark model
    m.def("potential", [](std::array<double, 2> q, double eps) { return potential(q, field(eps)); },
          py::arg("q"), py::arg("eps"));
    m.def("hamiltonian", [](const Flat4& s, double eps) { return hamiltonian(planar(s), field(eps)); },
          py::arg("state"), py::arg("eps"));
    m.def("critical_value", [](double eps) { return critical_value(field(eps)); }, py::arg("eps"));
    m.def("hill_classify",
          [](std::array<double, 2> q, double eps) {
              return std::string(to_string(hill_classify(q, field(eps))));
          },
          py::arg("q"), py::arg("eps"));
    m.def("hill_components",
          [](double eps) { return hill_components(field(eps)).count; }, py::arg("eps"));

    // Levi-Civita
    m.def("lc_lift", [](const Flat4& s) { return flat(lc_lift(regularized_from_array(s))); },
          py::arg("state"));
    m.def("regularized_energy",
          [](const Flat4& s, double eps) { return regularized_energy(regularized_from_array(s), field(eps)); },
          py::arg("state"), py::arg("eps"));

    // periods
    m.def("phi", &phi, py::arg("x"));
    m.def("log_phi_d1", &log_phi_d1, py::arg("x"));
    m.def("turning_point",
          [](double eps, double c, OscillatorSelector sel) { return turning_point(field(eps), c, sel); },
          py::arg("eps"), py::arg("c"), py::arg("selector"));
    m.def("tau1", [](double eps, double c) { return tau1(field(eps), c); }, py::arg("eps"), py::arg("c"));
    m.def("tau2", [](double eps, double c) { return tau2(field(eps), c); }, py::arg("eps"), py::arg("c"));
    m.def("period_oracle",
          [](double eps, double c, OscillatorSelector sel) { return period_oracle(field(eps), c, sel); },
          py::arg("eps"), py::arg("c"), py::arg("selector"));

    // toric profile
    m.def("action_T",
          [](double eps, double c, OscillatorSelector sel) { return action_T(field(eps), c, sel); },
          py::arg("eps"), py::arg("c"), py::arg("selector"));
    m.def("moment_image",
          [](double eps, double c) {
              const auto p = moment_image(field(eps), c);
              return std::make_tuple(p.x, p.y);
          },
          py::arg("eps"), py::arg("c"));
    m.def("profile_slope", [](double eps, double c) { return profile_slope(field(eps), c); },
          py::arg("eps"), py::arg("c"));
    m.def("profile_second_derivative",
          [](double eps, double c) { return profile_second_derivative(field(eps), c); },
          py::arg("eps"), py::arg("c"));
    m.def("profile_sample",
          [](double eps, int n) {
              const ToricProfile p = profile_sample(field(eps), n);
              py::dict out;
              std::vector<double> c, x, y;
              for (const auto& s : p.samples) {
                  c.push_back(s.c);
                  x.push_back(s.x);
                  y.push_back(s.y);
              }
              out["c"] = c;
              out["x"] = x;
              out["y"] = y;
              out["slope"] = p.slopes;
              out["f_second"] = p.second_derivs;
              return out;
          },
          py::arg("eps"), py::arg("n"));
    m.def("verify_convexity",
          [](double eps, int n, double tol) {
              const ConvexityCertificate cert = verify_convexity(field(eps), n, tol);
              py::dict out;
              out["eps"] = cert.eps;
              out["c_grid"] = cert.c_grid;
              out["f_second"] = cert.f_second;
              out["min_f_second"] = cert.min_f_second;
              out["max_fd_residual"] = cert.max_fd_residual;
              out["fd_points"] = cert.fd_points;
              out["tol"] = cert.tol;
              out["verdict"] = cert.pass ? "pass" : "fail";
              return out;
          },
          py::arg("eps"), py::arg("n") = 201, py::arg("tol") = 1e-4);

    // dynamics
    m.def("measure_period",
          [](double eps, double c, OscillatorSelector sel, const IntegratorSpec& spec) {
              return measure_period(field(eps), c, sel, spec);
          },
          py::arg("eps"), py::arg("c"), py::arg("selector"), py::arg("spec") = IntegratorSpec{});
    m.def("torus_act",
          [](double t1, double t2, const Flat4& s, double eps, const IntegratorSpec& spec) {
              return to_array(torus_act(t1, t2, regularized_from_array(s), field(eps), spec));
          },
          py::arg("t1"), py::arg("t2"), py::arg("state"), py::arg("eps"),
          py::arg("spec") = IntegratorSpec{});
    m.def("flow_equivalence",
          [](const Flat4& s, double eps, double s_duration, const IntegratorSpec& spec) {
              return flow_equivalence(regularized_from_array(s), field(eps), spec, s_duration);
          },
          py::arg("state"), py::arg("eps"), py::arg("s_duration"), py::arg("spec") = IntegratorSpec{});

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
