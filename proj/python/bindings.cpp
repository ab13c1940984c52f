#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slat/bvp.hpp"
#include "slat/geometry.hpp"
#include "slat/operators.hpp"
#include "slat/oracle.hpp"
#include "slat/problems.hpp"
#include "slat/series.hpp"

namespace py = pybind11;
using namespace slat;

namespace {

std::vector<std::vector<double>> matrix_rows(const OperatorMatrix& m) {
    std::vector<std::vector<double>> out(m.size(), std::vector<double>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j);
    return out;
}

py::dict net_dict(const CharacteristicNet& net) {
    py::list alpha, beta, x, y, phi, sigma;
    for (const NetNode& n : net.nodes()) {
        alpha.append(n.alpha);
        beta.append(n.beta);
        x.append(n.x);
        y.append(n.y);
        phi.append(n.phi);
        sigma.append(n.sigma);
    }
    py::dict d;
    d["n_alpha"] = net.n_alpha();
    d["n_beta"] = net.n_beta();
    d["alpha"] = alpha;
    d["beta"] = beta;
    d["x"] = x;
    d["y"] = y;
    d["phi"] = phi;
    d["sigma"] = sigma;
    return d;
}

}  // namespace

PYBIND11_MODULE(_slat, m) {
    m.doc() = "slip-line analytic technique: series solvers for plane-strain "
              "rigid-plastic flow";

    py::class_<FactorialSeries>(m, "FactorialSeries")
        .def(py::init<std::vector<double>>())
        .def("eval", py::overload_cast<double>(&FactorialSeries::eval, py::const_))
        .def("eval_terms",
             py::overload_cast<double, std::size_t>(&FactorialSeries::eval, py::const_))
        .def("coeffs", &FactorialSeries::coeffs)
        .def("__len__", &FactorialSeries::size)
        .def("__getitem__",
             [](const FactorialSeries& s, std::size_t i) { return s[i]; });

    m.def("hyp0f1", &hyp0f1, py::arg("n"), py::arg("z"));
    m.def("tail_bound", &tail_bound, py::arg("q"), py::arg("p"), py::arg("terms"));
    m.def("tail_bound_bounded", &tail_bound_bounded, py::arg("m"), py::arg("p"), py::arg("terms"));

    m.def("matrix_A", [](double t, std::size_t n) { return matrix_rows(matrix_A(t, n)); });
    m.def("matrix_B", [](double t, std::size_t n) { return matrix_rows(matrix_B(t, n)); });
    m.def("matrix_C", [](double eta, std::size_t n) { return matrix_rows(matrix_C(eta, n)); });
    m.def("matrix_D", [](double eta, std::size_t n) { return matrix_rows(matrix_D(eta, n)); });
    m.def("matrix_F", [](std::size_t n) { return matrix_rows(matrix_F(n)); });
    m.def("matrix_T", [](double eta, std::size_t n) { return matrix_rows(matrix_T(eta, n)); });

    m.def("match_cauchy_const", [](const FactorialSeries& r, double eta, std::size_t n) {
        auto rows = match_cauchy_const(r, eta, n);
        return py::make_tuple(rows.a, rows.b);
    });
    m.def("match_free_surface", &match_free_surface);
    m.def("match_mixed_straight", &match_mixed_straight);

    py::class_<SlipLineField>(m, "SlipLineField")
        .def_property_readonly("a", &SlipLineField::a)
        .def_property_readonly("b", &SlipLineField::b)
        .def_property_readonly("sigma0", &SlipLineField::sigma0)
        .def_property_readonly("k", &SlipLineField::k)
        .def("radius_alpha",
             py::overload_cast<double, double, std::size_t>(&SlipLineField::radius_alpha,
                                                            py::const_))
        .def("radius_beta",
             py::overload_cast<double, double, std::size_t>(&SlipLineField::radius_beta,
                                                            py::const_));

    m.def("solve_initial_char", &solve_initial_char, py::arg("a"), py::arg("b"),
          py::arg("sigma0") = 0.0, py::arg("k") = 1.0);
    py::enum_<Family>(m, "Family").value("alpha", Family::alpha).value("beta", Family::beta);
    m.def("solve_fan", &solve_fan, py::arg("nonzero"), py::arg("which"), py::arg("sigma0") = 0.0,
          py::arg("k") = 1.0);

    py::enum_<BetaOrientation>(m, "BetaOrientation")
        .value("mirrored", BetaOrientation::mirrored)
        .value("identity_consistent", BetaOrientation::identity_consistent);
    py::class_<CauchyBoundary>(m, "CauchyBoundary")
        .def(py::init<FactorialSeries, double>(), py::arg("r"), py::arg("eta"))
        .def_static("from_tractions", &CauchyBoundary::from_tractions, py::arg("r"),
                    py::arg("sigma_n"), py::arg("tau_n"), py::arg("k") = 1.0)
        .def_readonly("eta", &CauchyBoundary::eta)
        .def("boundary_mean_stress", &CauchyBoundary::boundary_mean_stress, py::arg("k") = 1.0);
    m.def("solve_cauchy_const", &solve_cauchy_const, py::arg("boundary"), py::arg("sigma0"),
          py::arg("k"), py::arg("n"), py::arg("orientation") = BetaOrientation::mirrored);

    m.def("solve_free_surface", [](const FactorialSeries& a, double sigma0, double k,
                                   std::size_t n) {
        auto sol = solve_free_surface(a, sigma0, k, n);
        return py::make_tuple(sol.field, sol.r);
    });
    m.def("solve_mixed_straight", &solve_mixed_straight, py::arg("a"), py::arg("eta"),
          py::arg("sigma0"), py::arg("k"), py::arg("n"));

    py::class_<StressState>(m, "StressState")
        .def_readonly("sigma", &StressState::sigma)
        .def_readonly("phi", &StressState::phi)
        .def_readonly("s11", &StressState::s11)
        .def_readonly("s22", &StressState::s22)
        .def_readonly("s12", &StressState::s12)
        .def_readonly("s1", &StressState::s1)
        .def_readonly("s2", &StressState::s2);
    m.def("stress_at", &stress_at);

    py::class_<Pose>(m, "Pose")
        .def(py::init<>())
        .def(py::init([](double x, double y, double phi) { return Pose{x, y, phi}; }))
        .def_readwrite("x", &Pose::x)
        .def_readwrite("y", &Pose::y)
        .def_readwrite("phi", &Pose::phi);

    m.def(
        "build_net",
        [](const SlipLineField& f, std::size_t na, std::size_t nb, double a0, double a1, double b0,
           double b1, const Pose& origin, std::size_t terms) {
            NetOptions opt;
            opt.terms = terms;
            return net_dict(build_net(f, na, nb, a0, a1, b0, b1, origin, opt));
        },
        py::arg("field"), py::arg("n_alpha"), py::arg("n_beta"), py::arg("alpha0"),
        py::arg("alpha1"), py::arg("beta0"), py::arg("beta1"), py::arg("origin"),
        py::arg("terms") = 16);

    m.def("fd_telegraph", [](const std::function<double(double)>& ea,
                             const std::function<double(double)>& eb, double A, double B,
                             std::size_t steps, int sign) {
        auto g = oracle::fd_telegraph(ea, eb, A, B, steps, sign);
        return py::make_tuple(g.ha, g.hb, g.f);
    }, py::arg("edge_alpha"), py::arg("edge_beta"), py::arg("A"), py::arg("B"), py::arg("steps"),
       py::arg("sign") = 1);
    m.def("ellipse_radius_of_alpha", &oracle::ellipse_radius_of_alpha);
    m.def("ellipse_curvature_param", [](double t, double b) {
        auto p = oracle::ellipse_curvature_param(t, b);
        return py::make_tuple(p.rho, p.gamma, p.alpha);
    });

    m.def("run_extrusion", [](double gamma, double alpha1, double beta1, double face_length,
                              std::size_t terms, std::size_t grid) {
        ExtrusionConfig cfg;
        cfg.gamma = gamma;
        cfg.alpha1 = alpha1;
        cfg.beta1 = beta1;
        cfg.face_length = face_length;
        cfg.terms = terms;
        cfg.grid_alpha = cfg.grid_beta = grid;
        ExtrusionReport rep = run_extrusion(cfg);
        py::dict d;
        d["x_E"] = rep.x_E;
        d["y_E"] = rep.y_E;
        d["H"] = rep.H;
        d["h_exit"] = rep.h_exit;
        d["P_over_H"] = rep.P_over_H;
        d["p_B"] = rep.p_B;
        d["p_D"] = rep.p_D;
        d["sigma_hat"] = rep.sigma_hat;
        d["net"] = net_dict(rep.net);
        return d;
    }, py::arg("gamma"), py::arg("alpha1"), py::arg("beta1"), py::arg("face_length") = 2.0,
       py::arg("terms") = 16, py::arg("grid") = 33);

    m.def("run_elliptic_hole", [](double axis_ratio, double pressure, std::size_t terms,
                                  std::size_t grid, std::size_t profile_points) {
        EllipticHoleConfig cfg;
        cfg.axis_ratio = axis_ratio;
        cfg.pressure = pressure;
        cfg.terms = terms;
        cfg.grid = grid;
        cfg.profile_points = profile_points;
        EllipticHoleReport rep = run_elliptic_hole(cfg);
        py::dict d;
        d["r_coeffs"] = rep.r_row.coeffs();
        d["r_fit_error"] = rep.r_fit_error;
        d["convergence_warning"] = rep.convergence_warning;
        d["vertex"] = py::make_tuple(rep.vertex.x, rep.vertex.y);
        d["vertex_error"] = rep.vertex_error;
        d["mirror_symmetry_error"] = rep.mirror_symmetry_error;
        py::list xi, delta;
        for (const AxisSample& s : rep.profile) {
            xi.append(s.xi);
            delta.append(s.delta);
        }
        d["xi"] = xi;
        d["delta_2k"] = delta;
        return d;
    }, py::arg("axis_ratio") = 0.4, py::arg("pressure") = 1.0, py::arg("terms") = 15,
       py::arg("grid") = 17, py::arg("profile_points") = 17);
}
