#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <vector>

#include "ocl8/cauchy.hpp"
#include "ocl8/experiments.hpp"
#include "ocl8/octonion.hpp"
#include "ocl8/report.hpp"

namespace py = pybind11;
using namespace ocl8;

namespace {

Octonion<double> to_oct(const std::array<double, 8>& a) { return Octonion<double>(a); }

std::array<double, 8> from_oct(const Octonion<double>& o) {
    std::array<double, 8> a;
    for (int i = 0; i < 8; ++i) a[i] = o[i];
    return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "octonionic Clifford analysis core";

    m.def("oct_mul", [](const std::array<double, 8>& a, const std::array<double, 8>& b) {
        return from_oct(oct_mul(to_oct(a), to_oct(b)));
    });
    m.def("oct_conj",
          [](const std::array<double, 8>& a) { return from_oct(oct_conj(to_oct(a))); });
    m.def("oct_inner", [](const std::array<double, 8>& a, const std::array<double, 8>& b) {
        return oct_inner(to_oct(a), to_oct(b));
    });
    m.def("associator",
          [](const std::array<double, 8>& a, const std::array<double, 8>& b,
             const std::array<double, 8>& c) {
              return from_oct(associator(to_oct(a), to_oct(b), to_oct(c)));
          });

    m.def("mult_table", []() {
        const OctTable& t = oct_table();
        std::vector<std::vector<int>> rows(8, std::vector<int>(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) rows[i][j] = t.sign[i][j] * (t.idx[i][j] + 1);
        return rows;  // signed 1-based basis index, e.g. -4 means -e3
    });

    m.def("omega", &omega);
    m.def("poisson_kernel", [](int n, double t, const std::vector<double>& x) {
        return poisson_kernel(n, t, x.data(), int(x.size()));
    });
    m.def("conj_poisson_kernel", [](int n, int j, double t, const std::vector<double>& x) {
        return conj_poisson_kernel(n, j, t, x.data(), int(x.size()));
    });
    m.def("cauchy_kernel",
          [](const std::array<double, 8>& x) { return from_oct(cauchy_kernel_oct(to_oct(x))); });

    m.def("scenario_names", &scenario_names);
    m.def(
        "run_scenario",
        [](const std::string& name, std::uint64_t seed, py::object d, py::object n) {
            ScenarioConfig cfg;
            cfg.seed = seed;
            if (!d.is_none()) cfg.d = d.cast<int>();
            if (!n.is_none()) cfg.n = n.cast<int>();
            Suite s = run_scenarios({name}, cfg);
            return to_json(s, true);
        },
        py::arg("name"), py::arg("seed") = 0, py::arg("d") = py::none(),
        py::arg("n") = py::none());
}
