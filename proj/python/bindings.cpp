#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skein/closure.hpp"
#include "skein/power_sums.hpp"
#include "skein/threading.hpp"
#include "skein/verify.hpp"

namespace py = pybind11;
using namespace skein;

namespace {

BraidWord make_braid(const std::vector<int>& letters, int strands) {
    int widest = 1;
    for (int l : letters) widest = std::max(widest, std::abs(l) + 1);
    return BraidWord(strands > 0 ? strands : widest, letters);
}

std::vector<verify::CheckJob> jobs_for(const std::string& name, int size, std::uint64_t seed) {
    if (name == "braidsum") return verify::braidsum_jobs(size);
    if (name == "murphy") return verify::murphy_jobs(size);
    if (name == "mirror") return verify::mirror_jobs(size);
    if (name == "adiff") return verify::adiff_jobs(size);
    if (name == "ah") return verify::ah_jobs(size);
    if (name == "centrality") return verify::centrality_jobs(size);
    if (name == "affine") return verify::affine_jobs(size);
    if (name == "alpha") return verify::alpha_jobs(size);
    if (name == "pm_value") return verify::pm_value_jobs(size);
    if (name == "properties") return verify::property_jobs(seed, size);
    throw std::invalid_argument("unknown check: " + name);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hecke algebra, Markov trace and annulus skein computations";
    m.attr("__version__") = SKEIN_VERSION;

    py::register_exception<InexactDivision>(m, "InexactDivision", PyExc_ArithmeticError);
    py::register_exception<ArithmeticOverflow>(m, "ArithmeticOverflow", PyExc_OverflowError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<SkeinIdentityError>(m, "SkeinIdentityError", PyExc_RuntimeError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init<std::int64_t>(), py::arg("value") = 0)
        .def_static("monomial", &Scalar::monomial, py::arg("coef"), py::arg("v_exp"), py::arg("s_exp"))
        .def_static("v", &Scalar::v)
        .def_static("s", &Scalar::s)
        .def_static("z", &Scalar::z)
        .def("bar", &Scalar::bar)
        .def("is_polynomial", &Scalar::is_polynomial)
        .def("is_zero", &Scalar::is_zero)
        .def("__pow__", &Scalar::pow)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Scalar::to_string)
        .def("__repr__", [](const Scalar& x) { return "Scalar(" + x.to_string() + ")"; });
    py::implicitly_convertible<std::int64_t, Scalar>();

    m.def("qint", &qint, py::arg("m"), "Quantum integer [m]");
    m.def("delta", &delta, "Value of the zero-framed unknot");

    py::class_<HeckeElem>(m, "HeckeElem")
        .def_static("identity", &HeckeElem::identity, py::arg("n"))
        .def_static("generator", &HeckeElem::generator, py::arg("n"), py::arg("i"), py::arg("sign") = 1)
        .def_property_readonly("strands", &HeckeElem::strands)
        .def("__len__", &HeckeElem::size)
        .def("terms",
             [](const HeckeElem& x) {
                 std::vector<std::pair<std::vector<int>, Scalar>> out;
                 for (const auto& [p, c] : x.expand()) out.emplace_back(p.one_line(), c);
                 return out;
             },
             "List of (one-line permutation, coefficient)")
        .def("commutes_with_generators",
             [](const HeckeElem& x) {
                 for (int i = 1; i < x.strands(); ++i)
                     if (!(x.generator_mul(i) == x.mul_by_generator(i))) return false;
                 return true;
             })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Scalar())
        .def(py::self == py::self)
        .def("__str__", &HeckeElem::to_string);

    m.def("eval_word", [](const std::vector<int>& letters, int strands) { return eval_word(make_braid(letters, strands)); },
          py::arg("letters"), py::arg("strands") = 0, "Image of a braid word in H_n");
    m.def("partial_close", &partial_close, py::arg("x"));
    m.def("markov_trace", &markov_trace, py::arg("x"));
    m.def("murphy_power_sum", &murphy_power_sum, py::arg("m"), py::arg("n"));

    py::class_<AnnulusElem>(m, "AnnulusElem")
        .def(py::init<std::int64_t>(), py::arg("value") = 0)
        .def("mirror", &AnnulusElem::mirror)
        .def("top_degree", &AnnulusElem::top_degree)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Scalar())
        .def(py::self == py::self)
        .def("__str__", &AnnulusElem::to_string);

    m.def("h", &AnnulusElem::h, py::arg("i"), "The generator h_i");
    m.def("power_sum", &power_sum, py::arg("m"));
    m.def("braid_A", &braid_A, py::arg("m"));
    m.def("pi_sum", &pi_sum, py::arg("m"));
    m.def("evaluate", &evaluate, py::arg("x"));
    m.def("thread", &thread, py::arg("x"), py::arg("n"), "psi_n of an annulus element");
    m.def("thread_braid",
          [](const std::vector<int>& letters, int n, int strands) { return thread_braid(make_braid(letters, strands), n); },
          py::arg("letters"), py::arg("n"), py::arg("strands") = 0);

    m.def("verify",
          [](const std::string& name, int size, std::uint64_t seed, int jobs) {
              py::list out;
              std::vector<verify::VerificationReport> reports;
              {
                  py::gil_scoped_release release;
                  reports = verify::run_jobs(jobs_for(name, size, seed), jobs);
              }
              for (const auto& r : reports) {
                  py::dict d;
                  d["check"] = r.check;
                  py::dict params;
                  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
                  d["params"] = params;
                  d["status"] = verify::to_string(r.status);
                  d["lhs"] = r.lhs;
                  d["rhs"] = r.rhs;
                  d["note"] = r.note;
                  out.append(d);
              }
              return out;
          },
          py::arg("check"), py::arg("size"), py::arg("seed") = 20240601, py::arg("jobs") = 1,
          "Run one family of checks; returns a list of report dicts");
}
