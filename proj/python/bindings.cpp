// Python surface: the JSON job/report layer exposed as dict -> dict calls,
// plus small helpers for the expression grammar. Exact values cross the
// boundary as strings, exactly as they do on the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "groupdim/errors.hpp"
#include "groupdim/json_io.hpp"
#include "groupdim/parse.hpp"

namespace py = pybind11;
using groupdim::Json;

namespace {

Json to_json(py::handle obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json arr = Json::array();
        for (py::handle v : obj) arr.push_back(to_json(v));
        return arr;
    }
    if (py::isinstance<py::dict>(obj)) {
        Json o = Json::object();
        for (auto item : obj.cast<py::dict>()) {
            if (!py::isinstance<py::str>(item.first))
                throw py::type_error("job keys must be strings");
            o[item.first.cast<std::string>()] = to_json(item.second);
        }
        return o;
    }
    throw py::type_error("unsupported value in job: " +
                         py::cast<std::string>(py::repr(obj)));
}

py::object from_json(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& v : j) out.append(from_json(v));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items()) out[py::str(k)] = from_json(v);
            return out;
        }
        default: return py::none();
    }
}

py::object job_call(py::dict job, Json (*fn)(const groupdim::JobInput&)) {
    return from_json(fn(groupdim::parse_job(to_json(job))));
}

}  // namespace

PYBIND11_MODULE(groupdim, m) {
    m.doc() = "complex dimension of closures of finitely generated subgroups of R^n";

    py::register_exception<groupdim::InternalInvariantViolation>(m, "InternalInvariantViolation",
                                                                 PyExc_RuntimeError);
    py::register_exception<groupdim::Error>(m, "GroupdimError", PyExc_ValueError);

    m.def(
        "dim",
        [](py::dict job) {
            return from_json(groupdim::run_dim(groupdim::parse_job(to_json(job))));
        },
        py::arg("job"),
        "Complex dimension report {p, r, q, rank_MH, dense_in_span, dense_in_ambient, ...}");
    m.def(
        "dense",
        [](py::dict job) {
            return from_json(groupdim::run_dense(groupdim::parse_job(to_json(job))));
        },
        py::arg("job"), "Density verdict for the job's group");
    m.def(
        "mh",
        [](py::dict job) {
            return from_json(groupdim::run_mh(groupdim::parse_job(to_json(job))));
        },
        py::arg("job"), "Full M_H construction trace");
    m.def(
        "densify", [](py::dict job) { return job_call(job, &groupdim::run_densify); },
        py::arg("job"), "A generator u making H + Zu dense in vect(H)");
    m.def(
        "closure", [](py::dict job) { return job_call(job, &groupdim::run_closure); },
        py::arg("job"), "Candidate F + discrete decomposition of closure(H)");
    m.def(
        "morphism", [](py::dict job) { return from_json(groupdim::run_morphism(to_json(job))); },
        py::arg("job"), "Closed-group homomorphism analysis (injective/surjective/image/kernel)");
    m.def(
        "relation", [](py::dict job) { return from_json(groupdim::run_relation(to_json(job))); },
        py::arg("job"), "Certified integer relation among the numbers in job['xs'], if any");
    m.def(
        "oracle",
        [](py::dict job, std::vector<std::size_t> axes, long long bound, double epsilon) {
            groupdim::OracleOptions oo;
            oo.coefficient_bound = bound;
            oo.epsilon = epsilon;
            groupdim::JobInput j = groupdim::parse_job(to_json(job));
            if (axes.empty())
                for (std::size_t a = 1; a <= j.n; ++a) axes.push_back(a);
            return from_json(groupdim::oracle_report(j, axes, oo));
        },
        py::arg("job"), py::arg("axes") = std::vector<std::size_t>{}, py::arg("bound") = 1000,
        py::arg("epsilon") = 0.01,
        "Finite epsilon-net density check over 1-based target axes (default: all)");

    m.def(
        "parse",
        [](const std::string& expr) { return groupdim::render(groupdim::parse_real(expr)); },
        py::arg("expr"), "Parse an expression and return its canonical rendering");
    m.def(
        "eval_decimal",
        [](const std::string& expr, int digits) {
            return groupdim::parse_real(expr).eval(digits).str();
        },
        py::arg("expr"), py::arg("digits") = 12,
        "Correctly rounded decimal approximation of an expression");
}
