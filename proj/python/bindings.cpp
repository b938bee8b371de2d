#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cremona/api.hpp"
#include "cremona/parse.hpp"

namespace py = pybind11;

namespace {

using cremona::api::json;

py::object json_to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null:
        return py::none();
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& e : j)
            out.append(json_to_py(e));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items())
            out[py::str(k)] = json_to_py(v);
        return out;
    }
    default:
        return py::none();
    }
}

json py_to_json(py::handle h) {
    if (h.is_none())
        return nullptr;
    if (py::isinstance<py::bool_>(h))
        return h.cast<bool>();
    if (py::isinstance<py::int_>(h))
        return h.cast<long long>();
    if (py::isinstance<py::float_>(h))
        return h.cast<double>();
    if (py::isinstance<py::str>(h))
        return h.cast<std::string>();
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (auto item : h.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        json out = json::array();
        for (auto item : h.cast<py::sequence>())
            out.push_back(py_to_json(item));
        return out;
    }
    throw py::type_error("unsupported value in model JSON");
}

}

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact conic-bundle models of birational involutions of the real "
              "projective plane";
    m.attr("__version__") = cremona::api::kVersion;

    py::register_exception<cremona::ParseError>(m, "PolyParseError",
                                                PyExc_ValueError);

    m.def("parse_poly",
          [](const std::string& s) { return cremona::parse_poly(s).to_string(); },
          py::arg("text"),
          "Parse a polynomial in t and return its canonical string form.");

    m.def("validate",
          [](const std::string& A, const std::string& B, const std::string& C,
             const std::string& H) {
              return json_to_py(cremona::api::validate(A, B, C, H));
          },
          py::arg("A") = "0", py::arg("B") = "0", py::arg("C") = "0",
          py::arg("H") = "0");

    m.def("invariants",
          [](const std::string& A, const std::string& B, const std::string& C,
             const std::string& H, unsigned samples, std::uint64_t seed) {
              return json_to_py(cremona::api::invariants(A, B, C, H, samples, seed));
          },
          py::arg("A") = "0", py::arg("B") = "0", py::arg("C") = "0",
          py::arg("H") = "0", py::arg("samples") = 0, py::arg("seed") = 0);

    m.def("classify",
          [](const std::string& A, const std::string& B, const std::string& C,
             const std::string& H) {
              return json_to_py(cremona::api::classify_model(A, B, C, H));
          },
          py::arg("A") = "0", py::arg("B") = "0", py::arg("C") = "0",
          py::arg("H") = "0");

    m.def("compare",
          [](py::handle model1, py::handle model2, bool up_to_mobius) {
              return json_to_py(cremona::api::compare(py_to_json(model1),
                                                      py_to_json(model2),
                                                      up_to_mobius));
          },
          py::arg("model1"), py::arg("model2"), py::arg("up_to_mobius") = false);

    m.def("dejonquieres",
          [](const std::string& f) {
              return json_to_py(cremona::api::dejonquieres(f));
          },
          py::arg("f"));

    m.def("family_demo",
          [](const std::string& f,
             const std::vector<std::pair<std::string, std::string>>& pairs) {
              return json_to_py(cremona::api::family_demo(f, pairs));
          },
          py::arg("f"), py::arg("pairs"));

    m.def("cremona_apply",
          [](const std::string& point) {
              return json_to_py(cremona::api::cremona_apply(point));
          },
          py::arg("point"));

    m.def("cremona_base_points",
          []() { return json_to_py(cremona::api::cremona_base_points()); });

    m.def("cremona_self_check",
          [](unsigned samples, std::uint64_t seed) {
              return json_to_py(cremona::api::cremona_self_check(samples, seed));
          },
          py::arg("samples") = 100, py::arg("seed") = 0);
}
