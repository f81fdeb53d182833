#include "cohomotopy/bordism.hpp"
#include "cohomotopy/cli_app.hpp"
#include "cohomotopy/errors.hpp"
#include "cohomotopy/json_io.hpp"
#include "cohomotopy/smith.hpp"
#include "cohomotopy/validate.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace coh;

namespace {

// Results cross the boundary as JSON text; the Python side decodes them.
std::string analyze(const std::string& command, const std::string& path, int k, bool phi, bool t, bool eps3,
                    bool enumerate) {
    cli::CommandOptions o;
    o.k = k;
    o.codim3 = {phi, t, eps3, enumerate};
    return io::dump(cli::run_file(command, path, o).document);
}

std::string validate_text(const std::string& text) {
    Datum d = io::parse_datum(text);
    io::Json doc;
    doc["datum"] = io::datum_summary(d);
    doc["validation"] = io::to_json(validate_datum(d));
    return io::dump(doc);
}

std::vector<std::string> invariant_factors(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw py::value_error("ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    std::vector<std::string> out;
    for (const auto& d : smith_normal_form(m).diagonal) out.push_back(d.get_str());
    return out;
}

Tri tri(const std::string& s) {
    if (s == "zero") return Tri::True;
    if (s == "nonzero") return Tri::False;
    if (s == "unknown") return Tri::Unknown;
    throw py::value_error("expected 'zero', 'nonzero' or 'unknown'");
}

std::string section_check(int k, const std::string& eg, const std::string& kappa, const std::string& eh,
                          const std::string& delta) {
    return io::dump(io::to_json(section_existence({k, tri(eg), tri(kappa), tri(eh), tri(delta)})));
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_cohomotopy, m) {
    m.doc() = "stable cohomotopy in codimensions 2 and 3";
    m.attr("SCHEMA_VERSION") = io::kSchemaVersion;

    static py::exception<Error> base(m, "CohomotopyError");
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    static py::exception<ValidationError> invalid(m, "ValidationError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const ValidationError& e) {
            py::set_error(invalid, e.what());
        } catch (const Error& e) {
            py::set_error(base, (std::string(e.kind()) + ": " + e.what()).c_str());
        }
    });

    m.def("analyze", &analyze, py::arg("command"), py::arg("path"), py::arg("k") = 2,
          py::arg("assume_phi_trivial") = false, py::arg("assume_t_trivial") = false,
          py::arg("assume_eps3_zero") = false, py::arg("enumerate_extensions") = false,
          "report document for one file, as JSON text");
    m.def("validate_text", &validate_text, py::arg("text"));
    m.def("invariant_factors", &invariant_factors, py::arg("rows"),
          "nonzero Smith invariant factors as decimal strings");
    m.def("wedge_oracle", [](const std::vector<int>& dims, int n) { return wedge_oracle(dims, n).render(); },
          py::arg("sphere_dims"), py::arg("n"));
    m.def("section_check", &section_check, py::arg("k"), py::arg("euler_g") = "unknown",
          py::arg("kappa") = "unknown", py::arg("euler_h") = "unknown", py::arg("defect") = "unknown");
    m.def("run_cli", &run_cli, py::arg("args"), "(exit code, stdout, stderr)");
}
