#include "modreps/classify.hpp"
#include "modreps/cohomology.hpp"
#include "modreps/errors.hpp"
#include "modreps/io.hpp"
#include "modreps/presentation.hpp"
#include "modreps/reps.hpp"
#include "modreps/suspension.hpp"
#include "modreps/transvective.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace modreps;

namespace {

Representation load(const std::string& text) { return io::representation_from_json(io::parse_text(text)); }

Representation model(int genus, const std::string& kind, std::size_t pad) {
    Surface s(genus);
    if (kind == "trivial") return trivial_rep(s, pad);
    Representation base = kind == "symplectic"          ? symplectic_rep(s)
                          : kind == "unit-tangent"      ? unit_tangent_rep(s)
                          : kind == "dual-unit-tangent" ? dual_unit_tangent_rep(s)
                                                        : throw Error(ErrorKind::InvalidArgument, "unknown model " + kind);
    return pad ? direct_sum_with_trivial(base, pad) : base;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact rational representations of Mod(S_{g,1}); values cross the boundary as JSON text";

    static py::exception<Error> error(m, "ModrepsError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("model", [](int genus, const std::string& kind, std::size_t pad) { return io::dump(io::to_json(model(genus, kind, pad))); },
          py::arg("genus"), py::arg("kind") = "symplectic", py::arg("pad") = 0);
    m.def("verify", [](const std::string& text) {
        Representation rep = load(text);
        return io::dump(io::to_json(verify_representation(rep, relator_catalog(rep.surface())), rep));
    });
    m.def("classify", [](const std::string& text) {
        Representation rep = load(text);
        return io::dump(io::to_json(classify_representation(rep), rep));
    });
    m.def("cohomology", [](const std::string& text) {
        Representation rep = load(text);
        return io::dump(io::cohomology_report(rep, "file", cocycle_space(rep, relator_catalog(rep.surface()))));
    });
    m.def("johnson_check", [](const std::string& text, const std::vector<std::string>& chain) {
        return io::dump(io::to_json(separating_twist_check(load(text), chain)));
    }, py::arg("rep"), py::arg("chain") = std::vector<std::string>{"a1", "a2", "a3", "a4"});
    m.def("connecting_map", [](int genus, const std::string& lambda) {
        return to_string(connecting_map_surface_group(genus, parse_rational(lambda)));
    });
    m.def("catalog", [](int genus) { return catalog_to_json_text(relator_catalog(Surface(genus))); });
}
