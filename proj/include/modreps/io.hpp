#pragma once

#include "modreps/classify.hpp"
#include "modreps/cohomology.hpp"
#include "modreps/presentation.hpp"
#include "modreps/representation.hpp"
#include "modreps/suspension.hpp"
#include "modreps/transvective.hpp"

#include <json.hpp>

#include <string>

namespace modreps::io {

using Json = nlohmann::ordered_json;

/* Parses JSON text; syntax errors become Schema errors carrying line, column and the offending line. */
Json parse_text(const std::string& text, const std::string& source = "<input>");
Json read_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
// Two-space indentation, trailing newline.
std::string dump(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path);

/* Schema errors name the JSON path. The curve-system hash must match the bundled
   curve system and every generator matrix must be invertible. */
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Cocycle& phi);
Cocycle cocycle_from_json(const Json& j, const Representation& base, const std::string& path = "$");

/* "base" is either an embedded representation or a model name
   ("symplectic", "unit_tangent", "dual_unit_tangent"); then "genus" is required. */
Json to_json(const SuspensionSpec& spec);
SuspensionSpec suspension_spec_from_json(const Json& j, const std::string& path = "$");
Json to_json(const AlphaSolution& sol, const RelatorCatalog& cat);

Json to_json(const VerificationReport& rep, const Representation& target);
Json to_json(const CheckReport& rep);
Json to_json(const ClassificationReport& rep, const Representation& input);
Json cohomology_report(const Representation& coeffs, const std::string& label, const CocycleSpace& space);

}  // namespace modreps::io
