#include "modreps/io.hpp"

#include "modreps/errors.hpp"
#include "modreps/reps.hpp"

#include <fstream>
#include <sstream>

namespace modreps::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::Schema, path + ": " + msg);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(path, "missing field \"" + key + "\"");
    return *it;
}

long integer_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer()) schema(path + "." + key, "expected an integer");
    return v.get<long>();
}

std::string string_field(const Json& j, const std::string& key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_string()) schema(path + "." + key, "expected a string");
    return v.get<std::string>();
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) schema(path, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        schema(path, e.what());
    }
}

Surface surface_from_json(const Json& j, const std::string& path) {
    long g = integer_field(j, "genus", path);
    if (g < 3 || g > 6) schema(path + ".genus", "genus must lie in 3..6");
    if (j.contains("boundary") && integer_field(j, "boundary", path) != 1)
        schema(path + ".boundary", "only one boundary component is supported");
    return Surface(static_cast<int>(g));
}

Json subspace_json(const Subspace& s) {
    Json j;
    j["dim"] = s.dim();
    j["basis"] = to_json(s.basis());
    return j;
}

Json optional_matrix(const std::optional<Matrix>& m) { return m ? to_json(*m) : Json(nullptr); }

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
        if (pos > text.size()) pos = text.size();
        std::size_t line = 1, start = 0;
        for (std::size_t i = 0; i < pos; ++i)
            if (text[i] == '\n') {
                ++line;
                start = i + 1;
            }
        std::size_t end = text.find('\n', start);
        std::string context = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::ostringstream msg;
        msg << source << ":" << line << ":" << (pos - start + 1) << ": invalid JSON\n  " << context << "\n  "
            << std::string(pos - start, ' ') << "^";
        throw Error(ErrorKind::Schema, msg.str());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_file(const std::string& path) { return parse_text(read_text_file(path), path); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of rows");
    std::size_t r = j.size();
    std::size_t c = r ? (j[0].is_array() ? j[0].size() : 0) : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        std::string rp = path + "[" + std::to_string(i) + "]";
        if (!j[i].is_array()) schema(rp, "expected a row array");
        if (j[i].size() != c) schema(rp, "row has " + std::to_string(j[i].size()) + " entries, expected " + std::to_string(c));
        for (std::size_t k = 0; k < c; ++k) m(i, k) = rational_from_json(j[i][k], rp + "[" + std::to_string(k) + "]");
    }
    return m;
}

Json to_json(const Representation& rep) {
    Json j;
    j["genus"] = rep.surface().genus;
    j["boundary"] = rep.surface().boundary_components;
    j["dimension"] = rep.dimension();
    j["curve_system_hash"] = rep.curve_system_hash();
    Json gens = Json::array();
    for (std::size_t i = 0; i < rep.names().size(); ++i) {
        Json g;
        g["name"] = rep.names()[i];
        g["matrix"] = to_json(rep.images()[i]);
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    return j;
}

Representation representation_from_json(const Json& j, const std::string& path) {
    Surface s = surface_from_json(j, path);
    long dim = integer_field(j, "dimension", path);
    if (dim < 0) schema(path + ".dimension", "must be non-negative");
    std::string hash = string_field(j, "curve_system_hash", path);
    const RelatorCatalog& cat = relator_catalog(s);
    if (hash != cat.curves.hash()) schema(path + ".curve_system_hash", "does not match the bundled curve system");
    const Json& gens = field(j, "generators", path);
    if (!gens.is_array()) schema(path + ".generators", "expected an array");
    std::vector<std::string> names = cat.generator_names();
    std::vector<std::optional<Matrix>> images(names.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string gp = path + ".generators[" + std::to_string(i) + "]";
        std::string name = string_field(gens[i], "name", gp);
        std::size_t idx = 0;
        while (idx < names.size() && names[idx] != name) ++idx;
        if (idx == names.size()) schema(gp + ".name", "unknown generator \"" + name + "\"");
        if (images[idx]) schema(gp + ".name", "duplicate generator \"" + name + "\"");
        Matrix m = matrix_from_json(field(gens[i], "matrix", gp), gp + ".matrix");
        if (m.rows() != static_cast<std::size_t>(dim) || m.cols() != static_cast<std::size_t>(dim))
            schema(gp + ".matrix", "expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
        if (sgn(determinant(m)) == 0) schema(gp + ".matrix", "matrix is not invertible");
        images[idx] = std::move(m);
    }
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!images[i]) schema(path + ".generators", "missing generator \"" + names[i] + "\"");
        out.push_back(std::move(*images[i]));
    }
    return Representation(s, names, std::move(out), hash);
}

Json to_json(const Cocycle& phi) {
    Json j;
    j["chirality"] = phi.chirality() == Chirality::Left ? "left" : "right";
    j["base_rep_ref"] = phi.base_rep_ref();
    Json values = Json::object();
    for (std::size_t i = 0; i < phi.values().size(); ++i) values[phi.base().names()[i]] = to_json(phi.values()[i]);
    j["values"] = std::move(values);
    return j;
}

Cocycle cocycle_from_json(const Json& j, const Representation& base, const std::string& path) {
    std::string c = string_field(j, "chirality", path);
    Chirality ch;
    if (c == "left") ch = Chirality::Left;
    else if (c == "right") ch = Chirality::Right;
    else schema(path + ".chirality", "expected \"left\" or \"right\"");
    std::string ref = j.contains("base_rep_ref") ? string_field(j, "base_rep_ref", path) : "base";
    const Json& values = field(j, "values", path);
    if (!values.is_object()) schema(path + ".values", "expected an object keyed by generator");
    std::vector<Matrix> out;
    for (const auto& name : base.names()) {
        auto it = values.find(name);
        if (it == values.end()) schema(path + ".values", "missing generator \"" + name + "\"");
        out.push_back(matrix_from_json(*it, path + ".values." + name));
    }
    for (auto it = values.begin(); it != values.end(); ++it)
        if (!base.has(it.key())) schema(path + ".values", "unknown generator \"" + it.key() + "\"");
    try {
        return Cocycle(ch, base, std::move(out), ref);
    } catch (const Error& e) {
        schema(path + ".values", e.what());
    }
}

Json to_json(const SuspensionSpec& spec) {
    Json j;
    j["genus"] = spec.base.surface().genus;
    j["base"] = to_json(spec.base);
    j["a"] = spec.a;
    j["b"] = spec.b;
    j["phi1"] = spec.phi1 ? to_json(*spec.phi1) : Json(nullptr);
    j["phi2"] = spec.phi2 ? to_json(*spec.phi2) : Json(nullptr);
    if (spec.alpha) {
        Json a = Json::object();
        for (std::size_t i = 0; i < spec.alpha->size(); ++i) a[spec.base.names()[i]] = to_json((*spec.alpha)[i]);
        j["alpha"] = std::move(a);
    } else {
        j["alpha"] = nullptr;
    }
    return j;
}

SuspensionSpec suspension_spec_from_json(const Json& j, const std::string& path) {
    const Json& bj = field(j, "base", path);
    std::optional<Representation> base;
    if (bj.is_string()) {
        Surface s = surface_from_json(j, path);
        std::string name = bj.get<std::string>();
        if (name == "symplectic") base = symplectic_rep(s);
        else if (name == "unit_tangent") base = unit_tangent_rep(s);
        else if (name == "dual_unit_tangent") base = dual_unit_tangent_rep(s);
        else schema(path + ".base", "unknown model \"" + name + "\"");
    } else {
        base = representation_from_json(bj, path + ".base");
    }
    long a = integer_field(j, "a", path), b = integer_field(j, "b", path);
    if (a < 0 || b < 0) schema(path, "a and b must be non-negative");
    SuspensionSpec spec{*base, static_cast<std::size_t>(a), static_cast<std::size_t>(b), std::nullopt, std::nullopt,
                        std::nullopt};
    std::size_t n = base->dimension();
    auto zero = [&](Chirality ch, std::size_t r, std::size_t c) {
        return Cocycle(ch, *base, std::vector<Matrix>(base->names().size(), Matrix(r, c)));
    };
    if (j.contains("phi1") && !j["phi1"].is_null()) spec.phi1 = cocycle_from_json(j["phi1"], *base, path + ".phi1");
    else spec.phi1 = zero(Chirality::Right, spec.a, n);
    if (j.contains("phi2") && !j["phi2"].is_null()) spec.phi2 = cocycle_from_json(j["phi2"], *base, path + ".phi2");
    else spec.phi2 = zero(Chirality::Left, n, spec.b);
    if (spec.phi1->chirality() != Chirality::Right) schema(path + ".phi1.chirality", "phi1 must be a right cocycle");
    if (spec.phi2->chirality() != Chirality::Left) schema(path + ".phi2.chirality", "phi2 must be a left cocycle");
    if (spec.phi1->width() != spec.a) schema(path + ".phi1", "values must have a rows");
    if (spec.phi2->width() != spec.b) schema(path + ".phi2", "values must have b columns");
    if (j.contains("alpha") && !j["alpha"].is_null()) {
        const Json& aj = j["alpha"];
        if (!aj.is_object()) schema(path + ".alpha", "expected an object keyed by generator");
        std::vector<Matrix> alpha;
        for (const auto& name : base->names()) {
            auto it = aj.find(name);
            if (it == aj.end()) schema(path + ".alpha", "missing generator \"" + name + "\"");
            Matrix m = matrix_from_json(*it, path + ".alpha." + name);
            if (m.rows() != spec.a || m.cols() != spec.b) schema(path + ".alpha." + name, "expected an a x b matrix");
            alpha.push_back(std::move(m));
        }
        spec.alpha = std::move(alpha);
    }
    return spec;
}

Json to_json(const AlphaSolution& sol, const RelatorCatalog& cat) {
    Json j;
    j["solvable"] = sol.alpha.has_value();
    if (sol.failing_relator) {
        const Relator& r = cat.relators[*sol.failing_relator];
        j["failing_relator"] = {{"index", *sol.failing_relator}, {"tag", tag_name(r.tag)}, {"label", r.label}};
        j["residual"] = optional_matrix(sol.residual);
    }
    return j;
}

Json to_json(const VerificationReport& rep, const Representation& target) {
    Json j;
    j["report"] = "verify";
    j["genus"] = target.surface().genus;
    j["dimension"] = target.dimension();
    j["relator_count"] = rep.results.size();
    std::size_t failures = 0;
    Json results = Json::array();
    for (const auto& r : rep.results) {
        if (!r.pass) ++failures;
        results.push_back({{"index", r.index}, {"tag", tag_name(r.tag)}, {"label", r.label}, {"pass", r.pass}});
    }
    j["failures"] = failures;
    j["pass"] = rep.pass;
    j["results"] = std::move(results);
    return j;
}

Json to_json(const CheckReport& rep) {
    Json j;
    j["report"] = "johnson-check";
    j["chain"] = rep.chain;
    j["transvective"] = rep.normalized_basis.has_value();
    Json ids = Json::array();
    ids.push_back({{"name", "genus_one"}, {"identity", "(T_a^2 T_b)^4 = I"}, {"pass", rep.genus_one_pass}});
    if (rep.genus_two_pass)
        ids.push_back({{"name", "genus_two"}, {"identity", "(T_a^2 T_b T_c T_d)^8 = I"}, {"pass", *rep.genus_two_pass}});
    j["identities"] = std::move(ids);
    j["pass"] = rep.pass();
    j["normalized_basis"] = optional_matrix(rep.normalized_basis);
    Json powers = Json::array();
    for (const auto& p : rep.powers) {
        Json pj;
        pj["word"] = p.word;
        pj["exponent"] = p.exponent;
        pj["is_identity"] = p.is_identity;
        pj["matrix"] = to_json(p.matrix);
        pj["normalized"] = optional_matrix(p.normalized);
        powers.push_back(std::move(pj));
    }
    j["powers"] = std::move(powers);
    return j;
}

Json to_json(const ClassificationReport& rep, const Representation& input) {
    Json j;
    j["report"] = "classify";
    j["genus"] = input.surface().genus;
    j["dimension"] = rep.dimension;
    j["in_range"] = rep.in_range;
    j["verdict"] = verdict_name(rep.verdict);
    j["matched_model"] = rep.matched_model ? Json(verdict_name(*rep.matched_model)) : Json(nullptr);
    j["trivial_dim"] = rep.trivial_dim;
    j["note"] = rep.note;
    if (rep.flag) {
        j["flag"] = {{"v1", subspace_json(rep.flag->first)}, {"v2", subspace_json(rep.flag->second)}};
    } else {
        j["flag"] = nullptr;
    }
    const Witnesses& w = rep.witnesses;
    Json wj;
    wj["sub_dim"] = w.sub_dim;
    wj["core_dim"] = w.core_dim;
    wj["quotient_dim"] = w.quotient_dim;
    wj["phi1_coboundary"] = w.phi1_coboundary ? Json(*w.phi1_coboundary) : Json(nullptr);
    wj["phi2_coboundary"] = w.phi2_coboundary ? Json(*w.phi2_coboundary) : Json(nullptr);
    wj["phi1_witness"] = optional_matrix(w.phi1_witness);
    wj["phi2_witness"] = optional_matrix(w.phi2_witness);
    j["witnesses"] = std::move(wj);
    j["intertwiner"] = optional_matrix(rep.intertwiner);
    // Exact recheck of the certificate: X rho(s) = model(s) X on every generator.
    Json cert = nullptr;
    if (rep.intertwiner && rep.matched_model) {
        Representation model = model_representation(input.surface(), *rep.matched_model, rep.trivial_dim);
        const Matrix& x = *rep.intertwiner;
        bool ok = rank(x) == x.rows();
        for (std::size_t i = 0; ok && i < input.names().size(); ++i)
            ok = x * input.images()[i] == model.images()[i] * x;
        cert = ok;
    }
    j["certificate_valid"] = cert;
    return j;
}

Json cohomology_report(const Representation& coeffs, const std::string& label, const CocycleSpace& space) {
    Json j;
    j["report"] = "cohomology";
    j["genus"] = coeffs.surface().genus;
    j["coefficients"] = label;
    j["dimension"] = coeffs.dimension();
    j["z1_dim"] = space.z1_basis.size();
    j["b1_dim"] = space.b1_dim;
    j["h1_dim"] = space.h1_dim;
    return j;
}

}  // namespace modreps::io
