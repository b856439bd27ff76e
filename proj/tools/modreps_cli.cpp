#include "modreps/classify.hpp"
#include "modreps/cohomology.hpp"
#include "modreps/errors.hpp"
#include "modreps/io.hpp"
#include "modreps/presentation.hpp"
#include "modreps/reps.hpp"
#include "modreps/suspension.hpp"
#include "modreps/transvective.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace modreps;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kIoFailure = 2;

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::Schema:
    case ErrorKind::Io:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnknownGenerator:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::DimensionMismatch: return kIoFailure;
    default: return kMathFailure;
    }
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") std::cout << text;
    else io::write_text_file(out, text);
}

Representation model(int genus, const std::string& kind, std::size_t pad) {
    Surface s(genus);
    if (kind == "trivial") return trivial_rep(s, pad);
    Representation base = kind == "symplectic"          ? symplectic_rep(s)
                          : kind == "unit-tangent"      ? unit_tangent_rep(s)
                          : kind == "dual-unit-tangent" ? dual_unit_tangent_rep(s)
                                                        : throw Error(ErrorKind::InvalidArgument, "unknown model " + kind);
    return pad ? direct_sum_with_trivial(base, pad) : base;
}

std::vector<std::string> split_chain(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        if (end > start) out.push_back(s.substr(start, end - start));
        start = end + 1;
    }
    return out;
}

std::string summary(const ClassificationReport& r, const Representation& rep, const io::Json& cert) {
    std::ostringstream os;
    os << "verdict: " << verdict_name(r.verdict) << "\n";
    os << "dimension: " << r.dimension << " (genus " << rep.surface().genus << ", "
       << (r.in_range ? "within 3g-3" : "above 3g-3") << ")\n";
    if (r.flag) os << "flag: dim V1 = " << r.flag->first.dim() << ", dim V2 = " << r.flag->second.dim() << "\n";
    if (r.matched_model) {
        os << "matched model: " << verdict_name(*r.matched_model) << " with " << r.trivial_dim << " trivial summands\n";
    }
    if (r.witnesses.phi1_coboundary)
        os << "phi1: " << (*r.witnesses.phi1_coboundary ? "coboundary" : "nontrivial") << "\n"
           << "phi2: " << (*r.witnesses.phi2_coboundary ? "coboundary" : "nontrivial") << "\n";
    if (!cert["certificate_valid"].is_null())
        os << "certificate: " << (cert["certificate_valid"].get<bool>() ? "valid" : "INVALID") << "\n";
    if (!r.note.empty()) os << "note: " << r.note << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact representations of mapping class groups of genus g surfaces with one boundary component"};
    app.require_subcommand(1);

    std::string input, out;
    auto* verify = app.add_subcommand("verify", "Check a representation file against every relator");
    verify->add_option("file", input, "Representation JSON")->required();
    verify->add_option("-o,--out", out, "Write the JSON report here instead of stdout");

    auto* classify = app.add_subcommand("classify", "Classify a representation and write a JSON certificate");
    classify->add_option("file", input, "Representation JSON")->required();
    classify->add_option("-o,--out", out, "Certificate path (default: stdout after the summary)");

    int genus = 3;
    std::string coeffs = "H";
    bool as_json = false;
    auto* cohom = app.add_subcommand("cohomology", "Dimensions of Z^1, B^1, H^1 with the given coefficients");
    cohom->add_option("--genus", genus, "Genus (3..6)")->check(CLI::Range(3, 6));
    cohom->add_option("--coeffs", coeffs, "trivial | H | Hdual | HT | HTdual | path to a representation file");
    cohom->add_flag("--json", as_json, "Print the JSON report");

    auto* suspend = app.add_subcommand("suspend", "Build a double suspension from a spec, solving alpha if absent");
    suspend->add_option("spec", input, "SuspensionSpec JSON")->required();
    suspend->add_option("-o,--out", out, "Representation output path (default: stdout)");

    std::string chain = "a1,a2,a3,a4";
    auto* johnson = app.add_subcommand("johnson-check", "Check separating-twist chain words");
    johnson->add_option("file", input, "Representation JSON")->required();
    johnson->add_option("--chain", chain, "Comma-separated chain of generators");
    johnson->add_option("-o,--out", out, "Write the JSON report here instead of stdout");

    std::string kind = "symplectic";
    std::size_t pad = 0;
    auto* mdl = app.add_subcommand("model", "Export a model representation");
    mdl->add_option("--genus", genus, "Genus (3..6)")->check(CLI::Range(3, 6));
    mdl->add_option("--kind", kind, "symplectic | unit-tangent | dual-unit-tangent | trivial")
        ->check(CLI::IsMember({"symplectic", "unit-tangent", "dual-unit-tangent", "trivial"}));
    mdl->add_option("--pad", pad, "Number of trivial summands");
    mdl->add_option("-o,--out", out, "Output path (default: stdout)");

    auto* cat = app.add_subcommand("catalog", "Print the relator catalog");
    cat->add_option("--genus", genus, "Genus (3..6)")->check(CLI::Range(3, 6));
    cat->add_option("-o,--out", out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kIoFailure;
    }

    try {
        if (*verify) {
            Representation rep = io::representation_from_json(io::read_file(input));
            VerificationReport r = verify_representation(rep, relator_catalog(rep.surface()));
            emit(out, io::dump(io::to_json(r, rep)));
            return r.pass ? kOk : kMathFailure;
        }
        if (*classify) {
            Representation rep = io::representation_from_json(io::read_file(input));
            ClassificationReport r = classify_representation(rep);
            io::Json cert = io::to_json(r, rep);
            std::cout << summary(r, rep, cert);
            if (out.empty()) std::cout << io::dump(cert);
            else io::write_text_file(out, io::dump(cert));
            bool bad_cert = !cert["certificate_valid"].is_null() && !cert["certificate_valid"].get<bool>();
            return r.verdict == Verdict::NotVerified || bad_cert ? kMathFailure : kOk;
        }
        if (*cohom) {
            std::optional<Representation> rep;
            std::string label = coeffs;
            Surface s(genus);
            if (coeffs == "trivial") rep = trivial_rep(s, 1);
            else if (coeffs == "H") rep = symplectic_rep(s);
            else if (coeffs == "Hdual") rep = dual_rep(symplectic_rep(s));
            else if (coeffs == "HT") rep = unit_tangent_rep(s);
            else if (coeffs == "HTdual") rep = dual_unit_tangent_rep(s);
            else {
                rep = io::representation_from_json(io::read_file(coeffs));
                label = "file";
            }
            CocycleSpace space = cocycle_space(*rep, relator_catalog(rep->surface()));
            io::Json j = io::cohomology_report(*rep, label, space);
            if (as_json) {
                std::cout << io::dump(j);
            } else {
                std::cout << "genus = " << rep->surface().genus << "\n"
                          << "coefficients = " << label << " (dimension " << rep->dimension() << ")\n"
                          << "z1_dim = " << space.z1_basis.size() << "\n"
                          << "b1_dim = " << space.b1_dim << "\n"
                          << "h1_dim = " << space.h1_dim << "\n";
            }
            return kOk;
        }
        if (*suspend) {
            SuspensionSpec spec = io::suspension_spec_from_json(io::read_file(input));
            const RelatorCatalog& c = relator_catalog(spec.base.surface());
            for (const Cocycle* phi : {&*spec.phi1, &*spec.phi2})
                if (auto bad = first_cocycle_failure(*phi, c))
                    throw Error(ErrorKind::CocycleInvalid, "cocycle does not vanish on relator #" + std::to_string(*bad) +
                                                               " (" + c.relators[*bad].label + ")");
            if (!spec.alpha) {
                AlphaSolution sol = solve_alpha(*spec.phi1, *spec.phi2, c);
                if (!sol.alpha) {
                    std::cerr << "error: no alpha satisfies the coboundary equation\n";
                    std::cout << io::dump(io::to_json(sol, c));
                    return kMathFailure;
                }
                spec.alpha = sol.alpha;
            }
            emit(out, io::dump(io::to_json(double_suspension(spec))));
            return kOk;
        }
        if (*johnson) {
            Representation rep = io::representation_from_json(io::read_file(input));
            std::vector<std::string> names = split_chain(chain);
            CheckReport r = separating_twist_check(rep, names);
            emit(out, io::dump(io::to_json(r)));
            if (!r.normalized_basis) {
                std::cerr << "error: chain images are not transvections forming a standard chain\n";
                return kMathFailure;
            }
            return r.pass() ? kOk : kMathFailure;
        }
        if (*mdl) {
            emit(out, io::dump(io::to_json(model(genus, kind, pad))));
            return kOk;
        }
        if (*cat) {
            emit(out, catalog_to_json_text(generate_catalog(genus)));
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    }
    return kOk;
}
