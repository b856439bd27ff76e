#include "modreps/presentation.hpp"

#include "modreps/errors.hpp"
#include "modreps/hash.hpp"
#include "parallel.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace modreps {

namespace bundled {
extern const char* const presentation_g3;
extern const char* const presentation_g4;
}  // namespace bundled

GroupWord::GroupWord(std::vector<Letter> letters) {
    for (auto& l : letters) {
        if (l.exponent == 0) continue;
        if (!letters_.empty() && letters_.back().name == l.name) {
            letters_.back().exponent += l.exponent;
            if (letters_.back().exponent == 0) letters_.pop_back();
        } else {
            letters_.push_back(std::move(l));
        }
    }
}

long GroupWord::exponent_sum(const std::string& name) const {
    long s = 0;
    for (const auto& l : letters_)
        if (l.name == name) s += l.exponent;
    return s;
}

GroupWord GroupWord::inverse() const {
    std::vector<Letter> out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->name, -it->exponent});
    return GroupWord(std::move(out));
}

GroupWord GroupWord::power(long k) const {
    GroupWord base = k < 0 ? inverse() : *this;
    GroupWord out;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
    return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> all = a.letters_;
    all.insert(all.end(), b.letters_.begin(), b.letters_.end());
    return GroupWord(std::move(all));
}

std::string GroupWord::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        os << (i ? " " : "") << letters_[i].name;
        if (letters_[i].exponent != 1) os << "^" << letters_[i].exponent;
    }
    return os.str();
}

const char* tag_name(RelatorTag t) {
    switch (t) {
    case RelatorTag::Braid: return "braid";
    case RelatorTag::Commutation: return "commutation";
    case RelatorTag::Lantern: return "lantern";
    case RelatorTag::Chain: return "chain";
    case RelatorTag::Other: return "other";
    }
    return "other";
}

RelatorTag parse_tag(const std::string& s) {
    for (auto t : {RelatorTag::Braid, RelatorTag::Commutation, RelatorTag::Lantern, RelatorTag::Chain,
                   RelatorTag::Other})
        if (s == tag_name(t)) return t;
    throw Error(ErrorKind::Schema, "unknown relator tag \"" + s + "\"");
}

namespace {

GroupWord word_of(std::initializer_list<int> gens) {
    std::vector<Letter> ls;
    for (int k : gens) ls.push_back({"a" + std::to_string(k < 0 ? -k : k), k < 0 ? -1 : 1});
    return GroupWord(std::move(ls));
}

GroupWord a(int k) { return GroupWord::gen("a" + std::to_string(k)); }

}  // namespace

RelatorCatalog generate_catalog(int genus) {
    Surface s(genus);
    RelatorCatalog cat;
    cat.surface = s;
    cat.curves = make_generator_curve_system(s);
    const auto& cs = cat.curves;
    std::size_t n = cs.curves.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            GroupWord x = GroupWord::gen(cs.curves[i].name), y = GroupWord::gen(cs.curves[j].name);
            std::string label = cs.curves[i].name + " " + cs.curves[j].name;
            if (cs.geometric_intersections[i][j] == 1)
                cat.relators.push_back({RelatorTag::Braid, label, x * y * x * y.inverse() * x.inverse() * y.inverse()});
            else
                cat.relators.push_back({RelatorTag::Commutation, label, x * y * x.inverse() * y.inverse()});
        }

    // (a1 a2 a3)^4 = a0 b0, b0 the other boundary curve of the neighbourhood of a1, a2, a3.
    GroupWord f = word_of({4, 3, 2, 1, 1, 2, 3, 4});
    GroupWord b0 = a(0).conjugate_by(f);
    cat.relators.push_back({RelatorTag::Chain, "a1 a2 a3", word_of({1, 2, 3}).power(4) * (a(0) * b0).inverse()});

    // a0 b2 b1 = a1 a3 a5 b3 on the four-holed sphere bounded by a1, a3, a5, b3.
    GroupWord b1 = a(0).conjugate_by(word_of({-4, -3, -5, -4}));
    GroupWord b2 = b1.conjugate_by(word_of({-2, -1, -3, -2}));
    GroupWord b3 = a(0).conjugate_by(word_of({6, 5, 4, 0, -3, -4, -2, -3, -1, -2, -5, -6, -4, -5, -3, -4}));
    cat.relators.push_back(
        {RelatorTag::Lantern, "a1 a3 a5", a(0) * b2 * b1 * (a(1) * a(3) * a(5) * b3).inverse()});
    return cat;
}

namespace {

std::string word_json(const GroupWord& w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& l : w.letters()) j.push_back({l.name, l.exponent});
    return j.dump();
}

}  // namespace

std::string catalog_to_json_text(const RelatorCatalog& cat) {
    const auto& cs = cat.curves;
    std::ostringstream os;
    os << "{\n";
    os << "  \"format\": \"modreps-presentation\",\n";
    os << "  \"version\": 1,\n";
    os << "  \"genus\": " << cat.surface.genus << ",\n";
    os << "  \"boundary\": " << cat.surface.boundary_components << ",\n";
    os << "  \"curve_system_hash\": \"" << cs.hash() << "\",\n";
    os << "  \"generators\": [\n";
    for (std::size_t i = 0; i < cs.curves.size(); ++i) {
        const auto& c = cs.curves[i];
        nlohmann::json j = {{"name", c.name}, {"homology", c.homology}, {"nonseparating", c.nonseparating}};
        os << "    " << j.dump() << (i + 1 < cs.curves.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"geometric_intersections\": [\n";
    for (std::size_t i = 0; i < cs.geometric_intersections.size(); ++i) {
        nlohmann::json j = cs.geometric_intersections[i];
        os << "    " << j.dump() << (i + 1 < cs.geometric_intersections.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"relators\": [\n";
    for (std::size_t i = 0; i < cat.relators.size(); ++i) {
        const auto& r = cat.relators[i];
        nlohmann::json head = {{"tag", tag_name(r.tag)}, {"label", r.label}};
        std::string h = head.dump();
        h.pop_back();
        os << "    " << h << ",\"word\":" << word_json(r.word) << "}" << (i + 1 < cat.relators.size() ? ",\n" : "\n");
    }
    os << "  ]\n";
    os << "}\n";
    return os.str();
}

RelatorCatalog catalog_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Schema, std::string("presentation file: ") + e.what());
    }
    try {
        if (j.at("format") != "modreps-presentation")
            throw Error(ErrorKind::Schema, "presentation file: wrong format tag");
        Surface s(j.at("genus").get<int>());
        if (j.at("boundary").get<int>() != 1) throw Error(ErrorKind::Schema, "presentation file: boundary must be 1");
        RelatorCatalog cat;
        cat.surface = s;
        cat.curves.surface = s;
        for (const auto& c : j.at("generators")) {
            CurveClass cc{c.at("name").get<std::string>(), c.at("homology").get<HomologyVector>(),
                          c.at("nonseparating").get<bool>()};
            if (cc.homology.size() != static_cast<std::size_t>(2 * s.genus))
                throw Error(ErrorKind::Schema, "presentation file: homology of " + cc.name + " has wrong length");
            cat.curves.curves.push_back(std::move(cc));
        }
        cat.curves.geometric_intersections = j.at("geometric_intersections").get<std::vector<std::vector<int>>>();
        std::size_t n = cat.curves.curves.size();
        if (cat.curves.geometric_intersections.size() != n)
            throw Error(ErrorKind::Schema, "presentation file: intersection matrix has wrong size");
        for (std::size_t a = 0; a < n; ++a) {
            if (cat.curves.geometric_intersections[a].size() != n)
                throw Error(ErrorKind::Schema, "presentation file: intersection matrix has wrong size");
            for (std::size_t b = 0; b < n; ++b) {
                int gi = cat.curves.geometric_intersections[a][b];
                if (gi != cat.curves.geometric_intersections[b][a])
                    throw Error(ErrorKind::Schema, "presentation file: intersection matrix not symmetric");
                long alg = intersection_pairing(s, cat.curves.curves[a].homology, cat.curves.curves[b].homology);
                if ((alg < 0 ? -alg : alg) > gi)
                    throw Error(ErrorKind::Schema, "presentation file: algebraic intersection exceeds geometric");
            }
        }
        if (j.contains("curve_system_hash") && j.at("curve_system_hash") != cat.curves.hash())
            throw Error(ErrorKind::Schema, "presentation file: curve_system_hash does not match contents");
        for (const auto& r : j.at("relators")) {
            std::vector<Letter> ls;
            for (const auto& l : r.at("word")) {
                std::string name = l.at(0).get<std::string>();
                cat.curves.index_of(name);
                ls.push_back({name, l.at(1).get<long>()});
            }
            cat.relators.push_back({parse_tag(r.at("tag").get<std::string>()), r.value("label", ""), GroupWord(ls)});
        }
        return cat;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Schema, std::string("presentation file: ") + e.what());
    }
}

std::optional<std::string> bundled_catalog_text(int genus) {
    const char* t = genus == 3 ? bundled::presentation_g3 : genus == 4 ? bundled::presentation_g4 : nullptr;
    if (!t || !*t) return std::nullopt;
    return std::string(t);
}

std::string pinned_catalog_sha256(int genus) {
    if (genus == 3) return "b4d48f3a8338cd332439e702c3c7117b926d29deff95c888ac248d76915d4ea3";
    if (genus == 4) return "21cf6c451043067f6bf70b87c6386f24b5ccde0db09703ab6cfd64a1e287c559";
    return "";
}

static std::unique_ptr<RelatorCatalog> load_catalog_ptr(int genus) {
    if (auto text = bundled_catalog_text(genus)) {
        if (sha256_hex(*text) != pinned_catalog_sha256(genus))
            throw Error(ErrorKind::Io, "bundled presentation for genus " + std::to_string(genus) +
                                           " does not match its pinned hash");
        return std::make_unique<RelatorCatalog>(catalog_from_json_text(*text));
    }
    const char* dir = std::getenv("MODREPS_CACHE_DIR");
    if (dir && *dir) {
        namespace fs = std::filesystem;
        fs::path p = fs::path(dir) / ("presentation_g" + std::to_string(genus) + ".json");
        std::string expected = catalog_to_json_text(generate_catalog(genus));
        std::ifstream in(p);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            if (ss.str() == expected) return std::make_unique<RelatorCatalog>(catalog_from_json_text(ss.str()));
        }
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
        std::ofstream out(p);
        if (out) out << expected;
        return std::make_unique<RelatorCatalog>(catalog_from_json_text(expected));
    }
    return std::make_unique<RelatorCatalog>(generate_catalog(genus));
}

RelatorCatalog load_catalog(int genus) { return std::move(*load_catalog_ptr(genus)); }

const RelatorCatalog& relator_catalog(const Surface& s) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RelatorCatalog>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[s.genus];
    if (!slot) slot = load_catalog_ptr(s.genus);
    return *slot;
}

Matrix evaluate_word(const Representation& rep, const GroupWord& w) {
    Matrix p = Matrix::identity(rep.dimension());
    for (const auto& l : w.letters()) {
        std::size_t i = rep.index_of(l.name);
        const Matrix& m = l.exponent > 0 ? rep.images()[i] : rep.inverses()[i];
        for (long k = 0; k < (l.exponent > 0 ? l.exponent : -l.exponent); ++k) p = p * m;
    }
    return p;
}

Matrix evaluate_cocycle(const Representation& rep, const Cocycle& phi, const GroupWord& w) {
    if (rep.dimension() != phi.base().dimension())
        throw Error(ErrorKind::ShapeMismatch, "cocycle coefficients do not match the representation");
    std::size_t n = rep.dimension();
    if (phi.chirality() == Chirality::Left) {
        Matrix prefix = Matrix::identity(n);
        Matrix acc(n, phi.width());
        for (const auto& l : w.letters()) {
            std::size_t i = rep.index_of(l.name);
            const Matrix& v = phi.value(l.name);
            if (l.exponent > 0) {
                for (long k = 0; k < l.exponent; ++k) {
                    acc += prefix * v;
                    prefix = prefix * rep.images()[i];
                }
            } else {
                Matrix vinv = -(rep.inverses()[i] * v);
                for (long k = 0; k < -l.exponent; ++k) {
                    acc += prefix * vinv;
                    prefix = prefix * rep.inverses()[i];
                }
            }
        }
        return acc;
    }
    Matrix suffix = Matrix::identity(n);
    Matrix acc(phi.width(), n);
    const auto& ls = w.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        std::size_t i = rep.index_of(it->name);
        const Matrix& v = phi.value(it->name);
        if (it->exponent > 0) {
            for (long k = 0; k < it->exponent; ++k) {
                acc += v * suffix;
                suffix = rep.images()[i] * suffix;
            }
        } else {
            Matrix vinv = -(v * rep.inverses()[i]);
            for (long k = 0; k < -it->exponent; ++k) {
                acc += vinv * suffix;
                suffix = rep.inverses()[i] * suffix;
            }
        }
    }
    return acc;
}

std::optional<std::size_t> VerificationReport::first_failure() const {
    for (const auto& r : results)
        if (!r.pass) return r.index;
    return std::nullopt;
}

VerificationReport verify_representation(const Representation& rep, const RelatorCatalog& cat) {
    for (const auto& name : cat.generator_names()) rep.index_of(name);
    VerificationReport report;
    report.results.resize(cat.relators.size());
    detail::parallel_for(cat.relators.size(), [&](std::size_t i) {
        const auto& r = cat.relators[i];
        report.results[i] = {i, r.tag, r.label, evaluate_word(rep, r.word).is_identity()};
    });
    for (const auto& r : report.results) report.pass = report.pass && r.pass;
    return report;
}

std::optional<std::size_t> first_cocycle_failure(const Cocycle& phi, const RelatorCatalog& cat) {
    std::vector<char> ok(cat.relators.size(), 1);
    detail::parallel_for(cat.relators.size(), [&](std::size_t i) {
        ok[i] = evaluate_cocycle(phi.base(), phi, cat.relators[i].word).is_zero();
    });
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!ok[i]) return i;
    return std::nullopt;
}

}  // namespace modreps
