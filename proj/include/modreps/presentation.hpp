#pragma once

#include "modreps/representation.hpp"
#include "modreps/surface.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modreps {

struct Letter {
    std::string name;
    long exponent = 1;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.name == b.name && a.exponent == b.exponent;
    }
};

/* Freely reduced word in twist generators. */
class GroupWord {
public:
    GroupWord() = default;
    explicit GroupWord(std::vector<Letter> letters);
    static GroupWord gen(const std::string& name, long exponent = 1) { return GroupWord({{name, exponent}}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    long exponent_sum(const std::string& name) const;

    GroupWord inverse() const;
    GroupWord power(long k) const;
    GroupWord conjugate_by(const GroupWord& f) const { return f * *this * f.inverse(); }
    friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
    friend bool operator==(const GroupWord& a, const GroupWord& b) { return a.letters_ == b.letters_; }

    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

enum class RelatorTag { Braid, Commutation, Lantern, Chain, Other };

const char* tag_name(RelatorTag t);
RelatorTag parse_tag(const std::string& s);

struct Relator {
    RelatorTag tag = RelatorTag::Other;
    std::string label;
    GroupWord word;
};

struct RelatorCatalog {
    Surface surface{3};
    CurveSystem curves;
    std::vector<Relator> relators;

    std::vector<std::string> generator_names() const { return curves.names(); }
};

RelatorCatalog generate_catalog(int genus);
std::string catalog_to_json_text(const RelatorCatalog& cat);
RelatorCatalog catalog_from_json_text(const std::string& text);

/* Bundled text for g = 3, 4 (hash-pinned); generated (and cached when
   MODREPS_CACHE_DIR is set) for other genera. */
const RelatorCatalog& relator_catalog(const Surface& s);
/* Same lookup without the in-process memo. */
RelatorCatalog load_catalog(int genus);
std::optional<std::string> bundled_catalog_text(int genus);
std::string pinned_catalog_sha256(int genus);

Matrix evaluate_word(const Representation& rep, const GroupWord& w);
Matrix evaluate_cocycle(const Representation& rep, const Cocycle& phi, const GroupWord& w);

struct RelatorResult {
    std::size_t index = 0;
    RelatorTag tag = RelatorTag::Other;
    std::string label;
    bool pass = false;
};

struct VerificationReport {
    std::vector<RelatorResult> results;
    bool pass = true;
    std::optional<std::size_t> first_failure() const;
};

VerificationReport verify_representation(const Representation& rep, const RelatorCatalog& cat);

/* Index of the first relator on which phi does not vanish, if any. */
std::optional<std::size_t> first_cocycle_failure(const Cocycle& phi, const RelatorCatalog& cat);

}  // namespace modreps
