#pragma once

#include "modreps/exactla.hpp"
#include "modreps/representation.hpp"

#include <optional>
#include <string>
#include <utility>

namespace modreps {

enum class Verdict {
    Trivial,
    SymplecticPlusTrivial,
    UnitTangentPlusTrivial,
    DualUnitTangentPlusTrivial,
    OutOfRange,
    NotVerified,
};

const char* verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

struct Witnesses {
    std::size_t core_dim = 0;
    std::size_t sub_dim = 0;       // dim V1
    std::size_t quotient_dim = 0;  // dim V / V2
    std::optional<bool> phi1_coboundary;
    std::optional<bool> phi2_coboundary;
    std::optional<Matrix> phi1_witness;
    std::optional<Matrix> phi2_witness;
};

struct ClassificationReport {
    Verdict verdict = Verdict::NotVerified;
    std::size_t dimension = 0;
    std::size_t trivial_dim = 0;  // n in W + C^n
    bool in_range = true;         // dimension <= 3g - 3
    std::optional<std::pair<Subspace, Subspace>> flag;
    std::optional<Matrix> intertwiner;  // X with X rho(s) X^{-1} = model(s)
    std::optional<Verdict> matched_model;  // set when a model matched, also outside the range
    Witnesses witnesses;
    std::string note;
};

Subspace fixed_space(const Representation& rep);
std::optional<std::pair<Subspace, Subspace>> biaffine_flag(const Representation& rep);

/* Basis of {X : X rho1(s) = rho2(s) X for all s}. */
std::vector<Matrix> intertwiner_space(const Representation& rep1, const Representation& rep2);
std::optional<Matrix> intertwiner(const Representation& rep1, const Representation& rep2);

/* The model W + C^k for a named verdict. */
Representation model_representation(const Surface& s, Verdict v, std::size_t trivial_dim);

ClassificationReport classify_representation(const Representation& rep);

}  // namespace modreps
