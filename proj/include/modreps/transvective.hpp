#pragma once

#include "modreps/representation.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modreps {

/* m - I = vector * covector with covector * vector = 0. */
struct TransvectionData {
    Matrix vector;    // n x 1
    Matrix covector;  // 1 x n
};

TransvectionData extract_transvection(const Matrix& m);
Rational pair(const TransvectionData& d, const Matrix& v);  // alpha_d(v)
Rational braid_identity(const TransvectionData& da, const TransvectionData& db);
std::pair<Rational, Rational> disjoint_identity(const TransvectionData& da, const TransvectionData& dc);
std::vector<TransvectionData> normalize_chain(const std::vector<TransvectionData>& datas);
/* Matrix of alpha_i(v_j). */
Matrix chain_pairing_matrix(const std::vector<TransvectionData>& datas);

struct PowerRecord {
    std::string word;  // e.g. "(a1^2 a2)^2"
    long exponent = 1;
    Matrix matrix;
    std::optional<Matrix> normalized;  // in the basis (v'_1..v'_k, completion)
    bool is_identity = false;
};

struct CheckReport {
    std::vector<std::string> chain;
    bool genus_one_pass = false;
    std::optional<bool> genus_two_pass;
    std::vector<PowerRecord> powers;
    std::optional<Matrix> normalized_basis;  // columns; present when the chain is transvective
    bool pass() const { return genus_one_pass && genus_two_pass.value_or(true); }
};

/* Checks (T_a^2 T_b)^4 = I and, for chains of length >= 4, (T_a^2 T_b T_c T_d)^8 = I. */
CheckReport separating_twist_check(const Representation& rep, const std::vector<std::string>& chain);

/* Basis whose first columns are the normalized chain vectors, completed by standard vectors. */
Matrix normalized_chain_basis(const std::vector<TransvectionData>& normalized, std::size_t n);

}  // namespace modreps
