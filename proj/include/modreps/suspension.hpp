#pragma once

#include "modreps/cohomology.hpp"
#include "modreps/presentation.hpp"
#include "modreps/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modreps {

struct SuspensionSpec {
    Representation base;
    std::size_t a = 0;
    std::size_t b = 0;
    std::optional<Cocycle> phi1;               // right, values a x n
    std::optional<Cocycle> phi2;               // left, values n x b
    std::optional<std::vector<Matrix>> alpha;  // a x b per generator
};

/* s -> [[rho(s), phi(s)], [0, I_b]] */
Representation affine_suspension(const Representation& base, const Cocycle& phi, std::size_t b);
/* s -> [[I_a, phi(s)], [0, rho(s)]] */
Representation coaffine_suspension(const Representation& base, const Cocycle& phi, std::size_t a);
/* s -> [[I_a, phi1(s), alpha(s)], [0, rho(s), phi2(s)], [0, 0, I_b]] */
Representation double_suspension(const SuspensionSpec& spec);

struct AlphaSolution {
    std::optional<std::vector<Matrix>> alpha;
    // Set when no alpha exists: first relator making the system inconsistent and
    // the residual left there by a solution of the earlier relators.
    std::optional<std::size_t> failing_relator;
    std::optional<Matrix> residual;
};

/* Solves alpha(g h) = alpha(g) + alpha(h) + phi1(g) phi2(h) on the presentation. */
AlphaSolution solve_alpha(const Cocycle& phi1, const Cocycle& phi2, const RelatorCatalog& cat);

/* With phi2 = lambda phi1 + delta(h0) on generators, the block matrix F with
   F S(phi1) F^{-1} = S(phi2) for the matching (affine or co-affine) suspension. */
Matrix cohomologous_iso(const Representation& base, const Cocycle& phi1, const Cocycle& phi2, const Rational& lambda,
                        const Matrix& h0);

/* Left: phi^B(g) = phi(g) B^{-1}. Right: phi^B(g) = B phi(g). */
Cocycle gl_twist(const Cocycle& phi, const Matrix& b);

/* The two non-split models of dimension 2g+1. */
Representation unit_tangent_rep(const Surface& s);
Representation dual_unit_tangent_rep(const Surface& s);

}  // namespace modreps
