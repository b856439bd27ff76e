#pragma once

#include "modreps/exactla.hpp"
#include "modreps/presentation.hpp"
#include "modreps/representation.hpp"

#include <optional>
#include <vector>

namespace modreps {

struct CocycleSpace {
    std::vector<Cocycle> z1_basis;
    std::size_t b1_dim = 0;
    std::size_t h1_dim = 0;
};

/* delta(v)(s) = (rho(s) - I) v, v of shape n x b. */
Cocycle coboundary(const Representation& rep, const Matrix& v);
/* Right analogue: s -> h rho(s) - h, h of shape a x n. */
Cocycle right_coboundary(const Representation& rep, const Matrix& h);

/* Coefficients are the representation space itself (values n x 1, left rule).
   Throws UnverifiedRepresentation when rep fails a relator. */
CocycleSpace cocycle_space(const Representation& rep, const RelatorCatalog& cat);

/* Fox-calculus constraint rows: phi(r) = sum_s C_s(r) phi(s), blocks in generator order. */
Matrix relator_constraint(const Representation& rep, const GroupWord& r);

std::optional<Matrix> is_coboundary(const Cocycle& phi);

/* Translation between a right cocycle for rho and a left cocycle for the dual:
   psi(g) = rho(g)^{-T} phi(g)^T. */
Cocycle right_to_left(const Cocycle& right);
Cocycle left_to_right(const Cocycle& left_on_dual, const Representation& base);

/* Deterministic non-coboundary in Z^1(Mod; H) (left, values 2g x 1). */
Cocycle nontrivial_h_class(const Surface& s);
/* Deterministic non-coboundary in Z^1(Mod; Hom(H, C)) (right, values 1 x 2g). */
Cocycle nontrivial_hdual_class(const Surface& s);

/* Connecting map of pi_1(Sigma_g) acting on C + H via (u,v) -> (u + lambda<[x],v>, v),
   applied to the abelianization with lifts (shift_i, [x_i]), (shift_{g+i}, [y_i]). */
Rational connecting_map_surface_group(int g, const Rational& lambda);
Rational connecting_map_surface_group(int g, const Rational& lambda, const std::vector<Rational>& lift_shifts);

}  // namespace modreps
