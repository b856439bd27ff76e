#pragma once

#include "modreps/representation.hpp"
#include "modreps/surface.hpp"

namespace modreps {

/* x -> x + <x,c> c on H_1 in the basis (x_1..x_g, y_1..y_g). */
Matrix transvection_matrix(const Surface& s, const CurveClass& c);
Matrix transvection_matrix(const Surface& s, const HomologyVector& c);

Representation symplectic_rep(const Surface& s);
Representation trivial_rep(const Surface& s, std::size_t dim);
Representation dual_rep(const Representation& rep);
Representation direct_sum_with_trivial(const Representation& rep, std::size_t k);
Representation direct_sum(const Representation& a, const Representation& b);
/* Generator-wise P rho(s) P^{-1}. */
Representation conjugate(const Representation& rep, const Matrix& p);

}  // namespace modreps
