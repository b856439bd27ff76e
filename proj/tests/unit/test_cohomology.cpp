#include "modreps/classify.hpp"
#include "modreps/cohomology.hpp"
#include "modreps/errors.hpp"
#include "modreps/presentation.hpp"
#include "modreps/reps.hpp"
#include "modreps/suspension.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace modreps;

namespace {

struct Dims {
    std::size_t z1, b1;
};

/* Cocycle dimensions by evaluating basis cochains on every relator, without Fox derivatives. */
Dims oracle_dims(const Representation& rep, const RelatorCatalog& cat) {
    std::size_t n = rep.dimension(), m = rep.names().size();
    Matrix eval(n * cat.relators.size(), n * m);
    for (std::size_t col = 0; col < n * m; ++col) {
        std::vector<Matrix> values(m, Matrix(n, 1));
        values[col / n](col % n, 0) = 1;
        Cocycle phi(Chirality::Left, rep, values);
        for (std::size_t k = 0; k < cat.relators.size(); ++k)
            eval.set_block(k * n, col, evaluate_cocycle(rep, phi, cat.relators[k].word));
    }
    Matrix stacked(n * m, n);
    for (std::size_t s = 0; s < m; ++s) stacked.set_block(s * n, 0, rep.images()[s] - Matrix::identity(n));
    return {n * m - support::rank_oracle(eval), support::rank_oracle(stacked)};
}

RelatorCatalog with_consequences(const RelatorCatalog& cat, std::mt19937& rng, const std::vector<std::string>& names) {
    RelatorCatalog out = cat;
    for (int k = 0; k < 5; ++k) {
        const Relator& r = cat.relators[rng() % cat.relators.size()];
        const Relator& q = cat.relators[rng() % cat.relators.size()];
        GroupWord c = support::random_word(rng, names, 5);
        out.relators.push_back({r.tag, r.label + " extra", r.word.conjugate_by(c) * q.word.inverse()});
    }
    return out;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("coboundary examples") {
    Surface s(3);
    Representation psi = symplectic_rep(s);
    CHECK(coboundary(psi, Matrix(6, 1)).values() == std::vector<Matrix>(7, Matrix(6, 1)));
    Representation triv = trivial_rep(s, 2);
    std::mt19937 rng(1);
    Matrix v = support::random_matrix(rng, 2, 1);
    Cocycle dt = coboundary(triv, v);
    for (const auto& x : dt.values()) CHECK(x.is_zero());
    Matrix v0 = support::random_matrix(rng, 6, 1);
    Cocycle d = coboundary(psi, v0);
    for (const auto& name : psi.names()) CHECK(d.value(name) == (psi.image(name) - Matrix::identity(6)) * v0);
    Matrix h = support::random_matrix(rng, 1, 6);
    Cocycle rd = right_coboundary(psi, h);
    CHECK(rd.chirality() == Chirality::Right);
    for (const auto& name : psi.names()) CHECK(rd.value(name) == h * psi.image(name) - h);
}

TEST_CASE("first cohomology dimensions agree with the evaluation oracle") {
    Surface s(3);
    const RelatorCatalog& cat = relator_catalog(s);
    std::vector<Representation> reps{trivial_rep(s, 1), symplectic_rep(s), dual_rep(symplectic_rep(s)),
                                      unit_tangent_rep(s), dual_unit_tangent_rep(s)};
    std::vector<std::size_t> h1{0, 1, 1, 0, 0};
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CocycleSpace sp = cocycle_space(reps[i], cat);
        Dims o = oracle_dims(reps[i], cat);
        CHECK(sp.z1_basis.size() == o.z1);
        CHECK(sp.b1_dim == o.b1);
        CHECK(sp.h1_dim == o.z1 - o.b1);
        CHECK(sp.h1_dim == h1[i]);
    }
}

TEST_CASE("first cohomology with symplectic coefficients for genus 3 to 6") {
    for (int g = 3; g <= 6; ++g) {
        Surface s(g);
        CocycleSpace sp = cocycle_space(symplectic_rep(s), relator_catalog(s));
        CHECK(sp.b1_dim == static_cast<std::size_t>(2 * g));
        CHECK(sp.h1_dim == 1);
        CHECK(cocycle_space(trivial_rep(s, 1), relator_catalog(s)).h1_dim == 0);
    }
}

TEST_CASE("cocycle basis vanishes on relators") {
    Surface s(4);
    const RelatorCatalog& cat = relator_catalog(s);
    for (const auto& rep : {symplectic_rep(s), unit_tangent_rep(s)}) {
        CocycleSpace sp = cocycle_space(rep, cat);
        for (const auto& z : sp.z1_basis) CHECK_FALSE(first_cocycle_failure(z, cat).has_value());
    }
}

TEST_CASE("extra consequence relators leave the cohomology unchanged") {
    std::mt19937 rng(77);
    Surface s(3);
    const RelatorCatalog& cat = relator_catalog(s);
    for (const auto& rep : {symplectic_rep(s), dual_unit_tangent_rep(s)}) {
        RelatorCatalog big = with_consequences(cat, rng, rep.names());
        CocycleSpace a = cocycle_space(rep, cat), b = cocycle_space(rep, big);
        CHECK(a.z1_basis.size() == b.z1_basis.size());
        CHECK(a.h1_dim == b.h1_dim);
    }
}

TEST_CASE("kernel of the coboundary is the fixed space") {
    Surface s(3);
    for (const auto& rep : {symplectic_rep(s), unit_tangent_rep(s), dual_unit_tangent_rep(s), trivial_rep(s, 2)}) {
        std::size_t n = rep.dimension(), m = rep.names().size();
        Matrix stacked(n * m, n);
        for (std::size_t i = 0; i < m; ++i) stacked.set_block(i * n, 0, rep.images()[i] - Matrix::identity(n));
        CHECK(kernel(stacked) == fixed_space(rep));
        CHECK(cocycle_space(rep, relator_catalog(s)).b1_dim == n - fixed_space(rep).dim());
    }
}

TEST_CASE("coboundary detection") {
    Surface s(3);
    Representation psi = symplectic_rep(s);
    std::mt19937 rng(5);
    Matrix v0 = support::random_matrix(rng, 6, 1);
    auto w = is_coboundary(coboundary(psi, v0));
    REQUIRE(w.has_value());
    CHECK(coboundary(psi, *w).values() == coboundary(psi, v0).values());
    CHECK(is_coboundary(coboundary(psi, Matrix(6, 1))).has_value());

    Cocycle h = nontrivial_h_class(s);
    CHECK_FALSE(is_coboundary(h).has_value());
    CHECK_FALSE(is_coboundary(h.plus(coboundary(psi, v0))).has_value());
    CHECK_FALSE(is_coboundary(h.scaled(Rational(-3, 2))).has_value());
    CHECK(is_coboundary(h.scaled(0)).has_value());

    Matrix h0 = support::random_matrix(rng, 1, 6);
    auto rw = is_coboundary(right_coboundary(psi, h0));
    REQUIRE(rw.has_value());
    CHECK(right_coboundary(psi, *rw).values() == right_coboundary(psi, h0).values());
    Cocycle hd = nontrivial_hdual_class(s);
    CHECK_FALSE(is_coboundary(hd).has_value());
    CHECK_FALSE(is_coboundary(hd.plus(right_coboundary(psi, h0))).has_value());
}

TEST_CASE("nontrivial classes for genus 3 to 6") {
    for (int g = 3; g <= 6; ++g) {
        Surface s(g);
        const RelatorCatalog& cat = relator_catalog(s);
        Cocycle h = nontrivial_h_class(s), hd = nontrivial_hdual_class(s);
        CHECK(h.chirality() == Chirality::Left);
        CHECK(hd.chirality() == Chirality::Right);
        CHECK(h.values().front().rows() == static_cast<std::size_t>(2 * g));
        CHECK(h.values().front().cols() == 1);
        CHECK(hd.values().front().rows() == 1);
        CHECK_FALSE(first_cocycle_failure(h, cat).has_value());
        CHECK_FALSE(first_cocycle_failure(hd, cat).has_value());
        CHECK_FALSE(is_coboundary(h).has_value());
        CHECK_FALSE(is_coboundary(hd).has_value());
    }
}

TEST_CASE("right and left cocycles translate through the dual") {
    Surface s(3);
    Representation psi = symplectic_rep(s);
    const RelatorCatalog& cat = relator_catalog(s);
    std::mt19937 rng(8);
    Cocycle r = nontrivial_hdual_class(s).plus(right_coboundary(psi, support::random_matrix(rng, 1, 6)));
    Cocycle l = right_to_left(r);
    CHECK(l.chirality() == Chirality::Left);
    CHECK_FALSE(first_cocycle_failure(l, cat).has_value());
    CHECK_FALSE(is_coboundary(l).has_value());
    Cocycle back = left_to_right(l, psi);
    CHECK(back.values() == r.values());
    CHECK_THROWS_AS(right_to_left(l), Error);
    CHECK_THROWS_AS(left_to_right(r, psi), Error);
    // Coboundaries map to coboundaries.
    Cocycle rc = right_coboundary(psi, support::random_matrix(rng, 1, 6));
    CHECK(is_coboundary(right_to_left(rc)).has_value());
}

TEST_CASE("twisted coefficients of the unit tangent model") {
    Surface s(3);
    const RelatorCatalog& cat = relator_catalog(s);
    Representation psi = symplectic_rep(s);
    CHECK(cocycle_space(coaffine_suspension(psi, nontrivial_hdual_class(s), 1), cat).h1_dim == 0);
    std::mt19937 rng(3);
    Cocycle cob = right_coboundary(psi, support::random_matrix(rng, 1, 6));
    CHECK(cocycle_space(coaffine_suspension(psi, cob, 1), cat).h1_dim == 1);
}

TEST_CASE("unverified representation is rejected") {
    Surface s(3);
    Representation triv = trivial_rep(s, 1);
    std::vector<Matrix> images = triv.images();
    images[1] = Matrix{{2}};
    Representation bad(s, triv.names(), images, triv.curve_system_hash());
    try {
        cocycle_space(bad, relator_catalog(s));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnverifiedRepresentation);
    }
}

TEST_CASE("connecting map of the surface group") {
    CHECK(connecting_map_surface_group(3, 1) == 6);
    CHECK(connecting_map_surface_group(4, Rational(1, 2)) == 4);
    CHECK(connecting_map_surface_group(5, 3) == 30);
    CHECK(connecting_map_surface_group(3, 0) == 0);
    std::mt19937 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        int g = 3 + static_cast<int>(rng() % 4);
        Rational lambda = support::random_rational_matrix(rng, 1, 1)(0, 0);
        Matrix shifts = support::random_rational_matrix(rng, 1, 2 * g);
        std::vector<Rational> lifts;
        for (int i = 0; i < 2 * g; ++i) lifts.push_back(shifts(0, i));
        Rational base = connecting_map_surface_group(g, lambda);
        CHECK(base == 2 * g * lambda);
        CHECK(connecting_map_surface_group(g, lambda, lifts) == base);
    }
    CHECK_THROWS_AS(connecting_map_surface_group(3, 1, std::vector<Rational>(2)), Error);
}

}
