#include "modreps/errors.hpp"
#include "modreps/exactla.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace modreps;

namespace {

Matrix jordan_block(std::size_t n, long lambda) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = lambda;
        if (i + 1 < n) m(i, i + 1) = 1;
    }
    return m;
}

Matrix col(std::initializer_list<long> v) {
    Matrix m(v.size(), 1);
    std::size_t i = 0;
    for (long x : v) m(i++, 0) = x;
    return m;
}

}  // namespace

TEST_SUITE("exactla") {

TEST_CASE("rationals parse and print canonically") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2/4")) == "-1/2");
    CHECK(to_string(parse_rational("+3")) == "3");
    CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("matrix arithmetic") {
    Matrix a{{1, 2}, {3, 4}};
    Matrix b{{0, 1}, {1, 0}};
    CHECK(a * b == Matrix{{2, 1}, {4, 3}});
    CHECK(a + b == Matrix{{1, 3}, {4, 4}});
    CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
    CHECK(determinant(a) == -2);
    CHECK(a * inverse(a) == Matrix::identity(2));
    CHECK_THROWS_AS(inverse(Matrix{{1, 1}, {1, 1}}), Error);
    CHECK(hstack({a, b}).cols() == 4);
    CHECK(vstack({a, b}).rows() == 4);
    CHECK(block_diagonal(a, b).block(2, 2, 2, 2) == b);
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(2)).dim() == 0);
    Subspace k = kernel(Matrix{{1, 1}, {1, 1}});
    CHECK(k.dim() == 1);
    CHECK(k == Subspace::span(col({1, -1})));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix left = support::random_matrix(rng, 5, 3), right = support::random_matrix(rng, 3, 5);
        if (support::rank_oracle(left) < 3 || support::rank_oracle(right) < 3) continue;
        Matrix m = left * right;
        Subspace ker = kernel(m);
        CHECK(ker.dim() == 5 - support::rank_oracle(m));
        CHECK(ker.dim() == 2);
        CHECK((m * ker.basis()).is_zero());
    }
}

TEST_CASE("solve examples and round trip") {
    Matrix b = col({3, -1});
    CHECK(*solve(Matrix::identity(2), b) == b);
    CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, col({1, 0})).has_value());
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Matrix a = support::random_rational_matrix(rng, r, c);
        Matrix x0 = support::random_rational_matrix(rng, c, 2);
        auto x = solve(a, a * x0);
        REQUIRE(x.has_value());
        CHECK(a * *x == a * x0);
    }
}

TEST_CASE("subspace canonical form") {
    Matrix u{{1, 2}, {1, 2}, {0, 1}};
    Matrix v{{3, 0}, {3, 1}, {1, 1}};
    Subspace su = Subspace::span(u);
    Subspace sv = Subspace::span(v);
    CHECK(su.dim() == 2);
    CHECK(su.contains(col({1, 1, 0})));
    CHECK_FALSE(su.contains(col({1, 0, 0})));
    CHECK(su.sum(sv) == Subspace::full(3));
    CHECK(su.intersect(sv).dim() == 1);
    CHECK(Subspace::span(u * Matrix{{2, 1}, {1, 1}}) == su);
}

TEST_CASE("row reducer agrees with kernel") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = support::random_matrix(rng, 1 + rng() % 6, 6, -1, 1);
        RowReducer rr(6);
        rr.add_rows(m);
        CHECK(rr.rank() == support::rank_oracle(m));
        CHECK(rr.null_space() == kernel(m));
    }
}

TEST_CASE("unipotence") {
    CHECK(is_unipotent(Matrix::identity(4)));
    CHECK(is_unipotent(jordan_block(3, 1)));
    CHECK_FALSE(is_unipotent(Matrix::diagonal({2, 1, 1})));
}

TEST_CASE("generalized eigenspaces") {
    CHECK(generalized_eigenspace(Matrix::identity(3), 1, 1) == Subspace::full(3));
    CHECK(generalized_eigenspace(jordan_block(2, 1), 1, 1).dim() == 1);
    CHECK(generalized_eigenspace(jordan_block(2, 1), 1, 2) == Subspace::full(2));
    CHECK_THROWS_AS(generalized_eigenspace(Matrix::identity(2), 1, 0), Error);
}

TEST_CASE("jordan filtration examples") {
    CHECK(jordan_filtration_dims(jordan_block(3, 1), 1) == std::vector<std::size_t>{1, 1, 1});
    CHECK(jordan_filtration_dims(block_diagonal(jordan_block(2, 1), jordan_block(1, 1)), 1) ==
          std::vector<std::size_t>{2, 1});
    CHECK(jordan_filtration_dims(Matrix::diagonal({2, 3}), 1).empty());
}

TEST_CASE("jordan filtration matches the rank-of-powers oracle") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 8;
        Matrix nil = support::random_matrix(rng, n, n, -2, 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) nil(i, j) = 0;
        Matrix p = support::random_unimodular(rng, n);
        Matrix m = p * nil * inverse(p);
        std::vector<std::size_t> dims = jordan_filtration_dims(m, 0);
        std::vector<std::size_t> expect;
        std::size_t prev = n;
        Matrix power = Matrix::identity(n);
        for (;;) {
            power = power * m;
            std::size_t r = support::rank_oracle(power);
            if (r == prev) break;
            expect.push_back(prev - r);
            prev = r;
        }
        CHECK(dims == expect);
        CHECK(std::is_sorted(dims.rbegin(), dims.rend()));
        std::size_t total = 0;
        for (auto d : dims) total += d;
        CHECK(total == n);
        CHECK(is_unipotent(m + Matrix::identity(n)));
    }
}

TEST_CASE("eigenspaces are nested") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng() % 5;
        Matrix m = support::random_matrix(rng, n, n, -1, 1);
        for (long lambda : {0L, 1L, -1L}) {
            Subspace prev = generalized_eigenspace(m, lambda, 1);
            for (std::size_t k = 2; k <= n + 1; ++k) {
                Subspace next = generalized_eigenspace(m, lambda, k);
                CHECK(next.contains(prev));
                if (next.dim() == prev.dim()) CHECK(next == prev);
                prev = next;
            }
        }
    }
}

TEST_CASE("unipotent iff the filtration at 1 fills the space") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 5;
        Matrix m = support::random_matrix(rng, n, n, -1, 1);
        if (trial % 2 == 0)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j <= i; ++j) m(i, j) = i == j ? 1 : 0;
        std::size_t total = 0;
        for (auto d : jordan_filtration_dims(m, 1)) total += d;
        CHECK(is_unipotent(m) == (total == n));
    }
}

TEST_CASE("matrix powers") {
    CHECK(matrix_power(Matrix{{2, 1}, {0, 3}}, 0) == Matrix::identity(2));
    CHECK(matrix_power(Rational(2) * Matrix::identity(3), 3) == Rational(8) * Matrix::identity(3));
    Matrix m{{1, 1}, {0, 1}};
    CHECK(matrix_power(m, -3) == Matrix{{1, -3}, {0, 1}});
    std::mt19937 rng(8);
    Matrix r = support::random_unimodular(rng, 4);
    CHECK(matrix_power(r, 7) == support::product_oracle(std::vector<Matrix>(7, r), 4));
}

TEST_CASE("genus-one chain display raised to the fourth power") {
    // The 5x5 block display of rho(T_a^2 T_b) in a normalized chain basis, with the alpha entries
    // set to arbitrary rationals; both the printed form and the exact product square to order 4.
    std::mt19937 rng(1);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix alpha = support::random_rational_matrix(rng, 1, 2);
        Rational aa = alpha(0, 0), ab = alpha(0, 1);
        Matrix printed(5, 5);
        printed.set_block(0, 0, Matrix{{-1, 2, 0, 0}, {-1, 1, 1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        printed(0, 4) = 2 * (aa + ab);
        printed(1, 4) = ab;
        printed(4, 4) = 1;
        CHECK(matrix_power(printed, 4) == Matrix::identity(5));
        Matrix exact = printed;
        exact(0, 2) = 2;
        CHECK(matrix_power(exact, 4) == Matrix::identity(5));
        CHECK_FALSE(matrix_power(exact, 2) == Matrix::identity(5));
    }
}

TEST_CASE("characteristic polynomial and rational eigenvalues") {
    Matrix m{{2, 0, 0}, {1, 3, 0}, {0, 0, -1}};
    std::vector<Rational> p = characteristic_polynomial(m);
    // (x - 2)(x - 3)(x + 1) = x^3 - 4x^2 + x + 6
    REQUIRE(p.size() == 4);
    CHECK(p[0] == 6);
    CHECK(p[1] == 1);
    CHECK(p[2] == -4);
    CHECK(p[3] == 1);
    std::vector<Rational> ev = rational_eigenvalues(m);
    CHECK(ev == std::vector<Rational>{-1, 2, 3});
    CHECK(rational_eigenvalues(Matrix{{0, -1}, {1, 0}}).empty());
    Matrix half{{1, 0}, {0, 0}};
    half(1, 1) = Rational(1, 2);
    CHECK(rational_eigenvalues(half) == std::vector<Rational>{Rational(1, 2), 1});
}

}
