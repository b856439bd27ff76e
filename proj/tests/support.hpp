#pragma once

#include "modreps/matrix.hpp"
#include "modreps/presentation.hpp"

#include <random>
#include <string>
#include <vector>

namespace support {

using modreps::GroupWord;
using modreps::Matrix;
using modreps::Rational;

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

inline Matrix random_rational_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = Rational(num(rng), den(rng));
            m(i, j).canonicalize();
        }
    return m;
}

/* Unit lower times unit upper triangular with small integer entries: determinant 1. */
inline Matrix random_unimodular(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-2, 2);
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = d(rng);
            u(j, i) = d(rng);
        }
    return l * u;
}

inline GroupWord random_word(std::mt19937& rng, const std::vector<std::string>& names, std::size_t len) {
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<modreps::Letter> letters;
    for (std::size_t i = 0; i < len; ++i) letters.push_back({names[pick(rng)], sign(rng) ? 1L : -1L});
    return GroupWord(letters);
}

/* Plain Gaussian elimination on a copy, kept separate from the library's rref. */
inline std::size_t rank_oracle(const Matrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t k = c; k < m.cols(); ++k) a[i][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

/* +1 above the diagonal, -1 below. */
inline Matrix chain_pattern(std::size_t k) {
    Matrix p(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        p(i, i + 1) = 1;
        p(i + 1, i) = -1;
    }
    return p;
}

inline Matrix product_oracle(const std::vector<Matrix>& ms, std::size_t n) {
    Matrix out = Matrix::identity(n);
    for (const auto& m : ms) {
        Matrix next(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) next(i, j) += out(i, k) * m(k, j);
        out = next;
    }
    return out;
}

}  // namespace support
