#pragma once

#include "modreps/matrix.hpp"

#include <optional>
#include <vector>

namespace modreps {

/* Column span stored in reduced column-echelon form, so equality is structural. */
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

    static Subspace span(const Matrix& columns);
    static Subspace full(std::size_t n) { return span(Matrix::identity(n)); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    const Matrix& basis() const { return basis_; }

    bool contains(const Matrix& vectors) const;
    bool contains(const Subspace& other) const { return contains(other.basis_); }

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Matrix basis_;
};

/* Accumulates linear equations row by row, keeping them in reduced echelon form. */
class RowReducer {
public:
    explicit RowReducer(std::size_t unknowns) : n_(unknowns) {}

    // Returns false when the row was already dependent on earlier rows.
    bool add(std::vector<Rational> row);
    void add_rows(const Matrix& rows);
    std::size_t rank() const { return rows_.size(); }
    std::size_t unknowns() const { return n_; }
    Subspace null_space() const;

private:
    std::size_t n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);
std::optional<Matrix> solve(const Matrix& m, const Matrix& target);

bool is_unipotent(const Matrix& m);
Subspace generalized_eigenspace(const Matrix& m, const Rational& lambda, std::size_t k);
std::vector<std::size_t> jordan_filtration_dims(const Matrix& m, const Rational& lambda);
Matrix matrix_power(const Matrix& m, long e);

/* Coefficients c_0..c_n of det(xI - m), lowest degree first. */
std::vector<Rational> characteristic_polynomial(const Matrix& m);
/* Distinct rational roots of the characteristic polynomial, ascending. */
std::vector<Rational> rational_eigenvalues(const Matrix& m);

}  // namespace modreps
