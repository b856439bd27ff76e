#include "modreps/exactla.hpp"

#include "modreps/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace modreps {

Subspace Subspace::span(const Matrix& columns) {
    Subspace s(columns.rows());
    std::vector<std::size_t> piv;
    Matrix r = rref(columns.transpose(), &piv);
    s.basis_ = r.block(0, 0, piv.size(), r.cols()).transpose();
    return s;
}

bool Subspace::contains(const Matrix& vectors) const {
    if (vectors.rows() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient");
    // In column-echelon form column k has its leading 1 in row p_k and zeros there elsewhere.
    std::vector<std::size_t> lead(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
        std::size_t i = 0;
        while (sgn(basis_(i, k)) == 0) ++i;
        lead[k] = i;
    }
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        Matrix v = vectors.col(j);
        for (std::size_t k = 0; k < dim(); ++k) {
            Rational f = v(lead[k], 0);
            if (sgn(f) == 0) continue;
            for (std::size_t i = 0; i < ambient_; ++i) v(i, 0) -= f * basis_(i, k);
        }
        if (!v.is_zero()) return false;
    }
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    return span(hstack({basis_, other.basis_}));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    Subspace k = kernel(hstack({basis_, -other.basis_}));
    Matrix coeffs = k.basis().block(0, 0, dim(), k.dim());
    return span(basis_ * coeffs);
}

bool RowReducer::add(std::vector<Rational> row) {
    if (row.size() != n_) throw Error(ErrorKind::DimensionMismatch, "row length differs from unknown count");
    mpq_class t;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational f = row[pivots_[k]];
        if (sgn(f) == 0) continue;
        const auto& r = rows_[k];
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(r[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), r[j].get_mpq_t());
            row[j] -= t;
        }
    }
    std::size_t p = 0;
    while (p < n_ && sgn(row[p]) == 0) ++p;
    if (p == n_) return false;
    Rational inv = 1 / row[p];
    for (auto& x : row) x *= inv;
    for (auto& r : rows_) {
        Rational f = r[p];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (sgn(row[j]) == 0) continue;
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), row[j].get_mpq_t());
            r[j] -= t;
        }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
}

void RowReducer::add_rows(const Matrix& rows) {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        std::vector<Rational> r(rows.entries().begin() + i * rows.cols(),
                                rows.entries().begin() + (i + 1) * rows.cols());
        add(std::move(r));
    }
}

Subspace RowReducer::null_space() const {
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Matrix> cols;
    for (std::size_t f = 0; f < n_; ++f) {
        if (is_pivot[f]) continue;
        Matrix v(n_, 1);
        v(f, 0) = 1;
        for (std::size_t k = 0; k < rows_.size(); ++k) v(pivots_[k], 0) = -rows_[k][f];
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return Subspace(n_);
    return Subspace::span(hstack(cols));
}

Subspace kernel(const Matrix& m) {
    RowReducer rr(m.cols());
    rr.add_rows(m);
    return rr.null_space();
}

Subspace column_space(const Matrix& m) { return Subspace::span(m); }

std::optional<Matrix> solve(const Matrix& m, const Matrix& target) {
    if (m.rows() != target.rows()) throw Error(ErrorKind::DimensionMismatch, "row counts differ in solve");
    std::vector<std::size_t> piv;
    Matrix r = rref(hstack({m, target}), &piv);
    Matrix x(m.cols(), target.cols());
    for (std::size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] >= m.cols()) return std::nullopt;
        for (std::size_t j = 0; j < target.cols(); ++j) x(piv[k], j) = r(k, m.cols() + j);
    }
    return x;
}

bool is_unipotent(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "is_unipotent needs a square matrix");
    if (m.rows() == 0) return true;
    return matrix_power(m - Matrix::identity(m.rows()), static_cast<long>(m.rows())).is_zero();
}

static Matrix shifted(const Matrix& m, const Rational& lambda) {
    Matrix n = m;
    for (std::size_t i = 0; i < m.rows(); ++i) n(i, i) -= lambda;
    return n;
}

Subspace generalized_eigenspace(const Matrix& m, const Rational& lambda, std::size_t k) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "generalized_eigenspace needs a square matrix");
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be at least 1");
    return kernel(matrix_power(shifted(m, lambda), static_cast<long>(k)));
}

std::vector<std::size_t> jordan_filtration_dims(const Matrix& m, const Rational& lambda) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "jordan_filtration_dims needs a square matrix");
    Matrix n = shifted(m, lambda);
    Matrix p = n;
    std::vector<std::size_t> out;
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        std::size_t d = kernel(p).dim();
        if (d == prev) break;
        out.push_back(d - prev);
        prev = d;
        p = p * n;
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] > out[i - 1]) throw std::logic_error("jordan filtration dimensions increased");
    return out;
}

Matrix matrix_power(const Matrix& m, long e) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "matrix_power needs a square matrix");
    Matrix base = e < 0 ? inverse(m) : m;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Matrix acc = Matrix::identity(m.rows());
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "characteristic polynomial needs a square matrix");
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    Matrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        Matrix am = m * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

static std::vector<mpz_class> positive_divisors(mpz_class v) {
    v = abs(v);
    std::vector<std::pair<mpz_class, unsigned>> fac;
    for (mpz_class p = 2; p * p <= v; ++p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) fac.emplace_back(p, e);
    }
    if (v > 1) fac.emplace_back(v, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

std::vector<Rational> rational_eigenvalues(const Matrix& m) {
    std::vector<Rational> c = characteristic_polynomial(m);
    std::vector<Rational> roots;
    std::size_t lo = 0;
    while (lo < c.size() && sgn(c[lo]) == 0) ++lo;
    if (lo > 0) roots.emplace_back(0);
    c.erase(c.begin(), c.begin() + static_cast<long>(lo));
    if (c.size() <= 1) return roots;
    mpz_class l = 1;
    for (const auto& x : c) l = lcm(l, x.get_den());
    std::vector<mpz_class> a;
    for (const auto& x : c) a.push_back(mpz_class(x * l));
    auto value = [&](const Rational& x) {
        Rational acc = 0;
        for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + Rational(a[i]);
        return acc;
    };
    for (const auto& p : positive_divisors(a.front()))
        for (const auto& q : positive_divisors(a.back()))
            for (int s : {1, -1}) {
                Rational x(p * s, q);
                x.canonicalize();
                if (sgn(value(x)) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace modreps
