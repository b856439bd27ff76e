#include "modreps/matrix.hpp"

#include "modreps/errors.hpp"

#include <sstream>
#include <utility>

namespace modreps {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ChainTooLong: return "ChainTooLong";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::SeparatingCurve: return "SeparatingCurve";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnverifiedRepresentation: return "UnverifiedRepresentation";
    case ErrorKind::CocycleInvalid: return "CocycleInvalid";
    case ErrorKind::CoboundaryEquationViolated: return "CoboundaryEquationViolated";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotTransvective: return "NotTransvective";
    case ErrorKind::DegenerateChain: return "DegenerateChain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return Error(ErrorKind::Schema, "not a rational: \"" + s + "\""); };
    if (s.empty()) throw bad();
    std::size_t slash = s.find('/');
    auto digits_ok = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw bad();
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows x cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v) { return Matrix(v.size(), 1, v); }

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw Error(ErrorKind::ShapeMismatch, "set_block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "sum of different shapes");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::ShapeMismatch, "difference of different shapes");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

Matrix operator-(const Matrix& a) {
    Matrix r = a;
    r *= Rational(-1);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "product of incompatible shapes");
    Matrix c(a.rows(), b.cols());
    mpq_class t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b(k, j);
                if (sgn(bkj) == 0) continue;
                mpq_mul(t.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
                c(i, j) += t;
            }
        }
    return c;
}

Matrix operator*(Rational s, Matrix a) {
    a *= s;
    return a;
}

Matrix hstack(const std::vector<Matrix>& parts) {
    std::size_t rows = parts.empty() ? 0 : parts.front().rows();
    std::size_t cols = 0;
    for (const auto& p : parts) {
        if (p.rows() != rows) throw Error(ErrorKind::ShapeMismatch, "hstack row mismatch");
        cols += p.cols();
    }
    Matrix m(rows, cols);
    std::size_t c = 0;
    for (const auto& p : parts) {
        m.set_block(0, c, p);
        c += p.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    std::size_t cols = parts.empty() ? 0 : parts.front().cols();
    std::size_t rows = 0;
    for (const auto& p : parts) {
        if (p.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "vstack column mismatch");
        rows += p.rows();
    }
    Matrix m(rows, cols);
    std::size_t r = 0;
    for (const auto& p : parts) {
        m.set_block(r, 0, p);
        r += p.rows();
    }
    return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
    std::size_t r = 0;
    mpq_class t;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (sgn(m(r, j)) == 0) continue;
                mpq_mul(t.get_mpq_t(), f.get_mpq_t(), m(r, j).get_mpq_t());
                m(i, j) -= t;
            }
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t rank(const Matrix& m) {
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
    Matrix a = m;
    Rational det = 1;
    std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug = hstack({m, Matrix::identity(n)});
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorKind::NotInvertible, "matrix is singular");
    return r.block(0, n, n, n);
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace modreps
