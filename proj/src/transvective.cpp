#include "modreps/transvective.hpp"

#include "modreps/errors.hpp"
#include "modreps/exactla.hpp"
#include "modreps/presentation.hpp"

namespace modreps {

TransvectionData extract_transvection(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "extract_transvection needs a square matrix");
    std::size_t n = m.rows();
    Matrix d = m - Matrix::identity(n);
    std::size_t r = rank(d);
    if (r != 1) throw Error(ErrorKind::NotTransvective, "rank of m - I is " + std::to_string(r));
    if (!(d * d).is_zero()) throw Error(ErrorKind::NotTransvective, "(m - I)^2 is nonzero");
    std::size_t j = 0;
    while (d.col(j).is_zero()) ++j;
    Matrix v = d.col(j);
    std::size_t i = 0;
    while (sgn(v(i, 0)) == 0) ++i;
    Rational lead = v(i, 0);
    v *= 1 / lead;
    return {v, d.row(i)};
}

Rational pair(const TransvectionData& d, const Matrix& v) { return (d.covector * v)(0, 0); }

Rational braid_identity(const TransvectionData& da, const TransvectionData& db) {
    return pair(da, db.vector) * pair(db, da.vector);
}

std::pair<Rational, Rational> disjoint_identity(const TransvectionData& da, const TransvectionData& dc) {
    return {pair(da, dc.vector), pair(dc, da.vector)};
}

std::vector<TransvectionData> normalize_chain(const std::vector<TransvectionData>& datas) {
    std::vector<TransvectionData> out;
    Rational c = 1;
    for (std::size_t i = 0; i < datas.size(); ++i) {
        if (i > 0) {
            Rational step = pair(datas[i - 1], datas[i].vector);
            if (sgn(step) == 0)
                throw Error(ErrorKind::DegenerateChain, "alpha_" + std::to_string(i) + "(v_" + std::to_string(i + 1) +
                                                            ") vanishes");
            c *= step;
        }
        TransvectionData t = datas[i];
        t.covector *= c;
        t.vector *= 1 / c;
        out.push_back(std::move(t));
    }
    return out;
}

Matrix chain_pairing_matrix(const std::vector<TransvectionData>& datas) {
    Matrix p(datas.size(), datas.size());
    for (std::size_t i = 0; i < datas.size(); ++i)
        for (std::size_t j = 0; j < datas.size(); ++j) p(i, j) = pair(datas[i], datas[j].vector);
    return p;
}

Matrix normalized_chain_basis(const std::vector<TransvectionData>& normalized, std::size_t n) {
    std::vector<Matrix> cols;
    for (const auto& d : normalized) cols.push_back(d.vector);
    Matrix q = cols.empty() ? Matrix(n, 0) : hstack(cols);
    if (rank(q) != cols.size()) throw Error(ErrorKind::DegenerateChain, "chain vectors are linearly dependent");
    for (std::size_t i = 0; i < n && q.cols() < n; ++i) {
        Matrix e(n, 1);
        e(i, 0) = 1;
        Matrix t = hstack({q, e});
        if (rank(t) == t.cols()) q = t;
    }
    return q;
}

CheckReport separating_twist_check(const Representation& rep, const std::vector<std::string>& chain) {
    if (chain.size() < 2) throw Error(ErrorKind::InvalidArgument, "chain needs at least two curves");
    for (const auto& c : chain) rep.index_of(c);
    CheckReport report;
    report.chain = chain;
    std::size_t n = rep.dimension();
    std::size_t used = chain.size() >= 4 ? 4 : 2;

    std::optional<Matrix> q, qinv;
    try {
        std::vector<TransvectionData> ds;
        for (std::size_t i = 0; i < used; ++i) ds.push_back(extract_transvection(rep.image(chain[i])));
        q = normalized_chain_basis(normalize_chain(ds), n);
        qinv = inverse(*q);
        report.normalized_basis = q;
    } catch (const Error&) {
        q.reset();
    }

    auto record = [&](const std::string& word, const Matrix& base, long e) {
        PowerRecord p;
        p.word = word;
        p.exponent = e;
        p.matrix = matrix_power(base, e);
        p.is_identity = p.matrix.is_identity();
        if (q) p.normalized = *qinv * p.matrix * *q;
        report.powers.push_back(p);
        return p.is_identity;
    };
    const std::string& a = chain[0];
    const std::string& b = chain[1];
    GroupWord w1 = GroupWord::gen(a, 2) * GroupWord::gen(b);
    Matrix p1 = evaluate_word(rep, w1);
    for (long e : {1L, 2L}) record(w1.to_string(), p1, e);
    report.genus_one_pass = record(w1.to_string(), p1, 4);
    if (chain.size() >= 4) {
        GroupWord w2 = w1 * GroupWord::gen(chain[2]) * GroupWord::gen(chain[3]);
        Matrix p2 = evaluate_word(rep, w2);
        for (long e : {1L, 2L, 4L}) record(w2.to_string(), p2, e);
        report.genus_two_pass = record(w2.to_string(), p2, 8);
    }
    return report;
}

}  // namespace modreps
