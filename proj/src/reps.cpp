#include "modreps/reps.hpp"

#include "modreps/errors.hpp"

namespace modreps {

Matrix transvection_matrix(const Surface& s, const HomologyVector& c) {
    std::size_t n = static_cast<std::size_t>(s.homology_rank());
    if (c.size() != n) throw Error(ErrorKind::DimensionMismatch, "homology vector must have length 2g");
    bool zero = true;
    for (long x : c) zero = zero && x == 0;
    if (zero) throw Error(ErrorKind::SeparatingCurve, "zero homology class gives no transvection");
    Matrix m = Matrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        HomologyVector e(n, 0);
        e[j] = 1;
        long p = intersection_pairing(s, e, c);
        if (p == 0) continue;
        for (std::size_t i = 0; i < n; ++i) m(i, j) += p * c[i];
    }
    return m;
}

Matrix transvection_matrix(const Surface& s, const CurveClass& c) {
    if (!c.nonseparating) throw Error(ErrorKind::SeparatingCurve, c.name + " is separating");
    return transvection_matrix(s, c.homology);
}

Representation symplectic_rep(const Surface& s) {
    const CurveSystem& cs = generator_curve_system(s);
    std::vector<Matrix> images;
    for (const auto& c : cs.curves) images.push_back(transvection_matrix(s, c));
    return Representation(s, cs.names(), std::move(images), cs.hash());
}

Representation trivial_rep(const Surface& s, std::size_t dim) {
    const CurveSystem& cs = generator_curve_system(s);
    std::vector<Matrix> images(cs.curves.size(), Matrix::identity(dim));
    return Representation(s, cs.names(), std::move(images), cs.hash());
}

Representation dual_rep(const Representation& rep) {
    std::vector<Matrix> images;
    for (const auto& m : rep.inverses()) images.push_back(m.transpose());
    return Representation(rep.surface(), rep.names(), std::move(images), rep.curve_system_hash());
}

Representation direct_sum_with_trivial(const Representation& rep, std::size_t k) {
    if (k == 0) return rep;
    std::vector<Matrix> images;
    for (const auto& m : rep.images()) images.push_back(block_diagonal(m, Matrix::identity(k)));
    return Representation(rep.surface(), rep.names(), std::move(images), rep.curve_system_hash());
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (!a.same_generators(b)) throw Error(ErrorKind::ShapeMismatch, "direct sum of different generator sets");
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < a.images().size(); ++i) images.push_back(block_diagonal(a.images()[i], b.images()[i]));
    return Representation(a.surface(), a.names(), std::move(images), a.curve_system_hash());
}

Representation conjugate(const Representation& rep, const Matrix& p) {
    Matrix pinv = inverse(p);
    std::vector<Matrix> images;
    for (const auto& m : rep.images()) images.push_back(p * m * pinv);
    return Representation(rep.surface(), rep.names(), std::move(images), rep.curve_system_hash());
}

}  // namespace modreps
