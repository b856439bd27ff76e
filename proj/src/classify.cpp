#include "modreps/classify.hpp"

#include "modreps/cohomology.hpp"
#include "modreps/errors.hpp"
#include "modreps/presentation.hpp"
#include "modreps/reps.hpp"
#include "modreps/suspension.hpp"

#include <random>

namespace modreps {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::SymplecticPlusTrivial: return "SymplecticPlusTrivial";
    case Verdict::UnitTangentPlusTrivial: return "UnitTangentPlusTrivial";
    case Verdict::DualUnitTangentPlusTrivial: return "DualUnitTangentPlusTrivial";
    case Verdict::OutOfRange: return "OutOfRange";
    case Verdict::NotVerified: return "NotVerified";
    }
    return "NotVerified";
}

Verdict parse_verdict(const std::string& s) {
    for (auto v : {Verdict::Trivial, Verdict::SymplecticPlusTrivial, Verdict::UnitTangentPlusTrivial,
                   Verdict::DualUnitTangentPlusTrivial, Verdict::OutOfRange, Verdict::NotVerified})
        if (s == verdict_name(v)) return v;
    throw Error(ErrorKind::Schema, "unknown verdict \"" + s + "\"");
}

Subspace fixed_space(const Representation& rep) {
    std::size_t n = rep.dimension();
    RowReducer rr(n);
    Matrix id = Matrix::identity(n);
    for (const auto& m : rep.images()) rr.add_rows(m - id);
    return rr.null_space();
}

namespace {

Subspace moved_span(const Representation& rep) {
    Matrix id = Matrix::identity(rep.dimension());
    std::vector<Matrix> cols;
    for (const auto& m : rep.images()) cols.push_back(m - id);
    return column_space(hstack(cols));
}

/* Columns of `add` that extend `have` to a basis of have + span(add), greedily. */
Matrix extend_basis(const Matrix& have, const Matrix& add) {
    Matrix q = have;
    std::size_t r = rank(q);
    for (std::size_t j = 0; j < add.cols(); ++j) {
        Matrix t = q.cols() ? hstack({q, add.col(j)}) : add.col(j);
        std::size_t rt = rank(t);
        if (rt > r) {
            q = t;
            r = rt;
        }
    }
    return q;
}

}  // namespace

std::optional<std::pair<Subspace, Subspace>> biaffine_flag(const Representation& rep) {
    Subspace v1 = fixed_space(rep);
    Subspace v2 = v1.sum(moved_span(rep));
    if (v2.dim() == v1.dim()) return std::nullopt;
    return std::make_pair(v1, v2);
}

std::vector<Matrix> intertwiner_space(const Representation& rep1, const Representation& rep2) {
    if (!rep1.same_generators(rep2)) throw Error(ErrorKind::ShapeMismatch, "representations have different generators");
    std::size_t n1 = rep1.dimension(), n2 = rep2.dimension();
    RowReducer rr(n1 * n2);
    for (std::size_t s = 0; s < rep1.names().size(); ++s) {
        const Matrix& r1 = rep1.images()[s];
        const Matrix& r2 = rep2.images()[s];
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n1; ++j) {
                std::vector<Rational> row(n1 * n2);
                for (std::size_t k = 0; k < n1; ++k) row[i * n1 + k] += r1(k, j);
                for (std::size_t k = 0; k < n2; ++k) row[k * n1 + j] -= r2(i, k);
                rr.add(std::move(row));
            }
        if (rr.rank() == n1 * n2) return {};
    }
    Subspace ns = rr.null_space();
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < ns.dim(); ++c) {
        Matrix x(n2, n1);
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n1; ++j) x(i, j) = ns.basis()(i * n1 + j, c);
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<Matrix> intertwiner(const Representation& rep1, const Representation& rep2) {
    if (rep1.dimension() != rep2.dimension()) return std::nullopt;
    std::vector<Matrix> basis = intertwiner_space(rep1, rep2);
    if (basis.empty()) return std::nullopt;
    std::size_t n = rep1.dimension();
    for (const auto& x : basis)
        if (rank(x) == n) return x;
    std::mt19937 rng(20240611u);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int attempt = 0; attempt < 32; ++attempt) {
        Matrix x(n, n);
        for (const auto& k : basis) {
            int c = coeff(rng);
            if (c) x += Rational(c) * k;
        }
        if (rank(x) == n) return x;
    }
    return std::nullopt;
}

Representation model_representation(const Surface& s, Verdict v, std::size_t trivial_dim) {
    switch (v) {
    case Verdict::Trivial: return trivial_rep(s, trivial_dim);
    case Verdict::SymplecticPlusTrivial: return direct_sum_with_trivial(symplectic_rep(s), trivial_dim);
    case Verdict::UnitTangentPlusTrivial: return direct_sum_with_trivial(unit_tangent_rep(s), trivial_dim);
    case Verdict::DualUnitTangentPlusTrivial: return direct_sum_with_trivial(dual_unit_tangent_rep(s), trivial_dim);
    default: throw Error(ErrorKind::InvalidArgument, std::string("no model for verdict ") + verdict_name(v));
    }
}

ClassificationReport classify_representation(const Representation& rep) {
    ClassificationReport out;
    const Surface& s = rep.surface();
    std::size_t n = rep.dimension();
    std::size_t g = static_cast<std::size_t>(s.genus);
    out.dimension = n;
    out.in_range = n <= 3 * g - 3;

    const RelatorCatalog& cat = relator_catalog(s);
    try {
        if (!verify_representation(rep, cat).pass) {
            out.verdict = Verdict::NotVerified;
            out.note = "representation fails a relator";
            return out;
        }
    } catch (const Error& e) {
        out.verdict = Verdict::NotVerified;
        out.note = e.what();
        return out;
    }

    bool trivial = true;
    for (const auto& m : rep.images()) trivial = trivial && m.is_identity();
    if (trivial) {
        out.verdict = Verdict::Trivial;
        out.matched_model = Verdict::Trivial;
        out.trivial_dim = n;
        out.intertwiner = Matrix::identity(n);
        return out;
    }

    auto flag = biaffine_flag(rep);
    out.flag = flag;
    const Subspace& v1 = flag->first;
    const Subspace& v2 = flag->second;
    std::size_t a = v1.dim(), k = v2.dim() - v1.dim(), b = n - v2.dim();
    out.witnesses.sub_dim = a;
    out.witnesses.core_dim = k;
    out.witnesses.quotient_dim = b;

    auto give_up = [&](const std::string& why) {
        out.verdict = Verdict::OutOfRange;
        out.note = why;
        return out;
    };

    // Adapted basis V1 | V2/V1 | V/V2; generators become [[I, phi1, alpha], [0, core, phi2], [0, 0, I]].
    Matrix basis = extend_basis(extend_basis(v1.basis(), v2.basis()), Matrix::identity(n));
    Matrix binv = inverse(basis);
    std::vector<Matrix> core, phi1, phi2;
    for (const auto& m : rep.images()) {
        Matrix c = binv * m * basis;
        core.push_back(c.block(a, a, k, k));
        phi1.push_back(c.block(0, a, a, k));
        phi2.push_back(c.block(a, a + k, k, b));
    }
    Representation core_rep(s, rep.names(), core, rep.curve_system_hash());
    Cocycle c1(Chirality::Right, core_rep, phi1, "core");
    Cocycle c2(Chirality::Left, core_rep, phi2, "core");
    auto w1 = is_coboundary(c1);
    auto w2 = is_coboundary(c2);
    out.witnesses.phi1_coboundary = w1.has_value();
    out.witnesses.phi2_coboundary = w2.has_value();
    out.witnesses.phi1_witness = w1;
    out.witnesses.phi2_witness = w2;

    if (k != 2 * g) return give_up("core has dimension " + std::to_string(k) + ", expected 2g");
    Verdict v;
    std::size_t extra;
    if (w1 && w2) {
        v = Verdict::SymplecticPlusTrivial;
        extra = n - 2 * g;
    } else if (!w1 && w2) {
        v = Verdict::UnitTangentPlusTrivial;
        extra = n - 2 * g - 1;
    } else if (w1 && !w2) {
        v = Verdict::DualUnitTangentPlusTrivial;
        extra = n - 2 * g - 1;
    } else {
        return give_up("both extension classes are nontrivial");
    }
    Representation model = model_representation(s, v, extra);
    auto x = intertwiner(rep, model);
    if (!x) return give_up(std::string("no intertwiner to the ") + verdict_name(v) + " model");
    out.matched_model = v;
    out.trivial_dim = extra;
    out.intertwiner = x;
    if (!out.in_range) return give_up("dimension exceeds 3g-3; a model matched but lies outside the guaranteed range");
    out.verdict = v;
    return out;
}

}  // namespace modreps
