#include "modreps/suspension.hpp"

#include "modreps/errors.hpp"
#include "modreps/exactla.hpp"
#include "modreps/reps.hpp"

namespace modreps {

namespace {

void require_base(const Representation& base, const Cocycle& phi, Chirality want, const char* what) {
    if (phi.chirality() != want)
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + " needs a " + chirality_name(want) + " cocycle");
    if (!phi.base().same_generators(base) || phi.base().dimension() != base.dimension())
        throw Error(ErrorKind::ShapeMismatch, std::string(what) + ": cocycle is over a different representation");
}

std::string relator_text(const RelatorCatalog& cat, std::size_t i) {
    return std::string(tag_name(cat.relators[i].tag)) + " relator #" + std::to_string(i) + " (" +
           cat.relators[i].label + ")";
}

Representation assemble(const Representation& base, std::size_t a, std::size_t b, const std::vector<Matrix>* phi1,
                        const std::vector<Matrix>* phi2, const std::vector<Matrix>* alpha) {
    std::size_t n = base.dimension();
    std::vector<Matrix> images;
    for (std::size_t i = 0; i < base.names().size(); ++i) {
        Matrix m = Matrix::identity(a + n + b);
        m.set_block(a, a, base.images()[i]);
        if (phi1) m.set_block(0, a, (*phi1)[i]);
        if (phi2) m.set_block(a, a + n, (*phi2)[i]);
        if (alpha) m.set_block(0, a + n, (*alpha)[i]);
        images.push_back(std::move(m));
    }
    return Representation(base.surface(), base.names(), std::move(images), base.curve_system_hash());
}

}  // namespace

Representation affine_suspension(const Representation& base, const Cocycle& phi, std::size_t b) {
    require_base(base, phi, Chirality::Left, "affine_suspension");
    if (phi.width() != b) throw Error(ErrorKind::ShapeMismatch, "cocycle width differs from b");
    const RelatorCatalog& cat = relator_catalog(base.surface());
    if (auto bad = first_cocycle_failure(phi, cat))
        throw Error(ErrorKind::CocycleInvalid, "cocycle does not vanish on " + relator_text(cat, *bad));
    Representation out = assemble(base, 0, b, nullptr, &phi.values(), nullptr);
    if (!verify_representation(out, cat).pass) throw Error(ErrorKind::CocycleInvalid, "suspension fails a relator");
    return out;
}

Representation coaffine_suspension(const Representation& base, const Cocycle& phi, std::size_t a) {
    require_base(base, phi, Chirality::Right, "coaffine_suspension");
    if (phi.width() != a) throw Error(ErrorKind::ShapeMismatch, "cocycle width differs from a");
    const RelatorCatalog& cat = relator_catalog(base.surface());
    if (auto bad = first_cocycle_failure(phi, cat))
        throw Error(ErrorKind::CocycleInvalid, "cocycle does not vanish on " + relator_text(cat, *bad));
    Representation out = assemble(base, a, 0, &phi.values(), nullptr, nullptr);
    if (!verify_representation(out, cat).pass) throw Error(ErrorKind::CocycleInvalid, "suspension fails a relator");
    return out;
}

Representation double_suspension(const SuspensionSpec& spec) {
    if (!spec.phi1 || !spec.phi2 || !spec.alpha)
        throw Error(ErrorKind::ShapeMismatch, "double suspension needs phi1, phi2 and alpha");
    const Representation& base = spec.base;
    require_base(base, *spec.phi1, Chirality::Right, "double_suspension phi1");
    require_base(base, *spec.phi2, Chirality::Left, "double_suspension phi2");
    if (spec.phi1->width() != spec.a || spec.phi2->width() != spec.b)
        throw Error(ErrorKind::ShapeMismatch, "cocycle widths differ from a, b");
    if (spec.alpha->size() != base.names().size())
        throw Error(ErrorKind::ShapeMismatch, "alpha needs one value per generator");
    for (const auto& m : *spec.alpha)
        if (m.rows() != spec.a || m.cols() != spec.b) throw Error(ErrorKind::ShapeMismatch, "alpha value is not a x b");
    const RelatorCatalog& cat = relator_catalog(base.surface());
    for (const Cocycle* phi : {&*spec.phi1, &*spec.phi2})
        if (auto bad = first_cocycle_failure(*phi, cat))
            throw Error(ErrorKind::CocycleInvalid, "cocycle does not vanish on " + relator_text(cat, *bad));
    Representation out = assemble(base, spec.a, spec.b, &spec.phi1->values(), &spec.phi2->values(), &*spec.alpha);
    VerificationReport rep = verify_representation(out, cat);
    if (auto bad = rep.first_failure())
        throw Error(ErrorKind::CoboundaryEquationViolated, "alpha fails on " + relator_text(cat, *bad));
    return out;
}

AlphaSolution solve_alpha(const Cocycle& phi1, const Cocycle& phi2, const RelatorCatalog& cat) {
    const Representation& base = phi2.base();
    require_base(base, phi1, Chirality::Right, "solve_alpha phi1");
    require_base(base, phi2, Chirality::Left, "solve_alpha phi2");
    std::size_t a = phi1.width(), b = phi2.width(), n = base.dimension();
    std::size_t gens = base.names().size();
    Representation zero_alpha = assemble(base, a, b, &phi1.values(), &phi2.values(), nullptr);
    std::size_t r = cat.relators.size();
    // Top-right block of a relator is sum_s expsum_s(r) alpha(s) plus the alpha-free part.
    Matrix e(r, gens);
    Matrix rhs(r, a * b);
    for (std::size_t k = 0; k < r; ++k) {
        const GroupWord& w = cat.relators[k].word;
        for (std::size_t s = 0; s < gens; ++s) e(k, s) = w.exponent_sum(base.names()[s]);
        Matrix c = evaluate_word(zero_alpha, w).block(0, a + n, a, b);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) rhs(k, i * b + j) = -c(i, j);
    }
    auto unpack = [&](const Matrix& x) {
        std::vector<Matrix> alpha;
        for (std::size_t s = 0; s < gens; ++s) {
            Matrix m(a, b);
            for (std::size_t i = 0; i < a; ++i)
                for (std::size_t j = 0; j < b; ++j) m(i, j) = x(s, i * b + j);
            alpha.push_back(std::move(m));
        }
        return alpha;
    };
    AlphaSolution out;
    if (auto x = solve(e, rhs)) {
        out.alpha = unpack(*x);
        return out;
    }
    Matrix prev(gens, a * b);
    for (std::size_t k = 1; k <= r; ++k) {
        auto x = solve(e.block(0, 0, k, gens), rhs.block(0, 0, k, a * b));
        if (x) {
            prev = *x;
            continue;
        }
        Matrix res = e.block(k - 1, 0, 1, gens) * prev - rhs.block(k - 1, 0, 1, a * b);
        Matrix residual(a, b);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j) residual(i, j) = res(0, i * b + j);
        out.failing_relator = k - 1;
        out.residual = residual;
        return out;
    }
    throw std::logic_error("alpha system inconsistent but every prefix solvable");
}

Matrix cohomologous_iso(const Representation& base, const Cocycle& phi1, const Cocycle& phi2, const Rational& lambda,
                        const Matrix& h0) {
    if (sgn(lambda) == 0) throw Error(ErrorKind::HypothesisViolated, "lambda must be nonzero");
    if (phi1.chirality() != phi2.chirality())
        throw Error(ErrorKind::HypothesisViolated, "cocycles have different chirality");
    require_base(base, phi1, phi1.chirality(), "cohomologous_iso");
    require_base(base, phi2, phi2.chirality(), "cohomologous_iso");
    std::size_t n = base.dimension();
    bool left = phi1.chirality() == Chirality::Left;
    Cocycle d = left ? coboundary(base, h0) : right_coboundary(base, h0);
    if (d.width() != phi1.width() || phi2.width() != phi1.width())
        throw Error(ErrorKind::ShapeMismatch, "h0 has the wrong shape");
    for (std::size_t i = 0; i < base.names().size(); ++i) {
        Matrix expect = lambda * phi1.values()[i] + d.values()[i];
        if (expect != phi2.values()[i])
            throw Error(ErrorKind::HypothesisViolated,
                        "phi2 != lambda phi1 + delta(h0) on generator " + base.names()[i]);
    }
    std::size_t w = phi1.width();
    Matrix f = Matrix::identity(n + w);
    if (left) {
        for (std::size_t i = 0; i < n; ++i) f(i, i) = lambda;
        f.set_block(0, n, -h0);
    } else {
        for (std::size_t i = 0; i < w; ++i) f(i, i) = lambda;
        f.set_block(0, w, h0);
    }
    return f;
}

Cocycle gl_twist(const Cocycle& phi, const Matrix& b) {
    if (!b.is_square() || b.rows() != phi.width()) throw Error(ErrorKind::ShapeMismatch, "twist matrix has wrong size");
    std::vector<Matrix> values;
    if (phi.chirality() == Chirality::Left) {
        Matrix binv = inverse(b);
        for (const auto& v : phi.values()) values.push_back(v * binv);
    } else {
        inverse(b);
        for (const auto& v : phi.values()) values.push_back(b * v);
    }
    return Cocycle(phi.chirality(), phi.base(), std::move(values), phi.base_rep_ref());
}

Representation unit_tangent_rep(const Surface& s) {
    return coaffine_suspension(symplectic_rep(s), nontrivial_hdual_class(s), 1);
}

Representation dual_unit_tangent_rep(const Surface& s) { return dual_rep(unit_tangent_rep(s)); }

}  // namespace modreps
