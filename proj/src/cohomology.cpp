#include "modreps/cohomology.hpp"

#include "modreps/errors.hpp"
#include "modreps/reps.hpp"
#include "parallel.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace modreps {

Cocycle coboundary(const Representation& rep, const Matrix& v) {
    if (v.rows() != rep.dimension()) throw Error(ErrorKind::ShapeMismatch, "coboundary vector has wrong length");
    std::vector<Matrix> values;
    Matrix id = Matrix::identity(rep.dimension());
    for (const auto& m : rep.images()) values.push_back((m - id) * v);
    return Cocycle(Chirality::Left, rep, std::move(values));
}

Cocycle right_coboundary(const Representation& rep, const Matrix& h) {
    if (h.cols() != rep.dimension()) throw Error(ErrorKind::ShapeMismatch, "coboundary covector has wrong length");
    std::vector<Matrix> values;
    Matrix id = Matrix::identity(rep.dimension());
    for (const auto& m : rep.images()) values.push_back(h * (m - id));
    return Cocycle(Chirality::Right, rep, std::move(values));
}

Matrix relator_constraint(const Representation& rep, const GroupWord& r) {
    std::size_t n = rep.dimension();
    std::size_t gens = rep.names().size();
    Matrix c(n, n * gens);
    Matrix prefix = Matrix::identity(n);
    for (const auto& l : r.letters()) {
        std::size_t i = rep.index_of(l.name);
        if (l.exponent > 0) {
            for (long k = 0; k < l.exponent; ++k) {
                c.set_block(0, i * n, c.block(0, i * n, n, n) + prefix);
                prefix = prefix * rep.images()[i];
            }
        } else {
            for (long k = 0; k < -l.exponent; ++k) {
                prefix = prefix * rep.inverses()[i];
                c.set_block(0, i * n, c.block(0, i * n, n, n) - prefix);
            }
        }
    }
    return c;
}

namespace {

Matrix coboundary_operator(const Representation& rep) {
    std::size_t n = rep.dimension();
    Matrix d(n * rep.names().size(), n);
    Matrix id = Matrix::identity(n);
    for (std::size_t i = 0; i < rep.names().size(); ++i) d.set_block(i * n, 0, rep.images()[i] - id);
    return d;
}

Cocycle cocycle_from_column(const Representation& rep, const Matrix& col) {
    std::size_t n = rep.dimension();
    std::vector<Matrix> values;
    for (std::size_t i = 0; i < rep.names().size(); ++i) values.push_back(col.block(i * n, 0, n, 1));
    return Cocycle(Chirality::Left, rep, std::move(values));
}

struct SpaceData {
    Subspace z1;
    Subspace b1;
};

SpaceData compute_spaces(const Representation& rep, const RelatorCatalog& cat) {
    if (!verify_representation(rep, cat).pass)
        throw Error(ErrorKind::UnverifiedRepresentation, "representation fails a relator");
    std::vector<Matrix> blocks(cat.relators.size());
    detail::parallel_for(cat.relators.size(),
                         [&](std::size_t i) { blocks[i] = relator_constraint(rep, cat.relators[i].word); });
    RowReducer rr(rep.dimension() * rep.names().size());
    for (const auto& b : blocks) rr.add_rows(b);
    return {rr.null_space(), column_space(coboundary_operator(rep))};
}

}  // namespace

CocycleSpace cocycle_space(const Representation& rep, const RelatorCatalog& cat) {
    SpaceData d = compute_spaces(rep, cat);
    if (!d.z1.contains(d.b1)) throw std::logic_error("coboundaries are not cocycles");
    CocycleSpace out;
    for (std::size_t k = 0; k < d.z1.dim(); ++k) out.z1_basis.push_back(cocycle_from_column(rep, d.z1.basis().col(k)));
    out.b1_dim = d.b1.dim();
    out.h1_dim = d.z1.dim() - d.b1.dim();
    return out;
}

std::optional<Matrix> is_coboundary(const Cocycle& phi) {
    const Representation& rep = phi.base();
    std::size_t n = rep.dimension();
    std::size_t gens = rep.names().size();
    Matrix id = Matrix::identity(n);
    if (phi.chirality() == Chirality::Left) {
        Matrix target(n * gens, phi.width());
        for (std::size_t i = 0; i < gens; ++i) target.set_block(i * n, 0, phi.values()[i]);
        return solve(coboundary_operator(rep), target);
    }
    Matrix lhs(n * gens, n);
    Matrix target(n * gens, phi.width());
    for (std::size_t i = 0; i < gens; ++i) {
        lhs.set_block(i * n, 0, (rep.images()[i] - id).transpose());
        target.set_block(i * n, 0, phi.values()[i].transpose());
    }
    auto x = solve(lhs, target);
    if (!x) return std::nullopt;
    return x->transpose();
}

Cocycle right_to_left(const Cocycle& right) {
    if (right.chirality() != Chirality::Right) throw Error(ErrorKind::ShapeMismatch, "expected a right cocycle");
    Representation dual = dual_rep(right.base());
    std::vector<Matrix> values;
    for (std::size_t i = 0; i < right.values().size(); ++i)
        values.push_back(dual.images()[i] * right.values()[i].transpose());
    return Cocycle(Chirality::Left, dual, std::move(values), right.base_rep_ref());
}

Cocycle left_to_right(const Cocycle& left_on_dual, const Representation& base) {
    if (left_on_dual.chirality() != Chirality::Left) throw Error(ErrorKind::ShapeMismatch, "expected a left cocycle");
    std::vector<Matrix> values;
    for (std::size_t i = 0; i < left_on_dual.values().size(); ++i)
        values.push_back(left_on_dual.values()[i].transpose() * base.images()[i]);
    return Cocycle(Chirality::Right, base, std::move(values), left_on_dual.base_rep_ref());
}

namespace {

Cocycle first_nontrivial(const Representation& rep, const RelatorCatalog& cat) {
    SpaceData d = compute_spaces(rep, cat);
    for (std::size_t k = 0; k < d.z1.dim(); ++k) {
        Matrix z = d.z1.basis().col(k);
        if (!d.b1.contains(z)) return cocycle_from_column(rep, z);
    }
    throw Error(ErrorKind::HypothesisViolated, "first cohomology vanishes for this presentation");
}

}  // namespace

Cocycle nontrivial_h_class(const Surface& s) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Cocycle>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[s.genus];
    if (!slot) {
        Representation h = symplectic_rep(s);
        Cocycle c = first_nontrivial(h, relator_catalog(s));
        slot = std::make_unique<Cocycle>(Chirality::Left, h, c.values(), "symplectic");
    }
    return *slot;
}

Cocycle nontrivial_hdual_class(const Surface& s) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Cocycle>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[s.genus];
    if (!slot) {
        Representation h = symplectic_rep(s);
        Cocycle left = first_nontrivial(dual_rep(h), relator_catalog(s));
        Cocycle right = left_to_right(left, h);
        slot = std::make_unique<Cocycle>(Chirality::Right, h, right.values(), "symplectic");
    }
    return *slot;
}

Rational connecting_map_surface_group(int g, const Rational& lambda) {
    return connecting_map_surface_group(g, lambda, std::vector<Rational>(static_cast<std::size_t>(2 * g)));
}

Rational connecting_map_surface_group(int g, const Rational& lambda, const std::vector<Rational>& lift_shifts) {
    Surface s(g);
    std::size_t n = static_cast<std::size_t>(2 * g);
    if (lift_shifts.size() != n) throw Error(ErrorKind::DimensionMismatch, "need one lift shift per generator");
    Matrix j = pairing_matrix(s);
    auto basis = [&](std::size_t i) {
        Matrix e(n, 1);
        e(i, 0) = 1;
        return e;
    };
    // pi_1 acts trivially on H and shifts the C coordinate by lambda <[gamma], v>.
    auto action = [&](const Matrix& cls) {
        Matrix m = Matrix::identity(n + 1);
        m.set_block(0, 1, lambda * (cls.transpose() * j));
        return m;
    };
    auto lift = [&](std::size_t i) {
        Matrix v(n + 1, 1);
        v(0, 0) = lift_shifts[i];
        v.set_block(1, 0, basis(i));
        return v;
    };
    Matrix id = Matrix::identity(n + 1);
    Matrix total(n + 1, 1);
    Matrix prefix = id;
    for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) {
        Matrix x = action(basis(i)), y = action(basis(static_cast<std::size_t>(g) + i));
        Matrix term = (id - y) * lift(i) + (x - id) * lift(static_cast<std::size_t>(g) + i);
        total += prefix * term;
        prefix = prefix * x * y * inverse(x) * inverse(y);
    }
    if (!total.block(1, 0, n, 1).is_zero()) throw std::logic_error("connecting map left the trivial submodule");
    return total(0, 0);
}

}  // namespace modreps
