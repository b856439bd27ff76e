#include "modreps/representation.hpp"

#include "modreps/errors.hpp"

namespace modreps {

Representation::Representation(Surface surface, std::vector<std::string> names, std::vector<Matrix> images,
                               std::string curve_system_hash)
    : surface_(surface), names_(std::move(names)), images_(std::move(images)), hash_(std::move(curve_system_hash)) {
    if (names_.size() != images_.size())
        throw Error(ErrorKind::ShapeMismatch, "generator names and images differ in count");
    if (images_.empty()) throw Error(ErrorKind::ShapeMismatch, "representation without generators");
    dim_ = images_.front().rows();
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == names_[i]) throw Error(ErrorKind::ShapeMismatch, "duplicate generator " + names_[i]);
        const Matrix& m = images_[i];
        if (m.rows() != dim_ || m.cols() != dim_)
            throw Error(ErrorKind::ShapeMismatch, "image of " + names_[i] + " is not " + std::to_string(dim_) +
                                                      "x" + std::to_string(dim_));
        try {
            inverses_.push_back(inverse(m));
        } catch (const Error&) {
            throw Error(ErrorKind::NotInvertible, "image of " + names_[i] + " is singular");
        }
    }
}

std::size_t Representation::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw Error(ErrorKind::UnknownGenerator, "representation has no generator " + name);
}

bool Representation::has(const std::string& name) const {
    for (const auto& n : names_)
        if (n == name) return true;
    return false;
}

const char* chirality_name(Chirality c) { return c == Chirality::Left ? "left" : "right"; }

Cocycle::Cocycle(Chirality chirality, Representation base, std::vector<Matrix> values, std::string base_rep_ref)
    : chirality_(chirality), base_(std::move(base)), values_(std::move(values)), ref_(std::move(base_rep_ref)) {
    if (values_.size() != base_.names().size())
        throw Error(ErrorKind::ShapeMismatch, "cocycle needs one value per generator");
    std::size_t n = base_.dimension();
    width_ = chirality_ == Chirality::Left ? values_.front().cols() : values_.front().rows();
    for (const auto& v : values_) {
        bool ok = chirality_ == Chirality::Left ? (v.rows() == n && v.cols() == width_)
                                                : (v.cols() == n && v.rows() == width_);
        if (!ok) throw Error(ErrorKind::ShapeMismatch, "cocycle value has the wrong shape");
    }
}

Cocycle Cocycle::scaled(const Rational& s) const {
    std::vector<Matrix> v = values_;
    for (auto& m : v) m *= s;
    return Cocycle(chirality_, base_, std::move(v), ref_);
}

Cocycle Cocycle::plus(const Cocycle& other) const {
    if (other.chirality_ != chirality_ || !other.base_.same_generators(base_))
        throw Error(ErrorKind::ShapeMismatch, "cannot add cocycles over different data");
    std::vector<Matrix> v = values_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
    return Cocycle(chirality_, base_, std::move(v), ref_);
}

}  // namespace modreps
