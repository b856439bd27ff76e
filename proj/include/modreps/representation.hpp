#pragma once

#include "modreps/matrix.hpp"
#include "modreps/surface.hpp"

#include <string>
#include <vector>

namespace modreps {

class Representation {
public:
    Representation(Surface surface, std::vector<std::string> names, std::vector<Matrix> images,
                   std::string curve_system_hash);

    const Surface& surface() const { return surface_; }
    std::size_t dimension() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<Matrix>& images() const { return images_; }
    const std::vector<Matrix>& inverses() const { return inverses_; }
    const std::string& curve_system_hash() const { return hash_; }

    std::size_t index_of(const std::string& name) const;
    bool has(const std::string& name) const;
    const Matrix& image(const std::string& name) const { return images_[index_of(name)]; }
    const Matrix& image_inverse(const std::string& name) const { return inverses_[index_of(name)]; }

    bool same_generators(const Representation& other) const {
        return names_ == other.names_ && surface_ == other.surface_;
    }

private:
    Surface surface_;
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Matrix> images_;
    std::vector<Matrix> inverses_;
    std::string hash_;
};

enum class Chirality { Left, Right };

const char* chirality_name(Chirality c);

/* Left: phi(gh) = phi(g) + rho(g) phi(h), values n x b.
   Right: phi(gh) = phi(h) + phi(g) rho(h), values a x n. */
class Cocycle {
public:
    Cocycle(Chirality chirality, Representation base, std::vector<Matrix> values,
            std::string base_rep_ref = "base");

    Chirality chirality() const { return chirality_; }
    const Representation& base() const { return base_; }
    const std::vector<Matrix>& values() const { return values_; }
    const Matrix& value(const std::string& name) const { return values_[base_.index_of(name)]; }
    const std::string& base_rep_ref() const { return ref_; }
    // Number of trivial coordinates: b for left cocycles, a for right ones.
    std::size_t width() const { return width_; }

    Cocycle scaled(const Rational& s) const;
    Cocycle plus(const Cocycle& other) const;

private:
    Chirality chirality_;
    Representation base_;
    std::vector<Matrix> values_;
    std::string ref_;
    std::size_t width_ = 0;
};

}  // namespace modreps
