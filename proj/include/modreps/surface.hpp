#pragma once

#include "modreps/matrix.hpp"

#include <string>
#include <vector>

namespace modreps {

/* Sigma_{g,1}: genus at least 3, one boundary component. */
struct Surface {
    int genus = 3;
    int boundary_components = 1;

    explicit Surface(int g);
    int homology_rank() const { return 2 * genus; }

    friend bool operator==(const Surface& a, const Surface& b) {
        return a.genus == b.genus && a.boundary_components == b.boundary_components;
    }
};

using HomologyVector = std::vector<long>;

struct CurveClass {
    std::string name;
    HomologyVector homology;  // basis (x_1..x_g, y_1..y_g)
    bool nonseparating = true;
};

struct CurveSystem {
    Surface surface{3};
    std::vector<CurveClass> curves;
    std::vector<std::vector<int>> geometric_intersections;

    std::size_t index_of(const std::string& name) const;
    std::vector<std::string> names() const;
    // SHA-256 over the canonical JSON of genus, boundary, curves and intersections.
    std::string hash() const;
};

long intersection_pairing(const Surface& s, const HomologyVector& u, const HomologyVector& v);
Matrix pairing_matrix(const Surface& s);
bool is_primitive(const HomologyVector& v);

std::vector<CurveClass> standard_chain(const Surface& s, int k);

/* Humphries generators a0..a2g: chain a1..a2g plus a0 meeting a4 once. */
CurveSystem make_generator_curve_system(const Surface& s);
const CurveSystem& generator_curve_system(const Surface& s);

}  // namespace modreps
