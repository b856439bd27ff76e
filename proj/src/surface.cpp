#include "modreps/surface.hpp"

#include "modreps/errors.hpp"
#include "modreps/hash.hpp"
#include "modreps/presentation.hpp"

#include <nlohmann/json.hpp>

#include <numeric>

namespace modreps {

Surface::Surface(int g) : genus(g), boundary_components(1) {
    if (g < 3) throw Error(ErrorKind::InvalidArgument, "genus must be at least 3, got " + std::to_string(g));
}

std::size_t CurveSystem::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i].name == name) return i;
    throw Error(ErrorKind::UnknownGenerator, "no curve named " + name);
}

std::vector<std::string> CurveSystem::names() const {
    std::vector<std::string> out;
    for (const auto& c : curves) out.push_back(c.name);
    return out;
}

std::string CurveSystem::hash() const {
    nlohmann::json j;
    j["genus"] = surface.genus;
    j["boundary"] = surface.boundary_components;
    j["curves"] = nlohmann::json::array();
    for (const auto& c : curves)
        j["curves"].push_back({{"name", c.name}, {"homology", c.homology}, {"nonseparating", c.nonseparating}});
    j["geometric_intersections"] = geometric_intersections;
    return sha256_hex(j.dump());
}

long intersection_pairing(const Surface& s, const HomologyVector& u, const HomologyVector& v) {
    std::size_t n = static_cast<std::size_t>(s.homology_rank());
    if (u.size() != n || v.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "homology vectors must have length 2g");
    std::size_t g = n / 2;
    long acc = 0;
    for (std::size_t i = 0; i < g; ++i) acc += u[i] * v[g + i] - u[g + i] * v[i];
    return acc;
}

Matrix pairing_matrix(const Surface& s) {
    std::size_t g = static_cast<std::size_t>(s.genus);
    Matrix j(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        j(i, g + i) = 1;
        j(g + i, i) = -1;
    }
    return j;
}

bool is_primitive(const HomologyVector& v) {
    long d = 0;
    for (long x : v) d = std::gcd(d, x);
    return d == 1;
}

static HomologyVector chain_class(int g, int i) {
    // i is 1-based: x1, y1, x1+x2, y2, x2+x3, y3, ...
    HomologyVector v(static_cast<std::size_t>(2 * g), 0);
    if (i == 1) {
        v[0] = 1;
    } else if (i % 2 == 0) {
        v[static_cast<std::size_t>(g + i / 2 - 1)] = 1;
    } else {
        int k = (i - 1) / 2;
        v[static_cast<std::size_t>(k - 1)] = 1;
        v[static_cast<std::size_t>(k)] = 1;
    }
    return v;
}

std::vector<CurveClass> standard_chain(const Surface& s, int k) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative chain length");
    if (k > 2 * s.genus)
        throw Error(ErrorKind::ChainTooLong,
                    "chain of length " + std::to_string(k) + " exceeds 2g = " + std::to_string(2 * s.genus));
    std::vector<CurveClass> out;
    for (int i = 1; i <= k; ++i) out.push_back({"c" + std::to_string(i), chain_class(s.genus, i), true});
    return out;
}

CurveSystem make_generator_curve_system(const Surface& s) {
    int g = s.genus;
    CurveSystem cs;
    cs.surface = s;
    HomologyVector x2(static_cast<std::size_t>(2 * g), 0);
    x2[1] = 1;
    cs.curves.push_back({"a0", x2, true});
    for (int i = 1; i <= 2 * g; ++i) cs.curves.push_back({"a" + std::to_string(i), chain_class(g, i), true});
    std::size_t n = cs.curves.size();
    cs.geometric_intersections.assign(n, std::vector<int>(n, 0));
    auto link = [&](std::size_t a, std::size_t b) {
        cs.geometric_intersections[a][b] = 1;
        cs.geometric_intersections[b][a] = 1;
    };
    for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
    link(0, 4);
    return cs;
}

const CurveSystem& generator_curve_system(const Surface& s) { return relator_catalog(s).curves; }

}  // namespace modreps
