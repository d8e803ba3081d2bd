#ifndef TMSPLINE_TEST_HELPERS_HPP
#define TMSPLINE_TEST_HELPERS_HPP

#include <map>
#include <random>
#include <set>
#include <vector>

#include "tmspline/mesh.hpp"
#include "tmspline/smoothness.hpp"

namespace testutil {

using namespace tmspline;

// Six faces around a middle vertical line at x = 3/2: the line's two stacked
// interior edges form a maximal segment that carries exactly three vertices,
// none on the boundary, so its weight stays below bi-degree thresholds.
inline TMesh low_weight_mesh() {
    const Rational half3(3, 2);
    return TMesh::build_from_faces({
        Rect{Rational(0), Rational(0), Rational(3), Rational(1)},
        Rect{Rational(0), Rational(1), half3, Rational(2)},
        Rect{half3, Rational(1), Rational(3), Rational(2)},
        Rect{Rational(0), Rational(2), half3, Rational(3)},
        Rect{half3, Rational(2), Rational(3), Rational(3)},
        Rect{Rational(0), Rational(3), Rational(3), Rational(4)},
    });
}

inline Segment low_weight_segment(const TMesh& mesh) {
    std::vector<int> ids;
    for (int e = 0; e < mesh.edge_count(); ++e)
        if (mesh.edge(e).orientation == Orientation::vertical && mesh.edge_interior(e) &&
            mesh.edge_line(e) == Rational(3, 2))
            ids.push_back(e);
    return make_segment(mesh, ids);
}

inline int find_vertex(const TMesh& mesh, const Rational& x, const Rational& y) {
    for (int v = 0; v < mesh.vertex_count(); ++v)
        if (mesh.vertex(v).x == x && mesh.vertex(v).y == y) return v;
    throw UnknownCell("no vertex at the requested point");
}

// largest meaningful order for an edge: the degree across it
inline int order_cap(Orientation orientation, int m, int mp) {
    return orientation == Orientation::horizontal ? mp : m;
}

inline SmoothnessDistribution random_distribution(const TMesh& mesh, int m, int mp,
                                                  std::mt19937_64& rng) {
    std::vector<int> orders(mesh.edge_count(), -1);
    for (int e = 0; e < mesh.edge_count(); ++e) {
        if (!mesh.edge_interior(e)) continue;
        const int cap = order_cap(mesh.edge(e).orientation, m, mp);
        orders[e] = static_cast<int>(rng() % static_cast<std::uint64_t>(cap + 2)) - 1;
    }
    return SmoothnessDistribution(mesh, std::move(orders));
}

// Constant order per maximal segment, within the box bounds (horizontal
// orders <= (m'-1)/2, vertical <= (m-1)/2).
inline SmoothnessDistribution random_box_constant_distribution(const TMesh& mesh, int m, int mp,
                                                               std::mt19937_64& rng) {
    std::vector<int> orders(mesh.edge_count(), -1);
    for (const Segment& segment : maximal_segments(mesh)) {
        const int bound_numerator =
            segment.orientation == Orientation::horizontal ? mp - 1 : m - 1;
        const int bound = bound_numerator >= 0 ? bound_numerator / 2 : -1;
        const int r = static_cast<int>(rng() % static_cast<std::uint64_t>(bound + 2)) - 1;
        for (int e : segment.edge_ids) orders[e] = r;
    }
    return SmoothnessDistribution(mesh, std::move(orders));
}

inline SmoothnessDistribution random_reduction_of(const SmoothnessDistribution& base,
                                                  std::mt19937_64& rng) {
    std::vector<int> orders = base.orders();
    for (int& r : orders)
        if (r > -1) r = static_cast<int>(rng() % static_cast<std::uint64_t>(r + 2)) - 1;
    return SmoothnessDistribution(base.mesh(), std::move(orders));
}

// Order-preserving random remap of the distinct x and y coordinates.  The
// canonical cell ids only depend on coordinate order, so edge ids (and any
// distribution's order vector) carry over unchanged.
inline TMesh reembed(const TMesh& mesh, std::mt19937_64& rng) {
    const auto remap = [&rng](const std::set<Rational>& values) {
        std::map<Rational, Rational> image;
        Rational cursor(static_cast<long>(rng() % 19) - 9);
        for (const Rational& v : values) {
            cursor += Rational(1 + static_cast<long>(rng() % 12), 1 + static_cast<long>(rng() % 7));
            image.emplace(v, cursor);
        }
        return image;
    };
    std::set<Rational> xs, ys;
    for (const Rect& r : mesh.face_rects()) {
        xs.insert(r.xmin);
        xs.insert(r.xmax);
        ys.insert(r.ymin);
        ys.insert(r.ymax);
    }
    const auto xmap = remap(xs);
    const auto ymap = remap(ys);
    std::vector<Rect> rects;
    for (const Rect& r : mesh.face_rects())
        rects.push_back(Rect{xmap.at(r.xmin), ymap.at(r.ymin), xmap.at(r.xmax), ymap.at(r.ymax)});
    return TMesh::build_from_faces(std::move(rects));
}

} // namespace testutil

#endif
