#include "doctest.h"

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "tmspline/dimension.hpp"
#include "tmspline/homology.hpp"

using namespace tmspline;
using namespace testutil;

namespace {

int find_edge_on_line(const TMesh& mesh, Orientation orientation, const Rational& line) {
    for (int e = 0; e < mesh.edge_count(); ++e)
        if (mesh.edge_interior(e) && mesh.edge(e).orientation == orientation &&
            mesh.edge_line(e) == line)
            return e;
    REQUIRE(false);
    return -1;
}

} // namespace

TEST_CASE("edge ideal bases") {
    SUBCASE("edge on the axis line") {
        // stack two cells so y = 0 is an interior line
        TMesh mesh = TMesh::build_from_faces({
            Rect{Rational(0), Rational(-1), Rational(1), Rational(0)},
            Rect{Rational(0), Rational(0), Rational(1), Rational(1)},
        });
        const int e = find_edge_on_line(mesh, Orientation::horizontal, 0);
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 0);
        EdgeIdealBasis basis = edge_ideal_basis(dist, e, 1, 1);
        CHECK(basis.generator_exponent == 1);
        // multiples of t in bi-degree (1,1): {t, st} in monomial order 1, t, s, st
        REQUIRE(basis.vectors.size() == 2);
        CHECK(basis.vectors[0] == std::vector<Rational>{0, 1, 0, 0});
        CHECK(basis.vectors[1] == std::vector<Rational>{0, 0, 0, 1});
    }
    SUBCASE("binomial expansion off the axis") {
        TMesh mesh = TMesh::build_from_faces({
            Rect{Rational(0), Rational(0), Rational(1), Rational(1, 2)},
            Rect{Rational(0), Rational(1, 2), Rational(1), Rational(1)},
        });
        const int e = find_edge_on_line(mesh, Orientation::horizontal, Rational(1, 2));
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 0);
        EdgeIdealBasis basis = edge_ideal_basis(dist, e, 0, 1);
        // t - 1/2 in basis {1, t}
        REQUIRE(basis.vectors.size() == 1);
        CHECK(basis.vectors[0] == std::vector<Rational>{Rational(-1, 2), 1});
    }
    SUBCASE("saturated order empties the ideal") {
        TMesh mesh = tensor_grid(2, 1);
        const int e = find_edge_on_line(mesh, Orientation::vertical, 1);
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 3);
        CHECK(edge_ideal_basis(dist, e, 3, 3).vectors.empty());
        CHECK(edge_ideal_basis(dist, e, 3, 2).vectors.empty());
        // one below saturation: dimension (m - r) * (m' + 1) = 1 * 4
        CHECK(edge_ideal_basis(SmoothnessDistribution::uniform(mesh, 2), e, 3, 3).vectors.size() ==
              4);
    }
    SUBCASE("order -1 spans the whole box") {
        TMesh mesh = tensor_grid(2, 1);
        const int e = find_edge_on_line(mesh, Orientation::vertical, 1);
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, -1);
        EdgeIdealBasis basis = edge_ideal_basis(dist, e, 2, 3);
        CHECK(basis.generator_exponent == 0);
        CHECK(basis.vectors.size() == 12);
    }
    SUBCASE("dimension formula on random orders") {
        TMesh mesh = tensor_grid(2, 2);
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 20; ++trial) {
            const int m = static_cast<int>(rng() % 4);
            const int mp = static_cast<int>(rng() % 4);
            SmoothnessDistribution dist = random_distribution(mesh, m, mp, rng);
            for (int e : classify(mesh).interior_edges) {
                const int r = dist.order(e);
                const std::size_t expected =
                    mesh.edge(e).orientation == Orientation::horizontal
                        ? static_cast<std::size_t>((m + 1) * std::max(mp - r, 0))
                        : static_cast<std::size_t>(std::max(m - r, 0) * (mp + 1));
                CHECK(edge_ideal_basis(dist, e, m, mp).vectors.size() == expected);
            }
        }
    }
    SUBCASE("boundary edges are rejected") {
        TMesh mesh = tensor_grid(2, 2);
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 1);
        CHECK_THROWS_AS(edge_ideal_basis(dist, classify(mesh).boundary_edges[0], 3, 3),
                        BoundaryEdge);
    }
}

TEST_CASE("vertex ideals") {
    TMesh grid = tensor_grid(2, 2);
    const int center = find_vertex(grid, 1, 1);

    SUBCASE("no conditions give the full box") {
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(grid, -1);
        CHECK(vertex_ideal(dist, center, 3, 3).dimension == 16);
        CHECK(vertex_ideal(dist, center, 1, 2).dimension == 6);
    }
    SUBCASE("bi-cubic cross vertex at order 2") {
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(grid, 2);
        CHECK(vertex_ideal(dist, center, 3, 3).dimension == 7);
    }
    SUBCASE("T-junction with mixed orders") {
        TMesh mesh = TMesh::build_from_faces({
            Rect{Rational(0), Rational(0), Rational(1), Rational(1)},
            Rect{Rational(1), Rational(0), Rational(2), Rational(1, 2)},
            Rect{Rational(1), Rational(1, 2), Rational(2), Rational(1)},
        });
        const int junction = find_vertex(mesh, 1, Rational(1, 2));
        // both vertical edges at order 2, the horizontal stub at order 1
        std::vector<int> orders(mesh.edge_count(), -1);
        for (int e : classify(mesh).interior_edges)
            orders[e] = mesh.edge(e).orientation == Orientation::vertical ? 2 : 1;
        SmoothnessDistribution dist(mesh, orders);
        VertexIdealSpace space = vertex_ideal(dist, junction, 3, 3);
        CHECK(space.dimension == 10);
    }
    SUBCASE("closed form against the rank on random inputs") {
        std::mt19937_64 rng(62);
        for (int trial = 0; trial < 10; ++trial) {
            TMesh mesh = hierarchical_mesh(rng(), 2);
            const int m = 1 + static_cast<int>(rng() % 3);
            const int mp = 1 + static_cast<int>(rng() % 3);
            SmoothnessDistribution dist = random_distribution(mesh, m, mp, rng);
            for (int v : classify(mesh).interior_vertices) {
                const VertexSmoothness vs = vertex_smoothness(dist, v);
                const long long expected =
                    static_cast<long long>(m + 1) * (mp + 1) -
                    static_cast<long long>(std::min(vs.horizontal, m) + 1) *
                        (std::min(vs.vertical, mp) + 1);
                CHECK(vertex_ideal(dist, v, m, mp).dimension == expected);
            }
        }
    }
    SUBCASE("boundary vertices are rejected") {
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(grid, 1);
        CHECK_THROWS_AS(vertex_ideal(dist, find_vertex(grid, 0, 0), 3, 3), BoundaryVertex);
    }
}

TEST_CASE("h0 dimension") {
    SUBCASE("discontinuous distributions have exact complexes") {
        for (TMesh mesh : {tensor_grid(2, 2), refine_face(tensor_grid(2, 2), 0), low_weight_mesh()})
            CHECK(h0_dimension(SmoothnessDistribution::uniform(mesh, -1), 3, 3) == 0);
    }
    SUBCASE("grid at full smoothness") {
        TMesh mesh = tensor_grid(2, 2);
        CHECK(h0_dimension(SmoothnessDistribution::uniform(mesh, 2), 3, 3) == 0);
        CHECK(spline_dimension_homological(SmoothnessDistribution::uniform(mesh, 2), 3, 3) == 25);
    }
    SUBCASE("single face") {
        TMesh mesh = tensor_grid(1, 1);
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 1);
        CHECK(h0_dimension(dist, 3, 2) == 0);
        CHECK(spline_dimension_homological(dist, 3, 2) == 12);
    }
    SUBCASE("per-segment-constant box orders on hierarchical meshes vanish") {
        std::mt19937_64 rng(1001);
        for (int trial = 0; trial < 5; ++trial) {
            TMesh mesh = hierarchical_mesh(rng(), 2);
            SmoothnessDistribution dist = random_box_constant_distribution(mesh, 3, 3, rng);
            CHECK(h0_dimension(dist, 3, 3) == 0);
        }
    }
    SUBCASE("the low weight instance obstructs") {
        TMesh mesh = low_weight_mesh();
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 2);
        CHECK(h0_dimension(dist, 3, 3) == 1);
        CHECK(spline_dimension_homological(dist, 3, 3) == 28);

        // same instance in different coordinates
        std::mt19937_64 rng(7);
        TMesh moved = reembed(mesh, rng);
        CHECK(h0_dimension(SmoothnessDistribution(moved, dist.orders()), 3, 3) == 1);
    }
}

TEST_CASE("localized quotient h0") {
    SUBCASE("empty support") {
        TMesh mesh = tensor_grid(2, 2);
        SmoothnessDistribution dist = SmoothnessDistribution::uniform(mesh, 1);
        LocalizedH0 result = h0_quotient_localized(dist, dist, 3, 3);
        CHECK(result.dimension == 0);
        CHECK(result.support_edges.empty());
        CHECK(result.support_vertices.empty());
    }
    SUBCASE("support sets name exactly the changed cells") {
        TMesh mesh = low_weight_mesh();
        Segment a = low_weight_segment(mesh);
        SmoothnessDistribution base = SmoothnessDistribution::uniform(mesh, 2);
        SmoothnessDistribution target = reduce_on_segment(base, a, 0);
        LocalizedH0 result = h0_quotient_localized(base, target, 3, 3);
        CHECK(result.support_edges == a.edge_ids);
        std::vector<int> interior_carried = a.vertex_ids;
        std::sort(interior_carried.begin(), interior_carried.end());
        CHECK(result.support_vertices == interior_carried);
    }
    SUBCASE("matches the direct computation") {
        // the obstructed reduction: quotient sees the same one-dimensional h0
        TMesh mesh = low_weight_mesh();
        Segment a = low_weight_segment(mesh);
        SmoothnessDistribution base = SmoothnessDistribution::uniform(mesh, 2);
        for (int e : a.edge_ids) base = base.with_order(e, 3);
        REQUIRE(h0_dimension(base, 3, 3) == 0);
        SmoothnessDistribution target = SmoothnessDistribution::uniform(mesh, 2);
        LocalizedH0 result = h0_quotient_localized(base, target, 3, 3);
        CHECK(result.dimension == 1);
        CHECK(result.dimension == h0_dimension(target, 3, 3));

        // randomized cross-checks from certified bases
        std::mt19937_64 rng(90210);
        for (int trial = 0; trial < 6; ++trial) {
            TMesh random_mesh = hierarchical_mesh(rng(), 2);
            SmoothnessDistribution r = random_box_constant_distribution(random_mesh, 3, 2, rng);
            REQUIRE(h0_dimension(r, 3, 2) == 0);
            SmoothnessDistribution s = random_reduction_of(r, rng);
            LocalizedH0 local = h0_quotient_localized(r, s, 3, 2);
            CHECK(local.dimension == h0_dimension(s, 3, 2));
            for (int e : local.support_edges) CHECK(s.order(e) < r.order(e));
        }
    }
    SUBCASE("target above base is rejected") {
        TMesh mesh = tensor_grid(2, 2);
        SmoothnessDistribution base = SmoothnessDistribution::uniform(mesh, 1);
        SmoothnessDistribution above = SmoothnessDistribution::uniform(mesh, 2);
        CHECK_THROWS_AS(h0_quotient_localized(base, above, 3, 3), NotBelowBase);
    }
}
