#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tmspline/exact_matrix.hpp"
#include "tmspline/homology.hpp"
#include "tmspline/oracle.hpp"

using namespace tmspline;

namespace {

// Unit square split at t = 1/2 into a bottom and a top face; the single
// interior edge is horizontal on the line t = 1/2.
TMesh split_square_horizontal() {
    return TMesh::build_from_faces({{0, 0, 1, Rational(1, 2)}, {0, Rational(1, 2), 1, 1}});
}

// Unit-height strip split at s = 1; the single interior edge is vertical.
TMesh split_strip_vertical() {
    return TMesh::build_from_faces({{0, 0, 1, 1}, {1, 0, 2, 1}});
}

int only_interior_edge(const TMesh& mesh) {
    const auto cls = classify(mesh);
    REQUIRE(cls.interior_edges.size() == 1);
    return cls.interior_edges.front();
}

// Stacks every basis member as one long row (faces concatenated) so linear
// independence can be checked with a single rank computation.
ExactMatrix stack_basis(const std::vector<PiecewisePolynomial>& basis, int face_count, int coeffs_per_face) {
    ExactMatrix stacked(basis.size(), static_cast<std::size_t>(face_count) * coeffs_per_face);
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int f = 0; f < face_count; ++f)
            for (int k = 0; k < coeffs_per_face; ++k)
                stacked.at(b, static_cast<std::size_t>(f) * coeffs_per_face + k) = basis[b].face_coeffs[f][k];
    return stacked;
}

}  // namespace

TEST_CASE("piecewise polynomial evaluation uses the monomial layout") {
    PiecewisePolynomial f;
    f.m = 1;
    f.mp = 1;
    // 1 + 2t + 3s + 4st in row-major (s exponent major) order.
    f.face_coeffs = {{Rational(1), Rational(2), Rational(3), Rational(4)}};
    CHECK(evaluate_on_face(f, 0, Rational(1, 2), Rational(3)) == Rational(29, 2));
    CHECK(evaluate_on_face(f, 0, Rational(0), Rational(0)) == Rational(1));
    CHECK_THROWS_AS(evaluate_on_face(f, 5, Rational(0), Rational(0)), UnknownCell);
}

TEST_CASE("constraint rows for a horizontal edge follow the derivative expansion") {
    const TMesh mesh = split_square_horizontal();
    const int edge = only_interior_edge(mesh);
    REQUIRE(mesh.edge(edge).orientation == Orientation::horizontal);

    SUBCASE("bilinear, order 0: one value-matching row per s-power") {
        const auto dist = SmoothnessDistribution::uniform(mesh, 0);
        const auto block = edge_constraints(dist, edge, 1, 1);
        CHECK(block.edge_id == edge);
        // Faces are sorted by (xmin, ymin): 0 is below the line, 1 above.
        CHECK(block.plus_face == 1);
        CHECK(block.minus_face == 0);
        REQUIRE(block.rows.size() == 2);
        // Row for s^i: value of s^i (1 + t/2 + ...) at t = 1/2, i.e. entries
        // 1 and 1/2 in the t^0 / t^1 slots of the s^i block.
        const std::vector<Rational> row0{1, Rational(1, 2), 0, 0};
        const std::vector<Rational> row1{0, 0, 1, Rational(1, 2)};
        CHECK(block.rows[0] == row0);
        CHECK(block.rows[1] == row1);
    }

    SUBCASE("second derivative rows pick up falling factorials") {
        const auto dist = SmoothnessDistribution::uniform(mesh, 2);
        const auto block = edge_constraints(dist, edge, 3, 3);
        REQUIRE(block.rows.size() == 12);
        // Rows are grouped by derivative order; the j = 2 row for the s^0
        // block sees d^2/dt^2 of t^q at 1/2, i.e. q(q-1)(1/2)^{q-2}.
        const auto& row = block.rows[8];
        CHECK(row[0] == 0);
        CHECK(row[1] == 0);
        CHECK(row[2] == 2);
        CHECK(row[3] == 3);
    }

    SUBCASE("order -1 imposes nothing") {
        const auto dist = SmoothnessDistribution::uniform(mesh, 0).with_order(edge, -1);
        CHECK(edge_constraints(dist, edge, 2, 2).rows.empty());
    }

    SUBCASE("boundary edges have no two-sided constraint") {
        const auto dist = SmoothnessDistribution::uniform(mesh, 0);
        const auto cls = classify(mesh);
        CHECK_THROWS_AS(edge_constraints(dist, cls.boundary_edges.front(), 1, 1), BoundaryEdge);
    }
}

TEST_CASE("constraint row count matches the edge ideal codimension") {
    std::mt19937_64 rng(424242);
    const TMesh mesh = hierarchical_mesh(5, 2);
    const auto cls = classify(mesh);
    const int m = 3, mp = 2;
    for (int trial = 0; trial < 10; ++trial) {
        const auto dist = testutil::random_distribution(mesh, m, mp, rng);
        const int edge = cls.interior_edges[rng() % cls.interior_edges.size()];
        const auto block = edge_constraints(dist, edge, m, mp);
        const auto ideal = edge_ideal_basis(dist, edge, m, mp);
        const std::size_t box = static_cast<std::size_t>((m + 1) * (mp + 1));
        CHECK(block.rows.size() == box - ideal.vectors.size());
    }
}

TEST_CASE("oracle dimension on frozen instances") {
    SUBCASE("single face is the full polynomial box") {
        const TMesh mesh = TMesh::build_from_faces({{0, 0, 1, 1}});
        const auto dist = SmoothnessDistribution::uniform(mesh, 2);
        CHECK(spline_dimension_oracle(dist, 3, 3) == 16);
        CHECK(spline_dimension_oracle(dist, 0, 4) == 5);
        CHECK(spline_dimension_oracle(dist, -1, 3) == 0);
    }

    SUBCASE("bicubic C2 on a 2x2 grid") {
        const TMesh mesh = tensor_grid(2, 2);
        const auto dist = SmoothnessDistribution::uniform(mesh, 2);
        CHECK(spline_dimension_oracle(dist, 3, 3) == 25);
    }

    SUBCASE("discontinuity across one grid line splits the space") {
        const TMesh mesh = tensor_grid(2, 2);
        auto dist = SmoothnessDistribution::uniform(mesh, 2);
        for (int e : classify(mesh).interior_edges)
            if (mesh.edge(e).orientation == Orientation::horizontal) dist = dist.with_order(e, -1);
        CHECK(spline_dimension_oracle(dist, 3, 3) == 40);
    }

    SUBCASE("smoothness order at or above the transversal degree glues polynomials") {
        const TMesh mesh = split_strip_vertical();
        const auto dist = SmoothnessDistribution::uniform(mesh, 1);
        CHECK(spline_dimension_oracle(dist, 1, 1) == 4);
        const auto basis = spline_basis_oracle(dist, 1, 1);
        REQUIRE(basis.size() == 4);
        for (const auto& f : basis) CHECK(f.face_coeffs[0] == f.face_coeffs[1]);
    }
}

TEST_CASE("oracle agrees with the exactness-based dimension") {
    std::mt19937_64 rng(90910);
    const std::vector<std::pair<int, int>> degrees{{1, 1}, {2, 2}, {3, 2}};
    for (const auto& [m, mp] : degrees) {
        for (int trial = 0; trial < 3; ++trial) {
            const TMesh mesh = hierarchical_mesh(100 * m + 10 * mp + trial, 1 + trial % 2);
            const auto dist = testutil::random_distribution(mesh, m, mp, rng);
            CHECK(spline_dimension_oracle(dist, m, mp) == spline_dimension_homological(dist, m, mp));
        }
    }
    // The cyclic instance has no hierarchical structure; cover it explicitly.
    const TMesh pin = cyclic_pinwheel();
    for (int trial = 0; trial < 3; ++trial) {
        const auto dist = testutil::random_distribution(pin, 2, 2, rng);
        CHECK(spline_dimension_oracle(dist, 2, 2) == spline_dimension_homological(dist, 2, 2));
    }
}

TEST_CASE("lowering one smoothness order never shrinks the oracle space") {
    std::mt19937_64 rng(777);
    const TMesh mesh = hierarchical_mesh(11, 1);
    const auto cls = classify(mesh);
    for (int trial = 0; trial < 6; ++trial) {
        const auto dist = testutil::random_distribution(mesh, 2, 2, rng);
        const int edge = cls.interior_edges[rng() % cls.interior_edges.size()];
        if (dist.order(edge) < 0) continue;
        const auto lower = dist.with_order(edge, dist.order(edge) - 1);
        CHECK(spline_dimension_oracle(lower, 2, 2) >= spline_dimension_oracle(dist, 2, 2));
    }
}

TEST_CASE("oracle basis members are independent and satisfy their smoothness") {
    std::mt19937_64 rng(6060);
    const TMesh mesh = hierarchical_mesh(3, 1);
    const int m = 2, mp = 2;
    const auto dist = testutil::random_distribution(mesh, m, mp, rng);
    const auto basis = spline_basis_oracle(dist, m, mp);
    CHECK(basis.size() == static_cast<std::size_t>(spline_dimension_oracle(dist, m, mp)));
    const auto stacked = stack_basis(basis, mesh.face_count(), (m + 1) * (mp + 1));
    CHECK(rank(stacked) == basis.size());
    for (const auto& f : basis) CHECK(verify_smoothness(dist, f));
}

TEST_CASE("smoothness verification accepts global polynomials and rejects jumps") {
    const TMesh mesh = split_square_horizontal();
    const int edge = only_interior_edge(mesh);
    const int m = 1, mp = 2;

    PiecewisePolynomial global;
    global.m = m;
    global.mp = mp;
    // 3 + 2t + t^2 + 5s t on both faces: smooth at every order.
    const std::vector<Rational> coeffs{3, 2, 1, 0, 5, 0};
    global.face_coeffs = {coeffs, coeffs};
    CHECK(verify_smoothness(SmoothnessDistribution::uniform(mesh, 2), global));

    PiecewisePolynomial offset = global;
    offset.face_coeffs[1][0] += 1;
    CHECK_FALSE(verify_smoothness(SmoothnessDistribution::uniform(mesh, 0), offset));
    // With the edge released the same jump is fine.
    CHECK(verify_smoothness(SmoothnessDistribution::uniform(mesh, 0).with_order(edge, -1), offset));

    // Truncated power (t - 1/2)_+: continuous but with a kink.
    PiecewisePolynomial kink;
    kink.m = m;
    kink.mp = mp;
    kink.face_coeffs = {std::vector<Rational>(6, Rational(0)), {Rational(-1, 2), 1, 0, 0, 0, 0}};
    CHECK(verify_smoothness(SmoothnessDistribution::uniform(mesh, 0), kink));
    CHECK_FALSE(verify_smoothness(SmoothnessDistribution::uniform(mesh, 1), kink));

    PiecewisePolynomial wrong_shape = global;
    wrong_shape.face_coeffs.pop_back();
    CHECK_THROWS_AS(verify_smoothness(SmoothnessDistribution::uniform(mesh, 0), wrong_shape), MeshMismatch);
}

TEST_CASE("smoothness verification across a vertical edge") {
    const TMesh mesh = split_strip_vertical();
    const int m = 2, mp = 1;
    // (s - 1)_+ in the transversal direction of the vertical edge at s = 1.
    PiecewisePolynomial ramp;
    ramp.m = m;
    ramp.mp = mp;
    ramp.face_coeffs = {std::vector<Rational>(6, Rational(0)), {Rational(-1), 0, 1, 0, 0, 0}};
    CHECK(verify_smoothness(SmoothnessDistribution::uniform(mesh, 0), ramp));
    CHECK_FALSE(verify_smoothness(SmoothnessDistribution::uniform(mesh, 1), ramp));
}
