#include "tmspline/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tmspline/dimension.hpp"
#include "tmspline/exact_matrix.hpp"

namespace tmspline {

namespace {

int box_dimension(int m, int mp) { return (m < 0 || mp < 0) ? 0 : (m + 1) * (mp + 1); }

std::vector<Integer> binomial_row(int n) {
    std::vector<Integer> row(n + 1, 1);
    for (int k = 1; k < n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
    return row;
}

// Monomial coordinates (index i*(mp+1)+j for s^i t^j) of the multiples of
// (t - c)^exponent (horizontal) or (s - c)^exponent (vertical) in the box.
std::vector<std::vector<Rational>> line_ideal_vectors(Orientation orientation, const Rational& c,
                                                      int order, int m, int mp) {
    std::vector<std::vector<Rational>> vectors;
    const int dim = box_dimension(m, mp);
    if (dim == 0) return vectors;
    const int exponent = order + 1;
    const std::vector<Integer> binom = binomial_row(exponent);
    const int imax = orientation == Orientation::horizontal ? m : m - exponent;
    const int jmax = orientation == Orientation::horizontal ? mp - exponent : mp;
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= jmax; ++j) {
            std::vector<Rational> v(dim, Rational(0));
            for (int k = 0; k <= exponent; ++k) {
                const Rational coeff = Rational(binom[k]) * rational_pow(-c, exponent - k);
                if (orientation == Orientation::horizontal)
                    v[i * (mp + 1) + (j + k)] += coeff;
                else
                    v[(i + k) * (mp + 1) + j] += coeff;
            }
            vectors.push_back(std::move(v));
        }
    return vectors;
}

std::vector<std::vector<Rational>> edge_vectors(const SmoothnessDistribution& dist, int edge_id,
                                                int m, int mp) {
    const TMesh& mesh = dist.mesh();
    return line_ideal_vectors(mesh.edge(edge_id).orientation, mesh.edge_line(edge_id),
                              dist.order(edge_id), m, mp);
}

} // namespace

EdgeIdealBasis edge_ideal_basis(const SmoothnessDistribution& dist, int edge_id, int m, int mp) {
    if (!dist.mesh().edge_interior(edge_id))
        throw BoundaryEdge("edge " + std::to_string(edge_id) + " is a boundary edge");
    EdgeIdealBasis basis;
    basis.edge_id = edge_id;
    basis.generator_exponent = dist.order(edge_id) + 1;
    basis.vectors = edge_vectors(dist, edge_id, m, mp);
    return basis;
}

VertexIdealSpace vertex_ideal(const SmoothnessDistribution& dist, int vertex_id, int m, int mp) {
    const TMesh& mesh = dist.mesh();
    if (!mesh.vertex_interior(vertex_id))
        throw BoundaryVertex("vertex " + std::to_string(vertex_id) + " is a boundary vertex");
    VertexIdealSpace space;
    space.vertex_id = vertex_id;
    IncrementalSpan span(box_dimension(m, mp));
    for (int e : mesh.vertex_edges(vertex_id))
        for (auto& v : edge_vectors(dist, e, m, mp)) {
            span.insert(v);
            space.spanning.push_back(std::move(v));
        }
    space.dimension = static_cast<long long>(span.rank());
    return space;
}

long long h0_dimension(const SmoothnessDistribution& dist, int m, int mp) {
    if (m < 0 || mp < 0) return 0;
    const TMesh& mesh = dist.mesh();
    const int dim = box_dimension(m, mp);

    // one echelon span per interior vertex; its rank-sized coordinates are
    // the rows of the boundary matrix
    std::map<int, IncrementalSpan> spans;
    std::map<int, std::size_t> offset;
    std::size_t total_rows = 0;
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        if (!mesh.vertex_interior(v)) continue;
        IncrementalSpan span(dim);
        for (int e : mesh.vertex_edges(v))
            for (const auto& vec : edge_vectors(dist, e, m, mp)) span.insert(vec);
        offset.emplace(v, total_rows);
        total_rows += span.rank();
        spans.emplace(v, std::move(span));
    }

    std::vector<std::vector<Rational>> columns;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        if (!mesh.edge_interior(e)) continue;
        const auto& edge = mesh.edge(e);
        for (const auto& vec : edge_vectors(dist, e, m, mp)) {
            std::vector<Rational> column(total_rows, Rational(0));
            bool touches = false;
            for (const auto& [vertex_id, sign] :
                 {std::pair<int, int>{edge.end, 1}, std::pair<int, int>{edge.start, -1}}) {
                auto it = spans.find(vertex_id);
                if (it == spans.end()) continue; // boundary endpoint dropped
                auto coords = it->second.coordinates(vec);
                if (!coords)
                    throw Error("edge ideal vector escapes its endpoint vertex ideal");
                for (std::size_t k = 0; k < coords->size(); ++k)
                    column[offset.at(vertex_id) + k] += sign * (*coords)[k];
                touches = true;
            }
            if (touches) columns.push_back(std::move(column));
        }
    }

    ExactMatrix boundary(total_rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < total_rows; ++r) boundary.at(r, c) = columns[c][r];
    return static_cast<long long>(total_rows) - static_cast<long long>(rank(boundary));
}

LocalizedH0 h0_quotient_localized(const SmoothnessDistribution& base,
                                  const SmoothnessDistribution& target, int m, int mp) {
    if (compare(target, base) != OrderCompare::pointwise_leq)
        throw NotBelowBase("target distribution exceeds the base somewhere");
    const TMesh& mesh = base.mesh();

    LocalizedH0 result;
    std::set<int> support_vertices;
    for (int e = 0; e < mesh.edge_count(); ++e)
        if (target.order(e) < base.order(e)) {
            result.support_edges.push_back(e);
            for (int v : {mesh.edge(e).start, mesh.edge(e).end})
                if (mesh.vertex_interior(v)) support_vertices.insert(v);
        }
    result.support_vertices.assign(support_vertices.begin(), support_vertices.end());
    if (m < 0 || mp < 0 || result.support_edges.empty()) return result;

    const int dim = box_dimension(m, mp);

    // Extend each base vertex ideal to the target one; coordinates past the
    // base rank live in the quotient.
    struct VertexQuotient {
        IncrementalSpan span;
        std::size_t base_rank = 0;
        std::size_t offset = 0;
    };
    std::map<int, VertexQuotient> quotients;
    std::size_t total_rows = 0;
    for (int v : result.support_vertices) {
        VertexQuotient q{IncrementalSpan(dim), 0, total_rows};
        for (int e : mesh.vertex_edges(v))
            for (const auto& vec : edge_vectors(base, e, m, mp)) q.span.insert(vec);
        q.base_rank = q.span.rank();
        for (int e : mesh.vertex_edges(v)) {
            if (target.order(e) == base.order(e)) continue;
            for (const auto& vec : edge_vectors(target, e, m, mp)) q.span.insert(vec);
        }
        total_rows += q.span.rank() - q.base_rank;
        quotients.emplace(v, std::move(q));
    }

    // Quotient representatives per support edge: target-ideal vectors that
    // extend the base ideal.
    std::vector<std::vector<Rational>> columns;
    for (int e : result.support_edges) {
        const auto& edge = mesh.edge(e);
        IncrementalSpan espan(dim);
        for (const auto& vec : edge_vectors(base, e, m, mp)) espan.insert(vec);
        for (const auto& vec : edge_vectors(target, e, m, mp)) {
            if (!espan.insert(vec)) continue;
            std::vector<Rational> column(total_rows, Rational(0));
            for (const auto& [vertex_id, sign] :
                 {std::pair<int, int>{edge.end, 1}, std::pair<int, int>{edge.start, -1}}) {
                auto it = quotients.find(vertex_id);
                if (it == quotients.end()) continue;
                const VertexQuotient& q = it->second;
                auto coords = q.span.coordinates(vec);
                if (!coords)
                    throw Error("edge ideal vector escapes its endpoint vertex ideal");
                for (std::size_t k = q.base_rank; k < coords->size(); ++k)
                    column[q.offset + (k - q.base_rank)] += sign * (*coords)[k];
            }
            columns.push_back(std::move(column));
        }
    }

    ExactMatrix boundary(total_rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t r = 0; r < total_rows; ++r) boundary.at(r, c) = columns[c][r];
    result.dimension =
        static_cast<long long>(total_rows) - static_cast<long long>(rank(boundary));
    return result;
}

long long spline_dimension_homological(const SmoothnessDistribution& dist, int m, int mp) {
    return euler_characteristic(dist, m, mp).chi + h0_dimension(dist, m, mp);
}

} // namespace tmspline
