#ifndef TMSPLINE_HOMOLOGY_HPP
#define TMSPLINE_HOMOLOGY_HPP

#include <vector>

#include "tmspline/rational.hpp"
#include "tmspline/smoothness.hpp"

namespace tmspline {

// All polynomial spaces below live in the bi-degree box spanned by s^i t^j
// with 0 <= i <= m, 0 <= j <= m', coordinatized in that monomial basis with
// index i*(m'+1) + j.  Negative m or m' means the zero space.

// Basis of the edge ideal: the multiples, within the box, of the (order+1)-th
// power of the linear form vanishing on the edge's line.  Order -1 gives the
// whole box (exponent 0).
struct EdgeIdealBasis {
    int edge_id = -1;
    int generator_exponent = 0; // order + 1
    std::vector<std::vector<Rational>> vectors;
};

// Throws BoundaryEdge for boundary edges (their order is pinned at -1 and
// they never enter the complex).
EdgeIdealBasis edge_ideal_basis(const SmoothnessDistribution& dist, int edge_id, int m, int mp);

// Sum of the edge ideals over all edges through an interior vertex, held as
// the concatenated spanning set plus its rank.
struct VertexIdealSpace {
    int vertex_id = -1;
    std::vector<std::vector<Rational>> spanning;
    long long dimension = 0;
};

// Throws BoundaryVertex for boundary vertices.
VertexIdealSpace vertex_ideal(const SmoothnessDistribution& dist, int vertex_id, int m, int mp);

// dim H0 of the two-term complex (edge ideals over interior edges) ->
// (vertex ideals over interior vertices), where an edge maps a polynomial to
// its class at the larger endpoint minus its class at the smaller one and
// boundary endpoints are dropped.  Zero iff the spline dimension equals the
// Euler characteristic.
long long h0_dimension(const SmoothnessDistribution& dist, int m, int mp);

struct LocalizedH0 {
    long long dimension = 0;
    std::vector<int> support_edges;    // edges where target < base
    std::vector<int> support_vertices; // their interior endpoints
};

// Computes dim H0 for `target` through the quotient complex against `base`,
// touching only the support cells.  Requires target <= base pointwise
// (throws NotBelowBase); equals h0_dimension(target) whenever the base
// itself has vanishing H0, which the caller is responsible for.
LocalizedH0 h0_quotient_localized(const SmoothnessDistribution& base,
                                  const SmoothnessDistribution& target, int m, int mp);

// chi + dim H0: the spline space dimension, valid unconditionally.
long long spline_dimension_homological(const SmoothnessDistribution& dist, int m, int mp);

} // namespace tmspline

#endif
