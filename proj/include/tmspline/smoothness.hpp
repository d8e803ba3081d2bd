#ifndef TMSPLINE_SMOOTHNESS_HPP
#define TMSPLINE_SMOOTHNESS_HPP

#include <vector>

#include "tmspline/mesh.hpp"

namespace tmspline {

// Per-edge smoothness orders r: edges -> {-1, 0, 1, ...}.  Crossing an edge
// of order r requires C^r continuity; -1 means no condition.  Boundary edges
// are pinned at -1.  Value type over a borrowed mesh; the mesh must outlive
// the distribution.
class SmoothnessDistribution {
public:
    // every interior edge gets the default for its orientation
    SmoothnessDistribution(const TMesh& mesh, int default_horizontal, int default_vertical);
    // explicit per-edge orders, one per edge id; boundary entries must be -1
    SmoothnessDistribution(const TMesh& mesh, std::vector<int> orders);

    static SmoothnessDistribution uniform(const TMesh& mesh, int order);

    const TMesh& mesh() const { return *mesh_; }
    int order(int edge_id) const;
    const std::vector<int>& orders() const { return orders_; }

    // copy with one interior edge changed; boundary edges stay at -1
    SmoothnessDistribution with_order(int edge_id, int order) const;

private:
    const TMesh* mesh_;
    std::vector<int> orders_;
};

// Smoothness of a vertex in each axis direction.  Moving horizontally past a
// vertex crosses the vertical edges through it, so the horizontal order is
// the min over those (and symmetrically); an empty min is -1.
struct VertexSmoothness {
    int horizontal = -1;
    int vertical = -1;
};

VertexSmoothness vertex_smoothness(const SmoothnessDistribution& dist, int vertex_id);

enum class OrderCompare { pointwise_leq, incomparable };

// compare(s, r) = pointwise_leq iff s(tau) <= r(tau) for every edge
OrderCompare compare(const SmoothnessDistribution& s, const SmoothnessDistribution& r);

// Sets every edge of the segment to `r`.  Requires r <= dist on the whole
// segment (throws NotAReduction otherwise); edges already at r are allowed.
SmoothnessDistribution reduce_on_segment(const SmoothnessDistribution& dist, const Segment& segment,
                                         int r);

// True when every horizontal order is <= (m'-1)/2 and every vertical order
// is <= (m-1)/2, with the halves compared exactly (2r <= m'-1).
bool is_box_distribution(const SmoothnessDistribution& dist, int m, int mp);

// True when the order is constant along every maximal segment.
bool is_constant_on_maximal_segments(const SmoothnessDistribution& dist);

} // namespace tmspline

#endif
