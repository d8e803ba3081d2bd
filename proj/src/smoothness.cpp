#include "tmspline/smoothness.hpp"

#include <algorithm>
#include <string>

namespace tmspline {

namespace {

void check_order_value(int order) {
    if (order < -1)
        throw Error("smoothness order " + std::to_string(order) + " is below -1");
}

} // namespace

SmoothnessDistribution::SmoothnessDistribution(const TMesh& mesh, int default_horizontal,
                                               int default_vertical)
    : mesh_(&mesh), orders_(mesh.edge_count(), -1) {
    check_order_value(default_horizontal);
    check_order_value(default_vertical);
    for (int e = 0; e < mesh.edge_count(); ++e)
        if (mesh.edge_interior(e))
            orders_[e] = mesh.edge(e).orientation == Orientation::horizontal ? default_horizontal
                                                                             : default_vertical;
}

SmoothnessDistribution::SmoothnessDistribution(const TMesh& mesh, std::vector<int> orders)
    : mesh_(&mesh), orders_(std::move(orders)) {
    if (orders_.size() != static_cast<std::size_t>(mesh.edge_count()))
        throw MeshMismatch("expected " + std::to_string(mesh.edge_count()) + " edge orders, got " +
                           std::to_string(orders_.size()));
    for (int e = 0; e < mesh.edge_count(); ++e) {
        check_order_value(orders_[e]);
        if (!mesh.edge_interior(e) && orders_[e] != -1)
            throw BoundaryEdge("edge " + std::to_string(e) +
                               " is a boundary edge and must keep order -1");
    }
}

SmoothnessDistribution SmoothnessDistribution::uniform(const TMesh& mesh, int order) {
    return SmoothnessDistribution(mesh, order, order);
}

int SmoothnessDistribution::order(int edge_id) const {
    mesh_->edge(edge_id);
    return orders_[edge_id];
}

SmoothnessDistribution SmoothnessDistribution::with_order(int edge_id, int order) const {
    mesh_->edge(edge_id);
    check_order_value(order);
    if (!mesh_->edge_interior(edge_id) && order != -1)
        throw BoundaryEdge("edge " + std::to_string(edge_id) +
                           " is a boundary edge and must keep order -1");
    SmoothnessDistribution result = *this;
    result.orders_[edge_id] = order;
    return result;
}

VertexSmoothness vertex_smoothness(const SmoothnessDistribution& dist, int vertex_id) {
    const TMesh& mesh = dist.mesh();
    VertexSmoothness result;
    bool have_h = false, have_v = false;
    for (int e : mesh.vertex_edges(vertex_id)) {
        const int r = dist.order(e);
        if (mesh.edge(e).orientation == Orientation::vertical) {
            result.horizontal = have_h ? std::min(result.horizontal, r) : r;
            have_h = true;
        } else {
            result.vertical = have_v ? std::min(result.vertical, r) : r;
            have_v = true;
        }
    }
    return result;
}

OrderCompare compare(const SmoothnessDistribution& s, const SmoothnessDistribution& r) {
    if (s.orders().size() != r.orders().size())
        throw MeshMismatch("distributions live on meshes with different edge counts");
    for (std::size_t e = 0; e < s.orders().size(); ++e)
        if (s.orders()[e] > r.orders()[e]) return OrderCompare::incomparable;
    return OrderCompare::pointwise_leq;
}

SmoothnessDistribution reduce_on_segment(const SmoothnessDistribution& dist, const Segment& segment,
                                         int r) {
    check_order_value(r);
    std::vector<int> orders = dist.orders();
    for (int e : segment.edge_ids) {
        dist.mesh().edge(e);
        if (orders[e] < r)
            throw NotAReduction("edge " + std::to_string(e) + " has order " +
                                std::to_string(orders[e]) + " < " + std::to_string(r));
        orders[e] = r;
    }
    return SmoothnessDistribution(dist.mesh(), std::move(orders));
}

bool is_box_distribution(const SmoothnessDistribution& dist, int m, int mp) {
    const TMesh& mesh = dist.mesh();
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const int bound_numerator = mesh.edge(e).orientation == Orientation::horizontal ? mp - 1
                                                                                        : m - 1;
        if (2 * dist.order(e) > bound_numerator) return false;
    }
    return true;
}

bool is_constant_on_maximal_segments(const SmoothnessDistribution& dist) {
    for (const Segment& segment : maximal_segments(dist.mesh()))
        for (int e : segment.edge_ids)
            if (dist.order(e) != dist.order(segment.edge_ids.front())) return false;
    return true;
}

} // namespace tmspline
