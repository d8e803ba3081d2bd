#ifndef TMSPLINE_MESH_HPP
#define TMSPLINE_MESH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tmspline/errors.hpp"
#include "tmspline/rational.hpp"

namespace tmspline {

enum class Orientation { horizontal, vertical };

struct Rect {
    Rational xmin, ymin, xmax, ymax;
};

// Axis-aligned T-mesh: open rectangular faces, closed axis-parallel edges,
// vertices.  Edges are the minimal segments between consecutive vertices on a
// line, so edge-edge intersections are vertices by construction.  Cell ids
// are canonical: vertices sorted by (x, y), edges by (orientation, start
// vertex), faces by (xmin, ymin).  Instances are immutable once built.
class TMesh {
public:
    struct Vertex {
        Rational x, y;
    };
    struct Edge {
        Orientation orientation;
        int start, end;         // vertex ids, start lexicographically smaller
        std::vector<int> faces; // adjacent face ids, sorted; 2 = interior
    };
    struct Face {
        Rational xmin, ymin, xmax, ymax;
    };

    // Builds the unique T-mesh whose faces are the given rectangles.
    // Throws OverlappingFaces when two interiors intersect and
    // DisconnectedDomain when the union of closures is not connected.
    static TMesh build_from_faces(std::vector<Rect> rects);

    // Assembles a mesh from explicit cells without any construction checks;
    // exists so validate_tmesh has something to diagnose in tests.
    static TMesh from_parts(std::vector<Vertex> vertices, std::vector<Edge> edges,
                            std::vector<Face> faces);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const Vertex& vertex(int id) const;
    const Edge& edge(int id) const;
    const Face& face(int id) const;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    const std::vector<int>& vertex_edges(int vertex_id) const;
    const std::vector<int>& vertex_faces(int vertex_id) const;
    const std::vector<int>& face_edges(int face_id) const;

    // An edge is interior iff its relative interior meets the open interior
    // of the domain; for built meshes that is exactly "two adjacent faces".
    bool edge_interior(int edge_id) const;
    // A vertex is interior iff all four quadrants around it are covered.
    bool vertex_interior(int vertex_id) const;

    // n0 - n1 + n2; equals 1 exactly when the domain is simply connected.
    long long euler_number() const;

    std::vector<Rect> face_rects() const;

    // Line coordinate of an edge: y for horizontal edges, x for vertical.
    const Rational& edge_line(int edge_id) const;

private:
    TMesh() = default;
    void rebuild_incidence();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> vertex_edges_;
    std::vector<std::vector<int>> vertex_faces_;
    std::vector<std::vector<int>> face_edges_;
    std::vector<bool> vertex_interior_;
};

// Connected union of collinear interior edges together with the vertices
// they carry (both endpoints included, boundary or not).  Edge and vertex
// ids are listed in line order.
struct Segment {
    Orientation orientation;
    std::vector<int> edge_ids;
    std::vector<int> vertex_ids;
};

// Validates edge ids as a segment (nonempty, interior, collinear, connected)
// and fills in the carried vertices.  Throws NotASegment otherwise.
Segment make_segment(const TMesh& mesh, std::vector<int> edge_ids);

struct Violation {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    long long euler = 0;
    bool valid() const { return violations.empty(); }
};

// Checks the defining conditions on the cells of a mesh: face boundaries
// covered by edges, pairwise-disjoint face interiors, edge-edge
// intersections that are vertices, connectivity of the domain interior, and
// Euler count n0 - n1 + n2 == 1 (simple connectedness).
ValidationReport validate_tmesh(const TMesh& mesh);

struct Classification {
    std::vector<int> interior_edges;
    std::vector<int> boundary_edges;
    std::vector<int> interior_vertices;
    std::vector<int> boundary_vertices;
};

Classification classify(const TMesh& mesh);

// Maximal segments, one per maximal run of collinear interior edges;
// together they partition the interior edges.
std::vector<Segment> maximal_segments(const TMesh& mesh);

// Splits a face by a full cross through the given point, which must lie
// strictly inside the face (throws PointOnFaceBoundary otherwise); the
// two-argument overload splits at the center.  Returns a new mesh with
// three more faces.
TMesh refine_face(const TMesh& mesh, int face_id, const Rational& x, const Rational& y);
TMesh refine_face(const TMesh& mesh, int face_id);

// True when the mesh can be produced from some tensor-product grid by
// repeatedly splitting faces with full crosses.  Decided by searching for a
// sequence of removable cross vertices (a degree-4 interior vertex whose
// four corner faces tile their bounding box) whose removal reaches a grid.
bool is_hierarchical(const TMesh& mesh);

// True when some cross vertex can be merged away right now.
bool has_removable_cross(const TMesh& mesh);

bool is_tensor_grid(const TMesh& mesh);

// Generators.  tensor_grid makes cells_x * cells_y unit cells; the
// hierarchical generator applies `depth` random center splits starting from
// the unit square; the cyclic generator is the 3x3-based pinwheel whose four
// outer faces T-split each other in a cycle (it has no cross vertex at all).
TMesh tensor_grid(int cells_x, int cells_y);
TMesh hierarchical_mesh(std::uint64_t seed, int depth);
TMesh cyclic_pinwheel();

} // namespace tmspline

#endif
