#include "tmspline/mesh.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace tmspline {

namespace {

bool interiors_overlap(const Rect& a, const Rect& b) {
    return std::max(a.xmin, b.xmin) < std::min(a.xmax, b.xmax) &&
           std::max(a.ymin, b.ymin) < std::min(a.ymax, b.ymax);
}

bool closures_touch(const Rect& a, const Rect& b) {
    return std::max(a.xmin, b.xmin) <= std::min(a.xmax, b.xmax) &&
           std::max(a.ymin, b.ymin) <= std::min(a.ymax, b.ymax);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

TMesh TMesh::build_from_faces(std::vector<Rect> rects) {
    if (rects.empty()) throw Error("a mesh needs at least one face");
    for (const Rect& r : rects)
        if (!(r.xmin < r.xmax) || !(r.ymin < r.ymax))
            throw Error("degenerate rectangle [" + to_string(r.xmin) + "," + to_string(r.ymin) +
                        "," + to_string(r.xmax) + "," + to_string(r.ymax) + "]");

    // Canonical face order.  Two distinct faces cannot share a lower-left
    // corner without overlapping, so (xmin, ymin) is a total key.
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) {
        return std::tie(a.xmin, a.ymin) < std::tie(b.xmin, b.ymin);
    });

    const int nf = static_cast<int>(rects.size());
    UnionFind components(nf);
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            if (interiors_overlap(rects[i], rects[j]))
                throw OverlappingFaces("faces " + std::to_string(i) + " and " + std::to_string(j) +
                                       " have overlapping interiors");
            if (closures_touch(rects[i], rects[j])) components.unite(i, j);
        }
    for (int i = 1; i < nf; ++i)
        if (components.find(i) != components.find(0))
            throw DisconnectedDomain("the union of the faces is not connected");

    TMesh mesh;
    for (const Rect& r : rects) mesh.faces_.push_back(Face{r.xmin, r.ymin, r.xmax, r.ymax});

    // Vertices are exactly the rectangle corners (disjoint interiors rule out
    // transversal side crossings away from corners).
    std::map<std::pair<Rational, Rational>, int> vertex_id;
    for (const Rect& r : rects) {
        vertex_id.emplace(std::make_pair(r.xmin, r.ymin), 0);
        vertex_id.emplace(std::make_pair(r.xmax, r.ymin), 0);
        vertex_id.emplace(std::make_pair(r.xmin, r.ymax), 0);
        vertex_id.emplace(std::make_pair(r.xmax, r.ymax), 0);
    }
    for (auto& [coords, id] : vertex_id) {
        id = static_cast<int>(mesh.vertices_.size());
        mesh.vertices_.push_back(Vertex{coords.first, coords.second});
    }

    // Each face side is split at every vertex lying on it; consecutive
    // vertices bound one edge.  Shared side portions deduplicate by endpoint
    // pair and accumulate both adjacent faces.
    std::map<std::pair<int, int>, int> edge_id;
    auto add_side = [&](int face_index, Orientation orientation, const Rational& line,
                        const Rational& lo, const Rational& hi) {
        std::vector<int> on_side;
        for (const auto& [coords, id] : vertex_id) {
            const Rational& along = orientation == Orientation::horizontal ? coords.first : coords.second;
            const Rational& across = orientation == Orientation::horizontal ? coords.second : coords.first;
            if (across == line && lo <= along && along <= hi) on_side.push_back(id);
        }
        // vertex_id iterates by (x, y), so on_side is ordered along the side
        // for vertical sides already; horizontal sides need a sort by x only
        // when ids were interleaved, which cannot happen (same y, x sorted).
        std::sort(on_side.begin(), on_side.end(), [&](int a, int b) {
            const Vertex& va = mesh.vertices_[a];
            const Vertex& vb = mesh.vertices_[b];
            return orientation == Orientation::horizontal ? va.x < vb.x : va.y < vb.y;
        });
        for (std::size_t k = 0; k + 1 < on_side.size(); ++k) {
            std::pair<int, int> key(on_side[k], on_side[k + 1]);
            auto [it, fresh] = edge_id.emplace(key, static_cast<int>(mesh.edges_.size()));
            if (fresh) mesh.edges_.push_back(Edge{orientation, key.first, key.second, {}});
            mesh.edges_[it->second].faces.push_back(face_index);
        }
    };
    for (int f = 0; f < nf; ++f) {
        const Face& r = mesh.faces_[f];
        add_side(f, Orientation::horizontal, r.ymin, r.xmin, r.xmax);
        add_side(f, Orientation::horizontal, r.ymax, r.xmin, r.xmax);
        add_side(f, Orientation::vertical, r.xmin, r.ymin, r.ymax);
        add_side(f, Orientation::vertical, r.xmax, r.ymin, r.ymax);
    }

    std::vector<int> order(mesh.edges_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Edge& ea = mesh.edges_[a];
        const Edge& eb = mesh.edges_[b];
        return std::tie(ea.orientation, ea.start, ea.end) < std::tie(eb.orientation, eb.start, eb.end);
    });
    std::vector<Edge> sorted_edges;
    sorted_edges.reserve(mesh.edges_.size());
    for (int idx : order) {
        Edge e = std::move(mesh.edges_[idx]);
        std::sort(e.faces.begin(), e.faces.end());
        e.faces.erase(std::unique(e.faces.begin(), e.faces.end()), e.faces.end());
        sorted_edges.push_back(std::move(e));
    }
    mesh.edges_ = std::move(sorted_edges);

    mesh.rebuild_incidence();
    return mesh;
}

TMesh TMesh::from_parts(std::vector<Vertex> vertices, std::vector<Edge> edges,
                        std::vector<Face> faces) {
    TMesh mesh;
    mesh.vertices_ = std::move(vertices);
    mesh.edges_ = std::move(edges);
    mesh.faces_ = std::move(faces);
    mesh.rebuild_incidence();
    return mesh;
}

void TMesh::rebuild_incidence() {
    const int nv = vertex_count();
    const int ne = edge_count();
    const int nf = face_count();
    vertex_edges_.assign(nv, {});
    vertex_faces_.assign(nv, {});
    face_edges_.assign(nf, {});
    vertex_interior_.assign(nv, false);

    for (int e = 0; e < ne; ++e) {
        const Edge& edge = edges_[e];
        if (edge.start >= 0 && edge.start < nv) vertex_edges_[edge.start].push_back(e);
        if (edge.end >= 0 && edge.end < nv) vertex_edges_[edge.end].push_back(e);
        for (int f : edge.faces)
            if (f >= 0 && f < nf) face_edges_[f].push_back(e);
    }
    for (int f = 0; f < nf; ++f) {
        std::sort(face_edges_[f].begin(), face_edges_[f].end());
        face_edges_[f].erase(std::unique(face_edges_[f].begin(), face_edges_[f].end()),
                             face_edges_[f].end());
    }

    for (int v = 0; v < nv; ++v) {
        const Vertex& vert = vertices_[v];
        bool quad[2][2] = {{false, false}, {false, false}};
        for (int f = 0; f < nf; ++f) {
            const Face& r = faces_[f];
            if (r.xmin > vert.x || r.xmax < vert.x || r.ymin > vert.y || r.ymax < vert.y) continue;
            vertex_faces_[v].push_back(f);
            const bool xplus = r.xmin <= vert.x && vert.x < r.xmax;
            const bool xminus = r.xmin < vert.x && vert.x <= r.xmax;
            const bool yplus = r.ymin <= vert.y && vert.y < r.ymax;
            const bool yminus = r.ymin < vert.y && vert.y <= r.ymax;
            if (xplus && yplus) quad[1][1] = true;
            if (xplus && yminus) quad[1][0] = true;
            if (xminus && yplus) quad[0][1] = true;
            if (xminus && yminus) quad[0][0] = true;
        }
        vertex_interior_[v] = quad[0][0] && quad[0][1] && quad[1][0] && quad[1][1];
    }
}

const TMesh::Vertex& TMesh::vertex(int id) const {
    if (id < 0 || id >= vertex_count()) throw UnknownCell("unknown vertex " + std::to_string(id));
    return vertices_[id];
}

const TMesh::Edge& TMesh::edge(int id) const {
    if (id < 0 || id >= edge_count()) throw UnknownCell("unknown edge " + std::to_string(id));
    return edges_[id];
}

const TMesh::Face& TMesh::face(int id) const {
    if (id < 0 || id >= face_count()) throw UnknownCell("unknown face " + std::to_string(id));
    return faces_[id];
}

const std::vector<int>& TMesh::vertex_edges(int vertex_id) const {
    vertex(vertex_id);
    return vertex_edges_[vertex_id];
}

const std::vector<int>& TMesh::vertex_faces(int vertex_id) const {
    vertex(vertex_id);
    return vertex_faces_[vertex_id];
}

const std::vector<int>& TMesh::face_edges(int face_id) const {
    face(face_id);
    return face_edges_[face_id];
}

bool TMesh::edge_interior(int edge_id) const {
    return edge(edge_id).faces.size() == 2;
}

bool TMesh::vertex_interior(int vertex_id) const {
    vertex(vertex_id);
    return vertex_interior_[vertex_id];
}

long long TMesh::euler_number() const {
    return static_cast<long long>(vertex_count()) - edge_count() + face_count();
}

std::vector<Rect> TMesh::face_rects() const {
    std::vector<Rect> rects;
    rects.reserve(faces_.size());
    for (const Face& f : faces_) rects.push_back(Rect{f.xmin, f.ymin, f.xmax, f.ymax});
    return rects;
}

const Rational& TMesh::edge_line(int edge_id) const {
    const Edge& e = edge(edge_id);
    const Vertex& v = vertex(e.start);
    return e.orientation == Orientation::horizontal ? v.y : v.x;
}

Segment make_segment(const TMesh& mesh, std::vector<int> edge_ids) {
    if (edge_ids.empty()) throw NotASegment("a segment needs at least one edge");
    for (int e : edge_ids) {
        mesh.edge(e);
        if (!mesh.edge_interior(e))
            throw NotASegment("edge " + std::to_string(e) + " is a boundary edge");
    }
    std::sort(edge_ids.begin(), edge_ids.end());
    if (std::adjacent_find(edge_ids.begin(), edge_ids.end()) != edge_ids.end())
        throw NotASegment("duplicate edge id");

    const Orientation orientation = mesh.edge(edge_ids.front()).orientation;
    const Rational line = mesh.edge_line(edge_ids.front());
    for (int e : edge_ids) {
        if (mesh.edge(e).orientation != orientation)
            throw NotASegment("edges are not collinear (mixed orientations)");
        if (mesh.edge_line(e) != line) throw NotASegment("edges lie on different lines");
    }
    std::sort(edge_ids.begin(), edge_ids.end(), [&](int a, int b) {
        const auto& va = mesh.vertex(mesh.edge(a).start);
        const auto& vb = mesh.vertex(mesh.edge(b).start);
        return orientation == Orientation::horizontal ? va.x < vb.x : va.y < vb.y;
    });
    for (std::size_t k = 0; k + 1 < edge_ids.size(); ++k)
        if (mesh.edge(edge_ids[k]).end != mesh.edge(edge_ids[k + 1]).start)
            throw NotASegment("edges are not consecutive along the line");

    Segment segment;
    segment.orientation = orientation;
    segment.edge_ids = std::move(edge_ids);
    segment.vertex_ids.push_back(mesh.edge(segment.edge_ids.front()).start);
    for (int e : segment.edge_ids) segment.vertex_ids.push_back(mesh.edge(e).end);
    return segment;
}

namespace {

// Edges of the mesh lying on a given closed side must tile it exactly.
bool side_covered(const TMesh& mesh, Orientation orientation, const Rational& line,
                  const Rational& lo, const Rational& hi) {
    std::vector<std::pair<Rational, Rational>> spans;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const auto& edge = mesh.edge(e);
        if (edge.orientation != orientation) continue;
        const auto& a = mesh.vertex(edge.start);
        const auto& b = mesh.vertex(edge.end);
        if (orientation == Orientation::horizontal) {
            if (a.y != line) continue;
            if (a.x >= lo && b.x <= hi) spans.emplace_back(a.x, b.x);
        } else {
            if (a.x != line) continue;
            if (a.y >= lo && b.y <= hi) spans.emplace_back(a.y, b.y);
        }
    }
    std::sort(spans.begin(), spans.end());
    Rational cursor = lo;
    for (const auto& [s, t] : spans) {
        if (s != cursor) return false;
        cursor = t;
    }
    return cursor == hi;
}

} // namespace

ValidationReport validate_tmesh(const TMesh& mesh) {
    ValidationReport report;
    report.euler = mesh.euler_number();
    auto flag = [&](std::string code, std::string detail) {
        report.violations.push_back(Violation{std::move(code), std::move(detail)});
    };

    // referential and geometric integrity of the stored cells
    bool structure_ok = true;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const auto& edge = mesh.edge(e);
        if (edge.start < 0 || edge.start >= mesh.vertex_count() || edge.end < 0 ||
            edge.end >= mesh.vertex_count() || edge.start == edge.end) {
            flag("structure", "edge " + std::to_string(e) + " has bad endpoints");
            structure_ok = false;
            continue;
        }
        const auto& a = mesh.vertex(edge.start);
        const auto& b = mesh.vertex(edge.end);
        const bool aligned = edge.orientation == Orientation::horizontal ? (a.y == b.y && a.x < b.x)
                                                                         : (a.x == b.x && a.y < b.y);
        if (!aligned) {
            flag("structure", "edge " + std::to_string(e) + " endpoints do not match its orientation");
            structure_ok = false;
        }
        if (edge.faces.empty() || edge.faces.size() > 2)
            flag("structure", "edge " + std::to_string(e) + " is adjacent to " +
                                  std::to_string(edge.faces.size()) + " faces");
    }
    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& r = mesh.face(f);
        if (!(r.xmin < r.xmax) || !(r.ymin < r.ymax)) {
            flag("structure", "face " + std::to_string(f) + " is degenerate");
            structure_ok = false;
        }
    }
    if (!structure_ok) return report;

    // (i) each face boundary is a union of edges
    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& r = mesh.face(f);
        const bool ok = side_covered(mesh, Orientation::horizontal, r.ymin, r.xmin, r.xmax) &&
                        side_covered(mesh, Orientation::horizontal, r.ymax, r.xmin, r.xmax) &&
                        side_covered(mesh, Orientation::vertical, r.xmin, r.ymin, r.ymax) &&
                        side_covered(mesh, Orientation::vertical, r.xmax, r.ymin, r.ymax);
        if (!ok) flag("face-boundary", "face " + std::to_string(f) + " boundary is not tiled by edges");
    }

    // (ii) face interiors pairwise disjoint
    for (int i = 0; i < mesh.face_count(); ++i)
        for (int j = i + 1; j < mesh.face_count(); ++j) {
            const auto& a = mesh.face(i);
            const auto& b = mesh.face(j);
            if (interiors_overlap(Rect{a.xmin, a.ymin, a.xmax, a.ymax},
                                  Rect{b.xmin, b.ymin, b.xmax, b.ymax}))
                flag("face-overlap",
                     "faces " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }

    // (iii) edge-edge intersections are vertices; edges are minimal, so no
    // vertex may sit in an edge's relative interior either
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const auto& edge = mesh.edge(e);
        const auto& a = mesh.vertex(edge.start);
        const auto& b = mesh.vertex(edge.end);
        for (int v = 0; v < mesh.vertex_count(); ++v) {
            if (v == edge.start || v == edge.end) continue;
            const auto& p = mesh.vertex(v);
            const bool inside = edge.orientation == Orientation::horizontal
                                    ? (p.y == a.y && a.x < p.x && p.x < b.x)
                                    : (p.x == a.x && a.y < p.y && p.y < b.y);
            if (inside)
                flag("unsplit-edge", "vertex " + std::to_string(v) + " lies inside edge " +
                                         std::to_string(e));
        }
    }
    for (int i = 0; i < mesh.edge_count(); ++i)
        for (int j = i + 1; j < mesh.edge_count(); ++j) {
            const auto& ei = mesh.edge(i);
            const auto& ej = mesh.edge(j);
            const auto& a0 = mesh.vertex(ei.start);
            const auto& a1 = mesh.vertex(ei.end);
            const auto& b0 = mesh.vertex(ej.start);
            const auto& b1 = mesh.vertex(ej.end);
            if (ei.orientation == ej.orientation) {
                if (ei.orientation == Orientation::horizontal) {
                    if (a0.y == b0.y && std::max(a0.x, b0.x) < std::min(a1.x, b1.x))
                        flag("edge-overlap", "edges " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " overlap");
                } else {
                    if (a0.x == b0.x && std::max(a0.y, b0.y) < std::min(a1.y, b1.y))
                        flag("edge-overlap", "edges " + std::to_string(i) + " and " +
                                                 std::to_string(j) + " overlap");
                }
            } else {
                const auto& h0 = ei.orientation == Orientation::horizontal ? a0 : b0;
                const auto& h1 = ei.orientation == Orientation::horizontal ? a1 : b1;
                const auto& v0 = ei.orientation == Orientation::horizontal ? b0 : a0;
                const auto& v1 = ei.orientation == Orientation::horizontal ? b1 : a1;
                // crossing point, if any, is (v0.x, h0.y)
                if (h0.x < v0.x && v0.x < h1.x && v0.y < h0.y && h0.y < v1.y)
                    flag("edge-crossing", "edges " + std::to_string(i) + " and " +
                                              std::to_string(j) + " cross away from a vertex");
            }
        }

    // (iv) interior of the domain connected: faces joined through shared
    // interior edges must form one component
    if (mesh.face_count() > 0) {
        UnionFind uf(mesh.face_count());
        for (int e = 0; e < mesh.edge_count(); ++e) {
            const auto& edge = mesh.edge(e);
            if (edge.faces.size() == 2) uf.unite(edge.faces[0], edge.faces[1]);
        }
        for (int f = 1; f < mesh.face_count(); ++f)
            if (uf.find(f) != uf.find(0)) {
                flag("interior-disconnected", "the interior of the domain is disconnected");
                break;
            }
    }

    // (v) simple connectedness via the Euler count
    if (report.euler != 1)
        flag("euler", "n0 - n1 + n2 = " + std::to_string(report.euler) + ", expected 1");

    return report;
}

Classification classify(const TMesh& mesh) {
    Classification result;
    for (int e = 0; e < mesh.edge_count(); ++e)
        (mesh.edge_interior(e) ? result.interior_edges : result.boundary_edges).push_back(e);
    for (int v = 0; v < mesh.vertex_count(); ++v)
        (mesh.vertex_interior(v) ? result.interior_vertices : result.boundary_vertices).push_back(v);
    return result;
}

std::vector<Segment> maximal_segments(const TMesh& mesh) {
    std::vector<Segment> segments;
    for (Orientation orientation : {Orientation::horizontal, Orientation::vertical}) {
        std::map<Rational, std::vector<int>> lines;
        for (int e = 0; e < mesh.edge_count(); ++e)
            if (mesh.edge(e).orientation == orientation && mesh.edge_interior(e))
                lines[mesh.edge_line(e)].push_back(e);
        for (auto& [line, edge_ids] : lines) {
            std::sort(edge_ids.begin(), edge_ids.end(), [&](int a, int b) {
                const auto& va = mesh.vertex(mesh.edge(a).start);
                const auto& vb = mesh.vertex(mesh.edge(b).start);
                return orientation == Orientation::horizontal ? va.x < vb.x : va.y < vb.y;
            });
            std::vector<int> run;
            auto emit = [&]() {
                if (!run.empty()) segments.push_back(make_segment(mesh, run));
                run.clear();
            };
            for (int e : edge_ids) {
                if (!run.empty() && mesh.edge(run.back()).end != mesh.edge(e).start) emit();
                run.push_back(e);
            }
            emit();
        }
    }
    return segments;
}

TMesh refine_face(const TMesh& mesh, int face_id, const Rational& x, const Rational& y) {
    const auto& f = mesh.face(face_id);
    if (!(f.xmin < x && x < f.xmax && f.ymin < y && y < f.ymax))
        throw PointOnFaceBoundary("split point must lie strictly inside the face");
    std::vector<Rect> rects = mesh.face_rects();
    rects.erase(rects.begin() + face_id);
    rects.push_back(Rect{f.xmin, f.ymin, x, y});
    rects.push_back(Rect{x, f.ymin, f.xmax, y});
    rects.push_back(Rect{f.xmin, y, x, f.ymax});
    rects.push_back(Rect{x, y, f.xmax, f.ymax});
    return TMesh::build_from_faces(std::move(rects));
}

TMesh refine_face(const TMesh& mesh, int face_id) {
    const auto& f = mesh.face(face_id);
    return refine_face(mesh, face_id, (f.xmin + f.xmax) / 2, (f.ymin + f.ymax) / 2);
}

namespace {

struct CrossMerge {
    Rect merged;
    int nw = -1, ne = -1, sw = -1, se = -1;
};

std::optional<CrossMerge> removable_cross_at(const TMesh& mesh, int v) {
    if (!mesh.vertex_interior(v) || mesh.vertex_edges(v).size() != 4) return std::nullopt;
    const auto& p = mesh.vertex(v);
    CrossMerge cm;
    for (int f : mesh.vertex_faces(v)) {
        const auto& r = mesh.face(f);
        if (r.xmin == p.x && r.ymin == p.y) cm.ne = f;
        if (r.xmax == p.x && r.ymin == p.y) cm.nw = f;
        if (r.xmax == p.x && r.ymax == p.y) cm.sw = f;
        if (r.xmin == p.x && r.ymax == p.y) cm.se = f;
    }
    if (cm.nw < 0 || cm.ne < 0 || cm.sw < 0 || cm.se < 0) return std::nullopt;
    const auto& nw = mesh.face(cm.nw);
    const auto& ne = mesh.face(cm.ne);
    const auto& sw = mesh.face(cm.sw);
    const auto& se = mesh.face(cm.se);
    // the four corner faces must tile their bounding box
    if (nw.xmin != sw.xmin || ne.xmax != se.xmax || nw.ymax != ne.ymax || sw.ymin != se.ymin)
        return std::nullopt;
    cm.merged = Rect{nw.xmin, sw.ymin, ne.xmax, ne.ymax};
    return cm;
}

std::vector<Rect> merge_cross(const TMesh& mesh, const CrossMerge& cm) {
    std::vector<Rect> rects;
    for (int f = 0; f < mesh.face_count(); ++f) {
        if (f == cm.nw || f == cm.ne || f == cm.sw || f == cm.se) continue;
        const auto& r = mesh.face(f);
        rects.push_back(Rect{r.xmin, r.ymin, r.xmax, r.ymax});
    }
    rects.push_back(cm.merged);
    return rects;
}

std::string rects_key(const TMesh& mesh) {
    std::ostringstream out;
    for (const auto& f : mesh.faces())
        out << to_string(f.xmin) << ',' << to_string(f.ymin) << ',' << to_string(f.xmax) << ','
            << to_string(f.ymax) << ';';
    return out.str();
}

bool hierarchical_search(const TMesh& mesh, std::unordered_set<std::string>& visited) {
    if (is_tensor_grid(mesh)) return true;
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        auto cm = removable_cross_at(mesh, v);
        if (!cm) continue;
        TMesh merged = TMesh::build_from_faces(merge_cross(mesh, *cm));
        if (visited.insert(rects_key(merged)).second && hierarchical_search(merged, visited))
            return true;
    }
    return false;
}

} // namespace

bool is_tensor_grid(const TMesh& mesh) {
    std::set<Rational> xs, ys;
    for (const auto& f : mesh.faces()) {
        xs.insert(f.xmin);
        xs.insert(f.xmax);
        ys.insert(f.ymin);
        ys.insert(f.ymax);
    }
    const auto adjacent = [](const std::set<Rational>& cuts, const Rational& lo, const Rational& hi) {
        auto it = cuts.find(lo);
        return it != cuts.end() && std::next(it) != cuts.end() && *std::next(it) == hi;
    };
    for (const auto& f : mesh.faces())
        if (!adjacent(xs, f.xmin, f.xmax) || !adjacent(ys, f.ymin, f.ymax)) return false;
    return static_cast<std::size_t>(mesh.face_count()) == (xs.size() - 1) * (ys.size() - 1);
}

bool has_removable_cross(const TMesh& mesh) {
    for (int v = 0; v < mesh.vertex_count(); ++v)
        if (removable_cross_at(mesh, v)) return true;
    return false;
}

bool is_hierarchical(const TMesh& mesh) {
    std::unordered_set<std::string> visited;
    visited.insert(rects_key(mesh));
    return hierarchical_search(mesh, visited);
}

TMesh tensor_grid(int cells_x, int cells_y) {
    if (cells_x < 1 || cells_y < 1) throw ParamOutOfRange("grid needs at least one cell per direction");
    std::vector<Rect> rects;
    for (int i = 0; i < cells_x; ++i)
        for (int j = 0; j < cells_y; ++j)
            rects.push_back(Rect{Rational(i), Rational(j), Rational(i + 1), Rational(j + 1)});
    return TMesh::build_from_faces(std::move(rects));
}

TMesh hierarchical_mesh(std::uint64_t seed, int depth) {
    if (depth < 0) throw ParamOutOfRange("depth must be nonnegative");
    std::mt19937_64 rng(seed);
    TMesh mesh = TMesh::build_from_faces({Rect{Rational(0), Rational(0), Rational(1), Rational(1)}});
    for (int step = 0; step < depth; ++step) {
        const int f = static_cast<int>(rng() % static_cast<std::uint64_t>(mesh.face_count()));
        mesh = refine_face(mesh, f);
    }
    return mesh;
}

TMesh cyclic_pinwheel() {
    // Four outer faces each end one arm of a neighbor's line: the interior
    // vertices are all T-junctions, so there is no cross vertex to merge.
    return TMesh::build_from_faces({
        Rect{Rational(0), Rational(0), Rational(1), Rational(2)},
        Rect{Rational(0), Rational(2), Rational(2), Rational(3)},
        Rect{Rational(2), Rational(1), Rational(3), Rational(3)},
        Rect{Rational(1), Rational(0), Rational(3), Rational(1)},
        Rect{Rational(1), Rational(1), Rational(2), Rational(2)},
    });
}

} // namespace tmspline
