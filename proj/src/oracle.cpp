#include "tmspline/oracle.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

#include "tmspline/exact_matrix.hpp"

namespace tmspline {

namespace {

int box_dimension(int m, int mp) { return (m < 0 || mp < 0) ? 0 : (m + 1) * (mp + 1); }

// d/dx^j applied to x^p: p (p-1) ... (p-j+1)
Integer falling_factorial(int p, int j) {
    Integer f = 1;
    for (int k = 0; k < j; ++k) f *= p - k;
    return f;
}

// faces above/below a horizontal edge or right/left of a vertical one
std::pair<int, int> oriented_faces(const TMesh& mesh, int edge_id) {
    const auto& edge = mesh.edge(edge_id);
    const Rational line = mesh.edge_line(edge_id);
    int plus = -1, minus = -1;
    for (int f : edge.faces) {
        const auto& rect = mesh.face(f);
        if (edge.orientation == Orientation::horizontal)
            (rect.ymin == line ? plus : minus) = f;
        else
            (rect.xmin == line ? plus : minus) = f;
    }
    return {plus, minus};
}

} // namespace

Rational evaluate_on_face(const PiecewisePolynomial& f, int face_id, const Rational& s,
                          const Rational& t) {
    if (face_id < 0 || static_cast<std::size_t>(face_id) >= f.face_coeffs.size())
        throw UnknownCell("no face " + std::to_string(face_id));
    const auto& coeffs = f.face_coeffs[face_id];
    Rational value = 0;
    Rational spow = 1;
    for (int i = 0; i <= f.m; ++i) {
        Rational tpow = 1;
        for (int j = 0; j <= f.mp; ++j) {
            value += coeffs[i * (f.mp + 1) + j] * spow * tpow;
            tpow *= t;
        }
        spow *= s;
    }
    return value;
}

ConstraintBlock edge_constraints(const SmoothnessDistribution& dist, int edge_id, int m, int mp) {
    const TMesh& mesh = dist.mesh();
    if (!mesh.edge_interior(edge_id))
        throw BoundaryEdge("edge " + std::to_string(edge_id) + " is a boundary edge");

    ConstraintBlock block;
    block.edge_id = edge_id;
    std::tie(block.plus_face, block.minus_face) = oriented_faces(mesh, edge_id);

    const int dim = box_dimension(m, mp);
    if (dim == 0) return block;
    const bool horizontal = mesh.edge(edge_id).orientation == Orientation::horizontal;
    const Rational line = mesh.edge_line(edge_id);
    const int transversal = horizontal ? mp : m;
    const int parallel = horizontal ? m : mp;
    const int jmax = std::min(dist.order(edge_id), transversal);

    // row (derivative order j, parallel exponent i): the coefficient of the
    // i-th parallel monomial in the j-th transversal derivative at the line
    for (int j = 0; j <= jmax; ++j)
        for (int i = 0; i <= parallel; ++i) {
            std::vector<Rational> row(dim, Rational(0));
            for (int q = j; q <= transversal; ++q) {
                const Rational entry =
                    Rational(falling_factorial(q, j)) * rational_pow(line, q - j);
                row[horizontal ? i * (mp + 1) + q : q * (mp + 1) + i] = entry;
            }
            block.rows.push_back(std::move(row));
        }
    return block;
}

namespace {

ExactMatrix global_system(const SmoothnessDistribution& dist, int m, int mp) {
    const TMesh& mesh = dist.mesh();
    const int dim = box_dimension(m, mp);
    std::vector<ConstraintBlock> blocks;
    std::size_t total_rows = 0;
    for (int e = 0; e < mesh.edge_count(); ++e) {
        if (!mesh.edge_interior(e)) continue;
        blocks.push_back(edge_constraints(dist, e, m, mp));
        total_rows += blocks.back().rows.size();
    }
    ExactMatrix system(total_rows, static_cast<std::size_t>(mesh.face_count()) * dim);
    std::size_t r = 0;
    for (const ConstraintBlock& block : blocks)
        for (const auto& row : block.rows) {
            for (int k = 0; k < dim; ++k) {
                system.at(r, static_cast<std::size_t>(block.plus_face) * dim + k) = row[k];
                system.at(r, static_cast<std::size_t>(block.minus_face) * dim + k) = -row[k];
            }
            ++r;
        }
    return system;
}

} // namespace

long long spline_dimension_oracle(const SmoothnessDistribution& dist, int m, int mp) {
    if (box_dimension(m, mp) == 0) return 0;
    const ExactMatrix system = global_system(dist, m, mp);
    return static_cast<long long>(system.cols()) - static_cast<long long>(rank(system));
}

std::vector<PiecewisePolynomial> spline_basis_oracle(const SmoothnessDistribution& dist, int m,
                                                     int mp) {
    std::vector<PiecewisePolynomial> basis;
    const int dim = box_dimension(m, mp);
    if (dim == 0) return basis;
    const int faces = dist.mesh().face_count();
    for (const auto& vec : kernel_basis(global_system(dist, m, mp))) {
        PiecewisePolynomial f;
        f.m = m;
        f.mp = mp;
        f.face_coeffs.resize(faces);
        for (int face = 0; face < faces; ++face)
            f.face_coeffs[face].assign(vec.begin() + static_cast<std::ptrdiff_t>(face) * dim,
                                       vec.begin() + static_cast<std::ptrdiff_t>(face + 1) * dim);
        basis.push_back(std::move(f));
    }
    return basis;
}

bool verify_smoothness(const SmoothnessDistribution& dist, const PiecewisePolynomial& f) {
    const TMesh& mesh = dist.mesh();
    const int m = f.m, mp = f.mp;
    if (f.face_coeffs.size() != static_cast<std::size_t>(mesh.face_count()))
        throw MeshMismatch("polynomial has " + std::to_string(f.face_coeffs.size()) +
                           " face blocks, mesh has " + std::to_string(mesh.face_count()));
    for (const auto& coeffs : f.face_coeffs)
        if (coeffs.size() != static_cast<std::size_t>(box_dimension(m, mp)))
            throw MeshMismatch("face coefficient block does not match bi-degree (" +
                               std::to_string(m) + ", " + std::to_string(mp) + ")");
    if (box_dimension(m, mp) == 0) return true;

    for (int e = 0; e < mesh.edge_count(); ++e) {
        if (!mesh.edge_interior(e)) continue;
        const bool horizontal = mesh.edge(e).orientation == Orientation::horizontal;
        const int jmax = std::min(dist.order(e), horizontal ? mp : m);
        if (jmax < 0) continue;
        const auto [plus, minus] = oriented_faces(mesh, e);
        const Rational line = mesh.edge_line(e);
        const auto& a = mesh.vertex(mesh.edge(e).start);
        const auto& b = mesh.vertex(mesh.edge(e).end);
        const Rational lo = horizontal ? a.x : a.y;
        const Rational hi = horizontal ? b.x : b.y;

        for (int j = 0; j <= jmax; ++j)
            for (int step = 1; step <= 3; ++step) {
                const Rational along = lo + (hi - lo) * step / 4;
                const Rational s = horizontal ? along : line;
                const Rational t = horizontal ? line : along;
                // j-th transversal derivative of the difference at (s, t)
                Rational jump = 0;
                for (int i = 0; i <= m; ++i)
                    for (int q = 0; q <= mp; ++q) {
                        const int trans = horizontal ? q : i;
                        if (trans < j) continue;
                        const Rational monomial =
                            horizontal
                                ? rational_pow(s, i) * rational_pow(t, q - j)
                                : rational_pow(s, i - j) * rational_pow(t, q);
                        const Rational diff = f.face_coeffs.at(plus)[i * (mp + 1) + q] -
                                              f.face_coeffs.at(minus)[i * (mp + 1) + q];
                        jump += diff * Rational(falling_factorial(trans, j)) * monomial;
                    }
                if (jump != 0) return false;
            }
    }
    return true;
}

} // namespace tmspline
