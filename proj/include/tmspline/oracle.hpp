#ifndef TMSPLINE_ORACLE_HPP
#define TMSPLINE_ORACLE_HPP

#include <vector>

#include "tmspline/rational.hpp"
#include "tmspline/smoothness.hpp"

namespace tmspline {

// One polynomial per face, coefficients in the bi-degree (m, m') monomial
// basis s^i t^j with index i*(mp+1)+j.  Everything stays rational, so
// evaluation and derivative jumps are exact.
struct PiecewisePolynomial {
    int m = 0, mp = 0;
    std::vector<std::vector<Rational>> face_coeffs;
};

Rational evaluate_on_face(const PiecewisePolynomial& f, int face_id, const Rational& s,
                          const Rational& t);

// Linear conditions on the difference p - p' across one interior edge: the
// first min(order, transversal degree)+1 transversal derivatives of the
// difference vanish along the edge's line, expanded coefficientwise in the
// parallel variable.  `rows` apply with + to the face above (horizontal
// edges) or to the right (vertical edges) and with - to the other face.
struct ConstraintBlock {
    int edge_id = -1;
    int plus_face = -1;
    int minus_face = -1;
    std::vector<std::vector<Rational>> rows; // width (m+1)(mp+1), on the difference
};

// Throws BoundaryEdge unless the edge has two adjacent faces.  Order -1
// yields no rows; order >= the transversal degree forces p = p'.
ConstraintBlock edge_constraints(const SmoothnessDistribution& dist, int edge_id, int m, int mp);

// Ground truth by direct construction: dimension of the kernel of all edge
// constraints stacked over one coefficient vector per face.
long long spline_dimension_oracle(const SmoothnessDistribution& dist, int m, int mp);

// A kernel basis of the same system as piecewise polynomials; the list
// length equals spline_dimension_oracle.
std::vector<PiecewisePolynomial> spline_basis_oracle(const SmoothnessDistribution& dist, int m,
                                                     int mp);

// Exact smoke test: for every interior edge, the first min(order, degree)
// transversal derivative jumps of f vanish at three rational points inside
// the edge.  No tolerances; any nonzero jump returns false.
bool verify_smoothness(const SmoothnessDistribution& dist, const PiecewisePolynomial& f);

} // namespace tmspline

#endif
