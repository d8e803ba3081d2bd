#ifndef TMSPLINE_DIMENSION_HPP
#define TMSPLINE_DIMENSION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tmspline/mesh.hpp"
#include "tmspline/smoothness.hpp"

namespace tmspline {

// Euler characteristic of the constraint complex for bi-degree (m, m') over
// a smoothness distribution, split into its four sums.  When the complex has
// no zeroth homology this number is the spline space dimension.
struct ChiBreakdown {
    long long face_term = 0;
    long long horizontal_edge_term = 0;
    long long vertical_edge_term = 0;
    long long vertex_term = 0;
    long long chi = 0; // face - horizontal_edge - vertical_edge + vertex
};

ChiBreakdown euler_characteristic(const SmoothnessDistribution& dist, int m, int mp);

// Weight of a segment: horizontal segments sum max(m - horizontal order, 0)
// over every vertex they carry (boundary endpoints included), vertical ones
// sum max(m' - vertical order, 0).
long long segment_weight(const SmoothnessDistribution& dist, const Segment& segment, int m, int mp);

// Outcome of testing a single segment reduction against the two sufficient
// conditions for the reduced space to keep a stable dimension:
//  (a) the segment extends to a strictly larger one whose orders, after the
//      reduction, are all <= the target order (witness: `container`), or
//  (b) the reduced segment's weight reaches degree + 1 in the crossing
//      direction (witness: `weight` vs `threshold`).
struct ConditionResult {
    bool a_holds = false;
    std::optional<Segment> container;
    bool b_holds = false;
    long long weight = 0;
    long long threshold = 0;
    bool holds() const { return a_holds || b_holds; }
};

// Evaluates both conditions for reducing `segment` to order r, with the
// weight taken after the reduction.  Throws NotAReduction when some edge of
// the segment carries an order below r.
ConditionResult check_reduction(const SmoothnessDistribution& dist, const Segment& segment, int r,
                                int m, int mp);

// How the base distribution of a certificate is known to have vanishing
// zeroth homology: by the structural rule (hierarchical mesh, orders within
// the box bounds and constant on maximal segments), by a direct homology
// computation, or on the caller's say-so.
enum class BaseProvenance { box_rule, homology_verified, user_asserted };

struct ReductionStep {
    enum class Kind { container, weight };
    std::vector<int> segment_edges;
    int target_order = -1;
    Kind kind = Kind::weight;
    std::vector<int> container_edges; // witness when kind == container
    long long weight = 0;             // witnesses when kind == weight
    long long threshold = 0;
};

// Replayable proof that the final distribution's spline dimension equals its
// Euler characteristic: a certified base plus reduction steps, each of which
// passes check_reduction at its position in the chain.
struct Certificate {
    int m = 0, mp = 0;
    BaseProvenance provenance = BaseProvenance::user_asserted;
    std::vector<int> base_orders;
    std::vector<int> final_orders;
    std::vector<ReductionStep> steps;
};

struct FailureReport {
    std::vector<int> residual_edges; // edges still above target when the search stalled
    std::vector<int> reached_orders; // how far the chain got
    std::string detail;
};

// Greedy search for a reduction chain from base to target.  Candidates are
// target-constant runs inside maximal segments plus single edges, tried in
// order of decreasing weight margin; the loop re-runs until the target is
// reached or no candidate passes.  Throws NotBelowBase when target exceeds
// base somewhere and BaseNotCertified when the provenance check fails.
std::variant<Certificate, FailureReport> certify_stability(const SmoothnessDistribution& base,
                                                           const SmoothnessDistribution& target,
                                                           int m, int mp,
                                                           BaseProvenance provenance);

// Re-verifies every step of the certificate on the given mesh and returns
// the Euler characteristic of the final distribution (the certified spline
// dimension).  Throws InvalidCertificate when replay fails.
long long dimension_by_certificate(const TMesh& mesh, const Certificate& certificate);

} // namespace tmspline

#endif
