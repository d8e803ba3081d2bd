#include "tmspline/dimension.hpp"

#include <algorithm>
#include <tuple>

#include "tmspline/homology.hpp"

namespace tmspline {

ChiBreakdown euler_characteristic(const SmoothnessDistribution& dist, int m, int mp) {
    ChiBreakdown result;
    if (m < 0 || mp < 0) return result; // zero polynomial box
    const TMesh& mesh = dist.mesh();

    result.face_term = static_cast<long long>(mesh.face_count()) * (m + 1) * (mp + 1);
    for (int e = 0; e < mesh.edge_count(); ++e) {
        const int r = dist.order(e);
        if (mesh.edge(e).orientation == Orientation::horizontal)
            result.horizontal_edge_term += static_cast<long long>(m + 1) * (std::min(r, mp) + 1);
        else
            result.vertical_edge_term += static_cast<long long>(mp + 1) * (std::min(r, m) + 1);
    }
    for (int v = 0; v < mesh.vertex_count(); ++v) {
        const VertexSmoothness vs = vertex_smoothness(dist, v);
        result.vertex_term += static_cast<long long>(std::min(vs.horizontal, m) + 1) *
                              (std::min(vs.vertical, mp) + 1);
    }
    result.chi = result.face_term - result.horizontal_edge_term - result.vertical_edge_term +
                 result.vertex_term;
    return result;
}

long long segment_weight(const SmoothnessDistribution& dist, const Segment& segment, int m,
                         int mp) {
    // re-validate so stale or foreign edge ids fail loudly
    const Segment checked = make_segment(dist.mesh(), segment.edge_ids);
    long long weight = 0;
    for (int v : checked.vertex_ids) {
        const VertexSmoothness vs = vertex_smoothness(dist, v);
        const int defect = checked.orientation == Orientation::horizontal ? m - vs.horizontal
                                                                          : mp - vs.vertical;
        weight += std::max(defect, 0);
    }
    return weight;
}

ConditionResult check_reduction(const SmoothnessDistribution& dist, const Segment& segment, int r,
                                int m, int mp) {
    const TMesh& mesh = dist.mesh();
    const Segment checked = make_segment(mesh, segment.edge_ids);
    const SmoothnessDistribution reduced = reduce_on_segment(dist, checked, r);

    ConditionResult result;
    result.threshold = checked.orientation == Orientation::horizontal ? m + 1 : mp + 1;
    result.weight = segment_weight(reduced, checked, m, mp);
    result.b_holds = result.weight >= result.threshold;

    // (a): extend within the containing maximal segment while the reduced
    // orders stay <= r; a strictly larger extension is the witness
    for (const Segment& maximal : maximal_segments(mesh)) {
        if (maximal.orientation != checked.orientation) continue;
        auto first = std::find(maximal.edge_ids.begin(), maximal.edge_ids.end(),
                               checked.edge_ids.front());
        if (first == maximal.edge_ids.end()) continue;
        auto last = std::find(maximal.edge_ids.begin(), maximal.edge_ids.end(),
                              checked.edge_ids.back());
        if (last == maximal.edge_ids.end()) continue;
        auto lo = first;
        while (lo != maximal.edge_ids.begin() && reduced.order(*std::prev(lo)) <= r) --lo;
        auto hi = last;
        while (std::next(hi) != maximal.edge_ids.end() && reduced.order(*std::next(hi)) <= r) ++hi;
        if (std::distance(lo, hi) > std::distance(first, last)) {
            result.a_holds = true;
            result.container = make_segment(mesh, std::vector<int>(lo, std::next(hi)));
        }
        break;
    }
    return result;
}

namespace {

bool provenance_established(const SmoothnessDistribution& base, int m, int mp,
                            BaseProvenance provenance) {
    switch (provenance) {
    case BaseProvenance::box_rule:
        return is_hierarchical(base.mesh()) && is_box_distribution(base, m, mp) &&
               is_constant_on_maximal_segments(base);
    case BaseProvenance::homology_verified:
        return h0_dimension(base, m, mp) == 0;
    case BaseProvenance::user_asserted:
        return true;
    }
    return false;
}

struct Candidate {
    std::vector<int> edges;
    int target = -1;
};

// Target-constant runs (with at least one strictly lowered edge) inside each
// maximal segment, plus the individual strictly lowered edges.
std::vector<Candidate> collect_candidates(const SmoothnessDistribution& current,
                                          const SmoothnessDistribution& target) {
    std::vector<Candidate> candidates;
    for (const Segment& maximal : maximal_segments(current.mesh())) {
        const auto& ids = maximal.edge_ids;
        std::size_t k = 0;
        while (k < ids.size()) {
            const int t = target.order(ids[k]);
            std::size_t end = k;
            bool strict = false;
            while (end < ids.size() && target.order(ids[end]) == t) {
                if (current.order(ids[end]) > t) strict = true;
                ++end;
            }
            if (strict && end - k > 1)
                candidates.push_back(Candidate{std::vector<int>(ids.begin() + k, ids.begin() + end), t});
            k = end;
        }
        for (int e : ids)
            if (current.order(e) > target.order(e))
                candidates.push_back(Candidate{{e}, target.order(e)});
    }
    return candidates;
}

} // namespace

std::variant<Certificate, FailureReport> certify_stability(const SmoothnessDistribution& base,
                                                           const SmoothnessDistribution& target,
                                                           int m, int mp,
                                                           BaseProvenance provenance) {
    if (compare(target, base) != OrderCompare::pointwise_leq)
        throw NotBelowBase("target distribution exceeds the base somewhere");
    if (!provenance_established(base, m, mp, provenance))
        throw BaseNotCertified("base distribution fails its provenance check");

    Certificate certificate;
    certificate.m = m;
    certificate.mp = mp;
    certificate.provenance = provenance;
    certificate.base_orders = base.orders();
    certificate.final_orders = target.orders();

    SmoothnessDistribution current = base;
    while (current.orders() != target.orders()) {
        struct Scored {
            Candidate candidate;
            ConditionResult result;
            long long margin;
        };
        std::vector<Scored> scored;
        for (Candidate& candidate : collect_candidates(current, target)) {
            Segment segment = make_segment(current.mesh(), candidate.edges);
            ConditionResult result = check_reduction(current, segment, candidate.target, m, mp);
            scored.push_back(Scored{std::move(candidate), std::move(result),
                                    0});
            scored.back().margin = scored.back().result.weight - scored.back().result.threshold;
        }
        std::stable_sort(scored.begin(), scored.end(), [&](const Scored& a, const Scored& b) {
            const auto key = [&](const Scored& s) {
                const auto& edge = current.mesh().edge(s.candidate.edges.front());
                return std::make_tuple(-s.margin, edge.orientation, s.candidate.edges.front(),
                                       s.candidate.target);
            };
            return key(a) < key(b);
        });

        const Scored* applied = nullptr;
        for (const Scored& s : scored)
            if (s.result.holds()) {
                applied = &s;
                break;
            }
        if (!applied) {
            FailureReport failure;
            failure.reached_orders = current.orders();
            for (int e = 0; e < current.mesh().edge_count(); ++e)
                if (current.order(e) != target.order(e)) failure.residual_edges.push_back(e);
            failure.detail = "no candidate reduction satisfies either condition for the remaining " +
                             std::to_string(failure.residual_edges.size()) + " edge(s)";
            return failure;
        }

        Segment segment = make_segment(current.mesh(), applied->candidate.edges);
        ReductionStep step;
        step.segment_edges = segment.edge_ids;
        step.target_order = applied->candidate.target;
        if (applied->result.b_holds) {
            step.kind = ReductionStep::Kind::weight;
            step.weight = applied->result.weight;
            step.threshold = applied->result.threshold;
        } else {
            step.kind = ReductionStep::Kind::container;
            step.container_edges = applied->result.container->edge_ids;
        }
        certificate.steps.push_back(std::move(step));
        current = reduce_on_segment(current, segment, applied->candidate.target);
    }
    return certificate;
}

long long dimension_by_certificate(const TMesh& mesh, const Certificate& certificate) {
    const auto fail = [](const std::string& why) -> InvalidCertificate {
        return InvalidCertificate("certificate replay failed: " + why);
    };

    SmoothnessDistribution current = [&] {
        try {
            return SmoothnessDistribution(mesh, certificate.base_orders);
        } catch (const Error& err) {
            throw fail(std::string("bad base distribution: ") + err.what());
        }
    }();
    if (certificate.provenance == BaseProvenance::box_rule &&
        !provenance_established(current, certificate.m, certificate.mp, BaseProvenance::box_rule))
        throw fail("base does not satisfy the structural rule it claims");

    for (std::size_t i = 0; i < certificate.steps.size(); ++i) {
        const ReductionStep& step = certificate.steps[i];
        const std::string where = "step " + std::to_string(i);
        Segment segment;
        try {
            segment = make_segment(mesh, step.segment_edges);
        } catch (const Error& err) {
            throw fail(where + ": " + err.what());
        }
        for (int e : segment.edge_ids)
            if (current.order(e) < step.target_order) throw fail(where + ": not a reduction");

        const ConditionResult result =
            check_reduction(current, segment, step.target_order, certificate.m, certificate.mp);
        if (step.kind == ReductionStep::Kind::weight) {
            if (!result.b_holds || result.weight != step.weight ||
                result.threshold != step.threshold)
                throw fail(where + ": recorded weight justification does not re-verify");
        } else {
            // re-verify the recorded witness itself: a strictly larger
            // collinear run whose reduced orders all fit under the target
            Segment container;
            try {
                container = make_segment(mesh, step.container_edges);
            } catch (const Error& err) {
                throw fail(where + ": bad container witness: " + err.what());
            }
            const SmoothnessDistribution reduced =
                reduce_on_segment(current, segment, step.target_order);
            if (container.edge_ids.size() <= segment.edge_ids.size())
                throw fail(where + ": container does not strictly contain the segment");
            for (int e : segment.edge_ids)
                if (std::find(container.edge_ids.begin(), container.edge_ids.end(), e) ==
                    container.edge_ids.end())
                    throw fail(where + ": container does not contain the segment");
            for (int e : container.edge_ids)
                if (reduced.order(e) > step.target_order)
                    throw fail(where + ": container carries an order above the target");
        }
        current = reduce_on_segment(current, segment, step.target_order);
    }
    if (current.orders() != certificate.final_orders)
        throw fail("replayed chain does not end at the recorded final distribution");
    return euler_characteristic(current, certificate.m, certificate.mp).chi;
}

} // namespace tmspline
