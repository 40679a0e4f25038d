#include "radiomesh/labeling.hpp"

#include "radiomesh/errors.hpp"

#include <algorithm>
#include <string>

namespace radiomesh {

Label Labeling::span() const {
    if (labels.empty()) return 0;
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    return *hi - *lo;
}

Labeling Labeling::normalized() const {
    Labeling out = *this;
    if (out.labels.empty()) return out;
    const Label lo = *std::min_element(out.labels.begin(), out.labels.end());
    for (auto& x : out.labels) x -= lo;
    return out;
}

RadioConstraints::RadioConstraints(const DistanceMatrix& dm) : diam_(dm.diameter()) {
    members_.resize(dm.size());
    for (std::size_t i = 0; i < dm.size(); ++i) members_[i] = static_cast<VertexId>(i);
    dist_.resize(dm.size() * dm.size());
    for (std::size_t u = 0; u < dm.size(); ++u) {
        auto row = dm.row(static_cast<VertexId>(u));
        std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(u * dm.size()));
    }
}

RadioConstraints::RadioConstraints(const DistanceMatrix& dm, std::span<const VertexId> members)
    : diam_(dm.diameter()), members_(members.begin(), members.end()) {
    const std::size_t k = members_.size();
    for (VertexId v : members_) {
        if (v >= dm.size()) throw InvalidParameter("subset vertex " + std::to_string(v) + " out of range");
    }
    auto sorted = members_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidParameter("subset lists a vertex twice");
    }
    dist_.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) dist_[i * k + j] = dm(members_[i], members_[j]);
    }
}

ValidityReport validate(const RadioConstraints& rc, const Labeling& l) {
    if (l.size() != rc.size()) {
        throw ContractError("labeling has " + std::to_string(l.size()) + " entries but the graph has " +
                            std::to_string(rc.size()) + " vertices");
    }
    ValidityReport report;
    for (std::size_t u = 0; u < rc.size(); ++u) {
        for (std::size_t v = u + 1; v < rc.size(); ++v) {
            const Label required = rc.gap(u, v);
            const Label actual = l.labels[u] > l.labels[v] ? l.labels[u] - l.labels[v] : l.labels[v] - l.labels[u];
            if (actual < required) {
                report.violations.push_back(
                    {static_cast<VertexId>(u), static_cast<VertexId>(v), required, actual});
            }
        }
    }
    return report;
}

ValidityReport validate(const Graph& g, const DistanceMatrix& dm, const Labeling& l) {
    if (dm.size() != g.size()) throw ContractError("distance matrix does not belong to this graph");
    return validate(RadioConstraints(dm), l);
}

bool OrderingPlan::is_permutation_of(std::size_t n) const {
    if (sequence.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (VertexId v : sequence) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

namespace {

void require_permutation(const RadioConstraints& rc, const OrderingPlan& plan) {
    if (!plan.is_permutation_of(rc.size())) {
        throw ContractError("ordering is not a permutation of the " + std::to_string(rc.size()) + " vertices");
    }
}

} // namespace

Labeling greedy_assign(const RadioConstraints& rc, const OrderingPlan& plan) {
    require_permutation(rc, plan);
    Labeling out{std::vector<Label>(rc.size(), 0)};
    // Labels increase along the plan, so the smallest feasible value for u_i is
    // the largest f(w) + gap(w, u_i) over earlier w.
    for (std::size_t i = 1; i < plan.sequence.size(); ++i) {
        const VertexId u = plan.sequence[i];
        Label best = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const VertexId w = plan.sequence[j];
            best = std::max(best, out.labels[w] + rc.gap(w, u));
        }
        out.labels[u] = best;
    }
    return out;
}

Labeling greedy_assign(const Graph& g, const DistanceMatrix& dm, const OrderingPlan& plan) {
    if (dm.size() != g.size()) throw ContractError("distance matrix does not belong to this graph");
    return greedy_assign(RadioConstraints(dm), plan);
}

Labeling consecutive_only_assign(const RadioConstraints& rc, const OrderingPlan& plan) {
    require_permutation(rc, plan);
    Labeling out{std::vector<Label>(rc.size(), 0)};
    for (std::size_t i = 1; i < plan.sequence.size(); ++i) {
        const VertexId prev = plan.sequence[i - 1];
        const VertexId u = plan.sequence[i];
        out.labels[u] = out.labels[prev] + rc.gap(prev, u);
    }
    return out;
}

Labeling consecutive_only_assign(const Graph& g, const DistanceMatrix& dm, const OrderingPlan& plan) {
    if (dm.size() != g.size()) throw ContractError("distance matrix does not belong to this graph");
    return consecutive_only_assign(RadioConstraints(dm), plan);
}

std::string_view to_string(RnStatus status) {
    switch (status) {
    case RnStatus::Exact:
        return "exact";
    case RnStatus::UpperBoundOnly:
        return "upper-bound";
    case RnStatus::TimedOut:
        return "timed-out";
    }
    return "?";
}

} // namespace radiomesh
