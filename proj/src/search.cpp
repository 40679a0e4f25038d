#include "radiomesh/errors.hpp"
#include "radiomesh/labeling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

namespace radiomesh {

namespace {

using Clock = std::chrono::steady_clock;

OrderingPlan to_plan(std::vector<VertexId> sequence) {
    return {std::move(sequence), PlanProvenance::SearchNode};
}

// Depth-first search over orderings. A partial ordering is summarised by the
// set of placed vertices and, for every unplaced u, how far above the last
// label u's earliest feasible value sits. Two partial orderings with equal
// summaries have identical futures, so the one with the higher last label is
// dominated and cut.
class BranchAndBound {
public:
    BranchAndBound(const RadioConstraints& rc, SearchBudget budget, Label incumbent)
        : rc_(rc), k_(rc.size()), budget_(budget), deadline_(Clock::now() + budget.time),
          need_((k_ + 1) * k_, 0), order_(k_), incumbent_(incumbent) {
    }

    void run() { expand(0, 0); }

    [[nodiscard]] bool aborted() const noexcept { return status_ != RnStatus::Exact; }
    [[nodiscard]] RnStatus status() const noexcept { return status_; }
    [[nodiscard]] Label incumbent() const noexcept { return incumbent_; }
    [[nodiscard]] const std::vector<VertexId>& best_order() const noexcept { return best_order_; }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

private:
    static constexpr std::size_t kMemoCap = 2'000'000;

    bool out_of_budget() {
        if (budget_.max_nodes != 0 && nodes_ >= budget_.max_nodes) {
            status_ = RnStatus::UpperBoundOnly;
            return true;
        }
        if ((nodes_ & 0xFF) == 0 && Clock::now() >= deadline_) {
            status_ = RnStatus::TimedOut;
            return true;
        }
        return false;
    }

    // Lower bound on the span of any completion after placing `v` at label `x`.
    Label completion_bound(std::uint64_t placed_after, const Label* next_need, VertexId v, Label x) {
        Label tightest = x;
        Label chain = x;
        for (VertexId u = 0; u < k_; ++u) {
            if (placed_after >> u & 1U) continue;
            tightest = std::max(tightest, next_need[u]);
            // Some vertex of {v} or the other unplaced ones precedes u directly.
            int cheapest = rc_.gap(v, u);
            for (VertexId p = 0; p < k_; ++p) {
                if (p == u || (placed_after >> p & 1U)) continue;
                cheapest = std::min(cheapest, rc_.gap(p, u));
            }
            chain += cheapest;
        }
        return std::max(tightest, chain);
    }

    void expand(std::size_t depth, std::uint64_t placed) {
        const Label* need = need_.data() + depth * k_;
        for (VertexId v = 0; v < k_; ++v) {
            if (placed >> v & 1U) continue;
            ++nodes_;
            if (out_of_budget()) return;

            const Label x = depth == 0 ? 0 : need[v];
            if (x >= incumbent_) continue;
            order_[depth] = v;
            const std::uint64_t placed_after = placed | (std::uint64_t{1} << v);

            if (depth + 1 == k_) {
                incumbent_ = x;
                best_order_.assign(order_.begin(), order_.end());
                continue;
            }

            Label* next = need_.data() + (depth + 1) * k_;
            for (VertexId u = 0; u < k_; ++u) {
                next[u] = (placed_after >> u & 1U) ? 0 : std::max(depth == 0 ? Label{0} : need[u], x + rc_.gap(v, u));
            }
            if (completion_bound(placed_after, next, v, x) >= incumbent_) continue;
            if (dominated(placed_after, next, x)) continue;

            expand(depth + 1, placed_after);
            if (aborted()) return;
        }
    }

    bool dominated(std::uint64_t placed_after, const Label* next, Label x) {
        key_.assign(reinterpret_cast<const char*>(&placed_after), sizeof placed_after);
        for (VertexId u = 0; u < k_; ++u) {
            if (placed_after >> u & 1U) continue;
            const Label rel = next[u] - x;
            key_.append(reinterpret_cast<const char*>(&rel), sizeof rel);
        }
        auto it = memo_.find(key_);
        if (it != memo_.end()) {
            if (it->second <= x) return true;
            it->second = x;
            return false;
        }
        if (memo_.size() < kMemoCap) memo_.emplace(key_, x);
        return false;
    }

    const RadioConstraints& rc_;
    const std::size_t k_;
    SearchBudget budget_;
    Clock::time_point deadline_;
    std::vector<Label> need_;
    std::vector<VertexId> order_;
    Label incumbent_;
    std::vector<VertexId> best_order_;
    std::uint64_t nodes_ = 0;
    RnStatus status_ = RnStatus::Exact;
    std::string key_;
    std::unordered_map<std::string, Label> memo_;
};

} // namespace

Labeling heuristic_labeling(const RadioConstraints& rc, std::size_t max_starts) {
    const std::size_t k = rc.size();
    if (k == 0) return {};
    max_starts = std::max<std::size_t>(1, max_starts);
    const std::size_t starts = std::min(k, max_starts);

    Labeling best;
    Label best_span = std::numeric_limits<Label>::max();
    std::vector<Label> need(k);
    std::vector<bool> placed(k);
    for (std::size_t s = 0; s < starts; ++s) {
        const auto start = static_cast<VertexId>(s * k / starts);
        std::fill(placed.begin(), placed.end(), false);
        Labeling cur{std::vector<Label>(k, 0)};
        placed[start] = true;
        for (VertexId u = 0; u < k; ++u) need[u] = rc.gap(start, u);
        for (std::size_t step = 1; step < k; ++step) {
            VertexId pick = 0;
            Label pick_need = std::numeric_limits<Label>::max();
            for (VertexId u = 0; u < k; ++u) {
                if (!placed[u] && need[u] < pick_need) {
                    pick = u;
                    pick_need = need[u];
                }
            }
            placed[pick] = true;
            cur.labels[pick] = pick_need;
            for (VertexId u = 0; u < k; ++u) {
                if (!placed[u]) need[u] = std::max(need[u], pick_need + rc.gap(pick, u));
            }
        }
        const Label span = cur.span();
        if (span < best_span) {
            best_span = span;
            best = std::move(cur);
        }
    }
    return best;
}

RnResult exact_rn(const RadioConstraints& rc, SearchBudget budget) {
    const std::size_t k = rc.size();
    if (k > 64) throw SizeError("exact search supports at most 64 vertices, got " + std::to_string(k));
    if (k <= 1) return {0, RnStatus::Exact, Labeling{std::vector<Label>(k, 0)}, 0};

    Labeling upper = heuristic_labeling(rc);
    // Start one above the heuristic so the search produces its own witness.
    BranchAndBound search(rc, budget, upper.span() + 1);
    search.run();

    RnResult result;
    result.nodes = search.nodes();
    result.status = search.status();
    if (!search.best_order().empty()) {
        result.witness = greedy_assign(rc, to_plan(search.best_order()));
        result.value = result.witness->span();
    } else {
        result.witness = std::move(upper);
        result.value = result.witness->span();
    }
    return result;
}

RnResult exact_rn(const Graph& g, const DistanceMatrix& dm, SearchBudget budget) {
    if (dm.size() != g.size()) throw ContractError("distance matrix does not belong to this graph");
    if (!dm.connected()) throw DisconnectedGraph("radio number is undefined on a disconnected graph");
    return exact_rn(RadioConstraints(dm), budget);
}

RnResult permutation_oracle(const RadioConstraints& rc) {
    const std::size_t k = rc.size();
    if (k > kOracleMaxVertices) {
        throw SizeError("permutation oracle is limited to " + std::to_string(kOracleMaxVertices) +
                        " vertices, got " + std::to_string(k));
    }
    OrderingPlan plan{std::vector<VertexId>(k), PlanProvenance::SearchNode};
    std::iota(plan.sequence.begin(), plan.sequence.end(), VertexId{0});

    RnResult result;
    result.value = std::numeric_limits<Label>::max();
    do {
        ++result.nodes;
        Labeling l = greedy_assign(rc, plan);
        if (l.span() < result.value) {
            result.value = l.span();
            result.witness = std::move(l);
        }
    } while (std::next_permutation(plan.sequence.begin(), plan.sequence.end()));
    if (k == 0) result.value = 0;
    return result;
}

RnResult permutation_oracle(const Graph& g, const DistanceMatrix& dm) {
    if (dm.size() != g.size()) throw ContractError("distance matrix does not belong to this graph");
    if (!dm.connected()) throw DisconnectedGraph("radio number is undefined on a disconnected graph");
    return permutation_oracle(RadioConstraints(dm));
}

} // namespace radiomesh
