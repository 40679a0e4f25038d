#pragma once

#include "radiomesh/graph.hpp"
#include "radiomesh/product.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace radiomesh {

using Label = std::int64_t;

/// Total map vertex -> channel. Index i holds the label of vertex i.
struct Labeling {
    std::vector<Label> labels;

    [[nodiscard]] std::size_t size() const noexcept { return labels.size(); }
    [[nodiscard]] Label span() const;
    /// Shifted copy with minimum label 0.
    [[nodiscard]] Labeling normalized() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Required separations gap(u, v) = diam + 1 - d(u, v) on a vertex set.
///
/// Either a whole graph (diam taken from its distance matrix) or a subset of a
/// larger graph that keeps the host's distances and diameter. Local ids
/// 0..size()-1 map to host ids through members().
class RadioConstraints {
public:
    /// Whole graph. Throws DisconnectedGraph if `dm` is not connected.
    explicit RadioConstraints(const DistanceMatrix& dm);
    /// Subset of the host graph, with host distances and host diameter.
    RadioConstraints(const DistanceMatrix& dm, std::span<const VertexId> members);

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] int diam() const noexcept { return diam_; }
    [[nodiscard]] int distance(std::size_t u, std::size_t v) const { return dist_[u * size() + v]; }
    [[nodiscard]] int gap(std::size_t u, std::size_t v) const { return diam_ + 1 - distance(u, v); }
    [[nodiscard]] std::span<const VertexId> members() const noexcept { return members_; }

private:
    int diam_ = 0;
    std::vector<VertexId> members_;
    std::vector<int> dist_;
};

struct Violation {
    VertexId u;
    VertexId v;
    Label required;
    Label actual;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidityReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
};

/// Checks every pair against the radio condition. Throws ContractError when the
/// labeling does not cover exactly the constrained vertex set.
[[nodiscard]] ValidityReport validate(const RadioConstraints& rc, const Labeling& l);
[[nodiscard]] ValidityReport validate(const Graph& g, const DistanceMatrix& dm, const Labeling& l);

enum class PlanProvenance { PaperEven, PaperOdd, SearchNode, External };

struct OrderingPlan {
    std::vector<VertexId> sequence;
    PlanProvenance provenance = PlanProvenance::External;

    [[nodiscard]] bool is_permutation_of(std::size_t n) const;
};

/// Labels vertices in plan order, each with the smallest value that satisfies
/// the radio condition against every earlier vertex. Always valid.
[[nodiscard]] Labeling greedy_assign(const RadioConstraints& rc, const OrderingPlan& plan);
[[nodiscard]] Labeling greedy_assign(const Graph& g, const DistanceMatrix& dm, const OrderingPlan& plan);

/// Labels each vertex only against its predecessor in the plan:
/// f(u_i) = f(u_{i-1}) + diam + 1 - d(u_{i-1}, u_i). May be invalid.
[[nodiscard]] Labeling consecutive_only_assign(const RadioConstraints& rc, const OrderingPlan& plan);
[[nodiscard]] Labeling consecutive_only_assign(const Graph& g, const DistanceMatrix& dm, const OrderingPlan& plan);

/// Best of several greedy "cheapest next vertex" orderings. Upper bound on rn.
[[nodiscard]] Labeling heuristic_labeling(const RadioConstraints& rc, std::size_t max_starts = 32);

enum class RnStatus { Exact, UpperBoundOnly, TimedOut };

[[nodiscard]] std::string_view to_string(RnStatus status);

struct RnResult {
    Label value = 0;
    RnStatus status = RnStatus::Exact;
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0;
};

struct SearchBudget {
    std::chrono::milliseconds time{60'000};
    std::uint64_t max_nodes = 0; ///< 0 = unlimited
};

/// Radio number by branch and bound over vertex orderings.
///
/// Children are tried in increasing local id; the witness is the first
/// optimal ordering reached in that order. Supports up to 64 vertices.
[[nodiscard]] RnResult exact_rn(const RadioConstraints& rc, SearchBudget budget = {});
[[nodiscard]] RnResult exact_rn(const Graph& g, const DistanceMatrix& dm, SearchBudget budget = {});

inline constexpr std::size_t kOracleMaxVertices = 9;

/// Radio number by enumerating every ordering. Refuses more than 9 vertices.
[[nodiscard]] RnResult permutation_oracle(const RadioConstraints& rc);
[[nodiscard]] RnResult permutation_oracle(const Graph& g, const DistanceMatrix& dm);

/// Copy pair visited as one zigzag block; t-indices.
struct CopyPair {
    int first;
    int second;
    friend bool operator==(const CopyPair&, const CopyPair&) = default;
};

/// Block structure of the constructive orderings, in t-indices.
struct OrderingLayout {
    std::vector<CopyPair> pairs;           ///< even m: G'(j); odd m: G''(x)
    std::vector<CopyPair> last_row_pairs;  ///< odd m only
    std::optional<std::array<int, 3>> distinguished; ///< odd m: t(1+m(m-1)), t((m+1)/2+m(m-1)), t(m+m(m-1))
};

[[nodiscard]] OrderingLayout ordering_layout(const ProductParams& params);

/// Visit order for even m. Throws ParityError for odd m.
[[nodiscard]] OrderingPlan paper_ordering_even(const ProductParams& params, CellIndexing indexing);
/// Visit order for odd m. Throws ParityError for even m.
[[nodiscard]] OrderingPlan paper_ordering_odd(const ProductParams& params, CellIndexing indexing);

/// Zigzag through one copy pair: A(1), B(1), then star positions 2..n+1
/// alternating A on even / B on odd, then the complementary positions.
/// Ids are in the product graph's flat numbering.
[[nodiscard]] std::vector<VertexId> zigzag(const ProductParams& params, CellIndexing indexing, CopyPair pair);

/// The three path-class walks over the distinguished last-row copies (odd m).
/// Positions beyond n+1 are dropped.
struct PathClassWalks {
    std::vector<std::vector<VertexId>> first;  ///< P'_1 (two walks)
    std::vector<VertexId> second;              ///< P'_2
    std::vector<std::vector<VertexId>> third;  ///< P'_3, one walk per leaf position >= 4
};

[[nodiscard]] PathClassWalks path_class_walks(const ProductParams& params, CellIndexing indexing);

struct PaperConstruction {
    OrderingPlan plan;
    Labeling greedy;
    Labeling consecutive;
    bool consecutive_valid = false;
};

/// Parity-appropriate ordering, labeled both greedily and consecutive-only.
[[nodiscard]] PaperConstruction construct_paper_labeling(const ProductParams& params, CellIndexing indexing);
[[nodiscard]] PaperConstruction construct_paper_labeling(const ProductGraph& pg, const DistanceMatrix& dm);

} // namespace radiomesh
