#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace radiomesh {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable simple undirected graph on vertices [0, size()).
///
/// Adjacency lists are sorted and duplicate-free; self-loops are rejected at
/// construction. Safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list. Duplicate edges (in either orientation) are
    /// merged; self-loops and out-of-range endpoints throw InvalidParameter.
    Graph(std::size_t num_vertices, std::span<const Edge> edges);

    [[nodiscard]] std::size_t size() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t num_edges() const noexcept { return num_edges_; }

    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    [[nodiscard]] std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    [[nodiscard]] bool adjacent(VertexId u, VertexId v) const;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t num_edges_ = 0;
};

/// Path P_m: vertices 0..m-1, edges {i, i+1}.
[[nodiscard]] Graph build_path(std::size_t order);

/// Star K_{1,n}: vertex 0 is the center, 1..n are leaves.
[[nodiscard]] Graph build_star(std::size_t leaves);

/// Square mesh P(m,m) = P_m x P_m, vertex (r, c) has id r*m + c.
[[nodiscard]] Graph build_mesh(std::size_t order);

/// Binary Cartesian product. Tuple (a, b) maps to id a * |B| + b.
[[nodiscard]] Graph cartesian_product(const Graph& left, const Graph& right);

/// Left fold of the binary product over two or more factors.
[[nodiscard]] Graph cartesian_product(std::span<const Graph> factors);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop counts from `source`; unreachable vertices get kUnreachable.
[[nodiscard]] std::vector<int> bfs_distances(const Graph& g, VertexId source);

/// All-pairs hop counts. Rows are filled by independent BFS runs, so the
/// result does not depend on how many threads compute it.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph& g, unsigned threads = 1);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] int operator()(VertexId u, VertexId v) const { return dist_[u * size_ + v]; }
    [[nodiscard]] std::span<const int> row(VertexId u) const { return {dist_.data() + u * size_, size_}; }

    [[nodiscard]] bool connected() const noexcept { return connected_; }

    /// Largest finite entry. Throws DisconnectedGraph if any pair is unreachable.
    [[nodiscard]] int diameter() const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<int> dist_;
    bool connected_ = true;
};

/// BFS diameter. Throws DisconnectedGraph for disconnected input.
[[nodiscard]] int diameter(const Graph& g);

} // namespace radiomesh
