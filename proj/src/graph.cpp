#include "radiomesh/graph.hpp"

#include "radiomesh/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <thread>

namespace radiomesh {

Graph::Graph(std::size_t num_vertices, std::span<const Edge> edges) : adjacency_(num_vertices) {
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices) {
            throw InvalidParameter("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") out of range for " + std::to_string(num_vertices) + " vertices");
        }
        if (u == v) {
            throw InvalidParameter("self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        num_edges_ += nbrs.size();
    }
    num_edges_ /= 2;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (VertexId u = 0; u < size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (adjacency_.empty()) return true;
    auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

Graph build_path(std::size_t order) {
    if (order == 0) throw InvalidParameter("path order must be at least 1");
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
    return Graph(order, edges);
}

Graph build_star(std::size_t leaves) {
    if (leaves == 0) throw InvalidParameter("star leaf count must be at least 1");
    std::vector<Edge> edges;
    for (VertexId leaf = 1; leaf <= leaves; ++leaf) edges.emplace_back(0, leaf);
    return Graph(leaves + 1, edges);
}

Graph build_mesh(std::size_t order) {
    auto path = build_path(order);
    return cartesian_product(path, path);
}

Graph cartesian_product(const Graph& left, const Graph& right) {
    if (left.size() == 0 || right.size() == 0) {
        throw InvalidParameter("cartesian product factor has no vertices");
    }
    const auto width = static_cast<VertexId>(right.size());
    std::vector<Edge> edges;
    edges.reserve(left.num_edges() * right.size() + right.num_edges() * left.size());
    for (VertexId a = 0; a < left.size(); ++a) {
        for (VertexId b = 0; b < right.size(); ++b) {
            const VertexId id = a * width + b;
            // Same left coordinate, adjacent right coordinates.
            for (VertexId nb : right.neighbors(b)) {
                if (b < nb) edges.emplace_back(id, a * width + nb);
            }
            // Same right coordinate, adjacent left coordinates.
            for (VertexId na : left.neighbors(a)) {
                if (a < na) edges.emplace_back(id, na * width + b);
            }
        }
    }
    return Graph(left.size() * right.size(), edges);
}

Graph cartesian_product(std::span<const Graph> factors) {
    if (factors.size() < 2) throw InvalidParameter("cartesian product needs at least two factors");
    Graph acc = cartesian_product(factors[0], factors[1]);
    for (std::size_t i = 2; i < factors.size(); ++i) acc = cartesian_product(acc, factors[i]);
    return acc;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    if (source >= g.size()) {
        throw InvalidParameter("BFS source " + std::to_string(source) + " out of range for " +
                               std::to_string(g.size()) + " vertices");
    }
    std::vector<int> dist(g.size(), kUnreachable);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g, unsigned threads)
    : size_(g.size()), dist_(g.size() * g.size(), kUnreachable) {
    auto fill_rows = [&](std::size_t begin, std::size_t step) {
        for (std::size_t u = begin; u < size_; u += step) {
            auto d = bfs_distances(g, static_cast<VertexId>(u));
            std::copy(d.begin(), d.end(), dist_.begin() + static_cast<std::ptrdiff_t>(u * size_));
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || size_ < 64) {
        fill_rows(0, 1);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) workers.emplace_back(fill_rows, t, threads);
    }
    connected_ = std::none_of(dist_.begin(), dist_.end(), [](int x) { return x == kUnreachable; });
}

int DistanceMatrix::diameter() const {
    if (!connected_) throw DisconnectedGraph("graph is disconnected; diameter is undefined");
    return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

int diameter(const Graph& g) {
    int best = 0;
    for (VertexId u = 0; u < g.size(); ++u) {
        for (int d : bfs_distances(g, u)) {
            if (d == kUnreachable) throw DisconnectedGraph("graph is disconnected; diameter is undefined");
            best = std::max(best, d);
        }
    }
    return best;
}

} // namespace radiomesh
