#pragma once

#include "radiomesh/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace radiomesh {

/// Parameters of G = P(m,m) x K_{1,n}: mesh order m >= 2, star leaf count n >= 1.
class ProductParams {
public:
    /// Throws InvalidParameter when m < 2 or n < 1.
    ProductParams(int m, int n);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] int cells() const noexcept { return m_ * m_; }
    [[nodiscard]] int star_size() const noexcept { return n_ + 1; }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
        return static_cast<std::size_t>(cells()) * static_cast<std::size_t>(star_size());
    }
    [[nodiscard]] bool even() const noexcept { return m_ % 2 == 0; }

    friend bool operator==(const ProductParams&, const ProductParams&) = default;

private:
    int m_;
    int n_;
};

/// How the copy index t(i), i in [1, m^2], is laid out over mesh cells.
enum class CellIndexing { RowMajor, ColumnMajor, Serpentine };

inline constexpr CellIndexing kAllIndexings[] = {CellIndexing::RowMajor, CellIndexing::ColumnMajor,
                                                  CellIndexing::Serpentine};

[[nodiscard]] std::string_view to_string(CellIndexing indexing);
/// Accepts "row-major", "col-major", "serpentine".
[[nodiscard]] std::optional<CellIndexing> parse_indexing(std::string_view text);

struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Mesh cell holding copy t(i). Throws InvalidParameter for i outside [1, m^2].
[[nodiscard]] Cell cell_of(int t_index, const ProductParams& params, CellIndexing indexing);
/// Inverse of cell_of.
[[nodiscard]] int index_of(Cell cell, const ProductParams& params, CellIndexing indexing);

/// Product-graph vertex: mesh cell plus star coordinate (0 = center, s >= 1 = leaf s).
struct VertexCoord {
    int row;
    int col;
    int star;
    friend bool operator==(const VertexCoord&, const VertexCoord&) = default;
};

[[nodiscard]] VertexId encode(const VertexCoord& coord, const ProductParams& params);
[[nodiscard]] VertexCoord decode(VertexId id, const ProductParams& params);

/// Number of mesh neighbours of cell (r, c) in P(m,m).
[[nodiscard]] int mesh_degree(Cell cell, int m);

/// G = P(m,m) x K_{1,n} together with its coordinate system.
///
/// Flat ids follow the product fold (mesh x star): id = (row*m + col)*(n+1) + star,
/// independent of the cell indexing. The indexing only affects t-index lookups.
class ProductGraph {
public:
    ProductGraph(ProductParams params, CellIndexing indexing = CellIndexing::RowMajor);

    [[nodiscard]] const ProductParams& params() const noexcept { return params_; }
    [[nodiscard]] CellIndexing indexing() const noexcept { return indexing_; }
    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }

    [[nodiscard]] VertexCoord coord(VertexId id) const { return decode(id, params_); }
    [[nodiscard]] VertexId id(const VertexCoord& c) const { return encode(c, params_); }

    /// Vertex k (1-based, k = 1 is the center) of copy t(i).
    [[nodiscard]] VertexId copy_vertex(int t_index, int k) const;

    /// All vertices of copy t(i), center first.
    [[nodiscard]] std::vector<VertexId> copy_vertices(int t_index) const;

private:
    ProductParams params_;
    CellIndexing indexing_;
    Graph graph_;
};

} // namespace radiomesh
