#include "radiomesh/product.hpp"

#include "radiomesh/errors.hpp"

#include <array>

namespace radiomesh {

ProductParams::ProductParams(int m, int n) : m_(m), n_(n) {
    if (m < 2) throw InvalidParameter("mesh order m must be at least 2, got " + std::to_string(m));
    if (n < 1) throw InvalidParameter("star leaf count n must be at least 1, got " + std::to_string(n));
}

std::string_view to_string(CellIndexing indexing) {
    switch (indexing) {
    case CellIndexing::RowMajor:
        return "row-major";
    case CellIndexing::ColumnMajor:
        return "col-major";
    case CellIndexing::Serpentine:
        return "serpentine";
    }
    return "?";
}

std::optional<CellIndexing> parse_indexing(std::string_view text) {
    for (auto scheme : kAllIndexings) {
        if (to_string(scheme) == text) return scheme;
    }
    return std::nullopt;
}

Cell cell_of(int t_index, const ProductParams& params, CellIndexing indexing) {
    const int m = params.m();
    if (t_index < 1 || t_index > params.cells()) {
        throw InvalidParameter("t-index " + std::to_string(t_index) + " outside [1, " +
                               std::to_string(params.cells()) + "]");
    }
    const int major = (t_index - 1) / m;
    const int minor = (t_index - 1) % m;
    switch (indexing) {
    case CellIndexing::RowMajor:
        return {major, minor};
    case CellIndexing::ColumnMajor:
        return {minor, major};
    case CellIndexing::Serpentine:
        return {major, major % 2 == 0 ? minor : m - 1 - minor};
    }
    return {major, minor};
}

int index_of(Cell cell, const ProductParams& params, CellIndexing indexing) {
    const int m = params.m();
    if (cell.row < 0 || cell.row >= m || cell.col < 0 || cell.col >= m) {
        throw InvalidParameter("cell (" + std::to_string(cell.row) + ", " + std::to_string(cell.col) +
                               ") outside the " + std::to_string(m) + "x" + std::to_string(m) + " mesh");
    }
    switch (indexing) {
    case CellIndexing::RowMajor:
        return cell.row * m + cell.col + 1;
    case CellIndexing::ColumnMajor:
        return cell.col * m + cell.row + 1;
    case CellIndexing::Serpentine:
        return cell.row * m + (cell.row % 2 == 0 ? cell.col : m - 1 - cell.col) + 1;
    }
    return 0;
}

VertexId encode(const VertexCoord& c, const ProductParams& params) {
    const int m = params.m();
    if (c.row < 0 || c.row >= m || c.col < 0 || c.col >= m || c.star < 0 || c.star > params.n()) {
        throw InvalidParameter("coordinate (" + std::to_string(c.row) + ", " + std::to_string(c.col) + ", " +
                               std::to_string(c.star) + ") out of range");
    }
    return static_cast<VertexId>((c.row * m + c.col) * params.star_size() + c.star);
}

VertexCoord decode(VertexId id, const ProductParams& params) {
    if (id >= params.num_vertices()) {
        throw InvalidParameter("vertex id " + std::to_string(id) + " out of range");
    }
    const int cell = static_cast<int>(id) / params.star_size();
    return {cell / params.m(), cell % params.m(), static_cast<int>(id) % params.star_size()};
}

int mesh_degree(Cell cell, int m) {
    int deg = 0;
    if (cell.row > 0) ++deg;
    if (cell.row < m - 1) ++deg;
    if (cell.col > 0) ++deg;
    if (cell.col < m - 1) ++deg;
    return deg;
}

ProductGraph::ProductGraph(ProductParams params, CellIndexing indexing)
    : params_(params), indexing_(indexing) {
    std::array factors{build_mesh(static_cast<std::size_t>(params.m())),
                       build_star(static_cast<std::size_t>(params.n()))};
    graph_ = cartesian_product(factors);
}

VertexId ProductGraph::copy_vertex(int t_index, int k) const {
    if (k < 1 || k > params_.star_size()) {
        throw InvalidParameter("star position " + std::to_string(k) + " outside [1, " +
                               std::to_string(params_.star_size()) + "]");
    }
    auto [row, col] = cell_of(t_index, params_, indexing_);
    return encode({row, col, k - 1}, params_);
}

std::vector<VertexId> ProductGraph::copy_vertices(int t_index) const {
    std::vector<VertexId> out;
    for (int k = 1; k <= params_.star_size(); ++k) out.push_back(copy_vertex(t_index, k));
    return out;
}

} // namespace radiomesh
