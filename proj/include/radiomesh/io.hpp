#pragma once

#include "radiomesh/graph.hpp"
#include "radiomesh/labeling.hpp"
#include "radiomesh/product.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace radiomesh {

// Graph text format:
//   # comment
//   vertices N
//   u v            one edge per line, u < v, lexicographic order
// Product graphs also carry `# coord <id> <row> <col> <star>` lines.

void write_graph(std::ostream& os, const Graph& g);
void write_graph(std::ostream& os, const ProductGraph& pg);

struct ParsedGraph {
    Graph graph;
    /// Indexed by vertex id when the file carried coordinate lines for every vertex.
    std::optional<std::vector<VertexCoord>> coords;
};

/// Throws InvalidParameter with a line number on malformed input.
[[nodiscard]] ParsedGraph read_graph(std::istream& is);
[[nodiscard]] ParsedGraph read_graph(const std::filesystem::path& path);

// Labeling format: `<vertex_id> <label>` per line sorted by id, `#` comments,
// and a trailing `# span <S>` line that is checked on read.

void write_labeling(std::ostream& os, const Labeling& l);

/// Throws InvalidParameter on gaps, duplicates, malformed lines or a span
/// comment that does not match the labels.
[[nodiscard]] Labeling read_labeling(std::istream& is);
[[nodiscard]] Labeling read_labeling(const std::filesystem::path& path);

} // namespace radiomesh
