#include "radiomesh/io.hpp"

#include "radiomesh/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace radiomesh {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& what) {
    throw InvalidParameter("line " + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Reads exactly the listed integers from `text`; false on trailing junk.
template <typename... Ts>
bool scan(const std::string& text, Ts&... out) {
    std::istringstream in(text);
    ((in >> out), ...);
    if (in.fail()) return false;
    std::string rest;
    return !(in >> rest);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

} // namespace

void write_graph(std::ostream& os, const Graph& g) {
    os << "vertices " << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

void write_graph(std::ostream& os, const ProductGraph& pg) {
    const auto& p = pg.params();
    os << "# P(" << p.m() << "," << p.m() << ") x K_{1," << p.n() << "} indexing " << to_string(pg.indexing())
       << '\n';
    for (VertexId id = 0; id < pg.graph().size(); ++id) {
        auto c = pg.coord(id);
        os << "# coord " << id << ' ' << c.row << ' ' << c.col << ' ' << c.star << '\n';
    }
    write_graph(os, pg.graph());
}

ParsedGraph read_graph(std::istream& is) {
    std::optional<std::size_t> count;
    std::vector<Edge> edges;
    std::map<VertexId, VertexCoord> coords;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string tag;
            std::istringstream in(line.substr(1));
            if (in >> tag && tag == "coord") {
                std::string rest;
                std::getline(in, rest);
                VertexId id{};
                VertexCoord c{};
                if (!scan(rest, id, c.row, c.col, c.star)) parse_error(line_no, "malformed coord comment");
                coords[id] = c;
            }
            continue;
        }
        if (!count) {
            std::string keyword = line.substr(0, line.find(' '));
            std::size_t n = 0;
            if (keyword != "vertices" || !scan(line.substr(keyword.size()), n)) {
                parse_error(line_no, "expected 'vertices N'");
            }
            count = n;
            continue;
        }
        VertexId u{}, v{};
        if (!scan(line, u, v)) parse_error(line_no, "expected an edge 'u v'");
        if (u >= v) parse_error(line_no, "edge endpoints must satisfy u < v");
        if (u >= *count || v >= *count) parse_error(line_no, "edge endpoint out of range");
        if (!edges.empty() && Edge{u, v} <= edges.back()) parse_error(line_no, "edges must be strictly sorted");
        edges.emplace_back(u, v);
    }
    if (!count) throw InvalidParameter("graph file has no 'vertices N' line");

    ParsedGraph out{Graph(*count, edges), std::nullopt};
    if (!coords.empty()) {
        if (coords.size() != *count || coords.rbegin()->first >= *count) {
            throw InvalidParameter("coord comments do not cover every vertex exactly once");
        }
        std::vector<VertexCoord> list;
        for (const auto& [id, c] : coords) list.push_back(c);
        out.coords = std::move(list);
    }
    return out;
}

ParsedGraph read_graph(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_labeling(std::ostream& os, const Labeling& l) {
    for (std::size_t v = 0; v < l.size(); ++v) os << v << ' ' << l.labels[v] << '\n';
    os << "# span " << l.span() << '\n';
}

Labeling read_labeling(std::istream& is) {
    Labeling out;
    std::optional<Label> declared_span;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string tag;
            std::istringstream in(line.substr(1));
            if (in >> tag && tag == "span") {
                std::string rest;
                std::getline(in, rest);
                Label s{};
                if (!scan(rest, s)) parse_error(line_no, "malformed span comment");
                declared_span = s;
            }
            continue;
        }
        std::size_t id{};
        Label label{};
        if (!scan(line, id, label)) parse_error(line_no, "expected '<vertex_id> <label>'");
        if (id != out.labels.size()) {
            parse_error(line_no, "expected vertex " + std::to_string(out.labels.size()) + ", got " + std::to_string(id));
        }
        if (label < 0) parse_error(line_no, "labels must be non-negative");
        out.labels.push_back(label);
    }
    if (declared_span && *declared_span != out.span()) {
        throw InvalidParameter("span comment says " + std::to_string(*declared_span) + " but labels span " +
                               std::to_string(out.span()));
    }
    return out;
}

Labeling read_labeling(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_labeling(in);
}

} // namespace radiomesh
