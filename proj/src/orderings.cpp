#include "radiomesh/errors.hpp"
#include "radiomesh/labeling.hpp"

#include <algorithm>

namespace radiomesh {

namespace {

VertexId copy_vertex(const ProductParams& params, CellIndexing indexing, int t_index, int k) {
    auto [row, col] = cell_of(t_index, params, indexing);
    return encode({row, col, k - 1}, params);
}

void append(std::vector<VertexId>& out, const std::vector<VertexId>& more) {
    out.insert(out.end(), more.begin(), more.end());
}

} // namespace

OrderingLayout ordering_layout(const ProductParams& params) {
    const int m = params.m();
    OrderingLayout layout;
    if (params.even()) {
        const int half = m * m / 2;
        for (int j = 1; j <= half; ++j) layout.pairs.push_back({j, j + half});
        return layout;
    }

    const int half = m * (m - 1) / 2;
    for (int x = 1; x <= half; ++x) layout.pairs.push_back({x, x + half});

    // Last row: offsets 1, (m+1)/2 and m are the distinguished copies; the rest
    // pair as (d, d + (m+1)/2) where both ends are free, leftovers pair in order.
    const int base = m * (m - 1);
    const int mid = (m + 1) / 2;
    auto distinguished = [&](int offset) { return offset == 1 || offset == mid || offset == m; };
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
    for (int d = 2; d <= (m - 1) / 2; ++d) {
        const int partner = d + mid;
        if (distinguished(d) || partner > m || distinguished(partner)) continue;
        layout.last_row_pairs.push_back({base + d, base + partner});
        used[d] = used[partner] = true;
    }
    std::vector<int> leftover;
    for (int d = 1; d <= m; ++d) {
        if (!distinguished(d) && !used[d]) leftover.push_back(d);
    }
    for (std::size_t i = 0; i + 1 < leftover.size(); i += 2) {
        layout.last_row_pairs.push_back({base + leftover[i], base + leftover[i + 1]});
    }
    layout.distinguished = std::array{base + 1, base + mid, base + m};
    return layout;
}

std::vector<VertexId> zigzag(const ProductParams& params, CellIndexing indexing, CopyPair pair) {
    const int top = params.star_size();
    auto v = [&](int t, int k) { return copy_vertex(params, indexing, t, k); };
    std::vector<VertexId> out{v(pair.first, 1), v(pair.second, 1)};
    for (int k = 2; k <= top; ++k) out.push_back(v(k % 2 == 0 ? pair.first : pair.second, k));
    for (int k = 2; k <= top; ++k) out.push_back(v(k % 2 == 0 ? pair.second : pair.first, k));
    return out;
}

PathClassWalks path_class_walks(const ProductParams& params, CellIndexing indexing) {
    if (params.even()) throw ParityError("path classes are defined for odd m only");
    const auto layout = ordering_layout(params);
    const auto [a, b, c] = *layout.distinguished;
    const int top = params.star_size();

    auto walk = [&](std::initializer_list<std::pair<int, int>> steps) {
        std::vector<VertexId> out;
        for (auto [t, k] : steps) {
            if (k <= top) out.push_back(copy_vertex(params, indexing, t, k));
        }
        return out;
    };

    PathClassWalks walks;
    walks.first.push_back(walk({{a, 1}, {b, 3}, {c, 2}}));
    walks.first.push_back(walk({{a, 3}, {b, 2}, {c, 1}}));
    walks.second = walk({{a, 2}, {b, 1}, {c, 3}});
    // Leaf positions 4..n+1; the middle copy is shifted by one position so that
    // consecutive steps join distinct leaves whenever two or more positions exist.
    std::vector<int> leaves;
    for (int k = 4; k <= top; ++k) leaves.push_back(k);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        const int x = leaves[i];
        const int y = leaves[(i + 1) % leaves.size()];
        walks.third.push_back(walk({{a, x}, {b, y}, {c, x}}));
    }
    return walks;
}

OrderingPlan paper_ordering_even(const ProductParams& params, CellIndexing indexing) {
    if (!params.even()) throw ParityError("even ordering requires even m, got m = " + std::to_string(params.m()));
    OrderingPlan plan{{}, PlanProvenance::PaperEven};
    plan.sequence.reserve(params.num_vertices());
    for (const auto& pair : ordering_layout(params).pairs) append(plan.sequence, zigzag(params, indexing, pair));
    return plan;
}

OrderingPlan paper_ordering_odd(const ProductParams& params, CellIndexing indexing) {
    if (params.even()) throw ParityError("odd ordering requires odd m, got m = " + std::to_string(params.m()));
    const auto layout = ordering_layout(params);
    OrderingPlan plan{{}, PlanProvenance::PaperOdd};
    plan.sequence.reserve(params.num_vertices());
    for (const auto& pair : layout.pairs) append(plan.sequence, zigzag(params, indexing, pair));
    for (const auto& pair : layout.last_row_pairs) append(plan.sequence, zigzag(params, indexing, pair));
    const auto walks = path_class_walks(params, indexing);
    for (const auto& w : walks.first) append(plan.sequence, w);
    append(plan.sequence, walks.second);
    for (const auto& w : walks.third) append(plan.sequence, w);
    return plan;
}

PaperConstruction construct_paper_labeling(const ProductGraph& pg, const DistanceMatrix& dm) {
    const auto& params = pg.params();
    PaperConstruction out;
    out.plan = params.even() ? paper_ordering_even(params, pg.indexing()) : paper_ordering_odd(params, pg.indexing());
    RadioConstraints rc(dm);
    out.greedy = greedy_assign(rc, out.plan);
    out.consecutive = consecutive_only_assign(rc, out.plan);
    out.consecutive_valid = validate(rc, out.consecutive).valid();
    return out;
}

PaperConstruction construct_paper_labeling(const ProductParams& params, CellIndexing indexing) {
    ProductGraph pg(params, indexing);
    DistanceMatrix dm(pg.graph());
    return construct_paper_labeling(pg, dm);
}

} // namespace radiomesh
