#include "radiomesh/formulas.hpp"

#include "radiomesh/errors.hpp"

#include <stdexcept>
#include <string>

namespace radiomesh {

namespace {

using R = Rational;

void require_even(int m, std::string_view what) {
    if (m % 2 != 0) throw ParityError(std::string(what) + " requires even m, got m = " + std::to_string(m));
}

void require_odd(int m, std::string_view what) {
    if (m % 2 == 0) throw ParityError(std::string(what) + " requires odd m, got m = " + std::to_string(m));
}

} // namespace

std::string_view to_string(BoundId id) {
    switch (id) {
    case BoundId::DiamCor3: return "DiamCor3";
    case BoundId::Cor5PairBound: return "Cor5PairBound";
    case BoundId::Thm6EvenBound: return "Thm6EvenBound";
    case BoundId::Cor8PairBound: return "Cor8PairBound";
    case BoundId::Thm9GStar: return "Thm9GStar";
    case BoundId::Cor13SpanF3: return "Cor13SpanF3";
    case BoundId::Thm14GStarStar: return "Thm14GStarStar";
    case BoundId::Cor15GI: return "Cor15GI";
    case BoundId::Thm16GStarStarStar: return "Thm16GStarStarStar";
    case BoundId::Thm17GDblStar: return "Thm17GDblStar";
    case BoundId::Thm18OddBound: return "Thm18OddBound";
    case BoundId::Eq58Combined: return "Eq58Combined";
    case BoundId::SpanF1: return "SpanF1";
    case BoundId::SpanF2: return "SpanF2";
    case BoundId::SpanF4: return "SpanF4";
    }
    return "?";
}

std::int64_t diam_formula(const ProductParams& p) {
    if (p.n() == 1) {
        throw DomainError("diameter formula 2m needs n >= 2: K_{1,1} has diameter 1, so the product has 2m - 1");
    }
    return 2 * std::int64_t{p.m()};
}

std::string_view to_string(DistanceCase c) {
    switch (c) {
    case DistanceCase::BothCenters: return "BothCenters";
    case DistanceCase::ExactlyOneCenter: return "ExactlyOneCenter";
    case DistanceCase::NoCenters: return "NoCenters";
    }
    return "?";
}

DistanceCase classify(bool u_is_center, bool v_is_center) {
    if (u_is_center && v_is_center) return DistanceCase::BothCenters;
    if (u_is_center || v_is_center) return DistanceCase::ExactlyOneCenter;
    return DistanceCase::NoCenters;
}

DistanceCasePrediction even_pair_distance(int m, bool u_is_center, bool v_is_center, bool /*same_leaf*/) {
    require_even(m, "even pair distance table");
    const auto kind = classify(u_is_center, v_is_center);
    switch (kind) {
    case DistanceCase::BothCenters: return {kind, R(m, 2)};
    case DistanceCase::ExactlyOneCenter: return {kind, R(m - 1)};
    case DistanceCase::NoCenters: return {kind, R(m)};
    }
    return {kind, R(0)};
}

DistanceCasePrediction odd_pair_distance(int m, bool u_is_center, bool v_is_center, bool /*same_leaf*/,
                                         OddCaseTable table) {
    require_odd(m, "odd pair distance table");
    const auto kind = classify(u_is_center, v_is_center);
    const bool written = table == OddCaseTable::AsWritten;
    switch (kind) {
    case DistanceCase::BothCenters: return {kind, written ? R(m, 2) - 1 : R(m - 1, 2)};
    case DistanceCase::ExactlyOneCenter: return {kind, written ? R(m, 2) + 1 : R(m + 1, 2)};
    case DistanceCase::NoCenters: return {kind, R(m + 3, 2)};
    }
    return {kind, R(0)};
}

std::int64_t cor5_pair_bound(const ProductParams& p) {
    require_even(p.m(), "even pair bound");
    const std::int64_t m = p.m(), n = p.n();
    return 3 * m / 2 + 2 + m * n + n;
}

std::int64_t thm6_even_bound(const ProductParams& p) {
    require_even(p.m(), "even lower bound");
    const std::int64_t m = p.m(), n = p.n();
    const R closed = R(3 * m * m * m, 4) + R(2 * m * m + m * m * m * n + m * m * n, 2);
    const R summed = R(m * m, 2) * R(cor5_pair_bound(p));
    if (closed != summed) {
        throw std::logic_error("even bound " + closed.to_string() + " disagrees with pair sum " + summed.to_string());
    }
    return closed.as_integer();
}

Rational cor8_pair_bound(const ProductParams& p) {
    require_odd(p.m(), "odd pair bound");
    const std::int64_t m = p.m(), n = p.n();
    return {3 * m * n - n + 2, 2};
}

Thm9Values thm9_gstar_bound(const ProductParams& p) {
    require_odd(p.m(), "G'(*) bound");
    const std::int64_t m = p.m(), n = p.n();
    Thm9Values v;
    v.statement = R(m * m - m * m * n - m) + R(m * m * m * n + m * n, 4);
    v.expanded = R(m * m * m * n - 4 * m * m * n + 4 * m * m + m * n - 4 * m, 4);
    v.closing = R(3 * m * m * m * n - 4 * m * m * n + 4 * m * m + m * n - 4 * m, 4);
    v.summation = R(m * (m - 1), 2) * cor8_pair_bound(p);
    return v;
}

Rational span_f1(const ProductParams& p) {
    require_odd(p.m(), "span(f1)");
    const std::int64_t m = p.m();
    return R(6 * m) + R(3 * m + 3, 2);
}

Rational span_f2(const ProductParams& p) {
    require_odd(p.m(), "span(f2)");
    const std::int64_t m = p.m(), n = p.n();
    return {5 * m * n - 10 * m - n + 2, 2};
}

Rational span_f4(const ProductParams& p) {
    require_odd(p.m(), "span(f4)");
    const std::int64_t m = p.m(), n = p.n();
    return {m * n + n, 2};
}

Rational cor13_span_f3(const ProductParams& p) {
    require_odd(p.m(), "span(f3)");
    if (p.n() < 2) throw DomainError("span(f3) needs n >= 2, got n = " + std::to_string(p.n()));
    const std::int64_t m = p.m(), n = p.n();
    const R f3(5 * m * n + 5 * m - n + 5, 2);
    if (f3 != span_f1(p) + span_f2(p)) {
        throw std::logic_error("span(f3) " + f3.to_string() + " != span(f1) + span(f2)");
    }
    return f3;
}

Rational thm14_bound(const ProductParams& p) {
    require_odd(p.m(), "G'(**) bound");
    const std::int64_t m = p.m(), n = p.n();
    return {6 * m * n + 5 * m + 5, 2};
}

Rational cor15_pair_bound(const ProductParams& p) {
    require_odd(p.m(), "last-row pair bound");
    const std::int64_t m = p.m(), n = p.n();
    return {3 * m * n - n + 2, 2};
}

Thm16Values thm16_bound(const ProductParams& p) {
    require_odd(p.m(), "G'(***) bound");
    const std::int64_t m = p.m(), n = p.n();
    Thm16Values v;
    v.statement = R(3 * m * m * n - 10 * m * n + 4 * m + 3 * n, 2);
    v.closing = R(2 * m - 5 * m * n) + R(3 * m * m * n + 3 * n, 2);
    v.iteration = R(m - 3, 2) * R(3 * m * n - n + 2, 2) + R(m + 3);
    v.degenerate = m < 5;
    return v;
}

Thm17Values thm17_bound(const ProductParams& p) {
    require_odd(p.m(), "G''(*) bound");
    const std::int64_t m = p.m(), n = p.n();
    return {R(3 * m * m * n - 4 * m * n + 12 * m + 3 * n + 8, 2),
            R(3 * m * m * m * n - 10 * m * n + 7 * m + 3 * n + 3, 2) + R(6 * m * n + 5 * m + 5, 2)};
}

Rational thm18_odd_bound(const ProductParams& p) {
    require_odd(p.m(), "odd lower bound");
    const std::int64_t m = p.m(), n = p.n();
    return R(5 * m + 4 + m * m) + R(3 * m * m * m * n + 2 * m * m * n + 6 * n - 7 * m * n, 4);
}

Rational combined_bound(const ProductParams& p) {
    return p.even() ? R(thm6_even_bound(p)) : thm18_odd_bound(p);
}

std::vector<BoundValue> bounds_table(const ProductParams& p) {
    std::vector<BoundValue> rows;
    auto add = [&](BoundId id, Rational v) { rows.push_back({id, p.m(), p.n(), v}); };
    if (p.n() >= 2) add(BoundId::DiamCor3, R(diam_formula(p)));
    if (p.even()) {
        add(BoundId::Cor5PairBound, R(cor5_pair_bound(p)));
        add(BoundId::Thm6EvenBound, R(thm6_even_bound(p)));
    } else {
        add(BoundId::Cor8PairBound, cor8_pair_bound(p));
        add(BoundId::Thm9GStar, thm9_gstar_bound(p).statement);
        if (p.n() >= 2) add(BoundId::Cor13SpanF3, cor13_span_f3(p));
        add(BoundId::Thm14GStarStar, thm14_bound(p));
        add(BoundId::Cor15GI, cor15_pair_bound(p));
        add(BoundId::Thm16GStarStarStar, thm16_bound(p).statement);
        add(BoundId::Thm17GDblStar, thm17_bound(p).statement);
        add(BoundId::Thm18OddBound, thm18_odd_bound(p));
    }
    add(BoundId::Eq58Combined, combined_bound(p));
    if (!p.even()) {
        add(BoundId::SpanF1, span_f1(p));
        add(BoundId::SpanF2, span_f2(p));
        add(BoundId::SpanF4, span_f4(p));
    }
    return rows;
}

std::vector<VertexCountRow> vertex_count_comparison(int m_min, int m_max, int n) {
    if (m_min < 2) throw InvalidParameter("comparison range must start at m >= 2");
    if (m_max < m_min) throw InvalidParameter("comparison range is empty");
    if (n < 1) throw InvalidParameter("star leaf count n must be at least 1");
    std::vector<VertexCountRow> rows;
    for (int m = m_min; m <= m_max; ++m) {
        const std::int64_t product = std::int64_t{m} * m * (n + 1);
        const std::int64_t star_path = std::int64_t{m} * (n + 1);
        rows.push_back({m, n, product, star_path, product / star_path});
    }
    return rows;
}

} // namespace radiomesh
