#pragma once

#include "radiomesh/product.hpp"
#include "radiomesh/rational.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace radiomesh {

// Closed-form quantities for G = P(m,m) x K_{1,n}, evaluated exactly. Values
// that are not integers for a given (m, n) stay fractional; nothing is rounded.

enum class BoundId {
    DiamCor3,
    Cor5PairBound,
    Thm6EvenBound,
    Cor8PairBound,
    Thm9GStar,
    Cor13SpanF3,
    Thm14GStarStar,
    Cor15GI,
    Thm16GStarStarStar,
    Thm17GDblStar,
    Thm18OddBound,
    Eq58Combined,
    SpanF1,
    SpanF2,
    SpanF4,
};

[[nodiscard]] std::string_view to_string(BoundId id);

/// 2m. Throws DomainError for n = 1, where the star has diameter 1 and the
/// product diameter is 2m - 1.
[[nodiscard]] std::int64_t diam_formula(const ProductParams& p);

enum class DistanceCase { BothCenters, ExactlyOneCenter, NoCenters };

[[nodiscard]] std::string_view to_string(DistanceCase c);
[[nodiscard]] DistanceCase classify(bool u_is_center, bool v_is_center);

struct DistanceCasePrediction {
    DistanceCase kind;
    Rational predicted;
    [[nodiscard]] bool integral() const noexcept { return predicted.integral(); }
};

/// Predicted distance between a vertex of t(j) and one of t(j + m^2/2), even m:
/// m/2, m-1 or m. `same_leaf` is accepted for symmetry with the BFS check; the
/// prediction does not depend on it.
[[nodiscard]] DistanceCasePrediction even_pair_distance(int m, bool u_is_center, bool v_is_center,
                                                        bool same_leaf = false);

/// Which odd-m case table to read.
enum class OddCaseTable {
    AsWritten, ///< m/2 - 1, m/2 + 1, (m+3)/2
    Operative, ///< (m-1)/2, (m+1)/2, (m+3)/2, the values the derivation actually uses
};

/// Predicted distance between t(x) and t(x + m(m-1)/2) vertices, odd m.
[[nodiscard]] DistanceCasePrediction odd_pair_distance(int m, bool u_is_center, bool v_is_center,
                                                       bool same_leaf = false,
                                                       OddCaseTable table = OddCaseTable::Operative);

/// 3m/2 + 2 + mn + n (even m).
[[nodiscard]] std::int64_t cor5_pair_bound(const ProductParams& p);

/// 3m^3/4 + (2m^2 + m^3 n + m^2 n)/2 (even m). Cross-checked against
/// (m^2/2) * cor5_pair_bound; a disagreement throws std::logic_error.
[[nodiscard]] std::int64_t thm6_even_bound(const ProductParams& p);

/// (3mn - n + 2)/2 (odd m).
[[nodiscard]] Rational cor8_pair_bound(const ProductParams& p);

struct Thm9Values {
    Rational statement;   ///< m^2 - m^2 n - m + (m^3 n + mn)/4
    Rational expanded;    ///< (m^3 n - 4m^2 n + 4m^2 + mn - 4m)/4
    Rational closing;     ///< (3m^3 n - 4m^2 n + 4m^2 + mn - 4m)/4
    Rational summation;   ///< m(m-1)/2 * (3mn - n + 2)/2
    [[nodiscard]] bool statement_matches_expanded() const noexcept { return statement == expanded; }
};

[[nodiscard]] Thm9Values thm9_gstar_bound(const ProductParams& p);

[[nodiscard]] Rational span_f1(const ProductParams& p); ///< 6m + (3m+3)/2
[[nodiscard]] Rational span_f2(const ProductParams& p); ///< (5mn - 10m - n + 2)/2
[[nodiscard]] Rational span_f4(const ProductParams& p); ///< (mn + n)/2

/// (5mn + 5m - n + 5)/2 (odd m, n >= 2). Throws std::logic_error if it differs
/// from span_f1 + span_f2.
[[nodiscard]] Rational cor13_span_f3(const ProductParams& p);

/// (6mn + 5m + 5)/2 (odd m).
[[nodiscard]] Rational thm14_bound(const ProductParams& p);

/// (3mn - n + 2)/2, the per-pair bound for the last-row pairs (odd m).
[[nodiscard]] Rational cor15_pair_bound(const ProductParams& p);

struct Thm16Values {
    Rational statement;  ///< (3m^2 n - 10mn + 4m + 3n)/2
    Rational closing;    ///< 2m - 5mn + (3m^2 n + 3n)/2
    Rational iteration;  ///< (m-3)/2 * (3mn - n + 2)/2 + 2 * (m+3)/2
    bool degenerate = false; ///< m = 3: no last-row sub-blocks exist
};

[[nodiscard]] Thm16Values thm16_bound(const ProductParams& p);

struct Thm17Values {
    Rational statement; ///< (3m^2 n - 4mn + 12m + 3n + 8)/2
    Rational proof;     ///< (3m^3 n - 10mn + 7m + 3n + 3)/2 + (6mn + 5m + 5)/2
};

[[nodiscard]] Thm17Values thm17_bound(const ProductParams& p);

/// 5m + 4 + m^2 + (3m^3 n + 2m^2 n + 6n - 7mn)/4 (odd m).
[[nodiscard]] Rational thm18_odd_bound(const ProductParams& p);

/// Even m: thm6_even_bound; odd m: thm18_odd_bound.
[[nodiscard]] Rational combined_bound(const ProductParams& p);

struct BoundValue {
    BoundId id;
    int m;
    int n;
    Rational value;
};

/// Every bound defined for (m, n), in BoundId order. Statement forms are used
/// where a bound has several variants.
[[nodiscard]] std::vector<BoundValue> bounds_table(const ProductParams& p);

struct VertexCountRow {
    int m;
    int n;
    std::int64_t product_count;   ///< m^2 (n+1)
    std::int64_t star_path_count; ///< m (n+1)
    std::int64_t ratio;           ///< product_count / star_path_count
};

/// Rows for m in [m_min, m_max]. Throws InvalidParameter if m_min < 2 or the
/// range is empty.
[[nodiscard]] std::vector<VertexCountRow> vertex_count_comparison(int m_min, int m_max, int n);

} // namespace radiomesh
