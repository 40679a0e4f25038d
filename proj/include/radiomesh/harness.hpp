#pragma once

#include "radiomesh/formulas.hpp"
#include "radiomesh/labeling.hpp"
#include "radiomesh/product.hpp"
#include "radiomesh/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radiomesh {

enum class Verdict { Match, Mismatch, Unverifiable };

[[nodiscard]] std::string_view to_string(Verdict v);

/// One claim instantiated at concrete parameters.
///
/// `indexing` is "-" for claims that do not depend on how t(i) is laid out.
/// An absent `observed` means no oracle value was available.
struct ClaimVerdict {
    std::string claim_id;
    int m = 0;
    int n = 0;
    std::string indexing;
    Rational expected;
    std::optional<Rational> observed;
    Verdict verdict = Verdict::Unverifiable;
};

/// Match iff observed == expected exactly; Unverifiable without an observation.
[[nodiscard]] Verdict adjudicate(const Rational& expected, const std::optional<Rational>& observed);

/// Verdict for a lower-bound claim rn >= expected when only a valid labeling of
/// span `upper` is known: Mismatch if upper < expected, else Unverifiable.
[[nodiscard]] Verdict adjudicate_upper_only(const Rational& expected, Label upper);

struct VerifyConfig {
    std::vector<int> ms{2, 3, 4, 5, 6};
    std::vector<int> ns{1, 2, 3};
    SearchBudget budget{};
    /// Vertex sets up to this size are solved exactly; larger ones fall back to
    /// heuristic upper bounds.
    std::size_t exact_limit = 12;
    bool include_examples = true;
};

/// All claim rows for the grid, sorted by (claim_id, m, n, indexing).
[[nodiscard]] std::vector<ClaimVerdict> run_verification(const VerifyConfig& config);

/// Claim rows for a single (m, n); unsorted.
[[nodiscard]] std::vector<ClaimVerdict> verify_instance(const ProductParams& params, const VerifyConfig& config);

/// Example 3.1 / 3.2 rows: station counts and the stated radio values.
[[nodiscard]] std::vector<ClaimVerdict> verify_examples();

void sort_verdicts(std::vector<ClaimVerdict>& rows);

inline constexpr std::string_view kVerdictCsvHeader =
    "claim_id,m,n,indexing,expected_num,expected_den,observed,verdict";
inline constexpr std::string_view kBoundsCsvHeader = "bound_id,m,n,value_num,value_den,integral";
inline constexpr std::string_view kCompareCsvHeader = "m,n,product_count,star_path_count,ratio";
inline constexpr std::string_view kSpanCsvHeader = "m,n,bound_num,bound_den,constructive_greedy_span,heuristic_span";

void write_verdict_csv(std::ostream& os, const std::vector<ClaimVerdict>& rows);
void write_bounds_csv(std::ostream& os, const std::vector<BoundValue>& rows);
void write_comparison_csv(std::ostream& os, const std::vector<VertexCountRow>& rows);

struct SpanRow {
    int m;
    int n;
    Rational bound;
    Label constructive_greedy_span; ///< best over the three indexings
    Label heuristic_span;
};

/// Combined bound next to constructive spans, for m in [m_min, m_max].
[[nodiscard]] std::vector<SpanRow> span_comparison(int m_min, int m_max, int n);
void write_span_csv(std::ostream& os, const std::vector<SpanRow>& rows);

} // namespace radiomesh
