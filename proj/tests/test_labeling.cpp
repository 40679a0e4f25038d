#include "oracles.hpp"

#include "radiomesh/errors.hpp"
#include "radiomesh/labeling.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace radiomesh {
namespace {

struct Named {
    std::string name;
    Graph graph;
};

std::vector<Named> corpus(std::size_t max_vertices) {
    std::vector<Named> out;
    for (std::size_t m = 1; m <= 9; ++m) out.push_back({"P" + std::to_string(m), build_path(m)});
    for (std::size_t n = 1; n <= 8; ++n) out.push_back({"K1," + std::to_string(n), build_star(n)});
    out.push_back({"P(2,2)", build_mesh(2)});
    out.push_back({"P(3,3)", build_mesh(3)});
    out.push_back({"P(2,2)xK1,1", ProductGraph(ProductParams(2, 1)).graph()});
    out.push_back({"P(2,2)xK1,2", ProductGraph(ProductParams(2, 2)).graph()});
    std::erase_if(out, [&](const Named& g) { return g.graph.size() > max_vertices; });
    return out;
}

Labeling labels(std::initializer_list<Label> xs) { return Labeling{std::vector<Label>(xs)}; }

OrderingPlan plan(std::initializer_list<VertexId> xs) { return {std::vector<VertexId>(xs), PlanProvenance::External}; }

TEST(Validate, Examples) {
    auto p2 = build_path(2);
    EXPECT_TRUE(validate(p2, DistanceMatrix(p2), labels({0, 1})).valid());

    auto p3 = build_path(3);
    DistanceMatrix d3(p3);
    EXPECT_TRUE(validate(p3, d3, labels({0, 3, 1})).valid());
    auto bad = validate(p3, d3, labels({0, 1, 2}));
    EXPECT_FALSE(bad.valid());
    EXPECT_NE(std::find(bad.violations.begin(), bad.violations.end(), Violation{0, 1, 2, 1}), bad.violations.end());
    EXPECT_EQ(bad.violations.size(), 2u);

    auto k12 = build_star(2);
    auto l = labels({0, 2, 3});
    EXPECT_TRUE(validate(k12, DistanceMatrix(k12), l).valid());
    EXPECT_EQ(l.span(), 3);
}

TEST(Validate, WrongSizeIsAContractError) {
    auto p3 = build_path(3);
    EXPECT_THROW((void)validate(p3, DistanceMatrix(p3), labels({0, 1})), ContractError);
}

TEST(Validate, ShiftInvariant) {
    auto g = ProductGraph(ProductParams(2, 2)).graph();
    DistanceMatrix dm(g);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Labeling l{std::vector<Label>(g.size())};
        for (auto& x : l.labels) x = std::uniform_int_distribution<Label>(0, 30)(rng);
        Labeling shifted = l;
        for (auto& x : shifted.labels) x += 17;
        EXPECT_EQ(validate(g, dm, l).violations, validate(g, dm, shifted).violations);
        EXPECT_EQ(shifted.normalized(), l.normalized());
        const auto norm = l.normalized();
        EXPECT_EQ(*std::min_element(norm.labels.begin(), norm.labels.end()), 0);
    }
}

TEST(GreedyAssign, Examples) {
    auto p2 = build_path(2);
    EXPECT_EQ(greedy_assign(p2, DistanceMatrix(p2), plan({0, 1})), labels({0, 1}));

    auto p3 = build_path(3);
    auto l = greedy_assign(p3, DistanceMatrix(p3), plan({0, 2, 1}));
    EXPECT_EQ(l, labels({0, 3, 1}));
    EXPECT_EQ(l.span(), 3);

    auto k12 = build_star(2);
    auto s = greedy_assign(k12, DistanceMatrix(k12), plan({1, 2, 0}));
    EXPECT_EQ(s, labels({3, 0, 1}));
}

TEST(GreedyAssign, RejectsNonPermutation) {
    auto p3 = build_path(3);
    EXPECT_THROW((void)greedy_assign(p3, DistanceMatrix(p3), plan({0, 0, 1})), ContractError);
    EXPECT_THROW((void)consecutive_only_assign(p3, DistanceMatrix(p3), plan({0, 1})), ContractError);
}

TEST(GreedyAssign, AlwaysValidAndNeverBelowRadioNumber) {
    std::mt19937 rng(2024);
    for (const auto& [name, g] : corpus(12)) {
        DistanceMatrix dm(g);
        RadioConstraints rc(dm);
        const auto rn = exact_rn(rc).value;
        OrderingPlan p{std::vector<VertexId>(g.size()), PlanProvenance::External};
        std::iota(p.sequence.begin(), p.sequence.end(), VertexId{0});
        for (int trial = 0; trial < 40; ++trial) {
            std::shuffle(p.sequence.begin(), p.sequence.end(), rng);
            auto l = greedy_assign(rc, p);
            ASSERT_TRUE(validate(rc, l).valid()) << name;
            ASSERT_EQ(*std::min_element(l.labels.begin(), l.labels.end()), 0);
            ASSERT_GE(l.span(), rn) << name;
        }
    }
}

TEST(ConsecutiveOnly, TelescopesToSumOfGaps) {
    std::mt19937 rng(11);
    for (const auto& [name, g] : corpus(12)) {
        DistanceMatrix dm(g);
        const int diam = dm.diameter();
        OrderingPlan p{std::vector<VertexId>(g.size()), PlanProvenance::External};
        std::iota(p.sequence.begin(), p.sequence.end(), VertexId{0});
        for (int trial = 0; trial < 10; ++trial) {
            std::shuffle(p.sequence.begin(), p.sequence.end(), rng);
            auto l = consecutive_only_assign(g, dm, p);
            Label sum = 0;
            for (std::size_t i = 1; i < p.sequence.size(); ++i) sum += diam + 1 - dm(p.sequence[i - 1], p.sequence[i]);
            ASSERT_EQ(l.labels[p.sequence.back()], sum) << name;
        }
    }
    auto p2 = build_path(2);
    EXPECT_EQ(consecutive_only_assign(p2, DistanceMatrix(p2), plan({0, 1})), labels({0, 1}));
}

TEST(ConsecutiveOnly, CanBeInvalid) {
    // 3x3 mesh, diam 4: corner, far corner, then the first corner's neighbour.
    // The last step only checks against the far corner, leaving 0 and 1 three apart.
    auto g = build_mesh(3);
    DistanceMatrix dm(g);
    auto l = consecutive_only_assign(g, dm, plan({0, 8, 1, 2, 3, 4, 5, 6, 7}));
    EXPECT_EQ(l.labels[0], 0);
    EXPECT_EQ(l.labels[8], 1);
    EXPECT_EQ(l.labels[1], 3);
    auto report = validate(g, dm, l);
    EXPECT_TRUE(std::any_of(report.violations.begin(), report.violations.end(), [](const Violation& v) {
        return std::min(v.u, v.v) == 0 && std::max(v.u, v.v) == 1 && v.required == 4 && v.actual == 3;
    }));
    EXPECT_TRUE(validate(g, dm, greedy_assign(g, dm, plan({0, 8, 1, 2, 3, 4, 5, 6, 7}))).valid());
}

TEST(ExactRn, SmallKnownValues) {
    auto p2 = build_path(2);
    EXPECT_EQ(exact_rn(p2, DistanceMatrix(p2)).value, 1);
    auto p3 = build_path(3);
    EXPECT_EQ(exact_rn(p3, DistanceMatrix(p3)).value, 3);
    // K_{1,1} is P2, so n + 1 only holds from n = 2.
    auto k11 = build_star(1);
    EXPECT_EQ(exact_rn(k11, DistanceMatrix(k11)).value, 1);
    for (std::size_t n = 2; n <= 4; ++n) {
        auto s = build_star(n);
        auto r = exact_rn(s, DistanceMatrix(s));
        EXPECT_EQ(r.status, RnStatus::Exact);
        EXPECT_EQ(r.value, static_cast<Label>(n) + 1) << n;
    }
}

TEST(ExactRn, AgreesWithLabelValueBruteForce) {
    for (const auto& [name, g] : corpus(5)) {
        DistanceMatrix dm(g);
        EXPECT_EQ(exact_rn(g, dm).value, test::brute_force_radio_number(test::graph_distances(g))) << name;
    }
}

TEST(ExactRn, AgreesWithPermutationOracle) {
    for (const auto& [name, g] : corpus(kOracleMaxVertices)) {
        DistanceMatrix dm(g);
        auto exact = exact_rn(g, dm);
        auto oracle = permutation_oracle(g, dm);
        ASSERT_EQ(exact.status, RnStatus::Exact) << name;
        EXPECT_EQ(exact.value, oracle.value) << name;
        ASSERT_TRUE(exact.witness.has_value());
        EXPECT_TRUE(validate(g, dm, *exact.witness).valid()) << name;
        EXPECT_EQ(exact.witness->span(), exact.value);
    }
}

TEST(ExactRn, DeterministicWitness) {
    auto g = ProductGraph(ProductParams(2, 2)).graph();
    DistanceMatrix dm(g);
    auto a = exact_rn(g, dm);
    auto b = exact_rn(g, dm);
    EXPECT_EQ(a.value, 22);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(ExactRn, BudgetExhaustionKeepsAValidWitness) {
    auto g = ProductGraph(ProductParams(3, 1)).graph();
    DistanceMatrix dm(g);
    auto limited = exact_rn(g, dm, {std::chrono::milliseconds(60'000), 50});
    EXPECT_EQ(limited.status, RnStatus::UpperBoundOnly);
    ASSERT_TRUE(limited.witness.has_value());
    EXPECT_TRUE(validate(g, dm, *limited.witness).valid());
    EXPECT_EQ(limited.witness->span(), limited.value);

    auto timed = exact_rn(g, dm, {std::chrono::milliseconds(1), 0});
    EXPECT_EQ(timed.status, RnStatus::TimedOut);
    ASSERT_TRUE(timed.witness.has_value());
    EXPECT_TRUE(validate(g, dm, *timed.witness).valid());
}

TEST(ExactRn, RejectsDisconnected) {
    std::array<Edge, 1> e{Edge{0, 1}};
    Graph g(3, e);
    EXPECT_THROW((void)exact_rn(g, DistanceMatrix(g)), DisconnectedGraph);
    EXPECT_THROW((void)permutation_oracle(g, DistanceMatrix(g)), DisconnectedGraph);
}

TEST(PermutationOracle, RefusesLargeGraphs) {
    auto g = build_path(10);
    EXPECT_THROW((void)permutation_oracle(g, DistanceMatrix(g)), SizeError);
}

TEST(RadioConstraints, SubsetKeepsHostDistancesAndDiameter) {
    ProductGraph pg(ProductParams(6, 4));
    DistanceMatrix dm(pg.graph());
    auto members = pg.copy_vertices(1);
    auto more = pg.copy_vertices(19);
    members.insert(members.end(), more.begin(), more.end());
    RadioConstraints rc(dm, members);
    EXPECT_EQ(rc.size(), 10u);
    EXPECT_EQ(rc.diam(), 12);
    EXPECT_EQ(rc.distance(0, 5), 3);
    EXPECT_EQ(rc.gap(0, 5), 10);
    std::vector<VertexId> twice{0, 0};
    EXPECT_THROW(RadioConstraints(dm, twice), InvalidParameter);
}

TEST(Heuristic, ValidUpperBound) {
    for (int m = 2; m <= 5; ++m) {
        ProductGraph pg(ProductParams(m, 2));
        DistanceMatrix dm(pg.graph());
        RadioConstraints rc(dm);
        auto l = heuristic_labeling(rc);
        EXPECT_TRUE(validate(rc, l).valid());
    }
}

TEST(ConstructiveOrdering, EvenStartsWithCentresOfFirstPair) {
    const ProductParams p(2, 1);
    auto plan = paper_ordering_even(p, CellIndexing::RowMajor);
    ASSERT_TRUE(plan.is_permutation_of(8));
    EXPECT_EQ(plan.provenance, PlanProvenance::PaperEven);
    // V_1(1) = centre at (0,0); V_3(1) = centre at (1,0).
    EXPECT_EQ(plan.sequence[0], encode({0, 0, 0}, p));
    EXPECT_EQ(plan.sequence[1], encode({1, 0, 0}, p));
    // Then V_1(2), and the complementary V_3(2).
    EXPECT_EQ(plan.sequence[2], encode({0, 0, 1}, p));
    EXPECT_EQ(plan.sequence[3], encode({1, 0, 1}, p));
}

TEST(ConstructiveOrdering, EvenFirstPairIsT1AndT19ForM6) {
    const ProductParams p(6, 4);
    auto layout = ordering_layout(p);
    ASSERT_EQ(layout.pairs.size(), 18u);
    EXPECT_EQ(layout.pairs.front(), (CopyPair{1, 19}));
    auto plan = paper_ordering_even(p, CellIndexing::RowMajor);
    for (std::size_t i = 0; i < 10; ++i) {
        auto c = decode(plan.sequence[i], p);
        EXPECT_EQ(c.col, 0);
        EXPECT_TRUE(c.row == 0 || c.row == 3);
    }
    // Zigzag: A(1), B(1), A(2), B(3), A(4), B(5), then B(2), A(3), B(4), A(5).
    const int expected_star[] = {0, 0, 1, 2, 3, 4, 1, 2, 3, 4};
    const int expected_row[] = {0, 3, 0, 3, 0, 3, 3, 0, 3, 0};
    for (std::size_t i = 0; i < 10; ++i) {
        auto c = decode(plan.sequence[i], p);
        EXPECT_EQ(c.star, expected_star[i]) << i;
        EXPECT_EQ(c.row, expected_row[i]) << i;
    }
}

TEST(ConstructiveOrdering, SecondLabelMatchesFirstStep) {
    // Centre-to-centre across the pair is m/2 apart, so the second label is 3m/2 + 1.
    const ProductParams p(6, 4);
    ProductGraph pg(p);
    DistanceMatrix dm(pg.graph());
    auto plan = paper_ordering_even(p, CellIndexing::RowMajor);
    auto l = consecutive_only_assign(pg.graph(), dm, plan);
    EXPECT_EQ(l.labels[plan.sequence[1]], 10);
}

TEST(ConstructiveOrdering, OddLayout) {
    auto small = ordering_layout(ProductParams(3, 1));
    EXPECT_EQ(small.pairs, (std::vector<CopyPair>{{1, 4}, {2, 5}, {3, 6}}));
    EXPECT_TRUE(small.last_row_pairs.empty());
    EXPECT_EQ(*small.distinguished, (std::array{7, 8, 9}));

    auto mid = ordering_layout(ProductParams(5, 4));
    EXPECT_EQ(mid.pairs.size(), 10u);
    EXPECT_EQ(*mid.distinguished, (std::array{21, 23, 25}));
    EXPECT_EQ(mid.last_row_pairs, (std::vector<CopyPair>{{22, 24}}));

    auto big = ordering_layout(ProductParams(7, 2));
    EXPECT_EQ(big.last_row_pairs, (std::vector<CopyPair>{{44, 48}, {45, 47}}));
    EXPECT_EQ(*big.distinguished, (std::array{43, 46, 49}));
}

TEST(ConstructiveOrdering, ParityErrors) {
    EXPECT_THROW((void)paper_ordering_even(ProductParams(3, 1), CellIndexing::RowMajor), ParityError);
    EXPECT_THROW((void)paper_ordering_odd(ProductParams(4, 1), CellIndexing::RowMajor), ParityError);
    EXPECT_THROW((void)path_class_walks(ProductParams(4, 1), CellIndexing::RowMajor), ParityError);
}

TEST(ConstructiveOrdering, AlwaysPermutations) {
    for (int m = 2; m <= 7; ++m) {
        for (int n = 1; n <= 4; ++n) {
            const ProductParams p(m, n);
            for (auto idx : kAllIndexings) {
                auto plan = p.even() ? paper_ordering_even(p, idx) : paper_ordering_odd(p, idx);
                ASSERT_TRUE(plan.is_permutation_of(p.num_vertices())) << m << "," << n << " " << to_string(idx);
            }
        }
    }
}

TEST(PathClasses, WalkDistancesOnRowMajor) {
    const ProductParams p(5, 4);
    ProductGraph pg(p);
    DistanceMatrix dm(pg.graph());
    auto walks = path_class_walks(p, CellIndexing::RowMajor);
    ASSERT_EQ(walks.first.size(), 2u);
    ASSERT_EQ(walks.third.size(), 2u);
    // a(1) -> b(3): (m-1)/2 + 1; b(3) -> c(2): (m-1)/2 + 2.
    EXPECT_EQ(dm(walks.first[0][0], walks.first[0][1]), 3);
    EXPECT_EQ(dm(walks.first[0][1], walks.first[0][2]), 4);
    // P'_3 joins distinct leaves, (m+3)/2 apart.
    EXPECT_EQ(dm(walks.third[0][0], walks.third[0][1]), 4);
    EXPECT_EQ(dm(walks.third[0][1], walks.third[0][2]), 4);

    // Positions above n+1 are dropped and no P'_3 walks exist below n = 3.
    auto tiny = path_class_walks(ProductParams(3, 1), CellIndexing::RowMajor);
    EXPECT_EQ(tiny.first[0].size(), 2u);
    EXPECT_TRUE(tiny.third.empty());
}

TEST(Construction, GreedyIsValidAndUpperBoundsRn) {
    for (auto [m, n] : {std::pair{2, 1}, {2, 2}}) {
        const ProductParams p(m, n);
        auto c = construct_paper_labeling(p, CellIndexing::RowMajor);
        ProductGraph pg(p);
        DistanceMatrix dm(pg.graph());
        EXPECT_TRUE(validate(pg.graph(), dm, c.greedy).valid());
        EXPECT_GE(c.greedy.span(), exact_rn(pg.graph(), dm).value);
        EXPECT_EQ(c.consecutive_valid, validate(pg.graph(), dm, c.consecutive).valid());
    }
}

TEST(Construction, ConsecutiveSpanIsReportedBesideGreedy) {
    auto c = construct_paper_labeling(ProductParams(4, 2), CellIndexing::RowMajor);
    EXPECT_TRUE(c.plan.is_permutation_of(48));
    EXPECT_GT(c.consecutive.span(), 0);
    EXPECT_GE(c.greedy.span(), c.consecutive.span());
}

} // namespace
} // namespace radiomesh
