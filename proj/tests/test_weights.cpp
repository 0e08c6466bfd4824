#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "satcr/weights.hpp"

using namespace satcr;
using namespace satcr::lie;

namespace {

Weight fw(int rank, int i, int v = 1) {
    Weight w(size_t(rank), 0);
    w[size_t(i)] = v;
    return w;
}

// closed-form dimension oracles for rank <= 2
long long dim_a1(int n) { return n + 1; }
long long dim_a2(int a, int b) {
    return (long long)(a + 1) * (b + 1) * (a + b + 2) / 2;
}

std::multiset<Weight> factor_multiset(const DecompositionResult& d) {
    return std::multiset<Weight>(d.factors.begin(), d.factors.end());
}

} // namespace

TEST_CASE("Weyl dimension formula against closed forms and table values") {
    auto a1 = build_root_system('A', 1);
    for (int n = 0; n <= 10; ++n) CHECK(weyl_dim(a1, {n}) == dim_a1(n));

    auto a2 = build_root_system('A', 2);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) CHECK(weyl_dim(a2, {a, b}) == dim_a2(a, b));

    auto g2 = build_root_system('G', 2);
    CHECK(weyl_dim(g2, {0, 1}) == 7);
    CHECK(weyl_dim(g2, {1, 0}) == 14);
    CHECK(weyl_dim(g2, {0, 2}) == 27);

    auto e8 = build_root_system('E', 8);
    Weight adj8 = e8.root_to_weight(e8.highest_root());
    CHECK(weyl_dim(e8, adj8) == 248);

    auto f4 = build_root_system('F', 4);
    Weight adj4 = f4.root_to_weight(f4.highest_root());
    CHECK(weyl_dim(f4, adj4) == 52);

    CHECK_THROWS_AS(weyl_dim(a2, {-1, 0}), Error);
    CHECK_THROWS_AS(weyl_dim(a2, {1}), Error);
}

TEST_CASE("minimal fundamental dimensions match the series tables") {
    CHECK(min_fundamental_dim(build_root_system('A', 3)) == 4);
    CHECK(min_fundamental_dim(build_root_system('B', 4)) == 9);
    CHECK(min_fundamental_dim(build_root_system('C', 3)) == 6);
    CHECK(min_fundamental_dim(build_root_system('D', 5)) == 10);
    CHECK(min_fundamental_dim(build_root_system('G', 2)) == 7);
    CHECK(min_fundamental_dim(build_root_system('F', 4)) == 26);
    CHECK(min_fundamental_dim(build_root_system('E', 6)) == 27);
    CHECK(min_fundamental_dim(build_root_system('E', 7)) == 56);
    CHECK(min_fundamental_dim(build_root_system('E', 8)) == 248);
}

TEST_CASE("weight multisets: totals, known diagrams, Weyl invariance") {
    auto a1 = build_root_system('A', 1);
    auto w = weyl_weights(a1, {2});
    CHECK(w.entries == std::map<Weight, long long>{{{2}, 1}, {{0}, 1}, {{-2}, 1}});

    auto a2 = build_root_system('A', 2);
    auto adj = weyl_weights(a2, {1, 1});
    CHECK(adj.total() == 8);
    CHECK(adj.entries.at({0, 0}) == 2); // Cartan contributes the zero weight twice
    CHECK(adj.entries.at({1, 1}) == 1);
    CHECK(adj.entries.size() == 7); // 6 roots + zero

    auto g2 = build_root_system('G', 2);
    auto seven = weyl_weights(g2, {0, 1});
    CHECK(seven.total() == 7);
    CHECK(seven.entries.size() == 7);
    CHECK(seven.entries.at({0, 0}) == 1);
    // nonzero weights are exactly the short roots
    for (const auto& [wt, m] : seven.entries) {
        if (wt == Weight{0, 0}) continue;
        CHECK(m == 1);
        auto rc = weight_root_coords(g2, wt);
        REQUIRE(rc.has_value());
        RootCoords r{int((*rc)[0]), int((*rc)[1])};
        CHECK(g2.is_root(r));
        CHECK(g2.half_norm(r) == 1);
    }

    auto g2adj = weyl_weights(g2, {1, 0});
    CHECK(g2adj.total() == 14);
    CHECK(g2adj.entries.at({0, 0}) == 2);

    auto f4 = build_root_system('F', 4);
    auto f26 = weyl_weights(f4, fw(4, 3));
    CHECK(f26.total() == 26);
    CHECK(f26.entries.at(Weight{0, 0, 0, 0}) == 2); // 24 short roots + double zero

    auto e6 = build_root_system('E', 6);
    auto m27 = weyl_weights(e6, fw(6, min_fundamental_index(e6)));
    CHECK(m27.total() == 27);
    CHECK(m27.entries.size() == 27); // minuscule: single orbit, all multiplicity 1
    for (const auto& [wt, m] : m27.entries) CHECK(m == 1);

    // Weyl invariance spot checks on a bigger module
    auto c3 = build_root_system('C', 3);
    auto big = weyl_weights(c3, {1, 1, 0});
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, c3.rank - 1);
    for (const auto& [wt, m] : big.entries) {
        Weight v = wt;
        for (int t = 0; t < 6; ++t) v = c3.reflect_weight(v, pick(rng));
        CHECK(big.entries.at(v) == m);
    }
    CHECK(big.total() == weyl_dim(c3, {1, 1, 0}));
}

TEST_CASE("tensor square weight multisets") {
    auto a1 = build_root_system('A', 1);
    auto gl2 = tensor_square_weights(a1, {1});
    CHECK(gl2.entries == std::map<Weight, long long>{{{2}, 1}, {{0}, 2}, {{-2}, 1}});

    auto g2 = build_root_system('G', 2);
    CHECK(tensor_square_weights(g2, {0, 1}).total() == 49);

    auto e7 = build_root_system('E', 7);
    CHECK(tensor_square_weights(e7, fw(7, min_fundamental_index(e7))).total() == 3136);

    CHECK_THROWS_AS(tensor_square_weights(build_root_system('A', 7), {1, 0, 1, 0, 1, 0, 1}, 100000),
                    Error);
}

TEST_CASE("decomposition by highest-weight subtraction") {
    auto a1 = build_root_system('A', 1);
    auto gl2 = tensor_square_weights(a1, {1});
    auto d0 = decompose_by_subtraction(gl2, 0, builtin_deficits());
    CHECK(factor_multiset(d0) == std::multiset<Weight>{{0}, {2}});
    CHECK(d0.deficits_used.empty());

    auto a2 = build_root_system('A', 2);
    auto gl3 = tensor_square_weights(a2, {1, 0});
    auto d3 = decompose_by_subtraction(gl3, 0, builtin_deficits());
    CHECK(factor_multiset(d3) == std::multiset<Weight>{{0, 0}, {1, 1}});

    auto g2 = build_root_system('G', 2);
    auto t49 = tensor_square_weights(g2, {0, 1});
    auto d5 = decompose_by_subtraction(t49, 5, builtin_deficits());
    CHECK(factor_multiset(d5) ==
          std::multiset<Weight>{{0, 0}, {1, 0}, {0, 1}, {0, 2}});
    CHECK(d5.deficits_used.empty());
    // factor Weyl dimensions account for every weight
    long long sum = 0;
    for (const auto& f : d5.factors) sum += weyl_dim(g2, f);
    CHECK(sum == 49);

    auto d7 = decompose_by_subtraction(t49, 7, builtin_deficits());
    CHECK(factor_multiset(d7) ==
          std::multiset<Weight>{{0, 0}, {0, 0}, {1, 0}, {0, 1}, {0, 2}});
    REQUIRE(d7.deficits_used.size() == 1);
    CHECK(d7.deficits_used[0].p == 7);
    CHECK(d7.deficits_used[0].highest == Weight{0, 2});
    CHECK(factor_dim(g2, {0, 2}, 7, builtin_deficits()) == 26);
    CHECK(factor_dim(g2, {0, 2}, 5, builtin_deficits()) == 27);

    // order independence: flipping the tie-break changes nothing
    auto d5low = decompose_by_subtraction(t49, 5, builtin_deficits(), true);
    CHECK(factor_multiset(d5low) == factor_multiset(d5));
    auto d3low = decompose_by_subtraction(gl3, 0, builtin_deficits(), true);
    CHECK(factor_multiset(d3low) == factor_multiset(d3));
}

TEST_CASE("adjoint factor appears exactly once in the minimal tensor square") {
    CHECK(adjoint_multiplicity_in_tensor_square(build_root_system('G', 2), {0, 1}, 5) == 1);
    CHECK(adjoint_multiplicity_in_tensor_square(build_root_system('G', 2), {0, 1}, 7) == 1);

    auto f4 = build_root_system('F', 4);
    CHECK(adjoint_multiplicity_in_tensor_square(f4, fw(4, min_fundamental_index(f4)), 5) == 1);

    auto e6 = build_root_system('E', 6);
    CHECK(adjoint_multiplicity_in_tensor_square(e6, fw(6, min_fundamental_index(e6)), 5) == 1);
}

TEST_CASE("weight/root coordinate conversion round trips") {
    auto d4 = build_root_system('D', 4);
    for (const auto& r : d4.positive_roots) {
        auto back = weight_root_coords(d4, d4.root_to_weight(r));
        REQUIRE(back.has_value());
        for (int i = 0; i < d4.rank; ++i) CHECK((*back)[size_t(i)] == r[size_t(i)]);
    }
    // fundamental weights of D4 are not in the root lattice
    CHECK_FALSE(weight_root_coords(d4, fw(4, 0)).has_value());
    // but E8 fundamental weights are
    auto e8 = build_root_system('E', 8);
    CHECK(weight_root_coords(e8, fw(8, 0)).has_value());
}
