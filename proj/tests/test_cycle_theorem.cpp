#include <doctest.h>

#include "pathcover/cycle_theorem.hpp"
#include "pathcover/families.hpp"

using namespace pathcover;

namespace {

Digraph directed_cycle(int order) {
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i < order; ++i) arcs.emplace_back(i, (i + 1) % order);
    return Digraph(order, std::move(arcs));
}

Digraph directed_path(int order) {
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i + 1 < order; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(order, std::move(arcs));
}

} // namespace

TEST_CASE("cycle theorem report on the staple instances") {
    auto ok = check_cycle_theorem(directed_cycle(3), 3);
    CHECK(ok.premise_ok);
    CHECK(ok.degree_bound == 5); // exhaustively certified threshold minus one
    CHECK(ok.order_bound == 5);
    CHECK(ok.bounds_ok);
    REQUIRE(ok.cp_value.has_value());
    CHECK(*ok.cp_value == 1);

    auto t4 = check_cycle_theorem(generate_digraph(Family::TransTournament, 4), 3);
    CHECK_FALSE(t4.premise_ok);
    REQUIRE(t4.witness.has_value());
    CHECK(t4.witness->pattern == "tt(n=3)");

    auto p6 = check_cycle_theorem(directed_path(6), 3);
    CHECK_FALSE(p6.premise_ok);
    CHECK(p6.failure.find("path") != std::string::npos);
}

TEST_CASE("exhaustive verification at n=3 finds only tiny survivors") {
    auto sum = exhaustive_small_verification(3, 4);
    CHECK(sum.examined == 1 + 3 + 27 + 729);
    CHECK(sum.survivors_labeled > 0);
    CHECK(sum.max_survivor_order == 3); // the directed triangle
    CHECK(sum.all_within_bound);
    CHECK(sum.order_bound == 5);
    // Survivors up to isomorphism: single vertex, single arc, triangle.
    CHECK(sum.survivors_iso == 3);
}

TEST_CASE("exhaustive verification at n=2 collapses to a point") {
    // A single arc already realizes the order-2 transitive tournament,
    // so only the one-vertex digraph passes.
    auto sum = exhaustive_small_verification(2, 4);
    CHECK(sum.survivors_iso == 1);
    CHECK(sum.max_survivor_order == 1);
    CHECK(sum.all_within_bound);
}

TEST_CASE("premise bounds are tight enough for the directed triangle family") {
    // Orientations of small complete graphs: the triangle passes, any
    // tournament on 4+ vertices contains the transitive witness.
    auto r3 = check_cycle_theorem(directed_cycle(3), 3);
    CHECK(r3.max_deg == 2);
    CHECK(r3.diam == 1);
    auto r1 = check_cycle_theorem(Digraph(1, {}), 3);
    CHECK(r1.premise_ok);
    CHECK(r1.bounds_ok);
    CHECK(*r1.cp_value == 1);
}
