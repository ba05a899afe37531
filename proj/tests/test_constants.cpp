#include <doctest.h>

#include "pathcover/constants.hpp"

using namespace pathcover;

TEST_CASE("ramsey upper bounds: trivial rows are exact") {
    CHECK(ramsey_upper(1, 7).value == 1);
    CHECK(ramsey_upper(1, 7).exact);
    CHECK(ramsey_upper(2, 9).value == 9);
    CHECK(ramsey_upper(2, 9).exact);
    CHECK(ramsey_upper(5, 2).value == 5);
    CHECK(ramsey_upper(5, 2).exact);
}

TEST_CASE("the exhaustive oracle certifies the 6-vertex threshold") {
    CHECK(ramsey_holds_at_order(3, 3, 6));
    CHECK_FALSE(ramsey_holds_at_order(3, 3, 5)); // the 5-cycle escapes
    CHECK(ramsey_exact_verified(3, 3, 6));
    auto r33 = ramsey_upper(3, 3);
    CHECK(r33.value == 6);
    CHECK(r33.exact);
}

TEST_CASE("binomial fallback dominates known small values") {
    // C(s+t-2, s-1) is an upper bound: spot-check against the classical
    // values R(3,4)=9, R(3,5)=14, R(4,4)=18.
    CHECK(ramsey_upper(3, 4).value >= 9);
    CHECK(ramsey_upper(3, 5).value >= 14);
    CHECK(ramsey_upper(4, 4).value >= 18);
    CHECK(ramsey_upper(3, 5).value == 15); // C(6,2)
    CHECK_FALSE(ramsey_upper(3, 5).exact);

    // Large second argument flows through big integers.
    mpz_class t("1000000000000");
    auto r = ramsey_upper(3, t);
    CHECK(r.value == (t + 1) * t / 2);
}

TEST_CASE("derived constants at n=3") {
    ConstantsTable t = constants_for(3);
    CHECK(t.end_margin == 3);
    REQUIRE(t.alpha.size() == 6);
    CHECK(t.alpha[0] == 4);
    CHECK(t.alpha[1] == 29);  // 2*C(6,2) - 1
    CHECK(t.alpha[2] == 929); // 2*C(31,2) - 1
    CHECK(t.attached_cover_bound == 18);
    CHECK(t.attached_partition_bound == 13);
    CHECK(t.hub_bound == 30);
    CHECK(t.core_cover_bound == 102);
    CHECK(t.core_partition_bound == 82);
    CHECK(t.cover_total == t.shell_bound + 102);
    // The shell sum dwarfs 64-bit range already at n=3.
    mpz_class limit("18446744073709551615");
    CHECK(t.shell_bound > limit);
}

TEST_CASE("derived constants at n=2 and parameter validation") {
    ConstantsTable t = constants_for(2);
    CHECK(t.end_margin == 2);
    CHECK(t.alpha[0] == 2);
    CHECK(t.attached_cover_bound == 0);
    CHECK_THROWS_AS(constants_for(1), InvalidParameterError);
}

TEST_CASE("alpha recursion is monotone in the ramsey entries") {
    for (int n = 3; n <= 5; ++n) {
        ConstantsTable t = constants_for(n);
        for (size_t i = 1; i < t.alpha.size(); ++i) CHECK(t.alpha[i] > t.alpha[i - 1]);
    }
}

TEST_CASE("constants dump carries every field") {
    auto m = constants_to_map(constants_for(3));
    CHECK(m.count("end_margin"));
    CHECK(m.count("alpha_5"));
    CHECK(m.at("core_cover_bound") == "102");
    CHECK(m.at("attached_partition_bound") == "13");
}
