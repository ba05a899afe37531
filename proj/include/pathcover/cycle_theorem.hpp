#ifndef PATHCOVER_CYCLE_THEOREM_HPP
#define PATHCOVER_CYCLE_THEOREM_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pathcover/detectors.hpp"
#include "pathcover/digraph.hpp"
#include "pathcover/exact.hpp"

namespace pathcover {

/// Premise and bound report for the cycle-partition statement: on a
/// weakly connected host free of the transitive tournament whose
/// underlying graph avoids the star and the path, the order (hence the
/// cycle partition number) is bounded through max degree and diameter.
struct CycleTheoremReport {
    int n = 0;
    bool premise_ok = false;
    std::string failure;              // first failed premise, empty when ok
    std::optional<Witness> witness;
    int max_deg = -1;
    int diam = -1;
    mpz_class degree_bound;           // ramsey_upper(2^(n-1)-1, n) - 1
    mpz_class order_bound;            // degree_bound^(n-2)
    bool bounds_ok = false;           // chained degree/diameter/order checks
    std::optional<int> cp_value;      // exact, when the order fits the cap
};

CycleTheoremReport check_cycle_theorem(const Digraph& d, int n, const SolverOptions& opts = {});

struct SmallVerificationSummary {
    int n = 0;
    int max_order = 0;
    long long examined = 0;        // labeled oriented graphs enumerated
    int survivors_labeled = 0;     // premise-passing, labeled
    int survivors_iso = 0;         // distinct up to isomorphism
    int max_survivor_order = 0;
    mpz_class order_bound;
    bool all_within_bound = true;  // every survivor: order and cp within bound
    std::vector<std::string> survivor_forms; // canonical arc-list texts
};

/// Enumerates every oriented graph up to max_order, filters by the
/// premise, and confirms the order and cycle-partition bounds on every
/// survivor. Isomorphism filtering by adjacency-matrix minimization.
SmallVerificationSummary exhaustive_small_verification(int n, int max_order);

} // namespace pathcover

#endif
