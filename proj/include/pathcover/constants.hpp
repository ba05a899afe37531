#ifndef PATHCOVER_CONSTANTS_HPP
#define PATHCOVER_CONSTANTS_HPP

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pathcover/errors.hpp"

namespace pathcover {

struct RamseyBound {
    mpz_class value;
    bool exact = false; // certified by the exhaustive oracle (or trivially forced)
};

/// Certified upper bound on the Ramsey number R(s, t). Exact for the
/// trivially forced entries (s or t <= 2) and for (3,3), which the
/// exhaustive 2-coloring oracle verifies once per process; otherwise the
/// binomial bound C(s+t-2, s-1). Monotone: never below the true value.
RamseyBound ramsey_upper(int s, const mpz_class& t);

/// Exhaustive oracle: true when every graph of the given order contains
/// a clique of size s or an independent set of size t. Enumerates all
/// 2^C(order,2) graphs; keep order small.
bool ramsey_holds_at_order(int s, int t, int order);

/// Verifies R(s, t) == claimed by exhaustive enumeration at orders
/// claimed and claimed-1.
bool ramsey_exact_verified(int s, int t, int claimed);

/// Every derived constant the bounded-cover pipeline quotes. All values
/// are evaluated with big integers; the shell bounds blow past native
/// range already for n = 3.
struct ConstantsTable {
    int n = 0;
    int end_margin = 0;                      // length of the protected path ends
    std::vector<mpz_class> alpha;            // independence bounds per shell, index 0..2*end_margin-1
    std::vector<bool> alpha_exact_entries;   // whether the Ramsey entry behind alpha[i] was exact
    long long attached_cover_bound = 0;      // (n-2)n(n+5)/2 + 6(n-2)
    long long attached_partition_bound = 0;  // n(n+5)/2 + 1
    long long hub_bound = 0;                 // n(2n-1)(n-1)
    long long core_cover_bound = 0;          // hub + (n+1) * attached cover bound
    long long core_partition_bound = 0;      // hub + (n+1) * attached partition bound
    mpz_class shell_bound;                   // sum of alpha[1..2*end_margin-1]
    mpz_class cover_total;                   // shell + core (cover)
    mpz_class partition_total;               // shell + core (partition)
};

ConstantsTable constants_for(int n);

/// Flat dump for certificate embedding; large values as decimal strings.
std::map<std::string, std::string> constants_to_map(const ConstantsTable& t);

} // namespace pathcover

#endif
