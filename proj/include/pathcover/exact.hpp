#ifndef PATHCOVER_EXACT_HPP
#define PATHCOVER_EXACT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pathcover/certificate.hpp"
#include "pathcover/digraph.hpp"

namespace pathcover {

/// Exceeding cap (or the internal state budget) raises TooLargeError;
/// neither is ever silently truncated.
struct SolverOptions {
    int cap = 20;
    std::size_t state_budget = 8'000'000;
};

struct AlphaResult {
    int size = 0;
    VertexList witness;
};

/// Exact maximum independent set by branch and bound (order <= 64).
AlphaResult alpha_exact(const Graph& g);

/// All vertex sets traceable by a single directed path, as bitmasks,
/// sorted ascending. Reached by forward extension from singletons, so
/// the work scales with the number of traceable sets, not 2^order.
std::vector<std::uint64_t> traceable_sets(const Digraph& d, const SolverOptions& opts = {});

std::optional<VertexList> hamiltonian_directed_path(const Digraph& d,
                                                    const SolverOptions& opts = {});

/// Exact minimum path cover (paths may overlap).
std::pair<int, PathCoverCertificate> pc_exact(const Digraph& d, const SolverOptions& opts = {});

/// Exact minimum path partition (paths pairwise disjoint).
std::pair<int, PathCoverCertificate> pp_exact(const Digraph& d, const SolverOptions& opts = {});

/// A path partition of size at most alpha(underlying(d)): greedy linking
/// and endpoint exchanges, with pp_exact as a fallback when the
/// improvement loop stalls above the independence number.
PathCoverCertificate gallai_milgram_partition(const Digraph& d, const SolverOptions& opts = {});

/// Exact minimum cycle cover / partition where a unit is a directed
/// cycle or a weakly connected subdigraph on at most two vertices.
std::pair<int, CycleCoverCertificate> cc_exact(const Digraph& d, const SolverOptions& opts = {});
std::pair<int, CycleCoverCertificate> cp_exact(const Digraph& d, const SolverOptions& opts = {});

/// Spanning directed path of a digraph whose underlying graph is
/// complete, by insertion; O(order^2) and independent of the solver cap.
/// Throws PreconditionError when some pair is non-adjacent.
VertexList tournament_spanning_path(const Digraph& d);

} // namespace pathcover

#endif
