#ifndef PATHCOVER_DETECTORS_HPP
#define PATHCOVER_DETECTORS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pathcover/digraph.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph.hpp"

namespace pathcover {

struct DetectorOptions {
    std::uint64_t state_budget = 4'000'000; // pseudo-path scan states
};

/// Induced-subgraph search: the returned list maps pattern vertex i to
/// host vertex list[i]; the image induces a copy of the pattern. The
/// search is exhaustive, so nullopt certifies freeness. The first
/// witness in lexicographic image order is returned.
std::optional<VertexList> find_induced_graph(const Graph& host, const Graph& pattern);

/// Arc-direction-preserving variant for digraph patterns.
std::optional<VertexList> find_induced_digraph(const Digraph& host, const Digraph& pattern);

enum class Condition { D1, DPrime1, D2, D3, Sec4Premise };

std::string condition_name(Condition c);
Condition condition_from_name(const std::string& name);

struct Witness {
    std::string pattern;             // family tag or "pseudo-path"
    std::optional<FamilySpec> spec;
    VertexList host_vertices;
    int branch_detail = -1;          // branch count, for pseudo-path witnesses
};

enum class CheckStatus { Satisfied, Violated, Inconclusive };

struct ConditionReport {
    Condition condition = Condition::D1;
    int n = 0;
    CheckStatus status = CheckStatus::Satisfied;
    std::optional<Witness> witness;
    int max_branch = -1; // filled for D3 when the scan ran to completion

    bool satisfied() const { return status == CheckStatus::Satisfied; }
};

/// Runs the forbidden-structure battery for the named condition against
/// d (or its underlying graph). For D3 the scan enumerates induced
/// pseudo-paths exactly and may report Inconclusive if the state budget
/// runs out before a verdict.
ConditionReport check_condition(const Digraph& d, Condition cond, int n,
                                const DetectorOptions& opts = {});

struct PseudoPathScan {
    int max_branch = 0;
    VertexList witness; // maximizing induced pseudo-path, in path order
    bool complete = true;
};

/// Exact maximum branch count over all induced pseudo-paths, found by
/// growing vertex sets at both endpoints. States are deduplicated by
/// vertex set: the set alone determines the path and its branch count.
PseudoPathScan max_pseudo_path_branch(const Digraph& d, const DetectorOptions& opts = {});

/// Same scan, stopping at the first pseudo-path with branch count
/// exceeding `stop_above` (when >= 0).
PseudoPathScan scan_pseudo_paths(const Digraph& d, int stop_above,
                                 const DetectorOptions& opts = {});

} // namespace pathcover

#endif
