#ifndef PATHCOVER_EXPERIMENTS_HPP
#define PATHCOVER_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathcover/exact.hpp"

namespace pathcover {

struct TrialRecord {
    std::string name;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string note;
};

struct ExperimentReport {
    std::string kind;
    bool pass = true;
    int trials = 0;
    int failures = 0;
    std::vector<TrialRecord> records; // failures always recorded; passes summarized
    std::map<std::string, std::string> stats;
};

nlohmann::ordered_json to_json(const ExperimentReport& rep);

struct ExperimentConfig {
    int trials = 0;          // 0 = kind-specific default
    std::uint64_t seed = 1;
    SolverOptions solver;
    bool keep_pass_records = false;
};

/// pc <= pp <= alpha over seeded random oriented graphs, plus the
/// greedy partition contract (size <= alpha) on every instance.
ExperimentReport run_chain_law(const ExperimentConfig& cfg);

/// pc = pp = branch count + 1 on generated pseudo-paths.
ExperimentReport run_pseudo_path_law(const ExperimentConfig& cfg);

/// Condition-filtered random instances through the full pipeline:
/// certificate valid, within its claimed bound, and >= the exact value.
ExperimentReport run_theorem_e2e(const ExperimentConfig& cfg);

/// Constructed long-path instances with attachments of every kind,
/// with and without blocking singletons, in both modes.
ExperimentReport run_attachment_battery(const ExperimentConfig& cfg);

/// Exact cycle partition numbers of transitive tournaments and the
/// exhaustive small-order premise verification.
ExperimentReport run_cycle_small(const ExperimentConfig& cfg);

/// Dispatch by kind name: chain-law, pseudo-path-law, theorem-e2e,
/// attachment-battery, cycle-small.
ExperimentReport run_experiment(const std::string& kind, const ExperimentConfig& cfg);

/// Long directed path with attachments used by the battery and tests.
/// Attachment descriptors: (first anchor position, kind). Kinds follow
/// AttachmentKind plus two blocking variants.
enum class BatteryAttachment {
    T1, T2, T3, T4, T5, T6, T7,
    BlockingFirst, // arc into the first anchor reversed
    BlockingLast,  // arc from the last anchor reversed
};

Digraph make_attached_instance(int path_len, int n,
                               const std::vector<std::pair<int, BatteryAttachment>>& attachments,
                               VertexList* path_out, VertexList* attachment_ids_out);

} // namespace pathcover

#endif
