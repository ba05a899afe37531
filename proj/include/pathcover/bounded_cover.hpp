#ifndef PATHCOVER_BOUNDED_COVER_HPP
#define PATHCOVER_BOUNDED_COVER_HPP

#include <optional>
#include <vector>

#include "pathcover/certificate.hpp"
#include "pathcover/constants.hpp"
#include "pathcover/detectors.hpp"
#include "pathcover/digraph.hpp"
#include "pathcover/exact.hpp"

namespace pathcover {

struct SearchOptions {
    int cap = 20;                          // instance order cap for exact searches
    std::uint64_t state_budget = 4'000'000;
};

/// Raised when the layer construction contradicts itself, which signals
/// that the supplied path was not a genuine longest induced path.
struct DecompositionError : Error {
    using Error::Error;
};

/// Raised when an attachment's neighbor span on the path is 0 or >= 4.
/// Such a span forces a forbidden two-chain structure in the host.
struct IndexBoundError : Error {
    IndexBoundError(Vertex y_, int first, int last)
        : Error("attachment " + std::to_string(y_) + " spans [" + std::to_string(first) + "," +
                std::to_string(last) + "]; a two-chain forbidden subgraph is present"),
          y(y_), first_idx(first), last_idx(last) {}
    Vertex y;
    int first_idx, last_idx;
};

/// Raised when more blocking indices exist than the threading bound
/// allows; carries the induced pseudo-path that certifies the overflow.
struct BlockingOverflowError : Error {
    BlockingOverflowError(VertexList path, int branches)
        : Error("blocking-index overflow: induced pseudo-path with branch count " +
                std::to_string(branches)),
          pseudo_path(std::move(path)), branch_count(branches) {}
    VertexList pseudo_path;
    int branch_count;
};

struct CliqueCheckError : Error {
    CliqueCheckError(Vertex a_, Vertex b_, const std::string& diagnosis_)
        : Error("clique check failed on {" + std::to_string(a_) + "," + std::to_string(b_) +
                "}: " + diagnosis_),
          a(a_), b(b_), diagnosis(diagnosis_) {}
    Vertex a, b;
    std::string diagnosis;
};

struct ConstructionError : Error {
    ConstructionError(const std::string& step_, const std::string& why)
        : Error("construction failed at " + step_ + ": " + why), step(step_) {}
    std::string step;
};

struct ConditionViolatedError : Error {
    explicit ConditionViolatedError(ConditionReport r)
        : Error("condition " + condition_name(r.condition) + " violated"), report(std::move(r)) {}
    ConditionReport report;
};

/// Longest induced path, exact. Among maximum-order paths the winner is
/// the lexicographically least sequence, each path read from its
/// lesser endpoint. Throws TooLargeError past the cap or state budget.
VertexList longest_induced_path(const Graph& g, const SearchOptions& opts = {});

struct LayerDecomposition {
    VertexList path;                // the supplied longest induced path
    VertexList end_segments;        // protected ends of the path (whole path when short)
    VertexList mid_attachments;     // neighbors of the path middle, clear of the ends
    std::vector<VertexList> shells; // shells[i] holds shell i+1 grown from the ends
};

/// Splits V into the path, its middle attachments and the shells grown
/// outward from the protected ends; asserts the disjoint-union property
/// and that shells stop before index 2*end_margin.
LayerDecomposition layer_decomposition(const Graph& g, const VertexList& path, int end_margin);

/// Arc patterns of a path attachment, ordered by neighbor span, then by
/// the direction of the arcs at the interior neighbors (Fwd: arc leaves
/// the attachment). Blocking: an end arc points the wrong way for
/// threading. Untyped: interior neighbors missing, no class applies.
enum class AttachmentKind {
    Span1,
    Span2Fwd,
    Span2Back,
    Span3FwdFwd,
    Span3BackFwd,
    Span3BackBack,
    Span3FwdBack,
    Blocking,
    Untyped,
};

/// Classical 1..7 numbering of the non-blocking kinds; 0 otherwise.
int attachment_type_index(AttachmentKind k);

struct AttachmentProfile {
    Vertex y = -1;
    int first_idx = -1; // 0-based positions of the first/last neighbor on the path
    int last_idx = -1;
    AttachmentKind kind = AttachmentKind::Untyped;
    int slot = -1;      // position i with arcs path[i] -> y -> path[i+1]; -1 if none
    std::optional<Vertex> blocking_partner; // filled by select_blocking_indices
};

/// Profile of one attachment y against the induced directed path q.
/// Precondition: y has at least one neighbor on q and all of them lie
/// on positions n..l-n-1 (0-based). Throws IndexBoundError when the
/// span bound fails.
AttachmentProfile profile_attachment(const Digraph& d, const VertexList& q, Vertex y, int n);

struct BlockingSet {
    VertexList members;  // one or two attachments
    int first_idx = -1;  // smallest first-neighbor position over members
    int last_idx = -1;   // largest last-neighbor position over members
};

struct BlockingSelection {
    std::vector<BlockingSet> sets;
    std::vector<int> indices; // distinct first positions of blocking sets, ascending
    std::vector<int> spaced;  // greedy subsequence with gaps >= n+5
};

/// Finds all blocking singletons and pairs among the profiles, collects
/// their first positions, and greedily picks spaced representatives.
/// When the index count exceeds n(n+5)/2 the certified overflow
/// pseudo-path is constructed and thrown as BlockingOverflowError.
BlockingSelection select_blocking_indices(const Digraph& d, const VertexList& q,
                                          std::vector<AttachmentProfile>& profiles, int n);

/// Path cover of d[V(q) + attachments] with at most
/// (n-2)n(n+5)/2 + 6(n-2) paths: blocked anchor groups are covered via
/// small independence-bounded covers, everything else is threaded
/// through six interleaved path templates.
PathCoverCertificate cover_attached_path(const Digraph& d, const VertexList& q,
                                         const VertexList& attachments, int n,
                                         const SolverOptions& solver = {});

enum class DropEnd { None, First, Last };

/// Path partition of the same vertex set with at most n(n+5)/2 + 1
/// parts: one spanning path threads every non-blocked attachment
/// through its insertion slot, plus one path per blocked anchor group.
/// drop removes the first or last path vertex from the spanning path.
PathCoverCertificate partition_attached_path(const Digraph& d, const VertexList& q,
                                             const VertexList& attachments, int n, DropEnd drop,
                                             const SolverOptions& solver = {});

struct TheoremOptions {
    SolverOptions solver;
    SearchOptions search;
    DetectorOptions detector;
};

/// End-to-end pipeline: checks the required freeness conditions, then
/// assembles a certified path cover (or partition) whose size is bounded
/// by a constant depending only on n. Throws ConditionViolatedError with
/// the witness when a required condition fails.
PathCoverCertificate certified_cover(const Digraph& d, int n, CoverMode mode,
                                     const TheoremOptions& opts = {});

} // namespace pathcover

#endif
