#ifndef PATHCOVER_DIGRAPH_HPP
#define PATHCOVER_DIGRAPH_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

/// Simple oriented digraph: no loops, no 2-cycles, dense ids 0..order-1.
/// Immutable after construction. The underlying graph and adjacency
/// structures are built once in the constructor and shared on copy.
class Digraph {
public:
    using Arc = std::pair<Vertex, Vertex>;

    Digraph();
    Digraph(int order, std::vector<Arc> arcs);

    /// Arc-list text format: first token is the order, the rest are
    /// "u v" pairs; whitespace and ';' separate tokens, '#' starts a
    /// comment running to end of line. Labels need not be dense: if any
    /// label is >= order the distinct labels are remapped to 0..k-1 in
    /// ascending order (k must not exceed the declared order), and the
    /// original labels are kept in original_labels().
    static Digraph parse(const std::string& text);

    /// Canonical form: order on its own line, then arcs sorted
    /// lexicographically, one per line. parse() inverts it exactly.
    std::string serialize() const;

    int order() const { return order_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int size() const { return static_cast<int>(arcs_.size()); }

    bool has_arc(Vertex u, Vertex v) const { return out_adj_[idx(u, v)]; }
    bool adjacent(Vertex u, Vertex v) const { return out_adj_[idx(u, v)] || out_adj_[idx(v, u)]; }

    const VertexList& out_neighbors(Vertex v) const { return out_[static_cast<size_t>(v)]; }
    const VertexList& in_neighbors(Vertex v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }

    const Graph& underlying() const { return *underlying_; }

    /// Subdigraph induced by S; second component maps new id -> original id.
    std::pair<Digraph, VertexList> induced(std::span<const Vertex> s) const;

    /// Original input labels (new id -> label), empty when ids were dense.
    const std::vector<long long>& original_labels() const { return labels_; }

    bool operator==(const Digraph& other) const {
        return order_ == other.order_ && arcs_ == other.arcs_;
    }

private:
    size_t idx(Vertex u, Vertex v) const {
        return static_cast<size_t>(u) * static_cast<size_t>(order_) + static_cast<size_t>(v);
    }

    int order_ = 0;
    std::vector<Arc> arcs_;                  // sorted
    std::vector<bool> out_adj_;              // order x order
    std::vector<VertexList> out_, in_;
    std::shared_ptr<const Graph> underlying_;
    std::vector<long long> labels_;
};

/// Count of vertices with in-degree 2 or out-degree 2 in the subdigraph
/// induced by seq, which must trace an induced path of the underlying
/// graph in the given order. Throws NotAPseudoPathError otherwise.
int branch_count(const Digraph& d, const VertexList& seq);

/// True when the underlying graph is connected. Throws EmptyGraphError
/// for order 0.
bool is_weakly_connected(const Digraph& d);

/// True when seq is a directed path of d: distinct vertices joined by
/// consecutive arcs. A single vertex counts.
bool is_directed_path(const Digraph& d, const VertexList& seq);

} // namespace pathcover

#endif
