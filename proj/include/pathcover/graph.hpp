#ifndef PATHCOVER_GRAPH_HPP
#define PATHCOVER_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathcover/errors.hpp"

namespace pathcover {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Simple undirected graph over dense vertex ids 0..order-1.
/// Immutable after construction; adjacency lookups are O(1).
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;
    Graph(int order, std::vector<Edge> edges);

    static Graph parse(const std::string& text);
    std::string serialize() const;

    int order() const { return order_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex u, Vertex v) const { return adj_[idx(u, v)]; }
    const VertexList& neighbors(Vertex v) const { return nbrs_[static_cast<size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(nbrs_[static_cast<size_t>(v)].size()); }

    /// Subgraph induced by S (need not be sorted); second component maps
    /// new id -> original id, in ascending original order.
    std::pair<Graph, VertexList> induced(std::span<const Vertex> s) const;

    bool operator==(const Graph& other) const {
        return order_ == other.order_ && edges_ == other.edges_;
    }

private:
    size_t idx(Vertex u, Vertex v) const {
        return static_cast<size_t>(u) * static_cast<size_t>(order_) + static_cast<size_t>(v);
    }

    int order_ = 0;
    std::vector<Edge> edges_;        // canonical: u < v, sorted
    std::vector<bool> adj_;          // order x order matrix
    std::vector<VertexList> nbrs_;   // sorted neighbor lists
};

bool is_connected(const Graph& g);

/// Max degree; 0 for edgeless graphs.
int max_degree(const Graph& g);

/// Diameter of a connected graph (0 for a single vertex).
/// Throws PreconditionError when g is disconnected or empty.
int diameter(const Graph& g);

} // namespace pathcover

#endif
