#include "pathcover/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "pathcover/text_format.hpp"

namespace pathcover {

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
    if (order < 0) throw InvalidParameterError("negative order");
    for (auto& [u, v] : edges) {
        if (u == v) throw SelfLoopError(u);
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw VertexRangeError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(static_cast<size_t>(order_) * static_cast<size_t>(order_), false);
    nbrs_.assign(static_cast<size_t>(order_), {});
    for (const auto& [u, v] : edges_) {
        adj_[idx(u, v)] = adj_[idx(v, u)] = true;
        nbrs_[static_cast<size_t>(u)].push_back(v);
        nbrs_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& lst : nbrs_) std::sort(lst.begin(), lst.end());
}

Graph Graph::parse(const std::string& text) {
    auto doc = detail::parse_pair_document(text);
    std::vector<Edge> edges;
    edges.reserve(doc.pairs.size());
    for (const auto& [u, v] : doc.pairs)
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(doc.order, std::move(edges));
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << order_ << '\n';
    for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

std::pair<Graph, VertexList> Graph::induced(std::span<const Vertex> s) const {
    VertexList keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v < 0 || v >= order_) throw VertexRangeError("induced: vertex out of range");

    std::vector<Vertex> pos(static_cast<size_t>(order_), -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[static_cast<size_t>(keep[i])] = static_cast<Vertex>(i);

    std::vector<Edge> sub;
    for (const auto& [u, v] : edges_)
        if (pos[static_cast<size_t>(u)] >= 0 && pos[static_cast<size_t>(v)] >= 0)
            sub.emplace_back(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    return {Graph(static_cast<int>(keep.size()), std::move(sub)), keep};
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) throw EmptyGraphError("connectivity undefined for order 0");
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == g.order();
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

int diameter(const Graph& g) {
    if (g.order() == 0) throw PreconditionError("diameter undefined for order 0");
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(static_cast<size_t>(g.order()), -1);
        std::queue<Vertex> q;
        q.push(s);
        dist[static_cast<size_t>(s)] = 0;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v))
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
        }
        for (int dv : dist) {
            if (dv < 0) throw PreconditionError("diameter undefined for disconnected graph");
            best = std::max(best, dv);
        }
    }
    return best;
}

} // namespace pathcover
