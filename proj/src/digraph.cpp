#include "pathcover/digraph.hpp"

#include <algorithm>
#include <sstream>

#include "pathcover/text_format.hpp"

namespace pathcover {

Digraph::Digraph() : Digraph(0, {}) {}

Digraph::Digraph(int order, std::vector<Arc> arcs) : order_(order) {
    if (order < 0) throw InvalidParameterError("negative order");
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    out_adj_.assign(static_cast<size_t>(order_) * static_cast<size_t>(order_), false);
    for (const auto& [u, v] : arcs) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw VertexRangeError("arc endpoint out of range");
        if (u == v) throw SelfLoopError(u);
        out_adj_[idx(u, v)] = true;
    }
    for (const auto& [u, v] : arcs)
        if (out_adj_[idx(v, u)]) throw TwoCycleError(std::min(u, v), std::max(u, v));

    arcs_ = std::move(arcs);
    out_.assign(static_cast<size_t>(order_), {});
    in_.assign(static_cast<size_t>(order_), {});
    std::vector<Graph::Edge> edges;
    edges.reserve(arcs_.size());
    for (const auto& [u, v] : arcs_) {
        out_[static_cast<size_t>(u)].push_back(v);
        in_[static_cast<size_t>(v)].push_back(u);
        edges.emplace_back(u, v);
    }
    for (auto& lst : out_) std::sort(lst.begin(), lst.end());
    for (auto& lst : in_) std::sort(lst.begin(), lst.end());
    underlying_ = std::make_shared<const Graph>(order_, std::move(edges));
}

Digraph Digraph::parse(const std::string& text) {
    auto doc = detail::parse_pair_document(text);
    std::vector<Arc> arcs;
    arcs.reserve(doc.pairs.size());
    for (const auto& [u, v] : doc.pairs)
        arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    Digraph d(doc.order, std::move(arcs));
    d.labels_ = std::move(doc.labels);
    return d;
}

std::string Digraph::serialize() const {
    std::ostringstream out;
    out << order_ << '\n';
    for (const auto& [u, v] : arcs_) out << u << ' ' << v << '\n';
    return out.str();
}

std::pair<Digraph, VertexList> Digraph::induced(std::span<const Vertex> s) const {
    VertexList keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v < 0 || v >= order_) throw VertexRangeError("induced: vertex out of range");

    std::vector<Vertex> pos(static_cast<size_t>(order_), -1);
    for (size_t i = 0; i < keep.size(); ++i) pos[static_cast<size_t>(keep[i])] = static_cast<Vertex>(i);

    std::vector<Arc> sub;
    for (const auto& [u, v] : arcs_)
        if (pos[static_cast<size_t>(u)] >= 0 && pos[static_cast<size_t>(v)] >= 0)
            sub.emplace_back(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
    return {Digraph(static_cast<int>(keep.size()), std::move(sub)), keep};
}

int branch_count(const Digraph& d, const VertexList& seq) {
    const size_t k = seq.size();
    if (k == 0) throw NotAPseudoPathError("empty sequence");
    std::vector<bool> used(static_cast<size_t>(d.order()), false);
    for (Vertex v : seq) {
        if (v < 0 || v >= d.order()) throw VertexRangeError("sequence vertex out of range");
        if (used[static_cast<size_t>(v)]) throw NotAPseudoPathError("repeated vertex");
        used[static_cast<size_t>(v)] = true;
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            bool adj = d.adjacent(seq[i], seq[j]);
            if (j == i + 1 && !adj)
                throw NotAPseudoPathError("consecutive vertices not adjacent");
            if (j > i + 1 && adj)
                throw NotAPseudoPathError("chord between non-consecutive vertices");
        }

    int count = 0;
    for (size_t i = 0; i < k; ++i) {
        int in = 0, out = 0;
        if (i > 0) (d.has_arc(seq[i - 1], seq[i]) ? in : out) += 1;
        if (i + 1 < k) (d.has_arc(seq[i], seq[i + 1]) ? out : in) += 1;
        if (in == 2 || out == 2) ++count;
    }
    return count;
}

bool is_weakly_connected(const Digraph& d) {
    if (d.order() == 0) throw EmptyGraphError("connectivity undefined for order 0");
    return is_connected(d.underlying());
}

bool is_directed_path(const Digraph& d, const VertexList& seq) {
    if (seq.empty()) return false;
    std::vector<bool> used(static_cast<size_t>(d.order()), false);
    for (Vertex v : seq) {
        if (v < 0 || v >= d.order()) return false;
        if (used[static_cast<size_t>(v)]) return false;
        used[static_cast<size_t>(v)] = true;
    }
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!d.has_arc(seq[i], seq[i + 1])) return false;
    return true;
}

} // namespace pathcover
