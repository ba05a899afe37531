#include "pathcover/families.hpp"

#include <algorithm>
#include <random>

namespace pathcover {

namespace {

using Edge = Graph::Edge;
using Arc = Digraph::Arc;

void require(bool ok, const std::string& msg) {
    if (!ok) throw InvalidParameterError(msg);
}

// Shared index layout for the F families (order 2n+2):
//   0..n-1   far chain, outermost first (chain runs toward the hub)
//   n        hub x_1
//   n+1      companion x_2
//   n+2..2n+1 near chain, innermost first
// The D families use the same layout without x_2 (order 2n+1, the near
// chain starts at n+1).

std::vector<Edge> f_family_edges(Family f, int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);                  // y-chain
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(n + 2 + i, n + 3 + i);      // z-chain
    const int y1 = n - 1, x1 = n, x2 = n + 1, z1 = n + 2;
    if (f == Family::F1 || f == Family::F2) {
        e.emplace_back(x1, x2);
        e.emplace_back(y1, x1);
        e.emplace_back(x1, z1);
    } else {
        e.emplace_back(y1, x1);
        e.emplace_back(x1, z1);
        e.emplace_back(y1, x2);
        e.emplace_back(x2, z1);
    }
    if (f == Family::F2 || f == Family::F4) e.emplace_back(y1, z1);
    return e;
}

std::vector<Arc> d_family_arcs(Family f, int n) {
    std::vector<Arc> a;
    for (int i = 0; i + 1 < n; ++i) a.emplace_back(i, i + 1);                  // toward y_1
    for (int i = 0; i + 1 < n; ++i) a.emplace_back(n + 1 + i, n + 2 + i);      // away from z_1
    const int y1 = n - 1, x1 = n, z1 = n + 1;
    a.emplace_back(f == Family::D3 ? Arc{y1, x1} : Arc{x1, y1});
    a.emplace_back(y1, z1);
    a.emplace_back(f == Family::D2 ? Arc{x1, z1} : Arc{z1, x1});
    return a;
}

} // namespace

bool family_is_directed(Family f) {
    switch (f) {
        case Family::D1:
        case Family::D2:
        case Family::D3:
        case Family::TransTournament:
        case Family::Zigzag:
            return true;
        default:
            return false;
    }
}

std::string family_name(Family f) {
    switch (f) {
        case Family::KStar: return "kstar";
        case Family::Star: return "star";
        case Family::Path: return "path";
        case Family::Complete: return "complete";
        case Family::F1: return "f1";
        case Family::F2: return "f2";
        case Family::F3: return "f3";
        case Family::F4: return "f4";
        case Family::D1: return "d1";
        case Family::D2: return "d2";
        case Family::D3: return "d3";
        case Family::TransTournament: return "tt";
        case Family::Zigzag: return "zigzag";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    static const std::vector<std::pair<std::string, Family>> table = {
        {"kstar", Family::KStar}, {"star", Family::Star}, {"path", Family::Path},
        {"complete", Family::Complete}, {"f1", Family::F1}, {"f2", Family::F2},
        {"f3", Family::F3}, {"f4", Family::F4}, {"d1", Family::D1},
        {"d2", Family::D2}, {"d3", Family::D3}, {"tt", Family::TransTournament},
        {"tournament", Family::TransTournament}, {"zigzag", Family::Zigzag}};
    for (const auto& [key, fam] : table)
        if (key == name) return fam;
    throw InvalidParameterError("unknown family: " + name);
}

Graph generate_graph(Family f, int n) {
    require(n >= 1, "family parameter must be >= 1");
    switch (f) {
        case Family::KStar: {
            std::vector<Edge> e;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
            for (int i = 0; i < n; ++i) e.emplace_back(i, n + i);
            return Graph(2 * n, std::move(e));
        }
        case Family::Star: {
            std::vector<Edge> e;
            for (int i = 1; i <= n; ++i) e.emplace_back(0, i);
            return Graph(n + 1, std::move(e));
        }
        case Family::Path: {
            std::vector<Edge> e;
            for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
            return Graph(n, std::move(e));
        }
        case Family::Complete: {
            std::vector<Edge> e;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
            return Graph(n, std::move(e));
        }
        case Family::F1:
        case Family::F2:
        case Family::F3:
        case Family::F4:
            return Graph(2 * n + 2, f_family_edges(f, n));
        default:
            throw InvalidParameterError("not an undirected family: " + family_name(f));
    }
}

Digraph generate_digraph(Family f, int n) {
    require(n >= 1, "family parameter must be >= 1");
    switch (f) {
        case Family::D1:
        case Family::D2:
        case Family::D3:
            return Digraph(2 * n + 1, d_family_arcs(f, n));
        case Family::TransTournament: {
            std::vector<Arc> a;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) a.emplace_back(i, j);
            return Digraph(n, std::move(a));
        }
        default:
            throw InvalidParameterError("not a directed family: " + family_name(f));
    }
}

std::vector<std::string> family_vertex_names(Family f, int n) {
    std::vector<std::string> names;
    auto chain = [&](const std::string& prefix, int from, int to, int step) {
        for (int i = from; i != to; i += step) names.push_back(prefix + std::to_string(i));
    };
    switch (f) {
        case Family::KStar:
            chain("x", 1, n + 1, 1);
            chain("y", 1, n + 1, 1);
            break;
        case Family::Star:
            names.emplace_back("c");
            chain("l", 1, n + 1, 1);
            break;
        case Family::F1:
        case Family::F2:
        case Family::F3:
        case Family::F4:
            chain("y", n, 0, -1);
            names.emplace_back("x1");
            names.emplace_back("x2");
            chain("z", 1, n + 1, 1);
            break;
        case Family::D1:
        case Family::D2:
        case Family::D3:
            chain("y", n, 0, -1);
            names.emplace_back("x1");
            chain("z", 1, n + 1, 1);
            break;
        default:
            chain("v", 0, n, 1);
            break;
    }
    return names;
}

Digraph random_oriented(int order, double arc_prob, std::uint64_t seed) {
    if (order < 0) throw InvalidParameterError("negative order");
    if (!(arc_prob >= 0.0 && arc_prob <= 1.0))
        throw InvalidParameterError("arc probability outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    const bool always = arc_prob >= 1.0;
    const bool never = arc_prob <= 0.0;
    // Fixed-point threshold keeps the draw bit-exact across platforms.
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(static_cast<long double>(arc_prob) * 18446744073709551615.0L);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) {
            if (never) continue;
            bool take = always || rng() <= threshold;
            if (!take) continue;
            if (rng() & 1)
                arcs.emplace_back(v, u);
            else
                arcs.emplace_back(u, v);
        }
    return Digraph(order, std::move(arcs));
}

Digraph zigzag_pseudo_path(int order, const std::vector<int>& branch_positions) {
    require(order >= 1, "order must be >= 1");
    std::vector<bool> is_branch(static_cast<size_t>(order), false);
    for (int p : branch_positions) {
        require(p >= 1 && p <= order - 2, "branch position must be interior");
        require(!is_branch[static_cast<size_t>(p)], "duplicate branch position");
        is_branch[static_cast<size_t>(p)] = true;
    }
    std::vector<Arc> arcs;
    bool forward = true;
    for (int i = 0; i + 1 < order; ++i) {
        if (i > 0 && is_branch[static_cast<size_t>(i)]) forward = !forward;
        if (forward)
            arcs.emplace_back(i, i + 1);
        else
            arcs.emplace_back(i + 1, i);
    }
    return Digraph(order, std::move(arcs));
}

} // namespace pathcover
