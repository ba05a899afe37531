#include "pathcover/detectors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

namespace pathcover {

namespace {

using std::uint64_t;

/// Backtracking mapper shared by the graph and digraph searches.
/// Pattern vertices are mapped in index order and host candidates tried
/// ascending, so the first hit is the lexicographically least image.
template <typename Compatible, typename Consistent>
std::optional<VertexList> map_pattern(int host_order, int pattern_order, Compatible compatible,
                                      Consistent consistent) {
    if (pattern_order < 1) throw InvalidParameterError("pattern order must be >= 1");
    if (pattern_order > host_order) return std::nullopt;
    VertexList image(static_cast<size_t>(pattern_order), -1);
    std::vector<bool> used(static_cast<size_t>(host_order), false);

    int t = 0;
    while (t >= 0) {
        Vertex v = image[static_cast<size_t>(t)] + 1;
        if (image[static_cast<size_t>(t)] >= 0) used[static_cast<size_t>(image[static_cast<size_t>(t)])] = false;
        image[static_cast<size_t>(t)] = -1;
        for (; v < host_order; ++v) {
            if (used[static_cast<size_t>(v)] || !compatible(t, v)) continue;
            bool ok = true;
            for (int s = 0; s < t && ok; ++s) ok = consistent(s, image[static_cast<size_t>(s)], t, v);
            if (ok) break;
        }
        if (v < host_order) {
            image[static_cast<size_t>(t)] = v;
            used[static_cast<size_t>(v)] = true;
            if (t + 1 == pattern_order) return image;
            ++t;
        } else {
            --t;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<VertexList> find_induced_graph(const Graph& host, const Graph& pattern) {
    return map_pattern(
        host.order(), pattern.order(),
        [&](int t, Vertex v) { return host.degree(v) >= pattern.degree(t); },
        [&](int s, Vertex vs, int t, Vertex vt) {
            return host.adjacent(vs, vt) == pattern.adjacent(s, t);
        });
}

std::optional<VertexList> find_induced_digraph(const Digraph& host, const Digraph& pattern) {
    return map_pattern(
        host.order(), pattern.order(),
        [&](int t, Vertex v) {
            return host.out_degree(v) >= pattern.out_degree(t) &&
                   host.in_degree(v) >= pattern.in_degree(t);
        },
        [&](int s, Vertex vs, int t, Vertex vt) {
            return host.has_arc(vs, vt) == pattern.has_arc(s, t) &&
                   host.has_arc(vt, vs) == pattern.has_arc(t, s);
        });
}

std::string condition_name(Condition c) {
    switch (c) {
        case Condition::D1: return "d1";
        case Condition::DPrime1: return "dprime1";
        case Condition::D2: return "d2";
        case Condition::D3: return "d3";
        case Condition::Sec4Premise: return "sec4";
    }
    return "?";
}

Condition condition_from_name(const std::string& name) {
    if (name == "d1") return Condition::D1;
    if (name == "dprime1") return Condition::DPrime1;
    if (name == "d2") return Condition::D2;
    if (name == "d3") return Condition::D3;
    if (name == "sec4") return Condition::Sec4Premise;
    throw InvalidParameterError("unknown condition: " + name);
}

namespace {

/// Enumerate induced pseudo-path vertex sets by extension at both
/// endpoints. A visited set alone suffices: the induced subdigraph, its
/// endpoints and its branch count are all functions of the vertex set.
PseudoPathScan scan_impl(const Digraph& d, int stop_above, const DetectorOptions& opts) {
    const int n = d.order();
    if (n < 1) throw InvalidParameterError("scan needs order >= 1");
    if (n > 64) throw TooLargeError("pseudo-path scan: order exceeds 64");

    const Graph& g = d.underlying();
    std::vector<uint64_t> nbr(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= uint64_t{1} << w;

    PseudoPathScan best;
    best.max_branch = 0;
    best.witness = {0};

    // Reconstruct the path order of a set known to induce a path.
    auto order_of = [&](uint64_t s) {
        VertexList members;
        for (uint64_t m = s; m; m &= m - 1) members.push_back(std::countr_zero(m));
        if (members.size() <= 1) return members;
        Vertex start = -1;
        for (Vertex v : members)
            if (std::popcount(nbr[static_cast<size_t>(v)] & s) == 1) {
                start = v;
                break;
            }
        VertexList seq{start};
        uint64_t seen = uint64_t{1} << start;
        Vertex cur = start;
        while (seq.size() < members.size()) {
            uint64_t next = nbr[static_cast<size_t>(cur)] & s & ~seen;
            cur = std::countr_zero(next);
            seen |= uint64_t{1} << cur;
            seq.push_back(cur);
        }
        return seq;
    };

    auto branch_of = [&](const VertexList& seq) {
        int count = 0;
        for (size_t i = 0; i < seq.size(); ++i) {
            int in = 0, out = 0;
            if (i > 0) (d.has_arc(seq[i - 1], seq[i]) ? in : out) += 1;
            if (i + 1 < seq.size()) (d.has_arc(seq[i], seq[i + 1]) ? out : in) += 1;
            if (in == 2 || out == 2) ++count;
        }
        return count;
    };

    std::unordered_set<uint64_t> visited;
    std::deque<uint64_t> queue;
    for (Vertex v = 0; v < n; ++v) {
        uint64_t s = uint64_t{1} << v;
        visited.insert(s);
        queue.push_back(s);
    }

    uint64_t processed = 0;
    while (!queue.empty()) {
        if (++processed > opts.state_budget) {
            best.complete = false;
            return best;
        }
        uint64_t s = queue.front();
        queue.pop_front();
        VertexList seq = order_of(s);
        int r = branch_of(seq);
        if (r > best.max_branch) {
            best.max_branch = r;
            best.witness = seq;
            if (stop_above >= 0 && r > stop_above) return best;
        }
        // Extend at each endpoint: the new vertex must see exactly the
        // endpoint inside the set, keeping the extension induced.
        Vertex endpoints[2] = {seq.front(), seq.back()};
        int ecount = seq.size() == 1 ? 1 : 2;
        for (int e = 0; e < ecount; ++e) {
            Vertex end = endpoints[e];
            uint64_t cands = nbr[static_cast<size_t>(end)] & ~s;
            while (cands) {
                Vertex w = std::countr_zero(cands);
                cands &= cands - 1;
                if ((nbr[static_cast<size_t>(w)] & s) != (uint64_t{1} << end)) continue;
                uint64_t ns = s | (uint64_t{1} << w);
                if (visited.insert(ns).second) queue.push_back(ns);
            }
        }
    }
    return best;
}

struct Battery {
    std::vector<FamilySpec> graph_patterns;
    std::vector<FamilySpec> digraph_patterns;
};

Battery battery_for(Condition cond, int n) {
    Battery b;
    switch (cond) {
        case Condition::D1:
            b.graph_patterns = {{Family::KStar, n}, {Family::Star, n}, {Family::F1, n}, {Family::F2, n}};
            break;
        case Condition::DPrime1:
            b.graph_patterns = {{Family::KStar, n}, {Family::Star, n}, {Family::F1, n},
                                {Family::F2, n},  {Family::F3, n},   {Family::F4, n}};
            break;
        case Condition::D2:
            b.digraph_patterns = {{Family::D1, n}, {Family::D2, n}, {Family::D3, n}};
            break;
        case Condition::Sec4Premise:
            b.digraph_patterns = {{Family::TransTournament, n}};
            b.graph_patterns = {{Family::Star, n}, {Family::Path, n}};
            break;
        case Condition::D3:
            break;
    }
    return b;
}

} // namespace

PseudoPathScan max_pseudo_path_branch(const Digraph& d, const DetectorOptions& opts) {
    return scan_impl(d, -1, opts);
}

PseudoPathScan scan_pseudo_paths(const Digraph& d, int stop_above, const DetectorOptions& opts) {
    return scan_impl(d, stop_above, opts);
}

ConditionReport check_condition(const Digraph& d, Condition cond, int n,
                                const DetectorOptions& opts) {
    if (n < 2) throw InvalidParameterError("condition parameter must be >= 2");
    ConditionReport report;
    report.condition = cond;
    report.n = n;

    if (cond == Condition::D3) {
        auto scan = scan_pseudo_paths(d, n, opts);
        if (scan.max_branch > n) {
            report.status = CheckStatus::Violated;
            Witness w;
            w.pattern = "pseudo-path";
            w.host_vertices = scan.witness;
            w.branch_detail = scan.max_branch;
            report.witness = w;
        } else if (!scan.complete) {
            report.status = CheckStatus::Inconclusive;
        } else {
            report.status = CheckStatus::Satisfied;
            report.max_branch = scan.max_branch;
        }
        return report;
    }

    Battery battery = battery_for(cond, n);
    for (const auto& spec : battery.digraph_patterns) {
        auto hit = find_induced_digraph(d, generate_digraph(spec.family, spec.n));
        if (hit) {
            report.status = CheckStatus::Violated;
            Witness w;
            w.pattern = family_name(spec.family) + "(n=" + std::to_string(spec.n) + ")";
            w.spec = spec;
            w.host_vertices = *hit;
            report.witness = w;
            return report;
        }
    }
    for (const auto& spec : battery.graph_patterns) {
        auto hit = find_induced_graph(d.underlying(), generate_graph(spec.family, spec.n));
        if (hit) {
            report.status = CheckStatus::Violated;
            Witness w;
            w.pattern = family_name(spec.family) + "(n=" + std::to_string(spec.n) + ")";
            w.spec = spec;
            w.host_vertices = *hit;
            report.witness = w;
            return report;
        }
    }
    report.status = CheckStatus::Satisfied;
    return report;
}

} // namespace pathcover
