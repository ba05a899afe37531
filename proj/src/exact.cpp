#include "pathcover/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>

namespace pathcover {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t{1} << v; }
int lsb(uint64_t m) { return std::countr_zero(m); }

VertexList mask_to_list(uint64_t m) {
    VertexList out;
    while (m) {
        out.push_back(lsb(m));
        m &= m - 1;
    }
    return out;
}

void check_solver_size(const Digraph& d, const SolverOptions& opts, const char* who) {
    if (d.order() > opts.cap)
        throw TooLargeError(std::string(who) + ": order " + std::to_string(d.order()) +
                            " exceeds cap " + std::to_string(opts.cap));
    if (d.order() > 64)
        throw TooLargeError(std::string(who) + ": order exceeds 64");
}

/// Reachable-state table of the path DP: for every traceable set S,
/// ends.at(S) is the mask of vertices at which a covering path can end.
struct TraceTable {
    std::unordered_map<uint64_t, uint64_t> ends;

    static TraceTable build(const Digraph& d, const SolverOptions& opts) {
        TraceTable t;
        const int n = d.order();
        std::vector<std::vector<uint64_t>> levels(static_cast<size_t>(n) + 1);
        for (int v = 0; v < n; ++v) {
            t.ends[bit(v)] = bit(v);
            levels[1].push_back(bit(v));
        }
        for (int k = 1; k < n; ++k) {
            for (uint64_t s : levels[static_cast<size_t>(k)]) {
                uint64_t emask = t.ends.at(s);
                while (emask) {
                    int e = lsb(emask);
                    emask &= emask - 1;
                    for (Vertex w : d.out_neighbors(e)) {
                        if (s & bit(w)) continue;
                        uint64_t ns = s | bit(w);
                        auto [it, fresh] = t.ends.try_emplace(ns, 0);
                        if (fresh) {
                            levels[static_cast<size_t>(k + 1)].push_back(ns);
                            if (t.ends.size() > opts.state_budget)
                                throw TooLargeError("path-state budget exhausted");
                        }
                        it->second |= bit(w);
                    }
                }
            }
        }
        return t;
    }

    /// A directed path covering s and ending at e (bit e must be set in
    /// ends.at(s)); smallest-id predecessors make the result canonical.
    VertexList reconstruct(const Digraph& d, uint64_t s, int e) const {
        VertexList rev{e};
        while ((s & (s - 1)) != 0) {
            uint64_t prev = s & ~bit(e);
            uint64_t emask = ends.at(prev);
            int chosen = -1;
            while (emask) {
                int cand = lsb(emask);
                emask &= emask - 1;
                if (d.has_arc(cand, e)) {
                    chosen = cand;
                    break;
                }
            }
            e = chosen;
            s = prev;
            rev.push_back(e);
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    }
};

/// Keep only the inclusion-maximal masks, preserving first occurrence
/// order among equals. Pairs carry a representative payload.
template <typename Payload>
std::vector<std::pair<uint64_t, Payload>> maximal_masks(
    std::vector<std::pair<uint64_t, Payload>> items) {
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return std::popcount(a.first) > std::popcount(b.first);
    });
    std::vector<std::pair<uint64_t, Payload>> kept;
    for (const auto& item : items) {
        bool dominated = false;
        for (const auto& k : kept)
            if ((item.first & ~k.first) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(item);
    }
    return kept;
}

constexpr int kInf = 1 << 28;

/// Memoized exact set cover over candidate units: each unit is a mask
/// (possibly reaching outside S) with a payload used for reconstruction.
struct CoverSolver {
    std::function<std::vector<std::pair<uint64_t, uint64_t>>(int)> units_for_pivot;
    std::unordered_map<uint64_t, int> memo;

    int solve(uint64_t s) {
        if (s == 0) return 0;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        const int pivot = lsb(s);
        std::vector<std::pair<uint64_t, uint64_t>> cands;
        for (const auto& [unit, repr] : units_for_pivot(pivot))
            cands.emplace_back(unit & s, repr);
        cands = maximal_masks(std::move(cands));
        int best = kInf;
        for (const auto& [c, repr] : cands) {
            int sub = solve(s & ~c);
            if (sub + 1 < best) best = sub + 1;
        }
        memo[s] = best;
        return best;
    }

    /// First unit (in candidate order) achieving the optimum at s.
    uint64_t pick(uint64_t s) {
        const int pivot = lsb(s);
        const int target = solve(s);
        std::vector<std::pair<uint64_t, uint64_t>> cands;
        for (const auto& [unit, repr] : units_for_pivot(pivot))
            cands.emplace_back(unit & s, repr);
        cands = maximal_masks(std::move(cands));
        for (const auto& [c, repr] : cands)
            if (solve(s & ~c) + 1 == target) return repr;
        throw Error("internal: cover reconstruction failed");
    }
};

/// Memoized exact partition: units must lie inside S.
struct PartitionSolver {
    std::function<const std::vector<uint64_t>&(int)> units_for_pivot;
    std::unordered_map<uint64_t, int> memo;

    int solve(uint64_t s) {
        if (s == 0) return 0;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        const int pivot = lsb(s);
        int best = kInf;
        for (uint64_t unit : units_for_pivot(pivot)) {
            if ((unit & ~s) != 0) continue;
            int sub = solve(s & ~unit);
            if (sub + 1 < best) best = sub + 1;
        }
        memo[s] = best;
        return best;
    }

    uint64_t pick(uint64_t s) {
        const int pivot = lsb(s);
        const int target = solve(s);
        for (uint64_t unit : units_for_pivot(pivot)) {
            if ((unit & ~s) != 0) continue;
            if (solve(s & ~unit) + 1 == target) return unit;
        }
        throw Error("internal: partition reconstruction failed");
    }
};

std::vector<std::vector<uint64_t>> group_by_vertex(const std::vector<uint64_t>& sets, int n) {
    std::vector<std::vector<uint64_t>> by_vertex(static_cast<size_t>(n));
    for (uint64_t s : sets)
        for (uint64_t m = s; m; m &= m - 1) by_vertex[static_cast<size_t>(lsb(m))].push_back(s);
    return by_vertex;
}

std::map<std::string, std::string> solver_provenance(const char* producer) {
    return {{"producer", producer}};
}

} // namespace

AlphaResult alpha_exact(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw TooLargeError("alpha_exact: order exceeds 64");
    std::vector<uint64_t> closed(static_cast<size_t>(n)); // N[v]
    for (Vertex v = 0; v < n; ++v) {
        closed[static_cast<size_t>(v)] = bit(v);
        for (Vertex w : g.neighbors(v)) closed[static_cast<size_t>(v)] |= bit(w);
    }

    uint64_t best_set = 0;
    int best = 0;
    std::function<void(uint64_t, uint64_t)> expand = [&](uint64_t cand, uint64_t cur) {
        int cur_size = std::popcount(cur);
        if (cur_size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = cur_size;
            best_set = cur;
            return;
        }
        // Pivot on the candidate vertex of highest remaining degree.
        int pivot = -1, pivot_deg = -1;
        for (uint64_t m = cand; m; m &= m - 1) {
            int v = lsb(m);
            int deg = std::popcount(closed[static_cast<size_t>(v)] & cand) - 1;
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        expand(cand & ~closed[static_cast<size_t>(pivot)], cur | bit(pivot));
        expand(cand & ~bit(pivot), cur);
    };
    uint64_t all = (n == 64) ? ~uint64_t{0} : (bit(n) - 1);
    expand(all, 0);
    return {best, mask_to_list(best_set)};
}

std::vector<uint64_t> traceable_sets(const Digraph& d, const SolverOptions& opts) {
    check_solver_size(d, opts, "traceable_sets");
    auto table = TraceTable::build(d, opts);
    std::vector<uint64_t> sets;
    sets.reserve(table.ends.size());
    for (const auto& [s, e] : table.ends) sets.push_back(s);
    std::sort(sets.begin(), sets.end());
    return sets;
}

std::optional<VertexList> hamiltonian_directed_path(const Digraph& d, const SolverOptions& opts) {
    check_solver_size(d, opts, "hamiltonian_directed_path");
    const int n = d.order();
    if (n == 0) return std::nullopt;
    auto table = TraceTable::build(d, opts);
    uint64_t full = (n == 64) ? ~uint64_t{0} : (bit(n) - 1);
    auto it = table.ends.find(full);
    if (it == table.ends.end()) return std::nullopt;
    return table.reconstruct(d, full, lsb(it->second));
}

std::pair<int, PathCoverCertificate> pc_exact(const Digraph& d, const SolverOptions& opts) {
    check_solver_size(d, opts, "pc_exact");
    const int n = d.order();
    PathCoverCertificate cert;
    cert.mode = CoverMode::Cover;
    cert.provenance = solver_provenance("pc_exact");
    if (n == 0) return {0, cert};

    auto table = TraceTable::build(d, opts);
    std::vector<uint64_t> sets;
    for (const auto& [s, e] : table.ends) sets.push_back(s);
    std::sort(sets.begin(), sets.end());
    auto by_vertex = group_by_vertex(sets, n);

    CoverSolver solver;
    solver.units_for_pivot = [&](int pivot) {
        std::vector<std::pair<uint64_t, uint64_t>> out;
        out.reserve(by_vertex[static_cast<size_t>(pivot)].size());
        for (uint64_t s : by_vertex[static_cast<size_t>(pivot)]) out.emplace_back(s, s);
        return out;
    };

    uint64_t full = (n == 64) ? ~uint64_t{0} : (bit(n) - 1);
    int value = solver.solve(full);
    uint64_t rest = full;
    while (rest) {
        uint64_t piece = solver.pick(rest);
        cert.paths.push_back(table.reconstruct(d, piece, lsb(table.ends.at(piece))));
        rest &= ~piece;
    }
    return {value, cert};
}

std::pair<int, PathCoverCertificate> pp_exact(const Digraph& d, const SolverOptions& opts) {
    check_solver_size(d, opts, "pp_exact");
    const int n = d.order();
    PathCoverCertificate cert;
    cert.mode = CoverMode::Partition;
    cert.provenance = solver_provenance("pp_exact");
    if (n == 0) return {0, cert};

    auto table = TraceTable::build(d, opts);
    std::vector<uint64_t> sets;
    for (const auto& [s, e] : table.ends) sets.push_back(s);
    std::sort(sets.begin(), sets.end());
    auto by_vertex = group_by_vertex(sets, n);

    PartitionSolver solver;
    solver.units_for_pivot = [&](int pivot) -> const std::vector<uint64_t>& {
        return by_vertex[static_cast<size_t>(pivot)];
    };

    uint64_t full = (n == 64) ? ~uint64_t{0} : (bit(n) - 1);
    int value = solver.solve(full);
    uint64_t rest = full;
    while (rest) {
        uint64_t piece = solver.pick(rest);
        cert.paths.push_back(table.reconstruct(d, piece, lsb(table.ends.at(piece))));
        rest &= ~piece;
    }
    return {value, cert};
}

namespace {

/// Vertex sets carrying a directed Hamiltonian cycle, with enough state
/// kept to reconstruct one cycle per set. Paths are anchored at the
/// lowest vertex of the set, so each cycle set is found once.
struct CycleSets {
    // Anchored tables: ends over paths starting at the set's lowest vertex.
    std::unordered_map<uint64_t, uint64_t> anchored_ends;
    std::vector<uint64_t> sets; // sets with a Hamiltonian directed cycle

    static CycleSets build(const Digraph& d, const SolverOptions& opts) {
        CycleSets c;
        const int n = d.order();
        for (int a = 0; a < n; ++a) {
            std::vector<std::vector<uint64_t>> levels(static_cast<size_t>(n) + 1);
            c.anchored_ends[bit(a)] |= bit(a);
            levels[1].push_back(bit(a));
            for (int k = 1; k < n; ++k) {
                for (uint64_t s : levels[static_cast<size_t>(k)]) {
                    if (lsb(s) != a) continue;
                    uint64_t emask = c.anchored_ends.at(s);
                    while (emask) {
                        int e = lsb(emask);
                        emask &= emask - 1;
                        for (Vertex w : d.out_neighbors(e)) {
                            if (w <= a || (s & bit(w))) continue;
                            uint64_t ns = s | bit(w);
                            auto [it, fresh] = c.anchored_ends.try_emplace(ns, 0);
                            if (fresh) {
                                levels[static_cast<size_t>(k + 1)].push_back(ns);
                                if (c.anchored_ends.size() > opts.state_budget)
                                    throw TooLargeError("cycle-state budget exhausted");
                            }
                            it->second |= bit(w);
                        }
                    }
                }
            }
        }
        for (const auto& [s, emask] : c.anchored_ends) {
            if (std::popcount(s) < 3) continue;
            int a = lsb(s);
            for (uint64_t m = emask; m; m &= m - 1)
                if (d.has_arc(lsb(m), a)) {
                    c.sets.push_back(s);
                    break;
                }
        }
        std::sort(c.sets.begin(), c.sets.end());
        return c;
    }

    VertexList reconstruct_cycle(const Digraph& d, uint64_t s) const {
        const int a = lsb(s);
        uint64_t emask = anchored_ends.at(s);
        int e = -1;
        while (emask) {
            int cand = lsb(emask);
            emask &= emask - 1;
            if (d.has_arc(cand, a)) {
                e = cand;
                break;
            }
        }
        VertexList rev{e};
        uint64_t cur = s;
        while ((cur & (cur - 1)) != 0) {
            uint64_t prev = cur & ~bit(e);
            uint64_t pm = anchored_ends.at(prev);
            int chosen = -1;
            while (pm) {
                int cand = lsb(pm);
                pm &= pm - 1;
                if (d.has_arc(cand, e)) {
                    chosen = cand;
                    break;
                }
            }
            e = chosen;
            cur = prev;
            rev.push_back(e);
        }
        std::reverse(rev.begin(), rev.end());
        return rev;
    }
};

CycleUnit make_pair_unit(const Digraph& d, int u, int w) {
    CycleUnit unit;
    unit.is_cycle = false;
    if (d.has_arc(u, w))
        unit.vertices = {u, w};
    else
        unit.vertices = {w, u};
    return unit;
}

std::pair<int, CycleCoverCertificate> cycle_solve(const Digraph& d, const SolverOptions& opts,
                                                  CoverMode mode) {
    check_solver_size(d, opts, mode == CoverMode::Cover ? "cc_exact" : "cp_exact");
    const int n = d.order();
    CycleCoverCertificate cert;
    cert.mode = mode;
    cert.provenance = solver_provenance(mode == CoverMode::Cover ? "cc_exact" : "cp_exact");
    if (n == 0) return {0, cert};

    auto cycles = CycleSets::build(d, opts);

    // Unit masks per pivot: singleton, adjacent pairs, Hamiltonian-cycle sets.
    std::vector<std::vector<uint64_t>> units(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        units[static_cast<size_t>(v)].push_back(bit(v));
        for (int w = 0; w < n; ++w)
            if (w != v && d.adjacent(v, w)) units[static_cast<size_t>(v)].push_back(bit(v) | bit(w));
    }
    for (uint64_t s : cycles.sets)
        for (uint64_t m = s; m; m &= m - 1) units[static_cast<size_t>(lsb(m))].push_back(s);

    uint64_t full = (n == 64) ? ~uint64_t{0} : (bit(n) - 1);
    int value;
    std::vector<uint64_t> pieces;
    if (mode == CoverMode::Partition) {
        PartitionSolver solver;
        solver.units_for_pivot = [&](int pivot) -> const std::vector<uint64_t>& {
            return units[static_cast<size_t>(pivot)];
        };
        value = solver.solve(full);
        uint64_t rest = full;
        while (rest) {
            uint64_t piece = solver.pick(rest);
            pieces.push_back(piece);
            rest &= ~piece;
        }
    } else {
        CoverSolver solver;
        solver.units_for_pivot = [&](int pivot) {
            std::vector<std::pair<uint64_t, uint64_t>> out;
            for (uint64_t u : units[static_cast<size_t>(pivot)]) out.emplace_back(u, u);
            return out;
        };
        value = solver.solve(full);
        uint64_t rest = full;
        while (rest) {
            uint64_t piece = solver.pick(rest);
            pieces.push_back(piece);
            rest &= ~piece;
        }
    }

    for (uint64_t piece : pieces) {
        int sz = std::popcount(piece);
        bool is_cycle_set =
            sz >= 3 && std::binary_search(cycles.sets.begin(), cycles.sets.end(), piece);
        if (is_cycle_set) {
            cert.units.push_back({true, cycles.reconstruct_cycle(d, piece)});
        } else if (sz == 1) {
            cert.units.push_back({false, mask_to_list(piece)});
        } else if (sz == 2) {
            auto vs = mask_to_list(piece);
            cert.units.push_back(make_pair_unit(d, vs[0], vs[1]));
        } else {
            throw Error("internal: cycle solver picked an invalid unit");
        }
    }
    return {value, cert};
}

} // namespace

std::pair<int, CycleCoverCertificate> cc_exact(const Digraph& d, const SolverOptions& opts) {
    return cycle_solve(d, opts, CoverMode::Cover);
}

std::pair<int, CycleCoverCertificate> cp_exact(const Digraph& d, const SolverOptions& opts) {
    return cycle_solve(d, opts, CoverMode::Partition);
}

PathCoverCertificate gallai_milgram_partition(const Digraph& d, const SolverOptions& opts) {
    const int n = d.order();
    PathCoverCertificate cert;
    cert.mode = CoverMode::Partition;
    cert.provenance = solver_provenance("gallai_milgram_partition");

    AlphaResult alpha = alpha_exact(d.underlying());
    cert.provenance["independence_number"] = std::to_string(alpha.size);
    if (n == 0) return cert;

    std::vector<VertexList> paths;
    for (Vertex v = 0; v < n; ++v) paths.push_back({v});

    auto merge_pass = [&]() {
        for (size_t i = 0; i < paths.size(); ++i)
            for (size_t j = 0; j < paths.size(); ++j) {
                if (i == j) continue;
                if (d.has_arc(paths[i].back(), paths[j].front())) {
                    paths[i].insert(paths[i].end(), paths[j].begin(), paths[j].end());
                    paths.erase(paths.begin() + static_cast<long>(j));
                    return true;
                }
            }
        return false;
    };
    auto exchange_pass = [&]() {
        // Move a terminal (or initial) vertex between paths when an arc
        // allows it; this can unlock further merges.
        for (size_t i = 0; i < paths.size(); ++i)
            for (size_t j = 0; j < paths.size(); ++j) {
                if (i == j || paths[j].size() < 2) continue;
                if (d.has_arc(paths[i].back(), paths[j].back())) {
                    paths[i].push_back(paths[j].back());
                    paths[j].pop_back();
                    return true;
                }
                if (d.has_arc(paths[j].front(), paths[i].front())) {
                    paths[i].insert(paths[i].begin(), paths[j].front());
                    paths[j].erase(paths[j].begin());
                    return true;
                }
            }
        return false;
    };

    long steps = 0;
    const long step_cap = 4L * n * n + 16;
    while (static_cast<int>(paths.size()) > alpha.size && steps < step_cap) {
        ++steps;
        if (merge_pass()) continue;
        if (!exchange_pass()) break;
    }
    while (merge_pass()) {} // tidy any merges the last exchange enabled

    if (static_cast<int>(paths.size()) > alpha.size) {
        auto [value, exact] = pp_exact(d, opts);
        exact.provenance = cert.provenance;
        exact.provenance["producer"] = "gallai_milgram_partition";
        exact.provenance["fallback"] = "pp_exact";
        return exact;
    }
    cert.paths = std::move(paths);
    return cert;
}

VertexList tournament_spanning_path(const Digraph& d) {
    const int n = d.order();
    VertexList path;
    if (n == 0) return path;
    path.push_back(0);
    for (Vertex v = 1; v < n; ++v) {
        if (d.has_arc(v, path.front())) {
            path.insert(path.begin(), v);
            continue;
        }
        bool placed = false;
        for (size_t i = 0; i < path.size(); ++i) {
            if (!d.has_arc(path[i], v)) continue;
            if (i + 1 == path.size() || d.has_arc(v, path[i + 1])) {
                path.insert(path.begin() + static_cast<long>(i) + 1, v);
                placed = true;
                break;
            }
        }
        if (!placed)
            throw PreconditionError("tournament_spanning_path: pair without an arc");
    }
    return path;
}

} // namespace pathcover
