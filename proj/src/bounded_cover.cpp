#include "pathcover/bounded_cover.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "pathcover/version.hpp"

namespace pathcover {

namespace {

using std::uint64_t;

VertexList sorted_unique(VertexList v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VertexList remap(const VertexList& local, const VertexList& to_original) {
    VertexList out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_original[static_cast<size_t>(v)]);
    return out;
}

/// Positions (0-based) of y's neighbors along the sequence q.
std::vector<int> neighbor_positions(const Digraph& d, const VertexList& q, Vertex y) {
    std::vector<int> pos;
    for (size_t i = 0; i < q.size(); ++i)
        if (d.adjacent(y, q[i])) pos.push_back(static_cast<int>(i));
    return pos;
}

void require_induced_directed_path(const Digraph& d, const VertexList& q, const char* who) {
    if (q.empty()) throw PreconditionError(std::string(who) + ": empty path");
    if (!is_directed_path(d, q))
        throw PreconditionError(std::string(who) + ": sequence is not a directed path");
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = i + 2; j < q.size(); ++j)
            if (d.adjacent(q[i], q[j]))
                throw PreconditionError(std::string(who) + ": path is not induced");
}

} // namespace

// ---------------------------------------------------------------- search --

VertexList longest_induced_path(const Graph& g, const SearchOptions& opts) {
    const int n = g.order();
    if (n < 1) throw InvalidParameterError("longest_induced_path needs order >= 1");
    if (n > opts.cap)
        throw TooLargeError("longest_induced_path: order exceeds cap " + std::to_string(opts.cap));
    if (n > 64) throw TooLargeError("longest_induced_path: order exceeds 64");

    std::vector<uint64_t> nbr(static_cast<size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) nbr[static_cast<size_t>(v)] |= uint64_t{1} << w;

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

    VertexList best{0};
    std::unordered_set<uint64_t> visited;
    std::deque<uint64_t> queue;
    for (Vertex v = 0; v < n; ++v) {
        uint64_t s = uint64_t{1} << v;
        visited.insert(s);
        queue.push_back(s);
    }
    uint64_t processed = 0;
    while (!queue.empty()) {
        if (++processed > opts.state_budget)
            throw TooLargeError("longest_induced_path: state budget exhausted");
        uint64_t s = queue.front();
        queue.pop_front();
        VertexList seq = order_of(s);
        if (seq.size() > best.size() || (seq.size() == best.size() && seq < best)) best = seq;

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

// ---------------------------------------------------------------- layers --

LayerDecomposition layer_decomposition(const Graph& g, const VertexList& path, int end_margin) {
    const int m = static_cast<int>(path.size());
    const int n0 = end_margin;
    if (m < 1 || n0 < 1) throw InvalidParameterError("layer_decomposition: bad arguments");
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 1; j < path.size(); ++j) {
            bool adj = g.adjacent(path[i], path[j]);
            if ((j == i + 1) != adj)
                throw DecompositionError("supplied sequence is not an induced path");
        }

    std::vector<bool> on_path(static_cast<size_t>(g.order()), false);
    for (Vertex v : path) on_path[static_cast<size_t>(v)] = true;

    LayerDecomposition out;
    out.path = path;
    std::vector<bool> in_end(static_cast<size_t>(g.order()), false);
    VertexList mid;
    for (int j = 0; j < m; ++j) {
        if (j < n0 || j >= m - n0) {
            out.end_segments.push_back(path[static_cast<size_t>(j)]);
            in_end[static_cast<size_t>(path[static_cast<size_t>(j)])] = true;
        } else {
            mid.push_back(path[static_cast<size_t>(j)]);
        }
    }

    std::vector<bool> near_end(static_cast<size_t>(g.order()), false);
    for (Vertex v : out.end_segments)
        for (Vertex w : g.neighbors(v)) near_end[static_cast<size_t>(w)] = true;

    std::vector<bool> in_y(static_cast<size_t>(g.order()), false);
    for (Vertex v : mid)
        for (Vertex w : g.neighbors(v)) {
            if (on_path[static_cast<size_t>(w)] || in_end[static_cast<size_t>(w)] ||
                near_end[static_cast<size_t>(w)] || in_y[static_cast<size_t>(w)])
                continue;
            in_y[static_cast<size_t>(w)] = true;
            out.mid_attachments.push_back(w);
        }
    std::sort(out.mid_attachments.begin(), out.mid_attachments.end());

    // Shells grow outward from the protected ends; each shell excludes
    // the path, the attachments and every shell except its predecessor.
    std::vector<bool> assigned(static_cast<size_t>(g.order()), false);
    for (Vertex v = 0; v < g.order(); ++v)
        if (on_path[static_cast<size_t>(v)] || in_y[static_cast<size_t>(v)])
            assigned[static_cast<size_t>(v)] = true;

    VertexList prev = out.end_segments;
    std::vector<bool> in_prev = in_end;
    for (int layer = 1; layer <= 2 * n0; ++layer) {
        VertexList cur;
        std::vector<bool> in_cur(static_cast<size_t>(g.order()), false);
        for (Vertex v : prev)
            for (Vertex w : g.neighbors(v)) {
                if (assigned[static_cast<size_t>(w)] || in_prev[static_cast<size_t>(w)] ||
                    in_cur[static_cast<size_t>(w)])
                    continue;
                in_cur[static_cast<size_t>(w)] = true;
                cur.push_back(w);
            }
        std::sort(cur.begin(), cur.end());
        if (layer == 2 * n0) {
            if (!cur.empty())
                throw DecompositionError("shell " + std::to_string(layer) +
                                         " is nonempty; the path was not longest");
            break;
        }
        for (Vertex v : cur) assigned[static_cast<size_t>(v)] = true;
        out.shells.push_back(cur);
        in_prev = in_cur;
        prev = std::move(cur);
    }

    long long total = static_cast<long long>(path.size()) +
                      static_cast<long long>(out.mid_attachments.size());
    for (const auto& shell : out.shells) total += static_cast<long long>(shell.size());
    if (total != g.order())
        throw DecompositionError("layers do not exhaust the vertex set; the path was not longest");
    return out;
}

// -------------------------------------------------------------- profiles --

int attachment_type_index(AttachmentKind k) {
    switch (k) {
        case AttachmentKind::Span1: return 1;
        case AttachmentKind::Span2Fwd: return 2;
        case AttachmentKind::Span2Back: return 3;
        case AttachmentKind::Span3FwdFwd: return 4;
        case AttachmentKind::Span3BackFwd: return 5;
        case AttachmentKind::Span3BackBack: return 6;
        case AttachmentKind::Span3FwdBack: return 7;
        default: return 0;
    }
}

AttachmentProfile profile_attachment(const Digraph& d, const VertexList& q, Vertex y, int n) {
    const int l = static_cast<int>(q.size());
    for (Vertex v : q)
        if (v == y) throw PreconditionError("profile_attachment: y lies on the path");
    auto pos = neighbor_positions(d, q, y);
    if (pos.empty()) throw PreconditionError("profile_attachment: no neighbors on the path");
    if (pos.front() < n || pos.back() > l - n - 1)
        throw PreconditionError("profile_attachment: neighbors reach the protected path ends");

    AttachmentProfile p;
    p.y = y;
    p.first_idx = pos.front();
    p.last_idx = pos.back();
    const int span = p.last_idx - p.first_idx;
    if (span == 0 || span >= 4) throw IndexBoundError(y, p.first_idx, p.last_idx);

    const Vertex vf = q[static_cast<size_t>(p.first_idx)];
    const Vertex vl = q[static_cast<size_t>(p.last_idx)];
    if (d.has_arc(y, vf) || d.has_arc(vl, y)) {
        p.kind = AttachmentKind::Blocking;
        return p;
    }

    for (int i = p.first_idx; i < p.last_idx; ++i)
        if (d.has_arc(q[static_cast<size_t>(i)], y) && d.has_arc(y, q[static_cast<size_t>(i + 1)])) {
            p.slot = i;
            break;
        }

    if (span == 1) {
        p.kind = AttachmentKind::Span1;
    } else if (span == 2) {
        const Vertex mid = q[static_cast<size_t>(p.first_idx + 1)];
        if (!d.adjacent(y, mid))
            p.kind = AttachmentKind::Untyped;
        else
            p.kind = d.has_arc(y, mid) ? AttachmentKind::Span2Fwd : AttachmentKind::Span2Back;
    } else {
        const Vertex m1 = q[static_cast<size_t>(p.first_idx + 1)];
        const Vertex m2 = q[static_cast<size_t>(p.first_idx + 2)];
        if (!d.adjacent(y, m1) || !d.adjacent(y, m2)) {
            p.kind = AttachmentKind::Untyped;
        } else {
            const bool fwd1 = d.has_arc(y, m1);
            const bool fwd2 = d.has_arc(y, m2);
            if (fwd1 && fwd2)
                p.kind = AttachmentKind::Span3FwdFwd;
            else if (!fwd1 && fwd2)
                p.kind = AttachmentKind::Span3BackFwd;
            else if (!fwd1 && !fwd2)
                p.kind = AttachmentKind::Span3BackBack;
            else
                p.kind = AttachmentKind::Span3FwdBack;
        }
    }
    return p;
}

// -------------------------------------------------------------- blocking --

BlockingSelection select_blocking_indices(const Digraph& d, const VertexList& q,
                                          std::vector<AttachmentProfile>& profiles, int n) {
    BlockingSelection sel;
    for (const auto& p : profiles)
        if (p.kind == AttachmentKind::Blocking)
            sel.sets.push_back({{p.y}, p.first_idx, p.last_idx});

    for (size_t a = 0; a < profiles.size(); ++a)
        for (size_t b = 0; b < profiles.size(); ++b) {
            if (a == b) continue;
            auto& pa = profiles[a];
            auto& pb = profiles[b];
            if (pa.last_idx - pa.first_idx != 3 || pb.last_idx - pb.first_idx != 3) continue;
            if (pb.first_idx != pa.first_idx + 2) continue;
            if (d.adjacent(pa.y, pb.y)) continue;
            const int f = pa.first_idx;
            if (!d.has_arc(q[static_cast<size_t>(f)], pa.y)) continue;
            if (!d.has_arc(pa.y, q[static_cast<size_t>(f + 3)])) continue;
            if (!d.has_arc(pb.y, q[static_cast<size_t>(f + 3)])) continue;
            if (!d.has_arc(pb.y, q[static_cast<size_t>(f + 5)])) continue;
            sel.sets.push_back({{pa.y, pb.y}, f, f + 5});
            pa.blocking_partner = pb.y;
            pb.blocking_partner = pa.y;
        }

    std::set<int> idx;
    for (const auto& s : sel.sets) idx.insert(s.first_idx);
    sel.indices.assign(idx.begin(), idx.end());

    for (int i : sel.indices) {
        if (sel.spaced.empty() || i >= sel.spaced.back() + n + 5) sel.spaced.push_back(i);
    }

    const long long limit = static_cast<long long>(n) * (n + 5) / 2;
    if (static_cast<long long>(sel.indices.size()) <= limit) return sel;

    // Too many blocking indices: assemble the induced pseudo-path that
    // certifies the overflow. Each spaced representative contributes a
    // detour with two branch vertices; the spacing keeps them disjoint.
    std::map<int, const BlockingSet*> reps;
    for (int h : sel.spaced) {
        const BlockingSet* pick = nullptr;
        for (const auto& s : sel.sets)
            if (s.first_idx == h && (!pick || s.last_idx - s.first_idx >
                                                  pick->last_idx - pick->first_idx))
                pick = &s;
        if (pick->members.size() == 1 && pick->last_idx - pick->first_idx < 2)
            throw ConstructionError("blocking-overflow",
                                    "span-1 blocking attachment implies a forbidden oriented family");
        reps[h] = pick;
    }
    VertexList witness;
    const int l = static_cast<int>(q.size());
    int pos = 0;
    while (pos < l) {
        auto it = reps.find(pos + 1);
        if (it == reps.end()) {
            witness.push_back(q[static_cast<size_t>(pos)]);
            ++pos;
            continue;
        }
        const BlockingSet& bs = *it->second;
        const int h = bs.first_idx;
        witness.push_back(q[static_cast<size_t>(h - 1)]);
        witness.push_back(q[static_cast<size_t>(h)]);
        if (bs.members.size() == 1) {
            witness.push_back(bs.members[0]);
        } else {
            witness.push_back(bs.members[0]);
            witness.push_back(q[static_cast<size_t>(h + 3)]);
            witness.push_back(bs.members[1]);
        }
        witness.push_back(q[static_cast<size_t>(bs.last_idx)]);
        witness.push_back(q[static_cast<size_t>(bs.last_idx + 1)]);
        pos = bs.last_idx + 2;
    }
    int r = branch_count(d, witness);
    if (r <= n)
        throw ConstructionError("blocking-overflow",
                                "witness has branch count " + std::to_string(r) +
                                    ", expected > " + std::to_string(n));
    throw BlockingOverflowError(std::move(witness), r);
}

// ------------------------------------------------- attached-path builders --

namespace {

struct AttachedContext {
    std::vector<AttachmentProfile> profiles;
    BlockingSelection selection;
    std::set<int> blocked;                       // the index set I
    std::map<int, VertexList> anchor_groups;     // i in I -> members, ascending ids
    std::map<std::pair<int, int>, VertexList> strata; // (first, span) -> members, i not in I
};

AttachedContext build_context(const Digraph& d, const VertexList& q,
                              const VertexList& attachments, int n) {
    AttachedContext ctx;
    VertexList ys = sorted_unique(attachments);
    if (ys.size() != attachments.size())
        throw PreconditionError("attached path: duplicate attachments");
    for (Vertex y : ys) ctx.profiles.push_back(profile_attachment(d, q, y, n));
    ctx.selection = select_blocking_indices(d, q, ctx.profiles, n);
    ctx.blocked.insert(ctx.selection.indices.begin(), ctx.selection.indices.end());
    for (const auto& p : ctx.profiles) {
        if (ctx.blocked.count(p.first_idx))
            ctx.anchor_groups[p.first_idx].push_back(p.y);
        else
            ctx.strata[{p.first_idx, p.last_idx - p.first_idx}].push_back(p.y);
    }
    return ctx;
}

void validate_attached_inputs(const Digraph& d, const VertexList& q,
                              const VertexList& attachments, int n, const char* who) {
    if (n < 3) throw PreconditionError(std::string(who) + ": needs n >= 3");
    require_induced_directed_path(d, q, who);
    std::set<Vertex> on_path(q.begin(), q.end());
    for (Vertex y : attachments)
        if (on_path.count(y))
            throw PreconditionError(std::string(who) + ": attachment lies on the path");
}

void check_small_independence(const Digraph& d, const VertexList& group, int n,
                              const char* step) {
    auto [sub, map] = d.induced(group);
    int a = alpha_exact(sub.underlying()).size;
    if (a > n - 2)
        throw ConstructionError(step, "independence number " + std::to_string(a) +
                                          " exceeds n-2; a star is present in the host");
}

/// Cover paths of a small group, every path remapped to original ids.
std::vector<VertexList> group_partition_paths(const Digraph& d, const VertexList& group,
                                              const SolverOptions& solver) {
    auto [sub, map] = d.induced(group);
    auto cert = gallai_milgram_partition(sub, solver);
    std::vector<VertexList> out;
    for (const auto& p : cert.paths) out.push_back(remap(p, map));
    return out;
}

VertexList group_spanning_path(const Digraph& d, const VertexList& group) {
    auto [sub, map] = d.induced(group);
    return remap(tournament_spanning_path(sub), map);
}

void validate_cover_result(const Digraph& d, const std::vector<VertexList>& paths,
                           const std::set<Vertex>& universe, bool disjoint, const char* who) {
    std::set<Vertex> seen;
    for (const auto& p : paths) {
        if (!is_directed_path(d, p))
            throw ConstructionError(who, "emitted sequence is not a directed path");
        for (Vertex v : p) {
            if (!universe.count(v))
                throw ConstructionError(who, "path leaves the target vertex set");
            if (disjoint && seen.count(v))
                throw ConstructionError(who, "vertex " + std::to_string(v) + " in two parts");
            seen.insert(v);
        }
    }
    if (seen.size() != universe.size())
        throw ConstructionError(who, "some target vertex is uncovered");
}

std::map<std::string, std::string> make_provenance(const std::string& producer) {
    return {{"producer", producer}, {"tool", std::string("pathcover ") + kVersion}};
}

} // namespace

PathCoverCertificate cover_attached_path(const Digraph& d, const VertexList& q,
                                         const VertexList& attachments, int n,
                                         const SolverOptions& solver) {
    validate_attached_inputs(d, q, attachments, n, "cover_attached_path");
    const int l = static_cast<int>(q.size());
    ConstantsTable table = constants_for(n);

    PathCoverCertificate cert;
    cert.mode = CoverMode::Cover;
    cert.n = n;
    cert.provenance = make_provenance("cover_attached_path");
    cert.bound = BoundInfo{std::to_string(table.attached_cover_bound),
                           {{"anchor-groups", std::to_string((n - 2) * (static_cast<long long>(n) * (n + 5) / 2)),
                             "(n-2)*n*(n+5)/2"},
                            {"threaded-templates", std::to_string(6 * (n - 2)), "6*(n-2)"}}};

    if (attachments.empty()) {
        cert.paths.push_back(q);
        return cert;
    }

    AttachedContext ctx = build_context(d, q, attachments, n);

    for (const auto& [i, group] : ctx.anchor_groups) {
        check_small_independence(d, group, n, "anchor-group-cover");
        for (auto& p : group_partition_paths(d, group, solver)) cert.paths.push_back(std::move(p));
    }

    // Per-stratum covers; stratum (i, k) threads between q[i] and q[i+k].
    std::map<std::pair<int, int>, std::vector<VertexList>> stratum_paths;
    for (const auto& [key, members] : ctx.strata) {
        check_small_independence(d, members, n, "stratum-cover");
        auto [sub, map] = d.induced(members);
        auto [value, sub_cert] = pp_exact(sub, solver);
        if (value > n - 2)
            throw ConstructionError("stratum-cover", "stratum needs more than n-2 paths");
        std::vector<VertexList> paths;
        for (const auto& p : sub_cert.paths) paths.push_back(remap(p, map));
        stratum_paths[key] = std::move(paths);
    }

    // Six templates: (span, first anchor). Anchors advance by the span,
    // so consecutive strata share their boundary path vertices.
    const std::pair<int, int> templates[6] = {{1, n}, {2, n}, {2, n + 1},
                                              {3, n}, {3, n + 1}, {3, n + 2}};
    std::vector<VertexList> family_paths;
    for (int s = 1; s <= n - 2; ++s) {
        for (const auto& [k, start] : templates) {
            std::vector<int> anchors;
            for (int i = start; i <= l - n - k - 1; i += k) anchors.push_back(i);
            if (anchors.empty()) {
                family_paths.push_back(q);
                continue;
            }
            VertexList seq(q.begin(), q.begin() + anchors.front() + 1);
            for (int i : anchors) {
                auto it = stratum_paths.find({i, k});
                bool use_stratum = it != stratum_paths.end() &&
                                   s <= static_cast<int>(it->second.size());
                if (use_stratum) {
                    const auto& inner = it->second[static_cast<size_t>(s - 1)];
                    seq.insert(seq.end(), inner.begin(), inner.end());
                } else {
                    for (int j = i + 1; j < i + k; ++j) seq.push_back(q[static_cast<size_t>(j)]);
                }
                seq.push_back(q[static_cast<size_t>(i + k)]);
            }
            for (int j = anchors.back() + k + 1; j < l; ++j) seq.push_back(q[static_cast<size_t>(j)]);
            family_paths.push_back(std::move(seq));
        }
    }
    for (auto& p : family_paths) {
        if (std::find(cert.paths.begin(), cert.paths.end(), p) == cert.paths.end())
            cert.paths.push_back(std::move(p));
    }

    std::set<Vertex> universe(q.begin(), q.end());
    universe.insert(attachments.begin(), attachments.end());
    validate_cover_result(d, cert.paths, universe, false, "cover_attached_path");
    if (cert.size() > table.attached_cover_bound)
        throw ConstructionError("cover_attached_path", "certificate exceeds the claimed bound");
    return cert;
}

namespace {

std::string clique_failure_diagnosis(const AttachmentProfile& a, const AttachmentProfile& b) {
    if (a.first_idx == b.first_idx) return "co-anchored non-adjacent pair: two-tail structure present";
    int ta = attachment_type_index(a.kind), tb = attachment_type_index(b.kind);
    if (ta > tb) std::swap(ta, tb);
    auto in = [&](std::initializer_list<std::pair<int, int>> set) {
        for (auto [x, y] : set)
            if (x == ta && y == tb) return true;
        return false;
    };
    if (in({{1, 3}, {1, 6}, {2, 5}, {3, 6}})) return "two-chain structure (plain) present";
    if (in({{1, 5}})) return "two-chain structure (closed hub) present";
    if (in({{2, 3}, {2, 6}, {4, 5}, {5, 6}})) return "oriented two-chain structure (out-hub) present";
    if (in({{3, 4}, {3, 7}, {5, 7}})) return "oriented two-chain structure (reversed hub) present";
    if (in({{4, 6}, {6, 7}})) return "pair should have been selected as blocking";
    return "unclassified non-adjacent slot pair";
}

} // namespace

PathCoverCertificate partition_attached_path(const Digraph& d, const VertexList& q,
                                             const VertexList& attachments, int n, DropEnd drop,
                                             const SolverOptions& solver) {
    validate_attached_inputs(d, q, attachments, n, "partition_attached_path");
    const int l = static_cast<int>(q.size());
    ConstantsTable table = constants_for(n);

    PathCoverCertificate cert;
    cert.mode = CoverMode::Partition;
    cert.n = n;
    cert.provenance = make_provenance("partition_attached_path");
    cert.bound = BoundInfo{std::to_string(table.attached_partition_bound),
                           {{"anchor-groups", std::to_string(static_cast<long long>(n) * (n + 5) / 2),
                             "n*(n+5)/2"},
                            {"spanning-path", "1", ""}}};

    auto apply_drop = [&](VertexList seq) {
        if (drop == DropEnd::First) seq.erase(seq.begin());
        else if (drop == DropEnd::Last) seq.pop_back();
        return seq;
    };

    if (attachments.empty()) {
        VertexList seq = apply_drop(q);
        if (!seq.empty()) cert.paths.push_back(seq);
        return cert;
    }

    AttachedContext ctx = build_context(d, q, attachments, n);
    std::map<Vertex, const AttachmentProfile*> by_vertex;
    for (const auto& p : ctx.profiles) by_vertex[p.y] = &p;

    for (const auto& [i, group] : ctx.anchor_groups) {
        for (size_t a = 0; a < group.size(); ++a)
            for (size_t b = a + 1; b < group.size(); ++b)
                if (!d.adjacent(group[a], group[b]))
                    throw CliqueCheckError(group[a], group[b],
                                           "co-anchored non-adjacent pair: two-tail structure present");
        cert.paths.push_back(group_spanning_path(d, group));
    }

    // Slot groups: every unblocked attachment rides the spanning path
    // between q[slot] and q[slot+1].
    std::map<int, VertexList> slot_groups;
    for (const auto& [key, members] : ctx.strata)
        for (Vertex y : members) {
            const auto& p = *by_vertex.at(y);
            if (p.slot < 0)
                throw ConstructionError("insertion-slot",
                                        "attachment " + std::to_string(y) +
                                            " has no insertion slot; interval property fails");
            slot_groups[p.slot].push_back(y);
        }
    for (const auto& [slot, group] : slot_groups) {
        for (size_t a = 0; a < group.size(); ++a)
            for (size_t b = a + 1; b < group.size(); ++b)
                if (!d.adjacent(group[a], group[b]))
                    throw CliqueCheckError(
                        group[a], group[b],
                        clique_failure_diagnosis(*by_vertex.at(group[a]), *by_vertex.at(group[b])));
    }

    VertexList spine(q.begin(), q.begin() + n + 1);
    for (int i = n; i <= l - n - 2; ++i) {
        auto it = slot_groups.find(i);
        if (it != slot_groups.end()) {
            VertexList inner = group_spanning_path(d, it->second);
            spine.insert(spine.end(), inner.begin(), inner.end());
        }
        spine.push_back(q[static_cast<size_t>(i + 1)]);
    }
    for (int j = l - n; j < l; ++j) spine.push_back(q[static_cast<size_t>(j)]);
    cert.paths.push_back(apply_drop(std::move(spine)));

    std::set<Vertex> universe(q.begin(), q.end());
    universe.insert(attachments.begin(), attachments.end());
    if (drop == DropEnd::First) universe.erase(q.front());
    if (drop == DropEnd::Last) universe.erase(q.back());
    validate_cover_result(d, cert.paths, universe, true, "partition_attached_path");
    if (cert.size() > table.attached_partition_bound)
        throw ConstructionError("partition_attached_path", "certificate exceeds the claimed bound");
    return cert;
}

// ---------------------------------------------------------------- theorem --

PathCoverCertificate certified_cover(const Digraph& d, int n, CoverMode mode,
                                     const TheoremOptions& opts) {
    if (n < 2) throw InvalidParameterError("certified_cover needs n >= 2");
    if (d.order() < 1) throw EmptyGraphError("certified_cover needs order >= 1");
    if (d.order() > opts.search.cap)
        throw TooLargeError("certified_cover: order exceeds cap " +
                            std::to_string(opts.search.cap));
    if (!is_weakly_connected(d))
        throw PreconditionError("certified_cover: digraph is not weakly connected");

    const Condition freeness = mode == CoverMode::Cover ? Condition::D1 : Condition::DPrime1;
    for (Condition cond : {freeness, Condition::D2, Condition::D3}) {
        auto report = check_condition(d, cond, n, opts.detector);
        if (report.status == CheckStatus::Violated) throw ConditionViolatedError(report);
        if (report.status == CheckStatus::Inconclusive)
            throw TooLargeError("certified_cover: condition scan hit its budget");
    }

    ConstantsTable table = constants_for(n);
    PathCoverCertificate cert;
    cert.mode = mode;
    cert.n = n;
    cert.provenance = make_provenance("certified_cover");
    cert.provenance["tie_break"] = "lexicographic-least, lesser-endpoint-first";
    cert.constants = constants_to_map(table);

    if (n == 2) {
        // The underlying graph is complete here, so one spanning path does it.
        cert.paths.push_back(tournament_spanning_path(d));
        cert.bound = BoundInfo{"1", {{"complete-underlying", "1", "alpha(G)=1"}}};
        std::set<Vertex> universe;
        for (Vertex v = 0; v < d.order(); ++v) universe.insert(v);
        validate_cover_result(d, cert.paths, universe, mode == CoverMode::Partition,
                              "certified_cover");
        return cert;
    }

    const Graph& g = d.underlying();
    VertexList path = longest_induced_path(g, opts.search);
    LayerDecomposition layers = layer_decomposition(g, path, table.end_margin);
    const int m = static_cast<int>(path.size());

    // Shells: small independence-bounded partitions, one group per shell.
    for (size_t idx = 0; idx < layers.shells.size(); ++idx) {
        const auto& shell = layers.shells[idx];
        if (shell.empty()) continue;
        auto [sub, map] = d.induced(shell);
        int a = alpha_exact(sub.underlying()).size;
        if (mpz_class(a) > table.alpha[idx + 1])
            throw ConstructionError("shell-independence",
                                    "shell exceeds its derived independence bound");
        auto gm = gallai_milgram_partition(sub, opts.solver);
        for (const auto& p : gm.paths) cert.paths.push_back(remap(p, map));
    }

    // Branch positions split the path spine into directed segments.
    std::vector<int> branch_positions;
    for (int t = 1; t + 1 < m; ++t) {
        bool fwd_in = d.has_arc(path[static_cast<size_t>(t - 1)], path[static_cast<size_t>(t)]);
        bool fwd_out = d.has_arc(path[static_cast<size_t>(t)], path[static_cast<size_t>(t + 1)]);
        if (fwd_in != fwd_out) branch_positions.push_back(t);
    }
    const int p = static_cast<int>(branch_positions.size());
    if (p > n)
        throw ConstructionError("spine-branches", "branch count exceeds n after the D3 check");

    std::vector<int> bounds{0};
    for (int t : branch_positions) bounds.push_back(t);
    bounds.push_back(m - 1);

    std::vector<bool> in_j0(static_cast<size_t>(m), false);
    for (int j = 0; j < m; ++j)
        if (j < table.end_margin || j >= m - table.end_margin) in_j0[static_cast<size_t>(j)] = true;
    std::vector<bool> in_j1(static_cast<size_t>(m), false);
    for (int t : branch_positions)
        for (int j = std::max(0, t - (n - 1)); j <= std::min(m - 1, t + (n - 1)); ++j)
            in_j1[static_cast<size_t>(j)] = true;

    // Hub attachments: anything in Y near a branch window.
    VertexList hub;
    std::vector<VertexList> segment_attachments(static_cast<size_t>(p + 1));
    for (Vertex y : layers.mid_attachments) {
        bool near_branch = false;
        int segment = -1;
        for (int jpos = 0; jpos < m && !near_branch; ++jpos) {
            if (!g.adjacent(y, path[static_cast<size_t>(jpos)])) continue;
            if (in_j1[static_cast<size_t>(jpos)]) {
                near_branch = true;
                break;
            }
            if (in_j0[static_cast<size_t>(jpos)])
                throw ConstructionError("mid-attachments",
                                        "attachment touches a protected end segment");
            int h = static_cast<int>(std::upper_bound(bounds.begin(), bounds.end(), jpos) -
                                     bounds.begin()) - 1;
            if (segment >= 0 && segment != h)
                throw ConstructionError("segment-split",
                                        "attachment spans two segments; span bound violated");
            segment = h;
        }
        if (near_branch)
            hub.push_back(y);
        else
            segment_attachments[static_cast<size_t>(segment)].push_back(y);
    }

    long long core_paths = 0;
    if (!hub.empty()) {
        auto [sub, map] = d.induced(hub);
        auto gm = gallai_milgram_partition(sub, opts.solver);
        if (static_cast<long long>(gm.paths.size()) > table.hub_bound)
            throw ConstructionError("hub-cover", "hub cover exceeds its bound");
        for (const auto& q : gm.paths) cert.paths.push_back(remap(q, map));
        core_paths += static_cast<long long>(gm.paths.size());
    }

    for (int h = 0; h <= p; ++h) {
        VertexList segment(path.begin() + bounds[static_cast<size_t>(h)],
                           path.begin() + bounds[static_cast<size_t>(h + 1)] + 1);
        // Orient the segment along its arcs.
        if (segment.size() >= 2 && !d.has_arc(segment[0], segment[1]))
            std::reverse(segment.begin(), segment.end());

        const VertexList& att = segment_attachments[static_cast<size_t>(h)];
        PathCoverCertificate piece;
        if (mode == CoverMode::Cover) {
            piece = cover_attached_path(d, segment, att, n, opts.solver);
        } else {
            DropEnd drop = DropEnd::None;
            if (h >= 1) {
                Vertex shared = path[static_cast<size_t>(bounds[static_cast<size_t>(h)])];
                drop = segment.front() == shared ? DropEnd::First : DropEnd::Last;
            }
            piece = partition_attached_path(d, segment, att, n, drop, opts.solver);
        }
        for (auto& q : piece.paths) cert.paths.push_back(std::move(q));
        core_paths += piece.size();
    }

    const long long core_bound =
        mode == CoverMode::Cover ? table.core_cover_bound : table.core_partition_bound;
    if (core_paths > core_bound)
        throw ConstructionError("certified_cover", "core paths exceed the derived core bound");

    const long long attached_bound = mode == CoverMode::Cover ? table.attached_cover_bound
                                                              : table.attached_partition_bound;
    const mpz_class total =
        mode == CoverMode::Cover ? table.cover_total : table.partition_total;
    BoundInfo bound;
    bound.total = total.get_str();
    bound.terms.push_back({"shell-sum", table.shell_bound.get_str(),
                           "sum(alpha_i, i=1..2*end_margin-1)"});
    bound.terms.push_back({"hub-neighborhoods", std::to_string(table.hub_bound), "n*(2n-1)*(n-1)"});
    bound.terms.push_back({"segment-covers",
                           std::to_string((static_cast<long long>(n) + 1) * attached_bound),
                           "(n+1)*(per-segment bound)"});
    cert.bound = bound;
    cert.provenance["spine_branches"] = std::to_string(p);

    std::set<Vertex> universe;
    for (Vertex v = 0; v < d.order(); ++v) universe.insert(v);
    validate_cover_result(d, cert.paths, universe, mode == CoverMode::Partition,
                          "certified_cover");
    return cert;
}

} // namespace pathcover
