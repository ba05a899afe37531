#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "pathcover/detectors.hpp"
#include "pathcover/families.hpp"

using namespace pathcover;

namespace {

Digraph directed_path(int order) {
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i + 1 < order; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(order, std::move(arcs));
}

bool is_induced_copy(const Graph& host, const Graph& pattern, const VertexList& image) {
    if (static_cast<int>(image.size()) != pattern.order()) return false;
    for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = i + 1; j < image.size(); ++j) {
            if (image[i] == image[j]) return false;
            if (host.adjacent(image[i], image[j]) !=
                pattern.adjacent(static_cast<int>(i), static_cast<int>(j)))
                return false;
        }
    return true;
}

bool is_induced_copy(const Digraph& host, const Digraph& pattern, const VertexList& image) {
    if (static_cast<int>(image.size()) != pattern.order()) return false;
    for (size_t i = 0; i < image.size(); ++i)
        for (size_t j = 0; j < image.size(); ++j) {
            if (i != j && image[i] == image[j]) return false;
            if (i == j) continue;
            if (host.has_arc(image[i], image[j]) !=
                pattern.has_arc(static_cast<int>(i), static_cast<int>(j)))
                return false;
        }
    return true;
}

/// All-subsets brute-force oracle for induced containment.
bool contains_induced_brute(const Graph& host, const Graph& pattern) {
    const int n = host.order(), k = pattern.order();
    if (k > n) return false;
    VertexList pick(static_cast<size_t>(k));
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == k) return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            bool ok = true;
            for (int s = 0; s < depth && ok; ++s)
                ok = host.adjacent(pick[static_cast<size_t>(s)], v) == pattern.adjacent(s, depth);
            if (!ok) continue;
            used[static_cast<size_t>(v)] = true;
            pick[static_cast<size_t>(depth)] = v;
            if (rec(depth + 1)) return true;
            used[static_cast<size_t>(v)] = false;
        }
        return false;
    };
    return rec(0);
}

bool contains_induced_brute(const Digraph& host, const Digraph& pattern) {
    const int n = host.order(), k = pattern.order();
    if (k > n) return false;
    VertexList pick(static_cast<size_t>(k));
    std::vector<bool> used(static_cast<size_t>(n), false);
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == k) return true;
        for (Vertex v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            bool ok = true;
            for (int s = 0; s < depth && ok; ++s)
                ok = host.has_arc(pick[static_cast<size_t>(s)], v) == pattern.has_arc(s, depth) &&
                     host.has_arc(v, pick[static_cast<size_t>(s)]) == pattern.has_arc(depth, s);
            if (!ok) continue;
            used[static_cast<size_t>(v)] = true;
            pick[static_cast<size_t>(depth)] = v;
            if (rec(depth + 1)) return true;
            used[static_cast<size_t>(v)] = false;
        }
        return false;
    };
    return rec(0);
}

/// Random host with a planted induced copy: extra vertices only connect
/// to each other and outward to the copy, never inside it.
Graph plant_graph(const Graph& pattern, int extra, std::mt19937_64& rng) {
    int n = pattern.order() + extra;
    std::vector<Graph::Edge> edges = pattern.edges();
    for (int u = pattern.order(); u < n; ++u)
        for (int v = 0; v < u; ++v)
            if (rng() % 3 == 0) edges.emplace_back(v, u);
    return Graph(n, std::move(edges));
}

Digraph plant_digraph(const Digraph& pattern, int extra, std::mt19937_64& rng) {
    int n = pattern.order() + extra;
    std::vector<Digraph::Arc> arcs = pattern.arcs();
    for (int u = pattern.order(); u < n; ++u)
        for (int v = 0; v < u; ++v)
            if (rng() % 3 == 0) {
                if (rng() & 1)
                    arcs.emplace_back(v, u);
                else
                    arcs.emplace_back(u, v);
            }
    return Digraph(n, std::move(arcs));
}

} // namespace

TEST_CASE("graph pattern search basics") {
    CHECK_FALSE(find_induced_graph(generate_graph(Family::Complete, 3),
                                   generate_graph(Family::Path, 3)));
    auto w = find_induced_graph(generate_graph(Family::Path, 4), generate_graph(Family::Path, 3));
    REQUIRE(w.has_value());
    CHECK(*w == VertexList{0, 1, 2}); // lexicographically least image
    CHECK_FALSE(find_induced_graph(generate_graph(Family::F2, 3), generate_graph(Family::F1, 3)));
}

TEST_CASE("digraph pattern search basics") {
    Digraph d1 = generate_digraph(Family::D1, 3);
    auto w = find_induced_digraph(d1, d1);
    REQUIRE(w.has_value());
    VertexList identity;
    for (int i = 0; i < d1.order(); ++i) identity.push_back(i);
    CHECK(*w == identity);

    Digraph cycle3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(find_induced_digraph(generate_digraph(Family::TransTournament, 5), cycle3));
    CHECK_FALSE(find_induced_digraph(generate_digraph(Family::D1, 2),
                                     generate_digraph(Family::D2, 2)));
}

TEST_CASE("detector agrees with the all-subsets oracle") {
    std::mt19937_64 rng(43);
    std::vector<Graph> graph_patterns;
    std::vector<Digraph> digraph_patterns;
    for (int n = 1; n <= 5; ++n) {
        if (2 * n <= 5) graph_patterns.push_back(generate_graph(Family::KStar, n));
        if (n + 1 <= 5) graph_patterns.push_back(generate_graph(Family::Star, n));
        graph_patterns.push_back(generate_graph(Family::Path, n));
        graph_patterns.push_back(generate_graph(Family::Complete, n));
        if (2 * n + 2 <= 5) {
            graph_patterns.push_back(generate_graph(Family::F1, n));
            graph_patterns.push_back(generate_graph(Family::F2, n));
            graph_patterns.push_back(generate_graph(Family::F3, n));
            graph_patterns.push_back(generate_graph(Family::F4, n));
        }
        if (2 * n + 1 <= 5) {
            digraph_patterns.push_back(generate_digraph(Family::D1, n));
            digraph_patterns.push_back(generate_digraph(Family::D2, n));
            digraph_patterns.push_back(generate_digraph(Family::D3, n));
        }
        digraph_patterns.push_back(generate_digraph(Family::TransTournament, n));
    }

    for (int t = 0; t < 60; ++t) {
        int order = 4 + static_cast<int>(rng() % 4); // up to 7
        double prob = (t % 2) ? 0.35 : 0.6;
        Digraph host = random_oriented(order, prob, rng());
        for (const auto& p : graph_patterns) {
            auto found = find_induced_graph(host.underlying(), p);
            CHECK(found.has_value() == contains_induced_brute(host.underlying(), p));
            if (found) CHECK(is_induced_copy(host.underlying(), p, *found));
        }
        for (const auto& p : digraph_patterns) {
            auto found = find_induced_digraph(host, p);
            CHECK(found.has_value() == contains_induced_brute(host, p));
            if (found) CHECK(is_induced_copy(host, p, *found));
        }
    }
}

TEST_CASE("plant-and-find recovers every family") {
    std::mt19937_64 rng(47);
    for (int n = 1; n <= 4; ++n) {
        for (Family f : {Family::KStar, Family::Star, Family::Path, Family::Complete, Family::F1,
                         Family::F2, Family::F3, Family::F4}) {
            Graph pattern = generate_graph(f, n);
            if (pattern.order() > 10) continue;
            for (int t = 0; t < 4; ++t) {
                Graph host = plant_graph(pattern, std::min(14 - pattern.order(), 4), rng);
                auto w = find_induced_graph(host, pattern);
                CAPTURE(family_name(f));
                CAPTURE(n);
                REQUIRE(w.has_value());
                CHECK(is_induced_copy(host, pattern, *w));
            }
        }
        for (Family f : {Family::D1, Family::D2, Family::D3, Family::TransTournament}) {
            Digraph pattern = generate_digraph(f, n);
            if (pattern.order() > 10) continue;
            for (int t = 0; t < 4; ++t) {
                Digraph host = plant_digraph(pattern, std::min(14 - pattern.order(), 4), rng);
                auto w = find_induced_digraph(host, pattern);
                CAPTURE(family_name(f));
                CAPTURE(n);
                REQUIRE(w.has_value());
                CHECK(is_induced_copy(host, pattern, *w));
            }
        }
    }
}

TEST_CASE("pseudo-path scan: exact maxima and witnesses") {
    auto scan = max_pseudo_path_branch(directed_path(10));
    CHECK(scan.max_branch == 0);
    CHECK(scan.complete);

    Digraph zig = zigzag_pseudo_path(7, {1, 2, 3, 4});
    auto zscan = max_pseudo_path_branch(zig);
    CHECK(zscan.max_branch == 4);
    CHECK(branch_count(zig, zscan.witness) == 4);

    auto tscan = max_pseudo_path_branch(generate_digraph(Family::TransTournament, 4));
    CHECK(tscan.max_branch == 0);
    CHECK(tscan.witness.size() <= 2);
}

TEST_CASE("pseudo-path scan agrees with sequence brute force") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 40; ++t) {
        int order = 3 + static_cast<int>(rng() % 5);
        Digraph d = random_oriented(order, 0.4, rng());
        // Brute force: all vertex permutations of all subsets, testing
        // the pseudo-path property through branch_count.
        int best = 0;
        for (unsigned s = 1; s < (1u << order); ++s) {
            VertexList verts;
            for (int v = 0; v < order; ++v)
                if (s >> v & 1) verts.push_back(v);
            std::sort(verts.begin(), verts.end());
            do {
                try {
                    best = std::max(best, branch_count(d, verts));
                } catch (const NotAPseudoPathError&) {
                }
            } while (std::next_permutation(verts.begin(), verts.end()));
        }
        auto scan = max_pseudo_path_branch(d);
        CAPTURE(d.serialize());
        CHECK(scan.complete);
        CHECK(scan.max_branch == best);
    }
}

TEST_CASE("condition checks") {
    CHECK(check_condition(directed_path(10), Condition::D3, 3).satisfied());

    Digraph zig = zigzag_pseudo_path(9, {1, 3, 5, 7});
    auto rep = check_condition(zig, Condition::D3, 3);
    CHECK(rep.status == CheckStatus::Violated);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->branch_detail == 4);
    CHECK(branch_count(zig, rep.witness->host_vertices) == rep.witness->branch_detail);

    Digraph d1 = generate_digraph(Family::D1, 3);
    auto d2rep = check_condition(d1, Condition::D2, 3);
    CHECK(d2rep.status == CheckStatus::Violated);
    REQUIRE(d2rep.witness.has_value());
    CHECK(d2rep.witness->host_vertices.size() == 7);

    // A directed path passes every freeness battery.
    for (Condition c : {Condition::D1, Condition::DPrime1, Condition::D2})
        CHECK(check_condition(directed_path(12), c, 3).satisfied());

    // The star violates d1 at its own parameter.
    Digraph star_out(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK_FALSE(check_condition(star_out, Condition::D1, 4).satisfied());
    CHECK(check_condition(star_out, Condition::D1, 5).satisfied());
}

TEST_CASE("sec4 premise battery") {
    Digraph cycle3(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(check_condition(cycle3, Condition::Sec4Premise, 3).satisfied());

    auto t4 = check_condition(generate_digraph(Family::TransTournament, 4),
                              Condition::Sec4Premise, 3);
    CHECK(t4.status == CheckStatus::Violated);
    REQUIRE(t4.witness.has_value());
    CHECK(t4.witness->pattern == "tt(n=3)");

    auto p6 = check_condition(directed_path(6), Condition::Sec4Premise, 3);
    CHECK(p6.status == CheckStatus::Violated);
    REQUIRE(p6.witness.has_value());
    CHECK(p6.witness->pattern == "path(n=3)");
}

TEST_CASE("span-violating attachments force a two-chain structure") {
    std::mt19937_64 rng(59);
    const int n = 3;
    const int l = 2 * n + 9;
    for (int t = 0; t < 40; ++t) {
        std::vector<Graph::Edge> edges;
        for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
        const Vertex y = l;
        // 0-based: positions n..l-n-1 are usable; plant span 0 or >= 4.
        bool span0 = t % 2 == 0;
        int lo = n + static_cast<int>(rng() % (l - 2 * n - (span0 ? 0 : 4)));
        if (span0) {
            edges.emplace_back(lo, y);
        } else {
            int hi = lo + 4;
            edges.emplace_back(lo, y);
            edges.emplace_back(hi, y);
            for (int j = lo + 1; j < hi; ++j)
                if (rng() & 1) edges.emplace_back(j, y);
        }
        Graph g(l + 1, std::move(edges));
        bool f1 = find_induced_graph(g, generate_graph(Family::F1, n)).has_value();
        bool f2 = find_induced_graph(g, generate_graph(Family::F2, n)).has_value();
        CAPTURE(t);
        CHECK((f1 || f2));
    }
}

TEST_CASE("d3 scan budget turns into inconclusive") {
    DetectorOptions tiny;
    tiny.state_budget = 3;
    Digraph d = zigzag_pseudo_path(12, {1, 3, 5, 7, 9});
    auto rep = check_condition(d, Condition::D3, 3, tiny);
    // Either the violation is found within the budget or the scan
    // reports that it could not finish; it must never claim "satisfied".
    CHECK(rep.status != CheckStatus::Satisfied);
}
