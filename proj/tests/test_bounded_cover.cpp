#include <doctest.h>

#include <random>

#include "pathcover/bounded_cover.hpp"
#include "pathcover/experiments.hpp"
#include "pathcover/families.hpp"
#include "pathcover/verify.hpp"

using namespace pathcover;

namespace {

Digraph directed_path(int order) {
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i + 1 < order; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(order, std::move(arcs));
}

Graph cycle_graph(int order) {
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < order; ++i) edges.emplace_back(i, (i + 1) % order);
    return Graph(order, std::move(edges));
}

bool replay(const Digraph& d, const PathCoverCertificate& cert) {
    return verify_certificate(d.serialize(), to_json(cert)).ok;
}

VertexList iota_list(int n) {
    VertexList v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

} // namespace

TEST_CASE("longest induced path staples") {
    CHECK(longest_induced_path(generate_graph(Family::Path, 6)) == iota_list(6));
    CHECK(longest_induced_path(generate_graph(Family::Complete, 4)).size() == 2);
    CHECK(longest_induced_path(cycle_graph(5)).size() == 4);
    CHECK(longest_induced_path(Graph(3, {})) == VertexList{0});
    // Canonical tie-break: lexicographically least, lesser endpoint first.
    CHECK(longest_induced_path(generate_graph(Family::Complete, 4)) == VertexList{0, 1});
    SearchOptions tight;
    tight.cap = 4;
    CHECK_THROWS_AS(longest_induced_path(generate_graph(Family::Path, 6), tight), TooLargeError);
}

TEST_CASE("longest induced path matches brute force on random graphs") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 40; ++t) {
        int order = 3 + static_cast<int>(rng() % 6);
        Digraph d = random_oriented(order, 0.4, rng());
        const Graph& g = d.underlying();
        // Brute force over all permutations of all subsets.
        int best = 1;
        VertexList verts = iota_list(order);
        for (unsigned s = 1; s < (1u << order); ++s) {
            VertexList sub;
            for (int v = 0; v < order; ++v)
                if (s >> v & 1) sub.push_back(v);
            std::sort(sub.begin(), sub.end());
            do {
                bool induced_path = true;
                for (size_t i = 0; i < sub.size() && induced_path; ++i)
                    for (size_t j = i + 1; j < sub.size() && induced_path; ++j)
                        induced_path = g.adjacent(sub[i], sub[j]) == (j == i + 1);
                if (induced_path) best = std::max(best, static_cast<int>(sub.size()));
            } while (std::next_permutation(sub.begin(), sub.end()));
        }
        auto found = longest_induced_path(g);
        CAPTURE(d.serialize());
        CHECK(static_cast<int>(found.size()) == best);
    }
}

TEST_CASE("layer decomposition on a bare path") {
    const int n0 = 3;
    Graph g = generate_graph(Family::Path, 2 * n0 + 5);
    auto layers = layer_decomposition(g, iota_list(2 * n0 + 5), n0);
    CHECK(layers.end_segments.size() == 2 * n0);
    CHECK(layers.mid_attachments.empty());
    for (const auto& shell : layers.shells) CHECK(shell.empty());
}

TEST_CASE("layer decomposition routes attachments and shells") {
    const int n0 = 3;
    const int m = 2 * n0 + 5;
    // One vertex hanging off the middle of the path, one off the first
    // path vertex.
    std::vector<Graph::Edge> edges;
    for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
    const Vertex mid_friend = m, end_friend = m + 1;
    edges.emplace_back(n0 + 2, mid_friend);
    edges.emplace_back(0, end_friend);
    Graph g(m + 2, std::move(edges));

    VertexList path = iota_list(m);
    auto layers = layer_decomposition(g, path, n0);
    CHECK(layers.mid_attachments == VertexList{mid_friend});
    REQUIRE(!layers.shells.empty());
    CHECK(layers.shells[0] == VertexList{end_friend});
}

TEST_CASE("layer decomposition flags non-longest paths") {
    // Claiming only a sub-path of a long path leaves shells overflowing.
    Graph g = generate_graph(Family::Path, 30);
    VertexList claimed = {10, 11, 12};
    CHECK_THROWS_AS(layer_decomposition(g, claimed, 3), DecompositionError);
}

TEST_CASE("attachment profiles classify the seven kinds") {
    const int n = 3, len = 20;
    using BA = BatteryAttachment;
    const std::pair<BA, AttachmentKind> table[] = {
        {BA::T1, AttachmentKind::Span1},       {BA::T2, AttachmentKind::Span2Fwd},
        {BA::T3, AttachmentKind::Span2Back},   {BA::T4, AttachmentKind::Span3FwdFwd},
        {BA::T5, AttachmentKind::Span3BackFwd}, {BA::T6, AttachmentKind::Span3BackBack},
        {BA::T7, AttachmentKind::Span3FwdBack}};
    const int expected_slot_offset[] = {0, 0, 1, 0, 1, 2, 0};

    int idx = 0;
    for (const auto& [ba, kind] : table) {
        VertexList q, ys;
        Digraph d = make_attached_instance(len, n, {{5, ba}}, &q, &ys);
        auto p = profile_attachment(d, q, ys[0], n);
        CAPTURE(idx);
        CHECK(p.kind == kind);
        CHECK(p.first_idx == 5);
        CHECK(p.slot == 5 + expected_slot_offset[idx]);
        CHECK(attachment_type_index(p.kind) == idx + 1);
        ++idx;
    }

    for (BA ba : {BA::BlockingFirst, BA::BlockingLast}) {
        VertexList q, ys;
        Digraph d = make_attached_instance(len, n, {{5, ba}}, &q, &ys);
        auto p = profile_attachment(d, q, ys[0], n);
        CHECK(p.kind == AttachmentKind::Blocking);
    }
}

TEST_CASE("attachment profile preconditions and span bounds") {
    const int n = 3;
    Digraph d = directed_path(20);
    VertexList q = iota_list(20);
    CHECK_THROWS_AS(profile_attachment(d, q, 5, n), PreconditionError); // on the path

    // Span 0 and span 4 raise the index-bound diagnostic.
    {
        std::vector<Digraph::Arc> arcs;
        for (int i = 0; i + 1 < 20; ++i) arcs.emplace_back(i, i + 1);
        arcs.emplace_back(8, 20);
        Digraph host(21, std::move(arcs));
        CHECK_THROWS_AS(profile_attachment(host, q, 20, n), IndexBoundError);
    }
    {
        std::vector<Digraph::Arc> arcs;
        for (int i = 0; i + 1 < 20; ++i) arcs.emplace_back(i, i + 1);
        arcs.emplace_back(6, 20);
        arcs.emplace_back(20, 10);
        Digraph host(21, std::move(arcs));
        CHECK_THROWS_AS(profile_attachment(host, q, 20, n), IndexBoundError);
    }
    // Neighbors must stay clear of the protected ends.
    {
        std::vector<Digraph::Arc> arcs;
        for (int i = 0; i + 1 < 20; ++i) arcs.emplace_back(i, i + 1);
        arcs.emplace_back(1, 20);
        arcs.emplace_back(20, 2);
        Digraph host(21, std::move(arcs));
        CHECK_THROWS_AS(profile_attachment(host, q, 20, n), PreconditionError);
    }
}

TEST_CASE("stratum chain ends match the parity/residue tables") {
    // The chains the six templates traverse stop exactly where the
    // parity (span 2) and mod-3 (span 3) case tables say they should.
    for (int n = 3; n <= 5; ++n) {
        for (int l = 2 * n + 2; l <= 2 * n + 22; ++l) {
            // span 2, starts n+1 and n+2 (1-based)
            int xi0 = (l % 2 == 1) ? l - n : l - n - 1;
            int xi1 = (l % 2 == 1) ? l - n - 1 : l - n;
            // span 3, starts n+1, n+2, n+3 (1-based)
            int rem = ((l - 2 * n) % 3 + 3) % 3;
            int xip0 = rem == 0 ? l - n - 2 : (rem == 1 ? l - n : l - n - 1);
            int xip1 = rem == 0 ? l - n - 1 : (rem == 1 ? l - n - 2 : l - n);
            int xip2 = rem == 0 ? l - n : (rem == 1 ? l - n - 1 : l - n - 2);

            auto last_anchor = [&](int k, int start_1b) {
                int last = -1;
                for (int i = start_1b; i <= l - n - k; i += k) last = i;
                return last;
            };
            CAPTURE(n);
            CAPTURE(l);
            if (last_anchor(2, n + 1) > 0) CHECK(last_anchor(2, n + 1) == xi0 - 2);
            if (last_anchor(2, n + 2) > 0) CHECK(last_anchor(2, n + 2) == xi1 - 2);
            if (last_anchor(3, n + 1) > 0) CHECK(last_anchor(3, n + 1) == xip0 - 3);
            if (last_anchor(3, n + 2) > 0) CHECK(last_anchor(3, n + 2) == xip1 - 3);
            if (last_anchor(3, n + 3) > 0) CHECK(last_anchor(3, n + 3) == xip2 - 3);
        }
    }
}

TEST_CASE("blocking selection: indices and greedy spacing") {
    const int n = 3;
    {
        VertexList q, ys;
        Digraph d = make_attached_instance(20, n, {{5, BatteryAttachment::T1}}, &q, &ys);
        std::vector<AttachmentProfile> profiles{profile_attachment(d, q, ys[0], n)};
        auto sel = select_blocking_indices(d, q, profiles, n);
        CHECK(sel.sets.empty());
        CHECK(sel.indices.empty());
    }
    {
        VertexList q, ys;
        Digraph d = make_attached_instance(20, n, {{6, BatteryAttachment::BlockingLast}}, &q, &ys);
        std::vector<AttachmentProfile> profiles{profile_attachment(d, q, ys[0], n)};
        auto sel = select_blocking_indices(d, q, profiles, n);
        CHECK(sel.indices == std::vector<int>{6});
        CHECK(sel.spaced == std::vector<int>{6});
    }
    {
        // Two blocking singletons exactly n+5 apart: both spaced.
        VertexList q, ys;
        Digraph d = make_attached_instance(
            26, n, {{5, BatteryAttachment::BlockingLast}, {13, BatteryAttachment::BlockingLast}},
            &q, &ys);
        std::vector<AttachmentProfile> profiles;
        for (Vertex y : ys) profiles.push_back(profile_attachment(d, q, y, n));
        auto sel = select_blocking_indices(d, q, profiles, n);
        CHECK(sel.indices == std::vector<int>{5, 13});
        CHECK(sel.spaced == std::vector<int>{5, 13});
    }
    {
        // Closer than n+5: only the first is a spaced representative.
        VertexList q, ys;
        Digraph d = make_attached_instance(
            26, n, {{5, BatteryAttachment::BlockingLast}, {10, BatteryAttachment::BlockingLast}},
            &q, &ys);
        std::vector<AttachmentProfile> profiles;
        for (Vertex y : ys) profiles.push_back(profile_attachment(d, q, y, n));
        auto sel = select_blocking_indices(d, q, profiles, n);
        CHECK(sel.indices == std::vector<int>{5, 10});
        CHECK(sel.spaced == std::vector<int>{5});
    }
}

TEST_CASE("blocking pairs are detected with their partners") {
    const int n = 3, len = 24;
    // Two span-3 attachments with anchors two apart building the
    // blocking pattern: non-adjacent, with the four required arcs.
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i + 1 < len; ++i) arcs.emplace_back(i, i + 1);
    const Vertex ya = len, yb = len + 1;
    const int f = 8;
    arcs.push_back({f, ya});
    arcs.push_back({ya, f + 1});
    arcs.push_back({ya, f + 2});
    arcs.push_back({ya, f + 3});
    arcs.push_back({f + 2, yb});
    arcs.push_back({yb, f + 3});
    arcs.push_back({yb, f + 4});
    arcs.push_back({yb, f + 5});
    Digraph d(len + 2, std::move(arcs));
    VertexList q = iota_list(len);

    std::vector<AttachmentProfile> profiles{profile_attachment(d, q, ya, n),
                                            profile_attachment(d, q, yb, n)};
    CHECK(profiles[0].kind == AttachmentKind::Span3FwdFwd);
    CHECK(profiles[1].kind == AttachmentKind::Span3FwdFwd);
    auto sel = select_blocking_indices(d, q, profiles, n);
    REQUIRE(sel.sets.size() == 1);
    CHECK(sel.sets[0].members == VertexList{ya, yb});
    CHECK(sel.sets[0].first_idx == f);
    CHECK(sel.sets[0].last_idx == f + 5);
    CHECK(profiles[0].blocking_partner == yb);
    CHECK(profiles[1].blocking_partner == ya);
}

TEST_CASE("blocking overflow produces a high-branch pseudo-path witness") {
    const int n = 3, len = 120;
    std::vector<std::pair<int, BatteryAttachment>> prescription;
    for (int i = 0; i < 13; ++i)
        prescription.emplace_back(4 + 8 * i, BatteryAttachment::BlockingLast);
    VertexList q, ys;
    Digraph d = make_attached_instance(len, n, prescription, &q, &ys);
    std::vector<AttachmentProfile> profiles;
    for (Vertex y : ys) profiles.push_back(profile_attachment(d, q, y, n));
    try {
        select_blocking_indices(d, q, profiles, n);
        FAIL("expected BlockingOverflowError");
    } catch (const BlockingOverflowError& e) {
        CHECK(e.branch_count > n);
        CHECK(e.branch_count == 26); // two branch vertices per detour
        CHECK(branch_count(d, e.pseudo_path) == e.branch_count);
    }
}

TEST_CASE("attached-path cover and partition on battery scenarios") {
    const int n = 3, len = 30;
    ConstantsTable table = constants_for(n);
    SolverOptions big;
    big.cap = 40;

    using BA = BatteryAttachment;
    std::vector<std::vector<std::pair<int, BA>>> scenarios = {
        {{3, BA::T1}, {5, BA::T2}, {8, BA::T3}, {11, BA::T4}, {15, BA::T5}, {19, BA::T6},
         {23, BA::T7}},
        {{3, BA::T1}, {6, BA::T3}, {10, BA::T5}, {15, BA::T7}, {20, BA::BlockingLast},
         {23, BA::T6}},
        {{4, BA::BlockingFirst}, {9, BA::T4}, {14, BA::T2}, {18, BA::T6}},
        {},
    };

    for (size_t sc = 0; sc < scenarios.size(); ++sc) {
        CAPTURE(sc);
        VertexList q, ys;
        Digraph d = make_attached_instance(len, n, scenarios[sc], &q, &ys);

        auto cover = cover_attached_path(d, q, ys, n);
        CHECK(cover.size() <= table.attached_cover_bound);
        CHECK(replay(d, cover));

        auto part = partition_attached_path(d, q, ys, n, DropEnd::None);
        CHECK(part.size() <= table.attached_partition_bound);
        CHECK(replay(d, part));

        auto [pc, pc_cert] = pc_exact(d, big);
        auto [pp, pp_cert] = pp_exact(d, big);
        CHECK(cover.size() >= pc);
        CHECK(part.size() >= pp);
    }
}

TEST_CASE("attached-path bare and drop variants") {
    const int n = 3;
    Digraph d = directed_path(12);
    VertexList q = iota_list(12);

    auto cover = cover_attached_path(d, q, {}, n);
    REQUIRE(cover.size() == 1);
    CHECK(cover.paths[0] == q);

    auto part = partition_attached_path(d, q, {}, n, DropEnd::Last);
    REQUIRE(part.size() == 1);
    CHECK(part.paths[0] == iota_list(11));

    auto front = partition_attached_path(d, q, {}, n, DropEnd::First);
    REQUIRE(front.size() == 1);
    CHECK(front.paths[0].front() == 1);
}

TEST_CASE("partition rejects a gap attachment that cover tolerates") {
    // Span-2 attachment with no middle adjacency: fine for the cover
    // templates, impossible to slot into the spanning path.
    const int n = 3, len = 20;
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i + 1 < len; ++i) arcs.emplace_back(i, i + 1);
    const Vertex y = len;
    arcs.push_back({8, y});
    arcs.push_back({y, 10});
    Digraph d(len + 1, std::move(arcs));
    VertexList q = iota_list(len);

    auto cover = cover_attached_path(d, q, {y}, n);
    CHECK(replay(d, cover));
    CHECK_THROWS_AS(partition_attached_path(d, q, {y}, n, DropEnd::None), ConstructionError);
}

TEST_CASE("co-anchored non-adjacent attachments fail the clique check") {
    const int n = 3, len = 20;
    std::vector<Digraph::Arc> arcs;
    for (int i = 0; i + 1 < len; ++i) arcs.emplace_back(i, i + 1);
    const Vertex y1 = len, y2 = len + 1;
    for (Vertex y : {y1, y2}) {
        arcs.push_back({8, y});
        arcs.push_back({y, 9});
    }
    Digraph d(len + 2, std::move(arcs));
    VertexList q = iota_list(len);

    CHECK_THROWS_AS(partition_attached_path(d, q, {y1, y2}, n, DropEnd::None), CliqueCheckError);
    // The contrapositive: that configuration forces the closed
    // two-chain pattern in the underlying graph.
    bool f3 = find_induced_graph(d.underlying(), generate_graph(Family::F3, n)).has_value();
    bool f4 = find_induced_graph(d.underlying(), generate_graph(Family::F4, n)).has_value();
    CHECK((f3 || f4));
}

TEST_CASE("certified cover on simple hosts") {
    TheoremOptions opts;
    for (int n : {3, 4}) {
        auto cert = certified_cover(directed_path(12), n, CoverMode::Cover, opts);
        CHECK(cert.size() == 1);
        CHECK(replay(directed_path(12), cert));
    }
    // n=2: any tournament collapses to one spanning path.
    Digraph t4 = generate_digraph(Family::TransTournament, 4);
    for (CoverMode mode : {CoverMode::Cover, CoverMode::Partition}) {
        auto cert = certified_cover(t4, 2, mode, opts);
        CHECK(cert.size() == 1);
        CHECK(replay(t4, cert));
        CHECK(cert.bound->total == "1");
    }
}

TEST_CASE("certified cover rejects condition violations with a witness") {
    Digraph star_out(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    try {
        certified_cover(star_out, 3, CoverMode::Cover, {});
        FAIL("expected ConditionViolatedError");
    } catch (const ConditionViolatedError& e) {
        CHECK(e.report.condition == Condition::D1);
        REQUIRE(e.report.witness.has_value());
    }
    CHECK_THROWS_AS(certified_cover(Digraph(3, {{0, 1}}), 3, CoverMode::Cover, {}),
                    PreconditionError); // not weakly connected
}

TEST_CASE("certified cover sandwich on filtered random instances") {
    std::mt19937_64 rng(67);
    TheoremOptions opts;
    int accepted = 0;
    for (int t = 0; t < 400 && accepted < 25; ++t) {
        std::uint64_t seed = rng();
        int order = 5 + static_cast<int>(seed % 8);
        double prob = (t % 2) ? 0.85 : 0.65;
        Digraph d = random_oriented(order, prob, seed);
        if (!is_weakly_connected(d)) continue;
        if (!check_condition(d, Condition::D1, 3).satisfied()) continue;
        if (!check_condition(d, Condition::D2, 3).satisfied()) continue;
        if (!check_condition(d, Condition::D3, 3).satisfied()) continue;
        ++accepted;

        auto cert = certified_cover(d, 3, CoverMode::Cover, opts);
        auto [pc, pc_cert] = pc_exact(d);
        CAPTURE(d.serialize());
        CHECK(replay(d, cert));
        CHECK(cert.size() >= pc);
        CHECK(mpz_class(cert.bound->total) >= cert.size());

        if (check_condition(d, Condition::DPrime1, 3).satisfied()) {
            auto part = certified_cover(d, 3, CoverMode::Partition, opts);
            auto [pp, pp_cert] = pp_exact(d);
            CHECK(replay(d, part));
            CHECK(part.size() >= pp);
        }
    }
    CHECK(accepted >= 25);
}

TEST_CASE("certified partition of an oriented pseudo-path uses one path per run") {
    Digraph zig = zigzag_pseudo_path(14, {3, 7, 11});
    TheoremOptions opts;
    auto part = certified_cover(zig, 3, CoverMode::Partition, opts);
    CHECK(replay(zig, part));
    auto [pp, pp_cert] = pp_exact(zig);
    CHECK(pp == 4);
    CHECK(part.size() >= pp);

    auto cover = certified_cover(zig, 3, CoverMode::Cover, opts);
    CHECK(replay(zig, cover));
}
