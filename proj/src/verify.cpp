#include "pathcover/verify.hpp"

#include <cctype>
#include <set>
#include <vector>

namespace pathcover {

namespace {

// Minimal standalone reader for the arc-list format. Kept separate from
// the library parser so the validator is adversarial to the producers.
struct RawDigraph {
    long long order = 0;
    std::set<std::pair<long long, long long>> arcs;
    bool ok = false;
    std::string error;
};

RawDigraph read_arcs(const std::string& text) {
    RawDigraph g;
    std::vector<long long> numbers;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                value = value * 10 + (text[i] - '0');
                ++i;
            }
            numbers.push_back(value);
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ';') {
            ++i;
        } else {
            g.error = "unexpected character in graph text";
            return g;
        }
    }
    if (numbers.empty() || numbers.size() % 2 == 0) {
        g.error = "graph text must hold an order followed by arc pairs";
        return g;
    }
    g.order = numbers[0];
    for (size_t k = 1; k + 1 < numbers.size(); k += 2)
        g.arcs.emplace(numbers[k], numbers[k + 1]);
    g.ok = true;
    return g;
}

VerifyResult fail(const std::string& message) { return {false, message}; }

} // namespace

VerifyResult verify_certificate(const std::string& graph_text, const nlohmann::json& cert) {
    RawDigraph g = read_arcs(graph_text);
    if (!g.ok) return fail("graph parse: " + g.error);

    std::string kind = cert.value("kind", "path-cover");
    std::string mode = cert.value("mode", "");
    if (mode != "cover" && mode != "partition") return fail("certificate has no valid mode");
    const bool disjoint = mode == "partition";

    std::set<long long> covered;
    auto check_vertex = [&](long long v) -> std::string {
        if (v < 0 || v >= g.order) return "vertex " + std::to_string(v) + " out of range";
        return "";
    };

    if (kind == "path-cover") {
        if (!cert.contains("paths")) return fail("certificate has no paths");
        std::set<long long> disjoint_seen;
        int index = 0;
        for (const auto& jp : cert.at("paths")) {
            std::vector<long long> path = jp.get<std::vector<long long>>();
            if (path.empty()) return fail("path " + std::to_string(index) + " is empty");
            std::set<long long> within;
            for (long long v : path) {
                if (auto e = check_vertex(v); !e.empty()) return fail(e);
                if (!within.insert(v).second)
                    return fail("vertex " + std::to_string(v) + " repeated in path " +
                                std::to_string(index));
                if (disjoint && !disjoint_seen.insert(v).second)
                    return fail("vertex " + std::to_string(v) + " in two paths");
                covered.insert(v);
            }
            for (size_t i = 0; i + 1 < path.size(); ++i)
                if (!g.arcs.count({path[i], path[i + 1]}))
                    return fail("missing arc " + std::to_string(path[i]) + "->" +
                                std::to_string(path[i + 1]) + " in path " + std::to_string(index));
            ++index;
        }
    } else if (kind == "cycle-cover") {
        if (!cert.contains("units")) return fail("certificate has no units");
        std::set<long long> disjoint_seen;
        int index = 0;
        for (const auto& ju : cert.at("units")) {
            bool is_cycle = ju.value("cycle", false);
            std::vector<long long> vs = ju.at("vertices").get<std::vector<long long>>();
            if (vs.empty()) return fail("unit " + std::to_string(index) + " is empty");
            std::set<long long> within;
            for (long long v : vs) {
                if (auto e = check_vertex(v); !e.empty()) return fail(e);
                if (!within.insert(v).second)
                    return fail("vertex repeated in unit " + std::to_string(index));
                if (disjoint && !disjoint_seen.insert(v).second)
                    return fail("vertex " + std::to_string(v) + " in two units");
                covered.insert(v);
            }
            if (is_cycle) {
                if (vs.size() < 3)
                    return fail("cycle unit " + std::to_string(index) + " has fewer than 3 vertices");
                for (size_t i = 0; i < vs.size(); ++i) {
                    long long a = vs[i], b = vs[(i + 1) % vs.size()];
                    if (!g.arcs.count({a, b}))
                        return fail("missing cycle arc " + std::to_string(a) + "->" +
                                    std::to_string(b) + " in unit " + std::to_string(index));
                }
            } else {
                if (vs.size() > 2)
                    return fail("unit " + std::to_string(index) + " exceeds order 2");
                if (vs.size() == 2 && !g.arcs.count({vs[0], vs[1]}) &&
                    !g.arcs.count({vs[1], vs[0]}))
                    return fail("unit " + std::to_string(index) + " is not weakly connected");
            }
            ++index;
        }
    } else {
        return fail("unknown certificate kind: " + kind);
    }

    for (long long v = 0; v < g.order; ++v)
        if (!covered.count(v)) return fail("vertex " + std::to_string(v) + " uncovered");
    return {true, "ok"};
}

} // namespace pathcover
