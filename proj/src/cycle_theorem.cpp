#include "pathcover/cycle_theorem.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pathcover/constants.hpp"
#include "pathcover/graph.hpp"

namespace pathcover {

namespace {

mpz_class pow_mpz(const mpz_class& base, int exp) {
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

} // namespace

CycleTheoremReport check_cycle_theorem(const Digraph& d, int n, const SolverOptions& opts) {
    if (n < 2) throw InvalidParameterError("check_cycle_theorem needs n >= 2");
    if (n > 20) throw TooLargeError("check_cycle_theorem: n too large for 2^(n-1)");
    CycleTheoremReport rep;
    rep.n = n;

    const int s = (1 << (n - 1)) - 1;
    rep.degree_bound = ramsey_upper(std::max(s, 1), n).value - 1;
    rep.order_bound = n >= 3 ? pow_mpz(rep.degree_bound, n - 2) : mpz_class(1);
    if (rep.order_bound < 1) rep.order_bound = 1; // single-vertex convention

    if (d.order() == 0) {
        rep.failure = "empty digraph";
        return rep;
    }
    if (!is_weakly_connected(d)) {
        rep.failure = "not weakly connected";
        return rep;
    }
    auto premise = check_condition(d, Condition::Sec4Premise, n);
    if (!premise.satisfied()) {
        rep.failure = "forbidden structure: " + premise.witness->pattern;
        rep.witness = premise.witness;
        return rep;
    }
    rep.premise_ok = true;

    const Graph& g = d.underlying();
    rep.max_deg = max_degree(g);
    rep.diam = diameter(g);

    mpz_class degree_power = rep.max_deg > 0 ? pow_mpz(mpz_class(rep.max_deg), rep.diam)
                                             : mpz_class(1);
    if (degree_power < 1) degree_power = 1;
    rep.bounds_ok = mpz_class(rep.max_deg) <= rep.degree_bound && rep.diam <= n - 2 &&
                    mpz_class(d.order()) <= degree_power && degree_power <= rep.order_bound;

    if (d.order() <= opts.cap) {
        auto [value, cert] = cp_exact(d, opts);
        rep.cp_value = value;
    }
    return rep;
}

namespace {

/// Canonical arc-list of a small digraph: minimize the concatenated
/// adjacency code over all vertex permutations.
std::string canonical_form(int order, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<int> code(static_cast<size_t>(order) * static_cast<size_t>(order), 0);
    for (const auto& [u, v] : arcs)
        code[static_cast<size_t>(u) * static_cast<size_t>(order) + static_cast<size_t>(v)] = 1;
    std::vector<int> perm(static_cast<size_t>(order));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> candidate(code.size());
        for (int u = 0; u < order; ++u)
            for (int v = 0; v < order; ++v)
                candidate[static_cast<size_t>(perm[static_cast<size_t>(u)]) *
                              static_cast<size_t>(order) +
                          static_cast<size_t>(perm[static_cast<size_t>(v)])] =
                    code[static_cast<size_t>(u) * static_cast<size_t>(order) +
                         static_cast<size_t>(v)];
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::pair<int, int>> canon_arcs;
    for (int u = 0; u < order; ++u)
        for (int v = 0; v < order; ++v)
            if (best[static_cast<size_t>(u) * static_cast<size_t>(order) + static_cast<size_t>(v)])
                canon_arcs.emplace_back(u, v);
    Digraph canon(order, canon_arcs);
    return canon.serialize();
}

/// Quick premise rejections that avoid building a Digraph for the bulk
/// of the enumeration. For n == 3 a connected host must have a complete
/// underlying graph; for n == 2 it must be edgeless.
bool quick_reject(int n, int order, const std::vector<unsigned>& und_rows) {
    if (n == 3) {
        unsigned full = (order >= 32 ? 0u : (1u << order) - 1);
        for (int v = 0; v < order; ++v)
            if ((und_rows[static_cast<size_t>(v)] | (1u << v)) != full) return true;
        return false;
    }
    if (n == 2) {
        for (int v = 0; v < order; ++v)
            if (und_rows[static_cast<size_t>(v)] != 0 && order > 1) return true;
        return false;
    }
    return false;
}

bool connected_rows(int order, const std::vector<unsigned>& und_rows) {
    unsigned seen = 1u;
    unsigned frontier = 1u;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < order; ++v)
            if (frontier & (1u << v)) next |= und_rows[static_cast<size_t>(v)];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (order >= 32 ? ~0u : (1u << order) - 1);
}

} // namespace

SmallVerificationSummary exhaustive_small_verification(int n, int max_order) {
    if (n < 2) throw InvalidParameterError("exhaustive_small_verification needs n >= 2");
    if (max_order < 1 || max_order > 6)
        throw TooLargeError("exhaustive_small_verification: max_order must be 1..6");

    SmallVerificationSummary sum;
    sum.n = n;
    sum.max_order = max_order;
    const int s = (1 << (n - 1)) - 1;
    mpz_class degree_bound = ramsey_upper(std::max(s, 1), n).value - 1;
    sum.order_bound = n >= 3 ? pow_mpz(degree_bound, n - 2) : mpz_class(1);
    if (sum.order_bound < 1) sum.order_bound = 1;

    std::set<std::string> seen_forms;
    SolverOptions solver;

    for (int order = 1; order <= max_order; ++order) {
        const int pairs = order * (order - 1) / 2;
        std::vector<std::pair<int, int>> pair_idx;
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v) pair_idx.emplace_back(u, v);

        std::vector<int> state(static_cast<size_t>(pairs), 0); // 0 none, 1 u->v, 2 v->u
        while (true) {
            ++sum.examined;
            std::vector<unsigned> und(static_cast<size_t>(order), 0);
            std::vector<std::pair<int, int>> arcs;
            for (int p = 0; p < pairs; ++p) {
                if (state[static_cast<size_t>(p)] == 0) continue;
                auto [u, v] = pair_idx[static_cast<size_t>(p)];
                und[static_cast<size_t>(u)] |= 1u << v;
                und[static_cast<size_t>(v)] |= 1u << u;
                if (state[static_cast<size_t>(p)] == 1)
                    arcs.emplace_back(u, v);
                else
                    arcs.emplace_back(v, u);
            }

            bool keep = connected_rows(order, und) && !quick_reject(n, order, und);
            if (keep) {
                Digraph d(order, arcs);
                auto premise = check_condition(d, Condition::Sec4Premise, n);
                if (premise.satisfied()) {
                    ++sum.survivors_labeled;
                    sum.max_survivor_order = std::max(sum.max_survivor_order, order);
                    if (mpz_class(order) > sum.order_bound) sum.all_within_bound = false;
                    auto [cp, cert] = cp_exact(d, solver);
                    if (mpz_class(cp) > sum.order_bound) sum.all_within_bound = false;
                    std::string form = canonical_form(order, arcs);
                    if (seen_forms.insert(form).second) {
                        ++sum.survivors_iso;
                        sum.survivor_forms.push_back(form);
                    }
                }
            }

            int p = 0;
            while (p < pairs && state[static_cast<size_t>(p)] == 2) {
                state[static_cast<size_t>(p)] = 0;
                ++p;
            }
            if (p == pairs) break;
            ++state[static_cast<size_t>(p)];
        }
    }
    std::sort(sum.survivor_forms.begin(), sum.survivor_forms.end());
    return sum;
}

} // namespace pathcover
