#include "pathcover/constants.hpp"

#include <vector>

namespace pathcover {

namespace {

/// All s-subsets of {0..order-1} as edge masks over the C(order,2)
/// pair indexing used by the enumerator.
std::vector<std::pair<int, int>> pair_index(int order) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) pairs.emplace_back(u, v);
    return pairs;
}

std::vector<unsigned> subset_edge_masks(int order, int k) {
    auto pairs = pair_index(order);
    std::vector<unsigned> masks;
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
        unsigned mask = 0;
        for (size_t a = 0; a < pick.size(); ++a)
            for (size_t b = a + 1; b < pick.size(); ++b)
                for (size_t p = 0; p < pairs.size(); ++p)
                    if (pairs[p].first == pick[a] && pairs[p].second == pick[b])
                        mask |= 1u << p;
        masks.push_back(mask);
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == order - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return masks;
}

} // namespace

bool ramsey_holds_at_order(int s, int t, int order) {
    if (s < 1 || t < 1 || order < 0) throw InvalidParameterError("ramsey oracle: bad arguments");
    if (s == 1 || t == 1) return order >= 1;
    int pair_count = order * (order - 1) / 2;
    if (pair_count > 20) throw TooLargeError("ramsey oracle: too many pairs to enumerate");
    auto clique_masks = s <= order ? subset_edge_masks(order, s) : std::vector<unsigned>{};
    auto indep_masks = t <= order ? subset_edge_masks(order, t) : std::vector<unsigned>{};

    for (unsigned g = 0; g < (1u << pair_count); ++g) {
        bool found = false;
        for (unsigned m : clique_masks)
            if ((g & m) == m) {
                found = true;
                break;
            }
        if (!found)
            for (unsigned m : indep_masks)
                if ((g & m) == 0) {
                    found = true;
                    break;
                }
        if (!found) return false;
    }
    return true;
}

bool ramsey_exact_verified(int s, int t, int claimed) {
    if (claimed < 2) throw InvalidParameterError("claimed Ramsey value must be >= 2");
    return ramsey_holds_at_order(s, t, claimed) && !ramsey_holds_at_order(s, t, claimed - 1);
}

RamseyBound ramsey_upper(int s, const mpz_class& t) {
    if (s < 1 || t < 1) throw InvalidParameterError("ramsey_upper: arguments must be >= 1");
    if (s == 1 || t == 1) return {1, true};
    if (s == 2) return {t, true};
    if (t == 2) return {s, true};
    if (s == 3 && t == 3) {
        static const bool verified = ramsey_exact_verified(3, 3, 6);
        if (verified) return {6, true};
    }
    // C(s+t-2, s-1): symmetric, monotone, and always >= R(s, t).
    mpz_class n = t + s - 2;
    mpz_class result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(s - 1));
    return {result, false};
}

ConstantsTable constants_for(int n) {
    if (n < 2) throw InvalidParameterError("constants need n >= 2");
    ConstantsTable t;
    t.n = n;
    const int raw = n * n - n - 2; // nonnegative for n >= 2
    t.end_margin = std::max((raw + 1) / 2, n);

    const int m = t.end_margin;
    t.alpha.resize(static_cast<size_t>(2 * m));
    t.alpha_exact_entries.assign(static_cast<size_t>(2 * m), true);
    t.alpha[0] = 2 * ((m + 1) / 2);
    for (int i = 1; i < 2 * m; ++i) {
        auto r = ramsey_upper(n, t.alpha[static_cast<size_t>(i - 1)] + 1);
        t.alpha[static_cast<size_t>(i)] = (n - 1) * r.value - 1;
        t.alpha_exact_entries[static_cast<size_t>(i)] = r.exact;
    }

    const long long ln = n;
    t.attached_cover_bound = (ln - 2) * ln * (ln + 5) / 2 + 6 * (ln - 2);
    t.attached_partition_bound = ln * (ln + 5) / 2 + 1;
    t.hub_bound = ln * (2 * ln - 1) * (ln - 1);
    t.core_cover_bound = t.hub_bound + (ln + 1) * t.attached_cover_bound;
    t.core_partition_bound = t.hub_bound + (ln + 1) * t.attached_partition_bound;

    t.shell_bound = 0;
    for (int i = 1; i < 2 * m; ++i) t.shell_bound += t.alpha[static_cast<size_t>(i)];
    t.cover_total = t.shell_bound + mpz_class(static_cast<long>(t.core_cover_bound));
    t.partition_total = t.shell_bound + mpz_class(static_cast<long>(t.core_partition_bound));
    return t;
}

std::map<std::string, std::string> constants_to_map(const ConstantsTable& t) {
    std::map<std::string, std::string> m;
    m["n"] = std::to_string(t.n);
    m["end_margin"] = std::to_string(t.end_margin);
    for (size_t i = 0; i < t.alpha.size(); ++i)
        m["alpha_" + std::to_string(i)] =
            t.alpha[i].get_str() + (t.alpha_exact_entries[i] ? " (exact)" : " (binomial)");
    m["attached_cover_bound"] = std::to_string(t.attached_cover_bound);
    m["attached_partition_bound"] = std::to_string(t.attached_partition_bound);
    m["hub_bound"] = std::to_string(t.hub_bound);
    m["core_cover_bound"] = std::to_string(t.core_cover_bound);
    m["core_partition_bound"] = std::to_string(t.core_partition_bound);
    m["shell_bound"] = t.shell_bound.get_str();
    m["cover_total"] = t.cover_total.get_str();
    m["partition_total"] = t.partition_total.get_str();
    return m;
}

} // namespace pathcover
