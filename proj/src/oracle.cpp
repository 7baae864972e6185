#include "domset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace domset {

namespace {

// visit k-subsets of 0..n-1 in lexicographic order until the visitor
// returns true; enforces the subset cap
template <typename F>
bool for_each_subset(int n, int k, long long cap, F&& visit) {
    if (k > n || k < 0) return false;
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i) d[i] = i;
    long long seen = 0;
    while (true) {
        if (++seen > cap)
            throw ResourceLimitError("oracle subset cap exceeded (" + std::to_string(cap) + ")");
        if (visit(d)) return true;
        int i = k - 1;
        while (i >= 0 && d[i] == n - k + i) --i;
        if (i < 0) return false;
        ++d[i];
        for (int j = i + 1; j < k; ++j) d[j] = d[j - 1] + 1;
    }
}

// does g[d] contain p as a not-necessarily-induced subgraph? direct
// backtracking over injections, no canonical forms involved
bool contains_subgraph(const HostGraph& g, const VertexSet& d, const Pattern& p) {
    std::vector<int> image(p.k, -1);
    std::vector<char> used(d.size(), 0);
    std::function<bool(int)> assign = [&](int pv) -> bool {
        if (pv == p.k) return true;
        for (size_t i = 0; i < d.size(); ++i) {
            if (used[i]) continue;
            bool ok = true;
            for (int prev = 0; prev < pv && ok; ++prev)
                if (p.has_edge(prev, pv) && !g.has_edge(image[prev], d[i])) ok = false;
            if (!ok) continue;
            used[i] = 1;
            image[pv] = static_cast<int>(d[i]);
            if (assign(pv + 1)) return true;
            used[i] = 0;
        }
        return false;
    };
    return assign(0);
}

SolveResult oracle_scan(const HostGraph& g, int k, OracleBudgetGuard guard,
                        const std::function<bool(const VertexSet&)>& matches,
                        const std::function<int(const VertexSet&)>& member_of) {
    SolveResult res;
    res.route = "oracle-fallback";
    for_each_subset(g.n, k, guard.max_subsets, [&](const VertexSet& d) {
        if (!is_dominating(g, d) || !matches(d)) return false;
        res.found = true;
        res.witness = Witness{d};
        if (member_of) res.matched_member = member_of(d);
        return true;
    });
    return res;
}

}  // namespace

SolveResult oracle_solve(const HostGraph& g, const Pattern& p, OracleBudgetGuard guard) {
    return oracle_scan(
        g, p.k, guard, [&](const VertexSet& d) { return induces_pattern(g, d, p); }, nullptr);
}

SolveResult oracle_solve_set(const HostGraph& g, const PatternSet& ps, OracleBudgetGuard guard) {
    if (ps.members.empty()) throw std::invalid_argument("empty pattern set");
    int k = ps.members.front().k;
    for (const Pattern& p : ps.members)
        if (p.k != k) throw std::invalid_argument("pattern set members differ in order");
    auto member_of = [&](const VertexSet& d) {
        for (size_t i = 0; i < ps.members.size(); ++i)
            if (induces_pattern(g, d, ps.members[i])) return static_cast<int>(i);
        return -1;
    };
    return oracle_scan(
        g, k, guard, [&](const VertexSet& d) { return member_of(d) >= 0; }, member_of);
}

SolveResult oracle_solve_subgraph(const HostGraph& g, const Pattern& p, OracleBudgetGuard guard) {
    return oracle_scan(
        g, p.k, guard, [&](const VertexSet& d) { return contains_subgraph(g, d, p); }, nullptr);
}

RhoOracleResult oracle_rho(const Pattern& p) {
    RhoOracleResult best;
    std::vector<int> eligible;
    for (int v = 0; v < p.k; ++v)
        if (p.degree(v) > 0) eligible.push_back(v);

    int n_el = static_cast<int>(eligible.size());
    int best_value = std::numeric_limits<int>::min();
    for (uint32_t mask = 1; mask < (1u << n_el); ++mask) {
        VertexSet s;
        uint32_t s_bits = 0;
        for (int i = 0; i < n_el; ++i)
            if ((mask >> i) & 1u) {
                s.push_back(eligible[i]);
                s_bits |= 1u << eligible[i];
            }
        uint32_t nb = 0;
        for (int v : s) nb |= p.adj_mask[v];
        if (nb & s_bits) continue;  // not independent
        int value = static_cast<int>(s.size()) - std::popcount(nb);
        bool better = value > best_value ||
                      (value == best_value && s.size() > best.maximizer.size()) ||
                      (value == best_value && s.size() == best.maximizer.size() &&
                       s < best.maximizer);
        if (better) {
            best_value = value;
            best.maximizer = s;
        }
    }
    if (best.maximizer.empty() || best_value < 0) {
        best.rho = -1;
        best.maximizer.clear();
    } else {
        best.rho = best_value;
    }
    return best;
}

OvOracleResult oracle_ov(const OVInstance& instance, OracleBudgetGuard guard) {
    OvOracleResult res;
    long long product = 1;
    for (const auto& family : instance.sets) {
        if (family.empty()) return res;
        product *= static_cast<long long>(family.size());
        if (product > guard.max_subsets)
            throw ResourceLimitError("ov oracle product cap exceeded");
    }
    std::vector<int> idx(instance.k, 0);
    while (true) {
        uint64_t acc = instance.d >= 64 ? ~0ull : (1ull << instance.d) - 1;
        for (int i = 0; i < instance.k; ++i) acc &= instance.sets[i][idx[i]];
        if (acc == 0) {
            res.found = true;
            res.tuple = idx;
            return res;
        }
        int i = instance.k - 1;
        while (i >= 0 && idx[i] + 1 == static_cast<int>(instance.sets[i].size())) idx[i--] = 0;
        if (i < 0) return res;
        ++idx[i];
    }
}

}  // namespace domset
