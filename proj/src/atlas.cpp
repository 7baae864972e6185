#include "domset/atlas.hpp"

#include <map>

namespace domset {

std::vector<Pattern> all_patterns_of_order(int k) {
    if (k < 1 || k > kDefaultPatternCap)
        throw std::invalid_argument("atlas order out of range");
    std::vector<Pattern> current = {Pattern::from_edges(1, {})};
    for (int order = 2; order <= k; ++order) {
        std::map<uint64_t, Pattern> next;
        for (const Pattern& base : current) {
            for (uint32_t nb = 0; nb < (1u << (order - 1)); ++nb) {
                std::vector<std::pair<int, int>> edges = base.edges;
                for (int v = 0; v < order - 1; ++v)
                    if ((nb >> v) & 1u) edges.emplace_back(v, order - 1);
                Pattern ext = Pattern::from_edges(order, std::move(edges));
                next.emplace(pattern_canonical(ext), std::move(ext));
            }
        }
        current.clear();
        for (auto& [key, p] : next) current.push_back(std::move(p));
    }
    return current;
}

std::vector<Pattern> all_patterns_up_to(int k) {
    std::vector<Pattern> out;
    for (int order = 1; order <= k; ++order) {
        auto batch = all_patterns_of_order(order);
        out.insert(out.end(), std::make_move_iterator(batch.begin()),
                   std::make_move_iterator(batch.end()));
    }
    return out;
}

}  // namespace domset
