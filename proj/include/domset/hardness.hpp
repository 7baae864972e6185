#pragma once

#include <cstdint>
#include <string>

#include "domset/graph.hpp"
#include "domset/pattern_analysis.hpp"

namespace domset {

inline constexpr int kDefaultOvDimensionCap = 32;

struct OVInstance {
    int k = 0;
    int d = 0;
    std::vector<std::vector<uint64_t>> sets;  // k families of d-bit vectors (d <= 64)
};

enum class VectorMode { Random, PlantedOrthogonal, None };

/// Named vertex block of a generated host graph.
struct BlockRange {
    std::string name;
    int begin = 0, end = 0;  // ids [begin, end)
};

struct ReductionLayout {
    Pattern pattern;
    std::vector<int> group_sizes;      // |A_i| per pattern vertex
    std::vector<int> r_sizes;          // |R_i| = max(2, ceil(m / |A_i|))
    std::vector<int> pattern_vertex;   // which pattern vertex group i plays
    long long target_n = 0, target_m = 0;
};

struct ReductionOutput {
    HostGraph graph;
    std::vector<BlockRange> blocks;  // V_i, R_i, X ranges
};

struct AuditReport {
    bool ok = false;
    long long vertices = 0, edges = 0;
    long long v_lower = 0, v_upper = 0, e_lower = 0, e_upper = 0;
    std::string detail;
};

/// Group sizes from the decomposition roles: with S nonempty, |S| groups
/// of n, |N(S)| groups of floor(m/n), the rest of isqrt(m); with S empty,
/// one group of floor(m/n) and k-1 of isqrt(m). Any size flooring to 0 is
/// rejected.
ReductionLayout plan_reduction(const Pattern& p, long long n, long long m);

OVInstance make_ov_instance(const ReductionLayout& layout, int d, VectorMode mode, uint64_t seed);

ReductionOutput reduce(const OVInstance& instance, const ReductionLayout& layout);

AuditReport audit_sizes(const HostGraph& g, const ReductionLayout& layout, int d);

std::string blocks_to_json(const ReductionOutput& out);

}  // namespace domset
