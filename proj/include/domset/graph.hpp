#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domset {

inline constexpr int kDefaultPatternCap = 10;
// Canonical forms pack the upper triangle into 64 bits; C(11,2) = 55.
inline constexpr int kHardPatternLimit = 11;

using VertexSet = std::vector<int>;  // always sorted ascending

/// Thrown when a configured resource guard (family size, oracle subset
/// cap) would be exceeded. Mapped to exit code 3 by the CLI.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected host graph with dense ids 0..n-1.
struct HostGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> adj;       // sorted neighbor lists
    std::vector<int> degree;

    static HostGraph from_edges(int n, std::vector<std::pair<int, int>> raw_edges);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    bool valid_vertex(int v) const { return v >= 0 && v < n; }
};

/// Small pattern graph; `isolated` is exactly the degree-0 vertex set.
struct Pattern {
    int k = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    VertexSet isolated;
    std::vector<uint32_t> adj_mask;  // per-vertex neighbor bitmask

    static Pattern from_edges(int k, std::vector<std::pair<int, int>> raw_edges,
                              int cap = kDefaultPatternCap);

    bool has_edge(int u, int v) const { return (adj_mask[u] >> v) & 1u; }
    int degree(int v) const;
};

struct Witness {
    VertexSet vertices;  // strictly increasing
};

HostGraph parse_host_graph(const std::string& text);
std::string serialize_host_graph(const HostGraph& g);

/// Pattern DSL: clique:k | independent:k | star:k | path:k | cycle:k |
/// matching:k (k even) | edges:k:[u-v,...]
Pattern parse_pattern(const std::string& spec, int cap = kDefaultPatternCap);

bool is_dominating(const HostGraph& g, std::span<const int> d);
bool induces_pattern(const HostGraph& g, std::span<const int> d, const Pattern& p);

/// Minimum upper-triangle adjacency bitstring over all k! relabelings.
uint64_t canonical_form(int k, std::span<const uint32_t> adj_mask);
uint64_t pattern_canonical(const Pattern& p);

/// Canonical form of G[d]; |d| must be small (<= kHardPatternLimit).
uint64_t induced_canonical(const HostGraph& g, std::span<const int> d);

std::string witness_to_json(const Witness& w);

int isqrt_floor(long long x);

}  // namespace domset
