#include "domset/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace domset {

int isqrt_floor(long long x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return static_cast<int>(r);
}

HostGraph HostGraph::from_edges(int n, std::vector<std::pair<int, int>> raw_edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    HostGraph g;
    g.n = n;
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : raw_edges) {
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
        dedup.emplace(u, v);
    }
    g.edges.assign(dedup.begin(), dedup.end());
    g.adj.assign(n, {});
    g.degree.assign(n, 0);
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    for (int v = 0; v < n; ++v) g.degree[v] = static_cast<int>(g.adj[v].size());
    return g;
}

bool HostGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Pattern Pattern::from_edges(int k, std::vector<std::pair<int, int>> raw_edges, int cap) {
    if (k < 1) throw std::invalid_argument("pattern must have at least one vertex");
    if (cap > kHardPatternLimit) cap = kHardPatternLimit;
    if (k > cap)
        throw std::invalid_argument("pattern order " + std::to_string(k) +
                                    " exceeds cap " + std::to_string(cap));
    Pattern p;
    p.k = k;
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : raw_edges) {
        if (u == v) throw std::invalid_argument("pattern self-loop");
        if (u < 0 || v < 0 || u >= k || v >= k)
            throw std::invalid_argument("pattern edge endpoint out of range");
        if (u > v) std::swap(u, v);
        dedup.emplace(u, v);
    }
    p.edges.assign(dedup.begin(), dedup.end());
    p.adj_mask.assign(k, 0);
    for (auto [u, v] : p.edges) {
        p.adj_mask[u] |= 1u << v;
        p.adj_mask[v] |= 1u << u;
    }
    for (int v = 0; v < k; ++v)
        if (p.adj_mask[v] == 0) p.isolated.push_back(v);
    return p;
}

int Pattern::degree(int v) const { return std::popcount(adj_mask[v]); }

namespace {

int parse_int_token(const std::string& tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        throw std::invalid_argument("non-integer token '" + tok + "' at line " +
                                    std::to_string(line_no));
    return value;
}

}  // namespace

HostGraph parse_host_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    struct Row {
        int u, v, line_no;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) throw std::invalid_argument("expected two integers at line " +
                                                    std::to_string(line_no));
        if (ls >> extra)
            throw std::invalid_argument("trailing token at line " + std::to_string(line_no));
        rows.push_back({parse_int_token(a, line_no), parse_int_token(b, line_no), line_no});
    }
    if (rows.empty()) return HostGraph::from_edges(0, {});
    // The optional "n m" header is detected by value: it declares a vertex
    // count at least one past every id used on later lines.
    int max_rest = -1;
    for (size_t i = 1; i < rows.size(); ++i) max_rest = std::max({max_rest, rows[i].u, rows[i].v});
    bool header = rows.size() == 1 ? rows[0].v == 0 : rows[0].u >= max_rest + 1;
    int header_n = header ? rows[0].u : -1;
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    for (size_t i = header ? 1 : 0; i < rows.size(); ++i) {
        if (rows[i].u == rows[i].v)
            throw std::invalid_argument("self-loop at line " + std::to_string(rows[i].line_no));
        edges.emplace_back(rows[i].u, rows[i].v);
        max_id = std::max({max_id, rows[i].u, rows[i].v});
    }
    return HostGraph::from_edges(std::max(header_n, max_id + 1), std::move(edges));
}

std::string serialize_host_graph(const HostGraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Pattern parse_pattern(const std::string& spec, int cap) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pattern spec '" + spec + "' missing ':'");
    std::string family = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto colon2 = rest.find(':');
    std::string k_str = colon2 == std::string::npos ? rest : rest.substr(0, colon2);
    int k = 0;
    auto [ptr, ec] = std::from_chars(k_str.data(), k_str.data() + k_str.size(), k);
    if (ec != std::errc() || ptr != k_str.data() + k_str.size() || k < 1)
        throw std::invalid_argument("bad pattern order in '" + spec + "'");

    std::vector<std::pair<int, int>> edges;
    if (family == "clique") {
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    } else if (family == "independent") {
        // no edges
    } else if (family == "star") {
        if (k < 2) throw std::invalid_argument("star needs k >= 2");
        for (int i = 1; i < k; ++i) edges.emplace_back(0, i);
    } else if (family == "path") {
        for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    } else if (family == "cycle") {
        if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
        for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    } else if (family == "matching") {
        if (k % 2 != 0) throw std::invalid_argument("matching needs even k");
        for (int i = 0; i < k; i += 2) edges.emplace_back(i, i + 1);
    } else if (family == "edges") {
        if (colon2 == std::string::npos)
            throw std::invalid_argument("edges spec needs edge list: edges:k:[u-v,...]");
        std::string list = rest.substr(colon2 + 1);
        if (list.size() < 2 || list.front() != '[' || list.back() != ']')
            throw std::invalid_argument("edges list must be bracketed");
        list = list.substr(1, list.size() - 2);
        std::istringstream ls(list);
        std::string item;
        while (std::getline(ls, item, ',')) {
            if (item.empty()) continue;
            auto dash = item.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("bad edge '" + item + "'");
            edges.emplace_back(parse_int_token(item.substr(0, dash), 0),
                               parse_int_token(item.substr(dash + 1), 0));
        }
    } else {
        throw std::invalid_argument("unknown pattern family '" + family + "'");
    }
    return Pattern::from_edges(k, std::move(edges), cap);
}

bool is_dominating(const HostGraph& g, std::span<const int> d) {
    std::vector<char> covered(g.n, 0);
    for (int v : d) {
        if (!g.valid_vertex(v)) throw std::invalid_argument("vertex out of range");
        covered[v] = 1;
        for (int u : g.adj[v]) covered[u] = 1;
    }
    for (int v = 0; v < g.n; ++v)
        if (!covered[v]) return false;
    return true;
}

namespace {

inline int tri_index(int i, int j, int k) {
    // upper-triangle position of (i < j) in a k-vertex graph
    return i * k - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

uint64_t canonical_form(int k, std::span<const uint32_t> adj_mask) {
    if (k > kHardPatternLimit) throw std::invalid_argument("graph too large for canonical form");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    std::vector<std::pair<int, int>> edge_list;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if ((adj_mask[u] >> v) & 1u) edge_list.emplace_back(u, v);
    do {
        uint64_t bits = 0;
        for (auto [u, v] : edge_list) {
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            bits |= 1ull << tri_index(a, b, k);
        }
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

uint64_t pattern_canonical(const Pattern& p) { return canonical_form(p.k, p.adj_mask); }

uint64_t induced_canonical(const HostGraph& g, std::span<const int> d) {
    int k = static_cast<int>(d.size());
    std::vector<uint32_t> masks(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(d[i], d[j])) {
                masks[i] |= 1u << j;
                masks[j] |= 1u << i;
            }
    return canonical_form(k, masks);
}

bool induces_pattern(const HostGraph& g, std::span<const int> d, const Pattern& p) {
    if (static_cast<int>(d.size()) != p.k)
        throw std::invalid_argument("witness size does not match pattern order");
    for (int v : d)
        if (!g.valid_vertex(v)) throw std::invalid_argument("vertex out of range");
    // cheap degree-multiset screen before the k! canonical form
    std::vector<int> dp, dg;
    for (int v = 0; v < p.k; ++v) dp.push_back(p.degree(v));
    for (int i = 0; i < p.k; ++i) {
        int deg = 0;
        for (int j = 0; j < p.k; ++j)
            if (i != j && g.has_edge(d[i], d[j])) ++deg;
        dg.push_back(deg);
    }
    std::sort(dp.begin(), dp.end());
    std::sort(dg.begin(), dg.end());
    if (dp != dg) return false;
    return induced_canonical(g, d) == pattern_canonical(p);
}

std::string witness_to_json(const Witness& w) {
    std::ostringstream out;
    out << "{\"vertices\":[";
    for (size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) out << ',';
        out << w.vertices[i];
    }
    out << "]}";
    return out.str();
}

}  // namespace domset
