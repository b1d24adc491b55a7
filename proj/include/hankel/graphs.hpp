#pragma once

// Labeled simple graphs on {1..n}, labeling classes and rooted labelings of trees.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hankel/error.hpp"

namespace hankel {

/// Unordered edge stored with i < j, labels 1-based.
struct Edge {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class LabeledGraph {
public:
    static constexpr int max_vertices = 63;

    LabeledGraph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n) + 1, 0) {
        if (n < 1 || n > max_vertices) throw DomainError("vertex count must be in 1.." + std::to_string(max_vertices));
        for (Edge e : edges) {
            if (e.i > e.j) std::swap(e.i, e.j);
            if (e.i == e.j) throw DomainError("loop at vertex " + std::to_string(e.i));
            if (e.i < 1 || e.j > n) throw DomainError("edge endpoint outside 1.." + std::to_string(n));
            if (has_edge(e.i, e.j))
                throw DomainError("duplicate edge {" + std::to_string(e.i) + "," + std::to_string(e.j) + "}");
            adj_[e.i] |= bit(e.j);
            adj_[e.j] |= bit(e.i);
            edges_.push_back(e);
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int n() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool has_edge(int i, int j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) return false;
        return (adj_[i] & bit(j)) != 0;
    }

    /// Bit v is set for each neighbor v.
    std::uint64_t neighbor_mask(int v) const { return adj_.at(v); }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 1; u <= n_; ++u)
            if (has_edge(v, u)) out.push_back(u);
        return out;
    }

    int degree(int v) const { return std::popcount(adj_.at(v)); }

    LabeledGraph with_edge(int i, int j) const {
        auto e = edges_;
        e.push_back(Edge{i, j});
        return LabeledGraph(n_, std::move(e));
    }

    LabeledGraph without_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto e = edges_;
        e.erase(std::remove(e.begin(), e.end(), Edge{i, j}), e.end());
        return LabeledGraph(n_, std::move(e));
    }

    /// Relabels vertex v as perm[v] (perm is 1-based, perm[0] unused).
    LabeledGraph relabeled(const std::vector<int>& perm) const {
        std::vector<Edge> e;
        for (Edge x : edges_) e.push_back(Edge{perm.at(x.i), perm.at(x.j)});
        return LabeledGraph(n_, std::move(e));
    }

    bool is_connected() const {
        std::uint64_t seen = bit(1), frontier = bit(1);
        while (frontier) {
            std::uint64_t next = 0;
            for (int v = 1; v <= n_; ++v)
                if (frontier & bit(v)) next |= adj_[v];
            frontier = next & ~seen;
            seen |= next;
        }
        return std::popcount(seen) == n_;
    }

    bool is_tree() const { return static_cast<int>(edges_.size()) == n_ - 1 && is_connected(); }

    bool is_path() const {
        if (!is_tree()) return false;
        for (int v = 1; v <= n_; ++v)
            if (degree(v) > 2) return false;
        return true;
    }

    bool is_leaf(int v) const { return degree(v) == 1; }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }
    friend bool operator<(const LabeledGraph& a, const LabeledGraph& b) {
        return std::tie(a.n_, a.edges_) < std::tie(b.n_, b.edges_);
    }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

inline std::string edges_to_string(const LabeledGraph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        if (!out.empty()) out += ' ';
        out += '{' + std::to_string(e.i) + ',' + std::to_string(e.j) + '}';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cliques and labeling classes.

/// All maximal cliques as vertex masks (bit v = vertex v), Bron-Kerbosch with pivoting.
inline std::vector<std::uint64_t> maximal_cliques(const LabeledGraph& g) {
    std::vector<std::uint64_t> out;
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
        [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
            if (p == 0 && x == 0) {
                out.push_back(r);
                return;
            }
            int pivot = 0, best = -1;
            for (std::uint64_t ux = p | x; ux; ux &= ux - 1) {
                const int u = std::countr_zero(ux);
                const int c = std::popcount(p & g.neighbor_mask(u));
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
            for (std::uint64_t cand = p & ~g.neighbor_mask(pivot); cand; cand &= cand - 1) {
                const int v = std::countr_zero(cand);
                const std::uint64_t vb = std::uint64_t{1} << v;
                expand(r | vb, p & g.neighbor_mask(v), x & g.neighbor_mask(v));
                p &= ~vb;
                x |= vb;
            }
        };
    std::uint64_t all = 0;
    for (int v = 1; v <= g.n(); ++v) all |= std::uint64_t{1} << v;
    expand(0, all, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every maximal clique is a run of consecutive labels.
inline bool is_closed_labeling(const LabeledGraph& g) {
    for (std::uint64_t c : maximal_cliques(g)) {
        const std::uint64_t shifted = c >> std::countr_zero(c);
        if ((shifted & (shifted + 1)) != 0) return false;
    }
    return true;
}

struct LabelClass {
    bool labeled_hamiltonian = false;
    bool labeled_semi_hamiltonian = false;
    bool closed_labeling = false;
    bool tree = false;
    bool path = false;
    bool connected = false;
};

inline bool contains_standard_path(const LabeledGraph& g) {
    for (int i = 1; i < g.n(); ++i)
        if (!g.has_edge(i, i + 1)) return false;
    return true;
}

inline LabelClass classify_labeling(const LabeledGraph& g) {
    LabelClass c;
    const bool path_sub = g.n() >= 2 && contains_standard_path(g);
    c.labeled_hamiltonian = path_sub && g.has_edge(1, g.n());
    c.labeled_semi_hamiltonian = path_sub && !g.has_edge(1, g.n());
    c.closed_labeling = is_closed_labeling(g);
    c.connected = g.is_connected();
    c.tree = g.is_tree();
    c.path = g.is_path();
    return c;
}

// ---------------------------------------------------------------------------
// Rooted labelings.

struct RootedLabelingCertificate {
    /// parent[v] for v = 2..n; parent[0] and parent[1] are 0.
    std::vector<int> parent;

    int root() const { return 1; }

    std::vector<int> children(int v) const {
        std::vector<int> out;
        for (std::size_t u = 2; u < parent.size(); ++u)
            if (parent[u] == v) out.push_back(static_cast<int>(u));
        return out;
    }
};

/// A tree labeling is rooted iff each v >= 2 has exactly one smaller neighbor
/// (its parent) and parents are non-decreasing in v.
inline std::optional<RootedLabelingCertificate> is_rooted_labeling(const LabeledGraph& t) {
    if (!t.is_tree()) throw DomainError("rooted labeling applies to trees");
    RootedLabelingCertificate cert;
    cert.parent.assign(static_cast<std::size_t>(t.n()) + 1, 0);
    for (int v = 2; v <= t.n(); ++v) {
        const std::uint64_t smaller = t.neighbor_mask(v) & ((std::uint64_t{1} << v) - 1);
        if (std::popcount(smaller) != 1) return std::nullopt;
        cert.parent[v] = std::countr_zero(smaller);
        if (v > 2 && cert.parent[v] < cert.parent[v - 1]) return std::nullopt;
    }
    return cert;
}

/// All rooted labelings of the tree's underlying shape, one per distinct edge set,
/// sorted. Each root is tried; labeled vertices are processed in label order and
/// hand consecutive labels to their unlabeled neighbors in every possible order.
inline std::vector<LabeledGraph> enumerate_rooted_labelings(const LabeledGraph& t) {
    if (!t.is_tree()) throw DomainError("rooted labeling applies to trees");
    const int n = t.n();
    std::set<LabeledGraph> found;
    std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);  // vertex -> new label
    std::vector<int> vertex_of(static_cast<std::size_t>(n) + 1, 0);

    std::function<void(int, int)> grow = [&](int current, int next) {
        if (next > n) {
            found.insert(t.relabeled(label));
            return;
        }
        if (current >= next) return;  // disconnected; cannot happen for trees
        const int v = vertex_of[current];
        std::vector<int> fresh;
        for (int u : t.neighbors(v))
            if (label[u] == 0) fresh.push_back(u);
        std::sort(fresh.begin(), fresh.end());
        do {
            for (std::size_t k = 0; k < fresh.size(); ++k) {
                label[fresh[k]] = next + static_cast<int>(k);
                vertex_of[next + static_cast<int>(k)] = fresh[k];
            }
            grow(current + 1, next + static_cast<int>(fresh.size()));
            for (int u : fresh) label[u] = 0;
        } while (std::next_permutation(fresh.begin(), fresh.end()));
    };

    for (int root = 1; root <= n; ++root) {
        std::fill(label.begin(), label.end(), 0);
        label[root] = 1;
        vertex_of[1] = root;
        grow(1, 2);
    }
    return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------
// Unlabeled trees.

namespace detail {

/// Pruefer decoding into adjacency masks (bit v = vertex v); adj is resized
/// to n + 1 and overwritten.
inline void prufer_adjacency(int n, const std::vector<int>& seq, std::vector<std::uint64_t>& adj) {
    int deg[64];
    std::fill(deg, deg + n + 1, 1);
    for (int s : seq) ++deg[s];
    adj.assign(static_cast<std::size_t>(n) + 1, 0);
    auto link = [&](int a, int b) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
    };
    for (int s : seq) {
        int leaf = 1;
        while (deg[leaf] != 1) ++leaf;
        link(leaf, s);
        --deg[leaf];
        --deg[s];
    }
    int u = 0, w = 0;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) (u == 0 ? u : w) = v;
    link(u, w);
}

inline std::string ahu_encoding(const std::vector<std::uint64_t>& adj, int v, int from) {
    std::vector<std::string> parts;
    for (std::uint64_t m = adj[v]; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (u != from) parts.push_back(ahu_encoding(adj, u, v));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    return out + ")";
}

/// Minimum AHU encoding over the centers of the tree given by adj.
inline std::string canonical_form(const std::vector<std::uint64_t>& adj) {
    const int n = static_cast<int>(adj.size()) - 1;
    std::vector<int> deg(adj.size());
    std::vector<int> layer;
    for (int v = 1; v <= n; ++v) {
        deg[v] = std::popcount(adj[v]);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            deg[v] = 0;
            for (std::uint64_t m = adj[v]; m; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (--deg[u] == 1) next.push_back(u);
            }
        }
        layer = std::move(next);
    }
    std::string best;
    for (int c : layer) {
        std::string code = ahu_encoding(adj, c, 0);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

/// AHU encoding packed into bits ('(' = 1, ')' = 0), for trees of at most
/// 32 vertices. Returns the code left-aligned in 64 bits and its length.
inline std::pair<std::uint64_t, int> packed_ahu(const std::vector<std::uint64_t>& adj, int v, int from) {
    std::pair<std::uint64_t, int> kids[32];
    int count = 0;
    for (std::uint64_t m = adj[v]; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        if (u != from) kids[count++] = packed_ahu(adj, u, v);
    }
    std::sort(kids, kids + count, [](const auto& a, const auto& b) { return a.first > b.first; });
    std::uint64_t code = std::uint64_t{1} << 63;
    int len = 1;
    for (int k = 0; k < count; ++k) {
        code |= kids[k].first >> len;
        len += kids[k].second;
    }
    return {code, len + 1};
}

/// Packed canonical code of a tree on at most 32 vertices: the larger code
/// over its centers.
inline std::uint64_t packed_canonical_form(const std::vector<std::uint64_t>& adj) {
    const int n = static_cast<int>(adj.size()) - 1;
    int deg[33] = {};
    int layer[33], next[33], size = 0;
    for (int v = 1; v <= n; ++v) {
        deg[v] = std::popcount(adj[v]);
        if (deg[v] <= 1) layer[size++] = v;
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= size;
        int next_size = 0;
        for (int k = 0; k < size; ++k) {
            deg[layer[k]] = 0;
            for (std::uint64_t m = adj[layer[k]]; m; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (--deg[u] == 1) next[next_size++] = u;
            }
        }
        std::copy(next, next + next_size, layer);
        size = next_size;
    }
    std::uint64_t best = 0;
    for (int k = 0; k < size; ++k) best = std::max(best, packed_ahu(adj, layer[k], 0).first);
    return best;
}

inline LabeledGraph graph_of(const std::vector<std::uint64_t>& adj) {
    const int n = static_cast<int>(adj.size()) - 1;
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (adj[a] >> b & 1) edges.push_back(Edge{a, b});
    return LabeledGraph(n, std::move(edges));
}

} // namespace detail

/// Isomorphism-invariant canonical string (AHU encoding from the center).
inline std::string tree_canonical_form(const LabeledGraph& t) {
    if (!t.is_tree()) throw DomainError("canonical form applies to trees");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(t.n()) + 1, 0);
    for (const Edge& e : t.edges()) {
        adj[e.i] |= std::uint64_t{1} << e.j;
        adj[e.j] |= std::uint64_t{1} << e.i;
    }
    return detail::canonical_form(adj);
}

/// One representative per isomorphism class of trees on n vertices, found by
/// decoding every Pruefer sequence. Representatives are the first sequence hit.
inline std::vector<LabeledGraph> nonisomorphic_trees(int n) {
    if (n < 2) throw DomainError("trees need at least two vertices here");
    if (n > 9) throw DomainError("Pruefer enumeration is limited to n <= 9");
    std::map<std::uint64_t, LabeledGraph> classes;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
    std::vector<std::uint64_t> adj;
    while (true) {
        detail::prufer_adjacency(n, seq, adj);
        const std::uint64_t code = detail::packed_canonical_form(adj);
        if (!classes.count(code)) classes.emplace(code, detail::graph_of(adj));
        std::size_t k = 0;
        while (k < seq.size() && seq[k] == n) seq[k++] = 1;
        if (k == seq.size()) break;
        ++seq[k];
    }
    std::vector<LabeledGraph> out;
    for (auto& [code, t] : classes) out.push_back(t);
    return out;
}

// ---------------------------------------------------------------------------
// Standard graphs.

enum class GraphKind { path, cycle, complete, complete_minus_end_edge, t1, t2 };

inline LabeledGraph path_graph(int n) {
    if (n < 2) throw DomainError("paths need n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back(Edge{i, i + 1});
    return LabeledGraph(n, std::move(e));
}

inline LabeledGraph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycles need n >= 3");
    return path_graph(n).with_edge(1, n);
}

inline LabeledGraph complete_graph(int n) {
    if (n < 2) throw DomainError("complete graphs need n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back(Edge{i, j});
    return LabeledGraph(n, std::move(e));
}

/// K_n without the edge {1,n}.
inline LabeledGraph complete_minus_end_edge(int n) {
    if (n < 3) throw DomainError("K_n - {1,n} needs n >= 3");
    return complete_graph(n).without_edge(1, n);
}

/// L_n plus the chord {t, t+s}.
inline LabeledGraph path_plus_edge(int n, int t, int s) {
    if (t < 1 || s < 2 || t + s > n) throw DomainError("chord {t,t+s} needs 1 <= t, s >= 2, t+s <= n");
    return path_graph(n).with_edge(t, t + s);
}

/// Rooted path with root 1 and leaf 2: edges {1,2},{1,3},{3,4},...,{n-1,n}.
inline LabeledGraph t1_graph(int n) {
    if (n < 3) throw DomainError("T1 needs n >= 3");
    std::vector<Edge> e{{1, 2}, {1, 3}};
    for (int i = 3; i < n; ++i) e.push_back(Edge{i, i + 1});
    return LabeledGraph(n, std::move(e));
}

/// Rooted path with root 1 and leaf 3: edges {1,2},{1,3},{2,4},{4,5},...,{n-1,n}.
inline LabeledGraph t2_graph(int n) {
    if (n < 4) throw DomainError("T2 needs n >= 4");
    std::vector<Edge> e{{1, 2}, {1, 3}, {2, 4}};
    for (int i = 4; i < n; ++i) e.push_back(Edge{i, i + 1});
    return LabeledGraph(n, std::move(e));
}

inline LabeledGraph standard_graph(GraphKind kind, int n) {
    switch (kind) {
    case GraphKind::path: return path_graph(n);
    case GraphKind::cycle: return cycle_graph(n);
    case GraphKind::complete: return complete_graph(n);
    case GraphKind::complete_minus_end_edge: return complete_minus_end_edge(n);
    case GraphKind::t1: return t1_graph(n);
    case GraphKind::t2: return t2_graph(n);
    }
    throw DomainError("unknown graph kind");
}

/// Labeled Hamiltonian fixture on 5 vertices: C_5 plus {2,4}.
inline LabeledGraph figure1_graph() {
    return LabeledGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {2, 4}});
}

/// Labeled semi-Hamiltonian, non-closed fixture on 6 vertices.
inline LabeledGraph figure2_graph() {
    return LabeledGraph(6, {{1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {4, 6}, {5, 6}});
}

/// Labeled semi-Hamiltonian fixture with a non-Cohen-Macaulay quotient (height 4).
inline LabeledGraph figure3_graph() {
    return LabeledGraph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
}

/// Rooted-labeled tree on 10 vertices.
inline LabeledGraph figure4_graph() {
    return LabeledGraph(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {4, 7}, {4, 8}, {5, 9}, {8, 10}});
}

/// Builtin fixtures: fig1..fig4, lN, cN, kN, kN-e, t1-N, t2-N.
inline LabeledGraph builtin_graph(std::string_view name) {
    if (name == "fig1") return figure1_graph();
    if (name == "fig2") return figure2_graph();
    if (name == "fig3") return figure3_graph();
    if (name == "fig4") return figure4_graph();

    auto number = [&](std::string_view digits) {
        if (digits.empty() || digits.size() > 2 ||
            !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw DomainError("unknown builtin graph '" + std::string(name) + "'");
        return std::stoi(std::string(digits));
    };
    if (name.starts_with("t1-")) return t1_graph(number(name.substr(3)));
    if (name.starts_with("t2-")) return t2_graph(number(name.substr(3)));
    if (name.size() >= 2 && name.front() == 'k' && name.ends_with("-e"))
        return complete_minus_end_edge(number(name.substr(1, name.size() - 3)));
    if (name.size() >= 2 && name.front() == 'l') return path_graph(number(name.substr(1)));
    if (name.size() >= 2 && name.front() == 'c') return cycle_graph(number(name.substr(1)));
    if (name.size() >= 2 && name.front() == 'k') return complete_graph(number(name.substr(1)));
    throw DomainError("unknown builtin graph '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Graph text format:
//   # comment
//   n 4
//   e 1 2

inline LabeledGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<int> n;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string tag;
        if (!(line >> tag)) continue;
        auto read_int = [&](const char* what) {
            long long v = 0;
            if (!(line >> v)) throw ParseError(std::string("expected ") + what, line_no);
            if (v < -1000000 || v > 1000000) throw ParseError(std::string(what) + " out of range", line_no);
            return static_cast<int>(v);
        };
        if (tag == "n") {
            if (n) throw ParseError("duplicate header", line_no);
            int count = read_int("vertex count");
            if (count < 1 || count > LabeledGraph::max_vertices)
                throw ParseError("vertex count must be in 1.." + std::to_string(LabeledGraph::max_vertices), line_no);
            n = count;
        } else if (tag == "e") {
            if (!n) throw ParseError("edge before the 'n <count>' header", line_no);
            Edge e{read_int("edge endpoint"), read_int("edge endpoint")};
            if (e.i > e.j) std::swap(e.i, e.j);
            if (e.i == e.j) throw ParseError("loop at vertex " + std::to_string(e.i), line_no);
            if (e.i < 1 || e.j > *n) throw ParseError("edge endpoint outside 1.." + std::to_string(*n), line_no);
            if (!seen.insert(e).second)
                throw ParseError("duplicate edge {" + std::to_string(e.i) + "," + std::to_string(e.j) + "}", line_no);
            edges.push_back(e);
        } else {
            throw ParseError("unknown record '" + tag + "'", line_no);
        }
        std::string extra;
        if (line >> extra) throw ParseError("trailing text '" + extra + "'", line_no);
    }
    if (!n) throw ParseError("missing 'n <count>' header", 0);
    return LabeledGraph(*n, std::move(edges));
}

inline LabeledGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

inline std::string format_graph(const LabeledGraph& g) {
    std::string out = "n " + std::to_string(g.n()) + "\n";
    for (const Edge& e : g.edges()) out += "e " + std::to_string(e.i) + " " + std::to_string(e.j) + "\n";
    return out;
}

} // namespace hankel
