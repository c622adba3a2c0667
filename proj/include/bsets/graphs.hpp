#pragma once

// Basic embeddability of finite graphs.
//
// Into the plane: a finite graph embeds basically iff it contains no
// subgraph homeomorphic to a circle S^1, the five-point star T5, or the
// cross with branched endpoints C; equivalently iff it is contained in one
// of the trees R_n. Into R x T_n (T_n the n-od): iff it is a tree and its
// defect is below n, or equals n with a horrible vertex carrying a hanging
// edge.
//
// The forbidden subgraphs reduce to local tests:
//   - S^1: the graph has a cycle.
//   - T5: some vertex has degree >= 5. A T5 subdivision has a degree-5
//     branch vertex; conversely a vertex with five neighbours spans a T5.
//   - C, on a forest: some vertex u of degree >= 4 has at least four
//     components of G - u containing a vertex of degree >= 3. Given such u,
//     pick a degree->=3 vertex w_i in four of those components; the paths
//     u..w_i are disjoint apart from u, and each w_i has two further
//     neighbours away from u, which gives the branched end of arm i. Given a
//     subdivided C, its centre u has the four arms in different components
//     of G - u (a forest has one path between two vertices), and each arm's
//     branch point has degree >= 3 in G.
//
// Disconnected inputs are decided componentwise for the plane criterion.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bsets {

using Vertex = std::size_t;

class FiniteGraph {
public:
    FiniteGraph() = default;

    // Throws std::invalid_argument on loops, repeated edges or bad vertex ids.
    FiniteGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), adj_(n)
    {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) +
                                            " refers to a vertex outside 0.." + std::to_string(n ? n - 1 : 0));
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(u));
            if (u > v)
                std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            throw std::invalid_argument("repeated edge " + std::to_string(dup->first) + " " +
                                        std::to_string(dup->second));
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_)
            std::sort(a.begin(), a.end());
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    std::size_t max_degree() const
    {
        std::size_t d = 0;
        for (const auto& a : adj_)
            d = std::max(d, a.size());
        return d;
    }

    bool has_edge(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// Relabels vertex v as perm[v].
inline FiniteGraph relabel(const FiniteGraph& g, const std::vector<Vertex>& perm)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (auto [u, v] : g.edges())
        e.emplace_back(perm[u], perm[v]);
    return FiniteGraph(g.vertex_count(), std::move(e));
}

inline std::vector<std::size_t> component_ids(const FiniteGraph& g, std::size_t& count)
{
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::size_t> comp(g.vertex_count(), none);
    count = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != none)
            continue;
        std::vector<Vertex> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u))
                if (comp[w] == none) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return comp;
}

enum class Shape { Tree, Forest, Cyclic };

inline const char* to_string(Shape s)
{
    switch (s) {
    case Shape::Tree: return "tree";
    case Shape::Forest: return "forest";
    default: return "cyclic";
    }
}

// Tree: connected and acyclic (at least one vertex). Forest: acyclic but
// disconnected, or empty.
inline Shape classify_shape(const FiniteGraph& g)
{
    std::size_t comps = 0;
    component_ids(g, comps);
    if (g.edge_count() + comps != g.vertex_count())
        return Shape::Cyclic;
    return comps == 1 ? Shape::Tree : Shape::Forest;
}

inline bool is_tree(const FiniteGraph& g) { return classify_shape(g) == Shape::Tree; }
inline bool is_forest(const FiniteGraph& g) { return classify_shape(g) != Shape::Cyclic; }

// Vertices of some cycle, in order, or empty when the graph is a forest.
inline std::vector<Vertex> find_cycle(const FiniteGraph& g)
{
    constexpr std::size_t none = SIZE_MAX;
    std::vector<Vertex> parent(g.vertex_count(), none);
    std::vector<char> seen(g.vertex_count(), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        parent[s] = s;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u)) {
                if (w == parent[u])
                    continue;
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = u;
                    stack.push_back(w);
                    continue;
                }
                // non-tree edge u-w: join the two tree paths
                std::vector<Vertex> pu{u}, pw{w};
                while (parent[pu.back()] != pu.back())
                    pu.push_back(parent[pu.back()]);
                while (parent[pw.back()] != pw.back())
                    pw.push_back(parent[pw.back()]);
                while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
                    pu.pop_back();
                    pw.pop_back();
                }
                std::vector<Vertex> cyc(pu.begin(), pu.end());
                for (std::size_t i = pw.size() - 1; i-- > 0;)
                    cyc.push_back(pw[i]);
                return cyc;
            }
        }
    }
    return {};
}

// A vertex of degree >= 5 (the centre of a T5 subdivision), if any.
inline std::optional<Vertex> contains_T5(const FiniteGraph& g)
{
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 5)
            return v;
    return std::nullopt;
}

struct CrossWitness {
    Vertex centre;
    std::vector<Vertex> branches; // four vertices of degree >= 3, one per arm
};

// Subdivided branched cross in a forest; see the header comment for why the
// component test is exact. Throws std::invalid_argument on cyclic input.
inline std::optional<CrossWitness> contains_branched_cross(const FiniteGraph& g)
{
    if (!is_forest(g))
        throw std::invalid_argument("contains_branched_cross expects a forest");
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (g.degree(u) < 4)
            continue;
        CrossWitness w{u, {}};
        for (Vertex start : g.neighbours(u)) {
            // nearest vertex of degree >= 3 in the component of G - u through start
            std::vector<Vertex> queue{start};
            std::set<Vertex> seen{u, start};
            std::optional<Vertex> found;
            for (std::size_t qi = 0; qi < queue.size() && !found; ++qi) {
                Vertex x = queue[qi];
                if (g.degree(x) >= 3) {
                    found = x;
                    break;
                }
                for (Vertex y : g.neighbours(x))
                    if (seen.insert(y).second)
                        queue.push_back(y);
            }
            if (found)
                w.branches.push_back(*found);
            if (w.branches.size() == 4)
                return w;
        }
    }
    return std::nullopt;
}

enum class PlaneObstacle { None, Circle, FiveStar, BranchedCross };

inline const char* to_string(PlaneObstacle o)
{
    switch (o) {
    case PlaneObstacle::None: return "none";
    case PlaneObstacle::Circle: return "circle";
    case PlaneObstacle::FiveStar: return "five_star";
    default: return "branched_cross";
    }
}

struct PlaneVerdict {
    bool basic = true;
    PlaneObstacle obstacle = PlaneObstacle::None;
    std::vector<Vertex> cycle;
    std::optional<Vertex> high_degree_vertex;
    std::optional<CrossWitness> cross;
};

inline PlaneVerdict basic_in_plane(const FiniteGraph& g)
{
    PlaneVerdict v;
    if (auto cyc = find_cycle(g); !cyc.empty()) {
        v.basic = false;
        v.obstacle = PlaneObstacle::Circle;
        v.cycle = std::move(cyc);
        return v;
    }
    if (auto c = contains_T5(g)) {
        v.basic = false;
        v.obstacle = PlaneObstacle::FiveStar;
        v.high_degree_vertex = c;
        return v;
    }
    if (auto w = contains_branched_cross(g)) {
        v.basic = false;
        v.obstacle = PlaneObstacle::BranchedCross;
        v.cross = std::move(w);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Tree families.

inline constexpr std::size_t default_size_cap = 5000;

inline std::size_t f_family_size(unsigned n) { return 3 * (std::size_t{1} << n) - 2; }
inline std::size_t r_family_size(unsigned n) { return 9 * (std::size_t{1} << (n - 1)) - 4; }

// F_1 is a triod; F_{k+1} hangs two new leaves on every leaf of F_k.
inline FiniteGraph gen_F(unsigned n, std::size_t cap = default_size_cap)
{
    if (n < 1)
        throw std::invalid_argument("gen_F: n must be positive");
    if (n > 40 || f_family_size(n) > cap)
        throw std::invalid_argument("gen_F: F_" + std::to_string(n) + " exceeds the size cap of " +
                                    std::to_string(cap) + " vertices");
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}};
    std::vector<Vertex> leaves{1, 2, 3};
    Vertex next = 4;
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Vertex> fresh;
        for (Vertex l : leaves)
            for (int j = 0; j < 2; ++j) {
                edges.emplace_back(l, next);
                fresh.push_back(next++);
            }
        leaves = std::move(fresh);
    }
    return FiniteGraph(next, std::move(edges));
}

// F_n with one extra hanging edge at every vertex that is not a leaf.
inline FiniteGraph gen_R(unsigned n, std::size_t cap = default_size_cap)
{
    if (n < 1)
        throw std::invalid_argument("gen_R: n must be positive");
    if (n > 40 || r_family_size(n) > cap)
        throw std::invalid_argument("gen_R: R_" + std::to_string(n) + " exceeds the size cap of " +
                                    std::to_string(cap) + " vertices");
    FiniteGraph f = gen_F(n, cap);
    auto edges = f.edges();
    Vertex next = f.vertex_count();
    for (Vertex v = 0; v < f.vertex_count(); ++v)
        if (f.degree(v) > 1)
            edges.emplace_back(v, next++);
    return FiniteGraph(next, std::move(edges));
}

inline FiniteGraph star(std::size_t arms)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v <= arms; ++v)
        e.emplace_back(0, v);
    return FiniteGraph(arms + 1, std::move(e));
}

inline FiniteGraph path_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v < n; ++v)
        e.emplace_back(v - 1, v);
    return FiniteGraph(n, std::move(e));
}

// ---------------------------------------------------------------------------
// Topological containment of trees.

// Suppresses every degree-2 vertex of a tree (a path collapses to one edge).
inline FiniteGraph smooth(const FiniteGraph& t)
{
    if (!is_tree(t))
        throw std::invalid_argument("smooth expects a tree");
    std::vector<std::set<Vertex>> adj(t.vertex_count());
    for (auto [u, v] : t.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> alive(t.vertex_count(), 1);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        if (adj[v].size() != 2)
            continue;
        Vertex a = *adj[v].begin(), b = *adj[v].rbegin();
        adj[a].erase(v);
        adj[b].erase(v);
        adj[a].insert(b);
        adj[b].insert(a);
        adj[v].clear();
        alive[v] = 0;
    }
    std::vector<Vertex> id(t.vertex_count(), SIZE_MAX);
    std::size_t n = 0;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        if (alive[v])
            id[v] = n++;
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < t.vertex_count(); ++v)
        for (Vertex w : adj[v])
            if (v < w)
                e.emplace_back(id[v], id[w]);
    return FiniteGraph(n, std::move(e));
}

namespace detail {

// Kuhn's augmenting paths; can every left vertex be matched?
inline bool saturating_matching(std::size_t left, std::size_t right, const std::vector<std::vector<char>>& ok)
{
    if (left > right)
        return false;
    std::vector<std::size_t> match_right(right, SIZE_MAX);
    std::vector<char> visited;
    auto augment = [&](auto& self, std::size_t l) -> bool {
        for (std::size_t r = 0; r < right; ++r) {
            if (!ok[l][r] || visited[r])
                continue;
            visited[r] = 1;
            if (match_right[r] == SIZE_MAX || self(self, match_right[r])) {
                match_right[r] = l;
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < left; ++l) {
        visited.assign(right, 0);
        if (!augment(augment, l))
            return false;
    }
    return true;
}

// Memoized over (guest vertex, host vertex, host direction excluded).
class TreeEmbedder {
public:
    TreeEmbedder(const FiniteGraph& host, const FiniteGraph& guest, Vertex guest_root)
        : host_(host), guest_(guest), parent_(guest.vertex_count(), SIZE_MAX), children_(guest.vertex_count())
    {
        std::vector<Vertex> order{guest_root};
        parent_[guest_root] = guest_root;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Vertex w : guest.neighbours(order[i]))
                if (parent_[w] == SIZE_MAX) {
                    parent_[w] = order[i];
                    children_[order[i]].push_back(w);
                    order.push_back(w);
                }
        root_ = guest_root;
    }

    bool embeds()
    {
        for (Vertex w = 0; w < host_.vertex_count(); ++w)
            if (place(root_, w, SIZE_MAX))
                return true;
        return false;
    }

private:
    using Key = std::tuple<Vertex, Vertex, Vertex>;

    // guest subtree at u with u -> w, using only host branches at w other
    // than the one towards `from`
    bool place(Vertex u, Vertex w, Vertex from)
    {
        Key key{u, w, from};
        if (auto it = place_memo_.find(key); it != place_memo_.end())
            return it->second;
        std::vector<Vertex> branches;
        for (Vertex x : host_.neighbours(w))
            if (x != from)
                branches.push_back(x);
        const auto& kids = children_[u];
        bool ok = false;
        if (kids.size() <= branches.size()) {
            std::vector<std::vector<char>> can(kids.size(), std::vector<char>(branches.size(), 0));
            for (std::size_t i = 0; i < kids.size(); ++i)
                for (std::size_t j = 0; j < branches.size(); ++j)
                    can[i][j] = reach(kids[i], branches[j], w);
            ok = saturating_matching(kids.size(), branches.size(), can);
        }
        place_memo_[key] = ok;
        return ok;
    }

    // guest subtree at u placed somewhere in the host branch entered by
    // the edge from -> w
    bool reach(Vertex u, Vertex w, Vertex from)
    {
        Key key{u, w, from};
        if (auto it = reach_memo_.find(key); it != reach_memo_.end())
            return it->second;
        bool ok = place(u, w, from);
        for (Vertex x : host_.neighbours(w)) {
            if (ok)
                break;
            if (x != from)
                ok = reach(u, x, w);
        }
        reach_memo_[key] = ok;
        return ok;
    }

    const FiniteGraph& host_;
    const FiniteGraph& guest_;
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    Vertex root_ = 0;
    std::map<Key, bool> place_memo_;
    std::map<Key, bool> reach_memo_;
};

} // namespace detail

// Does the host tree contain a subgraph homeomorphic to the guest tree?
inline bool topo_contains(const FiniteGraph& host, const FiniteGraph& guest, std::size_t cap = default_size_cap)
{
    if (!is_tree(host) || !is_tree(guest))
        throw std::invalid_argument("topo_contains expects two trees");
    if (host.vertex_count() > cap || guest.vertex_count() > cap)
        throw std::invalid_argument("topo_contains: input exceeds the size cap");
    FiniteGraph g = smooth(guest);
    if (g.vertex_count() > host.vertex_count() || g.max_degree() > host.max_degree())
        return false;
    // root the guest at a vertex of maximum degree: it constrains the host
    // placement most
    Vertex root = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > g.degree(root))
            root = v;
    return detail::TreeEmbedder(host, g, root).embeds();
}

struct ContainedIn {
    unsigned n;
};
struct NotContained {};
struct Inconclusive {
    unsigned n_max;
};
using RnVerdict = std::variant<ContainedIn, NotContained, Inconclusive>;

// Smallest n <= n_max with G inside R_n. If there is none although G passes
// the forbidden-subgraph test, the answer is Inconclusive rather than no.
inline RnVerdict basic_in_plane_via_Rn(const FiniteGraph& g, unsigned n_max, std::size_t cap = default_size_cap)
{
    if (!is_tree(g))
        throw std::invalid_argument("basic_in_plane_via_Rn expects a tree");
    if (n_max < 1 || r_family_size(n_max) > cap)
        throw std::invalid_argument("basic_in_plane_via_Rn: R_" + std::to_string(n_max) + " exceeds the size cap");
    for (unsigned n = 1; n <= n_max; ++n)
        if (topo_contains(gen_R(n, cap), g, cap))
            return ContainedIn{n};
    if (basic_in_plane(g).basic)
        return Inconclusive{n_max};
    return NotContained{};
}

// ---------------------------------------------------------------------------
// Defect and embeddings into R x T_n.

struct VertexClass {
    std::size_t degree = 0;
    bool horrible = false; // degree > 4
    bool awful = false;    // degree == 4 and no hanging edge at it
    bool hanging = false;  // incident to a degree-1 vertex
};

struct DefectReport {
    std::vector<VertexClass> vertices;
    std::size_t defect = 0;
};

inline DefectReport defect(const FiniteGraph& g)
{
    DefectReport r;
    r.vertices.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexClass& c = r.vertices[v];
        c.degree = g.degree(v);
        for (Vertex w : g.neighbours(v))
            c.hanging = c.hanging || g.degree(w) == 1 || c.degree == 1;
        c.horrible = c.degree > 4;
        c.awful = c.degree == 4 && !c.hanging;
        if (c.horrible || c.awful)
            r.defect += c.degree - 2;
    }
    return r;
}

// Throws std::invalid_argument for n < 3.
inline bool basic_in_R_x_Tn(const FiniteGraph& g, unsigned n)
{
    if (n < 3)
        throw std::invalid_argument("basic_in_R_x_Tn: T_n needs n >= 3");
    if (!is_tree(g))
        return false;
    DefectReport r = defect(g);
    if (r.defect < n)
        return true;
    if (r.defect > n)
        return false;
    for (const auto& c : r.vertices)
        if (c.horrible && c.hanging)
            return true;
    return false;
}

// ---------------------------------------------------------------------------
// Non-isomorphic trees, via centre-rooted canonical strings.

namespace detail {

inline std::string rooted_code(const FiniteGraph& t, Vertex v, Vertex parent)
{
    std::vector<std::string> kids;
    for (Vertex w : t.neighbours(v))
        if (w != parent)
            kids.push_back(rooted_code(t, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids)
        s += k;
    return s + ")";
}

} // namespace detail

inline std::vector<Vertex> tree_centres(const FiniteGraph& t)
{
    std::vector<std::size_t> deg(t.vertex_count());
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1)
            layer.push_back(v);
    }
    std::size_t remaining = t.vertex_count();
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbours(v))
                if (--deg[w] == 1)
                    next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

inline std::string canonical_tree_code(const FiniteGraph& t)
{
    std::string best;
    for (Vertex c : tree_centres(t)) {
        std::string code = detail::rooted_code(t, c, SIZE_MAX);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

// All trees on n >= 1 vertices up to isomorphism.
inline std::vector<FiniteGraph> nonisomorphic_trees(std::size_t n)
{
    if (n == 0)
        return {};
    std::vector<FiniteGraph> level{FiniteGraph(1, {})};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, FiniteGraph> next;
        for (const auto& t : level)
            for (Vertex v = 0; v < t.vertex_count(); ++v) {
                auto e = t.edges();
                e.emplace_back(v, t.vertex_count());
                FiniteGraph grown(size, std::move(e));
                next.try_emplace(canonical_tree_code(grown), std::move(grown));
            }
        level.clear();
        for (auto& [code, t] : next)
            level.push_back(std::move(t));
    }
    return level;
}

} // namespace bsets
