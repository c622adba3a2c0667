#pragma once

// Finite point sets in the plane with exact coordinates, arrays (rook paths
// that alternately keep the y- and the x-coordinate), the E-operator and
// the closed-array criterion for discontinuous basicness.
//
// A point set K is encoded as a bipartite incidence graph: one node per
// distinct x-value, one per distinct y-value, and one edge per point joining
// its two coordinate nodes. Arrays in K are exactly walks in this graph that
// never reuse an edge twice in a row, so
//   - K has a closed array  <=>  the incidence graph has a cycle,
//   - E(K) deletes the edges touching a leaf node, so iterating E peels the
//     graph down to its 2-core (empty iff the graph is a forest).

#include "bsets/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bsets {

struct Point2 {
    Rat x;
    Rat y;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    friend bool operator<(const Point2& a, const Point2& b)
    {
        if (a.x != b.x)
            return a.x < b.x;
        return a.y < b.y;
    }
};

inline Point2 pt(long x, long y) { return Point2{Rat(x), Rat(y)}; }

inline std::string to_string(const Point2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

// Distinct points kept in lexicographic (x, y) order.
class PointSet2 {
public:
    PointSet2() = default;

    // Throws std::invalid_argument on a repeated point.
    explicit PointSet2(std::vector<Point2> pts) : pts_(std::move(pts))
    {
        std::sort(pts_.begin(), pts_.end());
        auto dup = std::adjacent_find(pts_.begin(), pts_.end());
        if (dup != pts_.end())
            throw std::invalid_argument("duplicate point " + to_string(*dup));
    }

    PointSet2(std::initializer_list<Point2> pts) : PointSet2(std::vector<Point2>(pts)) {}

    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Point2& operator[](std::size_t i) const { return pts_[i]; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }
    const std::vector<Point2>& points() const { return pts_; }

    bool contains(const Point2& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }

    std::optional<std::size_t> index_of(const Point2& p) const
    {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        if (it == pts_.end() || *it != p)
            return std::nullopt;
        return static_cast<std::size_t>(it - pts_.begin());
    }

    friend bool operator==(const PointSet2& a, const PointSet2& b) { return a.pts_ == b.pts_; }
    friend bool operator!=(const PointSet2& a, const PointSet2& b) { return !(a == b); }

private:
    std::vector<Point2> pts_;
};

// Which coordinate the first two points of an array share.
enum class Parity { SharedY, SharedX };

// a_1 ... a_m with consecutive points alternately sharing y and x (or x and
// y, per parity). A closed array repeats a_1 as its last point.
struct Array2 {
    std::vector<Point2> points;
    Parity parity = Parity::SharedY;
    bool closed = false;

    std::size_t size() const { return points.size(); }
};

// Empty string when the array is well formed, otherwise what is wrong.
inline std::string array_violation(const Array2& a)
{
    const auto& p = a.points;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] == p[i + 1])
            return "points " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " coincide";
        bool share_y = (i % 2 == 0) == (a.parity == Parity::SharedY);
        bool ok = share_y ? p[i].y == p[i + 1].y : p[i].x == p[i + 1].x;
        if (!ok)
            return "points " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " do not share " +
                   (share_y ? "y" : "x");
    }
    if (a.closed) {
        if (p.size() < 5 || p.size() % 2 == 0)
            return "closed array must have 2l+1 >= 5 entries";
        if (p.front() != p.back())
            return "closed array does not return to its first point";
    }
    return {};
}

inline bool is_valid_array(const Array2& a) { return array_violation(a).empty(); }

// Reads the parity off the first pair; useful for sequences built elsewhere.
inline std::optional<Array2> as_array(std::vector<Point2> pts, bool closed = false)
{
    Array2 a{std::move(pts), Parity::SharedY, closed};
    if (a.points.size() >= 2 && a.points[0].y != a.points[1].y)
        a.parity = Parity::SharedX;
    if (!is_valid_array(a))
        return std::nullopt;
    return a;
}

struct IncidenceGraph {
    std::vector<Rat> x_values; // sorted
    std::vector<Rat> y_values; // sorted
    // edge i belongs to point i of the set: (x-node, y-node) as indices into
    // x_values / y_values
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t node_count() const { return x_values.size() + y_values.size(); }
    // unified node ids: x-nodes first, then y-nodes
    std::size_t x_node(std::size_t e) const { return edges[e].first; }
    std::size_t y_node(std::size_t e) const { return x_values.size() + edges[e].second; }
    bool is_y_node(std::size_t n) const { return n >= x_values.size(); }
    std::size_t other_end(std::size_t e, std::size_t n) const { return n == x_node(e) ? y_node(e) : x_node(e); }

    // incident edges per unified node, in point order
    std::vector<std::vector<std::size_t>> adjacency() const
    {
        std::vector<std::vector<std::size_t>> adj(node_count());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            adj[x_node(e)].push_back(e);
            adj[y_node(e)].push_back(e);
        }
        return adj;
    }
};

inline IncidenceGraph build_incidence(const PointSet2& k)
{
    IncidenceGraph g;
    for (const auto& p : k) {
        g.x_values.push_back(p.x);
        g.y_values.push_back(p.y);
    }
    auto uniq = [](std::vector<Rat>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(g.x_values);
    uniq(g.y_values);
    auto pos = [](const std::vector<Rat>& v, const Rat& r) {
        return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), r) - v.begin());
    };
    for (const auto& p : k)
        g.edges.emplace_back(pos(g.x_values, p.x), pos(g.y_values, p.y));
    return g;
}

// Points of K sharing their vertical line with another point of K and
// their horizontal line with another point of K.
inline PointSet2 e_operator(const PointSet2& k)
{
    std::map<Rat, std::size_t> col, row;
    for (const auto& p : k) {
        ++col[p.x];
        ++row[p.y];
    }
    std::vector<Point2> kept;
    for (const auto& p : k)
        if (col[p.x] >= 2 && row[p.y] >= 2)
            kept.push_back(p);
    return PointSet2(std::move(kept));
}

// K, E(K), E^2(K), ... up to the first empty set or the first fixpoint
// (the fixpoint appears once, as the last entry).
inline std::vector<PointSet2> e_trace(const PointSet2& k)
{
    std::vector<PointSet2> trace{k};
    while (!trace.back().empty()) {
        PointSet2 next = e_operator(trace.back());
        if (next == trace.back())
            break;
        trace.push_back(std::move(next));
    }
    return trace;
}

struct Finite {
    std::size_t steps; // least n with E^n(K) empty
    friend bool operator==(const Finite&, const Finite&) = default;
};
struct Cyclic {
    PointSet2 core; // nonempty fixpoint of E
    friend bool operator==(const Cyclic& a, const Cyclic& b) { return a.core == b.core; }
};
using EDepth = std::variant<Finite, Cyclic>;

inline EDepth e_depth(const PointSet2& k)
{
    auto trace = e_trace(k);
    if (trace.back().empty())
        return Finite{trace.size() - 1};
    return Cyclic{trace.back()};
}

inline bool is_finite(const EDepth& d) { return std::holds_alternative<Finite>(d); }

namespace detail {

// Closed array from a cycle of the incidence graph, given as its edges
// (point indices) in traversal order. Starts at the smallest point and
// walks in the direction whose first step shares y.
inline Array2 cycle_to_array(const PointSet2& k, const IncidenceGraph& g, std::vector<std::size_t> cyc)
{
    auto smallest = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), smallest, cyc.end());
    // cyc[0] and cyc[1] share a node; if it is an x-node walk the other way
    auto shared = [&](std::size_t a, std::size_t b) {
        return g.x_node(a) == g.x_node(b) ? g.x_node(a) : g.y_node(a);
    };
    if (!g.is_y_node(shared(cyc[0], cyc[1])))
        std::reverse(cyc.begin() + 1, cyc.end());
    Array2 a;
    a.parity = Parity::SharedY;
    a.closed = true;
    for (std::size_t e : cyc)
        a.points.push_back(k[e]);
    a.points.push_back(k[cyc.front()]);
    return a;
}

} // namespace detail

// A simple closed array in K, or nothing if the incidence graph is a forest.
// Depth-first search over nodes in order (x-nodes, then y-nodes), edges in
// point order; the first back edge met closes the reported cycle.
inline std::optional<Array2> find_closed_array(const PointSet2& k)
{
    const IncidenceGraph g = build_incidence(k);
    const auto adj = g.adjacency();
    const std::size_t n = g.node_count();
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::size_t> parent_edge(n, none);
    std::vector<char> state(n, 0); // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> next(n, 0);

    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] != 0)
            continue;
        std::vector<std::size_t> stack{root};
        state[root] = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            if (next[u] == adj[u].size()) {
                state[u] = 2;
                stack.pop_back();
                continue;
            }
            std::size_t e = adj[u][next[u]++];
            if (e == parent_edge[u])
                continue;
            std::size_t v = g.other_end(e, u);
            if (state[v] == 0) {
                parent_edge[v] = e;
                state[v] = 1;
                stack.push_back(v);
            } else if (state[v] == 1) {
                // back edge: cycle is the tree path v -> u plus e
                std::vector<std::size_t> cyc{e};
                for (std::size_t w = u; w != v;) {
                    cyc.push_back(parent_edge[w]);
                    w = g.other_end(parent_edge[w], w);
                }
                return detail::cycle_to_array(k, g, std::move(cyc));
            }
        }
    }
    return std::nullopt;
}

inline std::vector<PointSet2> equivalence_classes(const PointSet2& k)
{
    const IncidenceGraph g = build_incidence(k);
    std::vector<std::size_t> parent(g.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        parent[find(g.x_node(e))] = find(g.y_node(e));

    std::map<std::size_t, std::vector<Point2>> by_root;
    std::vector<std::size_t> order; // roots in order of their smallest point
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        std::size_t r = find(g.x_node(e));
        auto [it, fresh] = by_root.try_emplace(r);
        if (fresh)
            order.push_back(r);
        it->second.push_back(k[e]);
    }
    std::vector<PointSet2> classes;
    for (std::size_t r : order)
        classes.emplace_back(std::move(by_root[r]));
    return classes;
}

struct BasicVerdict {
    bool basic = true;
    std::optional<Array2> closed_array;     // present iff !basic
    std::vector<PointSet2> peeling;          // K, E(K), ..., empty set (when basic)
};

inline BasicVerdict is_discontinuously_basic(const PointSet2& k)
{
    BasicVerdict v;
    v.closed_array = find_closed_array(k);
    v.basic = !v.closed_array;
    if (v.basic) {
        v.peeling = e_trace(k);
        if (!v.peeling.back().empty())
            throw std::logic_error("acyclic incidence graph but E-iteration stalled");
    }
    return v;
}

struct Bounded {
    std::size_t length; // 2n+1, or 0 for the empty set
    friend bool operator==(const Bounded&, const Bounded&) = default;
};
struct Unbounded {
    friend bool operator==(const Unbounded&, const Unbounded&) = default;
};
using ArrayBound = std::variant<Bounded, Unbounded>;

// Longest array of odd length in K (arbitrarily long arrays exist iff K
// contains a closed array).
inline ArrayBound longest_odd_array(const PointSet2& k)
{
    EDepth d = e_depth(k);
    if (auto f = std::get_if<Finite>(&d))
        return Bounded{f->steps == 0 ? 0 : 2 * f->steps - 1};
    return Unbounded{};
}

// A longest array of K when K has no closed array: the diameter path of its
// incidence forest, read as a point sequence. nullopt for cyclic or empty K.
inline std::optional<Array2> longest_array(const PointSet2& k)
{
    if (k.empty() || find_closed_array(k))
        return std::nullopt;
    const IncidenceGraph g = build_incidence(k);
    const auto adj = g.adjacency();
    constexpr std::size_t none = SIZE_MAX;

    // farthest node from src (in edges); fills parent edges for path recovery
    auto bfs = [&](std::size_t src, std::vector<std::size_t>& via) {
        std::vector<std::size_t> dist(g.node_count(), none);
        via.assign(g.node_count(), none);
        std::vector<std::size_t> queue{src};
        dist[src] = 0;
        std::size_t far = src;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t u = queue[qi];
            if (dist[u] > dist[far])
                far = u;
            for (std::size_t e : adj[u]) {
                std::size_t v = g.other_end(e, u);
                if (dist[v] == none) {
                    dist[v] = dist[u] + 1;
                    via[v] = e;
                    queue.push_back(v);
                }
            }
        }
        return std::pair{far, dist[far]};
    };

    std::vector<std::size_t> best_path;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<std::size_t> via;
    for (std::size_t e0 = 0; e0 < g.edges.size(); ++e0) {
        std::size_t start = g.x_node(e0);
        if (seen[start])
            continue;
        auto [a, da] = bfs(start, via);
        auto [b, db] = bfs(a, via);
        std::vector<std::size_t> path;
        for (std::size_t w = b; w != a;) {
            path.push_back(via[w]);
            w = g.other_end(via[w], w);
        }
        std::vector<std::size_t> comp;
        bfs(start, comp);
        for (std::size_t n = 0; n < g.node_count(); ++n)
            if (comp[n] != none || n == start)
                seen[n] = 1;
        if (path.size() > best_path.size())
            best_path = std::move(path);
    }
    std::vector<Point2> pts;
    for (std::size_t e : best_path)
        pts.push_back(k[e]);
    auto arr = as_array(std::move(pts));
    if (!arr)
        throw std::logic_error("diameter path is not an array");
    return arr;
}

} // namespace bsets
