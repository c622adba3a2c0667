#pragma once

// Splitting f(x, y) = g(x) + h(y) on a finite point set.
//
// decompose_exact walks a spanning forest of the incidence graph and fixes
// g and h along tree edges by telescoping alternating sums; every remaining
// point closes a fundamental cycle, and the split exists iff f has zero
// alternating sum around each of them. The LP-based routines pick a
// particular split (smallest sup|g| + sup|h|) or, when no split exists, the
// best uniform approximation by sums g(x) + h(y).

#include "bsets/rational.hpp"
#include "bsets/rook.hpp"
#include "bsets/simplex.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace bsets {

// A point set with a value at each point; values are aligned with the
// (sorted) order of base.
class ValuedSet2 {
public:
    ValuedSet2() = default;

    explicit ValuedSet2(std::vector<std::pair<Point2, Rat>> entries)
    {
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Point2> pts;
        for (auto& [p, v] : entries) {
            pts.push_back(p);
            values_.push_back(std::move(v));
        }
        base_ = PointSet2(std::move(pts));
    }

    ValuedSet2(PointSet2 base, std::vector<Rat> values) : base_(std::move(base)), values_(std::move(values))
    {
        if (values_.size() != base_.size())
            throw std::invalid_argument("value count does not match point count");
    }

    const PointSet2& base() const { return base_; }
    const std::vector<Rat>& values() const { return values_; }
    std::size_t size() const { return base_.size(); }
    const Point2& point(std::size_t i) const { return base_[i]; }
    const Rat& value(std::size_t i) const { return values_[i]; }

    const Rat& value(const Point2& p) const
    {
        auto i = base_.index_of(p);
        if (!i)
            throw std::out_of_range("no value at " + to_string(p));
        return values_[*i];
    }

private:
    PointSet2 base_;
    std::vector<Rat> values_;
};

struct Decomposition2 {
    std::map<Rat, Rat> g; // on x-values
    std::map<Rat, Rat> h; // on y-values
};

struct NormReport {
    Rat sup_g;
    Rat sup_h;
    Rat sup_f;
    Rat residual;
};

struct Obstruction2 {
    Array2 cycle; // closed
    Rat alternating_sum;
};

// f(a_1) - f(a_2) + ... - f(a_2l) along a closed array
inline Rat alternating_sum(const ValuedSet2& kf, const Array2& closed)
{
    Rat s;
    for (std::size_t i = 0; i + 1 < closed.points.size(); ++i) {
        const Rat& v = kf.value(closed.points[i]);
        if (i % 2 == 0)
            s += v;
        else
            s -= v;
    }
    return s;
}

// Throws std::out_of_range naming the first coordinate missing from d.
inline NormReport verify(const ValuedSet2& kf, const Decomposition2& d)
{
    NormReport r;
    for (const auto& [x, v] : d.g)
        r.sup_g = std::max(r.sup_g, abs(v));
    for (const auto& [y, v] : d.h)
        r.sup_h = std::max(r.sup_h, abs(v));
    for (std::size_t i = 0; i < kf.size(); ++i) {
        const Point2& p = kf.point(i);
        auto gi = d.g.find(p.x);
        if (gi == d.g.end())
            throw std::out_of_range("decomposition has no g value at x = " + to_string(p.x));
        auto hi = d.h.find(p.y);
        if (hi == d.h.end())
            throw std::out_of_range("decomposition has no h value at y = " + to_string(p.y));
        r.sup_f = std::max(r.sup_f, abs(kf.value(i)));
        r.residual = std::max(r.residual, abs(Rat(kf.value(i) - gi->second - hi->second)));
    }
    return r;
}

using ExactResult = std::variant<Decomposition2, Obstruction2>;

inline ExactResult decompose_exact(const ValuedSet2& kf)
{
    const PointSet2& k = kf.base();
    const IncidenceGraph g = build_incidence(k);
    const auto adj = g.adjacency();
    constexpr std::size_t none = SIZE_MAX;
    std::vector<std::optional<Rat>> val(g.node_count());
    std::vector<std::size_t> via(g.node_count(), none); // tree edge into node
    std::vector<char> tree_edge(g.edges.size(), 0);

    // points are sorted, so the first unvisited point is the smallest of
    // its class; anchor h = 0 at its y-node and grow a BFS tree from there
    for (std::size_t e0 = 0; e0 < g.edges.size(); ++e0) {
        std::size_t root = g.y_node(e0);
        if (val[root])
            continue;
        val[root] = Rat(0);
        std::vector<std::size_t> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t u = queue[qi];
            for (std::size_t e : adj[u]) {
                std::size_t v = g.other_end(e, u);
                if (val[v])
                    continue;
                val[v] = kf.value(e) - *val[u];
                via[v] = e;
                tree_edge[e] = 1;
                queue.push_back(v);
            }
        }
    }

    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (tree_edge[e] || *val[g.x_node(e)] + *val[g.y_node(e)] == kf.value(e))
            continue;
        // fundamental cycle of e: tree paths from both ends to their meeting point
        auto path_to_root = [&](std::size_t n) {
            std::vector<std::size_t> nodes{n};
            while (via[nodes.back()] != none)
                nodes.push_back(g.other_end(via[nodes.back()], nodes.back()));
            return nodes;
        };
        auto px = path_to_root(g.x_node(e));
        auto py = path_to_root(g.y_node(e));
        while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
        }
        // px and py now end at the common ancestor
        std::vector<std::size_t> cyc{e};
        for (std::size_t i = 0; i + 1 < py.size(); ++i)
            cyc.push_back(via[py[i]]);
        for (std::size_t i = px.size() - 1; i-- > 0;)
            cyc.push_back(via[px[i]]);
        Obstruction2 ob;
        ob.cycle = detail::cycle_to_array(k, g, std::move(cyc));
        ob.alternating_sum = alternating_sum(kf, ob.cycle);
        if (ob.alternating_sum == 0)
            throw std::logic_error("fundamental cycle with zero alternating sum at a violated point");
        return ob;
    }

    Decomposition2 d;
    for (std::size_t i = 0; i < g.x_values.size(); ++i)
        d.g.emplace(g.x_values[i], *val[i]);
    for (std::size_t i = 0; i < g.y_values.size(); ++i)
        d.h.emplace(g.y_values[i], *val[g.x_values.size() + i]);
    return d;
}

// Peels K -> E(K) -> ... -> empty, then assigns g and h from the innermost
// layer outwards. Each peeled point is alone on its column or its row, so
// that coordinate is still free when the point is reached.
inline Decomposition2 peel_decompose(const ValuedSet2& kf)
{
    auto trace = e_trace(kf.base());
    if (!trace.back().empty())
        throw std::invalid_argument("peel_decompose: E-iteration reaches a nonempty fixpoint");

    Decomposition2 d;
    for (std::size_t level = trace.size() - 1; level-- > 0;) {
        const PointSet2& layer = trace[level];
        const PointSet2& inner = trace[level + 1];
        std::map<Rat, std::size_t> col, row;
        for (const auto& p : layer) {
            ++col[p.x];
            ++row[p.y];
        }
        for (const auto& p : layer) {
            if (inner.contains(p))
                continue;
            const Rat& f = kf.value(p);
            bool x_alone = col[p.x] == 1;
            bool y_alone = row[p.y] == 1;
            if (x_alone) {
                auto [hi, fresh] = d.h.try_emplace(p.y, 0);
                if (!fresh && y_alone)
                    throw std::logic_error("peel_decompose: private row already assigned");
                d.g[p.x] = f - hi->second;
            } else {
                auto gi = d.g.try_emplace(p.x, 0).first;
                d.h[p.y] = f - gi->second;
            }
        }
    }
    return d;
}

struct MinNormResult {
    Decomposition2 decomposition;
    NormReport report;
    Rat objective; // sup|g| + sup|h|
};

namespace detail {

struct SplitVars {
    std::map<Rat, std::size_t> g, h;
};

inline SplitVars add_split_vars(lp::LinearProgram& prog, const IncidenceGraph& ig)
{
    SplitVars v;
    for (const auto& x : ig.x_values)
        v.g.emplace(x, prog.add_var(true));
    for (const auto& y : ig.y_values)
        v.h.emplace(y, prog.add_var(true));
    return v;
}

inline Decomposition2 read_split(const SplitVars& v, const lp::Solution& s)
{
    Decomposition2 d;
    for (const auto& [x, j] : v.g)
        d.g.emplace(x, s.x[j]);
    for (const auto& [y, j] : v.h)
        d.h.emplace(y, s.x[j]);
    return d;
}

} // namespace detail

// Exact split minimizing sup|g| + sup|h|. An obstruction when none exists.
inline std::variant<MinNormResult, Obstruction2> min_norm_exact(const ValuedSet2& kf)
{
    auto exact = decompose_exact(kf);
    if (auto ob = std::get_if<Obstruction2>(&exact))
        return *ob;

    using lp::Relation;
    const IncidenceGraph ig = build_incidence(kf.base());
    lp::LinearProgram prog;
    auto v = detail::add_split_vars(prog, ig);
    std::size_t bound_g = prog.add_var(false, 1);
    std::size_t bound_h = prog.add_var(false, 1);
    for (std::size_t i = 0; i < kf.size(); ++i) {
        const Point2& p = kf.point(i);
        prog.add_row({{v.g.at(p.x), 1}, {v.h.at(p.y), 1}}, Relation::Equal, kf.value(i));
    }
    for (const auto& [x, j] : v.g) {
        prog.add_row({{j, 1}, {bound_g, -1}}, Relation::LessEq, 0);
        prog.add_row({{j, -1}, {bound_g, -1}}, Relation::LessEq, 0);
    }
    for (const auto& [y, j] : v.h) {
        prog.add_row({{j, 1}, {bound_h, -1}}, Relation::LessEq, 0);
        prog.add_row({{j, -1}, {bound_h, -1}}, Relation::LessEq, 0);
    }
    lp::Solution s = lp::solve(prog);
    if (s.status != lp::Status::Optimal)
        throw std::logic_error("min-norm LP not optimal on a decomposable input");

    MinNormResult r;
    r.decomposition = detail::read_split(v, s);
    r.report = verify(kf, r.decomposition);
    r.objective = s.objective;
    if (r.report.residual != 0)
        throw std::logic_error("min-norm LP returned an inexact split");
    return r;
}

struct ApproxResult {
    Decomposition2 decomposition;
    NormReport report; // residual is the optimal uniform error
};

// g, h minimizing max |f - g - h| over K.
inline ApproxResult best_sup_approx(const ValuedSet2& kf)
{
    using lp::Relation;
    const IncidenceGraph ig = build_incidence(kf.base());
    lp::LinearProgram prog;
    auto v = detail::add_split_vars(prog, ig);
    std::size_t t = prog.add_var(false, 1);
    for (std::size_t i = 0; i < kf.size(); ++i) {
        const Point2& p = kf.point(i);
        // g + h - t <= f  and  g + h + t >= f
        prog.add_row({{v.g.at(p.x), 1}, {v.h.at(p.y), 1}, {t, -1}}, Relation::LessEq, kf.value(i));
        prog.add_row({{v.g.at(p.x), 1}, {v.h.at(p.y), 1}, {t, 1}}, Relation::GreaterEq, kf.value(i));
    }
    lp::Solution s = lp::solve(prog);
    if (s.status != lp::Status::Optimal)
        throw std::logic_error("approximation LP not optimal");
    ApproxResult r;
    r.decomposition = detail::read_split(v, s);
    r.report = verify(kf, r.decomposition);
    if (r.report.residual != s.objective)
        throw std::logic_error("approximation LP objective disagrees with evaluated residual");
    return r;
}

// Open staircase array of 2m+4 distinct points, a_1 and a_2 sharing y,
// with f(a_i) = (-1)^i. No coordinate coincidences beyond the array steps.
inline ValuedSet2 make_alternating_instance(unsigned m)
{
    if (m < 1)
        throw std::invalid_argument("make_alternating_instance: m must be positive");
    std::vector<std::pair<Point2, Rat>> entries;
    for (unsigned i = 1; i <= 2 * m + 4; ++i) {
        long k = static_cast<long>((i - 1) / 2);
        Point2 p = i % 2 == 1 ? pt(k, k) : pt(k + 1, k);
        entries.emplace_back(p, Rat(i % 2 == 0 ? 1 : -1));
    }
    return ValuedSet2(std::move(entries));
}

// The array of the instance above, in order a_1 .. a_{2m+4}.
inline Array2 alternating_instance_array(unsigned m)
{
    Array2 a;
    for (unsigned i = 1; i <= 2 * m + 4; ++i) {
        long k = static_cast<long>((i - 1) / 2);
        a.points.push_back(i % 2 == 1 ? pt(k, k) : pt(k + 1, k));
    }
    return a;
}

// 2 - 3 * 2^-i + j * 2^-2i
inline Rat hard_coordinate(long i, long j)
{
    return Rat(2) - 3 * pow2(-i) + j * pow2(-2 * i);
}

// Layer k of the hard family as an array: (m_{k,2}, m_{k,0}), (m_{k,2}, m_{k,2}),
// (m_{k,4}, m_{k,2}), ... ending at (m_{k,2^k}, m_{k,2^k}); 2^k points.
inline Array2 hard_layer_array(unsigned k)
{
    Array2 a;
    a.parity = Parity::SharedX;
    long half = 1L << (k - 1);
    for (long l = 1; l <= half; ++l) {
        a.points.push_back({hard_coordinate(k, 2 * l), hard_coordinate(k, 2 * l - 2)});
        a.points.push_back({hard_coordinate(k, 2 * l), hard_coordinate(k, 2 * l)});
    }
    return a;
}

// Union of layers 1..i with f = 2^-k on diagonal points and -2^-k on the
// points just below them.
inline ValuedSet2 gen_hard_instance(unsigned i)
{
    if (i < 1 || i > 20)
        throw std::invalid_argument("gen_hard_instance: i must be in 1..20");
    std::vector<std::pair<Point2, Rat>> entries;
    for (unsigned k = 1; k <= i; ++k) {
        Rat w = pow2(-static_cast<long>(k));
        long half = 1L << (k - 1);
        for (long l = 1; l <= half; ++l) {
            Rat top = hard_coordinate(k, 2 * l);
            Rat below = hard_coordinate(k, 2 * l - 2);
            entries.emplace_back(Point2{top, top}, w);
            entries.emplace_back(Point2{top, below}, -w);
        }
    }
    return ValuedSet2(std::move(entries));
}

} // namespace bsets
