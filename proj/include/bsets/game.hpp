#pragma once

// The "Dare you to decompose!" game. A.N. writes numbers into marked cells,
// V.I. then picks one weight per line along every axis and wins if each
// marked number is the sum of its line weights.
//
// In the plane V.I. wins iff the marked cells hold no closed rook route.
// In higher dimension no combinatorial criterion is known, so the game is
// decided by linear algebra: V.I. wins iff the only signed weighting of the
// cells with zero sum along every axis-parallel hyperplane is zero (the
// zero-marginal kernel is trivial). A nonzero kernel vector is A.N.'s
// winning move: writing it into the cells pairs to a positive number with
// itself and to zero with every sum of line weights.

#include "bsets/decomp.hpp"
#include "bsets/linalg.hpp"
#include "bsets/rook.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace bsets {

struct PointN {
    std::vector<Rat> coords;

    std::size_t dim() const { return coords.size(); }
    const Rat& operator[](std::size_t t) const { return coords[t]; }

    friend bool operator==(const PointN& a, const PointN& b) { return a.coords == b.coords; }
    friend bool operator!=(const PointN& a, const PointN& b) { return !(a == b); }
    friend bool operator<(const PointN& a, const PointN& b)
    {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end());
    }
};

inline PointN ptn(std::initializer_list<long> cs)
{
    PointN p;
    for (long c : cs)
        p.coords.emplace_back(c);
    return p;
}

inline std::string to_string(const PointN& p)
{
    std::string s = "(";
    for (std::size_t t = 0; t < p.dim(); ++t) {
        if (t)
            s += ", ";
        s += to_string(p[t]);
    }
    return s + ")";
}

// Distinct points of one fixed dimension d >= 2, lexicographically sorted.
class PointSetN {
public:
    explicit PointSetN(std::size_t dim = 2) : dim_(dim)
    {
        if (dim_ < 2)
            throw std::invalid_argument("point dimension must be at least 2");
    }

    PointSetN(std::size_t dim, std::vector<PointN> pts) : PointSetN(dim)
    {
        for (const auto& p : pts)
            if (p.dim() != dim_)
                throw std::invalid_argument("point " + to_string(p) + " has dimension " +
                                            std::to_string(p.dim()) + ", expected " + std::to_string(dim_));
        pts_ = std::move(pts);
        std::sort(pts_.begin(), pts_.end());
        auto dup = std::adjacent_find(pts_.begin(), pts_.end());
        if (dup != pts_.end())
            throw std::invalid_argument("duplicate point " + to_string(*dup));
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const PointN& operator[](std::size_t i) const { return pts_[i]; }
    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

    std::optional<std::size_t> index_of(const PointN& p) const
    {
        auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
        if (it == pts_.end() || *it != p)
            return std::nullopt;
        return static_cast<std::size_t>(it - pts_.begin());
    }

    friend bool operator==(const PointSetN& a, const PointSetN& b) { return a.dim_ == b.dim_ && a.pts_ == b.pts_; }

private:
    std::size_t dim_;
    std::vector<PointN> pts_;
};

inline PointSetN lift(const PointSet2& k)
{
    std::vector<PointN> pts;
    for (const auto& p : k)
        pts.push_back(PointN{{p.x, p.y}});
    return PointSetN(2, std::move(pts));
}

class ValuedSetN {
public:
    ValuedSetN(PointSetN base, std::vector<Rat> values) : base_(std::move(base)), values_(std::move(values))
    {
        if (values_.size() != base_.size())
            throw std::invalid_argument("value count does not match point count");
    }

    ValuedSetN(std::size_t dim, std::vector<std::pair<PointN, Rat>> entries) : base_(dim)
    {
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<PointN> pts;
        for (auto& [p, v] : entries) {
            pts.push_back(p);
            values_.push_back(std::move(v));
        }
        base_ = PointSetN(dim, std::move(pts));
    }

    const PointSetN& base() const { return base_; }
    const std::vector<Rat>& values() const { return values_; }
    std::size_t size() const { return base_.size(); }
    const PointN& point(std::size_t i) const { return base_[i]; }
    const Rat& value(std::size_t i) const { return values_[i]; }

private:
    PointSetN base_;
    std::vector<Rat> values_;
};

// ---------------------------------------------------------------------------
// Coordinate-function unknowns: one per (axis, distinct value).

struct Coordinate {
    std::size_t axis;
    Rat value;

    friend bool operator==(const Coordinate& a, const Coordinate& b) { return a.axis == b.axis && a.value == b.value; }
    friend bool operator<(const Coordinate& a, const Coordinate& b)
    {
        if (a.axis != b.axis)
            return a.axis < b.axis;
        return a.value < b.value;
    }
};

namespace detail {

inline std::vector<Coordinate> coordinates_of(const PointSetN& k)
{
    std::vector<Coordinate> cs;
    for (const auto& p : k)
        for (std::size_t t = 0; t < k.dim(); ++t)
            cs.push_back({t, p[t]});
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

inline std::size_t coordinate_index(const std::vector<Coordinate>& cs, const Coordinate& c)
{
    return static_cast<std::size_t>(std::lower_bound(cs.begin(), cs.end(), c) - cs.begin());
}

// rows: one per (axis, value); columns: points. Entry 1 where the point lies
// on that hyperplane.
inline linalg::Matrix marginal_matrix(const PointSetN& k, const std::vector<Coordinate>& cs)
{
    linalg::Matrix m(cs.size(), linalg::Vector(k.size()));
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t t = 0; t < k.dim(); ++t)
            m[coordinate_index(cs, {t, k[i][t]})][i] = 1;
    return m;
}

} // namespace detail

struct MarginalKernel {
    std::size_t dim = 2;
    std::vector<linalg::IntVector> basis; // entries aligned with the point order

    bool trivial() const { return basis.empty(); }
};

inline MarginalKernel marginal_kernel(const PointSetN& k)
{
    auto cs = detail::coordinates_of(k);
    MarginalKernel mk;
    mk.dim = k.dim();
    mk.basis = linalg::nullspace(detail::marginal_matrix(k, cs), k.size());
    return mk;
}

// True iff mu is nonzero and sums to zero on every axis-parallel hyperplane.
inline bool is_zero_marginal(const PointSetN& k, const linalg::IntVector& mu)
{
    if (mu.size() != k.size())
        return false;
    bool nonzero = false;
    std::map<Coordinate, Int> sums;
    for (std::size_t i = 0; i < k.size(); ++i) {
        nonzero = nonzero || mu[i] != 0;
        for (std::size_t t = 0; t < k.dim(); ++t)
            sums[{t, k[i][t]}] += mu[i];
    }
    if (!nonzero)
        return false;
    for (const auto& [c, s] : sums)
        if (s != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Decomposition in dimension d.

struct DecompositionN {
    std::vector<std::map<Rat, Rat>> g; // g[axis][value]

    Rat eval(const PointN& p) const
    {
        Rat s;
        for (std::size_t t = 0; t < g.size(); ++t)
            s += g[t].at(p[t]);
        return s;
    }
};

struct KernelObstruction {
    linalg::IntVector mu; // zero-marginal, aligned with the point order
    Rat pairing;          // sum mu(p) f(p), nonzero
};

namespace detail {

// Unknown order for the solve: everything else first, then the first value
// of axes 2..d within each connected component, so those anchors are the
// free variables that get pinned to zero.
inline std::vector<Coordinate> solve_order(const PointSetN& k, const std::vector<Coordinate>& cs)
{
    std::vector<std::size_t> parent(cs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& p : k) {
        std::size_t first = coordinate_index(cs, {0, p[0]});
        for (std::size_t t = 1; t < k.dim(); ++t)
            parent[find(coordinate_index(cs, {t, p[t]}))] = find(first);
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_on_axis; // (component, axis) -> coord
    for (std::size_t i = 0; i < cs.size(); ++i)
        first_on_axis.try_emplace({find(i), cs[i].axis}, i);
    std::vector<char> anchor(cs.size(), 0);
    for (const auto& [key, i] : first_on_axis)
        if (key.second >= 1)
            anchor[i] = 1;
    std::vector<Coordinate> order;
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (!anchor[i])
            order.push_back(cs[i]);
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (anchor[i])
            order.push_back(cs[i]);
    return order;
}

// rows: points; columns: unknowns in `order`
inline linalg::Matrix sum_matrix(const PointSetN& k, const std::vector<Coordinate>& order)
{
    std::map<Coordinate, std::size_t> col;
    for (std::size_t j = 0; j < order.size(); ++j)
        col.emplace(order[j], j);
    linalg::Matrix m(k.size(), linalg::Vector(order.size()));
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t t = 0; t < k.dim(); ++t)
            m[i][col.at({t, k[i][t]})] = 1;
    return m;
}

} // namespace detail

using ResultN = std::variant<DecompositionN, KernelObstruction>;

inline ResultN decompose_nd(const ValuedSetN& kf)
{
    const PointSetN& k = kf.base();
    auto cs = detail::coordinates_of(k);
    auto order = detail::solve_order(k, cs);
    auto sol = linalg::solve(detail::sum_matrix(k, order), kf.values(), order.size());
    if (sol) {
        DecompositionN d;
        d.g.resize(k.dim());
        for (std::size_t j = 0; j < order.size(); ++j)
            d.g[order[j].axis].emplace(order[j].value, (*sol)[j]);
        return d;
    }
    for (auto& mu : marginal_kernel(k).basis) {
        Rat pairing;
        for (std::size_t i = 0; i < k.size(); ++i)
            pairing += Rat(mu[i]) * kf.value(i);
        if (pairing != 0)
            return KernelObstruction{std::move(mu), std::move(pairing)};
    }
    throw std::logic_error("inconsistent system without a separating kernel vector");
}

// The linear map f -> (g_1, ..., g_d) used by decompose_nd, when it is
// defined for every f: each unknown as a combination of the values at the
// points (the 4-point set gives 2 g(1) = f(000) + f(110) + f(101) - f(011)).
struct DecompositionScheme {
    std::vector<Coordinate> unknowns;
    std::vector<linalg::Vector> coefficients; // per unknown, aligned with points
};

inline DecompositionScheme decomposition_scheme(const PointSetN& k)
{
    auto cs = detail::coordinates_of(k);
    auto order = detail::solve_order(k, cs);
    linalg::Matrix aug = detail::sum_matrix(k, order);
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(n + k.size());
        aug[i][n + i] = 1;
    }
    auto e = linalg::row_reduce(std::move(aug), n);
    if (e.pivots.size() != k.size())
        throw std::invalid_argument("decomposition_scheme: some functions on this set do not decompose");
    DecompositionScheme s;
    s.unknowns = order;
    s.coefficients.assign(n, linalg::Vector(k.size()));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t i = 0; i < k.size(); ++i)
            s.coefficients[e.pivots[r]][i] = e.rref[r][n + i];
    return s;
}

// ---------------------------------------------------------------------------
// E-operator with axis-orthogonal hyperplanes in place of lines.

inline PointSetN e_operator_nd(const PointSetN& k)
{
    std::map<Coordinate, std::size_t> count;
    for (const auto& p : k)
        for (std::size_t t = 0; t < k.dim(); ++t)
            ++count[{t, p[t]}];
    std::vector<PointN> kept;
    for (const auto& p : k) {
        bool keep = true;
        for (std::size_t t = 0; t < k.dim() && keep; ++t)
            keep = count[{t, p[t]}] >= 2;
        if (keep)
            kept.push_back(p);
    }
    return PointSetN(k.dim(), std::move(kept));
}

struct CyclicN {
    PointSetN core;
};
using EDepthN = std::variant<Finite, CyclicN>;

inline std::vector<PointSetN> e_trace_nd(const PointSetN& k)
{
    std::vector<PointSetN> trace{k};
    while (!trace.back().empty()) {
        PointSetN next = e_operator_nd(trace.back());
        if (next == trace.back())
            break;
        trace.push_back(std::move(next));
    }
    return trace;
}

inline EDepthN e_depth_nd(const PointSetN& k)
{
    auto trace = e_trace_nd(k);
    if (trace.back().empty())
        return Finite{trace.size() - 1};
    return CyclicN{trace.back()};
}

inline PointSetN e_operator_3d(const PointSetN& k)
{
    if (k.dim() != 3)
        throw std::invalid_argument("e_operator_3d expects three-dimensional points");
    return e_operator_nd(k);
}

inline EDepthN e_depth_3d(const PointSetN& k)
{
    if (k.dim() != 3)
        throw std::invalid_argument("e_depth_3d expects three-dimensional points");
    return e_depth_nd(k);
}

// ---------------------------------------------------------------------------
// Verdicts.

enum class Player { VI, AN };

inline const char* to_string(Player p) { return p == Player::VI ? "VI" : "AN"; }

struct PeelingOrder {
    std::vector<PointSet2> layers; // K, E(K), ..., empty
};
struct RookRoute {
    Array2 route; // closed array
};
struct KernelVector {
    linalg::IntVector mu;
};

using Certificate = std::variant<PeelingOrder, RookRoute, DecompositionScheme, KernelVector>;

struct GameVerdict {
    Player winner = Player::VI;
    Certificate certificate;
};

inline const char* certificate_kind(const Certificate& c)
{
    switch (c.index()) {
    case 0: return "peeling_order";
    case 1: return "rook_route";
    case 2: return "decomposition_scheme";
    default: return "kernel_vector";
    }
}

inline GameVerdict winner_2d(const PointSet2& cells)
{
    BasicVerdict b = is_discontinuously_basic(cells);
    if (b.basic)
        return {Player::VI, PeelingOrder{std::move(b.peeling)}};
    return {Player::AN, RookRoute{std::move(*b.closed_array)}};
}

inline GameVerdict winner_nd(const PointSetN& cells)
{
    MarginalKernel mk = marginal_kernel(cells);
    if (mk.trivial())
        return {Player::VI, decomposition_scheme(cells)};
    return {Player::AN, KernelVector{std::move(mk.basis.front())}};
}

} // namespace bsets
