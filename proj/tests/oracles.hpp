#pragma once

// Brute-force references used only by the tests. Nothing here calls into
// the code paths it is used to check.

#include "bsets/rational.hpp"
#include "bsets/rook.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using bsets::Point2;
using bsets::Rat;

inline bool share_x(const Point2& a, const Point2& b) { return a.x == b.x; }
inline bool share_y(const Point2& a, const Point2& b) { return a.y == b.y; }

// E(K) straight from the definition: count points on each line by scanning.
inline std::vector<Point2> e_step(const std::vector<Point2>& k)
{
    std::vector<Point2> out;
    for (const auto& v : k) {
        std::size_t col = 0, row = 0;
        for (const auto& w : k) {
            col += w.x == v.x;
            row += w.y == v.y;
        }
        if (col >= 2 && row >= 2)
            out.push_back(v);
    }
    return out;
}

// A simple cycle of the point set, as point indices in order, in which
// consecutive points alternately share a row and a column.
using Cycle = std::vector<std::size_t>;

// Every simple closed rook route (each listed once per rotation/direction
// class is not guaranteed; duplicates are harmless for the uses here).
// Routes start at their smallest index and turn at every point.
inline std::vector<Cycle> simple_cycles(const std::vector<Point2>& k)
{
    std::vector<Cycle> out;
    const std::size_t n = k.size();
    std::vector<char> used(n, 0);
    Cycle path;
    // next move must share y when `want_y`
    std::function<void(std::size_t, bool)> dfs = [&](std::size_t cur, bool want_y) {
        const std::size_t start = path.front();
        for (std::size_t nxt = 0; nxt < n; ++nxt) {
            if (nxt == cur)
                continue;
            bool ok = want_y ? share_y(k[cur], k[nxt]) : share_x(k[cur], k[nxt]);
            if (!ok)
                continue;
            if (nxt == start) {
                // closing step must also respect alternation, and the route
                // must have even length >= 4 so every point is a turn
                if (path.size() >= 4 && path.size() % 2 == 0)
                    out.push_back(path);
                continue;
            }
            if (used[nxt] || nxt < start)
                continue;
            // turning at every point: three consecutive points never collinear
            if (path.size() >= 2) {
                const Point2& a = k[path[path.size() - 2]];
                if (want_y ? share_y(a, k[nxt]) : share_x(a, k[nxt]))
                    continue;
            }
            used[nxt] = 1;
            path.push_back(nxt);
            dfs(nxt, !want_y);
            path.pop_back();
            used[nxt] = 0;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        used[s] = 1;
        path = {s};
        dfs(s, true);
        used[s] = 0;
    }
    return out;
}

// f(c_0) - f(c_1) + ... for a cycle of even length
inline Rat alternating(const std::vector<Rat>& f, const Cycle& c)
{
    Rat s;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += i % 2 == 0 ? f[c[i]] : Rat(-f[c[i]]);
    return s;
}

// Length of the longest array of pairwise-distinct points (either parity),
// by exhaustive search.
inline std::size_t longest_distinct_array(const std::vector<Point2>& k)
{
    std::size_t best = k.empty() ? 0 : 1;
    std::vector<char> used(k.size(), 0);
    std::function<void(std::size_t, bool, std::size_t)> dfs = [&](std::size_t cur, bool want_y, std::size_t len) {
        best = std::max(best, len);
        for (std::size_t nxt = 0; nxt < k.size(); ++nxt) {
            if (used[nxt])
                continue;
            bool ok = want_y ? share_y(k[cur], k[nxt]) : share_x(k[cur], k[nxt]);
            if (!ok)
                continue;
            used[nxt] = 1;
            dfs(nxt, !want_y, len + 1);
            used[nxt] = 0;
        }
    };
    for (std::size_t s = 0; s < k.size(); ++s)
        for (bool y : {true, false}) {
            used[s] = 1;
            dfs(s, y, 1);
            used[s] = 0;
        }
    return best;
}

// Minimum of sup|g + c| + sup|h - c| over the gauge c, for a decomposition
// of a set whose incidence graph is connected. Each term is convex and
// piecewise linear in c with a single kink, at -(max g + min g)/2 and
// (max h + min h)/2 respectively, so the minimum sits at one of the two.
inline Rat min_norm_over_gauge(const std::map<Rat, Rat>& g, const std::map<Rat, Rat>& h)
{
    if (g.empty())
        return 0;
    auto [glo, ghi] = std::minmax_element(g.begin(), g.end(), [](auto& a, auto& b) { return a.second < b.second; });
    auto [hlo, hhi] = std::minmax_element(h.begin(), h.end(), [](auto& a, auto& b) { return a.second < b.second; });
    std::vector<Rat> candidates{Rat(-(glo->second + ghi->second) / 2), Rat((hlo->second + hhi->second) / 2)};
    std::optional<Rat> best;
    for (const auto& c : candidates) {
        Rat sg, sh;
        for (const auto& [x, v] : g)
            sg = std::max(sg, bsets::abs(Rat(v + c)));
        for (const auto& [y, v] : h)
            sh = std::max(sh, bsets::abs(Rat(v - c)));
        Rat total = sg + sh;
        if (!best || total < *best)
            best = total;
    }
    return *best;
}

// Optimal uniform error of approximating f by g(x) + h(y): the largest
// |alternating sum| / length over simple cycles (0 when there are none).
inline Rat best_uniform_error(const std::vector<Point2>& k, const std::vector<Rat>& f)
{
    Rat best;
    for (const auto& c : simple_cycles(k)) {
        Rat v = bsets::abs(alternating(f, c)) / static_cast<long>(c.size());
        best = std::max(best, v);
    }
    return best;
}

inline std::vector<Point2> random_points(std::mt19937_64& rng, std::size_t max_count, long coord_max)
{
    std::uniform_int_distribution<std::size_t> count(0, max_count);
    std::uniform_int_distribution<long> coord(0, coord_max);
    std::set<Point2> pts;
    std::size_t want = count(rng);
    for (std::size_t tries = 0; pts.size() < want && tries < 10 * want + 10; ++tries)
        pts.insert(bsets::pt(coord(rng), coord(rng)));
    return {pts.begin(), pts.end()};
}

} // namespace oracle
