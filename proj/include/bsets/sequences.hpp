#pragma once

// Diagnostics for infinite arrays converging to the origin, computed on
// finite prefixes. Series work is done in doubles and every report carries
// its truncation and tolerance; the W-function and its increments are exact.
//
// Built-in families:
//   Geometric  a_n = (2^-[(n+1)/2], 2^-[n/2]),           n >= 1
//   Power      a_n = ([(n+1)/2]^-1/2, [n/2]^-1/2),        n >= 2
// Custom arrays are finite point lists given in order. The hard family
// (gen_hard_instance, hard_layer_array) comes in through decomp.hpp.

#include "bsets/decomp.hpp"
#include "bsets/rational.hpp"
#include "bsets/rook.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bsets {

enum class Family { Geometric, Power, Custom };

inline const char* to_string(Family f)
{
    switch (f) {
    case Family::Geometric: return "geometric";
    case Family::Power: return "power";
    default: return "custom";
    }
}

class CompletedArrayGen {
public:
    static CompletedArrayGen geometric() { return CompletedArrayGen(Family::Geometric, {}); }
    static CompletedArrayGen power() { return CompletedArrayGen(Family::Power, {}); }

    // Throws std::invalid_argument unless the points form an array.
    static CompletedArrayGen custom(std::vector<Point2> pts)
    {
        if (pts.empty())
            throw std::invalid_argument("custom array is empty");
        if (!as_array(pts))
            throw std::invalid_argument("custom points do not form an array");
        return CompletedArrayGen(Family::Custom, std::move(pts));
    }

    Family family() const { return family_; }
    std::size_t first_index() const { return family_ == Family::Power ? 2 : 1; }

    // number of available terms; unbounded for built-in families
    std::size_t available() const
    {
        return family_ == Family::Custom ? custom_.size() : std::numeric_limits<std::size_t>::max();
    }

    std::pair<double, double> point(std::size_t n) const
    {
        check_index(n);
        switch (family_) {
        case Family::Geometric:
            return {std::ldexp(1.0, -static_cast<int>((n + 1) / 2)), std::ldexp(1.0, -static_cast<int>(n / 2))};
        case Family::Power:
            return {1.0 / std::sqrt(static_cast<double>((n + 1) / 2)), 1.0 / std::sqrt(static_cast<double>(n / 2))};
        default: {
            const Point2& p = custom_[n - 1];
            return {to_double(p.x), to_double(p.y)};
        }
        }
    }

    // Exact coordinates: dyadic for Geometric, the stored values for Custom,
    // and the exact value of the computed doubles for Power.
    Point2 exact_point(std::size_t n) const
    {
        check_index(n);
        switch (family_) {
        case Family::Geometric:
            return {pow2(-static_cast<long>((n + 1) / 2)), pow2(-static_cast<long>(n / 2))};
        case Family::Custom: return custom_[n - 1];
        default: {
            auto [x, y] = point(n);
            return {from_double(x), from_double(y)};
        }
        }
    }

    double norm(std::size_t n) const
    {
        auto [x, y] = point(n);
        return std::hypot(x, y);
    }

    // a_first .. a_{first+count-1}
    Array2 prefix(std::size_t count) const
    {
        std::vector<Point2> pts;
        for (std::size_t n = first_index(); n < first_index() + count; ++n)
            pts.push_back(exact_point(n));
        auto a = as_array(std::move(pts));
        if (!a)
            throw std::logic_error("generated prefix is not an array");
        return *a;
    }

private:
    CompletedArrayGen(Family f, std::vector<Point2> pts) : family_(f), custom_(std::move(pts)) {}

    void check_index(std::size_t n) const
    {
        if (n < first_index() || (family_ == Family::Custom && n > custom_.size()))
            throw std::out_of_range("array index " + std::to_string(n) + " out of range");
    }

    Family family_;
    std::vector<Point2> custom_;
};

// f(a_n) as a function of the index and the point.
using ValueRule = std::function<double(std::size_t n, double x, double y)>;

namespace rules {

inline ValueRule alternating_harmonic()
{
    return [](std::size_t n, double, double) { return (n % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(n); };
}

inline ValueRule geometric_decay()
{
    return [](std::size_t n, double, double) { return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n, 1074))); };
}

inline ValueRule constant(double c)
{
    return [c](std::size_t, double, double) { return c; };
}

} // namespace rules

struct SeriesOptions {
    double threshold = 3.0;   // divergence: max |S_L| above this ...
    double tolerance = 1e-6;  // ... and no Cauchy tail at this tolerance
    double tail_fraction = 0.1;
};

enum class SeriesVerdict { Converges, Diverges, Inconclusive };

inline const char* to_string(SeriesVerdict v)
{
    switch (v) {
    case SeriesVerdict::Converges: return "converges";
    case SeriesVerdict::Diverges: return "diverges";
    default: return "inconclusive";
    }
}

struct SeriesReport {
    std::vector<double> partial_sums; // S_L for L = first .. first+terms-1
    double max_abs_partial = 0;
    double tail_oscillation = 0;      // max |S_L - S_last| over the tail window
    bool cauchy_tail = false;
    SeriesVerdict verdict = SeriesVerdict::Inconclusive;
    std::size_t terms = 0;
    SeriesOptions options;
};

// S_L = sum_{i <= L} (-1)^i f(a_i), over `terms` terms.
inline SeriesReport alternating_sums(const CompletedArrayGen& gen, const ValueRule& f, std::size_t terms,
                                     SeriesOptions opt = {})
{
    if (terms < 2)
        throw std::invalid_argument("alternating_sums: need at least two terms");
    if (terms > gen.available())
        throw std::invalid_argument("alternating_sums: array has only " + std::to_string(gen.available()) + " points");
    SeriesReport r;
    r.options = opt;
    r.terms = terms;
    double s = 0;
    for (std::size_t n = gen.first_index(); n < gen.first_index() + terms; ++n) {
        auto [x, y] = gen.point(n);
        double v = f(n, x, y);
        s += n % 2 == 0 ? v : -v;
        r.partial_sums.push_back(s);
        r.max_abs_partial = std::max(r.max_abs_partial, std::abs(s));
    }
    std::size_t window = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(opt.tail_fraction * terms)));
    window = std::min(window, terms);
    for (std::size_t i = terms - window; i < terms; ++i)
        r.tail_oscillation = std::max(r.tail_oscillation, std::abs(r.partial_sums[i] - s));
    r.cauchy_tail = r.tail_oscillation < opt.tolerance;
    if (r.cauchy_tail)
        r.verdict = SeriesVerdict::Converges;
    else if (r.max_abs_partial > opt.threshold)
        r.verdict = SeriesVerdict::Diverges;
    return r;
}

struct TailRatioReport {
    std::vector<std::pair<std::size_t, double>> ratios; // (k, r_k)
    std::size_t truncation = 0;
    // bound on the neglected sum_{n > N} |a_n|; infinite when that tail diverges
    double remainder_bound = 0;
    bool appears_bounded = false; // heuristic, see tail_ratio
};

// r_k = (sum_{n=k}^{N} |a_n|) / |a_k| for k = first .. k_max. The bounded
// flag is a heuristic: the largest ratio over the second half of the k
// range stays within 10% of the largest over the first half.
inline TailRatioReport tail_ratio(const CompletedArrayGen& gen, std::size_t k_max, std::size_t n_trunc)
{
    if (k_max > n_trunc)
        throw std::invalid_argument("tail_ratio: k_max must not exceed the truncation index");
    if (n_trunc > gen.available())
        throw std::invalid_argument("tail_ratio: array is shorter than the truncation index");
    const std::size_t first = gen.first_index();
    if (k_max < first)
        throw std::invalid_argument("tail_ratio: k_max below the first index");
    TailRatioReport r;
    r.truncation = n_trunc;
    std::vector<double> suffix(n_trunc + 2, 0.0);
    for (std::size_t n = n_trunc; n >= first; --n)
        suffix[n] = suffix[n + 1] + gen.norm(n);
    for (std::size_t k = first; k <= k_max; ++k) {
        double nk = gen.norm(k);
        if (nk == 0)
            throw std::domain_error("tail_ratio: |a_" + std::to_string(k) + "| = 0");
        r.ratios.emplace_back(k, suffix[k] / nk);
    }
    switch (gen.family()) {
    case Family::Geometric:
        // |a_{n+2}| = |a_n| / 2
        r.remainder_bound = 2 * (gen.norm(n_trunc + 1) + gen.norm(n_trunc + 2));
        break;
    case Family::Power: r.remainder_bound = std::numeric_limits<double>::infinity(); break;
    default: r.remainder_bound = 0; break;
    }
    std::size_t half = r.ratios.size() / 2;
    double early = 0, late = 0;
    for (std::size_t i = 0; i < r.ratios.size(); ++i)
        (i < half ? early : late) = std::max(i < half ? early : late, r.ratios[i].second);
    r.appears_bounded = half == 0 || late <= 1.1 * early;
    return r;
}

// ---------------------------------------------------------------------------
// Splitting f on the geometric completed array via alternating tail sums.

using PlaneRule = std::function<double(double x, double y)>;

struct GeometricSplit {
    std::size_t depth = 0;
    double tolerance = 0;
    double residual = 0;
    std::pair<double, double> worst_point{0, 0};
    bool ok = false;
    double remainder_estimate = 0;                     // |f| at the first neglected point
    std::vector<std::pair<int, double>> g, h;          // (k, value at 2^-k)
    std::vector<std::pair<int, double>> g_quotient, h_quotient; // value / 2^-k
};

// g(2^-k) = f(a_2k) - f(a_2k+1) + ... and h(2^-k) = f(a_2k+1) - f(a_2k+2) + ...,
// each series running through a_{2(k+depth)}. Checked on the points
// a_1 .. a_{2 depth + 1} and the origin; f is shifted so that f(0,0) = 0,
// with g(0) carrying the shift.
inline GeometricSplit geometric_decompose(const PlaneRule& f, std::size_t depth, double tol)
{
    if (depth < 1 || depth > 400)
        throw std::invalid_argument("geometric_decompose: depth must be in 1..400");
    const auto gen = CompletedArrayGen::geometric();
    const double origin = f(0, 0);
    auto fv = [&](std::size_t n) {
        auto [x, y] = gen.point(n);
        return f(x, y) - origin;
    };
    auto g_at = [&](std::size_t k) {
        double s = 0;
        for (std::size_t n = 2 * k; n <= 2 * (k + depth); ++n)
            s += n % 2 == 0 ? fv(n) : -fv(n);
        return s;
    };
    auto h_at = [&](std::size_t k) {
        double s = 0;
        for (std::size_t n = 2 * k + 1; n <= 2 * (k + depth); ++n)
            s += n % 2 == 1 ? fv(n) : -fv(n);
        return s;
    };

    GeometricSplit out;
    out.depth = depth;
    out.tolerance = tol;
    std::vector<double> gk(depth + 2), hk(depth + 1);
    for (std::size_t k = 1; k <= depth + 1; ++k)
        gk[k] = g_at(k);
    for (std::size_t k = 0; k <= depth; ++k)
        hk[k] = h_at(k);
    for (std::size_t k = 0; k <= depth; ++k) {
        double scale = std::ldexp(1.0, -static_cast<int>(k));
        if (k >= 1) {
            out.g.emplace_back(static_cast<int>(k), gk[k] + origin);
            out.g_quotient.emplace_back(static_cast<int>(k), gk[k] / scale);
        }
        out.h.emplace_back(static_cast<int>(k), hk[k]);
        out.h_quotient.emplace_back(static_cast<int>(k), hk[k] / scale);
    }

    // a_{2k} = (2^-k, 2^-k) uses g(2^-k), h(2^-k); a_{2k+1} uses g(2^-(k+1)), h(2^-k)
    for (std::size_t n = 1; n <= 2 * depth + 1; ++n) {
        std::size_t gi = (n + 1) / 2, hi = n / 2;
        double err = std::abs(fv(n) - gk[gi] - hk[hi]);
        if (err > out.residual || n == 1) {
            out.residual = err;
            out.worst_point = gen.point(n);
        }
    }
    out.remainder_estimate = std::abs(fv(2 * depth + 1));
    out.ok = out.residual < tol;
    return out;
}

// ---------------------------------------------------------------------------
// The spike function: w vanishes except for triangles on
// [4^-i, 4^-i + 4^-3i] with apex 2^{3i} at 4^-i + 4^{-3i-1}, i >= 1.
// W(x) is the area under w on [0, x]; spike i has area 2^{-3i-1}.

inline Rat spike_area(long i) { return pow2(-3 * i - 1); }

// sum_{i >= from} 2^{-3i-1} = 2^{2-3 from} / 7
inline Rat spike_tail(long from) { return pow2(2 - 3 * from) / 7; }

// Area of spike i over [4^-i, x].
inline Rat partial_spike(long i, const Rat& x)
{
    const Rat left = pow2(-2 * i);
    const Rat apex = left + pow2(-6 * i - 2);
    const Rat right = left + pow2(-6 * i);
    const Rat height = pow2(3 * i);
    if (x <= left)
        return 0;
    if (x >= right)
        return spike_area(i);
    if (x <= apex) {
        Rat run = x - left;
        return run * run * height / (apex - left) / 2;
    }
    Rat rest = right - x;
    return spike_area(i) - rest * rest * height / (right - apex) / 2;
}

// Throws std::domain_error outside [0, 1].
inline Rat w_area(const Rat& x)
{
    if (x < 0 || x > 1)
        throw std::domain_error("w_area: x = " + to_string(x) + " outside [0, 1]");
    if (x == 0)
        return 0;
    long first_full = 1;
    while (pow2(-2 * first_full) + pow2(-6 * first_full) > x)
        ++first_full;
    Rat total = spike_tail(first_full);
    for (long i = 1; i < first_full; ++i)
        total += partial_spike(i, x);
    return total;
}

struct IncrementReport {
    Rat d;
    std::size_t depth = 0;
    Rat value;          // sum_{k=0}^{depth} W(4^{-k-1} + d 4^-k) - W(4^{-k-1})
    double bound = 0;   // (4d)^{3/4} / 2
    double tolerance = 1e-9;
    bool holds = false; // value >= bound - tolerance
};

// Throws std::domain_error unless 0 < d < 1/4.
inline IncrementReport cross_g_increment(const Rat& d, std::size_t depth)
{
    if (d <= 0 || d >= Rat(1, 4))
        throw std::domain_error("cross_g_increment: d must lie in (0, 1/4)");
    IncrementReport r;
    r.d = d;
    r.depth = depth;
    for (std::size_t k = 0; k <= depth; ++k) {
        const long kk = static_cast<long>(k);
        Rat base = pow2(-2 * kk - 2);
        r.value += w_area(base + d * pow2(-2 * kk)) - w_area(base);
    }
    r.bound = std::pow(4 * to_double(d), 0.75) / 2;
    r.holds = to_double(r.value) >= r.bound - r.tolerance;
    return r;
}

} // namespace bsets
