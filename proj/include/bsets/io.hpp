#pragma once

// Text formats.
//
//   points      one point per line: `x y`
//   valued      `x y : v`
//   points nD   `c_1 ... c_d`, optionally `: v` (valued)
//   graph       `vertices N` then one edge `u v` per line, 0-based
//
// Numbers are integers, exact decimals or `p/q`. `#` starts a comment and
// blank lines are ignored. Errors carry 1-based line and column.

#include "bsets/game.hpp"
#include "bsets/graphs.hpp"
#include "bsets/rational.hpp"
#include "bsets/rook.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bsets::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

struct Line {
    std::size_t number;
    std::string text;
    std::vector<Token> tokens;
};

// Non-blank, comment-stripped lines with their tokens.
inline std::vector<Line> read_lines(std::istream& in)
{
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        Line line{number, raw, {}};
        out.push_back(std::move(line));
        Line& l = out.back();
        std::string_view s = l.text;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            if (i == s.size())
                break;
            std::size_t j = i;
            if (s[i] == ':') {
                j = i + 1;
            } else {
                while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ':')
                    ++j;
            }
            l.tokens.push_back({std::string(s.substr(i, j - i)), i + 1});
            i = j;
        }
        if (l.tokens.empty())
            out.pop_back();
    }
    return out;
}

inline std::vector<Line> read_lines(const std::string& text)
{
    std::istringstream in(text);
    return read_lines(in);
}

inline Rat parse_number(const Line& l, const Token& t)
{
    try {
        return parse_rat(t.text);
    } catch (const RatParseError& e) {
        throw ParseError(l.number, t.column + e.offset(), e.what());
    }
}

inline std::size_t parse_index(const Line& l, const Token& t)
{
    if (t.text.empty() || t.text.size() > 18)
        throw ParseError(l.number, t.column, "expected a vertex number, got '" + std::string(t.text) + "'");
    std::size_t v = 0;
    for (std::size_t i = 0; i < t.text.size(); ++i) {
        char c = t.text[i];
        if (c < '0' || c > '9')
            throw ParseError(l.number, t.column + i, "expected a vertex number, got '" + std::string(t.text) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

namespace detail {

// coordinate tokens and optional value token of one record
struct Record {
    std::vector<Rat> coords;
    std::optional<Rat> value;
};

inline Record parse_record(const Line& l, bool valued, std::optional<std::size_t> dim)
{
    Record r;
    std::size_t colon = l.tokens.size();
    for (std::size_t i = 0; i < l.tokens.size(); ++i)
        if (l.tokens[i].text == ":") {
            colon = i;
            break;
        }
    if (valued && colon == l.tokens.size())
        throw ParseError(l.number, l.text.size() + 1, "expected ': value'");
    if (!valued && colon != l.tokens.size())
        throw ParseError(l.number, l.tokens[colon].column, "unexpected ':' in a point list");
    if (valued) {
        if (colon + 1 == l.tokens.size())
            throw ParseError(l.number, l.text.size() + 1, "expected a value after ':'");
        if (colon + 2 < l.tokens.size())
            throw ParseError(l.number, l.tokens[colon + 2].column, "expected exactly one value after ':'");
        r.value = parse_number(l, l.tokens[colon + 1]);
    }
    for (std::size_t i = 0; i < colon; ++i)
        r.coords.push_back(parse_number(l, l.tokens[i]));
    std::size_t want = dim.value_or(r.coords.size());
    if (r.coords.size() != want || r.coords.size() < 2) {
        std::size_t col = r.coords.size() > want ? l.tokens[want].column
                          : colon == 0           ? l.tokens[0].column
                                                 : l.tokens[colon - 1].column;
        throw ParseError(l.number, col,
                         "expected " + std::to_string(std::max<std::size_t>(want, 2)) + " coordinates, got " +
                             std::to_string(r.coords.size()));
    }
    return r;
}

} // namespace detail

inline PointSet2 parse_points(std::istream& in)
{
    std::vector<Point2> pts;
    std::vector<std::size_t> where;
    for (const Line& l : read_lines(in)) {
        auto r = detail::parse_record(l, false, 2);
        pts.push_back({r.coords[0], r.coords[1]});
        where.push_back(l.number);
    }
    try {
        return PointSet2(pts);
    } catch (const std::invalid_argument& e) {
        // locate the repeat for the message
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (pts[i] == pts[j])
                    throw ParseError(where[i], 1, "duplicate point " + to_string(pts[i]) + " (first on line " +
                                                      std::to_string(where[j]) + ")");
        throw;
    }
}

inline ValuedSet2 parse_valued(std::istream& in)
{
    std::vector<std::pair<Point2, Rat>> entries;
    std::map<Point2, std::size_t> seen;
    for (const Line& l : read_lines(in)) {
        auto r = detail::parse_record(l, true, 2);
        Point2 p{r.coords[0], r.coords[1]};
        if (auto [it, fresh] = seen.emplace(p, l.number); !fresh)
            throw ParseError(l.number, 1,
                             "duplicate point " + to_string(p) + " (first on line " + std::to_string(it->second) + ")");
        entries.emplace_back(std::move(p), std::move(*r.value));
    }
    return ValuedSet2(std::move(entries));
}

// Points (and values, when `valued`) of a fixed-dimension set; the
// dimension comes from the first record.
struct ParsedN {
    PointSetN points;
    std::vector<Rat> values; // empty unless valued
};

inline ParsedN parse_points_nd(std::istream& in, bool valued)
{
    std::optional<std::size_t> dim;
    std::vector<std::pair<PointN, Rat>> entries;
    std::map<PointN, std::size_t> seen;
    for (const Line& l : read_lines(in)) {
        auto r = detail::parse_record(l, valued, dim);
        dim = r.coords.size();
        PointN p{std::move(r.coords)};
        if (auto [it, fresh] = seen.emplace(p, l.number); !fresh)
            throw ParseError(l.number, 1,
                             "duplicate point " + to_string(p) + " (first on line " + std::to_string(it->second) + ")");
        entries.emplace_back(std::move(p), r.value.value_or(Rat(0)));
    }
    ValuedSetN vs(dim.value_or(2), std::move(entries));
    ParsedN out{vs.base(), {}};
    if (valued)
        out.values = vs.values();
    return out;
}

inline FiniteGraph parse_graph(std::istream& in)
{
    auto lines = read_lines(in);
    if (lines.empty())
        throw ParseError(1, 1, "expected 'vertices N'");
    const Line& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0].text != "vertices")
        throw ParseError(head.number, head.tokens[0].column, "expected 'vertices N'");
    std::size_t n = parse_index(head, head.tokens[1]);
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens.size() != 2)
            throw ParseError(l.number, l.tokens.size() > 2 ? l.tokens[2].column : l.tokens[0].column,
                             "expected an edge 'u v'");
        Vertex u = parse_index(l, l.tokens[0]);
        Vertex v = parse_index(l, l.tokens[1]);
        if (u >= n || v >= n)
            throw ParseError(l.number, (u >= n ? l.tokens[0] : l.tokens[1]).column,
                             "vertex out of range 0.." + std::to_string(n ? n - 1 : 0));
        if (u == v)
            throw ParseError(l.number, l.tokens[0].column, "loop at vertex " + std::to_string(u));
        if (!seen.insert(std::minmax(u, v)).second)
            throw ParseError(l.number, l.tokens[0].column, "repeated edge");
        edges.emplace_back(u, v);
    }
    return FiniteGraph(n, std::move(edges));
}

// Points in file order, for arrays whose order matters; valued lines carry
// the ordering key after ':' (integers, sorted ascending).
inline std::vector<Point2> parse_ordered_points(std::istream& in)
{
    std::vector<std::pair<Rat, Point2>> keyed;
    std::map<Rat, std::size_t> seen;
    for (const Line& l : read_lines(in)) {
        auto r = detail::parse_record(l, true, 2);
        if (!is_integer(*r.value))
            throw ParseError(l.number, l.tokens.back().column, "ordering key must be an integer");
        if (auto [it, fresh] = seen.emplace(*r.value, l.number); !fresh)
            throw ParseError(l.number, l.tokens.back().column,
                             "ordering key repeated (first on line " + std::to_string(it->second) + ")");
        keyed.emplace_back(*r.value, Point2{r.coords[0], r.coords[1]});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Point2> pts;
    for (auto& [k, p] : keyed)
        pts.push_back(std::move(p));
    return pts;
}

template <class F>
auto parse_string(const std::string& text, F&& parser)
{
    std::istringstream in(text);
    return parser(in);
}

// ---------------------------------------------------------------------------
// Writers; output re-parses with the matching reader.

inline void write_points(std::ostream& out, const PointSet2& k)
{
    for (const auto& p : k)
        out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
}

inline void write_valued(std::ostream& out, const ValuedSet2& kf)
{
    for (std::size_t i = 0; i < kf.size(); ++i)
        out << to_string(kf.point(i).x) << ' ' << to_string(kf.point(i).y) << " : " << to_string(kf.value(i))
            << '\n';
}

inline void write_points_nd(std::ostream& out, const PointSetN& k, const std::vector<Rat>* values = nullptr)
{
    for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t t = 0; t < k.dim(); ++t)
            out << (t ? " " : "") << to_string(k[i][t]);
        if (values)
            out << " : " << to_string((*values)[i]);
        out << '\n';
    }
}

inline void write_graph(std::ostream& out, const FiniteGraph& g)
{
    out << "vertices " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

} // namespace bsets::io
