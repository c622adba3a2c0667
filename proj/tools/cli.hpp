#pragma once

// Command implementations behind the `bsets` executable. `run` takes the
// argument list and streams so the tests can drive it without a process.
//
// Exit status: 0 decided/constructed, 1 negative decision (the document
// carries the certificate), 2 input error.

#include "bsets/decomp.hpp"
#include "bsets/document.hpp"
#include "bsets/game.hpp"
#include "bsets/graphs.hpp"
#include "bsets/io.hpp"
#include "bsets/rook.hpp"
#include "bsets/sequences.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace bsets::cli {

enum Exit { Ok = 0, Negative = 1, InputError = 2 };

// Raised for bad input the parsers do not see (missing files, bad flags).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string num(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string coords(const Point2& p) { return to_string(p.x) + " " + to_string(p.y); }

inline std::string coords(const PointN& p)
{
    std::string s;
    for (std::size_t t = 0; t < p.dim(); ++t)
        s += (t ? " " : "") + to_string(p[t]);
    return s;
}

template <class Set>
void put_points(Document::Block b, const Set& pts)
{
    for (const auto& p : pts)
        b.set("point", coords(p));
}

// Exactly one of a path ("-" is stdin) or an inline literal, where ';'
// separates lines.
struct Source {
    std::string path;
    std::string literal;

    void attach(CLI::App* sub)
    {
        sub->add_option("input", path, "input file, or - for standard input");
        sub->add_option("--inline", literal, "input given on the command line; ';' separates lines");
    }

    bool given() const { return !path.empty() || !literal.empty(); }

    std::string read(std::istream& std_in) const
    {
        if (path.empty() == literal.empty())
            throw UsageError("give exactly one input: a file path, '-', or --inline TEXT");
        if (!literal.empty()) {
            std::string s = literal;
            for (auto& c : s)
                if (c == ';')
                    c = '\n';
            return s;
        }
        if (path == "-")
            return {std::istreambuf_iterator<char>(std_in), {}};
        std::ifstream f(path);
        if (!f)
            throw UsageError("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(f), {}};
    }
};

inline bool has_values(const std::string& text)
{
    for (const auto& l : io::read_lines(text))
        for (const auto& t : l.tokens)
            if (t.text == ":")
                return true;
    return false;
}

inline PointSet2 as_plane(const PointSetN& k)
{
    std::vector<Point2> pts;
    for (const auto& p : k)
        pts.push_back({p[0], p[1]});
    return PointSet2(std::move(pts));
}

inline void put_decomposition(Document& doc, const Decomposition2& d, const NormReport& r)
{
    auto g = doc.block("g");
    for (const auto& [x, v] : d.g)
        g.line(to_string(x) + " -> " + to_string(v));
    auto h = doc.block("h");
    for (const auto& [y, v] : d.h)
        h.line(to_string(y) + " -> " + to_string(v));
    doc.block("norms")
        .set("sup_g", to_string(r.sup_g))
        .set("sup_h", to_string(r.sup_h))
        .set("sup_f", to_string(r.sup_f))
        .set("residual", to_string(r.residual));
}

inline void put_obstruction(Document& doc, const Obstruction2& ob)
{
    doc.set("verdict", "obstructed");
    doc.set("alternating_sum", to_string(ob.alternating_sum));
    put_points(doc.block("closed_array"), ob.cycle.points);
}

} // namespace detail

// ---------------------------------------------------------------------------

inline int cmd_analyze(const std::string& text, Document& doc)
{
    doc.set("command", "analyze");
    auto parsed = io::parse_string(text, [&](std::istream& in) { return io::parse_points_nd(in, detail::has_values(text)); });
    const PointSetN& kn = parsed.points;
    doc.set("dimension", kn.dim());
    doc.set("points", kn.size());

    if (kn.dim() != 2) {
        auto trace = e_trace_nd(kn);
        auto tb = doc.block("e_trace");
        for (std::size_t i = 0; i < trace.size(); ++i)
            tb.set("step_" + std::to_string(i), trace[i].size());
        auto depth = e_depth_nd(kn);
        bool finite = std::holds_alternative<Finite>(depth);
        if (finite)
            doc.set("depth", std::get<Finite>(depth).steps);
        else {
            doc.set("depth", "cyclic");
            detail::put_points(doc.block("core"), std::get<CyclicN>(depth).core);
        }
        auto mk = marginal_kernel(kn);
        doc.set("kernel_dimension", mk.basis.size());
        doc.set("basic", mk.trivial());
        if (!mk.trivial()) {
            auto b = doc.block("kernel_vector");
            for (std::size_t i = 0; i < kn.size(); ++i)
                b.line(detail::coords(kn[i]) + " -> " + mk.basis.front()[i].get_str());
        }
        return mk.trivial() ? Ok : Negative;
    }

    PointSet2 k = detail::as_plane(kn);
    auto ig = build_incidence(k);
    doc.set("x_values", ig.x_values.size());
    doc.set("y_values", ig.y_values.size());
    doc.set("classes", equivalence_classes(k).size());
    auto trace = e_trace(k);
    auto tb = doc.block("e_trace");
    for (std::size_t i = 0; i < trace.size(); ++i)
        tb.set("step_" + std::to_string(i), trace[i].size());
    auto depth = e_depth(k);
    if (auto f = std::get_if<Finite>(&depth))
        doc.set("depth", f->steps);
    else {
        doc.set("depth", "cyclic");
        detail::put_points(doc.block("core"), std::get<Cyclic>(depth).core);
    }
    auto bound = longest_odd_array(k);
    if (auto b = std::get_if<Bounded>(&bound))
        doc.set("longest_odd_array", b->length);
    else
        doc.set("longest_odd_array", "unbounded");
    auto verdict = is_discontinuously_basic(k);
    doc.set("basic", verdict.basic);
    if (!verdict.basic) {
        detail::put_points(doc.block("closed_array"), verdict.closed_array->points);
        return Negative;
    }
    return Ok;
}

enum class Method { Exact, Peel, MinNorm, Approx, Nd };

inline const char* method_name(Method m)
{
    switch (m) {
    case Method::Exact: return "exact";
    case Method::Peel: return "peel";
    case Method::MinNorm: return "min_norm";
    case Method::Approx: return "approx";
    case Method::Nd: return "nd";
    }
    return "?";
}

inline int cmd_decompose(const std::string& text, Method method, Document& doc)
{
    doc.set("command", "decompose");
    doc.set("method", method_name(method));
    auto parsed = io::parse_string(text, [](std::istream& in) { return io::parse_points_nd(in, true); });

    if (method == Method::Nd) {
        ValuedSetN kf(parsed.points, parsed.values);
        doc.set("dimension", kf.base().dim());
        auto res = decompose_nd(kf);
        if (auto ob = std::get_if<KernelObstruction>(&res)) {
            doc.set("verdict", "obstructed");
            doc.set("pairing", to_string(ob->pairing));
            auto b = doc.block("kernel_vector");
            for (std::size_t i = 0; i < kf.size(); ++i)
                b.line(detail::coords(kf.point(i)) + " -> " + ob->mu[i].get_str());
            return Negative;
        }
        const auto& d = std::get<DecompositionN>(res);
        doc.set("verdict", "decomposed");
        for (std::size_t t = 0; t < d.g.size(); ++t) {
            auto b = doc.block("g" + std::to_string(t + 1));
            for (const auto& [c, v] : d.g[t])
                b.line(to_string(c) + " -> " + to_string(v));
        }
        return Ok;
    }

    if (parsed.points.dim() != 2)
        throw UsageError("this method takes points in the plane; use --nd for " +
                         std::to_string(parsed.points.dim()) + " coordinates");
    ValuedSet2 kf(detail::as_plane(parsed.points), parsed.values);

    switch (method) {
    case Method::Exact: {
        auto res = decompose_exact(kf);
        if (auto ob = std::get_if<Obstruction2>(&res)) {
            detail::put_obstruction(doc, *ob);
            return Negative;
        }
        const auto& d = std::get<Decomposition2>(res);
        doc.set("verdict", "decomposed");
        detail::put_decomposition(doc, d, verify(kf, d));
        return Ok;
    }
    case Method::Peel: {
        auto depth = e_depth(kf.base());
        if (auto c = std::get_if<Cyclic>(&depth)) {
            doc.set("verdict", "not_peelable");
            detail::put_points(doc.block("core"), c->core);
            return Negative;
        }
        auto d = peel_decompose(kf);
        doc.set("verdict", "decomposed");
        doc.set("depth", std::get<Finite>(depth).steps);
        detail::put_decomposition(doc, d, verify(kf, d));
        return Ok;
    }
    case Method::MinNorm: {
        auto res = min_norm_exact(kf);
        if (auto ob = std::get_if<Obstruction2>(&res)) {
            detail::put_obstruction(doc, *ob);
            return Negative;
        }
        const auto& r = std::get<MinNormResult>(res);
        doc.set("verdict", "decomposed");
        doc.set("objective", to_string(r.objective));
        detail::put_decomposition(doc, r.decomposition, r.report);
        return Ok;
    }
    case Method::Approx: {
        auto r = best_sup_approx(kf);
        doc.set("verdict", r.report.residual == 0 ? "decomposed" : "approximated");
        doc.set("error", to_string(r.report.residual));
        detail::put_decomposition(doc, r.decomposition, r.report);
        return Ok;
    }
    default: break;
    }
    return Ok;
}

inline int cmd_game(const std::string& text, bool algebraic, Document& doc)
{
    doc.set("command", "game");
    auto parsed = io::parse_string(text, [&](std::istream& in) { return io::parse_points_nd(in, detail::has_values(text)); });
    const PointSetN& kn = parsed.points;
    doc.set("dimension", kn.dim());
    doc.set("cells", kn.size());
    GameVerdict v = kn.dim() == 2 && !algebraic ? winner_2d(detail::as_plane(kn)) : winner_nd(kn);
    doc.set("winner", bsets::to_string(v.winner));
    doc.set("certificate", certificate_kind(v.certificate));
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, PeelingOrder>) {
                auto b = doc.block("peeling_order");
                for (std::size_t i = 0; i < c.layers.size(); ++i)
                    b.set("layer_" + std::to_string(i), c.layers[i].size());
            } else if constexpr (std::is_same_v<C, RookRoute>) {
                detail::put_points(doc.block("rook_route"), c.route.points);
            } else if constexpr (std::is_same_v<C, KernelVector>) {
                auto b = doc.block("kernel_vector");
                for (std::size_t i = 0; i < kn.size(); ++i)
                    b.line(detail::coords(kn[i]) + " -> " + c.mu[i].get_str());
            } else {
                // each unknown as a combination of the values at the cells
                auto b = doc.block("decomposition_scheme");
                for (std::size_t u = 0; u < c.unknowns.size(); ++u) {
                    std::string rhs;
                    for (std::size_t i = 0; i < kn.size(); ++i) {
                        const Rat& a = c.coefficients[u][i];
                        if (a == 0)
                            continue;
                        rhs += (rhs.empty() ? "" : " + ") + to_string(a) + " f(" + detail::coords(kn[i]) + ")";
                    }
                    b.set("g" + std::to_string(c.unknowns[u].axis + 1) + "(" + to_string(c.unknowns[u].value) + ")",
                          rhs.empty() ? "0" : rhs);
                }
            }
        },
        v.certificate);
    return v.winner == Player::VI ? Ok : Negative;
}

enum class GraphQuery { Plane, RxTn, Defect, ViaRn };

inline int cmd_graph(const std::string& text, GraphQuery q, unsigned n, Document& doc)
{
    doc.set("command", "graph");
    FiniteGraph g = io::parse_string(text, [](std::istream& in) { return io::parse_graph(in); });
    doc.set("vertices", g.vertex_count());
    doc.set("edges", g.edge_count());
    doc.set("shape", bsets::to_string(classify_shape(g)));

    switch (q) {
    case GraphQuery::Plane: {
        doc.set("query", "plane");
        auto v = basic_in_plane(g);
        doc.set("basic", v.basic);
        doc.set("obstacle", bsets::to_string(v.obstacle));
        switch (v.obstacle) {
        case PlaneObstacle::Circle: {
            std::string s;
            for (Vertex c : v.cycle)
                s += (s.empty() ? "" : " ") + std::to_string(c);
            doc.set("witness", "cycle " + s);
            break;
        }
        case PlaneObstacle::FiveStar:
            doc.set("witness", "vertex " + std::to_string(*v.high_degree_vertex) + " of degree " +
                                   std::to_string(g.degree(*v.high_degree_vertex)));
            break;
        case PlaneObstacle::BranchedCross: {
            std::string s;
            for (Vertex b : v.cross->branches)
                s += " " + std::to_string(b);
            doc.set("witness", "cross at vertex " + std::to_string(v.cross->centre) + " branching at" + s);
            break;
        }
        case PlaneObstacle::None: break;
        }
        return v.basic ? Ok : Negative;
    }
    case GraphQuery::RxTn: {
        doc.set("query", "r_x_tn");
        doc.set("n", n);
        auto r = defect(g);
        doc.set("defect", r.defect);
        bool ok = basic_in_R_x_Tn(g, n);
        doc.set("basic", ok);
        if (!ok)
            doc.set("reason", !is_tree(g) ? "not a tree" : r.defect > n ? "defect exceeds n"
                                                                         : "defect equals n and no horrible vertex has a hanging edge");
        return ok ? Ok : Negative;
    }
    case GraphQuery::Defect: {
        doc.set("query", "defect");
        auto r = defect(g);
        doc.set("defect", r.defect);
        auto b = doc.block("special_vertices");
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const auto& c = r.vertices[v];
            if (c.horrible || c.awful)
                b.set("vertex_" + std::to_string(v),
                      std::string(c.horrible ? "horrible" : "awful") + ", degree " + std::to_string(c.degree) +
                          (c.hanging ? ", hanging edge" : ""));
        }
        return Ok;
    }
    case GraphQuery::ViaRn: {
        doc.set("query", "via_rn");
        doc.set("n_max", n);
        if (!is_tree(g)) {
            doc.set("verdict", "not_a_tree");
            return Negative;
        }
        auto v = basic_in_plane_via_Rn(g, n);
        if (auto c = std::get_if<ContainedIn>(&v)) {
            doc.set("verdict", "contained");
            doc.set("n", c->n);
            return Ok;
        }
        doc.set("verdict", std::holds_alternative<Inconclusive>(v) ? "inconclusive" : "not_contained");
        return Negative;
    }
    }
    return Ok;
}

struct SeqArgs {
    std::string family = "power";
    std::string rule = "harmonic";
    std::size_t terms = 1000;
    std::size_t k_max = 50;
    std::size_t n_trunc = 2000;
    std::size_t depth = 40;
    double tol = 1e-9;
    double constant = 1;
    SeriesOptions options;
};

inline CompletedArrayGen make_family(const std::string& family, const std::string& text)
{
    if (family == "geometric")
        return CompletedArrayGen::geometric();
    if (family == "power")
        return CompletedArrayGen::power();
    return CompletedArrayGen::custom(io::parse_string(text, [](std::istream& in) { return io::parse_ordered_points(in); }));
}

inline int cmd_seq_sums(const SeqArgs& a, const std::string& text, Document& doc)
{
    auto gen = make_family(a.family, text);
    ValueRule f = a.rule == "harmonic"    ? rules::alternating_harmonic()
                  : a.rule == "geometric" ? rules::geometric_decay()
                                          : rules::constant(a.constant);
    auto r = alternating_sums(gen, f, a.terms, a.options);
    doc.set("command", "seq sums");
    doc.set("family", bsets::to_string(gen.family()));
    doc.set("rule", a.rule);
    doc.set("terms", r.terms);
    doc.set("threshold", detail::num(r.options.threshold));
    doc.set("tolerance", detail::num(r.options.tolerance));
    doc.set("first_partial", detail::num(r.partial_sums.front()));
    doc.set("last_partial", detail::num(r.partial_sums.back()));
    doc.set("max_abs_partial", detail::num(r.max_abs_partial));
    doc.set("tail_oscillation", detail::num(r.tail_oscillation));
    doc.set("verdict", bsets::to_string(r.verdict));
    return r.verdict == SeriesVerdict::Diverges ? Negative : Ok;
}

inline int cmd_seq_tail(const SeqArgs& a, const std::string& text, Document& doc)
{
    auto gen = make_family(a.family, text);
    auto r = tail_ratio(gen, a.k_max, a.n_trunc);
    doc.set("command", "seq tail-ratio");
    doc.set("family", bsets::to_string(gen.family()));
    doc.set("k_max", a.k_max);
    doc.set("truncation", r.truncation);
    doc.set("remainder_bound", detail::num(r.remainder_bound));
    double mx = 0;
    for (const auto& [k, v] : r.ratios)
        mx = std::max(mx, v);
    doc.set("max_ratio", detail::num(mx));
    doc.set("appears_bounded", r.appears_bounded);
    doc.set("note", "boundedness is a heuristic on a truncated tail");
    auto b = doc.block("ratios");
    for (const auto& [k, v] : r.ratios)
        b.set("k_" + std::to_string(k), detail::num(v));
    return Ok;
}

inline int cmd_seq_geometric(const SeqArgs& a, Document& doc)
{
    PlaneRule f;
    if (a.rule == "sum")
        f = [](double x, double y) { return x + y; };
    else if (a.rule == "product")
        f = [](double x, double y) { return x * y; };
    else if (a.rule == "zero")
        f = [](double, double) { return 0.0; };
    else
        throw UsageError("unknown plane rule '" + a.rule + "' (sum, product, zero)");
    auto r = geometric_decompose(f, a.depth, a.tol);
    doc.set("command", "seq geometric-decompose");
    doc.set("rule", a.rule);
    doc.set("depth", r.depth);
    doc.set("tolerance", detail::num(r.tolerance));
    doc.set("residual", detail::num(r.residual));
    doc.set("remainder_estimate", detail::num(r.remainder_estimate));
    doc.set("ok", r.ok);
    if (!r.ok)
        doc.set("worst_point", detail::num(r.worst_point.first) + " " + detail::num(r.worst_point.second));
    auto q = doc.block("difference_quotients");
    for (std::size_t i = 0; i < r.g_quotient.size() && i < 6; ++i)
        q.set("g_k" + std::to_string(r.g_quotient[i].first), detail::num(r.g_quotient[i].second));
    for (std::size_t i = 0; i < r.h_quotient.size() && i < 6; ++i)
        q.set("h_k" + std::to_string(r.h_quotient[i].first), detail::num(r.h_quotient[i].second));
    if (!r.g_quotient.empty())
        q.set("g_last", detail::num(r.g_quotient.back().second));
    if (!r.h_quotient.empty())
        q.set("h_last", detail::num(r.h_quotient.back().second));
    return r.ok ? Ok : Negative;
}

inline Rat parse_literal(const std::string& s)
{
    try {
        return parse_rat(s);
    } catch (const RatParseError& e) {
        throw io::ParseError(1, e.offset() + 1, e.what());
    }
}

inline int cmd_seq_w(const std::string& x, Document& doc)
{
    Rat v = parse_literal(x);
    doc.set("command", "seq w");
    doc.set("x", to_string(v));
    Rat w = w_area(v);
    doc.set("area", to_string(w));
    doc.set("approx", detail::num(to_double(w)));
    return Ok;
}

inline int cmd_seq_cross(const std::string& d, std::size_t depth, Document& doc)
{
    auto r = cross_g_increment(parse_literal(d), depth);
    doc.set("command", "seq cross-g");
    doc.set("d", to_string(r.d));
    doc.set("depth", r.depth);
    doc.set("value", to_string(r.value));
    doc.set("approx", detail::num(to_double(r.value)));
    doc.set("bound", detail::num(r.bound));
    doc.set("tolerance", detail::num(r.tolerance));
    doc.set("holds", r.holds);
    return r.holds ? Ok : Negative;
}

// Generators print the raw file format, with a leading comment, so the
// output feeds straight back into the other commands.
inline int cmd_gen(const std::string& kind, unsigned n, std::size_t cap, std::ostream& out)
{
    if (kind == "alternating") {
        out << "# alternating instance, m = " << n << "\n";
        io::write_valued(out, make_alternating_instance(n));
    } else if (kind == "mij") {
        out << "# hard family, layers 1.." << n << "\n";
        io::write_valued(out, gen_hard_instance(n));
    } else if (kind == "F" || kind == "R") {
        out << "# tree " << kind << "_" << n << "\n";
        io::write_graph(out, kind == "F" ? gen_F(n, cap) : gen_R(n, cap));
    } else {
        throw UsageError("unknown family '" + kind + "' (alternating, mij, F, R)");
    }
    return Ok;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Decompositions f(x,y) = g(x) + h(y) on finite sets, the rook game, and basic embeddings of graphs",
                 "bsets"};
    app.fallthrough();
    app.require_subcommand(1);
    std::string format = "human";
    app.add_option("--format", format, "output style")->check(CLI::IsMember({"human", "structured"}));

    detail::Source src;

    auto* analyze = app.add_subcommand("analyze", "E-operator trace, depth, closed array and basic verdict");
    src.attach(analyze);

    auto* decompose = app.add_subcommand("decompose", "split a valued set as g(x) + h(y)");
    src.attach(decompose);
    bool m_exact = false, m_peel = false, m_min = false, m_approx = false, m_nd = false;
    auto* o1 = decompose->add_flag("--exact", m_exact, "spanning-forest decomposition or obstruction (default)");
    auto* o2 = decompose->add_flag("--peel", m_peel, "decomposition by E-peeling");
    auto* o3 = decompose->add_flag("--min-norm", m_min, "exact split minimising sup|g| + sup|h|");
    auto* o4 = decompose->add_flag("--approx", m_approx, "best uniform approximation by g(x) + h(y)");
    auto* o5 = decompose->add_flag("--nd", m_nd, "sum of coordinate functions in any dimension");
    for (auto* a : {o1, o2, o3, o4, o5})
        for (auto* b : {o1, o2, o3, o4, o5})
            if (a != b)
                a->excludes(b);

    auto* game = app.add_subcommand("game", "decide the decomposition game on marked cells");
    src.attach(game);
    bool algebraic = false;
    game->add_flag("--algebraic", algebraic, "decide a planar board by the marginal kernel");

    auto* graph = app.add_subcommand("graph", "basic embeddability of a finite graph");
    src.attach(graph);
    bool q_plane = false, q_defect = false;
    unsigned q_rxtn = 0, q_rn = 0;
    auto* g1 = graph->add_flag("--plane", q_plane, "embeddability in the plane (default)");
    auto* g2 = graph->add_option("--rxtn", q_rxtn, "embeddability in R x T_n")->check(CLI::PositiveNumber);
    auto* g3 = graph->add_flag("--defect", q_defect, "vertex classes and defect");
    auto* g4 = graph->add_option("--via-rn", q_rn, "containment in some R_n, n <= N")->check(CLI::Range(1u, 9u));
    for (auto* a : {g1, g2, g3, g4})
        for (auto* b : {g1, g2, g3, g4})
            if (a != b)
                a->excludes(b);

    auto* seq = app.add_subcommand("seq", "diagnostics for infinite arrays");
    seq->require_subcommand(1);
    SeqArgs sa;
    auto* sums = seq->add_subcommand("sums", "partial alternating sums along an array");
    sums->add_option("--family", sa.family)->check(CLI::IsMember({"geometric", "power", "custom"}));
    sums->add_option("--rule", sa.rule)->check(CLI::IsMember({"harmonic", "geometric", "constant"}));
    sums->add_option("--constant", sa.constant, "value for --rule constant");
    sums->add_option("--terms", sa.terms)->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
    sums->add_option("--threshold", sa.options.threshold);
    sums->add_option("--tolerance", sa.options.tolerance);
    src.attach(sums);
    auto* tail = seq->add_subcommand("tail-ratio", "tail sums of |a_n| over |a_k|");
    tail->add_option("--family", sa.family)->check(CLI::IsMember({"geometric", "power", "custom"}));
    tail->add_option("--k-max", sa.k_max);
    tail->add_option("--n", sa.n_trunc, "truncation index");
    src.attach(tail);
    auto* geo = seq->add_subcommand("geometric-decompose", "alternating-series split on the geometric array");
    geo->add_option("--rule", sa.rule, "sum, product or zero")->required();
    geo->add_option("--depth", sa.depth)->check(CLI::Range(std::size_t{1}, std::size_t{400}));
    geo->add_option("--tol", sa.tol);
    std::string w_x, cross_d;
    auto* w = seq->add_subcommand("w", "area under the spike function on [0, x]");
    w->add_option("x", w_x)->required();
    std::size_t cross_depth = 30;
    auto* cross = seq->add_subcommand("cross-g", "sum of W increments against (4d)^(3/4)/2");
    cross->add_option("d", cross_d)->required();
    cross->add_option("--depth", cross_depth);

    auto* gen = app.add_subcommand("gen", "print a fixture in its input format");
    std::string gen_kind;
    unsigned gen_n = 1;
    std::size_t gen_cap = default_size_cap;
    gen->add_option("family", gen_kind, "alternating, mij, F or R")->required();
    gen->add_option("n", gen_n, "size parameter")->required()->check(CLI::PositiveNumber);
    gen->add_option("--cap", gen_cap, "largest tree to build");

    std::vector<std::string> argv_s{"bsets"};
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_s)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return InputError;
    }

    Document doc;
    int status = Ok;
    try {
        if (analyze->parsed()) {
            status = cmd_analyze(src.read(in), doc);
        } else if (decompose->parsed()) {
            Method m = m_peel ? Method::Peel : m_min ? Method::MinNorm : m_approx ? Method::Approx : m_nd ? Method::Nd : Method::Exact;
            status = cmd_decompose(src.read(in), m, doc);
        } else if (game->parsed()) {
            status = cmd_game(src.read(in), algebraic, doc);
        } else if (graph->parsed()) {
            GraphQuery q = q_rxtn ? GraphQuery::RxTn : q_defect ? GraphQuery::Defect : q_rn ? GraphQuery::ViaRn : GraphQuery::Plane;
            status = cmd_graph(src.read(in), q, q_rxtn ? q_rxtn : q_rn, doc);
        } else if (sums->parsed()) {
            status = cmd_seq_sums(sa, sa.family == "custom" ? src.read(in) : std::string{}, doc);
        } else if (tail->parsed()) {
            status = cmd_seq_tail(sa, sa.family == "custom" ? src.read(in) : std::string{}, doc);
        } else if (geo->parsed()) {
            status = cmd_seq_geometric(sa, doc);
        } else if (w->parsed()) {
            status = cmd_seq_w(w_x, doc);
        } else if (cross->parsed()) {
            status = cmd_seq_cross(cross_d, cross_depth, doc);
        } else if (gen->parsed()) {
            return cmd_gen(gen_kind, gen_n, gen_cap, out);
        }
    } catch (const io::ParseError& e) {
        err << "bsets: input error: " << e.what() << '\n';
        return InputError;
    } catch (const UsageError& e) {
        err << "bsets: " << e.what() << '\n';
        return InputError;
    } catch (const std::invalid_argument& e) {
        // argument checks inside the library: duplicates, sizes, ranges
        err << "bsets: " << e.what() << '\n';
        return InputError;
    } catch (const std::domain_error& e) {
        err << "bsets: " << e.what() << '\n';
        return InputError;
    }

    if (format == "structured")
        doc.write_structured(out);
    else
        doc.write_human(out);
    return status;
}

} // namespace bsets::cli
