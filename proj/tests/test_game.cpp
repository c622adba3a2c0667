#include "bsets/decomp.hpp"
#include "bsets/game.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bsets;

namespace {

PointSetN four_point() { return PointSetN(3, {ptn({0, 0, 0}), ptn({1, 1, 0}), ptn({0, 1, 1}), ptn({1, 0, 1})}); }

PointSetN cube()
{
    std::vector<PointN> pts;
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 2; ++y)
            for (long z = 0; z < 2; ++z)
                pts.push_back(ptn({x, y, z}));
    return PointSetN(3, pts);
}

PointSet2 grid_subset(unsigned mask)
{
    std::vector<Point2> pts;
    for (unsigned c = 0; c < 9; ++c)
        if (mask >> c & 1)
            pts.push_back(pt(c % 3, c / 3));
    return PointSet2(pts);
}

PointSetN random_set(std::mt19937_64& rng, std::size_t dim, std::size_t max_points, long coord_max)
{
    std::set<PointN> pts;
    std::size_t cells = 1;
    for (std::size_t t = 0; t < dim; ++t)
        cells *= static_cast<std::size_t>(coord_max + 1);
    std::size_t want = std::min(cells, static_cast<std::size_t>(rng() % (max_points + 1)));
    while (pts.size() < want) {
        PointN p;
        for (std::size_t t = 0; t < dim; ++t)
            p.coords.push_back(Rat(static_cast<long>(rng() % (coord_max + 1))));
        pts.insert(p);
    }
    return PointSetN(dim, {pts.begin(), pts.end()});
}

Rat value_at(const PointSetN& k, const std::vector<Rat>& f, const PointN& p) { return f[*k.index_of(p)]; }

} // namespace

TEST(Game2D, Examples)
{
    auto grid = winner_2d({pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)});
    EXPECT_EQ(grid.winner, Player::AN);
    ASSERT_TRUE(std::holds_alternative<RookRoute>(grid.certificate));
    EXPECT_EQ(std::get<RookRoute>(grid.certificate).route.size(), 5u); // 4 cells, closed
    EXPECT_STREQ(certificate_kind(grid.certificate), "rook_route");

    auto ell = winner_2d({pt(0, 0), pt(0, 1), pt(1, 0)});
    EXPECT_EQ(ell.winner, Player::VI);
    ASSERT_TRUE(std::holds_alternative<PeelingOrder>(ell.certificate));
    EXPECT_TRUE(std::get<PeelingOrder>(ell.certificate).layers.back().empty());

    EXPECT_EQ(winner_2d({}).winner, Player::VI);
}

TEST(Kernel, GridBasis)
{
    PointSetN k = lift({pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)});
    auto mk = marginal_kernel(k);
    ASSERT_EQ(mk.basis.size(), 1u);
    const auto& mu = mk.basis[0];
    EXPECT_EQ(mu[*k.index_of(ptn({0, 0}))], 1);
    EXPECT_EQ(mu[*k.index_of(ptn({1, 0}))], -1);
    EXPECT_EQ(mu[*k.index_of(ptn({0, 1}))], -1);
    EXPECT_EQ(mu[*k.index_of(ptn({1, 1}))], 1);
    EXPECT_TRUE(is_zero_marginal(k, mu));
}

TEST(Kernel, TrivialCases)
{
    EXPECT_TRUE(marginal_kernel(four_point()).trivial());
    EXPECT_TRUE(marginal_kernel(PointSetN(3, {ptn({4, 5, 6})})).trivial());
    EXPECT_TRUE(marginal_kernel(PointSetN(3)).trivial());
}

TEST(Kernel, CubeIsNotBasic)
{
    auto mk = marginal_kernel(cube());
    ASSERT_FALSE(mk.trivial());
    // 8 points, 6 coordinates with a 2-dimensional gauge: rank 4
    EXPECT_EQ(mk.basis.size(), 4u);
    for (const auto& mu : mk.basis)
        EXPECT_TRUE(is_zero_marginal(cube(), mu));
}

TEST(Kernel, ZeroMarginalChecker)
{
    PointSetN k = lift({pt(0, 0), pt(0, 1)});
    EXPECT_FALSE(is_zero_marginal(k, {0, 0}));  // zero vector is not a certificate
    EXPECT_FALSE(is_zero_marginal(k, {1, -1})); // column sums vanish, rows do not
    EXPECT_FALSE(is_zero_marginal(k, {1}));     // wrong length
}

TEST(GameND, Examples)
{
    auto c = winner_nd(cube());
    EXPECT_EQ(c.winner, Player::AN);
    ASSERT_TRUE(std::holds_alternative<KernelVector>(c.certificate));
    EXPECT_TRUE(is_zero_marginal(cube(), std::get<KernelVector>(c.certificate).mu));

    auto f = winner_nd(four_point());
    EXPECT_EQ(f.winner, Player::VI);
    EXPECT_TRUE(std::holds_alternative<DecompositionScheme>(f.certificate));
    EXPECT_STREQ(certificate_kind(f.certificate), "decomposition_scheme");
}

TEST(GameND, TwoDimensionalBoardsAgreeWithTheRookCriterion)
{
    for (unsigned mask = 0; mask < 512; ++mask) {
        PointSet2 k = grid_subset(mask);
        Player rook = winner_2d(k).winner;
        EXPECT_EQ(winner_nd(lift(k)).winner, rook) << mask;
        EXPECT_EQ(marginal_kernel(lift(k)).trivial(), rook == Player::VI) << mask;
        EXPECT_EQ(!find_closed_array(k), rook == Player::VI) << mask;
        EXPECT_EQ(is_finite(e_depth(k)), rook == Player::VI) << mask;
    }
}

TEST(DecomposeND, FourPointClosedForms)
{
    std::mt19937_64 rng(12);
    PointSetN k = four_point();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> f;
        for (int i = 0; i < 4; ++i)
            f.push_back(make_rat(static_cast<long>(rng() % 41) - 20, static_cast<long>(1 + rng() % 5)));
        auto res = decompose_nd(ValuedSetN(k, f));
        ASSERT_TRUE(std::holds_alternative<DecompositionN>(res));
        auto d = std::get<DecompositionN>(res);
        // re-anchor to h(0) = l(0) = 0
        Rat ch = d.g[1].at(0), cl = d.g[2].at(0);
        for (auto& [c, v] : d.g[1])
            v -= ch;
        for (auto& [c, v] : d.g[2])
            v -= cl;
        for (auto& [c, v] : d.g[0])
            v += ch + cl;
        Rat f000 = value_at(k, f, ptn({0, 0, 0})), f110 = value_at(k, f, ptn({1, 1, 0}));
        Rat f011 = value_at(k, f, ptn({0, 1, 1})), f101 = value_at(k, f, ptn({1, 0, 1}));
        EXPECT_EQ(d.g[0].at(0), f000);
        EXPECT_EQ(2 * d.g[0].at(1), f000 + f110 + f101 - f011);
        EXPECT_EQ(2 * d.g[1].at(1), -f000 + f110 - f101 + f011);
        EXPECT_EQ(2 * d.g[2].at(1), -f000 - f110 + f101 + f011);
    }
}

TEST(DecomposeND, CubeObstructionPairsWithItself)
{
    auto mu = marginal_kernel(cube()).basis.front();
    std::vector<Rat> f;
    Rat self;
    for (const auto& m : mu) {
        f.push_back(Rat(m));
        self += Rat(m * m);
    }
    auto res = decompose_nd(ValuedSetN(cube(), f));
    ASSERT_TRUE(std::holds_alternative<KernelObstruction>(res));
    const auto& ob = std::get<KernelObstruction>(res);
    EXPECT_NE(ob.pairing, 0);
    EXPECT_EQ(ob.pairing, self); // first basis vector separates first
}

TEST(DecomposeND, PlanarAgreesWithExactUpToGauge)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        PointSetN kn = random_set(rng, 2, 9, 3);
        std::vector<Point2> pts;
        for (const auto& p : kn)
            pts.push_back({p[0], p[1]});
        PointSet2 k(pts);
        std::vector<Rat> f;
        for (std::size_t i = 0; i < k.size(); ++i)
            f.push_back(static_cast<long>(rng() % 7) - 3);
        auto nd = decompose_nd(ValuedSetN(kn, f));
        auto ex = decompose_exact(ValuedSet2(k, f));
        ASSERT_EQ(std::holds_alternative<DecompositionN>(nd), std::holds_alternative<Decomposition2>(ex)) << trial;
        if (!std::holds_alternative<Decomposition2>(ex))
            continue;
        const auto& dn = std::get<DecompositionN>(nd);
        const auto& de = std::get<Decomposition2>(ex);
        // g differs by one constant per class
        for (const auto& cls : equivalence_classes(k)) {
            Rat shift = dn.g[0].at(cls[0].x) - de.g.at(cls[0].x);
            for (const auto& p : cls) {
                EXPECT_EQ(dn.g[0].at(p.x) - de.g.at(p.x), shift);
                EXPECT_EQ(dn.g[1].at(p.y) - de.h.at(p.y), -shift);
            }
        }
    }
}

TEST(EOperator3D, Examples)
{
    PointSetN hedgehog(3, {ptn({0, 0, 0}), ptn({1, 0, 0}), ptn({0, 1, 0}), ptn({0, 0, 1})});
    EXPECT_EQ(e_operator_3d(hedgehog), PointSetN(3, {ptn({0, 0, 0})}));
    EXPECT_EQ(std::get<Finite>(e_depth_3d(hedgehog)).steps, 2u);

    auto d = e_depth_3d(four_point());
    ASSERT_TRUE(std::holds_alternative<CyclicN>(d));
    EXPECT_EQ(std::get<CyclicN>(d).core, four_point());

    EXPECT_EQ(std::get<Finite>(e_depth_3d(PointSetN(3, {ptn({1, 2, 3})}))).steps, 1u);
    EXPECT_THROW(e_operator_3d(PointSetN(2)), std::invalid_argument);
    EXPECT_THROW(e_depth_3d(PointSetN(4)), std::invalid_argument);
}

TEST(EOperator3D, FiniteDepthImpliesBasicButNotConversely)
{
    std::mt19937_64 rng(14);
    int finite = 0;
    for (int trial = 0; trial < 500; ++trial) {
        PointSetN k = random_set(rng, 3, 10, 2);
        if (std::holds_alternative<Finite>(e_depth_3d(k))) {
            ++finite;
            EXPECT_TRUE(marginal_kernel(k).trivial()) << trial;
        }
    }
    EXPECT_GT(finite, 50);
    // the four-point set is basic although E never empties it
    EXPECT_TRUE(marginal_kernel(four_point()).trivial());
    EXPECT_FALSE(std::holds_alternative<Finite>(e_depth_3d(four_point())));
}

TEST(Certificates, SchemesReproduceDecomposableFunctions)
{
    std::mt19937_64 rng(15);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t dim = 2 + rng() % 3;
        PointSetN k = random_set(rng, dim, 8, 2);
        GameVerdict v = winner_nd(k);
        if (auto kv = std::get_if<KernelVector>(&v.certificate)) {
            EXPECT_EQ(v.winner, Player::AN);
            EXPECT_TRUE(is_zero_marginal(k, kv->mu));
            continue;
        }
        ASSERT_EQ(v.winner, Player::VI);
        const auto& s = std::get<DecompositionScheme>(v.certificate);
        // f = sum of random coordinate functions
        std::map<Coordinate, Rat> g0;
        std::vector<Rat> f;
        for (const auto& p : k) {
            Rat s0;
            for (std::size_t t = 0; t < dim; ++t)
                s0 += g0.try_emplace({t, p[t]}, Rat(static_cast<long>(rng() % 9) - 4)).first->second;
            f.push_back(s0);
        }
        std::map<Coordinate, Rat> g;
        for (std::size_t u = 0; u < s.unknowns.size(); ++u) {
            Rat val;
            for (std::size_t i = 0; i < k.size(); ++i)
                val += s.coefficients[u][i] * f[i];
            g[s.unknowns[u]] = val;
        }
        for (std::size_t i = 0; i < k.size(); ++i) {
            Rat sum;
            for (std::size_t t = 0; t < dim; ++t)
                sum += g.at({t, k[i][t]});
            EXPECT_EQ(sum, f[i]) << trial;
        }
        ++checked;
    }
    EXPECT_GT(checked, 50);
}

TEST(Certificates, ObstructionAlwaysSeparates)
{
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t dim = 2 + rng() % 2;
        PointSetN k = random_set(rng, dim, 9, 1 + rng() % 2);
        std::vector<Rat> f;
        for (std::size_t i = 0; i < k.size(); ++i)
            f.push_back(static_cast<long>(rng() % 5) - 2);
        auto res = decompose_nd(ValuedSetN(k, f));
        if (auto ob = std::get_if<KernelObstruction>(&res)) {
            EXPECT_TRUE(is_zero_marginal(k, ob->mu));
            Rat pairing;
            for (std::size_t i = 0; i < k.size(); ++i)
                pairing += Rat(ob->mu[i]) * f[i];
            EXPECT_EQ(pairing, ob->pairing);
            EXPECT_NE(pairing, 0);
        } else {
            const auto& d = std::get<DecompositionN>(res);
            for (std::size_t i = 0; i < k.size(); ++i)
                EXPECT_EQ(d.eval(k[i]), f[i]);
        }
    }
}

TEST(PointSetN, Validation)
{
    EXPECT_THROW(PointSetN(1), std::invalid_argument);
    EXPECT_THROW(PointSetN(3, {ptn({1, 2})}), std::invalid_argument);
    EXPECT_THROW(PointSetN(2, {ptn({1, 2}), ptn({1, 2})}), std::invalid_argument);
    EXPECT_THROW(ValuedSetN(PointSetN(2, {ptn({1, 2})}), {}), std::invalid_argument);
}
