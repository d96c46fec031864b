#include "dhom/univloc.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace dhom;
using namespace dhom::testing;

namespace {

using Names = std::set<std::string>;

struct VasoU : ::testing::Test {
    static inline AlgebraPtr a;
    static inline std::vector<Representation> mods;
    static inline std::unique_ptr<HomologicalPair> pair;
    static inline DerivedSubcat cand;
    static inline std::vector<EpiOfPairs> epis;

    static void SetUpTestSuite() {
        a = make_algebra(vaso322());
        mods = vaso_modules(a);
        pair = std::make_unique<HomologicalPair>(HomologicalPair::make(a, 2, mods, vaso_names(), {0, 1, 2, 3}));
        cand = candidate_universe(*pair);
        for (auto& n : cand.names)
            if (n.rfind("C[", 0) == 0) n = "x";
        const std::vector<std::vector<std::size_t>> table = {{0}, {1}, {2}, {3}, {0, 2}, {1, 3}, {0, 1, 2, 3}};
        for (const auto& w : table) epis.push_back(construct_homoepi(*pair, pair->sub(w)));
    }
    static void TearDownTestSuite() {
        epis.clear();
        pair.reset();
    }

    static Names names(const std::vector<std::size_t>& idx) {
        Names out;
        for (auto i : idx) out.insert(cand.names[i]);
        return out;
    }
};

}  // namespace

TEST_F(VasoU, CandidateUniverseHasTheSixOrbits) {
    EXPECT_EQ(Names(cand.names.begin(), cand.names.end()), (Names{"f1", "f2", "f3", "f4", "s2", "x"}));
    for (std::size_t i = 0; i < cand.gens.size(); ++i) {
        if (cand.names[i] != "x") continue;
        auto h = homology_dims(cand.gens[i].to_modules());
        ASSERT_EQ(h.size(), 2u);
        EXPECT_EQ(std::next(h.begin())->first, h.begin()->first + 1);
    }
}

TEST_F(VasoU, PerpAndUPerRow) {
    const std::vector<std::pair<Names, Names>> want = {
        {{"f1"}, {"f2", "f3", "x"}},
        {{"f2"}, {"f3", "f4", "s2"}},
        {{"f3"}, {"f1", "f4", "x"}},
        {{"f4"}, {"f1", "f2", "s2"}},
        {{"f1", "f3"}, {"x"}},
        {{"f2", "f4"}, {"s2"}},
        {{"f1", "f2", "f3", "f4", "s2", "x"}, {}},
    };
    for (std::size_t j = 0; j < want.size(); ++j) {
        UnivLocData u = u_from_phi(epis[j].phi, cand);
        EXPECT_EQ(names(u.uperp), want[j].first) << "row " << j + 1;
        EXPECT_EQ(names(u.u), want[j].second) << "row " << j + 1;
        for (const auto& g : u.U.gens) EXPECT_TRUE(derived_tensor(g, epis[j].phi).acyclic());
    }
}

TEST_F(VasoU, DefiningPropertiesPerRow) {
    for (std::size_t j = 0; j < epis.size(); ++j) {
        UnivLocData u = u_from_phi(epis[j].phi, cand);
        EXPECT_TRUE(check_property_1(u)) << j + 1 << ": " << check_property_1(u).witness;
        EXPECT_TRUE(check_property_2(u, *pair)) << j + 1 << ": " << check_property_2(u, *pair).witness;
        EXPECT_TRUE(intersection_lemma_check(u, *pair, epis[j])) << j + 1;
        EXPECT_TRUE(check_u_wide(u)) << j + 1 << ": " << check_u_wide(u).witness;
        EXPECT_TRUE(check_stable_t_structure(u)) << j + 1 << ": " << check_stable_t_structure(u).witness;
    }
}

TEST_F(VasoU, PropertyTwoDetectsABadPerp) {
    // add{Sigma^Z s2} is not an image of any phi: the F-bar cover of s2 is f2 -> s2 and f2 is not in it.
    UnivLocData u = u_from_phi(epis[5].phi, cand);
    std::vector<std::size_t> s2;
    for (std::size_t i = 0; i < cand.gens.size(); ++i)
        if (cand.names[i] == "s2") s2.push_back(i);
    u.Uperp = DerivedSubcat{{cand.gens[s2[0]]}, {"s2"}, 1};
    EXPECT_FALSE(check_property_2(u, *pair));
}

TEST_F(VasoU, InitialityProxy) {
    UnivLocData u1 = u_from_phi(epis[0].phi, cand);
    auto rep = initiality_proxy(u1, {{"phi_1", epis[0].phi}, {"phi_5", epis[4].phi}, {"phi_1~", twisted(epis[0].phi)}});
    ASSERT_EQ(rep.results.size(), 3u);
    EXPECT_TRUE(rep.cert);
    EXPECT_TRUE(rep.results[0].qualifies);
    EXPECT_TRUE(rep.results[0].unique);
    EXPECT_EQ(rep.results[0].gamma, Mat::identity(1));
    EXPECT_FALSE(rep.results[1].qualifies);
    EXPECT_TRUE(rep.results[2].factors);

    // A non-trivial twist of Gamma_2 factors through a non-identity automorphism.
    UnivLocData u2 = u_from_phi(epis[1].phi, cand);
    AlgebraMorphism tw = twisted(epis[1].phi);
    EXPECT_NE(tw.matrix, epis[1].phi.matrix);
    auto r2 = initiality_proxy(u2, {{"phi_2~", tw}});
    EXPECT_TRUE(r2.cert) << r2.cert.witness;
    EXPECT_NE(r2.results[0].gamma, Mat::identity(4));

    // The identity row qualifies against everything and factors through each phi.
    UnivLocData u7 = u_from_phi(epis[6].phi, cand);
    std::vector<std::pair<std::string, AlgebraMorphism>> all;
    for (std::size_t j = 0; j < epis.size(); ++j) all.emplace_back("phi_" + std::to_string(j + 1), epis[j].phi);
    auto r7 = initiality_proxy(u7, all);
    EXPECT_TRUE(r7.cert) << r7.cert.witness;
    for (const auto& r : r7.results) EXPECT_TRUE(r.qualifies && r.factors && r.unique) << r.target;
}

TEST_F(VasoU, BijectionReportPasses) {
    BijectionReport rep = theorem_b_report(*pair, cand);
    for (const auto& an : rep.anomalies) ADD_FAILURE() << an;
    EXPECT_EQ(rep.count_a, 7u);
    EXPECT_EQ(rep.count_b, 7u);
    EXPECT_EQ(rep.count_c, 7u);
    EXPECT_EQ(rep.count_d, 7u);
    EXPECT_EQ(rep.admissible_u.size(), 7u);
    EXPECT_TRUE(rep.injective);
    EXPECT_TRUE(rep.surjective);
    for (const auto& r : rep.rows) EXPECT_TRUE(r.round_trip);
    EXPECT_TRUE(rep.pass());
}

TEST(UnivLoc, A2BaseCase) {
    auto a = make_algebra(linear_an(2, 0, 1, "A2"));
    auto mods = indecomposables(a);
    auto pair = HomologicalPair::make(a, 1, mods, {}, {0, 1, 2});
    DerivedSubcat cand = candidate_universe(pair);
    BijectionReport rep = theorem_b_report(pair, cand);
    for (const auto& an : rep.anomalies) ADD_FAILURE() << an;
    EXPECT_EQ(rep.rows.size(), 4u);
    EXPECT_TRUE(rep.pass());
    for (const auto& r : rep.rows)
        for (const auto& g : r.loc.U.gens) EXPECT_EQ(homology_dims(g.to_modules()).size(), 1u);
}

TEST(UnivLoc, SemisimpleSetsAreSubsetsOfSimples) {
    auto a = make_algebra(semisimple2());
    auto mods = indecomposables(a);
    auto pair = HomologicalPair::make(a, 3, mods, {}, {0, 1});
    BijectionReport rep = theorem_b_report(pair, candidate_universe(pair));
    EXPECT_EQ(rep.rows.size(), 3u);
    EXPECT_TRUE(rep.pass());
    BijectionReport with_zero = theorem_b_report(pair, candidate_universe(pair), true);
    EXPECT_EQ(with_zero.rows.size(), 4u);
    EXPECT_TRUE(with_zero.pass());
}
