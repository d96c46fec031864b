#include "dhom/homoepi.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

using namespace dhom;
using namespace dhom::testing;

namespace {

struct VasoE : ::testing::Test {
    AlgebraPtr a = make_algebra(vaso322());
    std::vector<Representation> mods = vaso_modules(a);
    HomologicalPair pair = HomologicalPair::make(a, 2, mods, vaso_names(), {0, 1, 2, 3});
    const Representation &f1 = mods[0], &f2 = mods[1], &f3 = mods[2], &f4 = mods[3], &s2 = mods[4];

    // W1..W7 in table order.
    std::vector<std::vector<std::size_t>> table = {{0}, {1}, {2}, {3}, {0, 2}, {1, 3}, {0, 1, 2, 3}};

    EpiOfPairs epi(const std::vector<std::size_t>& w) const { return construct_homoepi(pair, pair.sub(w)); }
};

}  // namespace

TEST_F(VasoE, GammaDimensionsAndCertificates) {
    const std::vector<std::size_t> dims = {1, 4, 4, 1, 5, 5, 5};
    for (std::size_t j = 0; j < table.size(); ++j) {
        EpiOfPairs e = epi(table[j]);
        EXPECT_EQ(e.phi.target.dim(), dims[j]) << "W" << j + 1;
        EXPECT_TRUE(e.is_pair_epi) << "W" << j + 1;
        EXPECT_TRUE(certify_homoepi_of_pairs(e)) << "W" << j + 1 << ": " << certify_homoepi_of_pairs(e).witness;
        EXPECT_TRUE(same_subcategory(e.pushdown, pair.sub(table[j]))) << "W" << j + 1;
        // G = add(Gamma) except for the identity, where G = F.
        EXPECT_EQ(e.g_is_add_gamma, j + 1 < table.size()) << "W" << j + 1;
        EXPECT_TRUE(e.pseudoflat_agrees);
        // phi(1) = id_s
        EXPECT_EQ(e.phi.apply(a->unit()), e.phi.target.unit());
    }
}

TEST_F(VasoE, ReflectionObjects) {
    EXPECT_TRUE(is_isomorphic(reflection(a, pair.sub({0})).s, f1));
    EXPECT_TRUE(is_isomorphic(reflection(a, pair.sub({1})).s, direct_sum({f2, f2}, a)));
    EXPECT_TRUE(is_isomorphic(reflection(a, pair.sub({1, 3})).s, direct_sum({f2, f2, f4}, a)));
    EXPECT_TRUE(is_isomorphic(reflection(a, pair.F).s, direct_sum({f1, f2, f3}, a)));
    for (const auto& m : reflection(a, pair.sub({2})).envelopes) EXPECT_TRUE(m.check());
}

TEST_F(VasoE, GammaRestrictsToTheReflection) {
    EXPECT_TRUE(is_isomorphic(restricted_gamma(a, epi({0}).phi), f1));
    EXPECT_TRUE(is_isomorphic(restricted_gamma(a, epi({1}).phi), direct_sum({f2, f2}, a)));
    EXPECT_TRUE(is_isomorphic(restricted_gamma(a, epi({0, 2}).phi), direct_sum({f1, f3, f3}, a)));
}

TEST_F(VasoE, TorVanishesAlongEveryPhi) {
    for (const auto& w : table) {
        EpiOfPairs e = epi(w);
        EXPECT_EQ(e.tor, (std::vector<std::size_t>{0, 0}));
        // Tor_0 = Gamma (x)_A Gamma = Gamma.
        EXPECT_EQ(tor_dim(a, e.phi, 0), e.phi.target.dim());
    }
}

TEST_F(VasoE, DerivedTensorAlongPhi1) {
    AlgebraMorphism phi = epi({0}).phi;
    EXPECT_TRUE(derived_tensor(stalk_complex(f2), phi).acyclic());
    EXPECT_TRUE(derived_tensor(stalk_complex(f3), phi).acyclic());
    EXPECT_EQ(derived_tensor(stalk_complex(f1), phi).homology_dims(), (std::map<int, std::size_t>{{0, 1}}));
    UnitTriangle t = unit_triangle(stalk_complex(f1), phi);
    EXPECT_TRUE(t.y.is_zero());
    UnitTriangle u = unit_triangle(stalk_complex(f2), phi);
    EXPECT_TRUE(u.r.is_zero());
    EXPECT_TRUE(is_isomorphic(u.y, stalk_complex(f2)));
    EXPECT_TRUE(u.y_tensor_acyclic);
}

TEST_F(VasoE, UnitIsoDetectsTheImage) {
    AlgebraMorphism phi1 = epi({0}).phi;
    EXPECT_TRUE(unit_is_iso(f1, phi1));
    EXPECT_FALSE(unit_is_iso(f2, phi1));
    EXPECT_FALSE(unit_is_iso(s2, phi1));
    AlgebraMorphism phi7 = epi({0, 1, 2, 3}).phi;
    for (const auto& m : mods) EXPECT_TRUE(unit_is_iso(m, phi7)) << m.signature();
    // Oracle: dim (m (x)_A Gamma) equals Tor_0 of the derived tensor.
    for (const auto& w : table) {
        AlgebraMorphism phi = epi(w).phi;
        for (const auto& m : mods) {
            auto h = derived_tensor(stalk_complex(m), phi).homology_dims();
            std::size_t h0 = h.count(0) ? h.at(0) : 0;
            EXPECT_EQ(balanced_tensor(m, phi).dim, h0) << m.signature();
        }
    }
}

TEST_F(VasoE, CoinducedModulesAreFullyFaithful) {
    EpiOfPairs e = epi({1, 3});
    ASSERT_EQ(e.G.size(), 2u);
    EXPECT_TRUE(is_isomorphic(restrict(e.G[0], a, e.phi), f2));
    EXPECT_TRUE(is_isomorphic(restrict(e.G[1], a, e.phi), f4));
    EXPECT_EQ(gamma_hom_dim(e.G[0], e.G[1]), hom_dim(f2, f4));
    EXPECT_EQ(gamma_hom_dim(e.G[1], e.G[0]), hom_dim(f4, f2));
    EXPECT_TRUE(e.fully_faithful);
    // Gamma_Gamma is free of rank one: End_Gamma(Gamma) = Gamma.
    GammaModule reg = regular_module(e.phi.target);
    EXPECT_EQ(gamma_hom_dim(reg, reg), e.phi.target.dim());
}

TEST(HomoEpi, DiagonalIsNotARingEpi) {
    StructureAlgebra k({"1"}, {Vec{1}}, Vec{1});
    AlgebraMorphism diag;
    diag.source = k;
    diag.target = StructureAlgebra::product(k, k);
    diag.matrix = Mat(2, 1, {1, 1});
    EXPECT_TRUE(check_morphism(diag));
    EXPECT_FALSE(is_ring_epi(diag));
    std::vector<Mat> acts{diag.target.right_mult(diag.target.unit())};
    EXPECT_EQ(balanced_tensor(acts, 2, diag).dim, 4u);
    EXPECT_TRUE(is_ring_epi(AlgebraMorphism::identity(k)));
}

TEST_F(VasoE, QuotientByBIsNotHomological) {
    std::size_t b = a->dim();
    for (std::size_t k = 0; k < a->dim(); ++k)
        if (a->basis()[k] == Path{1, 0, {1}}) b = k;
    ASSERT_LT(b, a->dim());
    AlgebraMorphism q = quotient_by_ideal(a, {b});
    EXPECT_TRUE(check_morphism(q));
    EXPECT_EQ(q.target.dim(), a->dim() - 1);
    EXPECT_TRUE(is_ring_epi(q));
    EXPECT_GT(tor_dim(a, q, 1), 0u);
    // The two-sided ideal generated by e_2 also contains both arrows.
    std::size_t e2 = a->trivial_index(1);
    EXPECT_THROW(quotient_by_ideal(a, {e2}), Error);
}

TEST_F(VasoE, NonWideSubcategoriesFailTheRoundTrip) {
    EXPECT_FALSE(round_trip(pair, {0, 1}));
    EpiOfPairs e = epi({0, 1});
    // Gamma = A / A e_3 A is a homological epi, but add{f1, f2} is not cluster tilting in mod Gamma.
    EXPECT_TRUE(e.is_homological);
    EXPECT_FALSE(e.g_cluster_tilting);
    EXPECT_FALSE(certify_homoepi_of_pairs(e));
}

TEST_F(VasoE, RoundTripAgreesWithDefinition) {
    auto rt = [&](const std::vector<std::size_t>& w) { return round_trip(pair, w); };
    WideEnumeration en = enumerate_wide(pair, rt);
    EXPECT_TRUE(en.anomalies.empty()) << en.anomalies.front();
    EXPECT_EQ(en.wide, table);
    WideEnumeration with_zero = enumerate_wide(pair, rt, true);
    EXPECT_TRUE(with_zero.anomalies.empty());
    EXPECT_EQ(with_zero.wide.size(), 8u);
}

TEST(HomoEpi, A2RoundTrip) {
    auto a = make_algebra(linear_an(2, 0, 1, "A2"));
    auto mods = indecomposables(a);
    auto pair = HomologicalPair::make(a, 1, mods, {}, {0, 1, 2});
    auto en = enumerate_wide(pair, [&](const std::vector<std::size_t>& w) { return round_trip(pair, w); });
    EXPECT_TRUE(en.anomalies.empty());
    EXPECT_EQ(en.wide.size(), 4u);
}
