#include "dhom/algebra.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

using namespace dhom;
using dhom::testing::linear_an;
using dhom::testing::vaso322;

TEST(QuiverAlgebra, Vaso322Dimension) {
    auto a = BoundQuiverAlgebra::build(vaso322());
    EXPECT_EQ(a.dim(), 5u);
    EXPECT_TRUE(a.is_monomial());
    EXPECT_TRUE(a.is_nakayama());
    // P_v = e_v A has dimension 1, 2, 2 at vertices 1, 2, 3
    EXPECT_EQ(a.paths_between(0, 0).size(), 1u);
    EXPECT_EQ(a.paths_between(1, 0).size(), 1u);
    EXPECT_EQ(a.paths_between(2, 1).size(), 1u);
    EXPECT_EQ(a.paths_between(2, 0).size(), 0u);
}

TEST(QuiverAlgebra, HereditaryA2) {
    auto a = BoundQuiverAlgebra::build(linear_an(2, 0, 1, "A2"));
    EXPECT_EQ(a.dim(), 3u);
}

TEST(QuiverAlgebra, ShortRelationRejected) {
    auto s = linear_an(2, 0, 1, "bad");
    s.relations.push_back({RelationTerm{1, Path{1, 0, {0}}}});
    try {
        BoundQuiverAlgebra::build(s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonAdmissible);
    }
}

TEST(QuiverAlgebra, LoopWithoutNilpotenceIsInfinite) {
    AlgebraSpec s;
    s.name = "loop";
    s.quiver.vertices = {"1"};
    s.quiver.arrows = {Arrow{"x", 0, 0}};
    try {
        BoundQuiverAlgebra::build(s, 50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InfiniteDimensional);
    }
    s.relations = {{RelationTerm{1, Path{0, 0, {0, 0, 0}}}}};
    EXPECT_EQ(BoundQuiverAlgebra::build(s).dim(), 3u);
}

TEST(QuiverAlgebra, CommutativeSquare) {
    // 1 -> 2 -> 4, 1 -> 3 -> 4 with ab - cd = 0: dimension 4 + 4 + 1 = 9
    AlgebraSpec s;
    s.name = "square";
    s.quiver.vertices = {"1", "2", "3", "4"};
    s.quiver.arrows = {Arrow{"a", 0, 1}, Arrow{"b", 1, 3}, Arrow{"c", 0, 2}, Arrow{"d", 2, 3}};
    s.relations = {{RelationTerm{1, Path{0, 3, {0, 1}}}, RelationTerm{-1, Path{0, 3, {2, 3}}}}};
    auto a = BoundQuiverAlgebra::build(s);
    EXPECT_EQ(a.dim(), 9u);
    EXPECT_FALSE(a.is_monomial());
    EXPECT_EQ(a.reduce(Path{0, 3, {0, 1}}), a.reduce(Path{0, 3, {2, 3}}));
    auto sa = StructureAlgebra::from_quiver_algebra(a);
    EXPECT_TRUE(sa.check_associative());
    EXPECT_TRUE(sa.check_unit());
    // radical = arrows and paths of positive length
    EXPECT_EQ(sa.radical_basis().cols(), 5u);
}

TEST(QuiverAlgebra, OppositeReversesArrows) {
    auto a = BoundQuiverAlgebra::build(vaso322());
    auto op = a.opposite();
    EXPECT_EQ(op.dim(), a.dim());
    EXPECT_EQ(op.paths_between(0, 1).size(), 1u);
    EXPECT_EQ(op.paths_between(0, 2).size(), 0u);
}

TEST(StructureAlgebraTest, ProductAndMorphism) {
    auto k = StructureAlgebra({"1"}, {Vec{Scalar(1)}}, Vec{Scalar(1)});
    auto kk = StructureAlgebra::product(k, k);
    EXPECT_EQ(kk.dim(), 2u);
    EXPECT_EQ(kk.radical_basis().cols(), 0u);
    AlgebraMorphism diag{k, kk, Mat(2, 1, {Scalar(1), Scalar(1)})};
    EXPECT_TRUE(check_morphism(diag));
    AlgebraMorphism bad{k, kk, Mat(2, 1, {Scalar(1), Scalar(0)})};
    EXPECT_FALSE(check_morphism(bad));
}
