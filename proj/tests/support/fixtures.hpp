#pragma once
// Small algebras shared by the test binaries.

#include "dhom/modcat.hpp"

namespace dhom::testing {

/// Linear quiver n -> n-1 -> ... -> 1 with vertices "1".."n".
inline AlgebraSpec linear_an(int n, int rad_power, int d, const std::string& name) {
    AlgebraSpec s;
    s.name = name;
    s.d = d;
    for (int i = 1; i <= n; ++i) s.quiver.vertices.push_back(std::to_string(i));
    // arrow a_i : i+1 -> i, stored at index i-1
    for (int i = 1; i < n; ++i) s.quiver.arrows.push_back(Arrow{"a" + std::to_string(i), i, i - 1});
    if (rad_power > 0) {
        for (int top = n; top - rad_power >= 1; --top) {
            Path p{top - 1, top - 1 - rad_power, {}};
            for (int k = 0; k < rad_power; ++k) p.arrows.push_back(top - 2 - k);
            s.relations.push_back({RelationTerm{1, p}});
        }
    }
    return s;
}

/// kA_3/rad^2 with arrows a: 3 -> 2, b: 2 -> 1 and relation ab = 0; d = 2.
inline AlgebraSpec vaso322() {
    AlgebraSpec s;
    s.name = "vaso-3-2-2";
    s.d = 2;
    s.quiver.vertices = {"1", "2", "3"};
    s.quiver.arrows = {Arrow{"a", 2, 1}, Arrow{"b", 1, 0}};
    s.relations = {{RelationTerm{1, Path{2, 0, {0, 1}}}}};
    return s;
}

/// The five indecomposables of the fixture in the order f1, f2, f3, f4, s2.
inline std::vector<Representation> vaso_modules(const AlgebraPtr& a) {
    return {projective(a, 0), projective(a, 1), projective(a, 2), injective(a, 2), simple(a, 1)};
}
inline std::vector<std::string> vaso_names() { return {"f1", "f2", "f3", "f4", "s2"}; }

/// Two vertices, no arrows.
inline AlgebraSpec semisimple2() {
    AlgebraSpec s;
    s.name = "kxk";
    s.quiver.vertices = {"1", "2"};
    return s;
}

}  // namespace dhom::testing
