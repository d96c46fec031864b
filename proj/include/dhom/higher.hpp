#pragma once
// d-cluster-tilting subcategories, d-kernels and d-cokernels, wide subcategories
// of a d-homological pair and the (d+2)-angles of F-bar.

#include "dhom/derived.hpp"

#include <functional>

namespace dhom {

/// Algebra A with a d-cluster-tilting subcategory F of mod A.
struct HomologicalPair {
    AlgebraPtr alg;
    int d = 1;
    std::vector<Representation> modules;  // all indecomposables of mod A
    std::vector<std::string> module_names;
    AdditiveSubcategory F;

    /// Certifies F and gldim A <= d; throws InvalidArgument otherwise.
    static HomologicalPair make(const AlgebraPtr& a, int d, std::vector<Representation> modules,
                                std::vector<std::string> names, const std::vector<std::size_t>& f_indices);
    /// The subcategory of F spanned by the listed F generators.
    AdditiveSubcategory sub(const std::vector<std::size_t>& f_indices) const;
};

Certificate is_d_cluster_tilting(const std::vector<Representation>& modules, const AdditiveSubcategory& c, int d);
/// Index sets (into `modules`) of all d-cluster-tilting subcategories.
std::vector<std::vector<std::size_t>> find_d_cluster_tilting(const std::vector<Representation>& modules, int d);

struct DExactDiagram {
    enum class Role { Kernel, Cokernel, Exact };
    Role role = Role::Exact;
    std::vector<Representation> objects;  // objects[k] --maps[k]--> objects[k+1]
    std::vector<ModMorphism> maps;
};

/// d-kernel of f : A -> B: X^0 -> ... -> X^{d-1} -> A -> B.
DExactDiagram d_kernel(const ModMorphism& f, const AdditiveSubcategory& F, int d);
/// d-cokernel of f : A -> B: A -> B -> X^2 -> ... -> X^{d+1}.
DExactDiagram d_cokernel(const ModMorphism& f, const AdditiveSubcategory& F, int d);
/// Consecutive composites vanish and Hom(B,-) (kernels), Hom(-,B) (cokernels) or both (exact)
/// turn the diagram into exact sequences, for every B in `tests`.
Certificate check_d_exact(const DExactDiagram& x, const std::vector<Representation>& tests);

/// add{Sigma^{dk} w} inside the derived category.
DerivedSubcat overline(const AdditiveSubcategory& w, int d);
/// The degree-0 part of an overline subcategory.
AdditiveSubcategory base_of(const DerivedSubcat& w);

/// (d+2)-angle b -> X^1 -> ... -> X^d -> a --delta--> Sigma^d b built by a tower of d-1 triangles.
struct DAngle {
    std::vector<ProjComplex> middle;  // X^1 .. X^d
    Certificate in_fbar;
};
DAngle build_d_angle(const ChainMap& delta, const DerivedSubcat& fbar, int d);

struct WideReport {
    Certificate kernels;
    Certificate cokernels;
    Certificate extensions;
    bool pass() const { return kernels.pass && cokernels.pass && extensions.pass; }
};
WideReport is_wide_in_F(const HomologicalPair& pair, const std::vector<std::size_t>& w);

struct WideEnumeration {
    std::vector<std::vector<std::size_t>> wide;  // subsets of F generators, by size then lexicographic
    std::vector<std::string> anomalies;          // disagreements between the two decision procedures
};
/// Subsets of F passing is_wide_in_F and, if given, the round-trip oracle.
WideEnumeration enumerate_wide(const HomologicalPair& pair,
                               const std::function<bool(const std::vector<std::size_t>&)>& round_trip = {},
                               bool include_zero = false);

/// Nonempty subsets of {0..n-1} ordered by size, then lexicographically.
std::vector<std::vector<std::size_t>> ordered_subsets(std::size_t n, bool include_empty = false);

}  // namespace dhom
