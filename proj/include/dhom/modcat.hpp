#pragma once
// Finite-dimensional right modules over a bound quiver algebra, given as
// quiver representations, and the basic homological algebra of mod A.

#include "dhom/algebra.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dhom {

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

AlgebraPtr make_algebra(const AlgebraSpec& spec, std::size_t dim_cap = 4096);
/// Cached opposite algebra (arrow indices are preserved).
AlgebraPtr opposite_of(const AlgebraPtr& a);

class Representation {
public:
    AlgebraPtr alg;
    std::vector<std::size_t> dims;  // per vertex
    std::vector<Mat> maps;          // per arrow a: v -> w, a dims[w] x dims[v] matrix

    Representation() = default;
    Representation(AlgebraPtr a, std::vector<std::size_t> d, std::vector<Mat> m);
    static Representation zero(const AlgebraPtr& a);

    std::size_t dim() const;
    std::size_t offset(int v) const;
    bool is_zero() const { return dim() == 0; }

    /// Right action of a path, as a dims[end] x dims[start] matrix.
    Mat path_matrix(const Path& p) const;
    /// Right action of algebra basis element i, same shape convention.
    Mat basis_action(std::size_t i) const;
    /// Right action of an arbitrary algebra element on the total space.
    Mat act(const Vec& x) const;

    Certificate check_relations() const;
    /// Dimension-vector signature, e.g. "M[1,1,0]".
    std::string signature() const;
};

struct ModMorphism {
    Representation src;
    Representation tgt;
    std::vector<Mat> comps;  // per vertex, tgt.dims[v] x src.dims[v]

    static ModMorphism zero(const Representation& s, const Representation& t);
    static ModMorphism identity(const Representation& m);

    bool is_zero() const;
    /// Block-diagonal matrix on total spaces.
    Mat total() const;
    /// All entries flattened, vertex by vertex.
    Vec flatten() const;
    static ModMorphism unflatten(const Representation& s, const Representation& t, const Vec& v);

    ModMorphism operator+(const ModMorphism& o) const;
    ModMorphism scaled(const Scalar& c) const;
    Certificate check() const;
};

/// g o f
ModMorphism compose(const ModMorphism& g, const ModMorphism& f);
bool is_iso(const ModMorphism& f);

Representation simple(const AlgebraPtr& a, int v);
Representation projective(const AlgebraPtr& a, int v);
Representation injective(const AlgebraPtr& a, int v);
Representation direct_sum(const std::vector<Representation>& ms, const AlgebraPtr& a);
/// Morphism between direct sums given as a grid: grid[i][j] : srcs[j] -> tgts[i].
ModMorphism block_morphism(const std::vector<Representation>& srcs, const std::vector<Representation>& tgts,
                           const std::vector<std::vector<ModMorphism>>& grid);
/// Canonical inclusions into / projections out of a direct sum.
ModMorphism sum_inclusion(const std::vector<Representation>& ms, std::size_t i);
ModMorphism sum_projection(const std::vector<Representation>& ms, std::size_t i);

/// Submodule spanned per vertex by the columns of bases[v] (must be closed under the arrows).
ModMorphism submodule_inclusion(const Representation& m, const std::vector<Mat>& bases);
/// Quotient by the submodule spanned per vertex by the columns of bases[v].
ModMorphism quotient_projection(const Representation& m, const std::vector<Mat>& bases);
/// Smallest submodule containing the given total-space vectors.
std::vector<Mat> generated_submodule(const Representation& m, const std::vector<Vec>& gens);

ModMorphism kernel(const ModMorphism& f);
ModMorphism cokernel(const ModMorphism& f);
/// Image factorization: returns the inclusion im f -> tgt.
ModMorphism image(const ModMorphism& f);

std::vector<ModMorphism> hom_basis(const Representation& m, const Representation& n);
std::size_t hom_dim(const Representation& m, const Representation& n);

/// Matrix whose entry (i, j) is an element of e_{tgt_i} A e_{src_j}, i.e. a morphism
/// sum_j P_{src_j} -> sum_i P_{tgt_i} acting by left multiplication.
struct ProjMap {
    std::vector<int> src;
    std::vector<int> tgt;
    std::vector<std::vector<Vec>> entries;  // [tgt index][src index]

    static ProjMap zero(const AlgebraPtr& a, std::vector<int> s, std::vector<int> t);
    bool is_zero() const;
};
ProjMap compose(const BoundQuiverAlgebra& a, const ProjMap& g, const ProjMap& f);
Representation projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices);
ModMorphism to_morphism(const AlgebraPtr& a, const ProjMap& f);
/// The morphism P_v -> m sending e_v to the element x of m e_v (x given on the total space).
ModMorphism from_projective(const Representation& m, int v, const Vec& x);
/// Inverse of to_morphism when source and target are sums of indecomposable projectives.
ProjMap to_projmap(const AlgebraPtr& a, const std::vector<int>& src, const std::vector<int>& tgt,
                   const ModMorphism& f);

struct ProjectiveCover {
    std::vector<int> vertices;  // tops, one entry per summand P_v
    ModMorphism map;            // projective_sum(vertices) -> m
};
ProjectiveCover projective_cover(const Representation& m);

/// Minimal projective resolution ... -> P_1 -> P_0 -> m.
struct ProjResolution {
    std::vector<std::vector<int>> terms;  // terms[i] = summands of P_i
    std::vector<ProjMap> diffs;           // diffs[i-1] : P_i -> P_{i-1}, i >= 1
    ModMorphism augmentation;             // P_0 -> m
    std::size_t length() const;
};
ProjResolution proj_resolution(const Representation& m, std::size_t cap = 64);

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i);
std::size_t projective_dimension(const Representation& m, std::size_t cap = 64);
std::size_t global_dimension(const AlgebraPtr& a, std::size_t cap = 64);

/// D = Hom_k(-, k): a module over `a` becomes a module over `target` (the opposite of a).
Representation dual(const Representation& m, const AlgebraPtr& target);
ModMorphism dual(const ModMorphism& f, const AlgebraPtr& target);

/// Auslander-Reiten translate via the Nakayama functor; zero on projectives.
Representation ar_translate(const Representation& m);
Representation ar_translate_inverse(const Representation& m);

struct EndoAlgebra {
    StructureAlgebra algebra;         // product a*b = a o b
    std::vector<ModMorphism> basis;   // basis of End(m), matching algebra.labels()
};
EndoAlgebra endo_structure_algebra(const Representation& m);
/// Coordinates of f in a list of morphisms (which must be independent and span f).
Vec coordinates(const std::vector<ModMorphism>& basis, const ModMorphism& f);
/// Basis of rad End(m), as morphisms (trace-form criterion, characteristic 0).
std::vector<ModMorphism> end_radical(const Representation& m);
bool is_local(const Representation& m);

/// Number of copies of the indecomposable x in m (rank of the composition pairing modulo rad End x).
std::size_t multiplicity(const Representation& x, const Representation& m);
bool is_isomorphic(const Representation& m, const Representation& n);

struct Decomposition {
    std::vector<std::pair<Representation, std::size_t>> parts;
    std::vector<ModMorphism> inclusions;  // one per summand copy; their sum is an isomorphism onto m
};
Decomposition decompose(const Representation& m);

std::vector<Representation> indecomposables(const AlgebraPtr& a, std::size_t dim_cap = 0);
/// The enumeration cap: DHOM_DIM_CAP if set, else 64.
std::size_t default_dim_cap();

/// add of finitely many pairwise non-isomorphic indecomposables.
struct AdditiveSubcategory {
    std::vector<Representation> gens;
    std::vector<std::string> names;

    bool contains(const Representation& x) const;  // x indecomposable
    /// Is every indecomposable summand of m isomorphic to a generator?
    bool contains_object(const Representation& m) const;
};

/// Minimal right add(c)-approximation src -> m, with the generator index of each source summand.
struct Approximation {
    ModMorphism map;
    std::vector<std::size_t> summands;  // indices into c.gens
};
Approximation right_approx(const Representation& m, const AdditiveSubcategory& c);
Approximation left_approx(const Representation& m, const AdditiveSubcategory& c);

Certificate is_precover(const ModMorphism& xi, const AdditiveSubcategory& c);
Certificate is_preenvelope(const ModMorphism& xi, const AdditiveSubcategory& c);
Certificate is_right_minimal(const ModMorphism& xi);
Certificate is_left_minimal(const ModMorphism& xi);
Certificate is_cover(const ModMorphism& xi, const AdditiveSubcategory& c);
Certificate is_envelope(const ModMorphism& xi, const AdditiveSubcategory& c);
/// Covers (envelopes) whose factorizations are unique.
Certificate is_strong_cover(const ModMorphism& xi, const AdditiveSubcategory& c);
Certificate is_strong_envelope(const ModMorphism& xi, const AdditiveSubcategory& c);

}  // namespace dhom
