#pragma once
// Bounded complexes, the homotopy category of projectives (= D^b(mod A) for
// finite global dimension), cones, derived tensor along an algebra map,
// restriction of scalars and derived indecomposables.
//
// Cohomological indexing: d^i : X^i -> X^{i+1}. (Sigma X)^i = X^{i+1}, d negated.

#include "dhom/modcat.hpp"

#include <map>
#include <optional>

namespace dhom {

// --- complexes of modules --------------------------------------------------

struct ModComplex {
    AlgebraPtr alg;
    int lo = 0;
    std::vector<Representation> terms;  // degree lo + k
    std::vector<ModMorphism> diffs;     // diffs[k] : terms[k] -> terms[k+1]

    static ModComplex stalk(const Representation& m, int degree);
    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    Representation term(int deg) const;
    ModMorphism diff(int deg) const;  // deg -> deg+1, zero outside the support
    Certificate check() const;
};

struct ModChainMap {
    ModComplex src;
    ModComplex tgt;
    std::map<int, ModMorphism> comps;
    ModMorphism at(int deg) const;
};

ModComplex shift(const ModComplex& x, int n);
ModComplex cone(const ModChainMap& f);
/// H^deg as a module.
Representation homology(const ModComplex& x, int deg);
std::map<int, std::size_t> homology_dims(const ModComplex& x);
bool is_acyclic(const ModComplex& x);
/// Is the chain map a quasi-isomorphism? (its cone is acyclic)
bool is_quasi_iso(const ModChainMap& f);

// --- complexes of projectives ----------------------------------------------

struct ProjComplex {
    AlgebraPtr alg;
    int lo = 0;
    std::vector<std::vector<int>> terms;  // summands P_v in degree lo + k
    std::vector<ProjMap> diffs;           // diffs[k] : degree lo+k -> lo+k+1

    static ProjComplex zero(const AlgebraPtr& a);
    int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
    bool is_zero() const;
    std::vector<int> term(int deg) const;
    ProjMap diff(int deg) const;
    ModComplex to_modules() const;
    std::size_t total_dim() const;
    Certificate check() const;
    /// Drops empty terms at both ends.
    ProjComplex trimmed() const;
    /// Homology signature "C[deg:dimvec;...]", shift-sensitive.
    std::string signature() const;
};

ProjComplex shift(const ProjComplex& x, int n);
/// Stalk complex of m in the given degree, replaced by its minimal projective resolution.
ProjComplex stalk_complex(const Representation& m, int degree = 0);

struct ChainMap {
    ProjComplex src;
    ProjComplex tgt;
    std::map<int, ProjMap> comps;

    ProjMap at(int deg) const;
    static ChainMap zero(const ProjComplex& s, const ProjComplex& t);
    static ChainMap identity(const ProjComplex& x);
    ChainMap operator+(const ChainMap& o) const;
    ChainMap scaled(const Scalar& c) const;
    Certificate check() const;
};
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap shift(const ChainMap& f, int n);
ProjComplex cone(const ChainMap& f);
/// Removes split pieces P --iso--> P (Gaussian elimination); the result is minimal.
ProjComplex minimize(const ProjComplex& x);
/// Direct sum of complexes and the block chain map between sums.
ProjComplex direct_sum(const std::vector<ProjComplex>& xs, const AlgebraPtr& a);
ChainMap block_chain_map(const std::vector<ProjComplex>& srcs, const std::vector<ProjComplex>& tgts,
                         const std::vector<std::vector<ChainMap>>& grid);

struct ProjReplacement {
    ProjComplex complex;
    std::map<int, ModMorphism> quasi;  // complex^i (as modules) -> x^i
};
/// Minimal projective replacement of a bounded complex of modules.
ProjReplacement proj_replace(const ModComplex& x, std::size_t cap = 64);

/// Hom in the homotopy category, with explicit representatives.
class HomSpace {
public:
    HomSpace(const ProjComplex& x, const ProjComplex& y);
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ChainMap>& basis() const { return basis_; }
    /// Coordinates of a chain map modulo homotopy in the basis.
    Vec coordinates(const ChainMap& f) const;
    bool is_null_homotopic(const ChainMap& f) const;

private:
    ProjComplex x_, y_;
    std::vector<ChainMap> basis_;
    Mat solve_mat_;  // [basis | boundaries] in flat coordinates
};

/// dim Hom_D(x, Sigma^n y).
std::size_t hyper_hom(const ProjComplex& x, const ProjComplex& y, int n);
/// Shifts n for which Hom(x, Sigma^n y) can be nonzero (overlapping degree supports).
std::vector<int> hom_window(const ProjComplex& x, const ProjComplex& y);

/// Trace of a chain endomorphism on the total space of its terms.
Scalar total_trace(const ChainMap& f);
bool is_local(const ProjComplex& x);
/// Copies of the indecomposable g (local End) in x.
std::size_t multiplicity(const ProjComplex& g, const ProjComplex& x);
bool is_isomorphic(const ProjComplex& x, const ProjComplex& y);

/// A generator list up to shift, with a shift policy (every integer, or multiples of `step`).
struct DerivedSubcat {
    std::vector<ProjComplex> gens;  // shift-orbit representatives
    std::vector<std::string> names;
    int step = 1;
};

/// Shifted copies Sigma^{step k} g of the generators that can interact with x.
std::vector<std::pair<std::size_t, int>> relevant_shifts(const DerivedSubcat& s, const ProjComplex& x);
/// Multiplicities of generator shifts in x, or nullopt if x is not in add of the shifts.
std::optional<std::vector<std::pair<std::pair<std::size_t, int>, std::size_t>>> decompose_in(
    const DerivedSubcat& s, const ProjComplex& x);
bool contains(const DerivedSubcat& s, const ProjComplex& x);

enum class PerpSide { Left, Right };
/// Candidates x with Hom(x, Sigma^n g) = 0 (left) or Hom(g, Sigma^n x) = 0 (right) for all g, n.
std::vector<std::size_t> perp(PerpSide side, const DerivedSubcat& s, const DerivedSubcat& candidates);

/// Minimal right (left) approximation of x by add of the shifts of s.
struct DerivedApproximation {
    ChainMap map;
    std::vector<std::pair<std::size_t, int>> summands;  // (generator, shift)
};
DerivedApproximation right_approx(const ProjComplex& x, const DerivedSubcat& s);
DerivedApproximation left_approx(const ProjComplex& x, const DerivedSubcat& s);

// --- the Gamma side ----------------------------------------------------------

/// A right module over a structure algebra: action[k] is n -> n * gamma_k on column vectors.
struct GammaModule {
    std::size_t dim = 0;
    std::vector<Mat> action;
};
GammaModule regular_module(const StructureAlgebra& g);

/// Restriction of scalars along phi : A -> Gamma.
Representation restrict(const GammaModule& m, const AlgebraPtr& a, const AlgebraMorphism& phi);
/// Gamma viewed as a right A-module.
Representation restricted_gamma(const AlgebraPtr& a, const AlgebraMorphism& phi);

/// x (x)^L_A Gamma as a complex of vector spaces.
struct TensorComplex {
    int lo = 0;
    std::vector<Mat> spaces;  // basis columns inside Gamma^{m}
    std::vector<Mat> diffs;   // ambient matrices Gamma^{m_k} -> Gamma^{m_{k+1}}
    std::map<int, std::size_t> homology_dims() const;
    bool acyclic() const;
};
TensorComplex derived_tensor(const ProjComplex& x, const AlgebraMorphism& phi);
/// dim Tor_i^A(Gamma, Gamma).
std::size_t tor_dim(const AlgebraPtr& a, const AlgebraMorphism& phi, std::size_t i);

/// phi_* phi^* x as a complex of A-modules, with the unit eta_x : x -> phi_* phi^* x.
ModChainMap unit_map(const ProjComplex& x, const AlgebraMorphism& phi);
struct UnitTriangle {
    ProjComplex y;  // Sigma^{-1} cone(eta_x), minimal projective
    ProjComplex x;
    ProjComplex r;  // phi_* phi^* x, minimal projective
    bool y_tensor_acyclic = false;
    bool r_in_image = false;
};
UnitTriangle unit_triangle(const ProjComplex& x, const AlgebraMorphism& phi);
/// Is the unit x -> phi_* phi^* x a quasi-isomorphism (x in the essential image)?
bool in_image(const ProjComplex& x, const AlgebraMorphism& phi);

// --- derived indecomposables --------------------------------------------------

struct DerivedIndecomposable {
    ProjComplex complex;
    bool is_stalk = false;
    std::size_t module_index = 0;  // index into the module list when is_stalk
};
/// Shift-orbit representatives: all indecomposable module stalks plus the non-stalk
/// indecomposables found by a bounded search over minimal complexes of at most
/// `max_terms` terms. Only supported for Nakayama algebras.
std::vector<DerivedIndecomposable> indec_derived(const AlgebraPtr& a, const std::vector<Representation>& modules,
                                                 std::size_t max_terms = 0, std::size_t dim_cap = 32);

}  // namespace dhom
