#pragma once
// From a wide subcategory W of F to a homological epimorphism of d-homological
// pairs (A, F) -> (Gamma, G): reflection, Gamma = End(s), phi, G and certificates.

#include "dhom/higher.hpp"

namespace dhom {

struct ReflectionData {
    AdditiveSubcategory w;
    Representation s;                 // sum of the envelope targets
    std::vector<ModMorphism> envelopes;  // P_v -> s_v, one per vertex
    ModMorphism unit;                 // A_A -> s, the sum of the envelopes
};
/// Strong w-envelopes of the indecomposable projectives; throws NotStrong.
ReflectionData reflection(const AlgebraPtr& a, const AdditiveSubcategory& w);

/// Left multiplication by a basis element of A, as an endomorphism of A_A.
ModMorphism left_multiplication(const AlgebraPtr& a, const Vec& x);

/// dim (M (x)_A Gamma) for a right A-module M given by its total-space right actions.
struct BalancedTensor {
    std::size_t dim = 0;
    Mat relations;  // columns span the balancing relations inside M (x)_k Gamma
};
BalancedTensor balanced_tensor(const std::vector<Mat>& right_actions, std::size_t m_dim, const AlgebraMorphism& phi);
BalancedTensor balanced_tensor(const Representation& m, const AlgebraMorphism& phi);
/// Multiplication Gamma (x)_A Gamma -> Gamma is bijective.
bool is_ring_epi(const AlgebraMorphism& phi);
/// The unit m -> m (x)_A Gamma, m -> m (x) 1, is an isomorphism.
bool unit_is_iso(const Representation& m, const AlgebraMorphism& phi);

/// Hom_A(Gamma_A, w) with Gamma acting by precomposition with left multiplication.
GammaModule coinduced(const AlgebraPtr& a, const AlgebraMorphism& phi, const Representation& w);
/// dim Hom_Gamma(m, n).
std::size_t gamma_hom_dim(const GammaModule& m, const GammaModule& n);

struct EpiOfPairs {
    ReflectionData refl;
    AlgebraMorphism phi;
    std::vector<GammaModule> G;         // one per generator of w
    AdditiveSubcategory pushdown;       // indecomposable summands of phi_*(G), up to iso
    std::vector<std::size_t> tor;       // tor[i-1] = dim Tor_i(Gamma, Gamma), i = 1..d
    bool is_epi = false;
    bool is_homological = false;
    bool is_pair_epi = false;
    bool pseudoflat_agrees = false;     // Tor_d = 0 iff all Tor_i = 0 (i = 1..d)
    bool g_is_add_gamma = false;        // pushdown(G) = add(Gamma_A)
    Certificate morphism;               // unital and multiplicative
    Certificate pushdown_in_F;
    Certificate g_cluster_tilting;      // G d-cluster tilting in mod Gamma
    Certificate fully_faithful;         // Hom over Gamma = Hom over A on G generators
};

/// Builds phi for w and certifies it; throws ConstructionFailed / NotStrong.
EpiOfPairs construct_homoepi(const HomologicalPair& pair, const AdditiveSubcategory& w);
/// All flags and certificates of a constructed epi.
Certificate certify_homoepi_of_pairs(const EpiOfPairs& e);
/// Construction succeeds, is certified and its pushdown equals w up to isomorphism.
bool round_trip(const HomologicalPair& pair, const std::vector<std::size_t>& w);
/// Same subcategory: every generator of one is isomorphic to a generator of the other.
bool same_subcategory(const AdditiveSubcategory& x, const AdditiveSubcategory& y);

/// The quotient map A -> A/I for the ideal spanned by the listed basis elements.
AlgebraMorphism quotient_by_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& ideal);

}  // namespace dhom
