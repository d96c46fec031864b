#pragma once
// Small arithmetic on ProjMap shared by the derived-category sources.

#include "dhom/modcat.hpp"

namespace dhom::detail {

inline ProjMap pm_add(const ProjMap& f, const ProjMap& g) {
    ProjMap out = f;
    for (std::size_t i = 0; i < f.tgt.size(); ++i)
        for (std::size_t j = 0; j < f.src.size(); ++j) out.entries[i][j] = add(f.entries[i][j], g.entries[i][j]);
    return out;
}

inline ProjMap pm_scaled(const ProjMap& f, const Scalar& c) {
    ProjMap out = f;
    for (auto& row : out.entries)
        for (auto& e : row) e = scaled(e, c);
    return out;
}

inline ProjMap pm_identity(const BoundQuiverAlgebra& a, const std::vector<int>& vs) {
    ProjMap out;
    out.src = vs;
    out.tgt = vs;
    out.entries.assign(vs.size(), std::vector<Vec>(vs.size(), Vec(a.dim())));
    for (std::size_t i = 0; i < vs.size(); ++i) out.entries[i][i][a.trivial_index(vs[i])] = 1;
    return out;
}

inline bool pm_equal(const ProjMap& f, const ProjMap& g) {
    if (f.src != g.src || f.tgt != g.tgt) return false;
    for (std::size_t i = 0; i < f.tgt.size(); ++i)
        for (std::size_t j = 0; j < f.src.size(); ++j)
            if (f.entries[i][j] != g.entries[i][j]) return false;
    return true;
}

/// Trace of left multiplication by x (in e_v A e_v) on P_v = e_v A.
inline Scalar trace_on_projective(const BoundQuiverAlgebra& a, int v, const Vec& x) {
    Scalar t = 0;
    for (int w = 0; w < a.num_vertices(); ++w)
        for (std::size_t p : a.paths_between(v, w)) {
            Vec xp = a.multiply(x, a.basis_vector(p));
            t += xp[p];
        }
    return t;
}

}  // namespace dhom::detail
