#include "dhom/derived.hpp"

#include <functional>

namespace dhom {

namespace {

/// Nonempty subsets of the vertices, as sorted vertex lists.
std::vector<std::vector<int>> vertex_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        out.push_back(s);
    }
    return out;
}

/// Each differential entry is zero or a single non-trivial residue path.
std::vector<ProjMap> candidate_diffs(const BoundQuiverAlgebra& a, const AlgebraPtr& ap, const std::vector<int>& s,
                                     const std::vector<int>& t) {
    std::vector<std::vector<std::size_t>> options;  // per entry, SIZE_MAX = zero
    for (int w : t)
        for (int v : s) {
            std::vector<std::size_t> o{SIZE_MAX};
            for (std::size_t p : a.paths_between(w, v))
                if (a.basis()[p].length() > 0) o.push_back(p);
            options.push_back(o);
        }
    std::vector<ProjMap> out;
    std::vector<std::size_t> pick(options.size(), 0);
    for (;;) {
        ProjMap d = ProjMap::zero(ap, s, t);
        bool nonzero = false;
        for (std::size_t e = 0; e < options.size(); ++e) {
            std::size_t p = options[e][pick[e]];
            if (p == SIZE_MAX) continue;
            d.entries[e / s.size()][e % s.size()][p] = 1;
            nonzero = true;
        }
        if (nonzero) out.push_back(d);
        std::size_t e = 0;
        while (e < options.size() && ++pick[e] == options[e].size()) pick[e++] = 0;
        if (e == options.size()) break;
    }
    return out;
}

}  // namespace

std::vector<DerivedIndecomposable> indec_derived(const AlgebraPtr& a, const std::vector<Representation>& modules,
                                                 std::size_t max_terms, std::size_t dim_cap) {
    if (!a->is_nakayama())
        throw Error(ErrorKind::UnsupportedAlgebraClass, "derived indecomposables are only searched for Nakayama algebras");
    std::vector<DerivedIndecomposable> out;
    for (std::size_t i = 0; i < modules.size(); ++i) out.push_back({stalk_complex(modules[i], 0), true, i});
    if (max_terms == 0) max_terms = global_dimension(a) + 1;
    const int n = a->num_vertices();
    const auto subsets = vertex_subsets(n);
    std::vector<ProjComplex> found;

    std::function<void(ProjComplex&, std::size_t)> grow = [&](ProjComplex& x, std::size_t summands) {
        if (x.terms.size() >= 2) {
            ProjComplex y = x;
            y.lo = -static_cast<int>(y.terms.size()) + 1;
            if (y.total_dim() <= dim_cap) {
                auto h = homology_dims(y.to_modules());
                if (h.size() >= 2 && is_local(y)) {
                    bool seen = false;
                    for (const auto& f : found)
                        if (f.terms.size() == y.terms.size() && is_isomorphic(f, y)) seen = true;
                    if (!seen) found.push_back(y);
                }
            }
        }
        if (x.terms.size() >= max_terms) return;
        for (const auto& s : subsets) {
            if (summands + s.size() > static_cast<std::size_t>(n)) continue;
            for (auto& d : candidate_diffs(*a, a, x.terms.back(), s)) {
                if (!x.diffs.empty() && !compose(*a, d, x.diffs.back()).is_zero()) continue;
                x.terms.push_back(s);
                x.diffs.push_back(d);
                grow(x, summands + s.size());
                x.terms.pop_back();
                x.diffs.pop_back();
            }
        }
    };
    for (const auto& s : subsets) {
        ProjComplex x;
        x.alg = a;
        x.terms.push_back(s);
        grow(x, s.size());
    }
    for (auto& f : found) out.push_back({f, false, 0});
    return out;
}

}  // namespace dhom
