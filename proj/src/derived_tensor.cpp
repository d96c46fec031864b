#include "dhom/derived.hpp"

namespace dhom {

namespace {

Mat action_of(const GammaModule& m, const Vec& g) {
    Mat out(m.dim, m.dim);
    for (std::size_t k = 0; k < g.size(); ++k)
        if (sgn(g[k]) != 0) out += m.action[k].scaled(g[k]);
    return out;
}

Mat colspace(const Mat& m) {
    Mat c = column_space(m);
    return c.rows() == m.rows() ? c : Mat(m.rows(), 0);
}

Vec arrow_element(const BoundQuiverAlgebra& a, int arrow) {
    const auto& ar = a.quiver().arrows[static_cast<std::size_t>(arrow)];
    return a.reduce(Path{ar.source, ar.target, {arrow}});
}

/// Restriction with the embedding of each vertex space into the ambient module.
struct Restricted {
    Representation rep;
    std::vector<Mat> embed;  // per vertex, ambient x dims[v]
};

Restricted restrict_embedded(const GammaModule& m, const Mat& ambient_basis, const AlgebraPtr& a,
                             const AlgebraMorphism& phi) {
    // ambient_basis spans a submodule S of m; the result restricts S.
    Restricted r;
    std::vector<std::size_t> dims;
    for (int u = 0; u < a->num_vertices(); ++u) {
        Mat e = action_of(m, phi.apply(a->basis_vector(a->trivial_index(u))));
        Mat sp = colspace(e * ambient_basis);
        dims.push_back(sp.cols());
        r.embed.push_back(sp);
    }
    std::vector<Mat> maps;
    for (int ai = 0; ai < a->quiver().num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<std::size_t>(ai)];
        Mat act = action_of(m, phi.apply(arrow_element(*a, ai)));
        const Mat& s = r.embed[static_cast<std::size_t>(ar.source)];
        const Mat& t = r.embed[static_cast<std::size_t>(ar.target)];
        auto sol = solve(t, act * s);
        if (!sol) throw Error(ErrorKind::ConstructionFailed, "restriction: arrow action leaves the vertex space");
        maps.push_back(sol->rows() == t.cols() ? *sol : Mat(t.cols(), s.cols()));
    }
    r.rep = Representation(a, dims, maps);
    return r;
}

}  // namespace

GammaModule regular_module(const StructureAlgebra& g) {
    GammaModule m;
    m.dim = g.dim();
    for (std::size_t k = 0; k < g.dim(); ++k) m.action.push_back(g.right_mult(g.basis_vector(k)));
    return m;
}

Representation restrict(const GammaModule& m, const AlgebraPtr& a, const AlgebraMorphism& phi) {
    return restrict_embedded(m, Mat::identity(m.dim), a, phi).rep;
}

Representation restricted_gamma(const AlgebraPtr& a, const AlgebraMorphism& phi) {
    return restrict(regular_module(phi.target), a, phi);
}

std::map<int, std::size_t> TensorComplex::homology_dims() const {
    std::map<int, std::size_t> out;
    std::vector<std::size_t> ranks;
    for (std::size_t k = 0; k < diffs.size(); ++k) ranks.push_back(rank(diffs[k] * spaces[k]));
    for (std::size_t k = 0; k < spaces.size(); ++k) {
        std::size_t here = spaces[k].cols();
        std::size_t r_out = k < ranks.size() ? ranks[k] : 0, r_in = k > 0 ? ranks[k - 1] : 0;
        if (here > r_out + r_in) out[lo + static_cast<int>(k)] = here - r_out - r_in;
    }
    return out;
}

bool TensorComplex::acyclic() const { return homology_dims().empty(); }

TensorComplex derived_tensor(const ProjComplex& x, const AlgebraMorphism& phi) {
    TensorComplex t;
    t.lo = x.lo;
    if (x.is_zero()) return t;
    const auto& a = *x.alg;
    const StructureAlgebra& g = phi.target;
    const std::size_t n = g.dim();
    for (const auto& term : x.terms) {
        Mat s(0, 0);
        for (int v : term) s = direct_sum(s, colspace(g.left_mult(phi.apply(a.basis_vector(a.trivial_index(v))))));
        if (term.empty()) s = Mat(0, 0);
        t.spaces.push_back(s);
    }
    for (const auto& d : x.diffs) {
        Mat m(d.tgt.size() * n, d.src.size() * n);
        for (std::size_t i = 0; i < d.tgt.size(); ++i)
            for (std::size_t j = 0; j < d.src.size(); ++j)
                if (!is_zero(d.entries[i][j])) m.set_block(i * n, j * n, g.left_mult(phi.apply(d.entries[i][j])));
        t.diffs.push_back(m);
    }
    return t;
}

std::size_t tor_dim(const AlgebraPtr& a, const AlgebraMorphism& phi, std::size_t i) {
    ProjComplex p = stalk_complex(restricted_gamma(a, phi), 0);
    auto h = derived_tensor(p, phi).homology_dims();
    auto it = h.find(-static_cast<int>(i));
    return it == h.end() ? 0 : it->second;
}

ModChainMap unit_map(const ProjComplex& x, const AlgebraMorphism& phi) {
    const AlgebraPtr& alg = x.alg;
    const auto& a = *alg;
    const StructureAlgebra& g = phi.target;
    GammaModule reg = regular_module(g);
    auto idem = [&](int v) { return phi.apply(a.basis_vector(a.trivial_index(v))); };

    ModChainMap out;
    out.src = x.to_modules();
    out.tgt.alg = alg;
    out.tgt.lo = x.lo;
    std::vector<std::vector<Restricted>> pieces;
    for (std::size_t k = 0; k < x.terms.size(); ++k) {
        std::vector<Restricted> ps;
        std::vector<Representation> reps;
        for (int v : x.terms[k]) {
            ps.push_back(restrict_embedded(reg, colspace(g.left_mult(idem(v))), alg, phi));
            reps.push_back(ps.back().rep);
        }
        out.tgt.terms.push_back(direct_sum(reps, alg));
        pieces.push_back(std::move(ps));
    }
    for (std::size_t k = 0; k < x.diffs.size(); ++k) {
        const ProjMap& d = x.diffs[k];
        std::vector<Representation> srcs, tgts;
        for (const auto& p : pieces[k]) srcs.push_back(p.rep);
        for (const auto& p : pieces[k + 1]) tgts.push_back(p.rep);
        std::vector<std::vector<ModMorphism>> grid(tgts.size());
        for (std::size_t i = 0; i < tgts.size(); ++i)
            for (std::size_t j = 0; j < srcs.size(); ++j) {
                ModMorphism f = ModMorphism::zero(srcs[j], tgts[i]);
                Mat l = g.left_mult(phi.apply(d.entries[i][j]));
                for (int u = 0; u < a.num_vertices(); ++u) {
                    const auto uu = static_cast<std::size_t>(u);
                    auto sol = solve(pieces[k + 1][i].embed[uu], l * pieces[k][j].embed[uu]);
                    if (!sol) throw Error(ErrorKind::ConstructionFailed, "unit_map: differential leaves the ideal");
                    if (sol->rows() == f.comps[uu].rows()) f.comps[uu] = *sol;
                }
                grid[i].push_back(f);
            }
        out.tgt.diffs.push_back(srcs.empty() || tgts.empty() ? ModMorphism::zero(out.tgt.terms[k], out.tgt.terms[k + 1])
                                                             : block_morphism(srcs, tgts, grid));
    }
    for (std::size_t k = 0; k < x.terms.size(); ++k) {
        const auto& term = x.terms[k];
        if (term.empty()) continue;
        const Representation& t = out.tgt.terms[k];
        std::vector<Representation> ps;
        std::vector<std::vector<ModMorphism>> grid(1);
        for (std::size_t j = 0; j < term.size(); ++j) {
            const int v = term[j];
            const auto vi = static_cast<std::size_t>(v);
            auto loc = solve(pieces[k][j].embed[vi], idem(v));
            Vec total(t.dim());
            std::size_t off = t.offset(v);
            for (std::size_t q = 0; q < j; ++q) off += pieces[k][q].rep.dims[vi];
            for (std::size_t r = 0; r < loc->size(); ++r) total[off + r] = (*loc)[r];
            ps.push_back(projective(alg, v));
            grid[0].push_back(from_projective(t, v, total));
        }
        out.comps[x.lo + static_cast<int>(k)] = block_morphism(ps, {t}, grid);
    }
    return out;
}

bool in_image(const ProjComplex& x, const AlgebraMorphism& phi) { return is_quasi_iso(unit_map(x, phi)); }

UnitTriangle unit_triangle(const ProjComplex& x, const AlgebraMorphism& phi) {
    UnitTriangle t;
    t.x = x;
    ModChainMap eta = unit_map(x, phi);
    t.y = minimize(proj_replace(shift(cone(eta), -1)).complex);
    t.r = minimize(proj_replace(eta.tgt).complex);
    t.y_tensor_acyclic = derived_tensor(t.y, phi).acyclic();
    t.r_in_image = in_image(t.r, phi);
    return t;
}

}  // namespace dhom
