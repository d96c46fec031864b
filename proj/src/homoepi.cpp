#include "dhom/homoepi.hpp"

namespace dhom {

namespace {

Mat colspace(const Mat& m) {
    Mat c = column_space(m);
    return c.rows() == m.rows() ? c : Mat(m.rows(), 0);
}

/// Vertex spaces Gamma phi(e_u) of Gamma_A, matching restricted_gamma.
std::vector<Mat> gamma_vertex_spaces(const AlgebraPtr& a, const AlgebraMorphism& phi) {
    std::vector<Mat> out;
    const StructureAlgebra& g = phi.target;
    for (int u = 0; u < a->num_vertices(); ++u)
        out.push_back(colspace(g.right_mult(phi.apply(a->basis_vector(a->trivial_index(u))))));
    return out;
}

/// Left multiplication by gamma as an endomorphism of Gamma_A.
ModMorphism gamma_left_mult(const Representation& ga, const std::vector<Mat>& spaces, const StructureAlgebra& g,
                            const Vec& gamma) {
    ModMorphism f = ModMorphism::zero(ga, ga);
    Mat l = g.left_mult(gamma);
    for (std::size_t u = 0; u < spaces.size(); ++u) {
        if (spaces[u].cols() == 0) continue;
        auto sol = solve(spaces[u], l * spaces[u]);
        if (!sol) throw Error(ErrorKind::ConstructionFailed, "left multiplication leaves a vertex space");
        f.comps[u] = *sol;
    }
    return f;
}

std::string name_in(const AdditiveSubcategory& c, const Representation& x) {
    for (std::size_t i = 0; i < c.gens.size(); ++i)
        if (is_isomorphic(c.gens[i], x)) return c.names[i];
    return x.signature();
}

}  // namespace

ReflectionData reflection(const AlgebraPtr& a, const AdditiveSubcategory& w) {
    ReflectionData r;
    r.w = w;
    std::vector<Representation> ps, targets;
    for (int v = 0; v < a->num_vertices(); ++v) {
        Representation p = projective(a, v);
        Approximation env = left_approx(p, w);
        if (auto c = is_strong_envelope(env.map, w); !c)
            throw Error(ErrorKind::NotStrong, "envelope of P" + a->quiver().vertices[static_cast<std::size_t>(v)] +
                                                  ": " + c.witness);
        ps.push_back(p);
        targets.push_back(env.map.tgt);
        r.envelopes.push_back(env.map);
    }
    r.s = direct_sum(targets, a);
    std::vector<std::vector<ModMorphism>> grid(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            grid[i].push_back(i == j ? r.envelopes[i] : ModMorphism::zero(ps[j], targets[i]));
    r.unit = block_morphism(ps, targets, grid);
    return r;
}

ModMorphism left_multiplication(const AlgebraPtr& a, const Vec& x) {
    std::vector<int> all;
    for (int v = 0; v < a->num_vertices(); ++v) all.push_back(v);
    ProjMap f = ProjMap::zero(a, all, all);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (sgn(x[k]) == 0) continue;
        const Path& p = a->basis()[k];
        Vec& e = f.entries[static_cast<std::size_t>(p.start)][static_cast<std::size_t>(p.end)];
        e = add(e, scaled(a->basis_vector(k), x[k]));
    }
    return to_morphism(a, f);
}

BalancedTensor balanced_tensor(const std::vector<Mat>& right_actions, std::size_t m_dim, const AlgebraMorphism& phi) {
    const StructureAlgebra& g = phi.target;
    const std::size_t n = g.dim(), len = m_dim * n;
    std::vector<Vec> rels;
    for (std::size_t p = 0; p < right_actions.size(); ++p) {
        const Mat& act = right_actions[p];
        Mat l = g.left_mult(phi.apply(phi.source.basis_vector(p)));
        for (std::size_t i = 0; i < m_dim; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // (m_i . p) (x) g_j - m_i (x) phi(p) g_j
                Vec v(len);
                for (std::size_t r = 0; r < m_dim; ++r) v[r * n + j] += act(r, i);
                for (std::size_t k = 0; k < n; ++k) v[i * n + k] -= l(k, j);
                if (!is_zero(v)) rels.push_back(std::move(v));
            }
    }
    BalancedTensor t;
    t.relations = rels.empty() ? Mat(len, 0) : Mat::from_columns(len, rels);
    t.dim = len - rank(t.relations);
    return t;
}

BalancedTensor balanced_tensor(const Representation& m, const AlgebraMorphism& phi) {
    std::vector<Mat> acts;
    for (std::size_t p = 0; p < phi.source.dim(); ++p) acts.push_back(m.act(phi.source.basis_vector(p)));
    return balanced_tensor(acts, m.dim(), phi);
}

bool is_ring_epi(const AlgebraMorphism& phi) {
    const StructureAlgebra& g = phi.target;
    std::vector<Mat> acts;
    for (std::size_t p = 0; p < phi.source.dim(); ++p)
        acts.push_back(g.right_mult(phi.apply(phi.source.basis_vector(p))));
    return balanced_tensor(acts, g.dim(), phi).dim == g.dim();
}

bool unit_is_iso(const Representation& m, const AlgebraMorphism& phi) {
    BalancedTensor t = balanced_tensor(m, phi);
    const std::size_t md = m.dim(), n = phi.target.dim();
    if (t.dim != md) return false;
    if (md == 0) return true;
    // m -> m (x) Gamma is injective iff the images of m_i (x) 1 stay independent modulo the relations.
    Mat u(md * n, md);
    const Vec& one = phi.target.unit();
    for (std::size_t i = 0; i < md; ++i)
        for (std::size_t k = 0; k < n; ++k) u(i * n + k, i) = one[k];
    return rank(hcat(t.relations, u)) == rank(t.relations) + md;
}

GammaModule coinduced(const AlgebraPtr& a, const AlgebraMorphism& phi, const Representation& w) {
    const StructureAlgebra& g = phi.target;
    Representation ga = restricted_gamma(a, phi);
    std::vector<Mat> spaces = gamma_vertex_spaces(a, phi);
    auto hs = hom_basis(ga, w);
    GammaModule m;
    m.dim = hs.size();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        ModMorphism lk = gamma_left_mult(ga, spaces, g, g.basis_vector(k));
        Mat act(m.dim, m.dim);
        for (std::size_t c = 0; c < m.dim; ++c) {
            Vec x = coordinates(hs, compose(hs[c], lk));
            for (std::size_t r = 0; r < m.dim; ++r) act(r, c) = x[r];
        }
        m.action.push_back(std::move(act));
    }
    return m;
}

std::size_t gamma_hom_dim(const GammaModule& m, const GammaModule& n) {
    const std::size_t cols = n.dim * m.dim;
    if (cols == 0) return 0;
    // T : m -> n with T m(g) = n(g) T, T stored row-major.
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < m.action.size(); ++k) {
        const Mat& am = m.action[k];
        const Mat& an = n.action[k];
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) {
                Vec row(cols);
                for (std::size_t t = 0; t < m.dim; ++t) row[r * m.dim + t] += am(t, c);
                for (std::size_t t = 0; t < n.dim; ++t) row[t * m.dim + c] -= an(r, t);
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return cols;
    return cols - rank(Mat::from_rows(cols, rows));
}

bool same_subcategory(const AdditiveSubcategory& x, const AdditiveSubcategory& y) {
    for (const auto& g : x.gens)
        if (!y.contains(g)) return false;
    for (const auto& g : y.gens)
        if (!x.contains(g)) return false;
    return true;
}

EpiOfPairs construct_homoepi(const HomologicalPair& pair, const AdditiveSubcategory& w) {
    const AlgebraPtr& a = pair.alg;
    for (const auto& g : w.gens)
        if (!pair.F.contains(g)) throw Error(ErrorKind::InvalidArgument, g.signature() + " is not in F");
    EpiOfPairs e;
    e.refl = reflection(a, w);
    const Representation& s = e.refl.s;
    const ModMorphism& eta = e.refl.unit;

    EndoAlgebra end = endo_structure_algebra(s);
    const std::size_t n = end.basis.size();
    StructureAlgebra phi_s = StructureAlgebra::from_quiver_algebra(*a);
    e.phi.source = phi_s;
    e.phi.target = end.algebra;
    e.phi.matrix = Mat(n, a->dim());
    if (n > 0) {
        std::vector<Vec> cols;
        for (const auto& b : end.basis) cols.push_back(compose(b, eta).flatten());
        Mat pre = Mat::from_columns(cols.front().size(), cols);
        if (rank(pre) != n) throw Error(ErrorKind::ConstructionFailed, "precomposition with the unit is not injective");
        for (std::size_t k = 0; k < a->dim(); ++k) {
            ModMorphism rhs = compose(eta, left_multiplication(a, a->basis_vector(k)));
            auto x = solve(pre, rhs.flatten());
            if (!x) throw Error(ErrorKind::ConstructionFailed, "left multiplication does not descend to the envelope");
            for (std::size_t r = 0; r < n; ++r) e.phi.matrix(r, k) = (*x)[r];
        }
    }
    e.morphism = check_morphism(e.phi);
    if (!e.morphism) throw Error(ErrorKind::ConstructionFailed, "phi: " + e.morphism.witness);

    e.is_epi = is_ring_epi(e.phi);
    bool all_zero = true;
    for (int i = 1; i <= pair.d; ++i) {
        e.tor.push_back(tor_dim(a, e.phi, static_cast<std::size_t>(i)));
        all_zero = all_zero && e.tor.back() == 0;
    }
    e.is_homological = e.is_epi && all_zero;
    e.pseudoflat_agrees = (e.tor.empty() || e.tor.back() == 0) == all_zero;

    // G and its pushdown.
    std::vector<Representation> restricted;
    for (const auto& g : w.gens) {
        e.G.push_back(coinduced(a, e.phi, g));
        restricted.push_back(restrict(e.G.back(), a, e.phi));
        for (const auto& [part, mult] : decompose(restricted.back()).parts)
            if (!e.pushdown.contains(part)) {
                e.pushdown.gens.push_back(part);
                e.pushdown.names.push_back(name_in(pair.F, part));
            }
    }
    e.pushdown_in_F = Certificate::ok();
    for (const auto& p : e.pushdown.gens)
        if (!pair.F.contains(p)) {
            e.pushdown_in_F = Certificate::fail(p.signature() + " is not in F");
            break;
        }

    AdditiveSubcategory add_gamma;
    for (const auto& [part, mult] : decompose(s).parts) add_gamma.gens.push_back(part);
    e.g_is_add_gamma = same_subcategory(e.pushdown, add_gamma);

    // mod Gamma seen inside mod A: indecomposables whose unit m -> m (x) Gamma is invertible.
    std::vector<Representation> image;
    for (const auto& m : pair.modules)
        if (unit_is_iso(m, e.phi)) image.push_back(m);
    e.g_cluster_tilting = e.is_homological ? is_d_cluster_tilting(image, e.pushdown, pair.d)
                                           : Certificate::fail("phi is not a homological epimorphism");

    e.fully_faithful = Certificate::ok();
    for (std::size_t i = 0; i < e.G.size() && e.fully_faithful; ++i)
        for (std::size_t j = 0; j < e.G.size(); ++j) {
            std::size_t over_gamma = gamma_hom_dim(e.G[i], e.G[j]);
            std::size_t over_a = hom_dim(restricted[i], restricted[j]);
            if (over_gamma != over_a) {
                e.fully_faithful = Certificate::fail("Hom(" + w.names[i] + "," + w.names[j] + "): " +
                                                     std::to_string(over_gamma) + " over Gamma, " +
                                                     std::to_string(over_a) + " over A");
                break;
            }
        }
    e.is_pair_epi = e.is_homological && e.pushdown_in_F && e.g_cluster_tilting && e.fully_faithful;
    return e;
}

Certificate certify_homoepi_of_pairs(const EpiOfPairs& e) {
    if (!e.morphism) return Certificate::fail("phi is not an algebra morphism: " + e.morphism.witness);
    if (!e.is_epi) return Certificate::fail("phi is not a ring epimorphism");
    for (std::size_t i = 0; i < e.tor.size(); ++i)
        if (e.tor[i] != 0)
            return Certificate::fail("Tor_" + std::to_string(i + 1) + "(Gamma,Gamma) has dimension " +
                                     std::to_string(e.tor[i]));
    if (!e.pushdown_in_F) return e.pushdown_in_F;
    if (!e.g_cluster_tilting) return Certificate::fail("G is not cluster tilting: " + e.g_cluster_tilting.witness);
    if (!e.fully_faithful) return e.fully_faithful;
    return Certificate::ok();
}

bool round_trip(const HomologicalPair& pair, const std::vector<std::size_t>& w) {
    AdditiveSubcategory sub = pair.sub(w);
    try {
        EpiOfPairs e = construct_homoepi(pair, sub);
        return certify_homoepi_of_pairs(e).pass && same_subcategory(e.pushdown, sub);
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::NotStrong || err.kind() == ErrorKind::ConstructionFailed) return false;
        throw;
    }
}

AlgebraMorphism quotient_by_ideal(const AlgebraPtr& a, const std::vector<std::size_t>& ideal) {
    const std::size_t n = a->dim();
    std::vector<bool> in(n, false);
    for (auto i : ideal) {
        if (i >= n) throw Error(ErrorKind::InvalidArgument, "ideal index out of range");
        in[i] = true;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const Vec* p : {&a->product(i, j), &a->product(j, i)})
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn((*p)[k]) != 0 && !in[k])
                        throw Error(ErrorKind::InvalidArgument, "the listed basis elements do not span an ideal");
    }
    std::vector<std::size_t> keep;
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t k = 0; k < n; ++k)
        if (!in[k]) {
            pos[k] = keep.size();
            keep.push_back(k);
        }
    auto project = [&](const Vec& v) {
        Vec out(keep.size());
        for (std::size_t r = 0; r < keep.size(); ++r) out[r] = v[keep[r]];
        return out;
    };
    std::vector<std::string> labels;
    std::vector<Vec> table;
    for (auto i : keep) labels.push_back(a->path_label(a->basis()[i]));
    for (auto i : keep)
        for (auto j : keep) table.push_back(project(a->product(i, j)));
    AlgebraMorphism q;
    q.source = StructureAlgebra::from_quiver_algebra(*a);
    q.target = StructureAlgebra(std::move(labels), std::move(table), project(a->unit()));
    q.matrix = Mat(keep.size(), n);
    for (auto k : keep) q.matrix(pos[k], k) = 1;
    return q;
}

}  // namespace dhom
