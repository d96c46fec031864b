#include "dhom/modcat.hpp"

namespace dhom {

ProjectiveCover projective_cover(const Representation& m) {
    const AlgebraPtr& a = m.alg;
    ProjectiveCover out;
    std::vector<Representation> ps;
    std::vector<std::vector<ModMorphism>> grid(1);
    for (int v = 0; v < a->num_vertices(); ++v) {
        const std::size_t dv = m.dims[static_cast<std::size_t>(v)];
        if (dv == 0) continue;
        Mat rad(dv, 0);
        for (std::size_t i = 0; i < m.maps.size(); ++i)
            if (a->quiver().arrows[i].target == v) rad = hcat(rad, m.maps[i]);
        Mat acc = column_space(rad);
        for (std::size_t k = 0; k < dv; ++k) {
            Vec e(dv);
            e[k] = 1;
            Mat trial = hcat(acc, Mat::from_columns(dv, {e}));
            if (rank(trial) == acc.cols() + 1) {
                acc = trial;
                Vec x(m.dim());
                x[m.offset(v) + k] = 1;
                out.vertices.push_back(v);
                ps.push_back(projective(a, v));
                grid[0].push_back(from_projective(m, v, x));
            }
        }
    }
    if (ps.empty()) {
        out.map = ModMorphism::zero(Representation::zero(a), m);
        return out;
    }
    out.map = block_morphism(ps, {m}, grid);
    return out;
}

std::size_t ProjResolution::length() const {
    std::size_t len = 0;
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (!terms[i].empty()) len = i;
    return len;
}

ProjResolution proj_resolution(const Representation& m, std::size_t cap) {
    const AlgebraPtr& a = m.alg;
    ProjResolution res;
    ProjectiveCover cov = projective_cover(m);
    res.terms.push_back(cov.vertices);
    res.augmentation = cov.map;
    ModMorphism incl = kernel(cov.map);
    while (!incl.src.is_zero()) {
        if (res.terms.size() > cap) throw Error(ErrorKind::ExceedsBound, "projective resolution exceeds cap");
        ProjectiveCover c = projective_cover(incl.src);
        ModMorphism d = compose(incl, c.map);
        res.diffs.push_back(to_projmap(a, c.vertices, res.terms.back(), d));
        res.terms.push_back(c.vertices);
        incl = kernel(c.map);
    }
    return res;
}

namespace {

/// Matrix of Hom(d, n): Hom(P_tgt, n) -> Hom(P_src, n), with Hom(P_v, n) identified with n e_v.
Mat hom_into(const Representation& n, const ProjMap& d) {
    std::vector<std::size_t> roff{0}, coff{0};
    for (int s : d.src) roff.push_back(roff.back() + n.dims[static_cast<std::size_t>(s)]);
    for (int t : d.tgt) coff.push_back(coff.back() + n.dims[static_cast<std::size_t>(t)]);
    Mat out(roff.back(), coff.back());
    for (std::size_t i = 0; i < d.tgt.size(); ++i)
        for (std::size_t j = 0; j < d.src.size(); ++j) {
            const Vec& x = d.entries[i][j];
            for (std::size_t k = 0; k < x.size(); ++k)
                if (sgn(x[k]) != 0) {
                    Mat act = n.basis_action(k).scaled(x[k]);
                    for (std::size_t r = 0; r < act.rows(); ++r)
                        for (std::size_t c = 0; c < act.cols(); ++c) out(roff[j] + r, coff[i] + c) += act(r, c);
                }
        }
    return out;
}

std::size_t hom_p(const Representation& n, const std::vector<int>& term) {
    std::size_t s = 0;
    for (int v : term) s += n.dims[static_cast<std::size_t>(v)];
    return s;
}

}  // namespace

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i) {
    ProjResolution res = proj_resolution(m);
    if (i >= res.terms.size()) return 0;
    std::size_t here = hom_p(n, res.terms[i]);
    std::size_t out_rank = i < res.diffs.size() ? rank(hom_into(n, res.diffs[i])) : 0;
    std::size_t in_rank = i > 0 ? rank(hom_into(n, res.diffs[i - 1])) : 0;
    return here - out_rank - in_rank;
}

std::size_t projective_dimension(const Representation& m, std::size_t cap) {
    if (m.is_zero()) return 0;
    return proj_resolution(m, cap).length();
}

std::size_t global_dimension(const AlgebraPtr& a, std::size_t cap) {
    std::size_t g = 0;
    for (int v = 0; v < a->num_vertices(); ++v) g = std::max(g, projective_dimension(simple(a, v), cap));
    return g;
}

Representation dual(const Representation& m, const AlgebraPtr& target) {
    std::vector<Mat> maps;
    for (const auto& x : m.maps) maps.push_back(x.transpose());
    return Representation(target, m.dims, maps);
}

ModMorphism dual(const ModMorphism& f, const AlgebraPtr& target) {
    ModMorphism g{dual(f.tgt, target), dual(f.src, target), {}};
    for (const auto& c : f.comps) g.comps.push_back(c.transpose());
    return g;
}

Representation ar_translate(const Representation& m) {
    const AlgebraPtr& a = m.alg;
    ProjResolution res = proj_resolution(m);
    if (res.diffs.empty()) return Representation::zero(a);
    const ProjMap& d = res.diffs[0];
    // Nakayama functor applied to d: I_src -> I_tgt.
    std::vector<Representation> is, it;
    for (int v : d.src) is.push_back(injective(a, v));
    for (int v : d.tgt) it.push_back(injective(a, v));
    Representation s = direct_sum(is, a), t = direct_sum(it, a);
    ModMorphism nu = ModMorphism::zero(s, t);
    for (int u = 0; u < a->num_vertices(); ++u) {
        Mat& c = nu.comps[static_cast<std::size_t>(u)];
        std::size_t r0 = 0;
        for (std::size_t i = 0; i < d.tgt.size(); ++i) {
            const auto& qs = a->paths_between(u, d.tgt[i]);
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < d.src.size(); ++j) {
                const auto& ps = a->paths_between(u, d.src[j]);
                if (!is_zero(d.entries[i][j]))
                    for (std::size_t q = 0; q < qs.size(); ++q) {
                        Vec qx = a->multiply(a->basis_vector(qs[q]), d.entries[i][j]);
                        for (std::size_t p = 0; p < ps.size(); ++p) c(r0 + q, c0 + p) = qx[ps[p]];
                    }
                c0 += ps.size();
            }
            r0 += qs.size();
        }
    }
    return kernel(nu).src;
}

Representation ar_translate_inverse(const Representation& m) {
    AlgebraPtr op = opposite_of(m.alg);
    return dual(ar_translate(dual(m, op)), m.alg);
}

}  // namespace dhom
