#include "dhom/modcat.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace dhom {

AlgebraPtr make_algebra(const AlgebraSpec& spec, std::size_t dim_cap) {
    return std::make_shared<const BoundQuiverAlgebra>(BoundQuiverAlgebra::build(spec, dim_cap));
}

AlgebraPtr opposite_of(const AlgebraPtr& a) {
    static std::mutex mu;
    static std::map<const BoundQuiverAlgebra*, std::pair<std::weak_ptr<const BoundQuiverAlgebra>, AlgebraPtr>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.get());
    if (it != cache.end() && !it->second.first.expired()) return it->second.second;
    auto op = std::make_shared<const BoundQuiverAlgebra>(a->opposite());
    cache[a.get()] = {a, op};
    // The opposite of the opposite is the original algebra.
    cache[op.get()] = {op, a};
    return op;
}

// ---------------------------------------------------------------------------

Representation::Representation(AlgebraPtr a, std::vector<std::size_t> d, std::vector<Mat> m)
    : alg(std::move(a)), dims(std::move(d)), maps(std::move(m)) {
    if (dims.size() != static_cast<std::size_t>(alg->num_vertices()) ||
        maps.size() != static_cast<std::size_t>(alg->quiver().num_arrows()))
        throw Error(ErrorKind::InvalidArgument, "Representation: shape does not match the quiver");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto& ar = alg->quiver().arrows[i];
        if (maps[i].rows() != dims[static_cast<std::size_t>(ar.target)] ||
            maps[i].cols() != dims[static_cast<std::size_t>(ar.source)])
            throw Error(ErrorKind::InvalidArgument, "Representation: arrow map " + ar.name + " has wrong shape");
    }
}

Representation Representation::zero(const AlgebraPtr& a) {
    std::vector<Mat> maps(static_cast<std::size_t>(a->quiver().num_arrows()));
    return Representation(a, std::vector<std::size_t>(static_cast<std::size_t>(a->num_vertices()), 0), maps);
}

std::size_t Representation::dim() const {
    std::size_t s = 0;
    for (auto d : dims) s += d;
    return s;
}

std::size_t Representation::offset(int v) const {
    std::size_t s = 0;
    for (int i = 0; i < v; ++i) s += dims[static_cast<std::size_t>(i)];
    return s;
}

Mat Representation::path_matrix(const Path& p) const {
    Mat m = Mat::identity(dims[static_cast<std::size_t>(p.start)]);
    for (int a : p.arrows) m = maps[static_cast<std::size_t>(a)] * m;
    return m;
}

Mat Representation::basis_action(std::size_t i) const { return path_matrix(alg->basis()[i]); }

Mat Representation::act(const Vec& x) const {
    Mat t(dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        const Path& p = alg->basis()[i];
        Mat b = basis_action(i).scaled(x[i]);
        std::size_t r0 = offset(p.end), c0 = offset(p.start);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) t(r0 + r, c0 + c) += b(r, c);
    }
    return t;
}

Certificate Representation::check_relations() const {
    for (std::size_t k = 0; k < alg->relations().size(); ++k) {
        const auto& rel = alg->relations()[k];
        const Path& p0 = rel.front().path;
        Mat s(dims[static_cast<std::size_t>(p0.end)], dims[static_cast<std::size_t>(p0.start)]);
        for (const auto& t : rel) s += path_matrix(t.path).scaled(t.coeff);
        if (!s.is_zero()) return Certificate::fail("relation " + std::to_string(k) + " does not vanish");
    }
    return Certificate::ok();
}

std::string Representation::signature() const {
    std::ostringstream os;
    os << "M[";
    for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

ModMorphism ModMorphism::zero(const Representation& s, const Representation& t) {
    ModMorphism f{s, t, {}};
    for (std::size_t v = 0; v < s.dims.size(); ++v) f.comps.emplace_back(t.dims[v], s.dims[v]);
    return f;
}

ModMorphism ModMorphism::identity(const Representation& m) {
    ModMorphism f{m, m, {}};
    for (auto d : m.dims) f.comps.push_back(Mat::identity(d));
    return f;
}

bool ModMorphism::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

Mat ModMorphism::total() const {
    Mat t(tgt.dim(), src.dim());
    for (std::size_t v = 0; v < comps.size(); ++v)
        t.set_block(tgt.offset(static_cast<int>(v)), src.offset(static_cast<int>(v)), comps[v]);
    return t;
}

Vec ModMorphism::flatten() const {
    Vec out;
    for (const auto& c : comps)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t k = 0; k < c.cols(); ++k) out.push_back(c(r, k));
    return out;
}

ModMorphism ModMorphism::unflatten(const Representation& s, const Representation& t, const Vec& v) {
    ModMorphism f = zero(s, t);
    std::size_t pos = 0;
    for (auto& c : f.comps)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t k = 0; k < c.cols(); ++k) c(r, k) = v[pos++];
    return f;
}

ModMorphism ModMorphism::operator+(const ModMorphism& o) const {
    ModMorphism f = *this;
    for (std::size_t v = 0; v < comps.size(); ++v) f.comps[v] += o.comps[v];
    return f;
}

ModMorphism ModMorphism::scaled(const Scalar& c) const {
    ModMorphism f = *this;
    for (auto& m : f.comps) m = m.scaled(c);
    return f;
}

Certificate ModMorphism::check() const {
    const auto& arrows = src.alg->quiver().arrows;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        auto s = static_cast<std::size_t>(arrows[i].source), t = static_cast<std::size_t>(arrows[i].target);
        if (!(tgt.maps[i] * comps[s] == comps[t] * src.maps[i]))
            return Certificate::fail("square at arrow " + arrows[i].name + " does not commute");
    }
    return Certificate::ok();
}

ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
    ModMorphism h{f.src, g.tgt, {}};
    for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

bool is_iso(const ModMorphism& f) {
    for (const auto& c : f.comps)
        if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
    return true;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t arrow_basis_index(const BoundQuiverAlgebra& a, int arrow) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto& p = a.basis()[i];
        if (p.arrows.size() == 1 && p.arrows[0] == arrow) return i;
    }
    throw Error(ErrorKind::ConstructionFailed, "arrow is not a basis element");
}

}  // namespace

Representation simple(const AlgebraPtr& a, int v) {
    Representation s = Representation::zero(a);
    s.dims[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < s.maps.size(); ++i) {
        const auto& ar = a->quiver().arrows[i];
        s.maps[i] = Mat(s.dims[static_cast<std::size_t>(ar.target)], s.dims[static_cast<std::size_t>(ar.source)]);
    }
    return s;
}

Representation projective(const AlgebraPtr& a, int v) {
    const int n = a->num_vertices();
    std::vector<std::size_t> dims;
    for (int w = 0; w < n; ++w) dims.push_back(a->paths_between(v, w).size());
    std::vector<Mat> maps;
    for (int ai = 0; ai < a->quiver().num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<std::size_t>(ai)];
        const auto& from = a->paths_between(v, ar.source);
        Mat m(dims[static_cast<std::size_t>(ar.target)], from.size());
        std::size_t aidx = arrow_basis_index(*a, ai);
        for (std::size_t j = 0; j < from.size(); ++j) {
            const Vec& prod = a->product(from[j], aidx);
            for (std::size_t k = 0; k < prod.size(); ++k)
                if (sgn(prod[k]) != 0) m(a->local_position(k), j) = prod[k];
        }
        maps.push_back(std::move(m));
    }
    return Representation(a, dims, maps);
}

Representation injective(const AlgebraPtr& a, int v) {
    const int n = a->num_vertices();
    std::vector<std::size_t> dims;
    for (int u = 0; u < n; ++u) dims.push_back(a->paths_between(u, v).size());
    std::vector<Mat> maps;
    for (int ai = 0; ai < a->quiver().num_arrows(); ++ai) {
        const auto& ar = a->quiver().arrows[static_cast<std::size_t>(ai)];
        const auto& xs = a->paths_between(ar.source, v);
        const auto& ys = a->paths_between(ar.target, v);
        Mat m(ys.size(), xs.size());
        std::size_t aidx = arrow_basis_index(*a, ai);
        for (std::size_t r = 0; r < ys.size(); ++r) {
            const Vec& prod = a->product(aidx, ys[r]);
            for (std::size_t c = 0; c < xs.size(); ++c) m(r, c) = prod[xs[c]];
        }
        maps.push_back(std::move(m));
    }
    return Representation(a, dims, maps);
}

Representation direct_sum(const std::vector<Representation>& ms, const AlgebraPtr& a) {
    Representation s = Representation::zero(a);
    for (const auto& m : ms) {
        for (std::size_t v = 0; v < s.dims.size(); ++v) s.dims[v] += m.dims[v];
        for (std::size_t i = 0; i < s.maps.size(); ++i) s.maps[i] = direct_sum(s.maps[i], m.maps[i]);
    }
    // direct_sum of empty matrices loses shape only when both are 0x0, which is consistent
    for (std::size_t i = 0; i < s.maps.size(); ++i) {
        const auto& ar = a->quiver().arrows[i];
        if (s.maps[i].rows() != s.dims[static_cast<std::size_t>(ar.target)] ||
            s.maps[i].cols() != s.dims[static_cast<std::size_t>(ar.source)])
            throw Error(ErrorKind::ConstructionFailed, "direct_sum shape");
    }
    return s;
}

ModMorphism block_morphism(const std::vector<Representation>& srcs, const std::vector<Representation>& tgts,
                           const std::vector<std::vector<ModMorphism>>& grid) {
    if (srcs.empty() && tgts.empty()) throw Error(ErrorKind::InvalidArgument, "block_morphism: no algebra");
    const AlgebraPtr& a = srcs.empty() ? tgts.front().alg : srcs.front().alg;
    Representation s = direct_sum(srcs, a), t = direct_sum(tgts, a);
    ModMorphism f = ModMorphism::zero(s, t);
    for (std::size_t v = 0; v < s.dims.size(); ++v) {
        std::size_t r0 = 0;
        for (std::size_t i = 0; i < tgts.size(); ++i) {
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < srcs.size(); ++j) {
                f.comps[v].set_block(r0, c0, grid[i][j].comps[v]);
                c0 += srcs[j].dims[v];
            }
            r0 += tgts[i].dims[v];
        }
    }
    return f;
}

ModMorphism sum_inclusion(const std::vector<Representation>& ms, std::size_t i) {
    const AlgebraPtr& a = ms.front().alg;
    Representation s = direct_sum(ms, a);
    ModMorphism f = ModMorphism::zero(ms[i], s);
    for (std::size_t v = 0; v < s.dims.size(); ++v) {
        std::size_t r0 = 0;
        for (std::size_t j = 0; j < i; ++j) r0 += ms[j].dims[v];
        f.comps[v].set_block(r0, 0, Mat::identity(ms[i].dims[v]));
    }
    return f;
}

ModMorphism sum_projection(const std::vector<Representation>& ms, std::size_t i) {
    const AlgebraPtr& a = ms.front().alg;
    Representation s = direct_sum(ms, a);
    ModMorphism f = ModMorphism::zero(s, ms[i]);
    for (std::size_t v = 0; v < s.dims.size(); ++v) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < i; ++j) c0 += ms[j].dims[v];
        f.comps[v].set_block(0, c0, Mat::identity(ms[i].dims[v]));
    }
    return f;
}

// ---------------------------------------------------------------------------

ModMorphism submodule_inclusion(const Representation& m, const std::vector<Mat>& bases) {
    std::vector<std::size_t> dims;
    for (const auto& b : bases) dims.push_back(b.cols());
    std::vector<Mat> maps;
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const auto& ar = m.alg->quiver().arrows[i];
        const Mat& bs = bases[static_cast<std::size_t>(ar.source)];
        const Mat& bt = bases[static_cast<std::size_t>(ar.target)];
        auto x = solve(bt, m.maps[i] * bs);
        if (!x) throw Error(ErrorKind::ConstructionFailed, "submodule is not closed under arrow " + ar.name);
        maps.push_back(std::move(*x));
    }
    Representation sub(m.alg, dims, maps);
    return ModMorphism{sub, m, bases};
}

ModMorphism quotient_projection(const Representation& m, const std::vector<Mat>& bases) {
    std::vector<Mat> qs;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < bases.size(); ++v) {
        Mat b = bases[v].cols() ? bases[v] : Mat(m.dims[v], 0);
        Mat q = left_kernel_matrix(b);
        if (q.cols() != m.dims[v]) q = Mat(0, m.dims[v]);
        dims.push_back(q.rows());
        qs.push_back(std::move(q));
    }
    std::vector<Mat> maps;
    for (std::size_t i = 0; i < m.maps.size(); ++i) {
        const auto& ar = m.alg->quiver().arrows[i];
        const Mat& qs_ = qs[static_cast<std::size_t>(ar.source)];
        const Mat& qt = qs[static_cast<std::size_t>(ar.target)];
        auto rinv = solve(qs_, Mat::identity(qs_.rows()));
        if (!rinv) throw Error(ErrorKind::ConstructionFailed, "quotient: projection not surjective");
        maps.push_back(qt * m.maps[i] * (*rinv));
    }
    Representation quo(m.alg, dims, maps);
    return ModMorphism{m, quo, qs};
}

std::vector<Mat> generated_submodule(const Representation& m, const std::vector<Vec>& gens) {
    const std::size_t n = m.dims.size();
    std::vector<Mat> spaces;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Vec> cols;
        std::size_t off = m.offset(static_cast<int>(v));
        for (const auto& g : gens) {
            Vec part(g.begin() + static_cast<std::ptrdiff_t>(off),
                     g.begin() + static_cast<std::ptrdiff_t>(off + m.dims[v]));
            if (!is_zero(part)) cols.push_back(std::move(part));
        }
        spaces.push_back(column_space(Mat::from_columns(m.dims[v], cols)));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < m.maps.size(); ++i) {
            const auto& ar = m.alg->quiver().arrows[i];
            auto s = static_cast<std::size_t>(ar.source), t = static_cast<std::size_t>(ar.target);
            if (spaces[s].cols() == 0) continue;
            Mat grown = column_space(hcat(spaces[t], m.maps[i] * spaces[s]));
            if (grown.cols() > spaces[t].cols()) {
                spaces[t] = grown;
                changed = true;
            }
        }
    }
    return spaces;
}

ModMorphism kernel(const ModMorphism& f) {
    std::vector<Mat> bases;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        Mat k = kernel_matrix(f.comps[v]);
        if (k.rows() != f.src.dims[v]) k = Mat(f.src.dims[v], 0);
        bases.push_back(std::move(k));
    }
    return submodule_inclusion(f.src, bases);
}

ModMorphism image(const ModMorphism& f) {
    std::vector<Mat> bases;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        Mat c = column_space(f.comps[v]);
        if (c.rows() != f.tgt.dims[v]) c = Mat(f.tgt.dims[v], 0);
        bases.push_back(std::move(c));
    }
    return submodule_inclusion(f.tgt, bases);
}

ModMorphism cokernel(const ModMorphism& f) { return quotient_projection(f.tgt, image(f).comps); }

// ---------------------------------------------------------------------------

std::vector<ModMorphism> hom_basis(const Representation& m, const Representation& n) {
    const std::size_t nv = m.dims.size();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    const std::size_t unknowns = off[nv];
    std::vector<Vec> rows;
    const auto& arrows = m.alg->quiver().arrows;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        auto s = static_cast<std::size_t>(arrows[i].source), t = static_cast<std::size_t>(arrows[i].target);
        const Mat& na = n.maps[i];
        const Mat& ma = m.maps[i];
        // (N(a) F_s - F_t M(a))[r][c] = 0
        for (std::size_t r = 0; r < n.dims[t]; ++r)
            for (std::size_t c = 0; c < m.dims[s]; ++c) {
                Vec eq(unknowns);
                for (std::size_t k = 0; k < n.dims[s]; ++k)
                    if (sgn(na(r, k)) != 0) eq[off[s] + k * m.dims[s] + c] += na(r, k);
                for (std::size_t k = 0; k < m.dims[t]; ++k)
                    if (sgn(ma(k, c)) != 0) eq[off[t] + r * m.dims[t] + k] -= ma(k, c);
                if (!is_zero(eq)) rows.push_back(std::move(eq));
            }
    }
    std::vector<ModMorphism> out;
    if (unknowns == 0) return out;
    for (const auto& v : kernel_basis(Mat::from_rows(unknowns, rows))) out.push_back(ModMorphism::unflatten(m, n, v));
    return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_basis(m, n).size(); }

// ---------------------------------------------------------------------------

ProjMap ProjMap::zero(const AlgebraPtr& a, std::vector<int> s, std::vector<int> t) {
    ProjMap f{std::move(s), std::move(t), {}};
    f.entries.assign(f.tgt.size(), std::vector<Vec>(f.src.size(), Vec(a->dim())));
    return f;
}

bool ProjMap::is_zero() const {
    for (const auto& row : entries)
        for (const auto& e : row)
            if (!dhom::is_zero(e)) return false;
    return true;
}

ProjMap compose(const BoundQuiverAlgebra& a, const ProjMap& g, const ProjMap& f) {
    ProjMap h{f.src, g.tgt, {}};
    h.entries.assign(g.tgt.size(), std::vector<Vec>(f.src.size(), Vec(a.dim())));
    for (std::size_t i = 0; i < g.tgt.size(); ++i)
        for (std::size_t k = 0; k < f.src.size(); ++k)
            for (std::size_t j = 0; j < f.tgt.size(); ++j) {
                if (is_zero(g.entries[i][j]) || is_zero(f.entries[j][k])) continue;
                h.entries[i][k] = add(h.entries[i][k], a.multiply(g.entries[i][j], f.entries[j][k]));
            }
    return h;
}

Representation projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices) {
    std::vector<Representation> ps;
    for (int v : vertices) ps.push_back(projective(a, v));
    return direct_sum(ps, a);
}

ModMorphism to_morphism(const AlgebraPtr& a, const ProjMap& f) {
    Representation s = projective_sum(a, f.src), t = projective_sum(a, f.tgt);
    ModMorphism m = ModMorphism::zero(s, t);
    for (int u = 0; u < a->num_vertices(); ++u) {
        Mat& c = m.comps[static_cast<std::size_t>(u)];
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < f.src.size(); ++j) {
            const auto& ys = a->paths_between(f.src[j], u);
            std::size_t r0 = 0;
            for (std::size_t i = 0; i < f.tgt.size(); ++i) {
                const auto& rows = a->paths_between(f.tgt[i], u);
                if (!is_zero(f.entries[i][j]))
                    for (std::size_t y = 0; y < ys.size(); ++y) {
                        Vec img = a->multiply(f.entries[i][j], a->basis_vector(ys[y]));
                        for (std::size_t k = 0; k < img.size(); ++k)
                            if (sgn(img[k]) != 0) c(r0 + a->local_position(k), c0 + y) = img[k];
                    }
                r0 += rows.size();
            }
            c0 += ys.size();
        }
    }
    return m;
}

ModMorphism from_projective(const Representation& m, int v, const Vec& x) {
    const AlgebraPtr& a = m.alg;
    Representation p = projective(a, v);
    ModMorphism f = ModMorphism::zero(p, m);
    std::size_t off = m.offset(v);
    Vec xv(x.begin() + static_cast<std::ptrdiff_t>(off),
           x.begin() + static_cast<std::ptrdiff_t>(off + m.dims[static_cast<std::size_t>(v)]));
    for (int w = 0; w < a->num_vertices(); ++w) {
        const auto& ps = a->paths_between(v, w);
        for (std::size_t j = 0; j < ps.size(); ++j) {
            Vec col = m.basis_action(ps[j]) * xv;
            for (std::size_t r = 0; r < col.size(); ++r) f.comps[static_cast<std::size_t>(w)](r, j) = col[r];
        }
    }
    return f;
}

ProjMap to_projmap(const AlgebraPtr& a, const std::vector<int>& src, const std::vector<int>& tgt,
                   const ModMorphism& f) {
    ProjMap out = ProjMap::zero(a, src, tgt);
    // Column of e_{src_j} inside vertex src_j of the source sum.
    for (std::size_t j = 0; j < src.size(); ++j) {
        const int v = src[j];
        std::size_t col = 0;
        for (std::size_t k = 0; k < j; ++k) col += a->paths_between(src[k], v).size();
        col += a->local_position(a->trivial_index(v));
        std::size_t r0 = 0;
        for (std::size_t i = 0; i < tgt.size(); ++i) {
            const auto& rows = a->paths_between(tgt[i], v);
            for (std::size_t r = 0; r < rows.size(); ++r)
                out.entries[i][j][rows[r]] = f.comps[static_cast<std::size_t>(v)](r0 + r, col);
            r0 += rows.size();
        }
    }
    return out;
}

}  // namespace dhom
