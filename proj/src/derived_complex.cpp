#include "dhom/derived.hpp"

#include "projmap_ops.hpp"

#include <algorithm>
#include <sstream>

namespace dhom {

using detail::pm_add;
using detail::pm_equal;
using detail::pm_identity;
using detail::pm_scaled;

// --- complexes of modules --------------------------------------------------

ModComplex ModComplex::stalk(const Representation& m, int degree) {
    ModComplex x;
    x.alg = m.alg;
    x.lo = degree;
    x.terms = {m};
    return x;
}

Representation ModComplex::term(int deg) const {
    if (deg < lo || deg > hi()) return Representation::zero(alg);
    return terms[static_cast<std::size_t>(deg - lo)];
}

ModMorphism ModComplex::diff(int deg) const {
    int k = deg - lo;
    if (k >= 0 && k < static_cast<int>(diffs.size())) return diffs[static_cast<std::size_t>(k)];
    return ModMorphism::zero(term(deg), term(deg + 1));
}

Certificate ModComplex::check() const {
    for (int i = lo; i <= hi(); ++i) {
        ModMorphism d = diff(i);
        if (auto c = d.check(); !c) return Certificate::fail("d^" + std::to_string(i) + ": " + c.witness);
        if (!compose(diff(i + 1), d).is_zero()) return Certificate::fail("d o d != 0 at degree " + std::to_string(i));
    }
    return Certificate::ok();
}

ModMorphism ModChainMap::at(int deg) const {
    auto it = comps.find(deg);
    if (it != comps.end()) return it->second;
    return ModMorphism::zero(src.term(deg), tgt.term(deg));
}

ModComplex shift(const ModComplex& x, int n) {
    ModComplex y = x;
    y.lo = x.lo - n;
    if (n % 2 != 0)
        for (auto& d : y.diffs) d = d.scaled(-1);
    return y;
}

ModComplex cone(const ModChainMap& f) {
    const ModComplex& x = f.src;
    const ModComplex& y = f.tgt;
    const AlgebraPtr& a = x.alg ? x.alg : y.alg;
    int lo = std::min(x.lo - 1, y.lo), hi = std::max(x.hi() - 1, y.hi());
    ModComplex c;
    c.alg = a;
    c.lo = lo;
    for (int i = lo; i <= hi; ++i) c.terms.push_back(direct_sum({x.term(i + 1), y.term(i)}, a));
    for (int i = lo; i < hi; ++i) {
        std::vector<Representation> s{x.term(i + 1), y.term(i)}, t{x.term(i + 2), y.term(i + 1)};
        std::vector<std::vector<ModMorphism>> grid{
            {x.diff(i + 1).scaled(-1), ModMorphism::zero(s[1], t[0])},
            {f.at(i + 1), y.diff(i)}};
        c.diffs.push_back(block_morphism(s, t, grid));
    }
    return c;
}

namespace {

Mat shaped(Mat m, std::size_t rows) { return m.rows() == rows ? m : Mat(rows, 0); }

}  // namespace

Representation homology(const ModComplex& x, int deg) {
    ModMorphism k = kernel(x.diff(deg));
    ModMorphism im = image(x.diff(deg - 1));
    std::vector<Mat> bases;
    for (std::size_t v = 0; v < k.comps.size(); ++v) {
        auto sol = solve(k.comps[v], im.comps[v]);
        if (!sol) throw Error(ErrorKind::ConstructionFailed, "homology: d o d != 0");
        bases.push_back(shaped(*sol, k.src.dims[v]));
    }
    return quotient_projection(k.src, bases).tgt;
}

std::map<int, std::size_t> homology_dims(const ModComplex& x) {
    std::map<int, std::size_t> out;
    for (int i = x.lo; i <= x.hi(); ++i) {
        std::size_t here = x.term(i).dim();
        if (here == 0) continue;
        std::size_t r_out = rank(x.diff(i).total()), r_in = rank(x.diff(i - 1).total());
        if (here - r_out - r_in > 0) out[i] = here - r_out - r_in;
    }
    return out;
}

bool is_acyclic(const ModComplex& x) { return homology_dims(x).empty(); }

bool is_quasi_iso(const ModChainMap& f) { return is_acyclic(cone(f)); }

// --- complexes of projectives ----------------------------------------------

ProjComplex ProjComplex::zero(const AlgebraPtr& a) {
    ProjComplex x;
    x.alg = a;
    return x;
}

bool ProjComplex::is_zero() const {
    for (const auto& t : terms)
        if (!t.empty()) return false;
    return true;
}

std::vector<int> ProjComplex::term(int deg) const {
    if (deg < lo || deg > hi()) return {};
    return terms[static_cast<std::size_t>(deg - lo)];
}

ProjMap ProjComplex::diff(int deg) const {
    int k = deg - lo;
    if (k >= 0 && k < static_cast<int>(diffs.size())) return diffs[static_cast<std::size_t>(k)];
    return ProjMap::zero(alg, term(deg), term(deg + 1));
}

ModComplex ProjComplex::to_modules() const {
    ModComplex m;
    m.alg = alg;
    m.lo = lo;
    for (const auto& t : terms) m.terms.push_back(projective_sum(alg, t));
    for (const auto& d : diffs) m.diffs.push_back(to_morphism(alg, d));
    return m;
}

std::size_t ProjComplex::total_dim() const {
    std::size_t s = 0;
    for (const auto& t : terms)
        for (int v : t)
            for (int w = 0; w < alg->num_vertices(); ++w) s += alg->paths_between(v, w).size();
    return s;
}

Certificate ProjComplex::check() const {
    if (diffs.size() + 1 != terms.size() && !(terms.empty() && diffs.empty()))
        return Certificate::fail("differential count does not match term count");
    for (std::size_t k = 0; k + 1 < terms.size(); ++k)
        if (diffs[k].src != terms[k] || diffs[k].tgt != terms[k + 1])
            return Certificate::fail("differential shape at degree " + std::to_string(lo + static_cast<int>(k)));
    for (int i = lo; i < hi(); ++i)
        if (!compose(*alg, diff(i + 1), diff(i)).is_zero())
            return Certificate::fail("d o d != 0 at degree " + std::to_string(i));
    return Certificate::ok();
}

ProjComplex ProjComplex::trimmed() const {
    std::size_t b = 0, e = terms.size();
    while (b < e && terms[b].empty()) ++b;
    while (e > b && terms[e - 1].empty()) --e;
    if (b == e) return zero(alg);
    ProjComplex y;
    y.alg = alg;
    y.lo = lo + static_cast<int>(b);
    y.terms.assign(terms.begin() + static_cast<std::ptrdiff_t>(b), terms.begin() + static_cast<std::ptrdiff_t>(e));
    for (std::size_t k = b; k + 1 < e; ++k) y.diffs.push_back(diffs[k]);
    return y;
}

std::string ProjComplex::signature() const {
    ModComplex m = to_modules();
    std::ostringstream os;
    os << "C[";
    bool first = true;
    for (int i = lo; i <= hi(); ++i) {
        Representation h = homology(m, i);
        if (h.is_zero()) continue;
        if (!first) os << ";";
        first = false;
        os << i << ":";
        for (std::size_t v = 0; v < h.dims.size(); ++v) os << (v ? "," : "") << h.dims[v];
    }
    os << "]";
    return os.str();
}

ProjComplex shift(const ProjComplex& x, int n) {
    ProjComplex y = x;
    y.lo = x.lo - n;
    if (n % 2 != 0)
        for (auto& d : y.diffs) d = pm_scaled(d, -1);
    return y;
}

ProjComplex stalk_complex(const Representation& m, int degree) {
    if (m.is_zero()) return ProjComplex::zero(m.alg);
    ProjResolution res = proj_resolution(m);
    const std::size_t len = res.length();
    ProjComplex x;
    x.alg = m.alg;
    x.lo = degree - static_cast<int>(len);
    for (std::size_t k = 0; k <= len; ++k) x.terms.push_back(res.terms[len - k]);
    for (std::size_t k = 0; k < len; ++k) x.diffs.push_back(res.diffs[len - k - 1]);
    return x;
}

// --- chain maps ----------------------------------------------------------------

ProjMap ChainMap::at(int deg) const {
    auto it = comps.find(deg);
    if (it != comps.end()) return it->second;
    return ProjMap::zero(src.alg, src.term(deg), tgt.term(deg));
}

ChainMap ChainMap::zero(const ProjComplex& s, const ProjComplex& t) { return ChainMap{s, t, {}}; }

ChainMap ChainMap::identity(const ProjComplex& x) {
    ChainMap f{x, x, {}};
    for (int i = x.lo; i <= x.hi(); ++i) f.comps[i] = pm_identity(*x.alg, x.term(i));
    return f;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    ChainMap f = *this;
    for (const auto& [deg, c] : o.comps) f.comps[deg] = pm_add(at(deg), c);
    return f;
}

ChainMap ChainMap::scaled(const Scalar& c) const {
    ChainMap f = *this;
    for (auto& [deg, m] : f.comps) m = pm_scaled(m, c);
    return f;
}

Certificate ChainMap::check() const {
    const auto& a = *src.alg;
    int lo = std::min(src.lo, tgt.lo) - 1, hi = std::max(src.hi(), tgt.hi()) + 1;
    for (int i = lo; i <= hi; ++i) {
        ProjMap lhs = compose(a, tgt.diff(i), at(i));
        ProjMap rhs = compose(a, at(i + 1), src.diff(i));
        if (!pm_equal(lhs, rhs)) return Certificate::fail("square at degree " + std::to_string(i) + " does not commute");
    }
    return Certificate::ok();
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    ChainMap h{f.src, g.tgt, {}};
    for (int i = f.src.lo; i <= f.src.hi(); ++i) {
        if (g.tgt.term(i).empty() || f.src.term(i).empty()) continue;
        h.comps[i] = compose(*f.src.alg, g.at(i), f.at(i));
    }
    return h;
}

ChainMap shift(const ChainMap& f, int n) {
    ChainMap g{shift(f.src, n), shift(f.tgt, n), {}};
    for (const auto& [deg, c] : f.comps) g.comps[deg - n] = c;
    return g;
}

namespace {

std::vector<int> concat_terms(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

/// Block ProjMap; blocks[i][j] : srcs[j] -> tgts[i].
ProjMap block_projmap(const BoundQuiverAlgebra& a, const std::vector<std::vector<int>>& srcs,
                      const std::vector<std::vector<int>>& tgts, const std::vector<std::vector<ProjMap>>& blocks) {
    ProjMap out;
    for (const auto& s : srcs) out.src = concat_terms(out.src, s);
    for (const auto& t : tgts) out.tgt = concat_terms(out.tgt, t);
    out.entries.assign(out.tgt.size(), std::vector<Vec>(out.src.size(), Vec(a.dim())));
    std::size_t r0 = 0;
    for (std::size_t i = 0; i < tgts.size(); ++i) {
        std::size_t c0 = 0;
        for (std::size_t j = 0; j < srcs.size(); ++j) {
            for (std::size_t r = 0; r < tgts[i].size(); ++r)
                for (std::size_t c = 0; c < srcs[j].size(); ++c) out.entries[r0 + r][c0 + c] = blocks[i][j].entries[r][c];
            c0 += srcs[j].size();
        }
        r0 += tgts[i].size();
    }
    return out;
}

/// Inverse of a unit of the local algebra e_v A e_v.
Vec local_inverse(const BoundQuiverAlgebra& a, int v, const Vec& u) {
    const std::size_t e = a.trivial_index(v);
    Scalar lambda = u[e];
    Vec n = u;
    n[e] = 0;
    Vec m = scaled(n, Scalar(-1) / lambda);
    Vec acc = a.basis_vector(e), term = acc;
    for (std::size_t k = 0; k <= a.dim(); ++k) {
        term = a.multiply(term, m);
        if (is_zero(term)) break;
        acc = add(acc, term);
    }
    return scaled(acc, Scalar(1) / lambda);
}

}  // namespace

ProjComplex cone(const ChainMap& f) {
    const ProjComplex& x = f.src;
    const ProjComplex& y = f.tgt;
    const AlgebraPtr& a = x.alg;
    if (x.is_zero() && y.is_zero()) return ProjComplex::zero(a);
    int lo = std::min(x.lo - 1, y.lo), hi = std::max(x.hi() - 1, y.hi());
    if (x.is_zero()) lo = y.lo, hi = y.hi();
    if (y.is_zero()) lo = x.lo - 1, hi = x.hi() - 1;
    ProjComplex c;
    c.alg = a;
    c.lo = lo;
    for (int i = lo; i <= hi; ++i) c.terms.push_back(concat_terms(x.term(i + 1), y.term(i)));
    for (int i = lo; i < hi; ++i) {
        std::vector<std::vector<int>> s{x.term(i + 1), y.term(i)}, t{x.term(i + 2), y.term(i + 1)};
        std::vector<std::vector<ProjMap>> blocks{
            {pm_scaled(x.diff(i + 1), -1), ProjMap::zero(a, s[1], t[0])},
            {f.at(i + 1), y.diff(i)}};
        c.diffs.push_back(block_projmap(*a, s, t, blocks));
    }
    return c.trimmed();
}

ProjComplex minimize(const ProjComplex& input) {
    ProjComplex x = input.trimmed();
    const auto& a = *x.alg;
    for (;;) {
        bool found = false;
        for (std::size_t k = 0; k < x.diffs.size() && !found; ++k) {
            const ProjMap& d = x.diffs[k];
            for (std::size_t r = 0; r < d.tgt.size() && !found; ++r)
                for (std::size_t c = 0; c < d.src.size() && !found; ++c) {
                    if (d.tgt[r] != d.src[c] || sgn(d.entries[r][c][a.trivial_index(d.src[c])]) == 0) continue;
                    found = true;
                    Vec dinv = local_inverse(a, d.src[c], d.entries[r][c]);
                    // d' = alpha - beta delta^{-1} gamma on the complement of (r, c)
                    ProjMap nd;
                    for (std::size_t j = 0; j < d.src.size(); ++j)
                        if (j != c) nd.src.push_back(d.src[j]);
                    for (std::size_t i = 0; i < d.tgt.size(); ++i)
                        if (i != r) nd.tgt.push_back(d.tgt[i]);
                    for (std::size_t i = 0; i < d.tgt.size(); ++i) {
                        if (i == r) continue;
                        std::vector<Vec> row;
                        Vec bd = a.multiply(d.entries[i][c], dinv);
                        for (std::size_t j = 0; j < d.src.size(); ++j) {
                            if (j == c) continue;
                            row.push_back(sub(d.entries[i][j], a.multiply(bd, d.entries[r][j])));
                        }
                        nd.entries.push_back(std::move(row));
                    }
                    if (k > 0) {
                        ProjMap& prev = x.diffs[k - 1];
                        prev.tgt.erase(prev.tgt.begin() + static_cast<std::ptrdiff_t>(c));
                        prev.entries.erase(prev.entries.begin() + static_cast<std::ptrdiff_t>(c));
                    }
                    if (k + 1 < x.diffs.size()) {
                        ProjMap& next = x.diffs[k + 1];
                        next.src.erase(next.src.begin() + static_cast<std::ptrdiff_t>(r));
                        for (auto& row : next.entries) row.erase(row.begin() + static_cast<std::ptrdiff_t>(r));
                    }
                    x.terms[k].erase(x.terms[k].begin() + static_cast<std::ptrdiff_t>(c));
                    x.terms[k + 1].erase(x.terms[k + 1].begin() + static_cast<std::ptrdiff_t>(r));
                    x.diffs[k] = std::move(nd);
                }
        }
        if (!found) break;
    }
    return x.trimmed();
}

ProjComplex direct_sum(const std::vector<ProjComplex>& xs, const AlgebraPtr& a) {
    std::vector<const ProjComplex*> live;
    for (const auto& x : xs)
        if (!x.is_zero()) live.push_back(&x);
    if (live.empty()) return ProjComplex::zero(a);
    int lo = live.front()->lo, hi = live.front()->hi();
    for (auto* x : live) lo = std::min(lo, x->lo), hi = std::max(hi, x->hi());
    ProjComplex s;
    s.alg = a;
    s.lo = lo;
    for (int i = lo; i <= hi; ++i) {
        std::vector<int> t;
        for (auto* x : live) t = concat_terms(t, x->term(i));
        s.terms.push_back(t);
    }
    for (int i = lo; i < hi; ++i) {
        std::vector<std::vector<int>> srcs, tgts;
        for (auto* x : live) srcs.push_back(x->term(i)), tgts.push_back(x->term(i + 1));
        std::vector<std::vector<ProjMap>> blocks(live.size());
        for (std::size_t p = 0; p < live.size(); ++p)
            for (std::size_t q = 0; q < live.size(); ++q)
                blocks[p].push_back(p == q ? live[p]->diff(i) : ProjMap::zero(a, srcs[q], tgts[p]));
        s.diffs.push_back(block_projmap(*a, srcs, tgts, blocks));
    }
    return s;
}

ChainMap block_chain_map(const std::vector<ProjComplex>& srcs, const std::vector<ProjComplex>& tgts,
                         const std::vector<std::vector<ChainMap>>& grid) {
    const AlgebraPtr& a = !srcs.empty() ? srcs.front().alg : tgts.front().alg;
    ChainMap f{direct_sum(srcs, a), direct_sum(tgts, a), {}};
    for (int i = f.src.lo; i <= f.src.hi(); ++i) {
        if (f.src.term(i).empty() || f.tgt.term(i).empty()) continue;
        std::vector<std::vector<int>> st, tt;
        for (const auto& s : srcs) st.push_back(s.is_zero() ? std::vector<int>{} : s.term(i));
        for (const auto& t : tgts) tt.push_back(t.is_zero() ? std::vector<int>{} : t.term(i));
        std::vector<std::vector<ProjMap>> blocks(tgts.size());
        for (std::size_t p = 0; p < tgts.size(); ++p)
            for (std::size_t q = 0; q < srcs.size(); ++q) {
                ProjMap b = grid[p][q].at(i);
                if (b.src != st[q] || b.tgt != tt[p]) b = ProjMap::zero(a, st[q], tt[p]);
                blocks[p].push_back(b);
            }
        f.comps[i] = block_projmap(*a, st, tt, blocks);
    }
    return f;
}

// --- projective replacement ------------------------------------------------------

ProjReplacement proj_replace(const ModComplex& x, std::size_t cap) {
    const AlgebraPtr& a = x.alg;
    std::map<int, std::vector<int>> terms;
    std::map<int, ProjMap> diffs;  // deg -> deg+1
    std::map<int, ModMorphism> quasi;
    auto pterm = [&](int deg) { return terms.count(deg) ? terms[deg] : std::vector<int>{}; };
    auto pdiff = [&](int deg) { return diffs.count(deg) ? diffs[deg] : ProjMap::zero(a, pterm(deg), pterm(deg + 1)); };
    auto pquasi = [&](int deg) {
        return quasi.count(deg) ? quasi[deg] : ModMorphism::zero(projective_sum(a, pterm(deg)), x.term(deg));
    };

    std::size_t below = 0;
    for (int i = x.hi();; --i) {
        if (i < x.lo) {
            if (++below > cap) throw Error(ErrorKind::ExceedsBound, "projective replacement exceeds cap");
        }
        // cone(p)^i = P^{i+1} + M^i  ->  cone(p)^{i+1} = P^{i+2} + M^{i+1}
        std::vector<Representation> ci{projective_sum(a, pterm(i + 1)), x.term(i)};
        std::vector<Representation> cn{projective_sum(a, pterm(i + 2)), x.term(i + 1)};
        std::vector<std::vector<ModMorphism>> grid{
            {to_morphism(a, pdiff(i + 1)).scaled(-1), ModMorphism::zero(ci[1], cn[0])},
            {pquasi(i + 1), x.diff(i)}};
        ModMorphism dc = block_morphism(ci, cn, grid);
        ModMorphism z = kernel(dc);
        if (z.src.is_zero()) {
            if (i < x.lo) break;
            continue;
        }
        // boundaries coming from M^{i-1}
        Representation mprev = x.term(i - 1);
        std::vector<std::vector<ModMorphism>> bgrid{{ModMorphism::zero(mprev, ci[0])}, {x.diff(i - 1)}};
        ModMorphism b = image(block_morphism({mprev}, ci, bgrid));
        std::vector<Mat> bases;
        for (std::size_t v = 0; v < z.comps.size(); ++v) {
            auto sol = solve(z.comps[v], b.comps[v]);
            if (!sol) throw Error(ErrorKind::ConstructionFailed, "proj_replace: boundary outside cycles");
            bases.push_back(sol->rows() == z.src.dims[v] ? *sol : Mat(z.src.dims[v], 0));
        }
        ModMorphism q = quotient_projection(z.src, bases);
        ProjectiveCover cov = projective_cover(q.tgt);
        if (cov.vertices.empty()) {
            if (i < x.lo) break;
            continue;
        }
        Representation c = direct_sum(ci, a);
        std::vector<Representation> ps;
        std::vector<std::vector<ModMorphism>> ggrid(1);
        for (std::size_t j = 0; j < cov.vertices.size(); ++j) {
            const int v = cov.vertices[j];
            const auto vi = static_cast<std::size_t>(v);
            std::size_t col = 0;
            for (std::size_t k = 0; k < j; ++k) col += a->paths_between(cov.vertices[k], v).size();
            col += a->local_position(a->trivial_index(v));
            Vec y = cov.map.comps[vi].column(col);
            auto zc = solve(q.comps[vi], y);
            Vec cv = z.comps[vi] * *zc;
            Vec total(c.dim());
            for (std::size_t r = 0; r < cv.size(); ++r) total[c.offset(v) + r] = cv[r];
            ps.push_back(projective(a, v));
            ggrid[0].push_back(from_projective(c, v, total));
        }
        ModMorphism g = block_morphism(ps, {c}, ggrid);
        ModMorphism first = compose(sum_projection(ci, 0), g), second = compose(sum_projection(ci, 1), g);
        terms[i] = cov.vertices;
        diffs[i] = to_projmap(a, cov.vertices, pterm(i + 1), first.scaled(-1));
        quasi[i] = second;
    }

    ProjReplacement out;
    out.complex.alg = a;
    if (terms.empty()) return out;
    int lo = terms.begin()->first, hi = terms.rbegin()->first;
    out.complex.lo = lo;
    for (int i = lo; i <= hi; ++i) out.complex.terms.push_back(pterm(i));
    for (int i = lo; i < hi; ++i) out.complex.diffs.push_back(pdiff(i));
    out.quasi = quasi;
    ProjComplex t = out.complex.trimmed();
    if (t.lo != out.complex.lo || t.terms.size() != out.complex.terms.size()) out.complex = t;
    return out;
}

}  // namespace dhom
