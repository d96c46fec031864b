#include "dhom/derived.hpp"

#include "projmap_ops.hpp"

#include <algorithm>

namespace dhom {

using detail::pm_add;
using detail::pm_scaled;

namespace {

/// Coordinates of graded maps x^i -> y^{i+k}: one coordinate per residue path per matrix entry.
struct Layout {
    struct Coord {
        int deg;
        std::size_t r, c, idx;
    };
    const ProjComplex* x = nullptr;
    const ProjComplex* y = nullptr;
    int k = 0;
    std::vector<Coord> coords;

    Layout(const ProjComplex& xs, const ProjComplex& ys, int shift) : x(&xs), y(&ys), k(shift) {
        if (xs.is_zero() || ys.is_zero()) return;
        const auto& a = *xs.alg;
        for (int i = xs.lo; i <= xs.hi(); ++i) {
            auto s = xs.term(i), t = ys.term(i + k);
            for (std::size_t r = 0; r < t.size(); ++r)
                for (std::size_t c = 0; c < s.size(); ++c)
                    for (std::size_t p : a.paths_between(t[r], s[c])) coords.push_back({i, r, c, p});
        }
    }
    std::size_t size() const { return coords.size(); }

    std::map<int, ProjMap> unflatten(const Vec& v) const {
        std::map<int, ProjMap> out;
        for (std::size_t n = 0; n < coords.size(); ++n) {
            if (sgn(v[n]) == 0) continue;
            const auto& co = coords[n];
            auto it = out.find(co.deg);
            if (it == out.end())
                it = out.emplace(co.deg, ProjMap::zero(x->alg, x->term(co.deg), y->term(co.deg + k))).first;
            it->second.entries[co.r][co.c][co.idx] += v[n];
        }
        return out;
    }

    Vec flatten(const std::map<int, ProjMap>& m) const {
        Vec v(coords.size());
        for (std::size_t n = 0; n < coords.size(); ++n) {
            const auto& co = coords[n];
            auto it = m.find(co.deg);
            if (it == m.end()) continue;
            if (co.r >= it->second.tgt.size() || co.c >= it->second.src.size()) continue;
            v[n] = it->second.entries[co.r][co.c][co.idx];
        }
        return v;
    }
};

ProjMap get(const std::map<int, ProjMap>& m, int deg, const AlgebraPtr& a, const std::vector<int>& s,
            const std::vector<int>& t) {
    auto it = m.find(deg);
    return it == m.end() ? ProjMap::zero(a, s, t) : it->second;
}

}  // namespace

HomSpace::HomSpace(const ProjComplex& x, const ProjComplex& y) : x_(x), y_(y) {
    Layout l0(x_, y_, 0), l1(x_, y_, 1), lm(x_, y_, -1);
    if (l0.size() == 0) return;
    const AlgebraPtr& alg = x_.alg;
    const auto& a = *alg;
    // D f = d_y f - f d_x, as a map from degree-0 to degree-1 coordinates.
    Mat dmat(l1.size(), l0.size());
    for (std::size_t n = 0; n < l0.size(); ++n) {
        Vec e(l0.size());
        e[n] = 1;
        auto f = l0.unflatten(e);
        std::map<int, ProjMap> df;
        int i = l0.coords[n].deg;
        for (int deg : {i - 1, i}) {
            auto s = x_.term(deg), t = y_.term(deg + 1);
            if (s.empty() || t.empty()) continue;
            ProjMap lhs = compose(a, y_.diff(deg), get(f, deg, alg, s, y_.term(deg)));
            ProjMap rhs = compose(a, get(f, deg + 1, alg, x_.term(deg + 1), t), x_.diff(deg));
            df[deg] = pm_add(lhs, pm_scaled(rhs, -1));
        }
        Vec col = l1.flatten(df);
        for (std::size_t r = 0; r < col.size(); ++r) dmat(r, n) = col[r];
    }
    // N h = d_y h + h d_x, from degree -1 to degree 0 coordinates.
    Mat nmat(l0.size(), lm.size());
    for (std::size_t n = 0; n < lm.size(); ++n) {
        Vec e(lm.size());
        e[n] = 1;
        auto h = lm.unflatten(e);
        std::map<int, ProjMap> nh;
        int i = lm.coords[n].deg;
        for (int deg : {i - 1, i}) {
            auto s = x_.term(deg), t = y_.term(deg);
            if (s.empty() || t.empty()) continue;
            ProjMap lhs = compose(a, y_.diff(deg - 1), get(h, deg, alg, s, y_.term(deg - 1)));
            ProjMap rhs = compose(a, get(h, deg + 1, alg, x_.term(deg + 1), t), x_.diff(deg));
            nh[deg] = pm_add(lhs, rhs);
        }
        Vec col = l0.flatten(nh);
        for (std::size_t r = 0; r < col.size(); ++r) nmat(r, n) = col[r];
    }
    std::vector<Vec> cycles = l1.size() ? kernel_basis(dmat) : kernel_basis(Mat(0, l0.size()));
    Mat acc = column_space(nmat);
    if (acc.rows() != l0.size()) acc = Mat(l0.size(), 0);
    Mat chosen(l0.size(), 0);
    std::size_t r = rank(acc);
    for (const auto& z : cycles) {
        Mat trial = hcat(acc, Mat::from_columns(l0.size(), {z}));
        std::size_t r2 = rank(trial);
        if (r2 > r) {
            acc = trial;
            r = r2;
            chosen = hcat(chosen, Mat::from_columns(l0.size(), {z}));
            basis_.push_back(ChainMap{x_, y_, l0.unflatten(z)});
        }
    }
    solve_mat_ = hcat(chosen, column_space(nmat).rows() == l0.size() ? column_space(nmat) : Mat(l0.size(), 0));
}

Vec HomSpace::coordinates(const ChainMap& f) const {
    if (basis_.empty()) return {};
    Layout l0(x_, y_, 0);
    Vec v = l0.flatten(f.comps);
    auto sol = solve(solve_mat_, v);
    if (!sol) throw Error(ErrorKind::InvalidArgument, "HomSpace::coordinates: not a chain map");
    return Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(basis_.size()));
}

bool HomSpace::is_null_homotopic(const ChainMap& f) const {
    if (basis_.empty()) return true;
    return is_zero(coordinates(f));
}

std::size_t hyper_hom(const ProjComplex& x, const ProjComplex& y, int n) { return HomSpace(x, shift(y, n)).dim(); }

std::vector<int> hom_window(const ProjComplex& x, const ProjComplex& y) {
    std::vector<int> out;
    if (x.is_zero() || y.is_zero()) return out;
    for (int n = y.lo - x.hi(); n <= y.hi() - x.lo; ++n) out.push_back(n);
    return out;
}

Scalar total_trace(const ChainMap& f) {
    const auto& a = *f.src.alg;
    Scalar t = 0;
    for (const auto& [deg, m] : f.comps)
        for (std::size_t j = 0; j < m.src.size() && j < m.tgt.size(); ++j)
            if (m.src[j] == m.tgt[j]) t += detail::trace_on_projective(a, m.src[j], m.entries[j][j]);
    return t;
}

namespace {

Mat gram(const std::vector<ChainMap>& basis) {
    Mat g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = total_trace(compose(basis[i], basis[j]));
    return g;
}

std::vector<ChainMap> end_radical(const ProjComplex& g) {
    HomSpace e(g, g);
    std::vector<ChainMap> out;
    for (const auto& c : kernel_basis(gram(e.basis()))) {
        ChainMap f = ChainMap::zero(g, g);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (sgn(c[k]) != 0) f = f + e.basis()[k].scaled(c[k]);
        out.push_back(f);
    }
    return out;
}

}  // namespace

bool is_local(const ProjComplex& x) {
    if (x.is_zero()) return false;
    HomSpace e(x, x);
    return rank(gram(e.basis())) == 1;
}

std::size_t multiplicity(const ProjComplex& g, const ProjComplex& x) {
    HomSpace in(g, x), out(x, g);
    if (in.dim() == 0 || out.dim() == 0) return 0;
    Mat p(out.dim(), in.dim());
    for (std::size_t l = 0; l < out.dim(); ++l)
        for (std::size_t k = 0; k < in.dim(); ++k) p(l, k) = total_trace(compose(out.basis()[l], in.basis()[k]));
    return rank(p);
}

bool is_isomorphic(const ProjComplex& x, const ProjComplex& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    if (x.total_dim() != y.total_dim()) return false;
    if (!is_local(x)) throw Error(ErrorKind::InvalidArgument, "is_isomorphic expects an indecomposable complex");
    return multiplicity(x, y) == 1;
}

std::vector<std::pair<std::size_t, int>> relevant_shifts(const DerivedSubcat& s, const ProjComplex& x) {
    std::vector<std::pair<std::size_t, int>> out;
    if (x.is_zero()) return out;
    for (std::size_t j = 0; j < s.gens.size(); ++j) {
        const auto& g = s.gens[j];
        if (g.is_zero()) continue;
        for (int n = g.lo - x.hi(); n <= g.hi() - x.lo; ++n)
            if (n % s.step == 0) out.emplace_back(j, n);
    }
    return out;
}

std::optional<std::vector<std::pair<std::pair<std::size_t, int>, std::size_t>>> decompose_in(
    const DerivedSubcat& s, const ProjComplex& input) {
    ProjComplex x = minimize(input);
    std::vector<std::pair<std::pair<std::size_t, int>, std::size_t>> out;
    std::size_t acc = 0;
    for (const auto& [j, n] : relevant_shifts(s, x)) {
        ProjComplex g = shift(s.gens[j], n);
        if (g.lo < x.lo || g.hi() > x.hi()) continue;
        std::size_t m = multiplicity(g, x);
        if (m == 0) continue;
        out.push_back({{j, n}, m});
        acc += m * g.total_dim();
    }
    if (acc != x.total_dim()) return std::nullopt;
    return out;
}

bool contains(const DerivedSubcat& s, const ProjComplex& x) { return decompose_in(s, x).has_value(); }

std::vector<std::size_t> perp(PerpSide side, const DerivedSubcat& s, const DerivedSubcat& candidates) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < candidates.gens.size(); ++c) {
        const auto& x = candidates.gens[c];
        bool ok = true;
        for (const auto& g : s.gens) {
            if (!ok) break;
            if (side == PerpSide::Left) {
                for (int n : hom_window(x, g))
                    if (n % s.step == 0 && hyper_hom(x, g, n) != 0) {
                        ok = false;
                        break;
                    }
            } else {
                for (int n : hom_window(g, x))
                    if (n % s.step == 0 && hyper_hom(g, x, n) != 0) {
                        ok = false;
                        break;
                    }
            }
        }
        if (ok) out.push_back(c);
    }
    return out;
}

namespace {

struct ShiftedGen {
    std::size_t gen;
    int n;
    ProjComplex complex;
};

std::vector<ShiftedGen> shifted_gens(const DerivedSubcat& s, const ProjComplex& x) {
    std::vector<ShiftedGen> out;
    for (const auto& [j, n] : relevant_shifts(s, x)) out.push_back({j, n, shift(s.gens[j], n)});
    return out;
}

/// Chooses a basis of the quotient of `space` (a HomSpace basis) by the span of `rad`.
std::vector<std::size_t> top_choice(const HomSpace& space, const std::vector<ChainMap>& rad) {
    const std::size_t n = space.dim();
    Mat acc(n, 0);
    for (const auto& r : rad) acc = hcat(acc, Mat::from_columns(n, {space.coordinates(r)}));
    acc = column_space(acc);
    if (acc.rows() != n) acc = Mat(n, 0);
    std::vector<std::size_t> out;
    std::size_t rk = rank(acc);
    for (std::size_t k = 0; k < n; ++k) {
        Vec e(n);
        e[k] = 1;
        Mat trial = hcat(acc, Mat::from_columns(n, {e}));
        std::size_t r2 = rank(trial);
        if (r2 > rk) {
            acc = trial;
            rk = r2;
            out.push_back(k);
        }
    }
    return out;
}

}  // namespace

DerivedApproximation right_approx(const ProjComplex& x, const DerivedSubcat& s) {
    auto gs = shifted_gens(s, x);
    std::vector<HomSpace> into;
    std::vector<std::vector<ChainMap>> rads;
    for (const auto& g : gs) {
        into.emplace_back(g.complex, x);
        rads.push_back(end_radical(g.complex));
    }
    DerivedApproximation out;
    std::vector<ProjComplex> srcs;
    std::vector<std::vector<ChainMap>> grid(1);
    for (std::size_t p = 0; p < gs.size(); ++p) {
        if (into[p].dim() == 0) continue;
        std::vector<ChainMap> rad;
        for (std::size_t q = 0; q < gs.size(); ++q) {
            if (into[q].dim() == 0) continue;
            std::vector<ChainMap> rho;
            if (q == p)
                rho = rads[p];
            else
                rho = HomSpace(gs[p].complex, gs[q].complex).basis();
            for (const auto& r : rho)
                for (const auto& alpha : into[q].basis()) rad.push_back(compose(alpha, r));
        }
        for (std::size_t k : top_choice(into[p], rad)) {
            srcs.push_back(gs[p].complex);
            grid[0].push_back(into[p].basis()[k]);
            out.summands.emplace_back(gs[p].gen, gs[p].n);
        }
    }
    if (srcs.empty()) {
        out.map = ChainMap::zero(ProjComplex::zero(x.alg), x);
        return out;
    }
    out.map = block_chain_map(srcs, {x}, grid);
    return out;
}

DerivedApproximation left_approx(const ProjComplex& x, const DerivedSubcat& s) {
    auto gs = shifted_gens(s, x);
    std::vector<HomSpace> from;
    std::vector<std::vector<ChainMap>> rads;
    for (const auto& g : gs) {
        from.emplace_back(x, g.complex);
        rads.push_back(end_radical(g.complex));
    }
    DerivedApproximation out;
    std::vector<ProjComplex> tgts;
    std::vector<std::vector<ChainMap>> grid;
    for (std::size_t p = 0; p < gs.size(); ++p) {
        if (from[p].dim() == 0) continue;
        std::vector<ChainMap> rad;
        for (std::size_t q = 0; q < gs.size(); ++q) {
            if (from[q].dim() == 0) continue;
            std::vector<ChainMap> rho;
            if (q == p)
                rho = rads[p];
            else
                rho = HomSpace(gs[q].complex, gs[p].complex).basis();
            for (const auto& r : rho)
                for (const auto& alpha : from[q].basis()) rad.push_back(compose(r, alpha));
        }
        for (std::size_t k : top_choice(from[p], rad)) {
            tgts.push_back(gs[p].complex);
            grid.push_back({from[p].basis()[k]});
            out.summands.emplace_back(gs[p].gen, gs[p].n);
        }
    }
    if (tgts.empty()) {
        out.map = ChainMap::zero(x, ProjComplex::zero(x.alg));
        return out;
    }
    out.map = block_chain_map({x}, tgts, grid);
    return out;
}

}  // namespace dhom
