#include "dhom/modcat.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>

namespace dhom {

Vec coordinates(const std::vector<ModMorphism>& basis, const ModMorphism& f) {
    Vec target = f.flatten();
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(b.flatten());
    auto x = solve(Mat::from_columns(target.size(), cols), target);
    if (!x) throw Error(ErrorKind::ConstructionFailed, "morphism is not in the span of the given basis");
    return *x;
}

EndoAlgebra endo_structure_algebra(const Representation& m) {
    EndoAlgebra out;
    out.basis = hom_basis(m, m);
    const std::size_t n = out.basis.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i + 1));
    std::vector<Vec> table;
    std::vector<Vec> cols;
    for (const auto& b : out.basis) cols.push_back(b.flatten());
    std::size_t len = 0;
    for (auto d : m.dims) len += d * d;
    Mat basis_mat = Mat::from_columns(len, cols);
    auto coords = [&](const ModMorphism& f) {
        auto x = solve(basis_mat, f.flatten());
        if (!x) throw Error(ErrorKind::ConstructionFailed, "endomorphism outside End basis");
        return *x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.push_back(coords(compose(out.basis[i], out.basis[j])));
    Vec unit = n ? coords(ModMorphism::identity(m)) : Vec{};
    out.algebra = StructureAlgebra(std::move(labels), std::move(table), std::move(unit));
    return out;
}

namespace {

/// tr(g o f) for f: x -> y, g: y -> x.
Scalar trace_of_composite(const ModMorphism& g, const ModMorphism& f) {
    Scalar t;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        const Mat& a = g.comps[v];
        const Mat& b = f.comps[v];
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (sgn(a(r, c)) != 0 && sgn(b(c, r)) != 0) t += a(r, c) * b(c, r);
    }
    return t;
}

}  // namespace

std::vector<ModMorphism> end_radical(const Representation& m) {
    auto basis = hom_basis(m, m);
    const std::size_t n = basis.size();
    Mat form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) form(i, j) = trace_of_composite(basis[i], basis[j]);
    std::vector<ModMorphism> out;
    for (const auto& x : kernel_basis(form.transpose())) {
        ModMorphism f = ModMorphism::zero(m, m);
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(x[i]) != 0) f = f + basis[i].scaled(x[i]);
        out.push_back(std::move(f));
    }
    return out;
}

bool is_local(const Representation& m) {
    if (m.is_zero()) return false;
    return hom_dim(m, m) == end_radical(m).size() + 1;
}

std::size_t multiplicity(const Representation& x, const Representation& m) {
    if (x.is_zero() || m.is_zero()) return 0;
    auto fs = hom_basis(x, m);
    auto gs = hom_basis(m, x);
    if (fs.empty() || gs.empty()) return 0;
    // With End(x) local and End(x)/rad = k, the class of y modulo rad is tr(y)/dim x.
    Mat pairing(gs.size(), fs.size());
    for (std::size_t l = 0; l < gs.size(); ++l)
        for (std::size_t k = 0; k < fs.size(); ++k) pairing(l, k) = trace_of_composite(gs[l], fs[k]);
    return rank(pairing);
}

namespace {

/// Monic minimal polynomial of a block-diagonal endomorphism, lowest degree first.
Vec minimal_polynomial(const std::vector<Mat>& blocks) {
    std::vector<Vec> powers;
    std::vector<Mat> cur;
    for (const auto& b : blocks) cur.push_back(Mat::identity(b.rows()));
    auto flat = [](const std::vector<Mat>& ms) {
        Vec v;
        for (const auto& m : ms)
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
        return v;
    };
    while (true) {
        Vec f = flat(cur);
        if (!powers.empty()) {
            auto x = solve(Mat::from_columns(f.size(), powers), f);
            if (x) {
                Vec poly(powers.size() + 1);
                for (std::size_t i = 0; i < powers.size(); ++i) poly[i] = -(*x)[i];
                poly[powers.size()] = 1;
                return poly;
            }
        }
        powers.push_back(f);
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = blocks[i] * cur[i];
    }
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    if (n == 0 || n > mpz_class("1000000000000")) return out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    return out;
}

std::vector<Scalar> rational_roots(const Vec& poly) {
    mpz_class l = 1;
    for (const auto& c : poly) l = lcm(l, c.get_den());
    std::vector<mpz_class> z;
    for (const auto& c : poly) z.push_back(mpz_class(c * l));
    std::vector<Scalar> roots;
    std::size_t lo = 0;
    while (lo < z.size() && z[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(0);
    if (lo + 1 >= z.size()) return roots;
    auto eval = [&](const Scalar& x) {
        Scalar acc;
        for (std::size_t i = z.size(); i-- > lo;) acc = acc * x + Scalar(z[i]);
        return acc;
    };
    for (const auto& p : divisors(z[lo]))
        for (const auto& q : divisors(z.back()))
            for (int s : {1, -1}) {
                Scalar cand(p * s, q);
                cand.canonicalize();
                if (sgn(eval(cand)) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    return roots;
}

/// Splits m = ker g^N + im g^N for some endomorphism g, if a nontrivial splitting exists.
std::optional<std::pair<ModMorphism, ModMorphism>> try_split(const Representation& m, const std::vector<Mat>& f) {
    Vec poly = minimal_polynomial(f);
    for (const auto& lambda : rational_roots(poly)) {
        std::vector<Mat> kers, ims;
        std::size_t kdim = 0, idim = 0;
        for (std::size_t v = 0; v < f.size(); ++v) {
            const std::size_t n = f[v].rows();
            Mat g = f[v] - Mat::identity(n).scaled(lambda);
            Mat p = Mat::identity(n);
            for (std::size_t k = 0; k < n; ++k) p = g * p;
            Mat kb = kernel_matrix(p);
            if (kb.rows() != n) kb = Mat(n, 0);
            Mat ib = column_space(p);
            if (ib.rows() != n) ib = Mat(n, 0);
            kdim += kb.cols();
            idim += ib.cols();
            kers.push_back(std::move(kb));
            ims.push_back(std::move(ib));
        }
        if (kdim > 0 && idim > 0) return std::make_pair(submodule_inclusion(m, kers), submodule_inclusion(m, ims));
    }
    return std::nullopt;
}

/// Deterministic sequence of endomorphisms to try: basis elements, then small combinations.
std::vector<std::vector<Mat>> split_candidates(const std::vector<ModMorphism>& basis) {
    std::vector<std::vector<Mat>> out;
    for (const auto& b : basis) out.push_back(b.comps);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (int c : {1, 2, -1}) out.push_back((basis[i] + basis[j].scaled(c)).comps);
    ModMorphism mix = ModMorphism::zero(basis.front().src, basis.front().tgt);
    for (std::size_t i = 0; i < basis.size(); ++i) mix = mix + basis[i].scaled(static_cast<long>(i * i + 1));
    out.push_back(mix.comps);
    return out;
}

void split_fully(const ModMorphism& incl, std::vector<ModMorphism>& pieces) {
    const Representation& m = incl.src;
    if (m.is_zero()) return;
    auto basis = hom_basis(m, m);
    if (basis.size() == end_radical(m).size() + 1) {
        pieces.push_back(incl);
        return;
    }
    for (const auto& f : split_candidates(basis)) {
        if (auto parts = try_split(m, f)) {
            split_fully(compose(incl, parts->first), pieces);
            split_fully(compose(incl, parts->second), pieces);
            return;
        }
    }
    throw Error(ErrorKind::UnsupportedAlgebraClass,
                "no rational splitting idempotent found; endomorphism ring is not split over Q");
}

bool dims_less(const Representation& a, const Representation& b) { return a.dims < b.dims; }

}  // namespace

Decomposition decompose(const Representation& m) {
    std::vector<ModMorphism> pieces;
    split_fully(ModMorphism::identity(m), pieces);
    std::vector<std::vector<ModMorphism>> classes;
    for (auto& p : pieces) {
        bool placed = false;
        for (auto& cls : classes) {
            const Representation& rep = cls.front().src;
            if (rep.dims == p.src.dims && multiplicity(rep, p.src) > 0) {
                cls.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({p});
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return dims_less(a.front().src, b.front().src); });
    Decomposition out;
    for (auto& cls : classes) {
        out.parts.emplace_back(cls.front().src, cls.size());
        for (auto& p : cls) out.inclusions.push_back(p);
    }
    return out;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
    if (m.dims != n.dims) return false;
    if (m.is_zero()) return true;
    if (is_local(m)) return multiplicity(m, n) > 0;
    auto dm = decompose(m);
    for (const auto& [x, k] : dm.parts)
        if (multiplicity(x, n) != k) return false;
    return true;
}

std::size_t default_dim_cap() {
    if (const char* env = std::getenv("DHOM_DIM_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return 64;
}

namespace {

std::vector<Representation> nakayama_indecomposables(const AlgebraPtr& a, std::size_t cap) {
    std::vector<Representation> out;
    for (int v = 0; v < a->num_vertices(); ++v) {
        Representation p = projective(a, v);
        if (p.dim() > cap) throw Error(ErrorKind::NotRepresentationFinite, "projective exceeds the dimension cap");
        std::size_t longest = 0;
        for (std::size_t i = 0; i < a->dim(); ++i)
            if (a->basis()[i].start == v) longest = std::max(longest, a->basis()[i].length());
        for (std::size_t j = 1; j <= longest + 1; ++j) {
            // rad^j P_v: paths from v of length >= j
            std::vector<Mat> bases;
            for (int w = 0; w < a->num_vertices(); ++w) {
                const auto& ps = a->paths_between(v, w);
                std::vector<Vec> cols;
                for (std::size_t k = 0; k < ps.size(); ++k)
                    if (a->basis()[ps[k]].length() >= j) {
                        Vec e(ps.size());
                        e[k] = 1;
                        cols.push_back(std::move(e));
                    }
                bases.push_back(Mat::from_columns(ps.size(), cols));
            }
            out.push_back(quotient_projection(p, bases).tgt);
        }
    }
    return out;
}

std::vector<Representation> knitted_indecomposables(const AlgebraPtr& a, std::size_t cap) {
    std::vector<Representation> found;
    std::deque<std::size_t> queue;
    auto add = [&](const Representation& x) {
        if (x.is_zero()) return;
        if (x.dim() > cap) throw Error(ErrorKind::NotRepresentationFinite, "indecomposable exceeds the dimension cap");
        for (const auto& y : found)
            if (y.dims == x.dims && multiplicity(y, x) > 0) return;
        found.push_back(x);
        queue.push_back(found.size() - 1);
        if (found.size() > 4 * cap) throw Error(ErrorKind::NotRepresentationFinite, "too many indecomposables");
    };
    for (int v = 0; v < a->num_vertices(); ++v) {
        add(projective(a, v));
        add(injective(a, v));
    }
    while (!queue.empty()) {
        Representation x = found[queue.front()];
        queue.pop_front();
        for (const auto& y : {ar_translate_inverse(x), ar_translate(x)}) {
            if (y.is_zero()) continue;
            if (y.dim() > cap) throw Error(ErrorKind::NotRepresentationFinite, "translate exceeds the dimension cap");
            for (const auto& [part, k] : decompose(y).parts) add(part);
        }
    }
    return found;
}

}  // namespace

std::vector<Representation> indecomposables(const AlgebraPtr& a, std::size_t dim_cap) {
    const std::size_t cap = dim_cap ? dim_cap : default_dim_cap();
    std::vector<Representation> out =
        a->is_nakayama() ? nakayama_indecomposables(a, cap) : knitted_indecomposables(a, cap);
    std::stable_sort(out.begin(), out.end(), dims_less);
    return out;
}

// ---------------------------------------------------------------------------

bool AdditiveSubcategory::contains(const Representation& x) const {
    for (const auto& g : gens)
        if (g.dims == x.dims && multiplicity(g, x) > 0) return true;
    return false;
}

bool AdditiveSubcategory::contains_object(const Representation& m) const {
    std::size_t covered = 0;
    for (const auto& g : gens) covered += multiplicity(g, m) * g.dim();
    return covered == m.dim();
}

namespace {

std::vector<ModMorphism> radical_maps(const Representation& x, const Representation& y, bool same) {
    return same ? end_radical(x) : hom_basis(x, y);
}

/// Greedy choice of elements of `hs` independent modulo span(`rad`).
std::vector<std::size_t> top_choice(const std::vector<ModMorphism>& hs, const std::vector<Vec>& rad) {
    std::vector<std::size_t> picked;
    if (hs.empty()) return picked;
    const std::size_t len = hs.front().flatten().size();
    Mat acc = column_space(Mat::from_columns(len, rad));
    if (acc.rows() != len) acc = Mat(len, 0);
    for (std::size_t k = 0; k < hs.size(); ++k) {
        Mat trial = hcat(acc, Mat::from_columns(len, {hs[k].flatten()}));
        if (rank(trial) == acc.cols() + 1) {
            acc = trial;
            picked.push_back(k);
        }
    }
    return picked;
}

}  // namespace

Approximation right_approx(const Representation& m, const AdditiveSubcategory& c) {
    std::vector<std::vector<ModMorphism>> into(c.gens.size());
    for (std::size_t g = 0; g < c.gens.size(); ++g) into[g] = hom_basis(c.gens[g], m);
    Approximation out;
    std::vector<Representation> srcs;
    std::vector<std::vector<ModMorphism>> grid(1);
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        if (into[g].empty()) continue;
        std::vector<Vec> rad;
        for (std::size_t h = 0; h < c.gens.size(); ++h) {
            if (into[h].empty()) continue;
            for (const auto& r : radical_maps(c.gens[g], c.gens[h], g == h))
                for (const auto& f : into[h]) rad.push_back(compose(f, r).flatten());
        }
        for (auto k : top_choice(into[g], rad)) {
            srcs.push_back(c.gens[g]);
            grid[0].push_back(into[g][k]);
            out.summands.push_back(g);
        }
    }
    out.map = srcs.empty() ? ModMorphism::zero(Representation::zero(m.alg), m) : block_morphism(srcs, {m}, grid);
    return out;
}

Approximation left_approx(const Representation& m, const AdditiveSubcategory& c) {
    std::vector<std::vector<ModMorphism>> from(c.gens.size());
    for (std::size_t g = 0; g < c.gens.size(); ++g) from[g] = hom_basis(m, c.gens[g]);
    Approximation out;
    std::vector<Representation> tgts;
    std::vector<std::vector<ModMorphism>> grid;
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        if (from[g].empty()) continue;
        std::vector<Vec> rad;
        for (std::size_t h = 0; h < c.gens.size(); ++h) {
            if (from[h].empty()) continue;
            for (const auto& r : radical_maps(c.gens[h], c.gens[g], g == h))
                for (const auto& f : from[h]) rad.push_back(compose(r, f).flatten());
        }
        for (auto k : top_choice(from[g], rad)) {
            tgts.push_back(c.gens[g]);
            grid.push_back({from[g][k]});
            out.summands.push_back(g);
        }
    }
    out.map = tgts.empty() ? ModMorphism::zero(m, Representation::zero(m.alg)) : block_morphism({m}, tgts, grid);
    return out;
}

namespace {

std::size_t span_rank(const std::vector<ModMorphism>& fs) {
    if (fs.empty()) return 0;
    std::vector<Vec> cols;
    for (const auto& f : fs) cols.push_back(f.flatten());
    return rank(Mat::from_columns(cols.front().size(), cols));
}

/// Is every element of the subspace {psi in End(a) : kills(psi)} in rad End(a)?
Certificate killers_in_radical(const Representation& a, const std::function<ModMorphism(const ModMorphism&)>& apply,
                               const std::string& what) {
    auto basis = hom_basis(a, a);
    if (basis.empty()) return Certificate::ok();
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(apply(b).flatten());
    std::size_t len = cols.front().size();
    std::vector<Vec> kills = len ? kernel_basis(Mat::from_columns(len, cols)) : kernel_basis(Mat(0, basis.size()));
    for (const auto& x : kills) {
        ModMorphism psi = ModMorphism::zero(a, a);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (sgn(x[i]) != 0) psi = psi + basis[i].scaled(x[i]);
        for (const auto& y : basis)
            if (sgn(trace_of_composite(psi, y)) != 0) return Certificate::fail(what);
    }
    return Certificate::ok();
}

}  // namespace

Certificate is_precover(const ModMorphism& xi, const AdditiveSubcategory& c) {
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        std::size_t want = hom_dim(c.gens[g], xi.tgt);
        std::vector<ModMorphism> imgs;
        for (const auto& f : hom_basis(c.gens[g], xi.src)) imgs.push_back(compose(xi, f));
        if (span_rank(imgs) != want)
            return Certificate::fail("a morphism from " + (c.names.size() > g ? c.names[g] : std::to_string(g)) +
                                     " does not factor");
    }
    return Certificate::ok();
}

Certificate is_preenvelope(const ModMorphism& xi, const AdditiveSubcategory& c) {
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        std::size_t want = hom_dim(xi.src, c.gens[g]);
        std::vector<ModMorphism> imgs;
        for (const auto& f : hom_basis(xi.tgt, c.gens[g])) imgs.push_back(compose(f, xi));
        if (span_rank(imgs) != want)
            return Certificate::fail("a morphism to " + (c.names.size() > g ? c.names[g] : std::to_string(g)) +
                                     " does not factor");
    }
    return Certificate::ok();
}

Certificate is_right_minimal(const ModMorphism& xi) {
    return killers_in_radical(xi.src, [&](const ModMorphism& psi) { return compose(xi, psi); },
                              "a non-radical endomorphism of the source is killed by the map");
}

Certificate is_left_minimal(const ModMorphism& xi) {
    return killers_in_radical(xi.tgt, [&](const ModMorphism& psi) { return compose(psi, xi); },
                              "a non-radical endomorphism of the target kills the map");
}

Certificate is_cover(const ModMorphism& xi, const AdditiveSubcategory& c) {
    if (!c.contains_object(xi.src)) return Certificate::fail("source not in the subcategory");
    if (auto p = is_precover(xi, c); !p) return p;
    return is_right_minimal(xi);
}

Certificate is_envelope(const ModMorphism& xi, const AdditiveSubcategory& c) {
    if (!c.contains_object(xi.tgt)) return Certificate::fail("target not in the subcategory");
    if (auto p = is_preenvelope(xi, c); !p) return p;
    return is_left_minimal(xi);
}

Certificate is_strong_cover(const ModMorphism& xi, const AdditiveSubcategory& c) {
    if (auto p = is_cover(xi, c); !p) return p;
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        auto hs = hom_basis(c.gens[g], xi.src);
        std::vector<ModMorphism> imgs;
        for (const auto& f : hs) imgs.push_back(compose(xi, f));
        if (span_rank(imgs) != hs.size()) return Certificate::fail("factorization is not unique");
    }
    return Certificate::ok();
}

Certificate is_strong_envelope(const ModMorphism& xi, const AdditiveSubcategory& c) {
    if (auto p = is_envelope(xi, c); !p) return p;
    for (std::size_t g = 0; g < c.gens.size(); ++g) {
        auto hs = hom_basis(xi.tgt, c.gens[g]);
        std::vector<ModMorphism> imgs;
        for (const auto& f : hs) imgs.push_back(compose(f, xi));
        if (span_rank(imgs) != hs.size()) return Certificate::fail("factorization is not unique");
    }
    return Certificate::ok();
}

}  // namespace dhom
