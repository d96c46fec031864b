#include "dhom/higher.hpp"

#include <algorithm>

namespace dhom {

std::vector<std::vector<std::size_t>> ordered_subsets(std::size_t n, bool include_empty) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = include_empty ? 0 : 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

// --- cluster tilting ---------------------------------------------------------

Certificate is_d_cluster_tilting(const std::vector<Representation>& modules, const AdditiveSubcategory& c, int d) {
    for (const auto& x : modules) {
        const bool in_c = c.contains(x);
        bool left = true, right = true;
        for (const auto& g : c.gens)
            for (int i = 1; i < d; ++i) {
                if (ext_dim(g, x, static_cast<std::size_t>(i)) != 0) left = false;
                if (ext_dim(x, g, static_cast<std::size_t>(i)) != 0) right = false;
            }
        if (in_c != left)
            return Certificate::fail(x.signature() + (in_c ? " lies in c but has Ext from c" : " is Ext-orthogonal from c but not in c"));
        if (in_c != right)
            return Certificate::fail(x.signature() + (in_c ? " lies in c but has Ext into c" : " is Ext-orthogonal into c but not in c"));
    }
    return Certificate::ok();
}

std::vector<std::vector<std::size_t>> find_d_cluster_tilting(const std::vector<Representation>& modules, int d) {
    std::vector<std::vector<std::size_t>> out;
    if (modules.empty()) return out;
    const AlgebraPtr& a = modules.front().alg;
    std::vector<std::size_t> mandatory, optional;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        bool pi = false;
        for (int v = 0; v < a->num_vertices() && !pi; ++v)
            pi = is_isomorphic(modules[i], projective(a, v)) || is_isomorphic(modules[i], injective(a, v));
        (pi ? mandatory : optional).push_back(i);
    }
    for (const auto& pick : ordered_subsets(optional.size(), true)) {
        std::vector<std::size_t> idx = mandatory;
        for (std::size_t k : pick) idx.push_back(optional[k]);
        std::sort(idx.begin(), idx.end());
        AdditiveSubcategory c;
        for (std::size_t i : idx) c.gens.push_back(modules[i]);
        if (is_d_cluster_tilting(modules, c, d)) out.push_back(idx);
    }
    return out;
}

HomologicalPair HomologicalPair::make(const AlgebraPtr& a, int d, std::vector<Representation> modules,
                                      std::vector<std::string> names, const std::vector<std::size_t>& f_indices) {
    HomologicalPair p;
    p.alg = a;
    p.d = d;
    p.modules = std::move(modules);
    p.module_names = std::move(names);
    for (std::size_t i : f_indices) {
        p.F.gens.push_back(p.modules.at(i));
        p.F.names.push_back(i < p.module_names.size() ? p.module_names[i] : p.modules[i].signature());
    }
    if (auto c = is_d_cluster_tilting(p.modules, p.F, d); !c)
        throw Error(ErrorKind::InvalidArgument, "F is not " + std::to_string(d) + "-cluster tilting: " + c.witness);
    if (global_dimension(a) > static_cast<std::size_t>(d))
        throw Error(ErrorKind::InvalidArgument, "global dimension exceeds d");
    return p;
}

AdditiveSubcategory HomologicalPair::sub(const std::vector<std::size_t>& f_indices) const {
    AdditiveSubcategory w;
    for (std::size_t i : f_indices) {
        w.gens.push_back(F.gens.at(i));
        w.names.push_back(F.names.at(i));
    }
    return w;
}

// --- d-kernels and d-cokernels ---------------------------------------------------

DExactDiagram d_kernel(const ModMorphism& f, const AdditiveSubcategory& F, int d) {
    std::vector<Representation> objs{f.tgt, f.src};
    std::vector<ModMorphism> maps{f};
    ModMorphism incl = kernel(f);
    for (int s = 1; s < d; ++s) {
        Approximation ap = right_approx(incl.src, F);
        objs.push_back(ap.map.src);
        maps.push_back(compose(incl, ap.map));
        incl = kernel(ap.map);
    }
    objs.push_back(incl.src);
    maps.push_back(incl);
    std::reverse(objs.begin(), objs.end());
    std::reverse(maps.begin(), maps.end());
    return DExactDiagram{DExactDiagram::Role::Kernel, objs, maps};
}

DExactDiagram d_cokernel(const ModMorphism& f, const AdditiveSubcategory& F, int d) {
    std::vector<Representation> objs{f.src, f.tgt};
    std::vector<ModMorphism> maps{f};
    ModMorphism proj = cokernel(f);
    for (int s = 1; s < d; ++s) {
        Approximation ap = left_approx(proj.tgt, F);
        objs.push_back(ap.map.tgt);
        maps.push_back(compose(ap.map, proj));
        proj = cokernel(ap.map);
    }
    objs.push_back(proj.tgt);
    maps.push_back(proj);
    return DExactDiagram{DExactDiagram::Role::Cokernel, objs, maps};
}

namespace {

/// Matrix of Hom(b, f) : Hom(b, X) -> Hom(b, Y) in hom_basis coordinates.
Mat hom_covariant(const Representation& b, const ModMorphism& f) {
    auto hx = hom_basis(b, f.src), hy = hom_basis(b, f.tgt);
    Mat m(hy.size(), hx.size());
    for (std::size_t j = 0; j < hx.size(); ++j) {
        if (hy.empty()) break;
        Vec c = coordinates(hy, compose(f, hx[j]));
        for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    return m;
}

/// Matrix of Hom(f, b) : Hom(Y, b) -> Hom(X, b).
Mat hom_contravariant(const ModMorphism& f, const Representation& b) {
    auto hy = hom_basis(f.tgt, b), hx = hom_basis(f.src, b);
    Mat m(hx.size(), hy.size());
    for (std::size_t j = 0; j < hy.size(); ++j) {
        if (hx.empty()) break;
        Vec c = coordinates(hx, compose(hy[j], f));
        for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
    }
    return m;
}

}  // namespace

Certificate check_d_exact(const DExactDiagram& x, const std::vector<Representation>& tests) {
    const std::size_t n = x.objects.size();
    for (std::size_t k = 0; k + 1 < x.maps.size(); ++k)
        if (!compose(x.maps[k + 1], x.maps[k]).is_zero())
            return Certificate::fail("composite at position " + std::to_string(k + 1) + " is nonzero");
    const bool cov = x.role != DExactDiagram::Role::Cokernel;
    const bool contra = x.role != DExactDiagram::Role::Kernel;
    for (const auto& b : tests) {
        if (cov) {
            std::vector<Mat> ms;
            for (const auto& f : x.maps) ms.push_back(hom_covariant(b, f));
            for (std::size_t k = 0; k + 1 < n; ++k) {
                std::size_t here = hom_dim(b, x.objects[k]);
                std::size_t r_out = rank(ms[k]), r_in = k > 0 ? rank(ms[k - 1]) : 0;
                if (here - r_out != r_in)
                    return Certificate::fail("Hom(" + b.signature() + ",-) not exact at position " + std::to_string(k));
            }
        }
        if (contra) {
            std::vector<Mat> ms;
            for (const auto& f : x.maps) ms.push_back(hom_contravariant(f, b));
            for (std::size_t k = n - 1; k >= 1; --k) {
                std::size_t here = hom_dim(x.objects[k], b);
                std::size_t r_out = rank(ms[k - 1]), r_in = k + 1 < n ? rank(ms[k]) : 0;
                if (here - r_out != r_in)
                    return Certificate::fail("Hom(-," + b.signature() + ") not exact at position " + std::to_string(k));
            }
        }
    }
    return Certificate::ok();
}

// --- F-bar ---------------------------------------------------------------------------

DerivedSubcat overline(const AdditiveSubcategory& w, int d) {
    DerivedSubcat s;
    s.step = d;
    for (std::size_t i = 0; i < w.gens.size(); ++i) {
        s.gens.push_back(stalk_complex(w.gens[i], 0));
        s.names.push_back(i < w.names.size() ? w.names[i] : w.gens[i].signature());
    }
    return s;
}

AdditiveSubcategory base_of(const DerivedSubcat& w) {
    AdditiveSubcategory b;
    for (std::size_t i = 0; i < w.gens.size(); ++i) {
        b.gens.push_back(homology(w.gens[i].to_modules(), 0));
        b.names.push_back(w.names.at(i));
    }
    return b;
}

DAngle build_d_angle(const ChainMap& delta, const DerivedSubcat& fbar, int d) {
    DAngle out;
    ProjComplex y = minimize(shift(cone(delta), -1));
    std::vector<ProjComplex> rev;
    for (int k = 1; k < d; ++k) {
        DerivedApproximation ap = right_approx(y, fbar);
        rev.push_back(ap.map.src);
        y = minimize(shift(cone(ap.map), -1));
    }
    rev.push_back(y);
    out.middle.assign(rev.rbegin(), rev.rend());
    for (std::size_t k = 0; k < out.middle.size(); ++k)
        if (!contains(fbar, out.middle[k])) {
            out.in_fbar = Certificate::fail("middle term X^" + std::to_string(k + 1) + " " + out.middle[k].signature() +
                                            " is not in F-bar");
            break;
        }
    return out;
}

// --- wide subcategories ----------------------------------------------------------------

namespace {

struct TestMap {
    ModMorphism f;
    std::string label;
};

std::vector<TestMap> test_morphisms(const AdditiveSubcategory& w) {
    std::vector<TestMap> out;
    const std::size_t n = w.gens.size();
    std::vector<std::vector<ModMorphism>> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto hs = hom_basis(w.gens[i], w.gens[j]);
            ModMorphism sum = ModMorphism::zero(w.gens[i], w.gens[j]);
            for (std::size_t k = 0; k < hs.size(); ++k) {
                out.push_back({hs[k], w.names[i] + "->" + w.names[j] + "#" + std::to_string(k)});
                sum = sum + hs[k];
            }
            grid[j].push_back(sum);
        }
    if (n > 1) out.push_back({block_morphism(w.gens, w.gens, grid), "sum of all basis morphisms"});
    return out;
}

}  // namespace

WideReport is_wide_in_F(const HomologicalPair& pair, const std::vector<std::size_t>& idx) {
    WideReport rep;
    if (idx.empty()) return rep;
    const int d = pair.d;
    AdditiveSubcategory w = pair.sub(idx);
    auto tests = test_morphisms(w);
    for (const auto& t : tests) {
        DExactDiagram k = d_kernel(t.f, pair.F, d);
        for (int i = 0; i < d; ++i)
            if (!w.contains_object(k.objects[static_cast<std::size_t>(i)])) {
                rep.kernels = Certificate::fail("d-kernel of " + t.label + " has term " +
                                                k.objects[static_cast<std::size_t>(i)].signature() + " outside w");
                break;
            }
        if (!rep.kernels) break;
    }
    for (const auto& t : tests) {
        DExactDiagram c = d_cokernel(t.f, pair.F, d);
        for (std::size_t i = 2; i < c.objects.size(); ++i)
            if (!w.contains_object(c.objects[i])) {
                rep.cokernels =
                    Certificate::fail("d-cokernel of " + t.label + " has term " + c.objects[i].signature() + " outside w");
                break;
            }
        if (!rep.cokernels) break;
    }
    DerivedSubcat fbar = overline(pair.F, d), wbar = overline(w, d);
    std::vector<ProjComplex> gens = wbar.gens;
    std::vector<ProjComplex> shifted;
    for (const auto& g : gens) shifted.push_back(shift(g, d));
    std::vector<std::pair<ChainMap, std::string>> deltas;
    std::vector<std::vector<ChainMap>> grid(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < gens.size(); ++i) {
            HomSpace h(gens[i], shifted[j]);
            ChainMap sum = ChainMap::zero(gens[i], shifted[j]);
            for (std::size_t k = 0; k < h.dim(); ++k) {
                deltas.push_back({h.basis()[k], w.names[i] + "->S^d " + w.names[j] + "#" + std::to_string(k)});
                sum = sum + h.basis()[k];
            }
            grid[j].push_back(sum);
        }
    if (gens.size() > 1 && !deltas.empty())
        deltas.push_back({block_chain_map(gens, shifted, grid), "sum of all extension classes"});
    for (const auto& [delta, label] : deltas) {
        DAngle ang = build_d_angle(delta, fbar, d);
        if (!ang.in_fbar) {
            rep.extensions = Certificate::fail("angle of " + label + ": " + ang.in_fbar.witness);
            break;
        }
        for (std::size_t k = 0; k < ang.middle.size(); ++k)
            if (!contains(wbar, ang.middle[k])) {
                rep.extensions = Certificate::fail("d-extension " + label + " has middle term " +
                                                   ang.middle[k].signature() + " outside w-bar");
                break;
            }
        if (!rep.extensions) break;
    }
    return rep;
}

WideEnumeration enumerate_wide(const HomologicalPair& pair,
                               const std::function<bool(const std::vector<std::size_t>&)>& round_trip,
                               bool include_zero) {
    WideEnumeration out;
    for (const auto& s : ordered_subsets(pair.F.gens.size(), include_zero)) {
        bool def = is_wide_in_F(pair, s).pass();
        bool ok = def;
        if (round_trip) {
            bool rt = s.empty() ? true : round_trip(s);
            if (rt != def) {
                std::string names;
                for (std::size_t i : s) names += (names.empty() ? "" : ",") + pair.F.names[i];
                out.anomalies.push_back("{" + names + "}: definitional check " + (def ? "passes" : "fails") +
                                        ", round trip " + (rt ? "passes" : "fails"));
            }
            ok = def && rt;
        }
        if (ok) out.wide.push_back(s);
    }
    return out;
}

}  // namespace dhom
