#include "dhom/algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dhom {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonAdmissible: return "NonAdmissible";
        case ErrorKind::InfiniteDimensional: return "InfiniteDimensional";
        case ErrorKind::ExceedsBound: return "ExceedsBound";
        case ErrorKind::NotRepresentationFinite: return "NotRepresentationFinite";
        case ErrorKind::NotStrong: return "NotStrong";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::NotHomologicalEpi: return "NotHomologicalEpi";
        case ErrorKind::UnsupportedAlgebraClass: return "UnsupportedAlgebraClass";
        case ErrorKind::Disagreement: return "Disagreement";
        case ErrorKind::NoFactorization: return "NoFactorization";
        case ErrorKind::AnomalyDetected: return "AnomalyDetected";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[static_cast<std::size_t>(i)].name == name) return i;
    return std::nullopt;
}

bool Quiver::has_oriented_cycle() const {
    // Kahn's algorithm; loops count as cycles.
    std::vector<int> indeg(vertices.size(), 0);
    for (const auto& a : arrows) ++indeg[static_cast<std::size_t>(a.target)];
    std::vector<int> queue;
    for (int v = 0; v < num_vertices(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    std::size_t seen = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++seen;
        for (const auto& a : arrows)
            if (a.source == v && --indeg[static_cast<std::size_t>(a.target)] == 0) queue.push_back(a.target);
    }
    return seen != vertices.size();
}

bool Path::operator<(const Path& o) const {
    if (start != o.start) return start < o.start;
    if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
    if (arrows != o.arrows) return arrows < o.arrows;
    return end < o.end;
}

namespace {

Path concat(const Path& p, const Path& q) {
    Path r{p.start, q.end, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

bool contains_subpath(const Path& p, const Path& sub) {
    if (sub.arrows.empty() || sub.arrows.size() > p.arrows.size()) return false;
    auto it = std::search(p.arrows.begin(), p.arrows.end(), sub.arrows.begin(), sub.arrows.end());
    return it != p.arrows.end();
}

void validate(const AlgebraSpec& spec) {
    const auto& q = spec.quiver;
    std::set<std::string> names(q.vertices.begin(), q.vertices.end());
    if (names.size() != q.vertices.size()) throw Error(ErrorKind::InvalidArgument, "duplicate vertex id");
    std::set<std::string> anames;
    for (const auto& a : q.arrows) {
        if (!anames.insert(a.name).second) throw Error(ErrorKind::InvalidArgument, "duplicate arrow id " + a.name);
        if (a.source < 0 || a.source >= q.num_vertices() || a.target < 0 || a.target >= q.num_vertices())
            throw Error(ErrorKind::InvalidArgument, "arrow " + a.name + " has a missing endpoint");
    }
    if (spec.d < 1) throw Error(ErrorKind::InvalidArgument, "d must be at least 1");
    for (const auto& rel : spec.relations) {
        if (rel.empty()) throw Error(ErrorKind::NonAdmissible, "empty relation");
        for (const auto& t : rel) {
            const auto& p = t.path;
            if (p.arrows.size() < 2)
                throw Error(ErrorKind::NonAdmissible, "relation term of length < 2 (not contained in rad^2)");
            if (p.start != rel.front().path.start || p.end != rel.front().path.end)
                throw Error(ErrorKind::NonAdmissible, "relation terms are not parallel");
            int at = p.start;
            for (int a : p.arrows) {
                if (q.arrows[static_cast<std::size_t>(a)].source != at)
                    throw Error(ErrorKind::NonAdmissible, "relation path is not composable at arrow " +
                                                              q.arrows[static_cast<std::size_t>(a)].name);
                at = q.arrows[static_cast<std::size_t>(a)].target;
            }
            if (at != p.end) throw Error(ErrorKind::NonAdmissible, "relation path endpoint mismatch");
        }
    }
}

}  // namespace

BoundQuiverAlgebra BoundQuiverAlgebra::build(const AlgebraSpec& spec, std::size_t dim_cap) {
    validate(spec);
    BoundQuiverAlgebra a;
    a.name_ = spec.name;
    a.quiver_ = spec.quiver;
    a.relations_ = spec.relations;
    a.d_ = spec.d;
    a.monomial_ = std::all_of(spec.relations.begin(), spec.relations.end(),
                              [](const Relation& r) { return r.size() == 1 && sgn(r.front().coeff) != 0; });
    const int n = a.quiver_.num_vertices();
    const auto& arrows = a.quiver_.arrows;
    const bool acyclic = !a.quiver_.has_oriented_cycle();

    std::vector<Path> chosen;
    if (a.monomial_) {
        // Residue basis: paths avoiding every relation.
        std::vector<Path> layer;
        for (int v = 0; v < n; ++v) layer.push_back(Path{v, v, {}});
        while (!layer.empty()) {
            chosen.insert(chosen.end(), layer.begin(), layer.end());
            if (chosen.size() > dim_cap) {
                if (acyclic) throw Error(ErrorKind::ExceedsBound, "dimension exceeds cap");
                throw Error(ErrorKind::InfiniteDimensional,
                            "residue path count exceeds cap; the relations do not contain a power of the radical");
            }
            std::vector<Path> next;
            for (const auto& p : layer)
                for (int ai = 0; ai < static_cast<int>(arrows.size()); ++ai) {
                    if (arrows[static_cast<std::size_t>(ai)].source != p.end) continue;
                    Path q = p;
                    q.arrows.push_back(ai);
                    q.end = arrows[static_cast<std::size_t>(ai)].target;
                    bool killed = false;
                    for (const auto& rel : a.relations_)
                        if (contains_subpath(q, rel.front().path)) killed = true;
                    if (!killed) next.push_back(std::move(q));
                }
            layer = std::move(next);
        }
    } else {
        if (!acyclic)
            throw Error(ErrorKind::UnsupportedAlgebraClass,
                        "non-monomial relations are only supported on acyclic quivers");
        // Enumerate every path of kQ (finite since Q is acyclic).
        std::vector<Path> all;
        std::vector<Path> layer;
        for (int v = 0; v < n; ++v) layer.push_back(Path{v, v, {}});
        while (!layer.empty()) {
            all.insert(all.end(), layer.begin(), layer.end());
            if (all.size() > dim_cap * 8) throw Error(ErrorKind::ExceedsBound, "path enumeration cap exceeded");
            std::vector<Path> next;
            for (const auto& p : layer)
                for (int ai = 0; ai < static_cast<int>(arrows.size()); ++ai) {
                    if (arrows[static_cast<std::size_t>(ai)].source != p.end) continue;
                    Path q = p;
                    q.arrows.push_back(ai);
                    q.end = arrows[static_cast<std::size_t>(ai)].target;
                    next.push_back(std::move(q));
                }
            layer = std::move(next);
        }
        std::map<std::pair<int, int>, std::vector<Path>> by_pair;
        for (const auto& p : all) by_pair[{p.start, p.end}].push_back(p);
        for (auto& [key, paths] : by_pair) {
            std::sort(paths.begin(), paths.end());
            std::map<Path, std::size_t> pos;
            for (std::size_t i = 0; i < paths.size(); ++i) pos[paths[i]] = i;
            // Ideal generators p r q inside e_v kQ e_w.
            std::vector<Vec> ideal;
            for (const auto& rel : a.relations_) {
                const int rs = rel.front().path.start, re = rel.front().path.end;
                for (const auto& pre : by_pair[{key.first, rs}])
                    for (const auto& post : by_pair[{re, key.second}]) {
                        Vec v(paths.size());
                        for (const auto& t : rel) v[pos.at(concat(concat(pre, t.path), post))] += t.coeff;
                        ideal.push_back(std::move(v));
                    }
            }
            Mat ideal_mat = Mat::from_columns(paths.size(), ideal);
            std::size_t base_rank = rank(ideal_mat);
            Mat acc = ideal_mat;
            std::vector<std::size_t> picked;
            for (std::size_t i = 0; i < paths.size(); ++i) {
                Vec e(paths.size());
                e[i] = 1;
                Mat trial = hcat(acc, Mat::from_columns(paths.size(), {e}));
                if (rank(trial) > base_rank + picked.size()) {
                    acc = trial;
                    picked.push_back(i);
                }
            }
            for (auto i : picked) chosen.push_back(paths[i]);
            if (chosen.size() > dim_cap) throw Error(ErrorKind::InfiniteDimensional, "dimension exceeds cap");
        }
        // Coordinates need the global ordering, so reduce in a second pass.
        std::sort(chosen.begin(), chosen.end());
        a.basis_ = chosen;
        std::map<Path, std::size_t> gidx;
        for (std::size_t i = 0; i < a.basis_.size(); ++i) gidx[a.basis_[i]] = i;
        for (auto& [key, paths] : by_pair) {
            std::map<Path, std::size_t> pos;
            for (std::size_t i = 0; i < paths.size(); ++i) pos[paths[i]] = i;
            std::vector<Vec> cols;
            std::vector<std::size_t> basis_here;
            for (const auto& p : paths)
                if (gidx.count(p)) {
                    Vec e(paths.size());
                    e[pos.at(p)] = 1;
                    cols.push_back(std::move(e));
                    basis_here.push_back(gidx.at(p));
                }
            const std::size_t nb = cols.size();
            for (const auto& rel : a.relations_) {
                const int rs = rel.front().path.start, re = rel.front().path.end;
                for (const auto& pre : by_pair[{key.first, rs}])
                    for (const auto& post : by_pair[{re, key.second}]) {
                        Vec v(paths.size());
                        for (const auto& t : rel) v[pos.at(concat(concat(pre, t.path), post))] += t.coeff;
                        cols.push_back(std::move(v));
                    }
            }
            Mat system = Mat::from_columns(paths.size(), cols);
            for (const auto& p : paths) {
                Vec e(paths.size());
                e[pos.at(p)] = 1;
                auto x = solve(system, e);
                if (!x) throw Error(ErrorKind::ConstructionFailed, "path reduction failed");
                Vec coords(a.basis_.size());
                for (std::size_t i = 0; i < nb; ++i) coords[basis_here[i]] = (*x)[i];
                a.reduction_[p] = std::move(coords);
            }
        }
    }

    if (a.monomial_) {
        std::sort(chosen.begin(), chosen.end());
        a.basis_ = chosen;
        for (std::size_t i = 0; i < a.basis_.size(); ++i) {
            Vec e(a.basis_.size());
            e[i] = 1;
            a.reduction_[a.basis_[i]] = std::move(e);
        }
    }

    const std::size_t dim = a.basis_.size();
    a.between_.assign(static_cast<std::size_t>(n * n), {});
    a.trivial_.assign(static_cast<std::size_t>(n), 0);
    a.local_pos_.assign(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        const auto& p = a.basis_[i];
        auto& slot = a.between_[static_cast<std::size_t>(p.start * n + p.end)];
        a.local_pos_[i] = slot.size();
        slot.push_back(i);
        if (p.arrows.empty()) a.trivial_[static_cast<std::size_t>(p.start)] = i;
    }
    a.products_.assign(dim * dim, Vec(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (a.basis_[i].end == a.basis_[j].start) a.products_[i * dim + j] = a.reduce(concat(a.basis_[i], a.basis_[j]));
    return a;
}

Vec BoundQuiverAlgebra::reduce(const Path& p) const {
    auto it = reduction_.find(p);
    if (it != reduction_.end()) return it->second;
    if (monomial_) {
        for (const auto& rel : relations_)
            if (contains_subpath(p, rel.front().path)) return Vec(dim());
    }
    // Longer than any residue path in a monomial algebra, or a non-path.
    int at = p.start;
    for (int ai : p.arrows) {
        const auto& ar = quiver_.arrows[static_cast<std::size_t>(ai)];
        if (ar.source != at) throw Error(ErrorKind::InvalidArgument, "reduce: path is not composable");
        at = ar.target;
    }
    if (monomial_) return Vec(dim());
    throw Error(ErrorKind::InvalidArgument, "reduce: unknown path");
}

Vec BoundQuiverAlgebra::multiply(const Vec& x, const Vec& y) const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (sgn(y[j]) == 0) continue;
            const Vec& p = product(i, j);
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (sgn(p[k]) != 0) r[k] += c * p[k];
        }
    }
    return r;
}

Vec BoundQuiverAlgebra::unit() const {
    Vec u(dim());
    for (int v = 0; v < num_vertices(); ++v) u[trivial_index(v)] = 1;
    return u;
}

Vec BoundQuiverAlgebra::basis_vector(std::size_t i) const {
    Vec e(dim());
    e[i] = 1;
    return e;
}

bool BoundQuiverAlgebra::is_nakayama() const {
    std::vector<int> in(static_cast<std::size_t>(num_vertices()), 0), out(static_cast<std::size_t>(num_vertices()), 0);
    for (const auto& ar : quiver_.arrows) {
        ++out[static_cast<std::size_t>(ar.source)];
        ++in[static_cast<std::size_t>(ar.target)];
    }
    for (int v = 0; v < num_vertices(); ++v)
        if (in[static_cast<std::size_t>(v)] > 1 || out[static_cast<std::size_t>(v)] > 1) return false;
    return true;
}

AlgebraSpec BoundQuiverAlgebra::spec() const { return AlgebraSpec{name_, quiver_, relations_, d_}; }

BoundQuiverAlgebra BoundQuiverAlgebra::opposite() const {
    AlgebraSpec s = spec();
    s.name = name_ + "^op";
    for (auto& ar : s.quiver.arrows) std::swap(ar.source, ar.target);
    for (auto& rel : s.relations)
        for (auto& t : rel) {
            std::swap(t.path.start, t.path.end);
            std::reverse(t.path.arrows.begin(), t.path.arrows.end());
        }
    return build(s);
}

std::string BoundQuiverAlgebra::path_label(const Path& p) const {
    if (p.arrows.empty()) return "e" + quiver_.vertices[static_cast<std::size_t>(p.start)];
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ".";
        s += quiver_.arrows[static_cast<std::size_t>(p.arrows[i])].name;
    }
    return s;
}

// ---------------------------------------------------------------------------

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels, std::vector<Vec> table, Vec unit)
    : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
    if (table_.size() != dim() * dim() || unit_.size() != dim())
        throw Error(ErrorKind::InvalidArgument, "StructureAlgebra: table shape mismatch");
}

StructureAlgebra StructureAlgebra::from_quiver_algebra(const BoundQuiverAlgebra& a) {
    std::vector<std::string> labels;
    for (const auto& p : a.basis()) labels.push_back(a.path_label(p));
    std::vector<Vec> table;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) table.push_back(a.product(i, j));
    return StructureAlgebra(std::move(labels), std::move(table), a.unit());
}

StructureAlgebra StructureAlgebra::product(const StructureAlgebra& a, const StructureAlgebra& b) {
    const std::size_t n = a.dim() + b.dim();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
    for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
    std::vector<Vec> table(n * n, Vec(n));
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k) table[i * n + j][k] = a.product(i, j)[k];
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t k = 0; k < b.dim(); ++k)
                table[(a.dim() + i) * n + a.dim() + j][a.dim() + k] = b.product(i, j)[k];
    return StructureAlgebra(std::move(labels), std::move(table), concat(a.unit(), b.unit()));
}

Vec StructureAlgebra::multiply(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            const Vec& p = product(i, j);
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(p[k]) != 0) r[k] += c * p[k];
        }
    }
    return r;
}

Vec StructureAlgebra::basis_vector(std::size_t i) const {
    Vec e(dim());
    e[i] = 1;
    return e;
}

Mat StructureAlgebra::left_mult(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(a, basis_vector(j)));
    return Mat::from_columns(dim(), cols);
}

Mat StructureAlgebra::right_mult(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(multiply(basis_vector(j), a));
    return Mat::from_columns(dim(), cols);
}

Certificate StructureAlgebra::check_associative() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            for (std::size_t k = 0; k < dim(); ++k) {
                Vec lhs = multiply(product(i, j), basis_vector(k));
                Vec rhs = multiply(basis_vector(i), product(j, k));
                if (lhs != rhs)
                    return Certificate::fail("associativity fails on (" + labels_[i] + "," + labels_[j] + "," +
                                             labels_[k] + ")");
            }
    return Certificate::ok();
}

Certificate StructureAlgebra::check_unit() const {
    for (std::size_t i = 0; i < dim(); ++i) {
        Vec e = basis_vector(i);
        if (multiply(unit_, e) != e || multiply(e, unit_) != e)
            return Certificate::fail("unit law fails on " + labels_[i]);
    }
    return Certificate::ok();
}

Mat StructureAlgebra::radical_basis() const {
    const std::size_t n = dim();
    if (n == 0) return Mat(0, 0);
    Vec traces(n);
    for (std::size_t k = 0; k < n; ++k) {
        // Tr(L_{b_k}) = sum_j (b_k b_j)_j
        for (std::size_t j = 0; j < n; ++j) traces[k] += product(k, j)[j];
    }
    Mat form(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& p = product(i, j);
            Scalar t;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(p[k]) != 0) t += p[k] * traces[k];
            form(i, j) = t;
        }
    return kernel_matrix(form.transpose());
}

AlgebraMorphism AlgebraMorphism::identity(const StructureAlgebra& a) {
    return AlgebraMorphism{a, a, Mat::identity(a.dim())};
}

AlgebraMorphism AlgebraMorphism::then(const AlgebraMorphism& next) const {
    return AlgebraMorphism{source, next.target, next.matrix * matrix};
}

Certificate check_morphism(const AlgebraMorphism& phi) {
    if (phi.matrix.rows() != phi.target.dim() || phi.matrix.cols() != phi.source.dim())
        return Certificate::fail("shape");
    if (phi.apply(phi.source.unit()) != phi.target.unit()) return Certificate::fail("unit");
    for (std::size_t i = 0; i < phi.source.dim(); ++i)
        for (std::size_t j = 0; j < phi.source.dim(); ++j) {
            Vec lhs = phi.apply(phi.source.product(i, j));
            Vec rhs = phi.target.multiply(phi.matrix.column(i), phi.matrix.column(j));
            if (lhs != rhs)
                return Certificate::fail("multiplicativity fails on (" + phi.source.labels()[i] + "," +
                                         phi.source.labels()[j] + ")");
        }
    return Certificate::ok();
}

}  // namespace dhom
