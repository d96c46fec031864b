#pragma once
// Bound quiver algebras, structure-constant algebras and algebra morphisms.
//
// Conventions: paths compose left to right (pq = first p, then q). A right
// module M is a representation with M_v = M e_v and, for an arrow a: v -> w,
// a linear map M_v -> M_w given by right multiplication by a.

#include "dhom/errors.hpp"
#include "dhom/exactfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dhom {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;
    bool has_oriented_cycle() const;
};

struct Path {
    int start = 0;
    int end = 0;
    std::vector<int> arrows;  // arrow indices, left to right

    std::size_t length() const { return arrows.size(); }
    bool operator<(const Path& o) const;
    bool operator==(const Path& o) const = default;
};

struct RelationTerm {
    Scalar coeff;
    Path path;
};
using Relation = std::vector<RelationTerm>;

/// Input description of a bound quiver algebra.
struct AlgebraSpec {
    std::string name;
    Quiver quiver;
    std::vector<Relation> relations;
    int d = 1;
};

class BoundQuiverAlgebra {
public:
    /// Validates admissibility and computes a path basis of kQ/I.
    static BoundQuiverAlgebra build(const AlgebraSpec& spec, std::size_t dim_cap = 4096);

    const std::string& name() const { return name_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int d() const { return d_; }
    int num_vertices() const { return quiver_.num_vertices(); }
    std::size_t dim() const { return basis_.size(); }

    const std::vector<Path>& basis() const { return basis_; }
    /// Basis indices of the residue paths from v to w (= a basis of e_v A e_w).
    const std::vector<std::size_t>& paths_between(int v, int w) const {
        return between_[static_cast<std::size_t>(v * num_vertices() + w)];
    }
    std::size_t trivial_index(int v) const { return trivial_[static_cast<std::size_t>(v)]; }
    /// Position of basis element `idx` inside paths_between(start, end).
    std::size_t local_position(std::size_t idx) const { return local_pos_[idx]; }

    /// Coordinates of an arbitrary path of kQ in the residue basis.
    Vec reduce(const Path& p) const;
    /// Structure constants: basis_i * basis_j as a coordinate vector.
    const Vec& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec unit() const;
    Vec basis_vector(std::size_t i) const;

    bool is_monomial() const { return monomial_; }
    bool is_acyclic() const { return !quiver_.has_oriented_cycle(); }
    /// At most one arrow in and one arrow out at every vertex.
    bool is_nakayama() const;

    /// The opposite algebra: arrows reversed, relations read backwards.
    BoundQuiverAlgebra opposite() const;
    AlgebraSpec spec() const;

    std::string path_label(const Path& p) const;

private:
    std::string name_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    int d_ = 1;
    bool monomial_ = true;
    std::vector<Path> basis_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::size_t> trivial_;
    std::vector<std::size_t> local_pos_;
    std::map<Path, Vec> reduction_;  // acyclic general case: every path of kQ
    std::vector<Vec> products_;
};

/// Finite-dimensional algebra given by a basis and exact structure constants.
class StructureAlgebra {
public:
    StructureAlgebra() = default;
    StructureAlgebra(std::vector<std::string> labels, std::vector<Vec> table, Vec unit);
    static StructureAlgebra from_quiver_algebra(const BoundQuiverAlgebra& a);
    static StructureAlgebra product(const StructureAlgebra& a, const StructureAlgebra& b);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec basis_vector(std::size_t i) const;

    /// Matrix of x -> a x (resp. x -> x a) in the basis.
    Mat left_mult(const Vec& a) const;
    Mat right_mult(const Vec& a) const;

    Certificate check_associative() const;
    Certificate check_unit() const;
    /// Jacobson radical via the trace form of the regular representation (char 0).
    Mat radical_basis() const;

private:
    std::vector<std::string> labels_;
    std::vector<Vec> table_;
    Vec unit_;
};

/// A linear map between structure algebras, matrix columns = images of source basis.
struct AlgebraMorphism {
    StructureAlgebra source;
    StructureAlgebra target;
    Mat matrix;

    Vec apply(const Vec& x) const { return matrix * x; }
    static AlgebraMorphism identity(const StructureAlgebra& a);
    AlgebraMorphism then(const AlgebraMorphism& next) const;
};

/// Unitality and multiplicativity on all basis pairs, exactly.
Certificate check_morphism(const AlgebraMorphism& phi);

}  // namespace dhom
