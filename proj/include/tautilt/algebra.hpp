#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tautilt/fp.hpp"
#include "tautilt/quiver.hpp"

namespace tautilt {

class Algebra;
using AlgPtr = std::shared_ptr<const Algebra>;

// One basis vector of the algebra: the residue of a path, tagged with
// its endpoints. `word` lists the basis indices of the length-1 factors
// (arrows), so the element equals the product of its word; empty for
// trivial paths.
struct BasisElem {
    std::string name;       // "e1", "a", "a*b", ...
    int source = 0;         // vertex ids
    int target = 0;
    std::vector<int> word;  // basis indices of generators
    int length() const { return static_cast<int>(word.size()); }
};

enum class Provenance { QuiverPresented, OppositeOf, QuotientByIdempotent };

// A finite dimensional algebra with a fixed basis, structure constants
// and distinguished primitive idempotents, one per surviving vertex.
// Instances are immutable after construction; every instance carries a
// link to its opposite, so opposite(opposite(A)) is A itself.
class Algebra {
public:
    explicit Algebra(PrimeField f) : field(f) {}

    PrimeField field;
    std::vector<int> vertices;             // surviving vertex ids, ascending
    std::vector<BasisElem> basis;
    std::vector<int> idem;                 // vertex index -> basis index of e_v
    std::vector<int> radical;              // basis indices of length >= 1
    std::vector<int> generators;           // basis indices of length == 1
    Provenance provenance = Provenance::QuiverPresented;
    std::string label;

    // For quiver-presented algebras only: the presentation, used for the
    // fast relation check during module enumeration.
    std::optional<Quiver> quiver;
    std::vector<RelationExpr> relations;

    int dim() const { return static_cast<int>(basis.size()); }
    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int vertex_index(int id) const;                     // -1 if absent
    const std::vector<std::pair<int, std::uint32_t>>& product(int i, int j) const {
        return table_[i][j];
    }
    Vec multiply(const Vec& x, const Vec& y) const;     // bilinear extension
    Vec unit_vec(int basis_index) const;
    Vec one() const;                                    // sum of idempotents

    // Basis indices tagged (source_id, target_id), in basis order.
    std::vector<int> elems_between(int source_id, int target_id) const;

    bool same_presentation(const Algebra& o) const;     // element-wise comparison

    AlgPtr opposite_of() const;

private:
    std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> table_;
    mutable std::shared_ptr<const Algebra> op_;
    mutable std::weak_ptr<const Algebra> op_back_;

    friend AlgPtr finalize_algebra(std::shared_ptr<Algebra> a, bool make_op);
    friend struct AlgebraBuilder;
};

// Internal: freeze an algebra and attach its opposite.
AlgPtr finalize_algebra(std::shared_ptr<Algebra> a, bool make_op);

// Build a basis of kQ/I by exact linear algebra on the path space:
// exact ideal elements u*r*v are spanned up to total length max_length;
// the first length m whose paths all lie in that span certifies that
// every path of length >= m is in the ideal, after which the quotient
// is computed in the space of paths shorter than m. Throws
// InfiniteDimensional when no such m <= max_length exists, and
// CapExceeded if the path count explodes first.
AlgPtr build_basis(const AlgebraSpec& spec, int max_length = 16,
                   std::uint64_t path_cap = 1u << 17);

Vec multiply(const Algebra& a, const Vec& x, const Vec& y);

AlgPtr opposite(const AlgPtr& a);

struct QuotientResult {
    AlgPtr alg;
    Mat projection;                  // dim(A) x dim(A/J), rows = images of A basis
    std::vector<int> survivor_of;    // A basis index -> quotient basis index or -1
    std::vector<int> removed_vertices;
};

// Quotient by the two-sided ideal generated by the idempotents of the
// vertices in E. E must be a proper subset (possibly empty) of the
// vertex set.
QuotientResult quotient_by_idempotent(const AlgPtr& a, const std::set<int>& e_vertices);

} // namespace tautilt
