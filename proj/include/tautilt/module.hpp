#pragma once

#include <string>
#include <vector>

#include "tautilt/algebra.hpp"

namespace tautilt {

// A finite dimensional right module, stored as one block per vertex and
// one matrix per basis element. Matrices act on row vectors: the action
// of b with tags (s, t) is a dims[s] x dims[t] matrix, and the action of
// a product is the product of the actions in the same order. Idempotent
// actions are identities on their block. Immutable in practice: nothing
// here mutates a module after construction.
struct Module {
    AlgPtr alg;
    std::vector<int> dims;   // by vertex index
    std::vector<Mat> act;    // by basis index

    static Module zero(AlgPtr a);

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    int dim_at_vertex(int vertex_id) const;
    bool same_algebra(const Module& o) const;

    // leading offset of each vertex block in the flattened coordinate
    // layout (vertex-major, coordinates within a block in order)
    std::vector<int> block_offsets() const;
};

// Build a module from the actions of the algebra generators (length-1
// basis elements, in Algebra::generators order). Longer basis actions
// are the products along each element's word. With validate set, every
// structure-constant identity is checked; enumeration uses the cheaper
// relation test first where a presentation is available.
Module module_from_generators(AlgPtr a, std::vector<int> dims, const std::vector<Mat>& gen_act,
                              bool validate = true);

// Check that candidate generator actions satisfy the quiver relations
// (quiver-presented algebras only; exact and sufficient there).
bool satisfies_relations(const Algebra& a, const std::vector<int>& dims,
                         const std::vector<Mat>& gen_act);

// Full structure-constant consistency of a finished module.
bool module_valid(const Module& m);

Module simple_at(AlgPtr a, int vertex_id);
Module projective_at(AlgPtr a, int vertex_id);
Module injective_at(AlgPtr a, int vertex_id);

// Per-vertex blocks of a morphism f: M -> N; block v is dims_M[v] x
// dims_N[v], acting on row vectors.
struct Morphism {
    Module src, dst;
    std::vector<Mat> f;

    bool is_valid() const;  // intertwines every generator action
};

Morphism identity_morphism(const Module& m);
Morphism compose(const Morphism& first, const Morphism& then);
bool is_surjective(const Morphism& f);
bool is_injective_morphism(const Morphism& f);

// Solution space of the intertwining equations. Morphisms are flattened
// vertex-major, row-major within a block; the basis is in standard
// nullspace form (identity pattern on the free coordinates), so the
// coordinates of any solution are just its values there.
struct HomSpace {
    std::vector<std::pair<int, int>> shape;  // (dim M_v, dim N_v) per vertex
    std::vector<int> offsets;                // unknown offset per vertex
    Mat basis;                               // rows = basis morphisms, flattened
    std::vector<int> free_cols;

    int dim() const { return basis.rows; }
    std::vector<Mat> blocks_from_coeffs(const PrimeField& F, const Vec& coeffs) const;
    std::vector<Mat> blocks_from_flat(const Vec& flat) const;
    Vec coeffs_of(const Vec& flat) const;  // valid only for vectors in the space
};

HomSpace hom_space_basis(const Module& m, const Module& n);
std::vector<Morphism> hom_space(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);

// Exhaustive search of Hom(M, N) for a blockwise invertible element.
// Requires p^dim(Hom) <= cap, else CapExceeded.
bool is_isomorphic(const Module& m, const Module& n, std::uint64_t cap = 1u << 20);

Module direct_sum(AlgPtr a, const std::vector<Module>& parts);

std::pair<Module, Morphism> kernel_module(const Morphism& f);    // (K, inclusion)
std::pair<Module, Morphism> cokernel_module(const Morphism& f);  // (C, projection)

// Top multiplicities m_v = dim of block v of M / M rad(A), with chosen
// complement representatives (rows) used by the cover.
struct TopData {
    std::vector<int> mult;  // per vertex index
    std::vector<Mat> reps;  // per vertex: mult x dims[v] rows
};
TopData top(const Module& m);

struct CoverData {
    Module p;
    Morphism cover;                     // P -> M, surjective, iso on tops
    std::vector<int> summand_vertices;  // vertex index per summand
};
// Projective cover. Zero modules are rejected here; the internal
// presentation machinery handles them separately.
CoverData projective_cover(const Module& m);

Module syzygy(const Module& m);
bool is_projective_module(const Module& m);
bool is_pd_le_one(const Module& m);

struct PdBound {
    int value = 0;
    bool exact = true;  // if false, pd > value
    std::string str() const { return exact ? std::to_string(value) : ">" + std::to_string(value); }
};
PdBound pd_up_to(const Module& m, int cutoff);

// dim coker( Hom(P0, N) -> Hom(Omega M, N) ) along the syzygy inclusion.
int ext1_dim(const Module& m, const Module& n);

// Vector-space dual: a module over the opposite algebra with transposed
// actions.
Module dual_to_opposite(const Module& m);

// Cokernel of Hom(-, A) applied to a minimal projective presentation;
// lives over the opposite algebra. Vanishes on projectives.
Module transpose_module(const Module& m);

// Auslander-Reiten translate D Tr. Zero exactly on projectives; strips
// projective summands.
Module tau(const Module& m);

bool is_tau_rigid(const Module& m);

bool is_sincere(const Module& m);
int annihilator_dim(const Module& m);
bool is_faithful(const Module& m);

// Members of the pool that are factors of finite direct sums of copies
// of M. A surjection M^k -> N with k = number of top generators of N is
// searched exhaustively over the Hom space (cap-guarded).
std::vector<int> fac_members(const Module& m, const std::vector<Module>& pool,
                             std::uint64_t cap = 1u << 20);

// Morphism between sums of projectives given by left multiplications:
// component P_{src[i]} -> P_{dst[j]} is x -> m[i][j] * x with
// m[i][j] in e_{dst[j]} A e_{src[i]} (coefficient vectors over A).
Morphism projective_matrix_morphism(AlgPtr a, const std::vector<int>& src_vertices,
                                    const std::vector<int>& dst_vertices,
                                    const std::vector<std::vector<Vec>>& m);

} // namespace tautilt
