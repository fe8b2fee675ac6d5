#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautilt/module.hpp"

namespace tautilt {

// Iso-class representatives of all modules with dimension vector
// componentwise <= bound, the zero module first, in deterministic order
// (dimension vector lex, then action tuple lex; first found represents
// its class). CapExceeded carries the offending dimension vector.
std::vector<Module> enumerate_modules(AlgPtr a, const std::vector<int>& bound,
                                      std::uint64_t cap = 1u << 20);

// Indecomposable iff End(M) contains no idempotent besides 0 and the
// identity; the End space is scanned exhaustively under the cap. The
// zero module is not indecomposable.
bool is_indecomposable(const Module& m, std::uint64_t cap = 1u << 20);

// Degree over F_p of End(M) modulo its radical, for indecomposable M
// (where End is local and non-units are exactly the radical). Degree 1
// means the class behaves as over an algebraically closed field; larger
// degrees are flagged in the classification report.
int end_division_degree(const Module& m, std::uint64_t cap = 1u << 20);

struct IndecEntry {
    Module rep;
    Module tau_rep;
    std::string name;
    bool tau_rigid = false;
    bool pd_le_one = false;
    bool sincere = false;
    bool faithful = false;
    bool self_ext_free = false;
    PdBound pd;
};

struct IndecTable {
    AlgPtr alg;
    std::vector<int> bound;
    std::vector<IndecEntry> entries;
    // pairwise tables, entry [i][j]
    std::vector<std::vector<int>> dim_hom;
    std::vector<std::vector<int>> ext1;
    std::vector<std::vector<int>> hom_tau;  // dim Hom(X_i, tau X_j)
    // entries whose endomorphism ring has a division quotient larger
    // than F_p; the prime-field classification is then not conclusive
    std::vector<std::string> field_warnings;

    int size() const { return static_cast<int>(entries.size()); }
    std::string label_of(const std::vector<int>& summands) const;  // "P1+P3+S1"
};

IndecTable enumerate_indecomposables(AlgPtr a, const std::vector<int>& bound,
                                     std::uint64_t cap = 1u << 20);

// n-subsets (n = number of vertices) of the table; both enumerations
// walk the same backtracking clique search over precomputed pairwise
// compatibility.
std::vector<std::vector<int>> enumerate_tau_tilting(const IndecTable& t);
std::vector<std::vector<int>> enumerate_tilting(const IndecTable& t);

struct SupportEntry {
    std::vector<int> support;   // vertex ids with nonzero blocks allowed
    std::vector<Module> summands;  // lifted to the ambient algebra
    std::string label;
};

// For every proper vertex subset E, the tau-tilting modules of A/<e_E>
// lifted back to A (zero blocks on E), plus the zero pair; duplicates
// keep the largest support.
std::vector<SupportEntry> enumerate_support_tau_tilting(AlgPtr a, const std::vector<int>& bound,
                                                        std::uint64_t cap = 1u << 20);

struct HereditaryInfo {
    bool hereditary = false;
    std::vector<PdBound> pd_simples;  // per vertex index, cutoff n+1
};

// A finite dimensional algebra is hereditary iff every vertex simple
// has projective dimension <= 1.
HereditaryInfo hereditary_info(AlgPtr a);

// Index of a tau-rigid entry missing from every tau-tilting module, or
// nullopt when each can be completed.
std::optional<int> completion_counterexample(const IndecTable& t,
                                             const std::vector<std::vector<int>>& tau_tilting);

struct SincereFaithfulReport {
    bool tau_tilting_all_sincere = true;
    bool tilting_all_faithful = true;
    // on hereditary algebras: sincere with no self-extensions => faithful
    bool sincere_selfextfree_faithful = true;
    std::vector<std::string> sincere_not_faithful;  // labels of witnesses
};

// Options governing a classification run.
struct ClassifyOptions {
    std::vector<int> max_dim;       // per vertex
    int max_length = 16;
    std::uint64_t cap = 1u << 20;
    bool families = true;           // enumerate tilting families
    bool saturation = true;         // re-run indecomposables at bound+1
};

struct SaturationInfo {
    bool checked = false;
    int new_indecomposables = 0;
    bool warning = false;
    std::string note;
};

struct ClassificationReport {
    std::string algebra_name;
    AlgPtr alg;
    ClassifyOptions options;
    bool has_loop_flag = false;
    HereditaryInfo hereditary;
    IndecTable table;
    SaturationInfo saturation;
    bool families_computed = false;
    std::vector<std::vector<int>> tilting;       // summand index sets, sorted
    std::vector<std::vector<int>> tau_tilting;
    std::vector<SupportEntry> support_tau_tilting;
    std::optional<int> completion_missing;       // entry index, families only
    SincereFaithfulReport sincere_faithful;
    // verdict: hereditary <=> (no loop and tilting == tau-tilting)
    bool families_equal = false;
    std::string verdict;                          // "PASS" | "FAIL" | "SKIP"
    std::optional<std::vector<int>> witness;      // tau-tilting, not tilting
};

// The full pipeline behind `classify` and `check-theorem`.
ClassificationReport classify_algebra(AlgPtr a, const std::string& name,
                                      const ClassifyOptions& options);

} // namespace tautilt
