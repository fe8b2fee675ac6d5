#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tautilt/errors.hpp"

namespace tautilt {

struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;
};

// Finite directed multigraph. Loops are arrows with source == target;
// longer cycles do not count as loops.
struct Quiver {
    std::vector<int> vertices;  // unique ids, kept sorted ascending
    std::vector<Arrow> arrows;  // unique names

    bool has_vertex(int v) const;
    int arrow_index(const std::string& name) const;  // -1 if absent
    void validate() const;                           // throws InvalidArgument
};

bool has_loop(const Quiver& q);

// A composable word of arrows, or the trivial path at `source` when
// `arrows` is empty. Composition reads left to right: the word (a, b)
// means "first a, then b".
struct PathWord {
    int source = 0;
    std::vector<int> arrows;  // indices into Quiver::arrows

    int target(const Quiver& q) const;
    int length() const { return static_cast<int>(arrows.size()); }
};

struct RelationTerm {
    std::uint32_t coeff = 1;  // already reduced mod p
    PathWord path;
};

// Linear combination of parallel paths, every term of length >= 2.
struct RelationExpr {
    std::vector<RelationTerm> terms;
    int source = 0;
    int target = 0;
    std::string text;  // as written in the input, for diagnostics
};

struct AlgebraSpec {
    Quiver quiver;
    std::vector<RelationExpr> relations;
    std::uint32_t characteristic = 2;
};

// Parse the line-oriented key/value algebra format:
//
//   field = 2
//   vertices = [1, 2, 3]
//   arrows = [ ["a", 1, 2], ["b", 2, 3] ]
//   relations = [ "a*b - 1*c*d" ]
//
// '#' starts a comment. Paths inside relations are '*'-separated arrow
// names; a term may carry a leading integer coefficient. Errors are
// ParseError with line positions, or InvalidArgument for semantic
// violations (unknown arrows, non-composable or too-short relations).
AlgebraSpec parse_spec(const std::string& text);

// Parse a single relation string against a quiver (used by tests and by
// parse_spec itself). Coefficients reduced mod p; terms that vanish are
// dropped; an entirely vanishing relation yields an empty term list.
RelationExpr parse_relation(const Quiver& q, std::uint32_t p, const std::string& text, int line = 0);

} // namespace tautilt
