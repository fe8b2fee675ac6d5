#pragma once

#include <string>

#include "tautilt/classify.hpp"

namespace tautilt {

// Deterministic JSON serialization of a classification report. Keys are
// emitted in a fixed order and runs with identical inputs produce
// byte-identical output. The schema is documented in
// docs/report_schema.md.
std::string report_to_json(const ClassificationReport& rep, int indent = 2);

// Plain text dump of a based algebra (dimension, loop flag, basis, and
// optionally the multiplication table).
std::string algebra_to_text(const Algebra& a, bool with_table);
std::string algebra_to_json(const Algebra& a);

// Compatibility graph: nodes are the indecomposables, edges join
// tau-rigid pairs that can share a tau-tilting module.
std::string dot_compat(const ClassificationReport& rep);

// Support family diagram: nodes are support tau-tilting entries, edges
// are one-step summand-set inclusions. Tilting entries are doubled,
// tau-tilting entries bold.
std::string dot_families(const ClassificationReport& rep);

} // namespace tautilt
