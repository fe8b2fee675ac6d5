#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tautilt/classify.hpp"

namespace tautilt {

// Frozen facts about a builtin, re-checked against every run.
struct GoldenFacts {
    std::optional<int> dim;
    std::optional<int> indecomposables;
    std::optional<int> tilting_count;
    std::optional<int> tau_tilting_count;
    std::optional<int> support_count;
    std::optional<bool> hereditary;
    std::optional<bool> has_loop;
    std::optional<std::string> verdict;
};

struct CorpusEntry {
    std::string name;
    std::string description;
    std::string source;               // algebra file text
    std::vector<int> recommended_bound;
    bool families = true;             // family enumeration is meaningful
    GoldenFacts golden;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);

} // namespace tautilt
