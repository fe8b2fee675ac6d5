#include "tautilt/corpus.hpp"

namespace tautilt {

namespace {

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> c;

    {
        CorpusEntry e;
        e.name = "a3rad2";
        e.description = "linear A3 quiver with the composite of its two arrows killed";
        e.source =
            "field = 2\n"
            "vertices = [1, 2, 3]\n"
            "arrows = [ [\"a\", 1, 2], [\"b\", 2, 3] ]\n"
            "relations = [ \"a*b\" ]\n";
        e.recommended_bound = {1, 1, 1};
        e.golden = {5, 5, 2, 3, 12, false, false, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "local2";
        e.description = "one vertex with a loop x and x*x = 0; local, not hereditary";
        e.source =
            "field = 2\n"
            "vertices = [1]\n"
            "arrows = [ [\"x\", 1, 1] ]\n"
            "relations = [ \"x*x\" ]\n";
        e.recommended_bound = {2};
        e.golden = {2, 2, 1, 1, 2, false, true, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "kronecker";
        e.description = "two parallel arrows; representation infinite, families not computed";
        e.source =
            "field = 2\n"
            "vertices = [1, 2]\n"
            "arrows = [ [\"a\", 1, 2], [\"b\", 1, 2] ]\n"
            "relations = [ ]\n";
        e.recommended_bound = {1, 1};
        e.families = false;
        e.golden.dim = 4;
        e.golden.indecomposables = 5;
        e.golden.hereditary = true;
        e.golden.has_loop = false;
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "linear-a1";
        e.description = "a single vertex and no arrows";
        e.source =
            "field = 2\n"
            "vertices = [1]\n"
            "arrows = [ ]\n"
            "relations = [ ]\n";
        e.recommended_bound = {1};
        e.golden = {1, 1, 1, 1, 2, true, false, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "linear-a2";
        e.description = "path algebra of 1 -> 2";
        e.source =
            "field = 2\n"
            "vertices = [1, 2]\n"
            "arrows = [ [\"a\", 1, 2] ]\n"
            "relations = [ ]\n";
        e.recommended_bound = {1, 1};
        e.golden = {3, 3, 2, 2, 5, true, false, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "linear-a3";
        e.description = "path algebra of 1 -> 2 -> 3";
        e.source =
            "field = 2\n"
            "vertices = [1, 2, 3]\n"
            "arrows = [ [\"a\", 1, 2], [\"b\", 2, 3] ]\n"
            "relations = [ ]\n";
        e.recommended_bound = {1, 1, 1};
        e.golden = {6, 6, 5, 5, 14, true, false, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "linear-a4";
        e.description = "path algebra of 1 -> 2 -> 3 -> 4";
        e.source =
            "field = 2\n"
            "vertices = [1, 2, 3, 4]\n"
            "arrows = [ [\"a\", 1, 2], [\"b\", 2, 3], [\"c\", 3, 4] ]\n"
            "relations = [ ]\n";
        e.recommended_bound = {1, 1, 1, 1};
        e.golden = {10, 10, 14, 14, 42, true, false, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "nakayama-rad2-a4";
        e.description = "linear A4 with every length-two path killed";
        e.source =
            "field = 2\n"
            "vertices = [1, 2, 3, 4]\n"
            "arrows = [ [\"a\", 1, 2], [\"b\", 2, 3], [\"c\", 3, 4] ]\n"
            "relations = [ \"a*b\", \"b*c\" ]\n";
        e.recommended_bound = {1, 1, 1, 1};
        e.golden = {7, 7, 2, 5, 29, false, false, "PASS"};
        c.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.name = "commutative-square";
        e.description = "square 1 -> 2,3 -> 4 with the two composites identified";
        e.source =
            "field = 2\n"
            "vertices = [1, 2, 3, 4]\n"
            "arrows = [ [\"a\", 1, 2], [\"b\", 1, 3], [\"c\", 2, 4], [\"d\", 3, 4] ]\n"
            "relations = [ \"a*c - 1*b*d\" ]\n";
        e.recommended_bound = {1, 1, 1, 1};
        e.golden = {9, 11, 14, 15, 46, false, false, "PASS"};
        c.push_back(std::move(e));
    }
    return c;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> c = build_corpus();
    return c;
}

const CorpusEntry* corpus_find(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace tautilt
