#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tautilt/corpus.hpp"
#include "tautilt/report.hpp"

namespace {

using namespace tautilt;

struct CommonOpts {
    std::string builtin;
    std::string file;
    std::uint32_t field = 0;        // 0 = take from file / default 2
    std::string max_dim;            // "2" or "1,1,1"
    int max_length = 16;
    std::uint64_t cap = 0;          // 0 = env or default
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    auto* b = cmd->add_option("--builtin", o.builtin, "name of a builtin corpus algebra");
    auto* f = cmd->add_option("--file", o.file, "path of an algebra file");
    b->excludes(f);
    cmd->add_option("--field", o.field, "prime field characteristic (overrides the file)");
    cmd->add_option("--max-dim", o.max_dim,
                    "dimension bound: single integer or per-vertex comma list");
    cmd->add_option("--max-length", o.max_length, "path length cutoff for the basis")
        ->default_val(16);
    cmd->add_option("--cap", o.cap, "enumeration cap (default 2^20, env TAUTILT_CAP)");
}

std::uint64_t resolve_cap(const CommonOpts& o) {
    if (o.cap != 0) return o.cap;
    if (const char* env = std::getenv("TAUTILT_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw InvalidArgument("TAUTILT_CAP must be a positive integer");
    }
    return 1u << 20;
}

struct LoadedAlgebra {
    AlgPtr alg;
    std::string name;
    std::vector<int> bound;
    bool families = true;
};

LoadedAlgebra load_algebra(const CommonOpts& o) {
    std::string text, name;
    std::vector<int> recommended;
    bool families = true;
    if (!o.builtin.empty()) {
        const CorpusEntry* e = corpus_find(o.builtin);
        if (!e) {
            std::string names;
            for (const CorpusEntry& c : corpus()) names += " " + c.name;
            throw InvalidArgument("unknown builtin '" + o.builtin + "'; available:" + names);
        }
        text = e->source;
        name = e->name;
        recommended = e->recommended_bound;
        families = e->families;
    } else if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw InvalidArgument("cannot open '" + o.file + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        name = o.file;
    } else {
        throw InvalidArgument("either --builtin or --file is required");
    }

    AlgebraSpec spec = parse_spec(text);
    if (o.field != 0) spec.characteristic = o.field;

    LoadedAlgebra la;
    la.alg = build_basis(spec, o.max_length);
    la.name = name;
    la.families = families;

    int nv = la.alg->num_vertices();
    if (!o.max_dim.empty()) {
        std::vector<int> bound;
        std::stringstream ss(o.max_dim);
        std::string tok;
        while (std::getline(ss, tok, ',')) bound.push_back(std::stoi(tok));
        if (bound.size() == 1) bound.assign(nv, bound[0]);
        if (static_cast<int>(bound.size()) != nv)
            throw InvalidArgument("--max-dim needs 1 or " + std::to_string(nv) + " entries");
        for (int b : bound)
            if (b < 0) throw InvalidArgument("--max-dim entries must be >= 0");
        la.bound = bound;
    } else if (!recommended.empty()) {
        la.bound = recommended;
    } else {
        la.bound.assign(nv, 2);
    }
    return la;
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    // write atomically: temp file in place, then rename
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw InvalidArgument("cannot write '" + tmp + "'");
        os << payload;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw InvalidArgument("cannot move report into place at '" + out_path + "'");
}

ClassificationReport run_classify(const CommonOpts& o, const LoadedAlgebra& la) {
    ClassifyOptions opts;
    opts.max_dim = la.bound;
    opts.max_length = o.max_length;
    opts.cap = resolve_cap(o);
    opts.families = la.families;
    return classify_algebra(la.alg, la.name, opts);
}

int theorem_exit(const ClassificationReport& rep) { return rep.verdict == "FAIL" ? 1 : 0; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tautilt: tilting and tau-tilting module classification for bound quiver algebras"};
    app.require_subcommand(1);

    CommonOpts basis_opts, classify_opts, theorem_opts, export_opts;
    bool basis_table = false, basis_json = false, theorem_all = false;
    std::string theorem_name, dot_kind = "compat";

    CLI::App* cmd_basis = app.add_subcommand("basis", "build and print the algebra basis");
    add_common(cmd_basis, basis_opts);
    cmd_basis->add_flag("--table", basis_table, "include the multiplication table");
    cmd_basis->add_flag("--json", basis_json, "emit JSON instead of text");
    cmd_basis->add_option("--out", basis_opts.out, "write to a file instead of stdout");

    CLI::App* cmd_classify = app.add_subcommand("classify", "full classification report (JSON)");
    add_common(cmd_classify, classify_opts);
    cmd_classify->add_option("--out", classify_opts.out, "write to a file instead of stdout");

    CLI::App* cmd_theorem =
        app.add_subcommand("check-theorem", "hereditary <=> (no loop and tau-tilting = tilting)");
    add_common(cmd_theorem, theorem_opts);
    cmd_theorem->add_flag("--all", theorem_all, "run every builtin corpus algebra");
    cmd_theorem->add_option("name", theorem_name, "builtin name (same as --builtin)");
    cmd_theorem->add_option("--out", theorem_opts.out, "write to a file instead of stdout");

    CLI::App* cmd_export = app.add_subcommand("export", "emit DOT graphs from a classification");
    add_common(cmd_export, export_opts);
    cmd_export->add_option("--dot", dot_kind, "graph kind: compat or families")->default_val("compat");
    cmd_export->add_option("--out", export_opts.out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_basis->parsed()) {
            LoadedAlgebra la = load_algebra(basis_opts);
            emit(basis_opts.out,
                 basis_json ? algebra_to_json(*la.alg) : algebra_to_text(*la.alg, basis_table));
            return 0;
        }
        if (cmd_classify->parsed()) {
            LoadedAlgebra la = load_algebra(classify_opts);
            ClassificationReport rep = run_classify(classify_opts, la);
            emit(classify_opts.out, report_to_json(rep));
            return theorem_exit(rep);
        }
        if (cmd_theorem->parsed()) {
            std::vector<std::string> names;
            if (theorem_all) {
                for (const CorpusEntry& e : corpus()) names.push_back(e.name);
            } else {
                if (!theorem_name.empty()) theorem_opts.builtin = theorem_name;
                if (theorem_opts.builtin.empty() && theorem_opts.file.empty())
                    throw InvalidArgument("check-theorem needs --all, a builtin name, or --file");
                names.push_back("");
            }
            std::ostringstream table;
            table << "algebra              hereditary  loop  families-equal  verdict\n";
            bool any_fail = false;
            for (const std::string& n : names) {
                CommonOpts o = theorem_opts;
                if (!n.empty()) { o.builtin = n; o.file.clear(); }
                LoadedAlgebra la = load_algebra(o);
                ClassificationReport rep = run_classify(o, la);
                char row[160];
                std::snprintf(row, sizeof(row), "%-20s %-11s %-5s %-15s %s\n",
                              rep.algebra_name.c_str(),
                              rep.hereditary.hereditary ? "yes" : "no",
                              rep.has_loop_flag ? "yes" : "no",
                              rep.families_computed ? (rep.families_equal ? "yes" : "no") : "n/a",
                              rep.verdict.c_str());
                table << row;
                if (rep.verdict == "FAIL") any_fail = true;
            }
            emit(theorem_opts.out, table.str());
            return any_fail ? 1 : 0;
        }
        if (cmd_export->parsed()) {
            if (dot_kind != "compat" && dot_kind != "families")
                throw InvalidArgument("--dot must be 'compat' or 'families'");
            LoadedAlgebra la = load_algebra(export_opts);
            ClassificationReport rep = run_classify(export_opts, la);
            if (dot_kind == "families" && !rep.families_computed)
                throw InvalidArgument("families were not computed for this algebra");
            emit(export_opts.out, dot_kind == "compat" ? dot_compat(rep) : dot_families(rep));
            return theorem_exit(rep);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
