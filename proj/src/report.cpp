#include "tautilt/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace tautilt {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json module_json(const Module& m) {
    const Algebra& a = *m.alg;
    ordered_json j;
    ordered_json dv = ordered_json::object();
    for (int v = 0; v < a.num_vertices(); ++v)
        dv[std::to_string(a.vertices[v])] = m.dims[v];
    j["dim_vector"] = dv;
    ordered_json acts = ordered_json::object();
    for (int bi = 0; bi < a.dim(); ++bi) {
        const BasisElem& b = a.basis[bi];
        if (b.length() == 0) continue;
        int s = a.vertex_index(b.source), t = a.vertex_index(b.target);
        if (m.dims[s] == 0 || m.dims[t] == 0) continue;
        ordered_json rows = ordered_json::array();
        for (int r = 0; r < m.act[bi].rows; ++r) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < m.act[bi].cols; ++c) row.push_back(m.act[bi].at(r, c));
            rows.push_back(std::move(row));
        }
        acts[b.name] = std::move(rows);
    }
    j["actions"] = std::move(acts);
    return j;
}

ordered_json int_table(const std::vector<std::vector<int>>& t) {
    ordered_json j = ordered_json::array();
    for (const auto& row : t) j.push_back(row);
    return j;
}

} // namespace

std::string report_to_json(const ClassificationReport& rep, int indent) {
    const Algebra& a = *rep.alg;
    ordered_json j;
    j["tool"] = "tautilt";
    ordered_json alg;
    alg["name"] = rep.algebra_name;
    alg["field"] = a.field.p();
    alg["dim"] = a.dim();
    alg["vertices"] = a.vertices;
    ordered_json arrows = ordered_json::array();
    if (a.quiver)
        for (const Arrow& ar : a.quiver->arrows)
            arrows.push_back(ordered_json::array({ar.name, ar.source, ar.target}));
    alg["arrows"] = std::move(arrows);
    ordered_json basis = ordered_json::array();
    for (const BasisElem& b : a.basis)
        basis.push_back(ordered_json::array({b.name, b.source, b.target}));
    alg["basis"] = std::move(basis);
    alg["has_loop"] = rep.has_loop_flag;
    j["algebra"] = std::move(alg);

    ordered_json bounds;
    bounds["max_dim"] = rep.options.max_dim;
    bounds["max_length"] = rep.options.max_length;
    bounds["cap"] = rep.options.cap;
    j["bounds"] = std::move(bounds);

    ordered_json sat;
    sat["checked"] = rep.saturation.checked;
    sat["new_indecomposables"] = rep.saturation.new_indecomposables;
    sat["warning"] = rep.saturation.warning;
    if (!rep.saturation.note.empty()) sat["note"] = rep.saturation.note;
    j["saturation"] = std::move(sat);
    j["field_warnings"] = rep.table.field_warnings;

    ordered_json indecs = ordered_json::array();
    for (const IndecEntry& e : rep.table.entries) {
        ordered_json ind;
        ind["name"] = e.name;
        ind["module"] = module_json(e.rep);
        ind["tau_rigid"] = e.tau_rigid;
        ind["pd_le_one"] = e.pd_le_one;
        ind["pd"] = e.pd.str();
        ind["sincere"] = e.sincere;
        ind["faithful"] = e.faithful;
        ind["self_ext_free"] = e.self_ext_free;
        indecs.push_back(std::move(ind));
    }
    j["indecomposables"] = std::move(indecs);

    ordered_json tables;
    tables["dim_hom"] = int_table(rep.table.dim_hom);
    tables["ext1"] = int_table(rep.table.ext1);
    tables["hom_tau"] = int_table(rep.table.hom_tau);
    j["tables"] = std::move(tables);

    ordered_json fam;
    fam["computed"] = rep.families_computed;
    if (rep.families_computed) {
        ordered_json tilt = ordered_json::array(), tiltl = ordered_json::array();
        for (const auto& s : rep.tilting) {
            tilt.push_back(s);
            tiltl.push_back(rep.table.label_of(s));
        }
        ordered_json taut = ordered_json::array(), tautl = ordered_json::array();
        for (const auto& s : rep.tau_tilting) {
            taut.push_back(s);
            tautl.push_back(rep.table.label_of(s));
        }
        fam["tilting"] = std::move(tilt);
        fam["tilting_labels"] = std::move(tiltl);
        fam["tau_tilting"] = std::move(taut);
        fam["tau_tilting_labels"] = std::move(tautl);
        ordered_json supp = ordered_json::array();
        for (const SupportEntry& e : rep.support_tau_tilting) {
            ordered_json se;
            se["support"] = e.support;
            se["label"] = e.label;
            ordered_json mods = ordered_json::array();
            for (const Module& m : e.summands) mods.push_back(module_json(m));
            se["summands"] = std::move(mods);
            supp.push_back(std::move(se));
        }
        fam["support_tau_tilting"] = std::move(supp);
        fam["completion_property"] = !rep.completion_missing.has_value();
        if (rep.completion_missing)
            fam["completion_counterexample"] = rep.table.entries[*rep.completion_missing].name;
        ordered_json sf;
        sf["tau_tilting_all_sincere"] = rep.sincere_faithful.tau_tilting_all_sincere;
        sf["tilting_all_faithful"] = rep.sincere_faithful.tilting_all_faithful;
        sf["sincere_selfextfree_faithful"] = rep.sincere_faithful.sincere_selfextfree_faithful;
        sf["sincere_not_faithful"] = rep.sincere_faithful.sincere_not_faithful;
        fam["sincere_faithful"] = std::move(sf);
    } else {
        fam["note"] = "NOT COMPUTED";
    }
    j["families"] = std::move(fam);

    ordered_json her;
    her["hereditary"] = rep.hereditary.hereditary;
    ordered_json pds = ordered_json::object();
    for (int v = 0; v < a.num_vertices(); ++v)
        pds[std::to_string(a.vertices[v])] = rep.hereditary.pd_simples[v].str();
    her["pd_simples"] = std::move(pds);
    j["hereditary"] = std::move(her);

    ordered_json thm;
    thm["verdict"] = rep.verdict;
    if (rep.families_computed) thm["families_equal"] = rep.families_equal;
    if (rep.witness) {
        thm["witness"] = rep.table.label_of(*rep.witness);
        thm["witness_summands"] = *rep.witness;
    }
    j["theorem"] = std::move(thm);

    return j.dump(indent) + "\n";
}

std::string algebra_to_text(const Algebra& a, bool with_table) {
    std::ostringstream os;
    os << "dim = " << a.dim();
    if (a.quiver) os << ", loop: " << (has_loop(*a.quiver) ? "yes" : "no");
    os << "\n";
    os << "field = " << a.field.p() << "\n";
    os << "basis:\n";
    for (const BasisElem& b : a.basis)
        os << "  " << b.name << "  (" << b.source << " -> " << b.target << ")\n";
    os << "radical dim = " << a.radical.size() << "\n";
    if (with_table) {
        os << "table:\n";
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j) {
                const auto& prod = a.product(i, j);
                if (prod.empty()) continue;
                os << "  " << a.basis[i].name << " * " << a.basis[j].name << " = ";
                bool first = true;
                for (const auto& [k, c] : prod) {
                    if (!first) os << " + ";
                    if (c != 1) os << c << "*";
                    os << a.basis[k].name;
                    first = false;
                }
                os << "\n";
            }
    }
    return os.str();
}

std::string algebra_to_json(const Algebra& a) {
    ordered_json j;
    j["dim"] = a.dim();
    j["field"] = a.field.p();
    j["vertices"] = a.vertices;
    if (a.quiver) j["has_loop"] = has_loop(*a.quiver);
    ordered_json basis = ordered_json::array();
    for (const BasisElem& b : a.basis)
        basis.push_back(ordered_json::array({b.name, b.source, b.target}));
    j["basis"] = std::move(basis);
    ordered_json table = ordered_json::object();
    for (int i = 0; i < a.dim(); ++i)
        for (int j2 = 0; j2 < a.dim(); ++j2) {
            const auto& prod = a.product(i, j2);
            if (prod.empty()) continue;
            ordered_json terms = ordered_json::array();
            for (const auto& [k, c] : prod)
                terms.push_back(ordered_json::array({c, a.basis[k].name}));
            table[a.basis[i].name + "*" + a.basis[j2].name] = std::move(terms);
        }
    j["table"] = std::move(table);
    return j.dump(2) + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string r;
    for (char c : s) {
        if (c == '"' || c == '\\') r += '\\';
        r += c;
    }
    return r;
}

} // namespace

std::string dot_compat(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "digraph compat {\n";
    os << "  graph [label=\"" << dot_escape(rep.algebra_name) << " compatibility\"];\n";
    os << "  edge [dir=none];\n";
    const IndecTable& t = rep.table;
    for (int i = 0; i < t.size(); ++i) {
        os << "  n" << i << " [label=\"" << dot_escape(t.entries[i].name) << "\"";
        if (!t.entries[i].tau_rigid) os << ", style=dashed";
        os << "];\n";
    }
    for (int i = 0; i < t.size(); ++i)
        for (int j = i + 1; j < t.size(); ++j) {
            bool rigid = t.entries[i].tau_rigid && t.entries[j].tau_rigid;
            if (rigid && t.hom_tau[i][j] == 0 && t.hom_tau[j][i] == 0)
                os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

std::string dot_families(const ClassificationReport& rep) {
    std::ostringstream os;
    os << "digraph families {\n";
    os << "  graph [label=\"" << dot_escape(rep.algebra_name) << " support tau-tilting\"];\n";
    const auto& supp = rep.support_tau_tilting;

    // recover each entry's summand index set over the table where
    // possible (full-support entries); others matched by label only
    auto label_of = [&](std::size_t i) { return supp[i].label; };
    std::vector<std::string> tilt_labels, taut_labels;
    for (const auto& s : rep.tilting) tilt_labels.push_back(rep.table.label_of(s));
    for (const auto& s : rep.tau_tilting) taut_labels.push_back(rep.table.label_of(s));

    for (std::size_t i = 0; i < supp.size(); ++i) {
        os << "  n" << i << " [label=\"" << dot_escape(label_of(i)) << "\"";
        bool tilt = std::find(tilt_labels.begin(), tilt_labels.end(), label_of(i)) != tilt_labels.end();
        bool taut = std::find(taut_labels.begin(), taut_labels.end(), label_of(i)) != taut_labels.end();
        if (tilt) os << ", shape=doublecircle";
        else if (taut) os << ", style=bold";
        os << "];\n";
    }
    // edges: one-step inclusions of summand label sets
    auto split = [](const std::string& label) {
        std::vector<std::string> parts;
        if (label == "0") return parts;
        std::string cur;
        for (char ch : label) {
            if (ch == '+') { parts.push_back(cur); cur.clear(); }
            else cur += ch;
        }
        parts.push_back(cur);
        std::sort(parts.begin(), parts.end());
        return parts;
    };
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = 0; j < supp.size(); ++j) {
            if (i == j) continue;
            auto pi = split(label_of(i)), pj = split(label_of(j));
            if (pj.size() + 1 != pi.size()) continue;
            if (std::includes(pi.begin(), pi.end(), pj.begin(), pj.end()))
                os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace tautilt
