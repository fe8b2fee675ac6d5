#include "tautilt/quiver.hpp"

#include "tautilt/fp.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

namespace tautilt {

bool Quiver::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

int Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

void Quiver::validate() const {
    if (vertices.empty()) throw InvalidArgument("quiver has no vertices");
    std::set<int> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw InvalidArgument("duplicate vertex ids");
    std::set<std::string> names;
    for (const Arrow& a : arrows) {
        if (!names.insert(a.name).second)
            throw InvalidArgument("duplicate arrow name '" + a.name + "'");
        if (!has_vertex(a.source) || !has_vertex(a.target))
            throw InvalidArgument("arrow '" + a.name + "' uses an undeclared vertex");
    }
}

bool has_loop(const Quiver& q) {
    return std::any_of(q.arrows.begin(), q.arrows.end(),
                       [](const Arrow& a) { return a.source == a.target; });
}

int PathWord::target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].target;
}

namespace {

bool valid_arrow_name(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

} // namespace

RelationExpr parse_relation(const Quiver& q, std::uint32_t p, const std::string& text, int line) {
    PrimeField F(p);
    RelationExpr rel;
    rel.text = strip(text);
    if (rel.text.empty()) throw ParseError("empty relation", line);

    // split into signed terms at top-level + and -
    struct RawTerm { int sign; std::string body; };
    std::vector<RawTerm> raw;
    int sign = +1;
    std::string cur;
    for (char c : rel.text) {
        if (c != '+' && c != '-') { cur += c; continue; }
        std::string body = strip(cur);
        cur.clear();
        if (!body.empty()) {
            raw.push_back({sign, body});
            sign = (c == '-') ? -1 : +1;
        } else if (raw.empty()) {
            sign *= (c == '-') ? -1 : +1;  // leading sign
        } else {
            throw ParseError("dangling sign in relation '" + rel.text + "'", line);
        }
    }
    if (strip(cur).empty()) throw ParseError("relation '" + rel.text + "' ends with a sign", line);
    raw.push_back({sign, strip(cur)});

    bool first = true;
    for (const RawTerm& rt : raw) {
        std::vector<std::string> toks;
        std::string acc;
        for (char c : rt.body) {
            if (c == '*') { toks.push_back(strip(acc)); acc.clear(); }
            else acc += c;
        }
        toks.push_back(strip(acc));
        for (const std::string& tok : toks)
            if (tok.empty()) throw ParseError("empty factor in relation term '" + rt.body + "'", line);

        long long coeff = rt.sign;
        std::size_t k = 0;
        if (all_digits(toks[0])) {
            coeff *= std::stoll(toks[0]);
            k = 1;
        }
        if (k == toks.size())
            throw ParseError("relation term '" + rt.body + "' has no path", line);

        PathWord path;
        for (std::size_t i = k; i < toks.size(); ++i) {
            int ai = q.arrow_index(toks[i]);
            if (ai < 0) throw InvalidArgument("unknown arrow '" + toks[i] + "' in relation '" + rel.text + "'");
            if (i == k) path.source = q.arrows[ai].source;
            else if (q.arrows[path.arrows.back()].target != q.arrows[ai].source)
                throw InvalidArgument("non-composable path in relation '" + rel.text + "': '" +
                                      q.arrows[path.arrows.back()].name + "' does not reach '" + toks[i] + "'");
            path.arrows.push_back(ai);
        }
        if (path.length() < 2)
            throw InvalidArgument("non-admissible relation '" + rel.text + "': path of length " +
                                  std::to_string(path.length()) + " (need >= 2)");

        int s = path.source, t = path.target(q);
        if (first) { rel.source = s; rel.target = t; first = false; }
        else if (s != rel.source || t != rel.target)
            throw InvalidArgument("relation '" + rel.text + "' mixes non-parallel paths");

        std::uint32_t c = F.reduce(coeff);
        if (c != 0) rel.terms.push_back({c, std::move(path)});
    }
    return rel;
}

AlgebraSpec parse_spec(const std::string& text) {
    using json = nlohmann::json;

    AlgebraSpec spec;
    bool have_vertices = false, have_arrows = false;
    json jvertices, jarrows, jrelations;

    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') { lines.push_back(cur); cur.clear(); }
            else cur += c;
        }
        lines.push_back(cur);
    }

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string line = lines[ln];
        // strip comments, respecting string quotes
        bool in_str = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_str = !in_str;
            else if (line[i] == '#' && !in_str) { line = line.substr(0, i); break; }
        }
        line = strip(line);
        if (line.empty()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value'", static_cast<int>(ln + 1));
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (val.empty()) throw ParseError("missing value for '" + key + "'", static_cast<int>(ln + 1));

        json j;
        try {
            j = json::parse(val);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("bad value for '") + key + "': " + e.what(),
                             static_cast<int>(ln + 1));
        }

        if (key == "field") {
            if (!j.is_number_unsigned())
                throw ParseError("field must be a positive integer", static_cast<int>(ln + 1));
            spec.characteristic = j.get<std::uint32_t>();
        } else if (key == "vertices") {
            jvertices = j; have_vertices = true;
            if (!j.is_array()) throw ParseError("vertices must be a list", static_cast<int>(ln + 1));
        } else if (key == "arrows") {
            jarrows = j; have_arrows = true;
            if (!j.is_array()) throw ParseError("arrows must be a list", static_cast<int>(ln + 1));
        } else if (key == "relations") {
            jrelations = j;
            if (!j.is_array()) throw ParseError("relations must be a list", static_cast<int>(ln + 1));
        } else {
            throw ParseError("unknown key '" + key + "'", static_cast<int>(ln + 1));
        }
    }

    if (!have_vertices) throw ParseError("missing 'vertices'", static_cast<int>(lines.size()));
    for (const auto& v : jvertices) {
        if (!v.is_number_integer()) throw InvalidArgument("vertex ids must be integers");
        spec.quiver.vertices.push_back(v.get<int>());
    }
    std::sort(spec.quiver.vertices.begin(), spec.quiver.vertices.end());

    if (have_arrows)
        for (const auto& a : jarrows) {
            if (!a.is_array() || a.size() != 3 || !a[0].is_string() ||
                !a[1].is_number_integer() || !a[2].is_number_integer())
                throw InvalidArgument("each arrow must be [\"name\", source, target]");
            Arrow arr{a[0].get<std::string>(), a[1].get<int>(), a[2].get<int>()};
            if (!valid_arrow_name(arr.name))
                throw InvalidArgument("arrow name '" + arr.name + "' must be an identifier");
            spec.quiver.arrows.push_back(std::move(arr));
        }

    spec.quiver.validate();
    PrimeField F(spec.characteristic);  // validates primality

    if (!jrelations.is_null())
        for (const auto& r : jrelations) {
            if (!r.is_string()) throw InvalidArgument("each relation must be a string");
            RelationExpr rel = parse_relation(spec.quiver, spec.characteristic, r.get<std::string>());
            if (!rel.terms.empty()) spec.relations.push_back(std::move(rel));
        }

    return spec;
}

} // namespace tautilt
