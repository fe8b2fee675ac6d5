#include "tautilt/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tautilt {

int Algebra::vertex_index(int id) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
    if (it == vertices.end() || *it != id) return -1;
    return static_cast<int>(it - vertices.begin());
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    Vec r(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (y[j] == 0) continue;
            std::uint32_t c = field.mul(x[i], y[j]);
            for (const auto& [k, s] : table_[i][j])
                r[k] = field.add(r[k], field.mul(c, s));
        }
    }
    return r;
}

Vec Algebra::unit_vec(int basis_index) const {
    Vec v(basis.size(), 0);
    v[basis_index] = 1;
    return v;
}

Vec Algebra::one() const {
    Vec v(basis.size(), 0);
    for (int b : idem) v[b] = 1;
    return v;
}

std::vector<int> Algebra::elems_between(int source_id, int target_id) const {
    std::vector<int> r;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].source == source_id && basis[i].target == target_id)
            r.push_back(static_cast<int>(i));
    return r;
}

bool Algebra::same_presentation(const Algebra& o) const {
    if (field.p() != o.field.p() || vertices != o.vertices || basis.size() != o.basis.size())
        return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].source != o.basis[i].source || basis[i].target != o.basis[i].target ||
            basis[i].name != o.basis[i].name)
            return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (table_[i][j] != o.table_[i][j]) return false;
    return true;
}

AlgPtr Algebra::opposite_of() const {
    if (op_) return op_;
    return op_back_.lock();
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y) { return a.multiply(x, y); }

AlgPtr opposite(const AlgPtr& a) {
    AlgPtr op = a->opposite_of();
    if (!op) throw InvalidArgument("algebra has no linked opposite");
    return op;
}

namespace {

std::shared_ptr<Algebra> make_opposite_raw(const std::shared_ptr<Algebra>& a);

} // namespace

struct AlgebraBuilder {
    static void set_table(Algebra& a,
                          std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> t) {
        a.table_ = std::move(t);
    }
    static const auto& table(const Algebra& a) { return a.table_; }
    static void link(const std::shared_ptr<Algebra>& a, const std::shared_ptr<Algebra>& op) {
        a->op_ = op;
        op->op_back_ = a;
    }
};

AlgPtr finalize_algebra(std::shared_ptr<Algebra> a, bool make_op) {
    if (make_op) {
        auto op = make_opposite_raw(a);
        AlgebraBuilder::link(a, op);
    }
    return a;
}

namespace {

std::shared_ptr<Algebra> make_opposite_raw(const std::shared_ptr<Algebra>& a) {
    auto op = std::make_shared<Algebra>(*a);
    op->provenance = Provenance::OppositeOf;
    op->label = a->label.empty() ? "op" : a->label + "^op";
    for (auto& b : op->basis) {
        std::swap(b.source, b.target);
        std::reverse(b.word.begin(), b.word.end());
    }
    if (op->quiver) {
        for (auto& ar : op->quiver->arrows) std::swap(ar.source, ar.target);
    }
    op->relations.clear();  // derived algebras carry no presentation
    const auto& t = AlgebraBuilder::table(*a);
    int n = a->dim();
    std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> rt(
        n, std::vector<std::vector<std::pair<int, std::uint32_t>>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rt[i][j] = t[j][i];
    AlgebraBuilder::set_table(*op, std::move(rt));
    return op;
}

struct Path {
    int source, target;
    std::vector<int> arrows;  // arrow indices
};

std::string path_name(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e" + std::to_string(p.source);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

} // namespace

AlgPtr build_basis(const AlgebraSpec& spec, int max_length, std::uint64_t path_cap) {
    if (max_length < 1) throw InvalidArgument("max_length must be >= 1");
    spec.quiver.validate();
    const Quiver& Q = spec.quiver;
    PrimeField F(spec.characteristic);

    // arrows in name order, so that extending paths parent-major /
    // name-minor lists each level in lexicographic name-sequence order
    std::vector<int> arrow_order(Q.arrows.size());
    std::iota(arrow_order.begin(), arrow_order.end(), 0);
    std::sort(arrow_order.begin(), arrow_order.end(),
              [&](int x, int y) { return Q.arrows[x].name < Q.arrows[y].name; });

    // enumerate paths level by level up to max_length
    std::vector<std::vector<Path>> levels;
    levels.push_back({});
    for (int v : Q.vertices) levels[0].push_back({v, v, {}});
    std::uint64_t total = levels[0].size();
    for (int len = 1; len <= max_length; ++len) {
        std::vector<Path> next;
        for (const Path& p : levels[len - 1])
            for (int ai : arrow_order)
                if (Q.arrows[ai].source == p.target) {
                    Path ext = p;
                    ext.arrows.push_back(ai);
                    ext.target = Q.arrows[ai].target;
                    next.push_back(std::move(ext));
                }
        total += next.size();
        if (total > path_cap)
            throw CapExceeded("path count exceeds " + std::to_string(path_cap) +
                              " at length " + std::to_string(len) +
                              "; lower max_length or simplify the quiver");
        if (next.empty()) { levels.push_back({}); break; }
        levels.push_back(std::move(next));
    }

    // global coordinates: by (length, lex), i.e. level concatenation
    std::vector<int> level_offset(levels.size() + 1, 0);
    for (std::size_t l = 0; l < levels.size(); ++l)
        level_offset[l + 1] = level_offset[l] + static_cast<int>(levels[l].size());
    int n_paths = level_offset[levels.size()];
    std::map<std::vector<int>, int> index_of_word;  // arrow word -> global index
    std::map<int, int> index_of_trivial;            // vertex -> global index
    {
        int idx = 0;
        for (const auto& lvl : levels)
            for (const Path& p : lvl) {
                if (p.arrows.empty()) index_of_trivial[p.source] = idx;
                else index_of_word[p.arrows] = idx;
                ++idx;
            }
    }
    auto path_at = [&](int idx) -> const Path& {
        int l = 0;
        while (level_offset[l + 1] <= idx) ++l;
        return levels[l][idx - level_offset[l]];
    };

    // elimination order: longest first, lex-largest first within a length,
    // so surviving representatives are the deg-lex least paths
    std::vector<int> elim_order(n_paths);
    std::iota(elim_order.begin(), elim_order.end(), 0);
    std::reverse(elim_order.begin(), elim_order.end());

    // exact ideal elements u*r*v with every term of length <= max_length
    RowSpace exact_span(F, n_paths, elim_order);
    const int L = static_cast<int>(levels.size()) - 1;  // last populated length
    for (const RelationExpr& rel : spec.relations) {
        if (rel.terms.empty()) continue;
        int maxlen = 0;
        for (const auto& t : rel.terms) maxlen = std::max(maxlen, t.path.length());
        for (int lu = 0; lu + maxlen <= L; ++lu)
            for (const Path& u : levels[lu]) {
                if (u.target != rel.source) continue;
                for (int lv = 0; lu + maxlen + lv <= L; ++lv)
                    for (const Path& v : levels[lv]) {
                        if (v.source != rel.target) continue;
                        Vec g(n_paths, 0);
                        bool fits = true;
                        for (const auto& term : rel.terms) {
                            std::vector<int> w = u.arrows;
                            w.insert(w.end(), term.path.arrows.begin(), term.path.arrows.end());
                            w.insert(w.end(), v.arrows.begin(), v.arrows.end());
                            auto it = index_of_word.find(w);
                            if (it == index_of_word.end()) { fits = false; break; }
                            g[it->second] = F.add(g[it->second], term.coeff);
                        }
                        if (fits) exact_span.insert(std::move(g));
                    }
            }
    }

    // first length m whose paths all lie in the exact span: then every
    // path of length >= m is an exact ideal element as well
    int m = -1;
    for (int cand = 1; cand <= L; ++cand) {
        bool all_in = true;
        for (int idx = level_offset[cand]; idx < level_offset[cand + 1]; ++idx) {
            Vec v(n_paths, 0);
            v[idx] = 1;
            if (!exact_span.contains(v)) { all_in = false; break; }
        }
        if (all_in) { m = cand; break; }
    }
    if (m < 0)
        throw InfiniteDimensional(
            "paths of length " + std::to_string(max_length) +
            " survive outside the ideal: the algebra is infinite dimensional, the ideal is "
            "not admissible, or max_length is too small");

    // the ideal inside the space of paths of length < m is spanned by the
    // projections of the generators whose shortest term still fits
    int n_short = level_offset[m];
    RowSpace ideal(F, n_short, [&] {
        std::vector<int> ord(n_short);
        std::iota(ord.begin(), ord.end(), 0);
        std::reverse(ord.begin(), ord.end());
        return ord;
    }());
    for (const RelationExpr& rel : spec.relations) {
        if (rel.terms.empty()) continue;
        int minlen = rel.terms[0].path.length();
        for (const auto& t : rel.terms) minlen = std::min(minlen, t.path.length());
        for (int lu = 0; lu + minlen <= m - 1; ++lu)
            for (const Path& u : levels[lu]) {
                if (u.target != rel.source) continue;
                for (int lv = 0; lu + minlen + lv <= m - 1; ++lv)
                    for (const Path& v : levels[lv]) {
                        if (v.source != rel.target) continue;
                        Vec g(n_short, 0);
                        for (const auto& term : rel.terms) {
                            if (lu + term.path.length() + lv > m - 1) continue;  // lies in the ideal
                            std::vector<int> w = u.arrows;
                            w.insert(w.end(), term.path.arrows.begin(), term.path.arrows.end());
                            w.insert(w.end(), v.arrows.begin(), v.arrows.end());
                            g[index_of_word.at(w)] = F.add(g[index_of_word.at(w)], term.coeff);
                        }
                        ideal.insert(std::move(g));
                    }
            }
    }

    // survivors, in published (length asc, lex asc) order
    std::vector<int> survivors;
    for (int idx = 0; idx < n_short; ++idx)
        if (!ideal.is_pivot(idx)) survivors.push_back(idx);
    std::vector<int> survivor_index(n_short, -1);
    for (std::size_t k = 0; k < survivors.size(); ++k) survivor_index[survivors[k]] = static_cast<int>(k);

    auto alg = std::make_shared<Algebra>(F);
    alg->vertices = Q.vertices;
    alg->provenance = Provenance::QuiverPresented;
    alg->quiver = Q;
    alg->relations = spec.relations;
    alg->idem.assign(Q.vertices.size(), -1);

    std::map<int, int> gen_of_arrow;  // arrow index -> basis index
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        const Path& p = path_at(survivors[k]);
        BasisElem b;
        b.name = path_name(Q, p);
        b.source = p.source;
        b.target = p.target;
        alg->basis.push_back(std::move(b));
        if (p.arrows.empty())
            alg->idem[alg->vertex_index(p.source)] = static_cast<int>(k);
        else {
            alg->radical.push_back(static_cast<int>(k));
            if (p.arrows.size() == 1) {
                alg->generators.push_back(static_cast<int>(k));
                gen_of_arrow[p.arrows[0]] = static_cast<int>(k);
            }
        }
    }
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        const Path& p = path_at(survivors[k]);
        for (int ai : p.arrows) alg->basis[k].word.push_back(gen_of_arrow.at(ai));
    }

    // structure constants: concatenate and reduce
    int dim = static_cast<int>(survivors.size());
    std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> table(
        dim, std::vector<std::vector<std::pair<int, std::uint32_t>>>(dim));
    for (int i = 0; i < dim; ++i) {
        const Path& pi = path_at(survivors[i]);
        for (int j = 0; j < dim; ++j) {
            const Path& pj = path_at(survivors[j]);
            if (pi.target != pj.source) continue;
            int len = static_cast<int>(pi.arrows.size() + pj.arrows.size());
            if (len >= m) continue;  // lies in the ideal
            std::vector<int> w = pi.arrows;
            w.insert(w.end(), pj.arrows.begin(), pj.arrows.end());
            int idx = w.empty() ? index_of_trivial.at(pi.source) : index_of_word.at(w);
            Vec v(n_short, 0);
            v[idx] = 1;
            Vec r = ideal.reduce(std::move(v));
            for (int c = 0; c < n_short; ++c)
                if (r[c] != 0) table[i][j].push_back({survivor_index[c], r[c]});
        }
    }
    AlgebraBuilder::set_table(*alg, std::move(table));

    return finalize_algebra(alg, true);
}

QuotientResult quotient_by_idempotent(const AlgPtr& a, const std::set<int>& e_vertices) {
    for (int v : e_vertices)
        if (a->vertex_index(v) < 0)
            throw InvalidArgument("quotient vertex " + std::to_string(v) + " not in the algebra");
    if (e_vertices.size() >= a->vertices.size())
        throw InvalidArgument("quotient by all vertices would be the zero algebra");

    const PrimeField& F = a->field;
    int dim = a->dim();

    if (e_vertices.empty()) {
        QuotientResult r;
        r.alg = a;
        r.projection = Mat::identity(dim);
        r.survivor_of.resize(dim);
        std::iota(r.survivor_of.begin(), r.survivor_of.end(), 0);
        return r;
    }

    // the ideal A e A is spanned by products b1 * e_v * b2 over basis
    // pairs; b1 e_v is b1 or 0, so the generators are b1*b2 with
    // target(b1) = v = source(b2)
    std::vector<int> elim(dim);
    std::iota(elim.begin(), elim.end(), 0);
    std::reverse(elim.begin(), elim.end());
    RowSpace ideal(F, dim, elim);
    for (int v : e_vertices)
        for (int i = 0; i < dim; ++i) {
            if (a->basis[i].target != v) continue;
            for (int j = 0; j < dim; ++j) {
                if (a->basis[j].source != v) continue;
                Vec g(dim, 0);
                for (const auto& [k, c] : a->product(i, j)) g[k] = F.add(g[k], c);
                ideal.insert(std::move(g));
            }
        }

    std::vector<int> survivors;
    for (int i = 0; i < dim; ++i)
        if (!ideal.is_pivot(i)) survivors.push_back(i);

    QuotientResult res;
    res.removed_vertices.assign(e_vertices.begin(), e_vertices.end());
    res.survivor_of.assign(dim, -1);
    for (std::size_t k = 0; k < survivors.size(); ++k) res.survivor_of[survivors[k]] = static_cast<int>(k);

    auto alg = std::make_shared<Algebra>(F);
    alg->provenance = Provenance::QuotientByIdempotent;
    alg->label = a->label.empty() ? "" : a->label + "/e";
    for (int v : a->vertices)
        if (!e_vertices.count(v)) alg->vertices.push_back(v);
    alg->idem.assign(alg->vertices.size(), -1);

    std::vector<int> new_gen_of_old(dim, -1);
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        const BasisElem& ob = a->basis[survivors[k]];
        if (e_vertices.count(ob.source) || e_vertices.count(ob.target))
            throw Error("internal: quotient survivor touches a removed vertex");
        BasisElem b;
        b.name = ob.name;
        b.source = ob.source;
        b.target = ob.target;
        alg->basis.push_back(std::move(b));
        if (ob.length() == 0)
            alg->idem[alg->vertex_index(ob.source)] = static_cast<int>(k);
        else {
            alg->radical.push_back(static_cast<int>(k));
            if (ob.length() == 1) {
                alg->generators.push_back(static_cast<int>(k));
                new_gen_of_old[survivors[k]] = static_cast<int>(k);
            }
        }
    }
    for (int v : alg->idem)
        if (v < 0) throw Error("internal: a surviving vertex lost its idempotent");
    for (std::size_t k = 0; k < survivors.size(); ++k) {
        const BasisElem& ob = a->basis[survivors[k]];
        for (int g : ob.word) {
            if (new_gen_of_old[g] < 0) throw Error("internal: quotient survivor has a dead factor");
            alg->basis[k].word.push_back(new_gen_of_old[g]);
        }
    }

    int qdim = static_cast<int>(survivors.size());
    res.projection = Mat(dim, qdim);
    for (int i = 0; i < dim; ++i) {
        Vec r = ideal.reduce(a->unit_vec(i));
        for (int c = 0; c < dim; ++c)
            if (r[c] != 0) res.projection.at(i, res.survivor_of[c]) = r[c];
    }

    std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> table(
        qdim, std::vector<std::vector<std::pair<int, std::uint32_t>>>(qdim));
    for (int i = 0; i < qdim; ++i)
        for (int j = 0; j < qdim; ++j) {
            Vec prod = a->multiply(a->unit_vec(survivors[i]), a->unit_vec(survivors[j]));
            Vec r = ideal.reduce(std::move(prod));
            for (int c = 0; c < dim; ++c)
                if (r[c] != 0) table[i][j].push_back({res.survivor_of[c], r[c]});
        }
    AlgebraBuilder::set_table(*alg, std::move(table));

    res.alg = finalize_algebra(alg, true);
    return res;
}

} // namespace tautilt
