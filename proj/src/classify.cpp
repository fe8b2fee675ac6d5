#include "tautilt/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tautilt {

namespace {

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base + 1) return cap + 1;
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

std::string dim_vector_str(const Algebra& a, const std::vector<int>& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

// cheap iso-invariant fingerprint used to bucket candidates before the
// exact Hom-space search
struct Fingerprint {
    std::vector<int> dims;
    std::vector<int> gen_ranks;
    std::vector<int> top_mult;
    int end_dim = 0;
    auto tie() const { return std::tie(dims, gen_ranks, top_mult, end_dim); }
    bool operator<(const Fingerprint& o) const { return tie() < o.tie(); }
};

Fingerprint fingerprint(const Module& m) {
    Fingerprint fp;
    fp.dims = m.dims;
    for (int g : m.alg->generators) fp.gen_ranks.push_back(row_rank(m.alg->field, m.act[g]));
    fp.top_mult = top(m).mult;
    fp.end_dim = hom_dim(m, m);
    return fp;
}

// Walk every generator-action tuple for every dimension vector <= bound
// in canonical order, handing valid modules to the sink. The sink
// returns false to stop early (unused so far).
template <typename Sink>
void walk_modules(const AlgPtr& a, const std::vector<int>& bound, std::uint64_t cap, Sink&& sink) {
    const PrimeField& F = a->field;
    int nv = a->num_vertices();
    std::vector<int> d(nv, 0);
    bool quiver_fast = a->quiver.has_value();
    while (true) {
        std::uint64_t entries = 0;
        for (int g : a->generators) {
            const BasisElem& b = a->basis[g];
            entries += static_cast<std::uint64_t>(d[a->vertex_index(b.source)]) *
                       d[a->vertex_index(b.target)];
        }
        std::uint64_t space = pow_capped(F.p(), entries, cap);
        if (space > cap)
            throw CapExceeded("search space p^" + std::to_string(entries) +
                              " at dimension vector " + dim_vector_str(*a, d) + " exceeds cap " +
                              std::to_string(cap));
        // odometer over all generator matrices, first entry most significant
        std::vector<Mat> gen_act;
        for (int g : a->generators) {
            const BasisElem& b = a->basis[g];
            gen_act.emplace_back(d[a->vertex_index(b.source)], d[a->vertex_index(b.target)]);
        }
        Vec digits(entries, 0);
        for (std::uint64_t it = 0; it < space; ++it) {
            if (it > 0) {
                for (std::size_t k = digits.size(); k-- > 0;) {
                    if (++digits[k] < F.p()) break;
                    digits[k] = 0;
                }
                std::size_t pos = 0;
                for (auto& gm : gen_act)
                    for (auto& x : gm.a) x = digits[pos++];
            }
            if (quiver_fast && !satisfies_relations(*a, d, gen_act)) continue;
            Module m = module_from_generators(a, d, gen_act, false);
            if (!quiver_fast && !module_valid(m)) continue;
            sink(std::move(m));
        }
        // next dimension vector, lex ascending
        int k = nv - 1;
        while (k >= 0 && d[k] == bound[k]) d[k--] = 0;
        if (k < 0) break;
        ++d[k];
    }
}

} // namespace

std::vector<Module> enumerate_modules(AlgPtr a, const std::vector<int>& bound, std::uint64_t cap) {
    if (static_cast<int>(bound.size()) != a->num_vertices())
        throw InvalidArgument("bound length must match the vertex count");
    std::vector<Module> reps;
    std::map<Fingerprint, std::vector<int>> buckets;
    walk_modules(a, bound, cap, [&](Module m) {
        if (m.is_zero()) {
            if (reps.empty()) reps.push_back(std::move(m));
            return;
        }
        Fingerprint fp = fingerprint(m);
        auto& bucket = buckets[fp];
        for (int idx : bucket)
            if (is_isomorphic(reps[idx], m, cap)) return;
        bucket.push_back(static_cast<int>(reps.size()));
        reps.push_back(std::move(m));
    });
    return reps;
}

bool is_indecomposable(const Module& m, std::uint64_t cap) {
    if (m.is_zero()) return false;
    const PrimeField& F = m.alg->field;
    HomSpace end = hom_space_basis(m, m);
    std::uint64_t space = pow_capped(F.p(), end.dim(), cap);
    if (space > cap)
        throw CapExceeded("End space of size p^" + std::to_string(end.dim()) +
                          " exceeds enumeration cap (raise the cap or lower the dim bound)");
    Vec coeffs(end.dim(), 0);
    for (std::uint64_t it = 1; it < space; ++it) {
        for (std::size_t dpos = 0; dpos < coeffs.size(); ++dpos) {
            if (++coeffs[dpos] < F.p()) break;
            coeffs[dpos] = 0;
        }
        std::vector<Mat> blocks = end.blocks_from_coeffs(F, coeffs);
        bool idem = true, is_id = true;
        for (std::size_t v = 0; v < blocks.size() && idem; ++v) {
            if (!(mul(F, blocks[v], blocks[v]) == blocks[v])) idem = false;
            if (!blocks[v].is_identity()) is_id = false;
        }
        if (idem && !is_id) return false;  // nontrivial idempotent splits m
    }
    return true;
}

int end_division_degree(const Module& m, std::uint64_t cap) {
    const PrimeField& F = m.alg->field;
    HomSpace end = hom_space_basis(m, m);
    std::uint64_t space = pow_capped(F.p(), end.dim(), cap);
    if (space > cap)
        throw CapExceeded("End space of size p^" + std::to_string(end.dim()) + " exceeds cap");
    // in a local ring |rad| = p^(h-k) where k is the division degree, so
    // counting non-units recovers k
    std::uint64_t nonunits = 1;  // zero
    Vec coeffs(end.dim(), 0);
    for (std::uint64_t it = 1; it < space; ++it) {
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            if (++coeffs[d] < F.p()) break;
            coeffs[d] = 0;
        }
        std::vector<Mat> blocks = end.blocks_from_coeffs(F, coeffs);
        bool unit = true;
        for (const Mat& b : blocks)
            if (!is_invertible(F, b)) { unit = false; break; }
        if (!unit) ++nonunits;
    }
    int log = 0;
    for (std::uint64_t v = nonunits; v > 1; v /= F.p()) ++log;
    return end.dim() - log;
}

namespace {

std::string module_name(const Module& m, std::uint64_t cap,
                        std::map<std::string, int>& unnamed_count) {
    const AlgPtr& a = m.alg;
    for (int v : a->vertices)
        if (is_isomorphic(m, projective_at(a, v), cap)) return "P" + std::to_string(v);
    for (int v : a->vertices)
        if (is_isomorphic(m, simple_at(a, v), cap)) return "S" + std::to_string(v);
    for (int v : a->vertices)
        if (is_isomorphic(m, injective_at(a, v), cap)) return "I" + std::to_string(v);
    std::string dv = "M(";
    for (std::size_t i = 0; i < m.dims.size(); ++i) {
        if (i) dv += ",";
        dv += std::to_string(m.dims[i]);
    }
    dv += ")";
    int n = ++unnamed_count[dv];
    return n == 1 ? dv : dv + "#" + std::to_string(n);
}

} // namespace

std::string IndecTable::label_of(const std::vector<int>& summands) const {
    if (summands.empty()) return "0";
    std::vector<std::string> names;
    for (int i : summands) names.push_back(entries[i].name);
    std::sort(names.begin(), names.end());
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) s += "+";
        s += names[i];
    }
    return s;
}

IndecTable enumerate_indecomposables(AlgPtr a, const std::vector<int>& bound, std::uint64_t cap) {
    if (static_cast<int>(bound.size()) != a->num_vertices())
        throw InvalidArgument("bound length must match the vertex count");
    IndecTable t;
    t.alg = a;
    t.bound = bound;
    std::map<Fingerprint, std::vector<int>> buckets;
    walk_modules(a, bound, cap, [&](Module m) {
        if (m.is_zero() || !is_indecomposable(m, cap)) return;
        Fingerprint fp = fingerprint(m);
        auto& bucket = buckets[fp];
        for (int idx : bucket)
            if (is_isomorphic(t.entries[idx].rep, m, cap)) return;
        bucket.push_back(t.size());
        IndecEntry e;
        e.rep = std::move(m);
        t.entries.push_back(std::move(e));
    });

    std::map<std::string, int> unnamed;
    int cutoff = a->num_vertices() + 1;
    for (IndecEntry& e : t.entries) {
        e.tau_rep = tau(e.rep);
        e.name = module_name(e.rep, cap, unnamed);
        e.pd = pd_up_to(e.rep, cutoff);
        e.pd_le_one = is_pd_le_one(e.rep);
        e.sincere = is_sincere(e.rep);
        e.faithful = is_faithful(e.rep);
        int deg = end_division_degree(e.rep, cap);
        if (deg > 1)
            t.field_warnings.push_back(e.name + ": End/rad is a degree-" + std::to_string(deg) +
                                       " extension of the prime field");
    }
    int n = t.size();
    t.dim_hom.assign(n, std::vector<int>(n, 0));
    t.ext1.assign(n, std::vector<int>(n, 0));
    t.hom_tau.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.dim_hom[i][j] = hom_dim(t.entries[i].rep, t.entries[j].rep);
            t.ext1[i][j] = ext1_dim(t.entries[i].rep, t.entries[j].rep);
            t.hom_tau[i][j] = t.entries[j].tau_rep.is_zero()
                                  ? 0
                                  : hom_dim(t.entries[i].rep, t.entries[j].tau_rep);
        }
    for (int i = 0; i < n; ++i) {
        t.entries[i].tau_rigid = t.hom_tau[i][i] == 0;
        t.entries[i].self_ext_free = t.ext1[i][i] == 0;
    }
    return t;
}

namespace {

// n-cliques over a symmetric compatibility relation, backtracking in
// ascending index order
void cliques_rec(const std::vector<std::vector<char>>& ok, const std::vector<char>& self_ok,
                 int n, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back(cur);
        return;
    }
    int size = static_cast<int>(ok.size());
    int need = n - static_cast<int>(cur.size());
    for (int i = from; i + need <= size; ++i) {
        if (!self_ok[i]) continue;
        bool fits = true;
        for (int j : cur)
            if (!ok[j][i]) { fits = false; break; }
        if (!fits) continue;
        cur.push_back(i);
        cliques_rec(ok, self_ok, n, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_tau_tilting(const IndecTable& t) {
    int size = t.size();
    int n = t.alg->num_vertices();
    std::vector<char> self_ok(size);
    std::vector<std::vector<char>> ok(size, std::vector<char>(size, 0));
    for (int i = 0; i < size; ++i) self_ok[i] = t.hom_tau[i][i] == 0;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) ok[i][j] = t.hom_tau[i][j] == 0 && t.hom_tau[j][i] == 0;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cliques_rec(ok, self_ok, n, 0, cur, out);
    return out;
}

std::vector<std::vector<int>> enumerate_tilting(const IndecTable& t) {
    int size = t.size();
    int n = t.alg->num_vertices();
    std::vector<char> self_ok(size);
    std::vector<std::vector<char>> ok(size, std::vector<char>(size, 0));
    for (int i = 0; i < size; ++i)
        self_ok[i] = t.entries[i].pd_le_one && t.ext1[i][i] == 0;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) ok[i][j] = t.ext1[i][j] == 0 && t.ext1[j][i] == 0;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    cliques_rec(ok, self_ok, n, 0, cur, out);
    return out;
}

namespace {

Module lift_from_quotient(const AlgPtr& a, const QuotientResult& q, const Module& n) {
    Module m;
    m.alg = a;
    m.dims.assign(a->num_vertices(), 0);
    for (int v = 0; v < q.alg->num_vertices(); ++v)
        m.dims[a->vertex_index(q.alg->vertices[v])] = n.dims[v];
    m.act.resize(a->dim());
    for (int bi = 0; bi < a->dim(); ++bi) {
        int s = a->vertex_index(a->basis[bi].source), t = a->vertex_index(a->basis[bi].target);
        Mat act(m.dims[s], m.dims[t]);
        // the action of b is the action of its image in the quotient
        for (int qk = 0; qk < q.alg->dim(); ++qk) {
            std::uint32_t c = q.projection.at(bi, qk);
            if (c != 0) act = add(a->field, act, scale(a->field, c, n.act[qk]));
        }
        m.act[bi] = std::move(act);
    }
    return m;
}

bool same_summand_multiset(const std::vector<Module>& xs, const std::vector<Module>& ys,
                           std::uint64_t cap) {
    if (xs.size() != ys.size()) return false;
    std::vector<char> used(ys.size(), 0);
    for (const Module& x : xs) {
        bool matched = false;
        for (std::size_t j = 0; j < ys.size() && !matched; ++j) {
            if (used[j]) continue;
            if (is_isomorphic(x, ys[j], cap)) {
                used[j] = 1;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

} // namespace

std::vector<SupportEntry> enumerate_support_tau_tilting(AlgPtr a, const std::vector<int>& bound,
                                                        std::uint64_t cap) {
    int nv = a->num_vertices();
    std::vector<SupportEntry> out;
    std::map<std::string, int> unnamed;

    for (std::uint32_t mask = 0; mask + 1 < (1u << nv); ++mask) {
        std::set<int> e;
        for (int v = 0; v < nv; ++v)
            if (mask & (1u << v)) e.insert(a->vertices[v]);
        QuotientResult q = quotient_by_idempotent(a, e);
        std::vector<int> qbound;
        for (int v : q.alg->vertices) qbound.push_back(bound[a->vertex_index(v)]);
        IndecTable qt = enumerate_indecomposables(q.alg, qbound, cap);
        for (const std::vector<int>& set : enumerate_tau_tilting(qt)) {
            SupportEntry entry;
            for (int v : q.alg->vertices) entry.support.push_back(v);
            for (int i : set) entry.summands.push_back(lift_from_quotient(a, q, qt.entries[i].rep));
            // dedupe: the same module can in principle show up for a
            // larger idempotent; keep the maximal support only
            bool dominated = false;
            for (SupportEntry& prev : out) {
                if (same_summand_multiset(prev.summands, entry.summands, cap)) {
                    if (prev.support.size() < entry.support.size()) prev = entry;
                    dominated = true;
                    break;
                }
            }
            if (!dominated) out.push_back(std::move(entry));
        }
    }
    SupportEntry zero;
    zero.label = "0";
    out.push_back(std::move(zero));

    // names over the ambient algebra
    for (SupportEntry& entry : out) {
        if (entry.summands.empty()) continue;
        std::vector<std::string> names;
        for (const Module& m : entry.summands) names.push_back(module_name(m, cap, unnamed));
        std::sort(names.begin(), names.end());
        std::string s;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (i) s += "+";
            s += names[i];
        }
        entry.label = s;
    }

    std::sort(out.begin(), out.end(), [](const SupportEntry& x, const SupportEntry& y) {
        if (x.support.size() != y.support.size()) return x.support.size() > y.support.size();
        if (x.support != y.support) return x.support < y.support;
        return x.label < y.label;
    });
    return out;
}

HereditaryInfo hereditary_info(AlgPtr a) {
    HereditaryInfo info;
    info.hereditary = true;
    int cutoff = a->num_vertices() + 1;
    for (int v : a->vertices) {
        Module s = simple_at(a, v);
        info.pd_simples.push_back(pd_up_to(s, cutoff));
        if (!is_pd_le_one(s)) info.hereditary = false;
    }
    return info;
}

std::optional<int> completion_counterexample(const IndecTable& t,
                                             const std::vector<std::vector<int>>& tau_tilting) {
    for (int i = 0; i < t.size(); ++i) {
        if (!t.entries[i].tau_rigid) continue;
        bool found = false;
        for (const auto& set : tau_tilting)
            if (std::find(set.begin(), set.end(), i) != set.end()) { found = true; break; }
        if (!found) return i;
    }
    return std::nullopt;
}

ClassificationReport classify_algebra(AlgPtr a, const std::string& name,
                                      const ClassifyOptions& options) {
    ClassificationReport rep;
    rep.algebra_name = name;
    rep.alg = a;
    rep.options = options;
    rep.has_loop_flag = a->quiver ? has_loop(*a->quiver) : false;
    rep.hereditary = hereditary_info(a);
    rep.table = enumerate_indecomposables(a, options.max_dim, options.cap);

    if (options.saturation) {
        std::vector<int> bigger = options.max_dim;
        for (int& b : bigger) ++b;
        try {
            IndecTable larger = enumerate_indecomposables(a, bigger, options.cap);
            rep.saturation.checked = true;
            rep.saturation.new_indecomposables = larger.size() - rep.table.size();
            rep.saturation.warning = rep.saturation.new_indecomposables != 0;
            if (rep.saturation.warning)
                rep.saturation.note =
                    "indecomposables beyond the bound exist; families are lower bounds";
        } catch (const CapExceeded& e) {
            rep.saturation.checked = false;
            rep.saturation.note = std::string("saturation run skipped: ") + e.what();
        }
    }

    if (!options.families) {
        rep.families_computed = false;
        rep.verdict = "SKIP";
        return rep;
    }

    rep.families_computed = true;
    rep.tilting = enumerate_tilting(rep.table);
    rep.tau_tilting = enumerate_tau_tilting(rep.table);
    rep.support_tau_tilting = enumerate_support_tau_tilting(a, options.max_dim, options.cap);
    rep.completion_missing = completion_counterexample(rep.table, rep.tau_tilting);

    // sincere/faithful sweep over the families and all bounded modules
    std::vector<Module> all = enumerate_modules(a, options.max_dim, options.cap);
    for (const auto& set : rep.tau_tilting) {
        std::vector<Module> parts;
        for (int i : set) parts.push_back(rep.table.entries[i].rep);
        Module m = direct_sum(a, parts);
        if (!is_sincere(m)) rep.sincere_faithful.tau_tilting_all_sincere = false;
    }
    for (const auto& set : rep.tilting) {
        std::vector<Module> parts;
        for (int i : set) parts.push_back(rep.table.entries[i].rep);
        Module m = direct_sum(a, parts);
        if (!is_faithful(m)) rep.sincere_faithful.tilting_all_faithful = false;
    }
    std::map<std::string, int> unnamed;
    for (const Module& m : all) {
        if (m.is_zero()) continue;
        bool snc = is_sincere(m), fth = is_faithful(m);
        if (snc && !fth)
            rep.sincere_faithful.sincere_not_faithful.push_back(module_name(m, options.cap, unnamed));
        if (rep.hereditary.hereditary && snc && !fth && ext1_dim(m, m) == 0)
            rep.sincere_faithful.sincere_selfextfree_faithful = false;
    }

    // theorem instance: hereditary <=> (no loop and every tau-tilting
    // module is tilting)
    auto sorted = [](std::vector<std::vector<int>> v) {
        for (auto& s : v) std::sort(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        return v;
    };
    rep.tilting = sorted(rep.tilting);
    rep.tau_tilting = sorted(rep.tau_tilting);
    rep.families_equal = rep.tilting == rep.tau_tilting;
    bool rhs = !rep.has_loop_flag && rep.families_equal;
    rep.verdict = (rep.hereditary.hereditary == rhs) ? "PASS" : "FAIL";
    if (!rep.families_equal) {
        // lexicographically least tau-tilting set that is not tilting
        for (const auto& set : rep.tau_tilting)
            if (std::find(rep.tilting.begin(), rep.tilting.end(), set) == rep.tilting.end()) {
                rep.witness = set;
                break;
            }
    }
    return rep;
}

} // namespace tautilt
