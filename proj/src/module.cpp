#include "tautilt/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>

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

Vec flatten_blocks(const std::vector<Mat>& blocks) {
    Vec flat;
    for (const Mat& b : blocks) flat.insert(flat.end(), b.a.begin(), b.a.end());
    return flat;
}

} // namespace

Module Module::zero(AlgPtr a) {
    Module m;
    m.dims.assign(a->num_vertices(), 0);
    m.act.resize(a->dim());
    for (int b = 0; b < a->dim(); ++b) m.act[b] = Mat(0, 0);
    m.alg = std::move(a);
    return m;
}

int Module::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

int Module::dim_at_vertex(int vertex_id) const {
    int vi = alg->vertex_index(vertex_id);
    if (vi < 0) throw InvalidArgument("vertex " + std::to_string(vertex_id) + " not in the algebra");
    return dims[vi];
}

bool Module::same_algebra(const Module& o) const {
    return alg == o.alg || alg->same_presentation(*o.alg);
}

std::vector<int> Module::block_offsets() const {
    std::vector<int> off(dims.size() + 1, 0);
    for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
    return off;
}

bool satisfies_relations(const Algebra& a, const std::vector<int>& dims,
                         const std::vector<Mat>& gen_act) {
    if (!a.quiver) throw InvalidArgument("relation check requires a quiver-presented algebra");
    const Quiver& q = *a.quiver;
    // arrow index -> position in a.generators
    std::map<std::string, int> gen_pos;
    for (std::size_t g = 0; g < a.generators.size(); ++g)
        gen_pos[a.basis[a.generators[g]].name] = static_cast<int>(g);
    for (const RelationExpr& rel : a.relations) {
        if (rel.terms.empty()) continue;
        int s = a.vertex_index(rel.source), t = a.vertex_index(rel.target);
        Mat acc(dims[s], dims[t]);
        for (const RelationTerm& term : rel.terms) {
            Mat prod = Mat::identity(dims[s]);
            for (int ai : term.path.arrows)
                prod = mul(a.field, prod, gen_act[gen_pos.at(q.arrows[ai].name)]);
            acc = add(a.field, acc, scale(a.field, term.coeff, prod));
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

Module module_from_generators(AlgPtr a, std::vector<int> dims, const std::vector<Mat>& gen_act,
                              bool validate) {
    if (static_cast<int>(dims.size()) != a->num_vertices())
        throw InvalidArgument("dimension vector length mismatch");
    if (gen_act.size() != a->generators.size())
        throw InvalidArgument("generator action count mismatch");
    Module m;
    m.alg = a;
    m.dims = std::move(dims);
    m.act.resize(a->dim());
    for (int vi = 0; vi < a->num_vertices(); ++vi)
        m.act[a->idem[vi]] = Mat::identity(m.dims[vi]);
    for (std::size_t g = 0; g < a->generators.size(); ++g) {
        const BasisElem& b = a->basis[a->generators[g]];
        int s = a->vertex_index(b.source), t = a->vertex_index(b.target);
        if (gen_act[g].rows != m.dims[s] || gen_act[g].cols != m.dims[t])
            throw InvalidArgument("generator action for '" + b.name + "' has the wrong shape");
        m.act[a->generators[g]] = gen_act[g];
    }
    // longer basis elements act as the product along their word
    for (int bi = 0; bi < a->dim(); ++bi) {
        const BasisElem& b = a->basis[bi];
        if (b.length() <= 1) continue;
        int s = a->vertex_index(b.source);
        Mat prod = Mat::identity(m.dims[s]);
        for (int g : b.word) prod = mul(a->field, prod, m.act[g]);
        m.act[bi] = std::move(prod);
    }
    if (validate && !module_valid(m))
        throw InvalidArgument("generator actions do not satisfy the algebra's structure constants");
    return m;
}

bool module_valid(const Module& m) {
    const Algebra& a = *m.alg;
    for (int bi = 0; bi < a.dim(); ++bi) {
        int s = a.vertex_index(a.basis[bi].source), t = a.vertex_index(a.basis[bi].target);
        if (m.act[bi].rows != m.dims[s] || m.act[bi].cols != m.dims[t]) return false;
    }
    for (int vi = 0; vi < a.num_vertices(); ++vi)
        if (!m.act[a.idem[vi]].is_identity()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (a.basis[i].target != a.basis[j].source) continue;
            Mat lhs = mul(a.field, m.act[i], m.act[j]);
            int s = a.vertex_index(a.basis[i].source), t = a.vertex_index(a.basis[j].target);
            Mat rhs(m.dims[s], m.dims[t]);
            for (const auto& [k, c] : a.product(i, j))
                rhs = add(a.field, rhs, scale(a.field, c, m.act[k]));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

Module simple_at(AlgPtr a, int vertex_id) {
    int vi = a->vertex_index(vertex_id);
    if (vi < 0) throw InvalidArgument("unknown vertex " + std::to_string(vertex_id));
    Module m;
    m.dims.assign(a->num_vertices(), 0);
    m.dims[vi] = 1;
    m.act.resize(a->dim());
    for (int bi = 0; bi < a->dim(); ++bi) {
        const BasisElem& b = a->basis[bi];
        int s = a->vertex_index(b.source), t = a->vertex_index(b.target);
        if (b.length() == 0 && s == vi)
            m.act[bi] = Mat::identity(1);
        else
            m.act[bi] = Mat(m.dims[s], m.dims[t]);
    }
    m.alg = std::move(a);
    return m;
}

Module projective_at(AlgPtr a, int vertex_id) {
    int vi = a->vertex_index(vertex_id);
    if (vi < 0) throw InvalidArgument("unknown vertex " + std::to_string(vertex_id));
    // block at w is spanned by basis elements tagged (vertex_id, w);
    // the action of b is right multiplication read off the table
    Module m;
    m.dims.assign(a->num_vertices(), 0);
    std::vector<std::vector<int>> block_elems(a->num_vertices());
    for (int w = 0; w < a->num_vertices(); ++w) {
        block_elems[w] = a->elems_between(vertex_id, a->vertices[w]);
        m.dims[w] = static_cast<int>(block_elems[w].size());
    }
    std::vector<int> pos_in_block(a->dim(), -1);
    for (int w = 0; w < a->num_vertices(); ++w)
        for (std::size_t k = 0; k < block_elems[w].size(); ++k)
            pos_in_block[block_elems[w][k]] = static_cast<int>(k);
    m.act.resize(a->dim());
    for (int bi = 0; bi < a->dim(); ++bi) {
        const BasisElem& b = a->basis[bi];
        int s = a->vertex_index(b.source), t = a->vertex_index(b.target);
        Mat act(m.dims[s], m.dims[t]);
        for (int x : block_elems[s])
            for (const auto& [k, c] : a->product(x, bi))
                act.at(pos_in_block[x], pos_in_block[k]) = c;
        m.act[bi] = std::move(act);
    }
    m.alg = std::move(a);
    return m;
}

Module injective_at(AlgPtr a, int vertex_id) {
    return dual_to_opposite(projective_at(opposite(a), vertex_id));
}

bool Morphism::is_valid() const {
    if (!src.same_algebra(dst)) return false;
    const Algebra& a = *src.alg;
    for (int vi = 0; vi < a.num_vertices(); ++vi)
        if (f[vi].rows != src.dims[vi] || f[vi].cols != dst.dims[vi]) return false;
    for (int g : a.generators) {
        int s = a.vertex_index(a.basis[g].source), t = a.vertex_index(a.basis[g].target);
        if (!(mul(a.field, src.act[g], f[t]) == mul(a.field, f[s], dst.act[g]))) return false;
    }
    return true;
}

Morphism identity_morphism(const Module& m) {
    Morphism r{m, m, {}};
    for (int d : m.dims) r.f.push_back(Mat::identity(d));
    return r;
}

Morphism compose(const Morphism& first, const Morphism& then) {
    Morphism r{first.src, then.dst, {}};
    for (std::size_t v = 0; v < first.f.size(); ++v)
        r.f.push_back(mul(first.src.alg->field, first.f[v], then.f[v]));
    return r;
}

bool is_surjective(const Morphism& f) {
    for (std::size_t v = 0; v < f.f.size(); ++v)
        if (row_rank(f.src.alg->field, f.f[v]) != f.dst.dims[v]) return false;
    return true;
}

bool is_injective_morphism(const Morphism& f) {
    for (std::size_t v = 0; v < f.f.size(); ++v)
        if (row_rank(f.src.alg->field, f.f[v]) != f.src.dims[v]) return false;
    return true;
}

std::vector<Mat> HomSpace::blocks_from_flat(const Vec& flat) const {
    std::vector<Mat> blocks;
    for (std::size_t v = 0; v < shape.size(); ++v) {
        Mat b(shape[v].first, shape[v].second);
        std::copy(flat.begin() + offsets[v], flat.begin() + offsets[v] + b.rows * b.cols,
                  b.a.begin());
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::vector<Mat> HomSpace::blocks_from_coeffs(const PrimeField& F, const Vec& coeffs) const {
    Vec flat(basis.cols, 0);
    for (int r = 0; r < basis.rows; ++r) {
        if (coeffs[r] == 0) continue;
        for (int c = 0; c < basis.cols; ++c)
            flat[c] = F.add(flat[c], F.mul(coeffs[r], basis.at(r, c)));
    }
    return blocks_from_flat(flat);
}

Vec HomSpace::coeffs_of(const Vec& flat) const {
    Vec c(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) c[k] = flat[free_cols[k]];
    return c;
}

HomSpace hom_space_basis(const Module& m, const Module& n) {
    if (!m.same_algebra(n)) throw InvalidArgument("hom space requires modules over the same algebra");
    const Algebra& a = *m.alg;
    const PrimeField& F = a.field;
    HomSpace h;
    int total = 0;
    for (int v = 0; v < a.num_vertices(); ++v) {
        h.shape.push_back({m.dims[v], n.dims[v]});
        h.offsets.push_back(total);
        total += m.dims[v] * n.dims[v];
    }
    // intertwining for every generator: actM(g) f_t = f_s actN(g)
    int n_eq = 0;
    for (int g : a.generators) {
        int s = a.vertex_index(a.basis[g].source), t = a.vertex_index(a.basis[g].target);
        n_eq += m.dims[s] * n.dims[t];
    }
    Mat eq(n_eq, total);
    int row = 0;
    for (int g : a.generators) {
        int s = a.vertex_index(a.basis[g].source), t = a.vertex_index(a.basis[g].target);
        const Mat& am = m.act[g];
        const Mat& an = n.act[g];
        for (int r = 0; r < m.dims[s]; ++r)
            for (int c = 0; c < n.dims[t]; ++c) {
                for (int k = 0; k < m.dims[t]; ++k)
                    eq.at(row, h.offsets[t] + k * n.dims[t] + c) =
                        F.add(eq.at(row, h.offsets[t] + k * n.dims[t] + c), am.at(r, k));
                for (int k = 0; k < n.dims[s]; ++k)
                    eq.at(row, h.offsets[s] + r * n.dims[s] + k) =
                        F.sub(eq.at(row, h.offsets[s] + r * n.dims[s] + k), an.at(k, c));
                ++row;
            }
    }
    auto [basis, free_cols] = right_nullspace(F, std::move(eq));
    h.basis = std::move(basis);
    h.free_cols = std::move(free_cols);
    return h;
}

std::vector<Morphism> hom_space(const Module& m, const Module& n) {
    HomSpace h = hom_space_basis(m, n);
    std::vector<Morphism> out;
    for (int r = 0; r < h.basis.rows; ++r) {
        Vec flat(h.basis.a.begin() + static_cast<std::size_t>(r) * h.basis.cols,
                 h.basis.a.begin() + static_cast<std::size_t>(r + 1) * h.basis.cols);
        out.push_back(Morphism{m, n, h.blocks_from_flat(flat)});
    }
    return out;
}

int hom_dim(const Module& m, const Module& n) { return hom_space_basis(m, n).dim(); }

bool is_isomorphic(const Module& m, const Module& n, std::uint64_t cap) {
    if (!m.same_algebra(n)) throw InvalidArgument("isomorphism test requires the same algebra");
    if (m.dims != n.dims) return false;
    if (m.total_dim() == 0) return true;
    HomSpace h = hom_space_basis(m, n);
    if (h.dim() == 0) return false;
    const PrimeField& F = m.alg->field;
    std::uint64_t space = pow_capped(F.p(), h.dim(), cap);
    if (space > cap)
        throw CapExceeded("Hom space of size p^" + std::to_string(h.dim()) +
                          " exceeds enumeration cap " + std::to_string(cap));
    Vec coeffs(h.dim(), 0);
    for (std::uint64_t it = 1; it < space; ++it) {
        // next tuple, little-endian
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            if (++coeffs[d] < F.p()) break;
            coeffs[d] = 0;
        }
        std::vector<Mat> blocks = h.blocks_from_coeffs(F, coeffs);
        bool ok = true;
        for (const Mat& b : blocks)
            if (!is_invertible(F, b)) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

Module direct_sum(AlgPtr a, const std::vector<Module>& parts) {
    Module m = Module::zero(a);
    for (const Module& p : parts) {
        if (!(p.alg == a || p.alg->same_presentation(*a)))
            throw InvalidArgument("direct sum of modules over different algebras");
        for (int v = 0; v < a->num_vertices(); ++v) m.dims[v] += p.dims[v];
    }
    for (int bi = 0; bi < a->dim(); ++bi) {
        int s = a->vertex_index(a->basis[bi].source), t = a->vertex_index(a->basis[bi].target);
        Mat act(m.dims[s], m.dims[t]);
        int ro = 0, co = 0;
        for (const Module& p : parts) {
            const Mat& b = p.act[bi];
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c) act.at(ro + r, co + c) = b.at(r, c);
            ro += p.dims[s];
            co += p.dims[t];
        }
        m.act[bi] = std::move(act);
    }
    return m;
}

std::pair<Module, Morphism> kernel_module(const Morphism& f) {
    const AlgPtr& a = f.src.alg;
    const PrimeField& F = a->field;
    int nv = a->num_vertices();
    std::vector<Mat> incl(nv);
    Module k;
    k.alg = a;
    k.dims.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        incl[v] = left_nullspace(F, f.f[v]);
        k.dims[v] = incl[v].rows;
    }
    k.act.resize(a->dim());
    for (int bi = 0; bi < a->dim(); ++bi) {
        int s = a->vertex_index(a->basis[bi].source), t = a->vertex_index(a->basis[bi].target);
        auto x = solve_left(F, incl[t], mul(F, incl[s], f.src.act[bi]));
        if (!x) throw Error("internal: kernel is not action stable");
        k.act[bi] = std::move(*x);
    }
    Morphism inc{k, f.src, std::move(incl)};
    return {std::move(k), std::move(inc)};
}

std::pair<Module, Morphism> cokernel_module(const Morphism& f) {
    const AlgPtr& a = f.src.alg;
    const PrimeField& F = a->field;
    int nv = a->num_vertices();
    Module c;
    c.alg = a;
    c.dims.assign(nv, 0);
    std::vector<Mat> proj(nv), sect(nv);
    for (int v = 0; v < nv; ++v) {
        Mat r = f.f[v];
        std::vector<int> pivots;
        int rank = rref(F, r, &pivots);
        std::vector<char> is_piv(f.dst.dims[v], 0);
        for (int pc : pivots) is_piv[pc] = 1;
        std::vector<int> reps;
        for (int col = 0; col < f.dst.dims[v]; ++col)
            if (!is_piv[col]) reps.push_back(col);
        c.dims[v] = static_cast<int>(reps.size());
        proj[v] = Mat(f.dst.dims[v], c.dims[v]);
        for (int i = 0; i < f.dst.dims[v]; ++i) {
            Vec row(f.dst.dims[v], 0);
            row[i] = 1;
            for (int rr = 0; rr < rank; ++rr) {
                std::uint32_t fac = row[pivots[rr]];
                if (fac == 0) continue;
                for (int j = 0; j < f.dst.dims[v]; ++j)
                    row[j] = F.sub(row[j], F.mul(fac, r.at(rr, j)));
            }
            for (std::size_t j = 0; j < reps.size(); ++j) proj[v].at(i, static_cast<int>(j)) = row[reps[j]];
        }
        sect[v] = Mat(c.dims[v], f.dst.dims[v]);
        for (std::size_t j = 0; j < reps.size(); ++j) sect[v].at(static_cast<int>(j), reps[j]) = 1;
    }
    c.act.resize(a->dim());
    for (int bi = 0; bi < a->dim(); ++bi) {
        int s = a->vertex_index(a->basis[bi].source), t = a->vertex_index(a->basis[bi].target);
        c.act[bi] = mul(F, mul(F, sect[s], f.dst.act[bi]), proj[t]);
    }
    Morphism pr{f.dst, c, std::move(proj)};
    return {std::move(c), std::move(pr)};
}

TopData top(const Module& m) {
    const Algebra& a = *m.alg;
    const PrimeField& F = a.field;
    TopData td;
    td.mult.assign(a.num_vertices(), 0);
    td.reps.resize(a.num_vertices());
    for (int v = 0; v < a.num_vertices(); ++v) {
        // image of the radical action into block v; generator images
        // already span it since longer elements factor through them
        Mat stack(0, m.dims[v]);
        for (int g : a.generators)
            if (a.vertex_index(a.basis[g].target) == v) stack = vstack(stack, m.act[g]);
        std::vector<int> pivots;
        rref(F, stack, &pivots);
        std::vector<char> is_piv(m.dims[v], 0);
        for (int pc : pivots) is_piv[pc] = 1;
        std::vector<int> reps;
        for (int col = 0; col < m.dims[v]; ++col)
            if (!is_piv[col]) reps.push_back(col);
        td.mult[v] = static_cast<int>(reps.size());
        td.reps[v] = Mat(td.mult[v], m.dims[v]);
        for (std::size_t k = 0; k < reps.size(); ++k) td.reps[v].at(static_cast<int>(k), reps[k]) = 1;
    }
    return td;
}

CoverData projective_cover(const Module& m) {
    if (m.is_zero()) throw InvalidArgument("projective cover of the zero module");
    const AlgPtr& a = m.alg;
    TopData td = top(m);
    CoverData cd;
    std::vector<Module> parts;
    std::vector<Vec> gen_rows;  // chosen preimage of each summand's generator
    for (int v = 0; v < a->num_vertices(); ++v)
        for (int c = 0; c < td.mult[v]; ++c) {
            cd.summand_vertices.push_back(v);
            parts.push_back(projective_at(a, a->vertices[v]));
            Vec row(m.dims[v]);
            for (int j = 0; j < m.dims[v]; ++j) row[j] = td.reps[v].at(c, j);
            gen_rows.push_back(std::move(row));
        }
    cd.p = direct_sum(a, parts);
    // cover: basis element x of summand k (tagged (v_k, w)) maps to
    // rep_k * act(x), landing in block w of M
    std::vector<Mat> f(a->num_vertices());
    for (int w = 0; w < a->num_vertices(); ++w) {
        f[w] = Mat(cd.p.dims[w], m.dims[w]);
        int row = 0;
        for (std::size_t k = 0; k < cd.summand_vertices.size(); ++k) {
            int vk = cd.summand_vertices[k];
            for (int x : a->elems_between(a->vertices[vk], a->vertices[w])) {
                const Mat& ax = m.act[x];
                for (int c = 0; c < m.dims[w]; ++c) {
                    std::uint32_t s = 0;
                    for (int j = 0; j < m.dims[vk]; ++j)
                        s = a->field.add(s, a->field.mul(gen_rows[k][j], ax.at(j, c)));
                    f[w].at(row, c) = s;
                }
                ++row;
            }
        }
    }
    cd.cover = Morphism{cd.p, m, std::move(f)};
    return cd;
}

Module syzygy(const Module& m) {
    if (m.is_zero()) return Module::zero(m.alg);
    return kernel_module(projective_cover(m).cover).first;
}

bool is_projective_module(const Module& m) {
    if (m.is_zero()) return true;
    // the cover of a projective is an isomorphism, so dimensions decide
    return projective_cover(m).p.total_dim() == m.total_dim();
}

bool is_pd_le_one(const Module& m) { return is_projective_module(syzygy(m)); }

PdBound pd_up_to(const Module& m, int cutoff) {
    if (cutoff < 1) throw InvalidArgument("cutoff must be >= 1");
    Module cur = m;
    for (int d = 0; d <= cutoff; ++d) {
        if (is_projective_module(cur)) return {d, true};
        cur = syzygy(cur);
    }
    return {cutoff, false};
}

int ext1_dim(const Module& m, const Module& n) {
    if (!m.same_algebra(n)) throw InvalidArgument("ext requires modules over the same algebra");
    if (m.is_zero() || n.is_zero()) return 0;
    CoverData cd = projective_cover(m);
    auto [omega, incl] = kernel_module(cd.cover);
    if (omega.is_zero()) return 0;
    HomSpace h1 = hom_space_basis(omega, n);
    if (h1.dim() == 0) return 0;
    HomSpace h0 = hom_space_basis(cd.p, n);
    Mat restr(h0.dim(), h1.dim());
    for (int r = 0; r < h0.dim(); ++r) {
        Vec flat(h0.basis.a.begin() + static_cast<std::size_t>(r) * h0.basis.cols,
                 h0.basis.a.begin() + static_cast<std::size_t>(r + 1) * h0.basis.cols);
        Morphism psi{cd.p, n, h0.blocks_from_flat(flat)};
        Morphism res = compose(incl, psi);
        Vec coeffs = h1.coeffs_of(flatten_blocks(res.f));
        for (int c = 0; c < h1.dim(); ++c) restr.at(r, c) = coeffs[c];
    }
    return h1.dim() - row_rank(m.alg->field, restr);
}

Module dual_to_opposite(const Module& m) {
    AlgPtr op = opposite(m.alg);
    Module d;
    d.alg = op;
    d.dims = m.dims;
    d.act.resize(op->dim());
    for (int bi = 0; bi < op->dim(); ++bi) d.act[bi] = transpose(m.act[bi]);
    return d;
}

Module transpose_module(const Module& m) {
    AlgPtr op = opposite(m.alg);
    if (m.is_zero()) return Module::zero(op);
    CoverData c0 = projective_cover(m);
    auto [omega, incl] = kernel_module(c0.cover);
    if (omega.is_zero()) return Module::zero(op);
    CoverData c1 = projective_cover(omega);
    Morphism f = compose(c1.cover, incl);  // P1 -> P0

    const Algebra& a = *m.alg;
    // extract the left-multiplication entries of f: the row of the l-th
    // summand's generator inside block r_l of P0 splits into the
    // coefficient vectors a_{kl} over the elements tagged (q_k, r_l)
    auto gen_coord = [&](const CoverData& cd, std::size_t summand) {
        int v = cd.summand_vertices[summand];
        int off = 0;
        for (std::size_t k = 0; k < summand; ++k)
            off += static_cast<int>(a.elems_between(a.vertices[cd.summand_vertices[k]], a.vertices[v]).size());
        std::vector<int> elems = a.elems_between(a.vertices[v], a.vertices[v]);
        int pos = -1;
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == a.idem[v]) pos = static_cast<int>(i);
        return off + pos;
    };

    std::vector<std::vector<Vec>> entries(
        c0.summand_vertices.size(), std::vector<Vec>(c1.summand_vertices.size(), Vec(a.dim(), 0)));
    for (std::size_t l = 0; l < c1.summand_vertices.size(); ++l) {
        int rl = c1.summand_vertices[l];
        int grow = gen_coord(c1, l);
        const Mat& block = f.f[rl];
        int col = 0;
        for (std::size_t k = 0; k < c0.summand_vertices.size(); ++k) {
            for (int e : a.elems_between(a.vertices[c0.summand_vertices[k]], a.vertices[rl])) {
                entries[k][l][e] = block.at(grow, col);
                ++col;
            }
        }
    }

    std::vector<int> src_ids, dst_ids;
    for (int v : c0.summand_vertices) src_ids.push_back(a.vertices[v]);
    for (int v : c1.summand_vertices) dst_ids.push_back(a.vertices[v]);
    Morphism fvee = projective_matrix_morphism(op, src_ids, dst_ids, entries);
    return cokernel_module(fvee).first;
}

Module tau(const Module& m) {
    Module tr = transpose_module(m);
    if (tr.is_zero()) return Module::zero(m.alg);
    Module t = dual_to_opposite(tr);
    // dual of a module over op(A) lives over op(op(A)) = A itself
    if (t.alg != m.alg && !t.alg->same_presentation(*m.alg))
        throw Error("internal: tau did not land over the original algebra");
    return t;
}

bool is_tau_rigid(const Module& m) {
    if (m.is_zero()) return true;
    Module t = tau(m);
    if (t.is_zero()) return true;
    return hom_dim(m, t) == 0;
}

bool is_sincere(const Module& m) {
    return std::all_of(m.dims.begin(), m.dims.end(), [](int d) { return d > 0; });
}

int annihilator_dim(const Module& m) {
    const Algebra& a = *m.alg;
    std::vector<int> off = m.block_offsets();
    int total = m.total_dim();
    Mat eq(a.dim(), total * total);
    for (int bi = 0; bi < a.dim(); ++bi) {
        int s = a.vertex_index(a.basis[bi].source), t = a.vertex_index(a.basis[bi].target);
        const Mat& act = m.act[bi];
        for (int r = 0; r < act.rows; ++r)
            for (int c = 0; c < act.cols; ++c)
                eq.at(bi, (off[s] + r) * total + off[t] + c) = act.at(r, c);
    }
    return a.dim() - row_rank(a.field, eq);
}

bool is_faithful(const Module& m) { return annihilator_dim(m) == 0; }

std::vector<int> fac_members(const Module& m, const std::vector<Module>& pool, std::uint64_t cap) {
    const PrimeField& F = m.alg->field;
    std::vector<int> out;
    for (std::size_t ni = 0; ni < pool.size(); ++ni) {
        const Module& n = pool[ni];
        if (n.is_zero()) { out.push_back(static_cast<int>(ni)); continue; }
        HomSpace h = hom_space_basis(m, n);
        if (h.dim() == 0) continue;
        TopData tn = top(n);
        int k = std::accumulate(tn.mult.begin(), tn.mult.end(), 0);
        std::uint64_t space = pow_capped(F.p(), static_cast<std::uint64_t>(h.dim()) * k, cap);
        if (space > cap)
            throw CapExceeded("Fac search space p^" + std::to_string(h.dim() * k) +
                              " exceeds cap " + std::to_string(cap));
        Vec coeffs(static_cast<std::size_t>(h.dim()) * k, 0);
        bool found = false;
        for (std::uint64_t it = 1; it < space && !found; ++it) {
            for (std::size_t d = 0; d < coeffs.size(); ++d) {
                if (++coeffs[d] < F.p()) break;
                coeffs[d] = 0;
            }
            // stack of k morphisms M -> N; surjective iff every vertex
            // block of the stack has full rank
            bool surj = true;
            for (std::size_t v = 0; v < m.dims.size() && surj; ++v) {
                if (n.dims[v] == 0) continue;
                Mat stack(0, n.dims[v]);
                for (int copy = 0; copy < k; ++copy) {
                    Vec cc(coeffs.begin() + static_cast<std::size_t>(copy) * h.dim(),
                           coeffs.begin() + static_cast<std::size_t>(copy + 1) * h.dim());
                    std::vector<Mat> blocks = h.blocks_from_coeffs(F, cc);
                    stack = vstack(stack, blocks[v]);
                }
                if (row_rank(F, stack) != n.dims[v]) surj = false;
            }
            if (surj) found = true;
        }
        if (found) out.push_back(static_cast<int>(ni));
    }
    return out;
}

Morphism projective_matrix_morphism(AlgPtr a, const std::vector<int>& src_vertices,
                                    const std::vector<int>& dst_vertices,
                                    const std::vector<std::vector<Vec>>& entries) {
    std::vector<Module> src_parts, dst_parts;
    for (int v : src_vertices) src_parts.push_back(projective_at(a, v));
    for (int v : dst_vertices) dst_parts.push_back(projective_at(a, v));
    Module src = direct_sum(a, src_parts);
    Module dst = direct_sum(a, dst_parts);
    std::vector<Mat> f(a->num_vertices());
    for (int w = 0; w < a->num_vertices(); ++w) {
        int wid = a->vertices[w];
        f[w] = Mat(src.dims[w], dst.dims[w]);
        int row = 0;
        for (std::size_t i = 0; i < src_vertices.size(); ++i) {
            for (int x : a->elems_between(src_vertices[i], wid)) {
                int col = 0;
                for (std::size_t j = 0; j < dst_vertices.size(); ++j) {
                    Vec prod = a->multiply(entries[i][j], a->unit_vec(x));
                    for (int y : a->elems_between(dst_vertices[j], wid)) {
                        f[w].at(row, col) = prod[y];
                        ++col;
                    }
                }
                ++row;
            }
        }
    }
    return Morphism{std::move(src), std::move(dst), std::move(f)};
}

} // namespace tautilt
