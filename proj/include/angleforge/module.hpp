#pragma once

// Right modules over an AlgebraData, stored as representations: one vector
// space per idempotent and one matrix per generator, acting on row vectors.
// A generator g in e_s A e_t maps the space at s to the space at t.
//
// Projective modules built here are "explicit": a direct sum of the standard
// P_t = e_t A, whose basis at s is the list of algebra basis elements in
// e_t A e_s. Homs out of an explicit projective are computed by Yoneda
// (a map is fixed by the images of the generators e_t), everything else by
// solving the naturality equations.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "angleforge/algebra.hpp"

namespace angleforge {

template <class K>
struct Rep {
    AlgPtr<K> alg;
    std::vector<std::size_t> dims;  // per idempotent
    std::vector<Mat<K>> act;        // per generator position
    bool explicit_projective = false;
    std::vector<std::size_t> tops;  // summand tops when explicit_projective

    std::size_t total() const {
        std::size_t s = 0;
        for (auto d : dims) s += d;
        return s;
    }
    bool is_zero() const { return total() == 0; }

    /// Matrix of the action of basis element b (dims[src] x dims[tgt]).
    Mat<K> action(std::size_t b) const {
        const auto& be = alg->basis[b];
        if (be.word.empty()) return Mat<K>::identity(dims[be.src]);
        Mat<K> m = act[be.word[0]];
        for (std::size_t i = 1; i < be.word.size(); ++i) m = m * act[be.word[i]];
        return m;
    }

    std::vector<Mat<K>> all_actions() const {
        std::vector<Mat<K>> out;
        out.reserve(alg->dim());
        for (std::size_t b = 0; b < alg->dim(); ++b) out.push_back(action(b));
        return out;
    }

    static Rep zero(AlgPtr<K> a) {
        Rep r;
        r.alg = a;
        r.dims.assign(a->num_idempotents(), 0);
        r.act.assign(a->generators.size(), Mat<K>(0, 0));
        r.explicit_projective = true;
        return r;
    }
};

template <class K>
struct ModMap {
    std::vector<Mat<K>> b;  // per idempotent: dims_src[s] x dims_tgt[s]

    static ModMap zero(const Rep<K>& m, const Rep<K>& n) {
        ModMap f;
        for (std::size_t s = 0; s < m.dims.size(); ++s) f.b.emplace_back(m.dims[s], n.dims[s]);
        return f;
    }
    static ModMap identity(const Rep<K>& m) {
        ModMap f;
        for (auto d : m.dims) f.b.push_back(Mat<K>::identity(d));
        return f;
    }
    bool is_zero() const {
        for (const auto& m : b)
            if (!m.is_zero()) return false;
        return true;
    }
    friend ModMap operator*(const ModMap& f, const ModMap& g) {
        ModMap h;
        for (std::size_t s = 0; s < f.b.size(); ++s) h.b.push_back(f.b[s] * g.b[s]);
        return h;
    }
    ModMap& operator+=(const ModMap& o) {
        for (std::size_t s = 0; s < b.size(); ++s) b[s] += o.b[s];
        return *this;
    }
    ModMap& operator-=(const ModMap& o) {
        for (std::size_t s = 0; s < b.size(); ++s) b[s] -= o.b[s];
        return *this;
    }
    ModMap& operator*=(const K& c) {
        for (auto& m : b) m *= c;
        return *this;
    }
    friend ModMap operator+(ModMap a, const ModMap& o) { return a += o; }
    friend ModMap operator-(ModMap a, const ModMap& o) { return a -= o; }
    friend ModMap operator*(const K& c, ModMap a) { return a *= c; }
    ModMap operator-() const {
        ModMap r = *this;
        for (auto& m : r.b) m = -m;
        return r;
    }
    friend bool operator==(const ModMap& x, const ModMap& y) { return x.b == y.b; }

    /// All entries, vertex by vertex, row-major.
    std::vector<K> flatten() const {
        std::vector<K> v;
        for (const auto& m : b) v.insert(v.end(), m.data().begin(), m.data().end());
        return v;
    }
};

/// Invariant check: every product of a basis element with a generator acts as
/// its expansion in the basis. By induction on word length this covers all
/// relations.
template <class K>
bool is_valid_rep(const Rep<K>& m) {
    const auto& a = *m.alg;
    if (m.dims.size() != a.num_idempotents() || m.act.size() != a.generators.size()) return false;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const auto& be = a.basis[a.generators[g]];
        if (m.act[g].rows() != m.dims[be.src] || m.act[g].cols() != m.dims[be.tgt]) return false;
    }
    auto acts = m.all_actions();
    for (std::size_t b = 0; b < a.dim(); ++b)
        for (std::size_t gi : a.generators) {
            if (a.basis[b].tgt != a.basis[gi].src) continue;
            Mat<K> lhs = acts[b] * acts[gi];
            Mat<K> rhs(m.dims[a.basis[b].src], m.dims[a.basis[gi].tgt]);
            for (const auto& [k, c] : a.product(b, gi)) rhs += acts[k] * c;
            if (lhs != rhs) return false;
        }
    return true;
}

template <class K>
bool is_module_map(const ModMap<K>& f, const Rep<K>& m, const Rep<K>& n) {
    const auto& a = *m.alg;
    if (f.b.size() != a.num_idempotents()) return false;
    for (std::size_t s = 0; s < f.b.size(); ++s)
        if (f.b[s].rows() != m.dims[s] || f.b[s].cols() != n.dims[s]) return false;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const auto& be = a.basis[a.generators[g]];
        if (f.b[be.src] * n.act[g] != m.act[g] * f.b[be.tgt]) return false;
    }
    return true;
}

/// Direct sum of explicit standard projectives P_{t_1} + ... + P_{t_r}.
template <class K>
Rep<K> projective_sum(AlgPtr<K> alg, const std::vector<std::size_t>& tops) {
    const auto& a = *alg;
    std::size_t m = a.num_idempotents();
    Rep<K> r;
    r.alg = alg;
    r.explicit_projective = true;
    r.tops = tops;
    r.dims.assign(m, 0);
    // offset[k][s]: first row of summand k at vertex s
    std::vector<std::vector<std::size_t>> offset(tops.size(), std::vector<std::size_t>(m, 0));
    for (std::size_t k = 0; k < tops.size(); ++k)
        for (std::size_t s = 0; s < m; ++s) {
            offset[k][s] = r.dims[s];
            r.dims[s] += a.block[tops[k]][s].size();
        }
    for (std::size_t gi = 0; gi < a.generators.size(); ++gi) {
        std::size_t g = a.generators[gi];
        std::size_t s = a.basis[g].src, t = a.basis[g].tgt;
        Mat<K> mat(r.dims[s], r.dims[t]);
        for (std::size_t k = 0; k < tops.size(); ++k) {
            const auto& rows = a.block[tops[k]][s];
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (const auto& [c, v] : a.product(rows[i], g))
                    mat(offset[k][s] + i, offset[k][t] + a.position_in_block[c]) += v;
        }
        r.act.push_back(std::move(mat));
    }
    return r;
}

template <class K>
Rep<K> projective(AlgPtr<K> alg, std::size_t t) {
    return projective_sum(alg, {t});
}

/// Row of the generator e_{t_k} of summand k inside the space at t_k.
template <class K>
std::size_t generator_row(const Rep<K>& p, std::size_t k) {
    const auto& a = *p.alg;
    std::size_t t = p.tops[k], row = 0;
    for (std::size_t j = 0; j < k; ++j) row += a.block[p.tops[j]][t].size();
    return row + a.position_in_block[a.idempotents[t]];
}

/// The map from an explicit projective sending generator k to images[k] in N_{t_k}.
template <class K>
ModMap<K> yoneda_map(const Rep<K>& p, const Rep<K>& n, const std::vector<std::vector<K>>& images,
                     const std::vector<Mat<K>>* n_actions = nullptr) {
    const auto& a = *p.alg;
    std::vector<Mat<K>> local;
    if (!n_actions) {
        local = n.all_actions();
        n_actions = &local;
    }
    ModMap<K> f = ModMap<K>::zero(p, n);
    std::vector<std::size_t> off(a.num_idempotents(), 0);
    for (std::size_t k = 0; k < p.tops.size(); ++k) {
        std::size_t t = p.tops[k];
        for (std::size_t s = 0; s < a.num_idempotents(); ++s) {
            const auto& rows = a.block[t][s];
            for (std::size_t i = 0; i < rows.size(); ++i) {
                auto img = vec_times(images[k], (*n_actions)[rows[i]]);
                for (std::size_t j = 0; j < img.size(); ++j) f.b[s](off[s] + i, j) = img[j];
            }
            off[s] += rows.size();
        }
    }
    return f;
}

/// A basis of Hom(M, N) with a fast coordinate map.
template <class K>
struct HomSpace {
    ModMap<K> zero;
    std::vector<ModMap<K>> basis;
    bool yoneda = false;
    std::vector<std::pair<std::size_t, std::size_t>> gen_rows;  // yoneda: (vertex, row) per summand
    LinearCoordinates<K> lc;

    std::size_t dim() const { return basis.size(); }

    std::vector<K> coords(const ModMap<K>& f) const {
        if (yoneda) {
            std::vector<K> c;
            c.reserve(dim());
            for (auto [t, row] : gen_rows) {
                auto r = f.b[t].row(row);
                c.insert(c.end(), r.begin(), r.end());
            }
            return c;
        }
        if (basis.empty()) return {};
        return lc.coords(f.flatten());
    }

    /// Coordinates, or nullopt when f is not in the span (generic spaces only).
    std::optional<std::vector<K>> checked_coords(const ModMap<K>& f) const {
        if (yoneda) return coords(f);
        if (basis.empty()) return f.is_zero() ? std::optional<std::vector<K>>(std::vector<K>{}) : std::nullopt;
        return lc.checked_coords(f.flatten());
    }

    ModMap<K> combine(std::span<const K> c) const {
        ModMap<K> f = zero;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!is_zero(c[i])) f += c[i] * basis[i];
        return f;
    }
};

template <class K>
HomSpace<K> hom_from_projective(const Rep<K>& p, const Rep<K>& n) {
    HomSpace<K> h;
    h.zero = ModMap<K>::zero(p, n);
    h.yoneda = true;
    auto acts = n.all_actions();
    std::vector<std::vector<K>> images(p.tops.size());
    for (std::size_t k = 0; k < p.tops.size(); ++k) {
        h.gen_rows.push_back({p.tops[k], generator_row(p, k)});
        images[k].assign(n.dims[p.tops[k]], K(0));
    }
    for (std::size_t k = 0; k < p.tops.size(); ++k)
        for (std::size_t j = 0; j < n.dims[p.tops[k]]; ++j) {
            images[k][j] = K(1);
            h.basis.push_back(yoneda_map(p, n, images, &acts));
            images[k][j] = K(0);
        }
    return h;
}

/// Solves the naturality equations f_s N_g = M_g f_t for all generators g.
template <class K>
HomSpace<K> hom_generic(const Rep<K>& m, const Rep<K>& n) {
    const auto& a = *m.alg;
    std::size_t nv = a.num_idempotents();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t s = 0; s < nv; ++s) off[s + 1] = off[s] + m.dims[s] * n.dims[s];
    std::size_t unknowns = off[nv];
    HomSpace<K> h;
    h.zero = ModMap<K>::zero(m, n);
    if (unknowns == 0) return h;
    std::size_t neq = 0;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const auto& be = a.basis[a.generators[g]];
        neq += m.dims[be.src] * n.dims[be.tgt];
    }
    Mat<K> eq(neq, unknowns);
    std::size_t row = 0;
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const auto& be = a.basis[a.generators[g]];
        std::size_t s = be.src, t = be.tgt;
        const Mat<K>& ng = n.act[g];
        const Mat<K>& mg = m.act[g];
        // (f_s N_g)(i,j) = sum_k f_s(i,k) N_g(k,j); (M_g f_t)(i,j) = sum_k M_g(i,k) f_t(k,j)
        for (std::size_t i = 0; i < m.dims[s]; ++i)
            for (std::size_t j = 0; j < n.dims[t]; ++j, ++row) {
                for (std::size_t k = 0; k < n.dims[s]; ++k)
                    if (!is_zero(ng(k, j))) eq(row, off[s] + i * n.dims[s] + k) += ng(k, j);
                for (std::size_t k = 0; k < m.dims[t]; ++k)
                    if (!is_zero(mg(i, k))) eq(row, off[t] + k * n.dims[t] + j) -= mg(i, k);
            }
    }
    Mat<K> ker = kernel(eq);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        ModMap<K> f = h.zero;
        for (std::size_t s = 0; s < nv; ++s)
            for (std::size_t i = 0; i < m.dims[s]; ++i)
                for (std::size_t k = 0; k < n.dims[s]; ++k) f.b[s](i, k) = ker(r, off[s] + i * n.dims[s] + k);
        h.basis.push_back(std::move(f));
    }
    if (ker.rows()) h.lc = LinearCoordinates<K>(ker);
    return h;
}

template <class K>
HomSpace<K> hom_modules(const Rep<K>& m, const Rep<K>& n) {
    if (m.explicit_projective) return hom_from_projective(m, n);
    return hom_generic(m, n);
}

/// Direct sum; explicit projectivity is kept when both summands have it.
template <class K>
Rep<K> direct_sum(const Rep<K>& x, const Rep<K>& y) {
    Rep<K> r;
    r.alg = x.alg;
    for (std::size_t s = 0; s < x.dims.size(); ++s) r.dims.push_back(x.dims[s] + y.dims[s]);
    for (std::size_t g = 0; g < x.act.size(); ++g) r.act.push_back(direct_sum(x.act[g], y.act[g]));
    r.explicit_projective = x.explicit_projective && y.explicit_projective;
    if (r.explicit_projective) {
        r.tops = x.tops;
        r.tops.insert(r.tops.end(), y.tops.begin(), y.tops.end());
    }
    return r;
}

/// Block map between direct sums, parts[i][j]: X_i -> Y_j.
template <class K>
ModMap<K> block_map(const std::vector<Rep<K>>& xs, const std::vector<Rep<K>>& ys,
                    const std::vector<std::vector<ModMap<K>>>& parts) {
    std::size_t nv = xs.empty() ? ys.front().dims.size() : xs.front().dims.size();
    ModMap<K> f;
    for (std::size_t s = 0; s < nv; ++s) {
        std::size_t R = 0, C = 0;
        for (const auto& x : xs) R += x.dims[s];
        for (const auto& y : ys) C += y.dims[s];
        Mat<K> m(R, C);
        std::size_t r0 = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::size_t c0 = 0;
            for (std::size_t j = 0; j < ys.size(); ++j) {
                m.set_block(r0, c0, parts[i][j].b[s]);
                c0 += ys[j].dims[s];
            }
            r0 += xs[i].dims[s];
        }
        f.b.push_back(std::move(m));
    }
    return f;
}

/// Submodule spanned at each vertex by the given rows (must be closed under
/// the action), as a representation together with its inclusion.
template <class K>
struct Submodule {
    Rep<K> rep;
    ModMap<K> incl;
};

template <class K>
Submodule<K> submodule(const Rep<K>& m, const std::vector<Mat<K>>& bases) {
    const auto& a = *m.alg;
    Submodule<K> sub;
    sub.rep.alg = m.alg;
    std::vector<LinearCoordinates<K>> lcs;
    for (std::size_t s = 0; s < bases.size(); ++s) {
        sub.rep.dims.push_back(bases[s].rows());
        sub.incl.b.push_back(bases[s].rows() ? bases[s] : Mat<K>(0, m.dims[s]));
        lcs.emplace_back(bases[s].rows() ? bases[s] : Mat<K>(0, m.dims[s]));
    }
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const auto& be = a.basis[a.generators[g]];
        Mat<K> img = sub.incl.b[be.src] * m.act[g];
        Mat<K> mat(img.rows(), sub.rep.dims[be.tgt]);
        for (std::size_t i = 0; i < img.rows(); ++i) {
            auto c = lcs[be.tgt].checked_coords(img.row(i));
            if (!c) throw Error(ErrorKind::Internal, "submodule: subspace not closed under the action");
            for (std::size_t j = 0; j < c->size(); ++j) mat(i, j) = (*c)[j];
        }
        sub.rep.act.push_back(std::move(mat));
    }
    return sub;
}

template <class K>
Submodule<K> kernel_module(const Rep<K>& m, const ModMap<K>& f) {
    std::vector<Mat<K>> bases;
    for (std::size_t s = 0; s < m.dims.size(); ++s) bases.push_back(left_kernel(f.b[s]));
    for (std::size_t s = 0; s < m.dims.size(); ++s)
        if (bases[s].rows() == 0) bases[s] = Mat<K>(0, m.dims[s]);
    return submodule(m, bases);
}

/// Quotient N / S for a submodule given by per-vertex rows: the quotient basis
/// is a deterministic complement, with the projection map.
template <class K>
struct Quotient {
    Rep<K> rep;
    ModMap<K> proj;     // N -> N/S
    ModMap<K> section;  // linear (not module) section N/S -> N
};

template <class K>
Quotient<K> quotient_module(const Rep<K>& n, const std::vector<Mat<K>>& sub) {
    const auto& a = *n.alg;
    Quotient<K> q;
    q.rep.alg = n.alg;
    for (std::size_t s = 0; s < n.dims.size(); ++s) {
        Mat<K> comp = complement_rows(Mat<K>::identity(n.dims[s]), sub[s].rows() ? sub[s] : Mat<K>(0, n.dims[s]));
        if (comp.rows() == 0) comp = Mat<K>(0, n.dims[s]);
        q.rep.dims.push_back(comp.rows());
        // coordinates of e_i in basis [comp; sub]; projection keeps the comp part
        Mat<K> full = vstack(comp, sub[s].rows() ? row_space(sub[s]) : Mat<K>(0, n.dims[s]));
        Mat<K> proj(n.dims[s], comp.rows());
        if (n.dims[s]) {
            Mat<K> inv = rref(full).transform;  // full is square and invertible
            // v = c * full  =>  c = v * full^{-1}; rref transform T satisfies T * full = I
            for (std::size_t i = 0; i < n.dims[s]; ++i)
                for (std::size_t j = 0; j < comp.rows(); ++j) proj(i, j) = inv(i, j);
        }
        q.proj.b.push_back(std::move(proj));
        q.section.b.push_back(comp);
    }
    for (std::size_t g = 0; g < a.generators.size(); ++g) {
        const auto& be = a.basis[a.generators[g]];
        q.rep.act.push_back(q.section.b[be.src] * n.act[g] * q.proj.b[be.tgt]);
    }
    return q;
}

/// Basis indices spanning the radical when it is spanned by basis vectors,
/// empty otherwise.
template <class K>
std::vector<std::size_t> radical_is_spanned_by_basis(const AlgebraData<K>& a) {
    std::vector<std::size_t> idx;
    for (std::size_t r = 0; r < a.radical.rows(); ++r) {
        std::size_t nz = 0, where = 0;
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!is_zero(a.radical(r, j))) {
                ++nz;
                where = j;
            }
        if (nz != 1) return {};
        idx.push_back(where);
    }
    return idx;
}

/// rad(M) at each vertex: the span of M(r) over homogeneous radical elements r.
template <class K>
std::vector<Mat<K>> radical_of_module(const Rep<K>& m) {
    const auto& a = *m.alg;
    std::size_t nv = a.num_idempotents();
    std::vector<Mat<K>> acc(nv);
    for (std::size_t s = 0; s < nv; ++s) acc[s] = Mat<K>(0, m.dims[s]);
    auto add_action = [&](std::size_t t, const Mat<K>& mat) {
        for (std::size_t i = 0; i < mat.rows(); ++i)
            if (!all_zero<K>(mat.row(i))) acc[t].append_row(mat.row(i));
    };
    auto basis_idx = radical_is_spanned_by_basis(a);
    if (!basis_idx.empty() || a.radical.rows() == 0) {
        for (std::size_t b : basis_idx) {
            const auto& be = a.basis[b];
            if (m.dims[be.src] == 0 || m.dims[be.tgt] == 0) continue;
            add_action(be.tgt, m.action(b));
        }
    } else {
        auto acts = m.all_actions();
        for (std::size_t r = 0; r < a.radical.rows(); ++r)
            for (std::size_t s = 0; s < nv; ++s)
                for (std::size_t t = 0; t < nv; ++t) {
                    if (m.dims[s] == 0 || m.dims[t] == 0) continue;
                    Mat<K> x(m.dims[s], m.dims[t]);
                    bool any = false;
                    for (std::size_t b : a.block[s][t])
                        if (!is_zero(a.radical(r, b))) {
                            x += acts[b] * a.radical(r, b);
                            any = true;
                        }
                    if (any) add_action(t, x);
                }
    }
    for (std::size_t s = 0; s < nv; ++s) acc[s] = acc[s].rows() ? row_space(acc[s]) : Mat<K>(0, m.dims[s]);
    return acc;
}

/// Projective cover: generators chosen as unit vectors completing rad(M) plus
/// an optional extra subspace (`known`), vertex by vertex.
template <class K>
struct Cover {
    Rep<K> proj;
    ModMap<K> map;  // proj -> M
};

template <class K>
Cover<K> projective_cover(const Rep<K>& m, const std::vector<Mat<K>>* known = nullptr) {
    const auto& a = *m.alg;
    auto rad = radical_of_module(m);
    std::vector<std::size_t> tops;
    std::vector<std::vector<K>> images;
    for (std::size_t s = 0; s < a.num_idempotents(); ++s) {
        if (m.dims[s] == 0) continue;
        Mat<K> sub = rad[s];
        if (known && (*known)[s].rows()) sub = vstack(sub, (*known)[s]);
        Mat<K> gens = complement_rows(Mat<K>::identity(m.dims[s]), sub);
        for (std::size_t i = 0; i < gens.rows(); ++i) {
            tops.push_back(s);
            images.push_back(gens.row_copy(i));
        }
    }
    Cover<K> c;
    c.proj = projective_sum(m.alg, tops);
    c.map = yoneda_map(c.proj, m, images);
    return c;
}

/// Makes a projective module explicit: returns the standard sum and an
/// isomorphism onto m. Throws if m is not projective.
template <class K>
Cover<K> make_explicit_projective(const Rep<K>& m) {
    auto c = projective_cover(m);
    for (std::size_t s = 0; s < m.dims.size(); ++s)
        if (c.proj.dims[s] != m.dims[s] || rank(c.map.b[s]) != m.dims[s])
            throw Error(ErrorKind::Internal, "make_explicit_projective: module is not projective");
    return c;
}

template <class K>
ModMap<K> inverse_iso(const ModMap<K>& f) {
    ModMap<K> g;
    for (const auto& m : f.b) {
        if (m.rows() == 0) {
            g.b.emplace_back(0, 0);
            continue;
        }
        auto r = rref(m);
        ensure(r.rank == m.rows() && m.rows() == m.cols(), "inverse_iso: not invertible");
        g.b.push_back(r.transform);
    }
    return g;
}

/// Minimal projective resolution ... -> P_1 -> P_0 -> M as a list of covers:
/// terms[k] is P_k, diffs[k] : P_{k+1} -> P_k, augmentation : P_0 -> M.
template <class K>
struct Resolution {
    std::vector<Rep<K>> terms;
    std::vector<ModMap<K>> diffs;
    ModMap<K> augmentation;
};

template <class K>
Resolution<K> min_proj_resolution(const Rep<K>& m, std::size_t bound = 32) {
    Resolution<K> res;
    if (m.is_zero()) return res;
    auto c = projective_cover(m);
    res.terms.push_back(c.proj);
    res.augmentation = c.map;
    ModMap<K> prev = c.map;
    Rep<K> prev_term = c.proj;
    while (true) {
        auto ker = kernel_module(prev_term, prev);
        if (ker.rep.is_zero()) break;
        if (res.terms.size() > bound)
            throw Error(ErrorKind::ResolutionTooLong, "minimal projective resolution exceeds bound " + std::to_string(bound));
        auto kc = projective_cover(ker.rep);
        ModMap<K> d = kc.map * ker.incl;
        res.terms.push_back(kc.proj);
        res.diffs.push_back(d);
        prev = d;
        prev_term = kc.proj;
    }
    return res;
}

/// Simple module at vertex t.
template <class K>
Rep<K> simple_module(AlgPtr<K> alg, std::size_t t) {
    Rep<K> r = Rep<K>::zero(alg);
    r.explicit_projective = false;
    r.dims[t] = 1;
    for (std::size_t g = 0; g < alg->generators.size(); ++g) {
        const auto& be = alg->basis[alg->generators[g]];
        r.act[g] = Mat<K>(r.dims[be.src], r.dims[be.tgt]);
    }
    return r;
}

}  // namespace angleforge
